//! Deterministic verification suites behind `verify --suite <name>`.
//!
//! Every suite is a pure function of its seed; reports carry the number of
//! individual checks performed and a (capped) list of counterexamples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::borel::{Block, BorelDescriptor};
use crate::branching::{branch_xsl, limit_coherence, verify_branch};
use crate::classify::{hw_test_xsl, hw_test_xsp, iso_xsl, sim_sl, sim_sp};
use crate::degrees::{
    interlacings, is_dominant, verify_lem0, verify_lem1, verify_lem2, verify_lem3, verify_lem4,
    verify_lemma_deg, weyl_dim, GtEngine,
};
use crate::error::{Error, Result};
use crate::limits::{
    annihilator_label, approx_equiv, classify_sl, hw_test_limit, iso_limit, mu_of, seq_from_set,
    sim_sl_seq, sim_sp_seq, sinf_equiv, spinor_equiv_b, spinor_equiv_d, support_oracle, Algebra,
    IntSeq, LimitHw, LimitKind, LimitModuleDescriptor, Sided,
};
use crate::realization::{
    gl_bracket_check, singular_monomials, sp_bracket_check, BasisStatus, CharacterModel, Family,
    Monomial, XModule,
};
use crate::rootdata::{positive_roots, roots, LieType, Root};
use crate::scalar::ExtScalar;
use crate::setdesc::SetDescriptor;
use crate::weight::{half, Partition, Weight, WeightSeq};

pub const SUITES: &[&str] = &[
    "bracket",
    "support",
    "hw",
    "gt",
    "degree-lemmas",
    "branching",
    "limit-coherence",
    "paper-examples",
    "annihilator",
    "properties",
];

const FAILURE_CAP: usize = 20;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Ctx {
    checked: u64,
    failures: Vec<String>,
}

impl Ctx {
    fn new() -> Self {
        Ctx { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < FAILURE_CAP {
            self.failures.push(msg());
        }
    }

    fn finish(self, name: &str, seed: u64) -> SuiteReport {
        SuiteReport {
            name: name.to_string(),
            seed,
            checked: self.checked,
            failures: self.failures,
        }
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "bracket" => suite_bracket(seed),
        "support" => suite_support(seed),
        "hw" => suite_hw(seed),
        "gt" => suite_gt(seed),
        "degree-lemmas" => suite_degree_lemmas(seed),
        "branching" => suite_branching(seed),
        "limit-coherence" => suite_limit_coherence(seed),
        "paper-examples" => suite_paper_examples(seed),
        "annihilator" => suite_annihilator(seed),
        "properties" => suite_properties(seed),
        other => Err(Error::NotSupported(format!("unknown suite {:?}", other))),
    }
}

pub fn run_all(seed: u64) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, seed)).collect()
}

/// Worker count for the heavier suites, capped by LIMWEIGHT_THREADS.
pub fn thread_count() -> usize {
    std::env::var("LIMWEIGHT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Chunked map over `items` with deterministic output order.
fn par_failures<T, F>(items: &[T], f: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    let workers = thread_count().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().filter_map(|t| f(t)).collect();
    }
    let chunk = (items.len() + workers - 1) / workers;
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(|| c.iter().filter_map(|t| f(t)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    })
}

// ---- sampling helpers -----------------------------------------------------

fn rng_for(seed: u64, lane: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(lane))
}

fn int_box(rank: usize, radius: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![-radius; rank];
    loop {
        out.push(Monomial::new(Weight::from_ints(&e)));
        let mut idx = 0;
        loop {
            if idx == rank {
                return out;
            }
            e[idx] += 1;
            if e[idx] <= radius {
                break;
            }
            e[idx] = -radius;
            idx += 1;
        }
    }
}

fn rand_scalar(rng: &mut ChaCha8Rng, generic_ok: bool) -> ExtScalar {
    match rng.gen_range(0..8u32) {
        0..=4 => ExtScalar::int(rng.gen_range(-3..=3)),
        // the sp realization shifts exponents by 1/2, which a generic entry
        // cannot absorb
        5 | 6 if generic_ok => ExtScalar::generic_shift(0, rng.gen_range(-1..=1)),
        5 | 6 => ExtScalar::int(rng.gen_range(-3..=3)),
        _ => ExtScalar::ratio(2 * rng.gen_range(-1..=1i64) + 1, 2),
    }
}

fn rand_mu(rng: &mut ChaCha8Rng, rank: usize, generic_ok: bool) -> Weight {
    Weight::new((0..rank).map(|_| rand_scalar(rng, generic_ok)).collect())
}

fn int_shift_box(mu: &Weight, radius: i64) -> Vec<Weight> {
    let rank = mu.rank();
    let mut out = Vec::new();
    let mut d = vec![-radius; rank];
    loop {
        let mut w = mu.clone();
        for (i, k) in d.iter().enumerate() {
            w.set_entry(i as u64 + 1, w.entry(i as u64 + 1).add_int(*k));
        }
        out.push(w);
        let mut idx = 0;
        loop {
            if idx == rank {
                return out;
            }
            d[idx] += 1;
            if d[idx] <= radius {
                break;
            }
            d[idx] = -radius;
            idx += 1;
        }
    }
}

fn permutations(n: u64) -> Vec<Vec<u64>> {
    let mut items: Vec<u64> = (1..=n).collect();
    let mut out = Vec::new();
    heap_permute(&mut items, n as usize, &mut out);
    out
}

fn heap_permute(items: &mut Vec<u64>, k: usize, out: &mut Vec<Vec<u64>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// A finite order prefix followed by the dense rest of Z_{>0}.
fn explicit_order(perm: &[u64], sign: Option<SetDescriptor>) -> Result<BorelDescriptor> {
    let from = perm.len() as u64 + 1;
    BorelDescriptor::new(
        vec![
            Block::Explicit(perm.to_vec()),
            Block::Dense(SetDescriptor::from_onwards(from)),
        ],
        sign,
    )
}

// ---- suite: bracket --------------------------------------------------------

fn suite_bracket(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    // gl(rank), exhaustive boxes for the rank <= 4 truncations
    for (rank, radius) in [(2u64, 6i64), (3, 2), (4, 1)] {
        let monos = int_box(rank as usize, radius);
        let mut pairs = Vec::new();
        for i in 1..=rank {
            for j in 1..=rank {
                if i == j {
                    continue;
                }
                for k in 1..=rank {
                    for l in 1..=rank {
                        if k != l {
                            pairs.push(((i, j), (k, l)));
                        }
                    }
                }
            }
        }
        let fails = par_failures(&monos, |m| {
            pairs
                .iter()
                .find(|(ab, cd)| !gl_bracket_check(*ab, *cd, m))
                .map(|(ab, cd)| format!("gl{} [{:?},{:?}] at {}", rank, ab, cd, m.exponent))
        });
        ctx.checked += (monos.len() * pairs.len()) as u64;
        for f in fails {
            if ctx.failures.len() < FAILURE_CAP {
                ctx.failures.push(f);
            }
        }
    }
    // gl(5): randomized monomials and generator pairs
    let mut rng = rng_for(seed, 1);
    for _ in 0..400 {
        let m = Monomial::new(Weight::from_ints(
            &(0..5).map(|_| rng.gen_range(-4..=4i64)).collect::<Vec<_>>(),
        ));
        let pick = |rng: &mut ChaCha8Rng| loop {
            let i = rng.gen_range(1..=5u64);
            let j = rng.gen_range(1..=5u64);
            if i != j {
                return (i, j);
            }
        };
        let ab = pick(&mut rng);
        let cd = pick(&mut rng);
        ctx.check(gl_bracket_check(ab, cd, &m), || {
            format!("gl5 [{:?},{:?}] at {}", ab, cd, m.exponent)
        });
    }
    // sp(2n), exhaustive for n <= 3
    for (n, radius) in [(1u64, 4i64), (2, 2), (3, 2)] {
        let rts: Vec<Root> = roots(LieType::C(n as u32), n as u32).into_iter().collect();
        let monos = int_box(n as usize, radius);
        let fails = par_failures(&monos, |m| {
            for x in &rts {
                for y in &rts {
                    if !sp_bracket_check(x, y, n, m) {
                        return Some(format!("sp{} [{},{}] at {}", n, x, y, m.exponent));
                    }
                }
            }
            None
        });
        ctx.checked += (monos.len() * rts.len() * rts.len()) as u64;
        for f in fails {
            if ctx.failures.len() < FAILURE_CAP {
                ctx.failures.push(f);
            }
        }
    }
    // sp(8): randomized
    let rts4: Vec<Root> = roots(LieType::C(4), 4).into_iter().collect();
    for _ in 0..200 {
        let m = Monomial::new(Weight::from_ints(
            &(0..4).map(|_| rng.gen_range(-3..=3i64)).collect::<Vec<_>>(),
        ));
        let x = &rts4[rng.gen_range(0..rts4.len())];
        let y = &rts4[rng.gen_range(0..rts4.len())];
        ctx.check(sp_bracket_check(x, y, 4, &m), || {
            format!("sp4 [{},{}] at {}", x, y, m.exponent)
        });
    }
    Ok(ctx.finish("bracket", seed))
}

// ---- suite: support ---------------------------------------------------------

fn suite_support(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let mut rng = rng_for(seed, 2);
    for family in [Family::Sl, Family::Sp] {
        for rank in 2..=5usize {
            for _ in 0..25 {
                let mu = rand_mu(&mut rng, rank, family == Family::Sl);
                let module = match family {
                    Family::Sl => XModule::sl(mu.clone()),
                    Family::Sp => XModule::sp(mu.clone()),
                };
                // multiplicity-freeness: distinct weights across a window
                let window = module.basis_box(2);
                let weights: std::collections::BTreeSet<Weight> =
                    window.iter().map(|m| module.weight_of(m)).collect();
                ctx.check(weights.len() == window.len(), || {
                    format!("{:?} X({}) has a repeated weight in the radius-2 box", family, mu)
                });
                // support = the ~ class of mu, checked on integer shifts
                for lam in int_shift_box(&mu, 2) {
                    let in_basis =
                        module.basis_status(&Monomial::new(lam.clone())) == BasisStatus::InBasis;
                    let equiv = match family {
                        Family::Sl => sim_sl(&lam, &mu),
                        Family::Sp => sim_sp(&lam, &mu),
                    };
                    ctx.check(in_basis == equiv, || {
                        format!("{:?} support mismatch at {} for X({})", family, lam, mu)
                    });
                }
            }
        }
    }
    Ok(ctx.finish("support", seed))
}

// ---- suite: hw ---------------------------------------------------------------

fn hw_agrees_sl(module: &XModule, b: &BorelDescriptor, mu: &Weight) -> Result<Option<String>> {
    match hw_test_xsl(mu, b)? {
        Some(cert) => {
            let m = Monomial::new(cert.hw_weight().clone());
            if module.basis_status(&m) != BasisStatus::InBasis {
                return Ok(Some(format!("certificate {} not in basis of X({})", m.exponent, mu)));
            }
            for r in positive_roots(b, module.lie_type(), module.vars() as u32)? {
                if !module.act(&r, &m)?.is_empty() {
                    return Ok(Some(format!(
                        "certificate {} of X({}) not killed by {}",
                        m.exponent, mu, r
                    )));
                }
            }
            Ok(None)
        }
        None => {
            let sing = singular_monomials(module, b, &module.basis_box(2))?;
            if sing.is_empty() {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "X({}) has singular monomial {} but no certificate",
                    mu, sing[0].exponent
                )))
            }
        }
    }
}

fn hw_agrees_sp(module: &XModule, b: &BorelDescriptor, mu: &Weight) -> Result<Option<String>> {
    let halves = Weight::new(vec![half(); mu.rank()]);
    match hw_test_xsp(mu, b)? {
        Some(cert) => {
            let exp = cert.hw_weight().checked_sub(&halves)?;
            let m = Monomial::new(exp);
            if module.basis_status(&m) != BasisStatus::InBasis {
                return Ok(Some(format!("certificate {} not in basis of X({})", m.exponent, mu)));
            }
            if module.weight_of(&m) != *cert.hw_weight() {
                return Ok(Some(format!("certificate weight mismatch for X({})", mu)));
            }
            for r in positive_roots(b, module.lie_type(), module.vars() as u32)? {
                if !module.act(&r, &m)?.is_empty() {
                    return Ok(Some(format!(
                        "certificate {} of X_sp({}) not killed by {}",
                        m.exponent, mu, r
                    )));
                }
            }
            Ok(None)
        }
        None => {
            let sing = singular_monomials(module, b, &module.basis_box(2))?;
            if sing.is_empty() {
                Ok(None)
            } else {
                Ok(Some(format!(
                    "X_sp({}) has singular monomial {} but no certificate",
                    mu, sing[0].exponent
                )))
            }
        }
    }
}

fn suite_hw(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    // sl(n+1), all (n+1)! finite orders, n <= 3
    for rank in 2..=4u64 {
        let mut rng = rng_for(seed, 10 + rank);
        let mus: Vec<Weight> = (0..50).map(|_| rand_mu(&mut rng, rank as usize, true)).collect();
        for perm in permutations(rank) {
            let b = explicit_order(&perm, None)?;
            for mu in &mus {
                let module = XModule::sl(mu.clone());
                let fail = hw_agrees_sl(&module, &b, mu)?;
                ctx.check(fail.is_none(), || fail.unwrap());
            }
        }
    }
    // sp(2n), all orders and sign maps, n = 2, 3
    for n in 2..=3u64 {
        let mut rng = rng_for(seed, 20 + n);
        let mus: Vec<Weight> = (0..50).map(|_| rand_mu(&mut rng, n as usize, false)).collect();
        for perm in permutations(n) {
            for bits in 0..(1u64 << n) {
                let plus = SetDescriptor::from_finite((1..=n).filter(|i| bits >> (i - 1) & 1 == 1));
                // sign off the window is irrelevant here; extend by the odds
                let sign = plus.union(&SetDescriptor::odds().minus(
                    &SetDescriptor::from_finite(1..=n),
                ));
                let b = explicit_order(&perm, Some(sign))?;
                for mu in &mus {
                    let module = XModule::sp(mu.clone());
                    let fail = hw_agrees_sp(&module, &b, mu)?;
                    ctx.check(fail.is_none(), || fail.unwrap());
                }
            }
        }
    }
    Ok(ctx.finish("hw", seed))
}

// ---- suite: gt ----------------------------------------------------------------

fn dominant_rows(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut row = vec![0i64; len];
    fn go(row: &mut Vec<i64>, i: usize, hi: i64, out: &mut Vec<Vec<i64>>) {
        if i == row.len() {
            out.push(row.clone());
            return;
        }
        for v in 0..=hi {
            row[i] = v;
            go(row, i + 1, v, out);
        }
    }
    go(&mut row, 0, max, &mut out);
    out
}

fn suite_gt(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let mut engine = GtEngine::new();
    for n in 1..=5usize {
        for lam in dominant_rows(n, 4) {
            let d = engine.dim(&lam)?;
            let w = weyl_dim(&lam)?;
            ctx.check(d == w, || format!("dim {:?}: gt {} vs weyl {}", lam, d, w));
            let total: u128 = engine.weights(&lam)?.values().sum();
            ctx.check(total == d, || {
                format!("weight multiplicities of {:?} sum to {} != {}", lam, total, d)
            });
        }
    }
    Ok(ctx.finish("gt", seed))
}

// ---- suite: degree-lemmas --------------------------------------------------------

fn suite_degree_lemmas(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let mut engine = GtEngine::new();
    for x in 2..=6i64 {
        for l in 2..=6usize {
            let r = verify_lem1(&mut engine, x, l)?;
            ctx.check(r.holds, || format!("lem1({},{}): {} < {}", x, l, r.lhs, r.rhs));
        }
    }
    for x in 2..=4i64 {
        for k in 1..=5usize {
            for l in 1..=5usize {
                let r = verify_lem2(&mut engine, x, k, l)?;
                ctx.check(r.holds, || format!("lem2({},{},{}): {} < {}", x, k, l, r.lhs, r.rhs));
            }
        }
    }
    for len in 2..=6usize {
        for lam in dominant_rows(len, 4) {
            let spread = lam[0] - lam[len - 1];
            if !(2..=4).contains(&spread) {
                continue;
            }
            let r = verify_lem3(&mut engine, &lam)?;
            ctx.check(r.holds, || format!("lem3({:?}): {} < {}", lam, r.lhs, r.rhs));
        }
    }
    for klen in 2..=3usize {
        for head in dominant_rows(klen, 5) {
            if head[0] < 2 || head[klen - 1] < 1 {
                continue;
            }
            for l in 1..=5usize {
                let r = verify_lem4(&mut engine, &head, l)?;
                ctx.check(r.holds, || format!("lem4({:?},{}): {} < {}", head, l, r.lhs, r.rhs));
            }
        }
    }
    // randomized triples for the deviation bound
    let mut rng = rng_for(seed, 3);
    let mut done = 0;
    while done < 100 {
        let len = rng.gen_range(3..=5usize);
        let mut lam: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=4i64)).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let inter = interlacings(&lam);
        let mut by_sum: std::collections::BTreeMap<i64, Vec<&Vec<i64>>> = Default::default();
        for t in &inter {
            by_sum.entry(t.iter().sum()).or_default().push(t);
        }
        let classes: Vec<_> = by_sum.values().filter(|v| v.len() >= 2).collect();
        if classes.is_empty() {
            continue;
        }
        let class = classes[rng.gen_range(0..classes.len())];
        let a = rng.gen_range(0..class.len());
        let b = loop {
            let b = rng.gen_range(0..class.len());
            if b != a {
                break b;
            }
        };
        let r = verify_lem0(&mut engine, &lam, class[a], class[b])?;
        ctx.check(r.holds, || {
            format!("lem0({:?};{:?},{:?}): {} < {}", lam, class[a], class[b], r.lhs, r.rhs)
        });
        done += 1;
    }
    // window check of the character identity behind the main degree lemma
    let lam = vec![0, 3, 2, 1, 0];
    let mut window = Vec::new();
    for head in dominant_rows(4, 3) {
        let spill: i64 = lam.iter().sum::<i64>() - head.iter().sum::<i64>();
        let mut nu = head.clone();
        nu.insert(0, spill);
        window.push(nu);
    }
    ctx.check(!is_dominant(&lam), || "lemma-deg fixture is dominant".into());
    let r = verify_lemma_deg(&lam, &window)?;
    ctx.check(r.window_identity_holds && r.checked_weights > 0, || {
        format!("lemma-deg identity fails on {:?}", lam)
    });
    Ok(ctx.finish("degree-lemmas", seed))
}

// ---- suite: branching -------------------------------------------------------------

fn suite_branching(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let mut rng = rng_for(seed, 4);
    for family in [Family::Sl, Family::Sp] {
        for rank in 3..=5usize {
            let radius = match (family, rank) {
                (Family::Sl, 3) => 7,
                (Family::Sl, 4) => 3,
                (Family::Sl, _) => 2,
                (Family::Sp, 3) => 4,
                (Family::Sp, 4) => 2,
                (Family::Sp, _) => 1,
            };
            for _ in 0..34 {
                let mut mu = Weight::from_ints(
                    &(0..rank).map(|_| rng.gen_range(-2..=2i64)).collect::<Vec<_>>(),
                );
                if family == Family::Sl && rng.gen_bool(0.25) {
                    let i = rng.gen_range(1..=rank as u64);
                    mu.set_entry(i, ExtScalar::generic_shift(0, rng.gen_range(-1..=1)));
                }
                let module = match family {
                    Family::Sl => XModule::sl(mu.clone()),
                    Family::Sp => XModule::sp(mu.clone()),
                };
                let report = verify_branch(&module, radius)?;
                ctx.check(report.ok(), || {
                    format!(
                        "{:?} X({}): {} window mismatches, first {}",
                        family,
                        mu,
                        report.mismatches.len(),
                        report.mismatches[0]
                    )
                });
            }
        }
    }
    // X(-1,1,0) restricted to gl(2): X(-1,1) plus the charged X(i,0), i < 0
    let summands = branch_xsl(&Weight::from_ints(&[-1, 1, 0]), 12)?;
    let has = |pattern: &[i64], charge: i64| {
        summands.iter().any(|s| {
            sim_sl(&s.module.mu, &Weight::from_ints(pattern)) && s.charge == ExtScalar::int(charge)
        })
    };
    ctx.check(has(&[-1, 1], 0), || "missing summand X(-1,1)".into());
    for i in -6..0i64 {
        ctx.check(has(&[i, 0], -i), || format!("missing summand X({},0)", i));
    }
    for i in 0..4i64 {
        ctx.check(!has(&[i, 0], -i), || format!("spurious summand X({},0)", i));
    }
    Ok(ctx.finish("branching", seed))
}

// ---- suite: limit-coherence ----------------------------------------------------------

fn rand_seq(rng: &mut ChaCha8Rng, generic_ok: bool) -> WeightSeq {
    let plen = rng.gen_range(0..=3usize);
    let prefix: Vec<ExtScalar> = (0..plen)
        .map(|_| {
            if generic_ok && rng.gen_bool(0.2) {
                ExtScalar::generic_shift(0, rng.gen_range(-1..=1))
            } else {
                ExtScalar::int(rng.gen_range(-2..=2))
            }
        })
        .collect();
    let tlen = rng.gen_range(1..=2usize);
    let tail: Vec<ExtScalar> = (0..tlen).map(|_| ExtScalar::int(rng.gen_range(-1..=1))).collect();
    WeightSeq::new(prefix, tail)
}

fn suite_limit_coherence(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let mut rng = rng_for(seed, 5);
    for family in [Family::Sl, Family::Sp] {
        for _ in 0..50 {
            let mu = rand_seq(&mut rng, family == Family::Sl);
            for n in 2..=6usize {
                let ok = limit_coherence(&mu, n, family)?;
                ctx.check(ok, || {
                    format!("{:?} truncation {} -> {} of {} is not coherent", family, n + 1, n, mu)
                });
            }
        }
    }
    Ok(ctx.finish("limit-coherence", seed))
}

// ---- suite: paper-examples -------------------------------------------------------------

fn hw_line(hw: &LimitHw) -> String {
    match hw {
        LimitHw::HighestWeight { weight, sided } => {
            let s = match sided {
                Some(Sided::OneSided) => "one-sided",
                Some(Sided::TwoSided) => "two-sided",
                None => "unsided",
            };
            format!("HighestWeight({}, {})", s, weight)
        }
        LimitHw::PseudoHighestWeight => "PseudoHighestWeight".into(),
        LimitHw::Neither => "Neither".into(),
    }
}

pub fn paper_example_lines() -> Result<Vec<String>> {
    let mut lines = Vec::new();
    // classification of a generic-entry sl weight sequence
    let mu = crate::parse::parse_weight_seq("[1,2,g0; tail=-1]")?;
    let d = classify_sl(&mu)?;
    lines.push(format!(
        "classify {} -> kind={} annihilator={}",
        mu,
        d,
        annihilator_label(&d)?
    ));
    // one-sided highest weight against 1 < 2 < 3 < dense rest
    let b3 = explicit_order(&[1, 2, 3], None)?;
    let mu1 = WeightSeq::new(
        vec![ExtScalar::int(-1), ExtScalar::int(-1), ExtScalar::generic(0)],
        vec![ExtScalar::zero()],
    );
    let d1 = LimitModuleDescriptor::sl(LimitKind::XSlInf(mu1.clone()))?;
    lines.push(format!("hw {} | {} -> {}", mu1, b3, hw_line(&hw_test_limit(&d1, &b3)?)));
    // two-sided highest weight: eps(odds) against 1 < 3 < 5 < ... < 6 < 4 < 2
    let b2s = BorelDescriptor::new(
        vec![
            Block::Ascending(SetDescriptor::odds()),
            Block::Descending(SetDescriptor::evens()),
        ],
        None,
    )?;
    let mu2 = seq_from_set(&SetDescriptor::odds(), ExtScalar::int(-1), ExtScalar::zero());
    let d2 = LimitModuleDescriptor::sl(LimitKind::XSlInf(mu2.clone()))?;
    lines.push(format!("hw {} | {} -> {}", mu2, b2s, hw_line(&hw_test_limit(&d2, &b2s)?)));
    lines.push(format!(
        "hw {} | natural -> {}",
        mu2,
        hw_line(&hw_test_limit(&d2, &BorelDescriptor::natural())?)
    ));
    // the generic-entry module is pseudo highest weight but not highest weight
    let mu3 = WeightSeq::new(
        vec![
            ExtScalar::int(1),
            ExtScalar::int(2),
            ExtScalar::generic(0),
            ExtScalar::int(-1),
            ExtScalar::int(-2),
            ExtScalar::int(-3),
        ],
        vec![ExtScalar::int(-2)],
    );
    let d3 = LimitModuleDescriptor::sl(LimitKind::XSlInf(mu3.clone()))?;
    // an order under which Int^- = {4,5,...} is a down-set
    let brev = BorelDescriptor::new(
        vec![
            Block::Dense(SetDescriptor::from_onwards(4)),
            Block::Explicit(vec![3, 2, 1]),
        ],
        None,
    )?;
    lines.push(format!("hw {} | {} -> {}", mu3, brev, hw_line(&hw_test_limit(&d3, &brev)?)));
    // sp: X(1^inf) against sigma == -1 is pseudo, X(0^inf) is highest weight
    let bminus = BorelDescriptor::natural_signed(SetDescriptor::empty());
    let dsp1 = LimitModuleDescriptor::new(
        Algebra::Sp,
        LimitKind::XSpInf(WeightSeq::constant(ExtScalar::int(1))),
    )?;
    lines.push(format!(
        "hw sp 1^inf | sigma=-1 -> {}",
        hw_line(&hw_test_limit(&dsp1, &bminus)?)
    ));
    let dsp0 = LimitModuleDescriptor::new(Algebra::Sp, LimitKind::XSpInf(WeightSeq::zero()))?;
    lines.push(format!(
        "hw sp 0^inf | sigma=-1 -> {}",
        hw_line(&hw_test_limit(&dsp0, &bminus)?)
    ));
    // rank 2: X_sp(0,0) is the even oscillator half, highest weight (1/2)^2
    let bdesc = BorelDescriptor::bn_descending(2);
    let cert = hw_test_xsp(&Weight::from_ints(&[0, 0]), &bdesc)?
        .ok_or_else(|| Error::NotSupported("expected a rank-2 certificate".into()))?;
    lines.push(format!("hw sp rank 2 X(0,0) -> {}", cert.hw_weight()));
    let module = XModule::sp(Weight::from_ints(&[0, 0]));
    let model = CharacterModel::ShaleWeilEven(2);
    let mut agree = true;
    for m in module.basis_box(3) {
        let w = module.weight_of(&m);
        if model.multiplicity(&w)? != 1 {
            agree = false;
        }
    }
    lines.push(format!("X_sp(0,0) window matches even oscillator character: {}", agree));
    // rank 1 comparisons are refused: the sl(2) ~ sp(2) coincidence is out of scope
    let refusal = match iso_xsl(&Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0, -1]), true) {
        Err(Error::RankTooSmall(_)) => "refused: rank too small".to_string(),
        other => format!("unexpected: {:?}", other),
    };
    lines.push(format!("iso sl rank 2 as sl -> {}", refusal));
    Ok(lines)
}

const PAPER_EXPECTED: &[&str] = &[
    "classify [1,2,g0; tail=-1] -> kind=XSl[1,2,g0; tail=-1] annihilator=I(1,0;[];[])",
    "hw [-1,-1,g0; tail=0] | blocks=[1,2,3; dense{; period=1, pattern=1, start=4}] -> HighestWeight(one-sided, [-1,-1,g0; tail=0])",
    "hw [; tail=(-1,0)] | blocks=[asc{; period=2, pattern=10, start=1}; desc{; period=2, pattern=01, start=1}] -> HighestWeight(two-sided, [; tail=(-1,0)])",
    "hw [; tail=(-1,0)] | natural -> Neither",
    "hw [1,2,g0,-1,-2,-3; tail=-2] | blocks=[dense{; period=1, pattern=1, start=4}; 3,2,1] -> PseudoHighestWeight",
    "hw sp 1^inf | sigma=-1 -> PseudoHighestWeight",
    "hw sp 0^inf | sigma=-1 -> HighestWeight(unsided, [; tail=1/2])",
    "hw sp rank 2 X(0,0) -> (1/2,1/2)",
    "X_sp(0,0) window matches even oscillator character: true",
    "iso sl rank 2 as sl -> refused: rank too small",
];

fn suite_paper_examples(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let lines = paper_example_lines()?;
    ctx.check(lines.len() == PAPER_EXPECTED.len(), || {
        format!("expected {} lines, got {}", PAPER_EXPECTED.len(), lines.len())
    });
    for (got, want) in lines.iter().zip(PAPER_EXPECTED) {
        ctx.check(got == want, || format!("got {:?}, want {:?}", got, want));
    }
    Ok(ctx.finish("paper-examples", seed))
}

// ---- suite: annihilator -----------------------------------------------------------------

fn annihilator_battery() -> Result<Vec<LimitModuleDescriptor>> {
    use LimitKind::*;
    let odds = SetDescriptor::odds;
    let evens = SetDescriptor::evens;
    let seq = |p: &[u64], inc: &[u64]| IntSeq::new(p.to_vec(), inc.to_vec());
    let part = |p: &[u64]| Partition::new(p.to_vec());
    let gen_seq = crate::parse::parse_weight_seq("[g0,g0+1; tail=g0+2]")?;
    Ok(vec![
        LimitModuleDescriptor::sl(Trivial)?,
        LimitModuleDescriptor::sl(Natural)?,
        LimitModuleDescriptor::sl(Conatural)?,
        LimitModuleDescriptor::sl(SemiInfExterior(odds()))?,
        LimitModuleDescriptor::sl(SemiInfExterior(evens()))?,
        LimitModuleDescriptor::sl(SemiInfExterior(SetDescriptor::odds().with(4, true)))?,
        LimitModuleDescriptor::sl(SInfV(seq(&[], &[1])?))?,
        LimitModuleDescriptor::sl(SInfV(seq(&[2, 4], &[3])?))?,
        LimitModuleDescriptor::sl(SInfVStar(seq(&[], &[2])?))?,
        LimitModuleDescriptor::sl(SPartV(part(&[])?))?,
        LimitModuleDescriptor::sl(SPartV(part(&[1])?))?,
        LimitModuleDescriptor::sl(SPartV(part(&[2])?))?,
        LimitModuleDescriptor::sl(SPartV(part(&[2, 1])?))?,
        LimitModuleDescriptor::sl(SPartV(part(&[3, 1, 1])?))?,
        LimitModuleDescriptor::sl(SPartVStar(part(&[1])?))?,
        LimitModuleDescriptor::sl(SPartVStar(part(&[2, 2])?))?,
        LimitModuleDescriptor::sl(XSlInf(WeightSeq::zero()))?,
        LimitModuleDescriptor::sl(XSlInf(WeightSeq::constant(ExtScalar::int(2))))?,
        LimitModuleDescriptor::sl(XSlInf(gen_seq.clone()))?,
        LimitModuleDescriptor::sl(XSlInf(crate::parse::parse_weight_seq("[1,2,g0; tail=-1]")?))?,
        LimitModuleDescriptor::new(Algebra::Sp, Trivial)?,
        LimitModuleDescriptor::new(Algebra::Sp, Natural)?,
        LimitModuleDescriptor::new(Algebra::Sp, XSpInf(WeightSeq::zero()))?,
        LimitModuleDescriptor::new(Algebra::Sp, XSpInf(WeightSeq::constant(ExtScalar::int(1))))?,
        LimitModuleDescriptor::new(Algebra::OB, Trivial)?,
        LimitModuleDescriptor::new(Algebra::OB, Natural)?,
        LimitModuleDescriptor::new(Algebra::OB, SpinorB(odds()))?,
        LimitModuleDescriptor::new(Algebra::OB, SpinorB(SetDescriptor::empty()))?,
        LimitModuleDescriptor::new(Algebra::OD, SpinorD(evens()))?,
        LimitModuleDescriptor::new(Algebra::OD, Natural)?,
    ])
}

fn suite_annihilator(seed: u64) -> Result<SuiteReport> {
    use LimitKind::*;
    let mut ctx = Ctx::new();
    let battery = annihilator_battery()?;
    ctx.check(battery.len() >= 30, || "battery too small".into());
    let mut labels = Vec::new();
    for d in &battery {
        labels.push(annihilator_label(d)?.to_string());
        ctx.check(!labels.last().unwrap().is_empty(), || format!("empty label for {}", d));
    }
    // spot values from the classification table
    let expect = [
        (0usize, "I(0,0;[];[])"),
        (1, "I(0,0;[1];[])"),
        (2, "I(0,0;[];[1])"),
        (3, "I(0,1;[];[])"),
        (6, "I(1,0;[];[])"),
        (12, "I(0,0;[2,1];[])"),
        (15, "I(0,0;[];[2,2])"),
        (19, "I(1,0;[];[])"),
        (20, "Augmentation"),
        (21, "SpAnnV"),
        (23, "Isw"),
        (25, "OAnnV"),
        (26, "OSpinorIdeal"),
    ];
    for (i, want) in expect {
        ctx.check(labels[i] == want, || {
            format!("{}: label {} != {}", battery[i], labels[i], want)
        });
    }
    // integrable X descriptors collapse onto the symmetric-power labels
    ctx.check(labels[16] == "I(0,0;[];[])", || format!("X(0^inf): {}", labels[16]));
    ctx.check(labels[17] == "I(1,0;[];[])", || format!("X(2^inf): {}", labels[17]));
    // constancy across isomorphism classes
    let pairs: Vec<(LimitModuleDescriptor, LimitModuleDescriptor)> = vec![
        (
            LimitModuleDescriptor::sl(XSlInf(WeightSeq::zero()))?,
            LimitModuleDescriptor::sl(XSlInf(WeightSeq::constant(ExtScalar::int(-1))))?,
        ),
        (
            LimitModuleDescriptor::sl(SemiInfExterior(SetDescriptor::odds()))?,
            LimitModuleDescriptor::sl(SemiInfExterior(SetDescriptor::odds().with(2, true)))?,
        ),
        (
            LimitModuleDescriptor::sl(SInfV(IntSeq::new(vec![], vec![1])?))?,
            LimitModuleDescriptor::sl(SInfV(IntSeq::new(vec![1], vec![1])?))?,
        ),
        (
            LimitModuleDescriptor::new(Algebra::OB, SpinorB(SetDescriptor::odds()))?,
            LimitModuleDescriptor::new(
                Algebra::OB,
                SpinorB(SetDescriptor::odds().with(2, true).with(4, true)),
            )?,
        ),
        (
            LimitModuleDescriptor::new(Algebra::OD, SpinorD(SetDescriptor::evens()))?,
            LimitModuleDescriptor::new(
                Algebra::OD,
                SpinorD(SetDescriptor::evens().with(2, false).with(4, false)),
            )?,
        ),
    ];
    for (a, b) in &pairs {
        ctx.check(iso_limit(a, b)?, || format!("{} and {} should be isomorphic", a, b));
        let la = annihilator_label(a)?;
        let lb = annihilator_label(b)?;
        ctx.check(la == lb, || format!("labels differ on the iso pair {} / {}", a, b));
    }
    // the two sp ideals are distinct, as are the sl spinor-free labels
    ctx.check(labels[21] != labels[23], || "SpAnnV collides with Isw".into());
    ctx.check(labels[1] != labels[2], || "V and V* labels collide".into());
    let _ = seed;
    Ok(ctx.finish("annihilator", seed))
}

// ---- suite: properties --------------------------------------------------------------------

fn rand_semi_infinite(rng: &mut ChaCha8Rng) -> SetDescriptor {
    loop {
        let plen = rng.gen_range(2..=4usize);
        let pattern: Vec<bool> = (0..plen).map(|_| rng.gen_bool(0.5)).collect();
        let start = rng.gen_range(1..=6u64);
        let mut s = SetDescriptor::new(Default::default(), Default::default(), start, pattern);
        for _ in 0..rng.gen_range(0..=3) {
            let i = rng.gen_range(1..=10u64);
            s = s.with(i, rng.gen_bool(0.5));
        }
        if s.is_semi_infinite() {
            return s;
        }
    }
}

fn perturb_finite(rng: &mut ChaCha8Rng, s: &SetDescriptor) -> SetDescriptor {
    let mut out = s.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let i = rng.gen_range(1..=12u64);
        out = out.with(i, rng.gen_bool(0.5));
    }
    out
}

fn rand_intseq(rng: &mut ChaCha8Rng) -> IntSeq {
    let plen = rng.gen_range(0..=3usize);
    let mut prefix = Vec::new();
    let mut cur = 0u64;
    for _ in 0..plen {
        cur += rng.gen_range(1..=3u64);
        prefix.push(cur);
    }
    let ilen = rng.gen_range(1..=2usize);
    let inc: Vec<u64> = (0..ilen).map(|_| rng.gen_range(1..=3u64)).collect();
    IntSeq::new(prefix, inc).expect("strictly increasing by construction")
}

fn equiv_intseq(rng: &mut ChaCha8Rng, a: &IntSeq) -> IntSeq {
    // same eventual positions, different head; the new prefix must swallow
    // whole increment periods to keep the tail phase aligned
    let m = a.prefix.len() + a.inc.len() * rng.gen_range(1..=2usize);
    let mut prefix: Vec<u64> = (1..=m as u64).map(|n| a.nth(n)).collect();
    // positions beyond the prefix anchor on its last entry, so only an
    // interior entry may move
    if prefix.len() >= 2 && prefix[0] > 1 && rng.gen_bool(0.7) {
        prefix[0] -= 1;
    }
    IntSeq::new(prefix, a.inc.clone()).expect("head rewrite keeps strict increase")
}

fn suite_properties(seed: u64) -> Result<SuiteReport> {
    let mut ctx = Ctx::new();
    let mut rng = rng_for(seed, 6);
    // ~ on semi-infinite sets: reflexive, symmetric, transitive on chains
    for _ in 0..1000 {
        let a = rand_semi_infinite(&mut rng);
        let b = perturb_finite(&mut rng, &a);
        let c = perturb_finite(&mut rng, &b);
        ctx.check(approx_equiv(&a, &a)?, || format!("~ not reflexive at {}", a));
        ctx.check(
            approx_equiv(&a, &b)? && approx_equiv(&b, &a)?,
            || format!("~ not symmetric at {} / {}", a, b),
        );
        ctx.check(approx_equiv(&a, &c)?, || format!("~ not transitive at {} / {}", a, c));
        let other = rand_semi_infinite(&mut rng);
        ctx.check(approx_equiv(&a, &other)? == approx_equiv(&other, &a)?, || {
            format!("~ asymmetric at {} / {}", a, other)
        });
    }
    // ~ on strictly increasing sequences
    for _ in 0..1000 {
        let a = rand_intseq(&mut rng);
        let b = equiv_intseq(&mut rng, &a);
        let c = equiv_intseq(&mut rng, &b);
        ctx.check(sinf_equiv(&a, &a), || format!("seq ~ not reflexive at {}", a));
        ctx.check(sinf_equiv(&a, &b) && sinf_equiv(&b, &a), || {
            format!("seq ~ not symmetric at {} / {}", a, b)
        });
        ctx.check(sinf_equiv(&a, &c), || format!("seq ~ not transitive at {} / {}", a, c));
    }
    // spinor equivalences: ~_B ignores finite changes, ~_D only even ones
    for _ in 0..1000 {
        let a = rand_semi_infinite(&mut rng);
        let b = perturb_finite(&mut rng, &a);
        ctx.check(spinor_equiv_b(&a, &b), || format!("~_B fails at {} / {}", a, b));
        let one_flip = a.with(rng.gen_range(1..=10), !a.member(1));
        let d_ok = spinor_equiv_d(&a, &one_flip);
        let parity_even = a.sym_diff(&one_flip).elements().map(|e| e.len() % 2 == 0);
        ctx.check(Some(d_ok) == parity_even, || {
            format!("~_D parity mismatch at {} / {}", a, one_flip)
        });
        ctx.check(spinor_equiv_d(&a, &a), || format!("~_D not reflexive at {}", a));
    }
    // ~_sl and ~_sp on weight sequences
    for _ in 0..1000 {
        let a = rand_seq(&mut rng, true);
        // shift mass between two prefix slots: stays in the same ~_sl class
        let mut b = a.clone();
        if b.prefix.len() >= 2 {
            let i = rng.gen_range(0..b.prefix.len() - 1) as u64 + 1;
            let cls = |w: &WeightSeq, i: u64| w.entry(i).int_class();
            let b2 = b.with_entry(i, b.entry(i).add_int(1)).with_entry(
                i + 1,
                b.entry(i + 1).add_int(-1),
            );
            if cls(&b2, i) == cls(&a, i) && cls(&b2, i + 1) == cls(&a, i + 1) {
                b = b2;
            }
        }
        ctx.check(sim_sl_seq(&a, &a), || format!("~_sl not reflexive at {}", a));
        ctx.check(sim_sl_seq(&a, &b) && sim_sl_seq(&b, &a), || {
            format!("~_sl not symmetric at {} / {}", a, b)
        });
        let c = rand_seq(&mut rng, true);
        ctx.check(sim_sl_seq(&a, &c) == sim_sl_seq(&c, &a), || {
            format!("~_sl asymmetric at {} / {}", a, c)
        });
        ctx.check(sim_sp_seq(&a, &a), || format!("~_sp not reflexive at {}", a));
        if !a.prefix.is_empty() {
            let shifted = a.with_entry(1, a.entry(1).add_int(2));
            let same_class = shifted.entry(1).int_class() == a.entry(1).int_class();
            ctx.check(sim_sp_seq(&a, &shifted) == same_class, || {
                format!("~_sp even-shift mismatch at {}", a)
            });
            ctx.check(!sim_sp_seq(&a, &a.with_entry(1, a.entry(1).add_int(1))), || {
                format!("~_sp accepts an odd shift at {}", a)
            });
        }
    }
    // isomorphic descriptors have identical supports
    for _ in 0..150 {
        let a = LimitModuleDescriptor::new(
            Algebra::OB,
            LimitKind::SpinorB(rand_semi_infinite(&mut rng)),
        )?;
        let LimitKind::SpinorB(sa) = &a.kind else { unreachable!() };
        let b = LimitModuleDescriptor::new(
            Algebra::OB,
            LimitKind::SpinorB(perturb_finite(&mut rng, sa)),
        )?;
        ctx.check(iso_limit(&a, &b)?, || format!("{} / {} should be isomorphic", a, b));
        for _ in 0..10 {
            let lam = seq_from_set(&rand_semi_infinite(&mut rng), half(), ExtScalar::ratio(-1, 2));
            ctx.check(support_oracle(&a, &lam)? == support_oracle(&b, &lam)?, || {
                format!("supports of {} / {} disagree at {}", a, b, lam)
            });
        }
    }
    // classification is a retraction: classify(mu_of(d)) is isomorphic to d
    for _ in 0..1000 {
        let mu = rand_seq(&mut rng, true);
        let d = classify_sl(&mu)?;
        let back = mu_of(&d).ok_or_else(|| Error::NotSupported("no mu for descriptor".into()))?;
        let d2 = classify_sl(&back)?;
        ctx.check(iso_limit(&d, &d2)?, || {
            format!("retraction breaks at {}: {} vs {}", mu, d, d2)
        });
        ctx.check(iso_limit(&d, &classify_sl(&mu)?)?, || {
            format!("classification of {} is unstable", mu)
        });
    }
    Ok(ctx.finish("properties", seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_dispatch() {
        assert!(run_suite("no-such-suite", 0).is_err());
        for name in SUITES {
            // cheap sanity on the two fast suites; the rest run in the
            // integration tests
            if *name == "paper-examples" || *name == "annihilator" {
                let r = run_suite(name, 7).unwrap();
                assert!(r.ok(), "{}: {:?}", r.name, r.failures);
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("annihilator", 3).unwrap();
        let b = run_suite("annihilator", 3).unwrap();
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.failures, b.failures);
    }
}
