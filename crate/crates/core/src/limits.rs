//! Direct-limit modules over sl(inf), o(inf), sp(inf): descriptors, the
//! equivalences governing isomorphism, support oracles, highest-weight
//! testing against infinite Borel subalgebras, and annihilator labels.

use crate::borel::BorelDescriptor;
use crate::error::{Error, Result};
use crate::scalar::ExtScalar;
use crate::setdesc::SetDescriptor;
use crate::weight::{half, Partition, WeightSeq};
use num::bigint::BigInt;
use num::{Integer, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    Sl,
    /// o(inf) with Cartan of type B.
    OB,
    /// o(inf) with Cartan of type D.
    OD,
    Sp,
}

/// A strictly increasing sequence a_1 < a_2 < ... of nonnegative integers:
/// an explicit prefix, then repeating increments.  Only such sequences are
/// finitely describable here; arbitrary monotone sequences are not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSeq {
    pub prefix: Vec<u64>,
    pub inc: Vec<u64>,
}

impl IntSeq {
    pub fn new(prefix: Vec<u64>, inc: Vec<u64>) -> Result<Self> {
        if inc.is_empty() || inc.iter().any(|&d| d == 0) {
            return Err(Error::NotSupported(
                "increments must be positive (the sequence is unbounded)".into(),
            ));
        }
        if prefix.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotSupported("prefix must be strictly increasing".into()));
        }
        Ok(IntSeq { prefix, inc })
    }

    /// 1-based n-th value; the implicit a_0 is the last prefix value, or 0.
    pub fn nth(&self, n: u64) -> u64 {
        let p = self.prefix.len() as u64;
        if n <= p && n >= 1 {
            return self.prefix[(n - 1) as usize];
        }
        let mut v = self.prefix.last().copied().unwrap_or(0);
        for k in 0..(n - p) {
            v += self.inc[(k % self.inc.len() as u64) as usize];
        }
        v
    }

    fn horizon(&self, other: &IntSeq) -> u64 {
        fn lcm(a: usize, b: usize) -> usize {
            fn gcd(a: usize, b: usize) -> usize {
                if b == 0 { a } else { gcd(b, a % b) }
            }
            a / gcd(a, b) * b
        }
        let p = self.prefix.len().max(other.prefix.len()) as u64 + 1;
        p + 2 * lcm(self.inc.len(), other.inc.len()) as u64
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.prefix.iter().map(|v| v.to_string()).collect();
        let i: Vec<String> = self.inc.iter().map(|v| v.to_string()).collect();
        write!(f, "seq[{}; +({})]", p.join(","), i.join(","))
    }
}

/// `a_n = b_n` for all n past some point.  Values drift linearly once the
/// increment sums differ, so checking one aligned window plus one full
/// period beyond both prefixes decides the relation.
pub fn sinf_equiv(a: &IntSeq, b: &IntSeq) -> bool {
    let h = a.horizon(b);
    let lo = a.prefix.len().max(b.prefix.len()) as u64 + 1;
    (lo..=h).all(|n| a.nth(n) == b.nth(n))
}

/// Finite symmetric difference of semi-infinite sets.
pub fn approx_equiv(a: &SetDescriptor, b: &SetDescriptor) -> Result<bool> {
    if !a.is_semi_infinite() || !b.is_semi_infinite() {
        return Err(Error::HypothesisViolated("semi-infinite sets required".into()));
    }
    Ok(a.finite_sym_diff(b))
}

/// Sign vectors given by their +1/2 locus: equal at all but finitely many
/// indices.
pub fn spinor_equiv_b(l: &SetDescriptor, m: &SetDescriptor) -> bool {
    l.finite_sym_diff(m)
}

/// Differ at an even (finite) number of indices.
pub fn spinor_equiv_d(l: &SetDescriptor, m: &SetDescriptor) -> bool {
    match l.sym_diff(m).elements() {
        Some(d) => d.len() % 2 == 0,
        None => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitKind {
    Trivial,
    Natural,
    Conatural,
    SemiInfExterior(SetDescriptor),
    SInfV(IntSeq),
    SInfVStar(IntSeq),
    SPartV(Partition),
    SPartVStar(Partition),
    XSlInf(WeightSeq),
    XSpInf(WeightSeq),
    SpinorB(SetDescriptor),
    SpinorD(SetDescriptor),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitModuleDescriptor {
    pub alg: Algebra,
    pub kind: LimitKind,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algebra::Sl => "sl",
            Algebra::OB => "o-b",
            Algebra::OD => "o-d",
            Algebra::Sp => "sp",
        };
        write!(f, "{}", s)
    }
}

impl fmt::Display for LimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LimitKind::*;
        match self {
            Trivial => write!(f, "C"),
            Natural => write!(f, "V"),
            Conatural => write!(f, "V*"),
            SemiInfExterior(a) => write!(f, "Lambda{}", a),
            SInfV(a) => write!(f, "SinfV({})", a),
            SInfVStar(a) => write!(f, "SinfV*({})", a),
            SPartV(p) => write!(f, "SV{}", p),
            SPartVStar(p) => write!(f, "SV*{}", p),
            XSlInf(mu) => write!(f, "XSl{}", mu),
            XSpInf(mu) => write!(f, "XSp{}", mu),
            SpinorB(a) => write!(f, "SpinB{}", a),
            SpinorD(a) => write!(f, "SpinD{}", a),
        }
    }
}

impl fmt::Display for LimitModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

impl LimitModuleDescriptor {
    pub fn new(alg: Algebra, kind: LimitKind) -> Result<Self> {
        use LimitKind::*;
        let sl_only = |name: &str| -> Result<()> {
            if alg != Algebra::Sl {
                return Err(Error::NotSupported(format!("{} lives over sl(inf)", name)));
            }
            Ok(())
        };
        match &kind {
            Trivial | Natural => {}
            Conatural => sl_only("the conatural module")?,
            SemiInfExterior(a) => {
                sl_only("the semi-infinite exterior power")?;
                if !a.is_semi_infinite() {
                    return Err(Error::HypothesisViolated("A must be semi-infinite".into()));
                }
            }
            SInfV(_) | SInfVStar(_) | SPartV(_) | SPartVStar(_) | XSlInf(_) => {
                sl_only("this family")?
            }
            XSpInf(_) => {
                if alg != Algebra::Sp {
                    return Err(Error::NotSupported("X_sp lives over sp(inf)".into()));
                }
            }
            SpinorB(_) => {
                if alg != Algebra::OB {
                    return Err(Error::NotSupported("type B spinors need the B Cartan".into()));
                }
            }
            SpinorD(_) => {
                if alg != Algebra::OD {
                    return Err(Error::NotSupported("type D spinors need the D Cartan".into()));
                }
            }
        }
        Ok(LimitModuleDescriptor { alg, kind })
    }

    pub fn sl(kind: LimitKind) -> Result<Self> {
        LimitModuleDescriptor::new(Algebra::Sl, kind)
    }
}

/// Weight sequence taking `inside` on members of `s` and `outside` elsewhere.
pub(crate) fn seq_from_set(s: &SetDescriptor, inside: ExtScalar, outside: ExtScalar) -> WeightSeq {
    let bound = s
        .exc_in
        .iter()
        .chain(s.exc_out.iter())
        .max()
        .map(|m| m + 1)
        .unwrap_or(1)
        .max(s.start);
    let pick = |i: u64| if s.member(i) { inside.clone() } else { outside.clone() };
    let period = s.pattern.len().max(1) as u64;
    WeightSeq::new(
        (1..bound).map(pick).collect(),
        (bound..bound + period).map(pick).collect(),
    )
}

/// The set of indices where `mu` equals `v`.
fn locus(mu: &WeightSeq, v: &ExtScalar) -> SetDescriptor {
    let start = mu.bound();
    let exc: BTreeSet<u64> = (1..start).filter(|&i| mu.entry(i) == v).collect();
    let pattern: Vec<bool> = (0..mu.period() as u64).map(|j| mu.entry(start + j) == v).collect();
    SetDescriptor::new(exc, BTreeSet::new(), start, pattern)
}

/// mu - nu in the gl(inf) root lattice (finitely supported integer
/// difference of total sum zero) with the same nonnegative-integer locus.
pub fn sim_sl_seq(a: &WeightSeq, b: &WeightSeq) -> bool {
    match a.finite_int_diff(b) {
        Some(d) => {
            d.values().sum::<BigInt>().is_zero()
                && a.int_sets().plus.set_eq(&b.int_sets().plus)
        }
        None => false,
    }
}

/// Same with the sp(inf) lattice (even total sum).
pub fn sim_sp_seq(a: &WeightSeq, b: &WeightSeq) -> bool {
    match a.finite_int_diff(b) {
        Some(d) => {
            d.values().sum::<BigInt>().is_even()
                && a.int_sets().plus.set_eq(&b.int_sets().plus)
        }
        None => false,
    }
}

fn is_sign_vector(l: &WeightSeq) -> bool {
    let h = half();
    let mh = h.checked_neg();
    l.prefix.iter().chain(l.tail.iter()).all(|e| *e == h || *e == mh)
}

/// Shift every entry by a rational constant.
fn shift_seq(mu: &WeightSeq, c: &ExtScalar) -> Result<WeightSeq> {
    Ok(WeightSeq::new(
        mu.prefix.iter().map(|e| e.checked_add(c)).collect::<Result<_>>()?,
        mu.tail.iter().map(|e| e.checked_add(c)).collect::<Result<_>>()?,
    ))
}

/// Is `lambda` a weight of the module described by `d`?
pub fn support_oracle(d: &LimitModuleDescriptor, lambda: &WeightSeq) -> Result<bool> {
    use LimitKind::*;
    let one = ExtScalar::int(1);
    match &d.kind {
        Trivial => Ok(lambda.seq_eq(&WeightSeq::zero())),
        Natural => {
            // +-eps_i (and, over sl, only +eps_i; for o(2n+1) limits also 0)
            let nz: Vec<u64> = match lambda.support() {
                Some(s) => s.into_iter().collect(),
                None => return Ok(false),
            };
            match d.alg {
                Algebra::Sl => Ok(nz.len() == 1 && *lambda.entry(nz[0]) == one),
                Algebra::OB => Ok(nz.is_empty()
                    || (nz.len() == 1 && lambda.entry(nz[0]).as_int().map_or(false, |v| v.abs() == BigInt::from(1)))),
                Algebra::OD | Algebra::Sp => Ok(nz.len() == 1
                    && lambda.entry(nz[0]).as_int().map_or(false, |v| v.abs() == BigInt::from(1))),
            }
        }
        Conatural => {
            let nz: Vec<u64> = match lambda.support() {
                Some(s) => s.into_iter().collect(),
                None => return Ok(false),
            };
            Ok(nz.len() == 1 && *lambda.entry(nz[0]) == ExtScalar::int(-1))
        }
        SemiInfExterior(a) => {
            // sums of eps_i over B with B approx A
            if !zero_one_entries(lambda) {
                return Ok(false);
            }
            let b = locus(lambda, &one);
            if !b.is_semi_infinite() {
                return Ok(false);
            }
            approx_equiv(&b, a)
        }
        SInfV(a) => sinf_v_member(lambda, a, false),
        SInfVStar(a) => sinf_v_member(lambda, a, true),
        SPartV(mu) => Ok(part_member(lambda, mu, false)),
        SPartVStar(mu) => Ok(part_member(lambda, mu, true)),
        XSlInf(mu) => Ok(sim_sl_seq(lambda, mu)),
        XSpInf(mu) => {
            // weights sit at lambda' + (1/2)^inf for lambda' ~ mu
            let shifted = shift_seq(lambda, &half().checked_neg())?;
            Ok(sim_sp_seq(&shifted, mu))
        }
        SpinorB(a) => {
            if !is_sign_vector(lambda) {
                return Ok(false);
            }
            Ok(spinor_equiv_b(&locus(lambda, &half()), a))
        }
        SpinorD(a) => {
            if !is_sign_vector(lambda) {
                return Ok(false);
            }
            Ok(spinor_equiv_d(&locus(lambda, &half()), a))
        }
    }
}

fn zero_one_entries(l: &WeightSeq) -> bool {
    let z = ExtScalar::zero();
    let o = ExtScalar::int(1);
    l.prefix.iter().chain(l.tail.iter()).all(|e| *e == z || *e == o)
}

/// Support membership for S^inf_A V: lambda_i in Z>=0, some n with
/// lambda_1+...+lambda_n = a_n, and lambda_i = a_i - a_{i-1} past n.  For
/// the dual family the realization has lambda_i in Z<0, eventually
/// lambda_i = -1 - (a_i - a_{i-1}), and partial sums -n - a_n.
fn sinf_v_member(lambda: &WeightSeq, a: &IntSeq, dual: bool) -> Result<bool> {
    let ok_class = |e: &ExtScalar| match e.as_int() {
        Some(v) => {
            if dual {
                v < BigInt::zero()
            } else {
                v >= BigInt::zero()
            }
        }
        None => false,
    };
    if !lambda.prefix.iter().chain(lambda.tail.iter()).all(|e| ok_class(e)) {
        return Ok(false);
    }
    // past the horizon lambda_i must match the increments exactly
    let p = a.prefix.len() as u64;
    let span = (lambda.period() * a.inc.len()) as u64;
    let h = lambda.bound() + p + span;
    for i in h + 1..=h + span {
        let inc = (a.nth(i) - a.nth(i - 1)) as i64;
        let want = if dual { -1 - inc } else { inc };
        if *lambda.entry(i) != ExtScalar::int(want) {
            return Ok(false);
        }
    }
    // partial sum check at the horizon
    let mut s = BigInt::zero();
    for i in 1..=h {
        s += lambda.entry(i).as_int().unwrap();
    }
    let target = if dual {
        -BigInt::from(h) - BigInt::from(a.nth(h))
    } else {
        BigInt::from(a.nth(h))
    };
    Ok(s == target)
}

/// Weights of S^mu V (resp. S^mu V_*): (signed) nonnegative integer entries
/// of finite support, total |mu|, dominated by mu after sorting.
fn part_member(lambda: &WeightSeq, mu: &Partition, dual: bool) -> bool {
    if !lambda.finite_support() {
        return false;
    }
    let mut vals: Vec<BigInt> = Vec::new();
    for i in 1..lambda.bound() {
        match lambda.entry(i).as_int() {
            Some(v) => {
                let v = if dual { -v } else { v };
                if v.is_negative() {
                    return false;
                }
                if !v.is_zero() {
                    vals.push(v);
                }
            }
            None => return false,
        }
    }
    if vals.iter().sum::<BigInt>() != BigInt::from(mu.size()) {
        return false;
    }
    vals.sort();
    vals.reverse();
    // dominance: prefix sums of sorted lambda never exceed those of mu
    let mut sl = BigInt::zero();
    let mut sm = 0u64;
    for k in 0..vals.len().max(mu.len()) {
        sl += vals.get(k).cloned().unwrap_or_default();
        sm += mu.parts.get(k).copied().unwrap_or(0);
        if sl > BigInt::from(sm) {
            return false;
        }
    }
    true
}

/// Tags for the five shapes of finite-rank highest weights an integrable
/// limit can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiveType {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for FiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FiveType::I => "i",
            FiveType::II => "ii",
            FiveType::III => "iii",
            FiveType::IV => "iv",
            FiveType::V => "v",
        };
        write!(f, "({})", s)
    }
}

pub fn five_type(d: &LimitModuleDescriptor) -> Result<FiveType> {
    use LimitKind::*;
    if d.alg != Algebra::Sl {
        return Err(Error::NotSupported("five-type tags are for sl(inf)".into()));
    }
    match &canonicalize(d)?.kind {
        SemiInfExterior(_) => Ok(FiveType::I),
        SInfV(_) => Ok(FiveType::II),
        SInfVStar(_) => Ok(FiveType::III),
        Trivial | Natural | SPartV(_) => Ok(FiveType::IV),
        Conatural | SPartVStar(_) => Ok(FiveType::V),
        _ => Err(Error::NotIntegrable),
    }
}

/// The set of running totals of `step(mu_i)`, enumerated increasingly, as
/// an IntSeq.  Repeated values (zero steps) collapse.
fn running_total_seq(mu: &WeightSeq, step: impl Fn(&ExtScalar) -> u64) -> Result<IntSeq> {
    let b = mu.bound();
    let p = mu.period() as u64;
    let mut prefix: Vec<u64> = Vec::new();
    let mut acc = 0u64;
    for i in 1..b + p {
        acc += step(mu.entry(i));
        if prefix.last().map_or(true, |&l| acc > l) {
            prefix.push(acc);
        }
    }
    // gaps between distinct totals over one tail block
    let mut inc = Vec::new();
    let mut gap = 0u64;
    for j in 0..p {
        gap += step(mu.entry(b + p + j));
        if gap > 0 {
            inc.push(gap);
            gap = 0;
        }
    }
    IntSeq::new(prefix, inc)
}

/// Identify X_sl(mu) among the named families.
pub fn classify_sl(mu: &WeightSeq) -> Result<LimitModuleDescriptor> {
    let zero = WeightSeq::zero();
    let minus_one = WeightSeq::constant(ExtScalar::int(-1));
    if mu.seq_eq(&zero) || mu.seq_eq(&minus_one) {
        return LimitModuleDescriptor::sl(LimitKind::Trivial);
    }
    let s = mu.int_sets();
    let all = SetDescriptor::all();
    if s.plus.set_eq(&all) {
        if mu.finite_support() {
            let m: u64 = (1..mu.bound())
                .map(|i| u64::try_from(mu.entry(i).as_int().unwrap()).unwrap())
                .sum();
            return sym_power(m, false);
        }
        let a = running_total_seq(mu, |e| u64::try_from(e.as_int().unwrap()).unwrap())?;
        return LimitModuleDescriptor::sl(LimitKind::SInfV(a));
    }
    if s.minus.set_eq(&all) {
        if mu.is_eventually(&ExtScalar::int(-1)) {
            let m: u64 = (1..mu.bound())
                .map(|i| u64::try_from(-(mu.entry(i).as_int().unwrap() + BigInt::from(1))).unwrap())
                .sum();
            return sym_power(m, true);
        }
        // a_i = -i - (mu_1 + ... + mu_i); increments are -1 - mu_i >= 0
        let a = running_total_seq(mu, |e| {
            u64::try_from(-(e.as_int().unwrap() + BigInt::from(1))).unwrap()
        })?;
        return LimitModuleDescriptor::sl(LimitKind::SInfVStar(a));
    }
    LimitModuleDescriptor::sl(LimitKind::XSlInf(mu.clone()))
}

fn sym_power(m: u64, dual: bool) -> Result<LimitModuleDescriptor> {
    let kind = match (m, dual) {
        (0, _) => LimitKind::Trivial,
        (1, false) => LimitKind::Natural,
        (1, true) => LimitKind::Conatural,
        (_, false) => LimitKind::SPartV(Partition::new(vec![m])?),
        (_, true) => LimitKind::SPartVStar(Partition::new(vec![m])?),
    };
    LimitModuleDescriptor::sl(kind)
}

/// Reduce a descriptor to a preferred representative of its class.
pub fn canonicalize(d: &LimitModuleDescriptor) -> Result<LimitModuleDescriptor> {
    use LimitKind::*;
    match &d.kind {
        XSlInf(mu) => classify_sl(mu),
        SPartV(mu) if mu.is_empty() => LimitModuleDescriptor::sl(Trivial),
        SPartVStar(mu) if mu.is_empty() => LimitModuleDescriptor::sl(Trivial),
        SPartV(mu) if mu.parts == [1] => LimitModuleDescriptor::sl(Natural),
        SPartVStar(mu) if mu.parts == [1] => LimitModuleDescriptor::sl(Conatural),
        _ => Ok(d.clone()),
    }
}

/// The infinite-weight sequence mu with X_sl(mu) (or X_sp) isomorphic to
/// the described module, when one exists.
pub fn mu_of(d: &LimitModuleDescriptor) -> Option<WeightSeq> {
    use LimitKind::*;
    match (&d.alg, &d.kind) {
        (_, Trivial) => Some(WeightSeq::zero()),
        (Algebra::Sl, Natural) => Some(WeightSeq::from_ints(&[1], 0)),
        (Algebra::Sl, Conatural) => Some(WeightSeq::from_ints(&[-2], -1)),
        (Algebra::Sl, SPartV(mu)) if mu.len() <= 1 => {
            let m = mu.parts.first().copied().unwrap_or(0) as i64;
            Some(WeightSeq::from_ints(&[m], 0))
        }
        (Algebra::Sl, SPartVStar(mu)) if mu.len() <= 1 => {
            let m = mu.parts.first().copied().unwrap_or(0) as i64;
            Some(WeightSeq::from_ints(&[-m - 1], -1))
        }
        (Algebra::Sl, SInfV(a)) => {
            let p = a.prefix.len() as u64;
            let mut prefix = Vec::new();
            let mut prev = 0u64;
            for i in 1..=p {
                prefix.push(ExtScalar::int((a.nth(i) - prev) as i64));
                prev = a.nth(i);
            }
            let tail: Vec<ExtScalar> = a.inc.iter().map(|&d| ExtScalar::int(d as i64)).collect();
            Some(WeightSeq::new(prefix, tail))
        }
        (Algebra::Sl, SInfVStar(a)) => {
            let p = a.prefix.len() as u64;
            let mut prefix = Vec::new();
            let mut prev = 0u64;
            for i in 1..=p {
                prefix.push(ExtScalar::int(-1 - (a.nth(i) - prev) as i64));
                prev = a.nth(i);
            }
            let tail: Vec<ExtScalar> = a.inc.iter().map(|&d| ExtScalar::int(-1 - d as i64)).collect();
            Some(WeightSeq::new(prefix, tail))
        }
        (Algebra::Sl, XSlInf(mu)) => Some(mu.clone()),
        (Algebra::Sp, XSpInf(mu)) => Some(mu.clone()),
        _ => None,
    }
}

/// Isomorphism of limit modules over the same algebra and Cartan class.
pub fn iso_limit(d1: &LimitModuleDescriptor, d2: &LimitModuleDescriptor) -> Result<bool> {
    use LimitKind::*;
    if d1.alg != d2.alg {
        return Err(Error::IncomparableCartan);
    }
    let a = canonicalize(d1)?;
    let b = canonicalize(d2)?;
    Ok(match (&a.kind, &b.kind) {
        (Trivial, Trivial) | (Natural, Natural) | (Conatural, Conatural) => true,
        (SemiInfExterior(x), SemiInfExterior(y)) => approx_equiv(x, y)?,
        (SInfV(x), SInfV(y)) | (SInfVStar(x), SInfVStar(y)) => sinf_equiv(x, y),
        (SPartV(x), SPartV(y)) | (SPartVStar(x), SPartVStar(y)) => x == y,
        (XSlInf(x), XSlInf(y)) => sim_sl_seq(x, y),
        (XSpInf(x), XSpInf(y)) => sim_sp_seq(x, y),
        (SpinorB(x), SpinorB(y)) => spinor_equiv_b(x, y),
        (SpinorD(x), SpinorD(y)) => spinor_equiv_d(x, y),
        _ => false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sided {
    OneSided,
    TwoSided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitHw {
    HighestWeight { weight: WeightSeq, sided: Option<Sided> },
    PseudoHighestWeight,
    Neither,
}

fn need_sign(b: &BorelDescriptor) -> Result<()> {
    if b.sign.is_none() {
        return Err(Error::InvalidBorel("this algebra needs a sign map".into()));
    }
    Ok(())
}

fn need_no_sign(b: &BorelDescriptor) -> Result<()> {
    if b.sign.is_some() {
        return Err(Error::InvalidBorel("sl Borel subalgebras carry no sign map".into()));
    }
    Ok(())
}

/// Highest-weight / pseudo-highest-weight / neither, for the limit module
/// against an infinite Borel subalgebra.
pub fn hw_test_limit(d: &LimitModuleDescriptor, b: &BorelDescriptor) -> Result<LimitHw> {
    use LimitKind::*;
    let c = canonicalize(d)?;
    match d.alg {
        Algebra::Sl => need_no_sign(b)?,
        _ => need_sign(b)?,
    }
    match &c.kind {
        Trivial => Ok(LimitHw::HighestWeight { weight: WeightSeq::zero(), sided: None }),
        Natural => match d.alg {
            Algebra::Sl => Ok(match b.global_min() {
                Some(i0) => LimitHw::HighestWeight {
                    weight: WeightSeq::zero().with_entry(i0, ExtScalar::int(1)),
                    sided: None,
                },
                None => LimitHw::PseudoHighestWeight,
            }),
            _ => Ok(match b.global_min() {
                Some(i0) => {
                    let v = ExtScalar::int(b.sigma(i0)? as i64);
                    LimitHw::HighestWeight {
                        weight: WeightSeq::zero().with_entry(i0, v),
                        sided: None,
                    }
                }
                None => LimitHw::PseudoHighestWeight,
            }),
        },
        Conatural => Ok(match b.global_max() {
            Some(i0) => LimitHw::HighestWeight {
                weight: WeightSeq::zero().with_entry(i0, ExtScalar::int(-1)),
                sided: None,
            },
            None => LimitHw::PseudoHighestWeight,
        }),
        SemiInfExterior(a) => Ok(match exterior_downset(a, b) {
            Some(set) => LimitHw::HighestWeight {
                weight: seq_from_set(&set, ExtScalar::int(1), ExtScalar::zero()),
                sided: None,
            },
            None => LimitHw::PseudoHighestWeight,
        }),
        SInfV(_) | SInfVStar(_) => Ok(LimitHw::PseudoHighestWeight),
        SPartV(mu) => Ok(match b.first_elements(mu.len()) {
            Some(idx) => {
                let mut w = WeightSeq::zero();
                for (j, &i) in idx.iter().enumerate() {
                    w = w.with_entry(i, ExtScalar::int(mu.parts[j] as i64));
                }
                LimitHw::HighestWeight { weight: w, sided: None }
            }
            None => LimitHw::PseudoHighestWeight,
        }),
        SPartVStar(mu) => Ok(match b.last_elements(mu.len()) {
            Some(idx) => {
                let mut w = WeightSeq::zero();
                // the final chain carries -mu reversed: greatest index gets -mu_1
                for (j, &i) in idx.iter().enumerate() {
                    w = w.with_entry(i, ExtScalar::int(-(mu.parts[mu.len() - 1 - j] as i64)));
                }
                LimitHw::HighestWeight { weight: w, sided: None }
            }
            None => LimitHw::PseudoHighestWeight,
        }),
        XSlInf(mu) => hw_xsl_inf(mu, b),
        XSpInf(mu) => hw_xsp_inf(mu, b),
        SpinorB(a) | SpinorD(a) => {
            let sigma_plus = b.sign.clone().unwrap();
            let ok = match &c.kind {
                SpinorB(_) => spinor_equiv_b(&sigma_plus, a),
                _ => spinor_equiv_d(&sigma_plus, a),
            };
            Ok(if ok {
                LimitHw::HighestWeight {
                    weight: seq_from_set(&sigma_plus, half(), half().checked_neg()),
                    sided: None,
                }
            } else {
                LimitHw::PseudoHighestWeight
            })
        }
    }
}

/// A down-set B of the order with B approx A, if one exists: B must be a
/// union of initial blocks plus an order prefix of the boundary block, and
/// every block type admits exactly the prefixes that are finite or
/// cofinite in its carrier.
fn exterior_downset(a: &SetDescriptor, b: &BorelDescriptor) -> Option<SetDescriptor> {
    let mut before = SetDescriptor::empty();
    for t in 0..=b.blocks.len() {
        let rest = b.blocks[t..]
            .iter()
            .fold(SetDescriptor::empty(), |acc, blk| acc.union(&blk.carrier()));
        let boundary = b.blocks.get(t).map(|blk| blk.carrier()).unwrap_or_else(SetDescriptor::empty);
        let after = rest.minus(&boundary);
        if before.minus(a).is_finite() && a.intersect(&after).is_finite() {
            let ac = a.intersect(&boundary);
            let d = if ac.is_finite() {
                // drop the stray finite part
                SetDescriptor::empty()
            } else if boundary.minus(a).is_finite() {
                boundary.clone()
            } else {
                before = before.union(&boundary);
                continue;
            };
            let cand = before.union(&d);
            if cand.is_semi_infinite() {
                // prefer a representative equal to A where possible
                return Some(cand);
            }
        }
        before = before.union(&boundary);
    }
    None
}

/// Does the order make `s` an initial segment (allowing finite repair)?
fn compat(b: &BorelDescriptor, s: &SetDescriptor) -> bool {
    b.compatible(s)
}

fn hw_xsl_inf(mu: &WeightSeq, b: &BorelDescriptor) -> Result<LimitHw> {
    let sets = mu.int_sets();
    let i_set = sets.minus.clone();
    let ni = match mu.nonint_indices() {
        Some(s) => s,
        None => return Ok(LimitHw::Neither),
    };
    if ni.len() >= 2 {
        return Ok(LimitHw::Neither);
    }
    let sided = |i: &SetDescriptor| {
        if i.is_finite() || i.is_cofinite() {
            Sided::OneSided
        } else {
            Sided::TwoSided
        }
    };
    if ni.len() == 1 {
        let i0 = *ni.iter().next().unwrap();
        let with_i0 = i_set.with(i0, true);
        if compat(b, &i_set) && compat(b, &with_i0) {
            if let Some(w) = eps_candidate(mu, &i_set, Some(i0)) {
                return Ok(LimitHw::HighestWeight { weight: w, sided: Some(sided(&i_set)) });
            }
        }
        // pseudo: J = Int^-(mu), j0 the non-integral index
        if compat(b, &i_set) && compat(b, &with_i0) {
            return Ok(LimitHw::PseudoHighestWeight);
        }
        return Ok(LimitHw::Neither);
    }
    // all entries integral
    // candidate eps(A), A = Int^-(mu), no free parameter
    if i_set.is_semi_infinite() && compat(b, &i_set) {
        if let Some(w) = eps_candidate(mu, &i_set, None) {
            return Ok(LimitHw::HighestWeight { weight: w, sided: Some(Sided::TwoSided) });
        }
    }
    // candidate eps(i0, a, I) with a >= 0: i0 the order-least index outside I
    if compat(b, &i_set) {
        if let Some(i0) = b.min_of(&i_set.complement()) {
            if compat(b, &i_set.with(i0, true)) {
                if let Some(w) = eps_candidate(mu, &i_set, Some(i0)) {
                    return Ok(LimitHw::HighestWeight { weight: w, sided: Some(sided(&i_set)) });
                }
            }
        }
        // candidate with a < 0: i0 the order-greatest index of I
        if let Some(i0) = b.max_of(&i_set) {
            let without = i_set.with(i0, false);
            if compat(b, &without) {
                if let Some(w) = eps_candidate(mu, &without, Some(i0)) {
                    return Ok(LimitHw::HighestWeight { weight: w, sided: Some(sided(&i_set)) });
                }
            }
        }
        // pseudo catch-all for integral mu
        return Ok(LimitHw::PseudoHighestWeight);
    }
    Ok(LimitHw::Neither)
}

/// Build eps(i0, a, I) (or eps(I) when i0 is None) with a fixed so the
/// difference to mu has total sum zero, and check mu ~_sl it.
fn eps_candidate(mu: &WeightSeq, i: &SetDescriptor, i0: Option<u64>) -> Option<WeightSeq> {
    let base = seq_from_set(i, ExtScalar::int(-1), ExtScalar::zero());
    let cand = match i0 {
        Some(j) => base.with_entry(j, mu.entry(j).clone()),
        None => base,
    };
    let d = mu.finite_int_diff(&cand)?;
    let total: BigInt = d.values().sum();
    let cand = match i0 {
        // a = mu_j + total, so the difference to mu sums to zero
        Some(j) => cand.with_entry(j, mu.entry(j).add_int(i64::try_from(total).ok()?)),
        None => {
            if !total.is_zero() {
                return None;
            }
            cand
        }
    };
    if sim_sl_seq(mu, &cand) {
        Some(cand)
    } else {
        None
    }
}

fn hw_xsp_inf(mu: &WeightSeq, b: &BorelDescriptor) -> Result<LimitHw> {
    let sigma_plus = b.sign.clone().unwrap();
    let omega = seq_from_set(&sigma_plus, ExtScalar::int(-1), ExtScalar::zero());
    let hw_of = |w: &WeightSeq| shift_seq(w, &half());
    if sim_sp_seq(mu, &omega) {
        return Ok(LimitHw::HighestWeight { weight: hw_of(&omega)?, sided: None });
    }
    if let Some(j0) = b.global_max() {
        let delta = if b.sigma(j0)? == 1 { -1 } else { 1 };
        let shifted = omega.with_entry(j0, omega.entry(j0).add_int(delta));
        if sim_sp_seq(mu, &shifted) {
            return Ok(LimitHw::HighestWeight { weight: hw_of(&shifted)?, sided: None });
        }
    }
    let sets = mu.int_sets();
    if sets.minus.set_eq(&sigma_plus) && sets.plus.set_eq(&sigma_plus.complement()) {
        return Ok(LimitHw::PseudoHighestWeight);
    }
    Ok(LimitHw::Neither)
}

pub fn is_minuscule(d: &LimitModuleDescriptor) -> Result<bool> {
    use LimitKind::*;
    let c = canonicalize(d)?;
    Ok(matches!(
        (&c.alg, &c.kind),
        (Algebra::Sl, SemiInfExterior(_))
            | (Algebra::Sl, SInfV(_))
            | (Algebra::Sl, SInfVStar(_))
            | (_, Natural)
            | (Algebra::Sl, Conatural)
            | (Algebra::OB, SpinorB(_))
            | (Algebra::OD, SpinorD(_))
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealLabel {
    /// Annihilator of S(V)^{x} (x) Lambda(V)^{y} (x) S^lam V (x) S^mu V_*.
    Ixy { x: u64, y: u64, lam: Partition, mu: Partition },
    /// Limit of the Shale-Weil annihilators.
    Isw,
    Zero,
    /// The common annihilator of the o(inf) spinor limits (opaque).
    OSpinorIdeal,
    /// Annihilator of the natural o(inf)-module.
    OAnnV,
    /// Annihilator of the natural sp(inf)-module; distinct from Isw.
    SpAnnV,
    /// Annihilator of the one-dimensional module over o/sp.
    Augmentation,
}

impl fmt::Display for IdealLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealLabel::Ixy { x, y, lam, mu } => write!(f, "I({},{};{};{})", x, y, lam, mu),
            IdealLabel::Isw => write!(f, "Isw"),
            IdealLabel::Zero => write!(f, "Zero"),
            IdealLabel::OSpinorIdeal => write!(f, "OSpinorIdeal"),
            IdealLabel::OAnnV => write!(f, "OAnnV"),
            IdealLabel::SpAnnV => write!(f, "SpAnnV"),
            IdealLabel::Augmentation => write!(f, "Augmentation"),
        }
    }
}

fn ixy(x: u64, y: u64, lam: Partition, mu: Partition) -> IdealLabel {
    IdealLabel::Ixy { x, y, lam, mu }
}

pub fn annihilator_label(d: &LimitModuleDescriptor) -> Result<IdealLabel> {
    use LimitKind::*;
    let c = canonicalize(d)?;
    Ok(match (&c.alg, &c.kind) {
        (Algebra::Sl, Trivial) => ixy(0, 0, Partition::default(), Partition::default()),
        (Algebra::Sl, Natural) => ixy(0, 0, Partition::new(vec![1])?, Partition::default()),
        (Algebra::Sl, Conatural) => ixy(0, 0, Partition::default(), Partition::new(vec![1])?),
        (Algebra::Sl, SPartV(l)) => ixy(0, 0, l.clone(), Partition::default()),
        (Algebra::Sl, SPartVStar(m)) => ixy(0, 0, Partition::default(), m.clone()),
        (Algebra::Sl, SemiInfExterior(_)) => ixy(0, 1, Partition::default(), Partition::default()),
        (Algebra::Sl, SInfV(_)) | (Algebra::Sl, SInfVStar(_)) | (Algebra::Sl, XSlInf(_)) => {
            ixy(1, 0, Partition::default(), Partition::default())
        }
        (Algebra::Sp, XSpInf(_)) => IdealLabel::Isw,
        (Algebra::Sp, Natural) => IdealLabel::SpAnnV,
        (Algebra::OB, Natural) | (Algebra::OD, Natural) => IdealLabel::OAnnV,
        (Algebra::OB, SpinorB(_)) | (Algebra::OD, SpinorD(_)) => IdealLabel::OSpinorIdeal,
        (_, Trivial) => IdealLabel::Augmentation,
        _ => return Err(Error::NotSupported(format!("no annihilator rule for {:?}", c))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::Block;
    use crate::setdesc::SetDescriptor as SD;

    fn odds() -> SD {
        SD::odds()
    }

    #[test]
    fn equivalences() {
        assert!(approx_equiv(&odds(), &odds().with(2, true)).unwrap());
        assert!(!approx_equiv(&odds(), &SD::evens()).unwrap());
        assert!(approx_equiv(&odds(), &odds().sym_diff(&SD::from_finite([1, 2, 4]))).unwrap());
        assert!(approx_equiv(&SD::all(), &odds()).is_err());

        // position-wise tails: (1,2,3,...) vs (5,2,3,...) agree past n=1
        let a = IntSeq::new(vec![], vec![1]).unwrap();
        let b = IntSeq::new(vec![5], vec![1]).unwrap();
        assert!(!sinf_equiv(&a, &b)); // b = (5,6,7,...)
        let b2 = IntSeq::new(vec![5, 2], vec![1]).unwrap_err();
        let _ = b2; // prefix must increase; rebuild the intended example
        let b3 = IntSeq { prefix: vec![5, 2], inc: vec![1] }; // raw: (5,2,3,4,...)
        assert!(sinf_equiv(&a, &b3));
        let c = IntSeq::new(vec![2], vec![1]).unwrap(); // (2,3,4,...)
        assert!(!sinf_equiv(&a, &c));
        assert!(sinf_equiv(&a, &a));

        assert!(spinor_equiv_b(&odds(), &odds().sym_diff(&SD::from_finite([1, 2]))));
        assert!(spinor_equiv_d(&odds(), &odds().sym_diff(&SD::from_finite([1, 2]))));
        assert!(spinor_equiv_b(&odds(), &odds().sym_diff(&SD::from_finite([1]))));
        assert!(!spinor_equiv_d(&odds(), &odds().sym_diff(&SD::from_finite([1]))));
        assert!(!spinor_equiv_b(&odds(), &SD::evens()));
        assert!(!spinor_equiv_d(&odds(), &SD::evens()));
    }

    #[test]
    fn supports() {
        let lam = LimitModuleDescriptor::sl(LimitKind::SemiInfExterior(odds())).unwrap();
        let ind = |s: &SD| seq_from_set(s, ExtScalar::int(1), ExtScalar::zero());
        assert!(!support_oracle(&lam, &ind(&SD::evens())).unwrap());
        assert!(support_oracle(&lam, &ind(&odds().with(2, true).with(1, false))).unwrap());

        let p21 = LimitModuleDescriptor::sl(LimitKind::SPartV(
            Partition::new(vec![2, 1]).unwrap(),
        ))
        .unwrap();
        assert!(support_oracle(&p21, &WeightSeq::from_ints(&[2, 1], 0)).unwrap());
        assert!(!support_oracle(&p21, &WeightSeq::from_ints(&[3], 0)).unwrap());
        assert!(support_oracle(&p21, &WeightSeq::from_ints(&[1, 1, 1], 0)).unwrap());
        assert!(!support_oracle(&p21, &WeightSeq::from_ints(&[2], 0)).unwrap());

        let xsp = LimitModuleDescriptor::new(Algebra::Sp, LimitKind::XSpInf(WeightSeq::zero()))
            .unwrap();
        assert!(support_oracle(&xsp, &WeightSeq::constant(half())).unwrap());
        assert!(!support_oracle(&xsp, &WeightSeq::zero()).unwrap());

        // S^inf_A V with a_i = i: mu = (1,1,1,...) itself is in the support
        let sv = LimitModuleDescriptor::sl(LimitKind::SInfV(
            IntSeq::new(vec![], vec![1]).unwrap(),
        ))
        .unwrap();
        assert!(support_oracle(&sv, &WeightSeq::constant(ExtScalar::int(1))).unwrap());
        assert!(support_oracle(&sv, &WeightSeq::new(
            vec![ExtScalar::int(2), ExtScalar::int(0)],
            vec![ExtScalar::int(1)],
        )).unwrap());
        assert!(!support_oracle(&sv, &WeightSeq::constant(ExtScalar::int(2))).unwrap());
    }

    #[test]
    fn classify_retraction() {
        let d = classify_sl(&WeightSeq::from_ints(&[3], 0)).unwrap();
        assert_eq!(d.kind, LimitKind::SPartV(Partition::new(vec![3]).unwrap()));
        let d = classify_sl(&WeightSeq::constant(ExtScalar::int(1))).unwrap();
        match &d.kind {
            LimitKind::SInfV(a) => {
                assert_eq!((1..=4).map(|n| a.nth(n)).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
            }
            k => panic!("expected SInfV, got {:?}", k),
        }
        let mu = WeightSeq::new(
            vec![
                ExtScalar::int(1),
                ExtScalar::int(2),
                ExtScalar::generic(0),
                ExtScalar::int(-1),
                ExtScalar::int(-2),
                ExtScalar::int(-3),
            ],
            vec![ExtScalar::int(-1)],
        );
        let d = classify_sl(&mu).unwrap();
        assert!(matches!(d.kind, LimitKind::XSlInf(_)));

        // retraction: classify(mu_of(d)) is iso to d
        for seq in [
            WeightSeq::from_ints(&[3], 0),
            WeightSeq::constant(ExtScalar::int(1)),
            WeightSeq::from_ints(&[-5], -2),
            WeightSeq::zero(),
            mu,
        ] {
            let d = classify_sl(&seq).unwrap();
            let back = classify_sl(&mu_of(&d).unwrap()).unwrap();
            assert!(iso_limit(&d, &back).unwrap(), "retraction failed for {}", seq);
        }
    }

    #[test]
    fn isomorphisms() {
        let x0 = LimitModuleDescriptor::sl(LimitKind::XSlInf(WeightSeq::zero())).unwrap();
        let xm1 = LimitModuleDescriptor::sl(LimitKind::XSlInf(WeightSeq::constant(
            ExtScalar::int(-1),
        )))
        .unwrap();
        assert!(iso_limit(&x0, &xm1).unwrap());
        let l1 = LimitModuleDescriptor::sl(LimitKind::SemiInfExterior(odds())).unwrap();
        let l2 = LimitModuleDescriptor::sl(LimitKind::SemiInfExterior(
            odds().sym_diff(&SD::from_finite([2, 4])),
        ))
        .unwrap();
        assert!(iso_limit(&l1, &l2).unwrap());
        let sb = |a: &SD| LimitModuleDescriptor::new(Algebra::OB, LimitKind::SpinorB(a.clone())).unwrap();
        let sd = |a: &SD| LimitModuleDescriptor::new(Algebra::OD, LimitKind::SpinorD(a.clone())).unwrap();
        assert!(iso_limit(&sb(&odds()), &sb(&odds().with(1, false))).unwrap());
        assert!(!iso_limit(&sd(&odds()), &sd(&odds().with(1, false))).unwrap());
        assert!(matches!(
            iso_limit(&sb(&odds()), &LimitModuleDescriptor::new(Algebra::OD, LimitKind::SpinorD(odds())).unwrap()),
            Err(Error::IncomparableCartan)
        ));
    }

    fn two_sided_order() -> BorelDescriptor {
        BorelDescriptor::new(
            vec![Block::Ascending(SD::odds()), Block::Descending(SD::evens())],
            None,
        )
        .unwrap()
    }

    #[test]
    fn hw_exterior() {
        let lam = LimitModuleDescriptor::sl(LimitKind::SemiInfExterior(odds())).unwrap();
        match hw_test_limit(&lam, &two_sided_order()).unwrap() {
            LimitHw::HighestWeight { weight, .. } => {
                assert_eq!(*weight.entry(1), ExtScalar::int(1));
                assert_eq!(*weight.entry(2), ExtScalar::int(0));
            }
            other => panic!("expected highest weight, got {:?}", other),
        }
        assert_eq!(
            hw_test_limit(&lam, &BorelDescriptor::natural()).unwrap(),
            LimitHw::PseudoHighestWeight
        );
        let sv = LimitModuleDescriptor::sl(LimitKind::SInfV(
            IntSeq::new(vec![], vec![1]).unwrap(),
        ))
        .unwrap();
        assert_eq!(
            hw_test_limit(&sv, &BorelDescriptor::natural()).unwrap(),
            LimitHw::PseudoHighestWeight
        );
    }

    #[test]
    fn hw_one_sided_example() {
        // order: 1 < 2 < 3 < (dense rest); mu = eps(i0=3, a, I={1,2}) with a
        // irrational
        let b = BorelDescriptor::new(
            vec![
                Block::Explicit(vec![1, 2, 3]),
                Block::Dense(SD::from_onwards(4)),
            ],
            None,
        )
        .unwrap();
        let mu = WeightSeq::new(
            vec![ExtScalar::int(-1), ExtScalar::int(-1), ExtScalar::generic(0)],
            vec![ExtScalar::zero()],
        );
        let d = LimitModuleDescriptor::sl(LimitKind::XSlInf(mu.clone())).unwrap();
        match hw_test_limit(&d, &b).unwrap() {
            LimitHw::HighestWeight { sided, .. } => assert_eq!(sided, Some(Sided::OneSided)),
            other => panic!("expected one-sided highest weight, got {:?}", other),
        }
        // the natural order works too for this one-sided module
        match hw_test_limit(&d, &BorelDescriptor::natural()).unwrap() {
            LimitHw::HighestWeight { sided, .. } => assert_eq!(sided, Some(Sided::OneSided)),
            other => panic!("expected highest weight, got {:?}", other),
        }
    }

    #[test]
    fn hw_two_sided_example() {
        // eps(A) for A = odds against 1 < 3 < 5 < ... < 6 < 4 < 2
        let mu = seq_from_set(&odds(), ExtScalar::int(-1), ExtScalar::zero());
        let d = LimitModuleDescriptor::sl(LimitKind::XSlInf(mu)).unwrap();
        match hw_test_limit(&d, &two_sided_order()).unwrap() {
            LimitHw::HighestWeight { sided, weight } => {
                assert_eq!(sided, Some(Sided::TwoSided));
                assert_eq!(*weight.entry(1), ExtScalar::int(-1));
                assert_eq!(*weight.entry(2), ExtScalar::int(0));
            }
            other => panic!("expected two-sided highest weight, got {:?}", other),
        }
        // natural order: pseudo (Int^- = odds is an antichain-breaking set)
        assert_eq!(
            hw_test_limit(&d, &BorelDescriptor::natural()).unwrap(),
            LimitHw::Neither
        );
    }

    #[test]
    fn hw_sp_examples() {
        // X_sp(1^inf) against sigma == -1: pseudo
        let d = LimitModuleDescriptor::new(
            Algebra::Sp,
            LimitKind::XSpInf(WeightSeq::constant(ExtScalar::int(1))),
        )
        .unwrap();
        let b = BorelDescriptor::natural_signed(SD::empty());
        assert_eq!(hw_test_limit(&d, &b).unwrap(), LimitHw::PseudoHighestWeight);
        // X_sp(0^inf) against the same Borel: highest weight (1/2)^inf
        let d0 = LimitModuleDescriptor::new(Algebra::Sp, LimitKind::XSpInf(WeightSeq::zero()))
            .unwrap();
        match hw_test_limit(&d0, &b).unwrap() {
            LimitHw::HighestWeight { weight, .. } => {
                assert!(weight.seq_eq(&WeightSeq::constant(half())));
            }
            other => panic!("expected highest weight, got {:?}", other),
        }
        // sigma == +1 everywhere: omega = (-1)^inf, mu = 1^inf differs by 2
        // at every index: Neither (classes clash)
        let bplus = BorelDescriptor::natural_signed(SD::all());
        assert_eq!(hw_test_limit(&d, &bplus).unwrap(), LimitHw::Neither);
    }

    #[test]
    fn hw_spinors_and_natural() {
        let sb = LimitModuleDescriptor::new(Algebra::OB, LimitKind::SpinorB(odds())).unwrap();
        let b = BorelDescriptor::natural_signed(odds().with(2, true));
        match hw_test_limit(&sb, &b).unwrap() {
            LimitHw::HighestWeight { weight, .. } => {
                assert_eq!(*weight.entry(2), half());
                assert_eq!(*weight.entry(4), half().checked_neg());
            }
            other => panic!("expected highest weight, got {:?}", other),
        }
        let sd = LimitModuleDescriptor::new(Algebra::OD, LimitKind::SpinorD(odds())).unwrap();
        // one flipped index: odd symmetric difference, not a highest weight
        assert_eq!(
            hw_test_limit(&sd, &BorelDescriptor::natural_signed(odds().with(2, true))).unwrap(),
            LimitHw::PseudoHighestWeight
        );

        let v = LimitModuleDescriptor::new(Algebra::Sp, LimitKind::Natural).unwrap();
        match hw_test_limit(&v, &BorelDescriptor::natural_signed(SD::empty())).unwrap() {
            LimitHw::HighestWeight { weight, .. } => {
                assert_eq!(*weight.entry(1), ExtScalar::int(-1));
            }
            other => panic!("expected highest weight, got {:?}", other),
        }
        // no order minimum: pseudo
        let desc = BorelDescriptor::new(
            vec![Block::Descending(SD::all())],
            Some(SD::empty()),
        )
        .unwrap();
        assert_eq!(hw_test_limit(&v, &desc).unwrap(), LimitHw::PseudoHighestWeight);
    }

    #[test]
    fn minuscule_and_annihilators() {
        let lam = LimitModuleDescriptor::sl(LimitKind::SemiInfExterior(odds())).unwrap();
        assert!(is_minuscule(&lam).unwrap());
        let p21 = LimitModuleDescriptor::sl(LimitKind::SPartV(
            Partition::new(vec![2, 1]).unwrap(),
        ))
        .unwrap();
        assert!(!is_minuscule(&p21).unwrap());
        let mu = WeightSeq::new(
            vec![
                ExtScalar::int(1),
                ExtScalar::int(2),
                ExtScalar::generic(0),
            ],
            vec![ExtScalar::int(-1)],
        );
        let x = LimitModuleDescriptor::sl(LimitKind::XSlInf(mu)).unwrap();
        assert!(!is_minuscule(&x).unwrap());
        assert_eq!(annihilator_label(&x).unwrap().to_string(), "I(1,0;[];[])");
        assert_eq!(annihilator_label(&lam).unwrap().to_string(), "I(0,1;[];[])");
        assert_eq!(
            annihilator_label(&p21).unwrap(),
            IdealLabel::Ixy {
                x: 0,
                y: 0,
                lam: Partition::new(vec![2, 1]).unwrap(),
                mu: Partition::default()
            }
        );
        let sb1 = LimitModuleDescriptor::new(Algebra::OB, LimitKind::SpinorB(odds())).unwrap();
        let sb2 = LimitModuleDescriptor::new(Algebra::OB, LimitKind::SpinorB(SD::evens())).unwrap();
        assert_eq!(annihilator_label(&sb1).unwrap(), annihilator_label(&sb2).unwrap());
        assert_eq!(annihilator_label(&sb1).unwrap(), IdealLabel::OSpinorIdeal);
        let vsp = LimitModuleDescriptor::new(Algebra::Sp, LimitKind::Natural).unwrap();
        assert_ne!(annihilator_label(&vsp).unwrap(), IdealLabel::Isw);
        // every S^inf_A V shares the nonintegrable label
        let sv = LimitModuleDescriptor::sl(LimitKind::SInfV(
            IntSeq::new(vec![], vec![1]).unwrap(),
        ))
        .unwrap();
        assert_eq!(annihilator_label(&sv).unwrap().to_string(), "I(1,0;[];[])");
    }

    #[test]
    fn five_types() {
        let lam = LimitModuleDescriptor::sl(LimitKind::SemiInfExterior(odds())).unwrap();
        assert_eq!(five_type(&lam).unwrap(), FiveType::I);
        let sv = LimitModuleDescriptor::sl(LimitKind::SInfV(
            IntSeq::new(vec![], vec![1]).unwrap(),
        ))
        .unwrap();
        assert_eq!(five_type(&sv).unwrap(), FiveType::II);
        let svs = LimitModuleDescriptor::sl(LimitKind::SInfVStar(
            IntSeq::new(vec![], vec![1]).unwrap(),
        ))
        .unwrap();
        assert_eq!(five_type(&svs).unwrap(), FiveType::III);
        let p = LimitModuleDescriptor::sl(LimitKind::SPartV(Partition::new(vec![2, 1]).unwrap()))
            .unwrap();
        assert_eq!(five_type(&p).unwrap(), FiveType::IV);
        let x = LimitModuleDescriptor::sl(LimitKind::XSlInf(WeightSeq::new(
            vec![ExtScalar::generic(0)],
            vec![ExtScalar::int(-1)],
        )))
        .unwrap();
        assert!(matches!(five_type(&x), Err(Error::NotIntegrable)));
    }
}
