//! Monomial realizations: gl/sl acting on twisted Laurent-type monomials
//! x^mu by x_i d_j, and sp acting by degree-two Weyl-algebra elements.

use crate::borel::BorelDescriptor;
use crate::degrees::GtEngine;
use crate::error::{Error, Result};
use crate::rootdata::{positive_roots, LieType, Root};
use crate::scalar::{ExtScalar, Poly};
use crate::setdesc::SetDescriptor;
use crate::weight::{half, IndexSets, Weight};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exponent: Weight,
}

impl Monomial {
    pub fn new(exponent: Weight) -> Self {
        Monomial { exponent }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Poly,
    pub mono: Monomial,
}

/// Combine a list of terms into exponent -> coefficient, dropping zeros.
pub fn combine(terms: impl IntoIterator<Item = Term>) -> BTreeMap<Weight, Poly> {
    let mut out: BTreeMap<Weight, Poly> = BTreeMap::new();
    for t in terms {
        let e = out.entry(t.mono.exponent).or_insert_with(Poly::zero);
        *e = e.add(&t.coeff);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// e_ij . x^mu = mu_j x^(mu + e_i - e_j), including the diagonal case
/// e_ii . x^mu = mu_i x^mu.
pub fn act_gl(i: u64, j: u64, m: &Monomial) -> Option<Term> {
    let mu = &m.exponent;
    let coeff = Poly::from_scalar(mu.entry(j));
    if coeff.is_zero() {
        return None;
    }
    let exp = if i == j {
        mu.clone()
    } else {
        mu.add_at(i, 1).add_at(j, -1)
    };
    Some(Term { coeff, mono: Monomial::new(exp) })
}

/// Symplectic action of the root vector attached to `root`:
///   e_{e_i+e_j} -> x_i x_j,   e_{2e_i} -> x_i^2 / 2,
///   e_{-e_i-e_j} -> -d_i d_j, e_{-2e_i} -> -d_i^2 / 2,
///   e_{e_i-e_j} -> x_i d_j.
pub fn act_sp(root: &Root, m: &Monomial) -> Option<Term> {
    let mu = &m.exponent;
    let p = |i: u64| Poly::from_scalar(mu.entry(i));
    let (coeff, exp) = match *root {
        Root::EiPlusEj(i, j) => (Poly::one(), mu.add_at(i, 1).add_at(j, 1)),
        Root::TwoEi(i) => (Poly::ratio(1, 2), mu.add_at(i, 2)),
        Root::MinusEiMinusEj(i, j) => (
            p(i).mul(&p(j)).neg(),
            mu.add_at(i, -1).add_at(j, -1),
        ),
        Root::MinusTwoEi(i) => (
            p(i).mul(&p(i).add(&Poly::int(-1))).scale(&BigRational::new((-1).into(), 2.into())),
            mu.add_at(i, -2),
        ),
        Root::EiMinusEj(i, j) => (p(j), mu.add_at(i, 1).add_at(j, -1)),
        _ => return None,
    };
    if coeff.is_zero() {
        return None;
    }
    Some(Term { coeff, mono: Monomial::new(exp) })
}

/// h_i = x_i d_i + 1/2 eigenvalue on x^mu.
pub fn sp_cartan_eigenvalue(i: u64, m: &Monomial) -> Poly {
    Poly::from_scalar(m.exponent.entry(i)).add(&Poly::ratio(1, 2))
}

// ---- abstract sp(2n) brackets via the 2n x 2n matrix model -------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpElem {
    Root(Root),
    H(u64),
}

type Mat = BTreeMap<(u64, u64), BigRational>;

fn sp_matrix(e: &SpElem, n: u64) -> Mat {
    let mut m = Mat::new();
    let mut put = |r: u64, c: u64, v: i64| {
        m.insert((r, c), BigRational::from_integer(v.into()));
    };
    match *e {
        SpElem::Root(Root::EiMinusEj(i, j)) => {
            put(i, j, 1);
            put(n + j, n + i, -1);
        }
        SpElem::Root(Root::EiPlusEj(i, j)) => {
            put(i, n + j, 1);
            put(j, n + i, 1);
        }
        SpElem::Root(Root::TwoEi(i)) => put(i, n + i, 1),
        SpElem::Root(Root::MinusEiMinusEj(i, j)) => {
            put(n + i, j, 1);
            put(n + j, i, 1);
        }
        SpElem::Root(Root::MinusTwoEi(i)) => put(n + i, i, 1),
        SpElem::Root(_) => panic!("not a symplectic root"),
        SpElem::H(i) => {
            put(i, i, 1);
            put(n + i, n + i, -1);
        }
    }
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = Mat::new();
    for (&(i, k), va) in a {
        for (&(k2, j), vb) in b {
            if k == k2 {
                let e = out.entry((i, j)).or_insert_with(BigRational::zero);
                *e += va * vb;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    let mut out = a.clone();
    for (k, v) in b {
        let e = out.entry(*k).or_insert_with(BigRational::zero);
        *e -= v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// [x, y] in sp(2n), expanded over the root-vector / Cartan basis.
/// Panics if the commutator leaves the basis span (it cannot).
pub fn sp_bracket(x: &Root, y: &Root, n: u64) -> Vec<(SpElem, BigRational)> {
    let mx = sp_matrix(&SpElem::Root(*x), n);
    let my = sp_matrix(&SpElem::Root(*y), n);
    let comm = mat_sub(&mat_mul(&mx, &my), &mat_mul(&my, &mx));
    let mut out: Vec<(SpElem, BigRational)> = Vec::new();
    let mut residue = comm.clone();
    // diagonal part -> Cartan
    for i in 1..=n {
        if let Some(v) = comm.get(&(i, i)) {
            out.push((SpElem::H(i), v.clone()));
            residue = mat_sub(&residue, &{
                let mut s = Mat::new();
                for (k, w) in sp_matrix(&SpElem::H(i), n) {
                    s.insert(k, w * v);
                }
                s
            });
        }
    }
    // root part: read each root's coefficient off a designated matrix entry
    let all = crate::rootdata::roots(LieType::C(n as u32), 0);
    for r in all {
        let probe = match r {
            Root::EiMinusEj(i, j) => (i, j),
            Root::EiPlusEj(i, j) => (i, n + j),
            Root::TwoEi(i) => (i, n + i),
            Root::MinusEiMinusEj(i, j) => (n + i, j),
            Root::MinusTwoEi(i) => (n + i, i),
            _ => continue,
        };
        if let Some(v) = residue.clone().get(&probe) {
            out.push((SpElem::Root(r), v.clone()));
            residue = mat_sub(&residue, &{
                let mut s = Mat::new();
                for (k, w) in sp_matrix(&SpElem::Root(r), n) {
                    s.insert(k, w * v);
                }
                s
            });
        }
    }
    assert!(residue.is_empty(), "sp commutator left the basis span");
    out
}

/// Apply a Cartan+root combination to a monomial (sp realization).
pub fn sp_apply_combination(comb: &[(SpElem, BigRational)], m: &Monomial) -> Vec<Term> {
    let mut out = Vec::new();
    for (e, c) in comb {
        match e {
            SpElem::H(i) => {
                let coeff = sp_cartan_eigenvalue(*i, m).scale(c);
                if !coeff.is_zero() {
                    out.push(Term { coeff, mono: m.clone() });
                }
            }
            SpElem::Root(r) => {
                if let Some(t) = act_sp(r, m) {
                    out.push(Term { coeff: t.coeff.scale(c), mono: t.mono });
                }
            }
        }
    }
    out
}

/// Fidelity of the gl realization at one monomial:
/// e_ab e_cd - e_cd e_ab = delta_bc e_ad - delta_da e_cb.
pub fn gl_bracket_check(ab: (u64, u64), cd: (u64, u64), m: &Monomial) -> bool {
    let act1 = |p: (u64, u64), q: (u64, u64), m: &Monomial| -> Vec<Term> {
        match act_gl(q.0, q.1, m) {
            None => vec![],
            Some(t) => match act_gl(p.0, p.1, &t.mono) {
                None => vec![],
                Some(u) => vec![Term { coeff: u.coeff.mul(&t.coeff), mono: u.mono }],
            },
        }
    };
    let mut lhs = act1(ab, cd, m);
    for t in act1(cd, ab, m) {
        lhs.push(Term { coeff: t.coeff.neg(), mono: t.mono });
    }
    let mut rhs: Vec<Term> = Vec::new();
    if ab.1 == cd.0 {
        if let Some(t) = act_gl(ab.0, cd.1, m) {
            rhs.push(t);
        }
    }
    if cd.1 == ab.0 {
        if let Some(t) = act_gl(cd.0, ab.1, m) {
            rhs.push(Term { coeff: t.coeff.neg(), mono: t.mono });
        }
    }
    combine(lhs) == combine(rhs)
}

/// Fidelity of the sp realization at one monomial.
pub fn sp_bracket_check(x: &Root, y: &Root, n: u64, m: &Monomial) -> bool {
    let act1 = |p: &Root, q: &Root, m: &Monomial| -> Vec<Term> {
        match act_sp(q, m) {
            None => vec![],
            Some(t) => match act_sp(p, &t.mono) {
                None => vec![],
                Some(u) => vec![Term { coeff: u.coeff.mul(&t.coeff), mono: u.mono }],
            },
        }
    };
    let mut lhs = act1(x, y, m);
    for t in act1(y, x, m) {
        lhs.push(Term { coeff: t.coeff.neg(), mono: t.mono });
    }
    let rhs = sp_apply_combination(&sp_bracket(x, y, n), m);
    combine(lhs) == combine(rhs)
}

// ---- the simple bounded modules X(mu) -----------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Sl,
    Sp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisStatus {
    InBasis,
    InVPlus,
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModule {
    pub family: Family,
    pub mu: Weight,
}

impl XModule {
    pub fn sl(mu: Weight) -> Self {
        XModule { family: Family::Sl, mu }
    }

    pub fn sp(mu: Weight) -> Self {
        XModule { family: Family::Sp, mu }
    }

    /// Number of x-variables.
    pub fn vars(&self) -> usize {
        self.mu.rank()
    }

    pub fn basis_status(&self, m: &Monomial) -> BasisStatus {
        let lam = &m.exponent;
        let diff = match lam.int_diff(&self.mu) {
            Some(d) => d,
            None => return BasisStatus::Outside,
        };
        let total: BigInt = diff.iter().sum();
        let lattice_ok = match self.family {
            Family::Sl => total.is_zero(),
            Family::Sp => (&total % 2u8).is_zero(),
        };
        if !lattice_ok {
            return BasisStatus::Outside;
        }
        let s_mu: IndexSets = self.mu.int_sets();
        let s_lam: IndexSets = lam.int_sets();
        if s_lam.plus == s_mu.plus {
            BasisStatus::InBasis
        } else if s_lam.plus.is_superset(&s_mu.plus) {
            BasisStatus::InVPlus
        } else {
            BasisStatus::Outside
        }
    }

    /// Action on the quotient X(mu) = V(mu) / V+(mu): act, then delete the
    /// terms that fall into V+.
    pub fn act(&self, root: &Root, m: &Monomial) -> Result<Vec<Term>> {
        if self.basis_status(m) != BasisStatus::InBasis {
            return Err(Error::NotInBasis);
        }
        let raw = match self.family {
            Family::Sl => match *root {
                Root::EiMinusEj(i, j) => act_gl(i, j, m).into_iter().collect(),
                _ => {
                    return Err(Error::NotSupported(format!(
                        "root {} is not an sl root",
                        root
                    )))
                }
            },
            Family::Sp => act_sp(root, m).into_iter().collect::<Vec<_>>(),
        };
        let mut out = Vec::new();
        for t in raw {
            match self.basis_status(&t.mono) {
                BasisStatus::InBasis => out.push(t),
                BasisStatus::InVPlus => {}
                BasisStatus::Outside => {
                    debug_assert!(false, "action left V(mu)");
                }
            }
        }
        Ok(out)
    }

    /// Weight of a basis monomial (sp exponents are shifted by 1/2).
    pub fn weight_of(&self, m: &Monomial) -> Weight {
        match self.family {
            Family::Sl => m.exponent.clone(),
            Family::Sp => Weight::new(
                m.exponent
                    .entries
                    .iter()
                    .map(|e| e.checked_add(&half()).expect("sp exponent + 1/2"))
                    .collect(),
            ),
        }
    }

    pub fn lie_type(&self) -> LieType {
        match self.family {
            Family::Sl => LieType::A(self.vars() as u32 - 1),
            Family::Sp => LieType::C(self.vars() as u32),
        }
    }

    /// Monomials x^(mu + delta) with ||delta||_inf <= radius that lie in the
    /// basis.
    pub fn basis_box(&self, radius: i64) -> Vec<Monomial> {
        let rank = self.vars();
        let mut out = Vec::new();
        let mut delta = vec![-radius; rank];
        'outer: loop {
            let mut w = self.mu.clone();
            for (k, d) in delta.iter().enumerate() {
                w.set_entry(k as u64 + 1, w.entry(k as u64 + 1).add_int(*d));
            }
            let m = Monomial::new(w);
            if self.basis_status(&m) == BasisStatus::InBasis {
                out.push(m);
            }
            let mut idx = 0;
            loop {
                if idx == rank {
                    break 'outer;
                }
                delta[idx] += 1;
                if delta[idx] <= radius {
                    break;
                }
                delta[idx] = -radius;
                idx += 1;
            }
        }
        out
    }
}

/// Closed-form singularity criterion for sl: x^lambda is killed by the
/// quotient action of e_{e_i - e_j} iff lambda_j = 0 or lambda_i = -1.
pub fn sl_singular_closed_form(module: &XModule, b: &BorelDescriptor, m: &Monomial) -> Result<bool> {
    let pos = positive_roots(b, module.lie_type(), module.vars() as u32)?;
    let lam = &m.exponent;
    for r in pos {
        if let Root::EiMinusEj(i, j) = r {
            let lj_zero = lam.entry(j).is_zero();
            let li_neg1 = *lam.entry(i) == ExtScalar::int(-1);
            if !lj_zero && !li_neg1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Monomials in `window` annihilated by every positive root vector of `b`
/// in the quotient module.
pub fn singular_monomials(
    module: &XModule,
    b: &BorelDescriptor,
    window: &[Monomial],
) -> Result<Vec<Monomial>> {
    let pos = positive_roots(b, module.lie_type(), module.vars() as u32)?;
    let mut out = Vec::new();
    'mono: for m in window {
        if module.basis_status(m) != BasisStatus::InBasis {
            continue;
        }
        for r in &pos {
            if !module.act(r, m)?.is_empty() {
                continue 'mono;
            }
        }
        out.push(m.clone());
    }
    Ok(out)
}

// ---- character models ----------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterModel {
    /// Finite-dimensional gl module with dominant integral highest weight.
    FiniteDimGL(Vec<i64>),
    /// Spin module of o(2n+1): all (+-1/2)^n, multiplicity one.
    SpinorB(usize),
    /// Half-spin modules of o(2n): even / odd number of -1/2 entries.
    SpinorDPlus(usize),
    SpinorDMinus(usize),
    /// Shale-Weil halves: mu + (1/2)^n with mu in Z_{>=0}^n, |mu| even/odd.
    ShaleWeilEven(usize),
    ShaleWeilOdd(usize),
}

impl CharacterModel {
    pub fn finite_dim_gl(lambda: Vec<i64>) -> Result<Self> {
        if !crate::degrees::is_dominant(&lambda) {
            return Err(Error::NotDominant(format!("{:?}", lambda)));
        }
        Ok(CharacterModel::FiniteDimGL(lambda))
    }

    pub fn rank(&self) -> usize {
        match self {
            CharacterModel::FiniteDimGL(l) => l.len(),
            CharacterModel::SpinorB(n)
            | CharacterModel::SpinorDPlus(n)
            | CharacterModel::SpinorDMinus(n)
            | CharacterModel::ShaleWeilEven(n)
            | CharacterModel::ShaleWeilOdd(n) => *n,
        }
    }

    pub fn multiplicity(&self, nu: &Weight) -> Result<u128> {
        if nu.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: nu.rank() });
        }
        match self {
            CharacterModel::FiniteDimGL(l) => {
                let ints = match nu.as_ints() {
                    Some(v) => v,
                    None => return Ok(0),
                };
                let as_i64: Option<Vec<i64>> = ints
                    .iter()
                    .map(|b| i64::try_from(b.clone()).ok())
                    .collect();
                match as_i64 {
                    Some(v) => GtEngine::new().mult(l, &v),
                    None => Ok(0),
                }
            }
            CharacterModel::SpinorB(_) => {
                Ok(nu.entries.iter().all(|e| *e == half() || *e == half().checked_neg()) as u128)
            }
            CharacterModel::SpinorDPlus(_) | CharacterModel::SpinorDMinus(_) => {
                let mh = half().checked_neg();
                if !nu.entries.iter().all(|e| *e == half() || *e == mh) {
                    return Ok(0);
                }
                let minus = nu.entries.iter().filter(|e| **e == mh).count();
                let want_even = matches!(self, CharacterModel::SpinorDPlus(_));
                Ok(((minus % 2 == 0) == want_even) as u128)
            }
            CharacterModel::ShaleWeilEven(_) | CharacterModel::ShaleWeilOdd(_) => {
                let mut total = BigInt::zero();
                for e in &nu.entries {
                    let shifted = e.checked_sub(&half())?;
                    match shifted.as_int() {
                        Some(k) if k >= BigInt::zero() => total += k,
                        _ => return Ok(0),
                    }
                }
                let even = (&total % 2u8).is_zero();
                let want_even = matches!(self, CharacterModel::ShaleWeilEven(_));
                Ok((even == want_even) as u128)
            }
        }
    }
}

/// Borel with natural order and all signs -1; handy in tests.
pub fn natural_minus_borel() -> BorelDescriptor {
    BorelDescriptor::natural_signed(SetDescriptor::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Weight;

    fn mono(v: &[i64]) -> Monomial {
        Monomial::new(Weight::from_ints(v))
    }

    #[test]
    fn gl_action_basic() {
        // e_12 . x^(0,1) = x^(1,0)
        let t = act_gl(1, 2, &mono(&[0, 1])).unwrap();
        assert_eq!(t.coeff, Poly::one());
        assert_eq!(t.mono, mono(&[1, 0]));
        // e_12 . x^(1,0) = 0
        assert!(act_gl(1, 2, &mono(&[1, 0])).is_none());
    }

    #[test]
    fn sp_action_basic() {
        // e_{-2e_1} . x^(3,0) = -3 x^(1,0)
        let t = act_sp(&Root::MinusTwoEi(1), &mono(&[3, 0])).unwrap();
        assert_eq!(t.coeff, Poly::int(-3));
        assert_eq!(t.mono, mono(&[1, 0]));
        // e_{2e_1} . x^(0,0) = (1/2) x^(2,0)
        let t = act_sp(&Root::TwoEi(1), &mono(&[0, 0])).unwrap();
        assert_eq!(t.coeff, Poly::ratio(1, 2));
        // e_{-e_1-e_2} . x^(1,1) = -x^(0,0)
        let t = act_sp(&Root::MinusEiMinusEj(1, 2), &mono(&[1, 1])).unwrap();
        assert_eq!(t.coeff, Poly::int(-1));
    }

    #[test]
    fn gl_bracket_samples() {
        let ms = [mono(&[2, 1, 0]), mono(&[-1, 3, 2]), mono(&[0, 0, 5])];
        let n = 3u64;
        for m in &ms {
            for a in 1..=n {
                for b in 1..=n {
                    for c in 1..=n {
                        for d in 1..=n {
                            assert!(gl_bracket_check((a, b), (c, d), m));
                        }
                    }
                }
            }
        }
        // with a generic exponent
        let mg = Monomial::new(Weight::new(vec![
            ExtScalar::generic(0),
            ExtScalar::int(2),
            ExtScalar::generic_shift(0, -1),
        ]));
        assert!(gl_bracket_check((1, 3), (3, 1), &mg));
    }

    #[test]
    fn sp_bracket_samples() {
        let n = 2u64;
        let all: Vec<Root> = crate::rootdata::roots(LieType::C(2), 0).into_iter().collect();
        let ms = [mono(&[2, 1]), mono(&[0, 3])];
        for m in &ms {
            for x in &all {
                for y in &all {
                    assert!(sp_bracket_check(x, y, n, m), "[{},{}] at {:?}", x, y, m);
                }
            }
        }
    }

    #[test]
    fn sp_bracket_long_roots_give_cartan() {
        let b = sp_bracket(&Root::TwoEi(1), &Root::MinusTwoEi(1), 2);
        assert_eq!(b, vec![(SpElem::H(1), BigRational::from_integer(1.into()))]);
    }

    #[test]
    fn basis_status_sl() {
        // mu = (-1, 1): basis = weights with integer zero-sum diff and the
        // same Int+ set {2}
        let x = XModule::sl(Weight::from_ints(&[-1, 1]));
        assert_eq!(x.basis_status(&mono(&[-2, 2])), BasisStatus::InBasis);
        assert_eq!(x.basis_status(&mono(&[0, 0])), BasisStatus::InVPlus);
        assert_eq!(x.basis_status(&mono(&[-1, 2])), BasisStatus::Outside);
        assert_eq!(x.basis_status(&mono(&[1, -1])), BasisStatus::Outside);
    }

    #[test]
    fn quotient_action_drops_vplus() {
        // e_12 . x^(-1,1) lands at (0,0), which is in V+ for mu = (-1,1)
        let x = XModule::sl(Weight::from_ints(&[-1, 1]));
        let out = x.act(&Root::EiMinusEj(1, 2), &mono(&[-1, 1])).unwrap();
        assert!(out.is_empty());
        let out = x.act(&Root::EiMinusEj(2, 1), &mono(&[-1, 1])).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].mono, mono(&[-2, 2]));
    }

    #[test]
    fn singular_shale_weil() {
        // X_sp(0^2) with the fixed symplectic Borel: x^0 is singular of
        // weight (1/2, 1/2)
        let x = XModule::sp(Weight::from_ints(&[0, 0]));
        let b = BorelDescriptor::bn_descending(2);
        let window = x.basis_box(3);
        let sing = singular_monomials(&x, &b, &window).unwrap();
        assert_eq!(sing, vec![mono(&[0, 0])]);
        assert_eq!(
            x.weight_of(&sing[0]),
            Weight::new(vec![half(), half()])
        );
    }

    #[test]
    fn closed_form_matches_direct() {
        let x = XModule::sl(Weight::from_ints(&[-1, 5, 0]));
        let b = BorelDescriptor::natural();
        for m in x.basis_box(2) {
            let direct = singular_monomials(&x, &b, std::slice::from_ref(&m)).unwrap();
            let closed = sl_singular_closed_form(&x, &b, &m).unwrap();
            assert_eq!(!direct.is_empty(), closed, "{:?}", m);
        }
    }

    #[test]
    fn character_models() {
        let cm = CharacterModel::finite_dim_gl(vec![1, 0, 0]).unwrap();
        assert_eq!(cm.multiplicity(&Weight::from_ints(&[0, 1, 0])).unwrap(), 1);
        assert_eq!(cm.multiplicity(&Weight::from_ints(&[1, 1, 0])).unwrap(), 0);
        let sw = CharacterModel::ShaleWeilEven(2);
        let w = Weight::new(vec![half(), half()]);
        assert_eq!(sw.multiplicity(&w).unwrap(), 1);
        let w1 = Weight::new(vec![half().add_int(1), half()]);
        assert_eq!(sw.multiplicity(&w1).unwrap(), 0);
        assert_eq!(CharacterModel::ShaleWeilOdd(2).multiplicity(&w1).unwrap(), 1);
        let sb = CharacterModel::SpinorB(2);
        assert_eq!(
            sb.multiplicity(&Weight::new(vec![half(), half().checked_neg()])).unwrap(),
            1
        );
        let sd = CharacterModel::SpinorDPlus(2);
        assert_eq!(
            sd.multiplicity(&Weight::new(vec![half(), half().checked_neg()])).unwrap(),
            0
        );
    }
}
