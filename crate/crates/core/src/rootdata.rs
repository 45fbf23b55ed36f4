//! Root systems of types A/B/C/D at finite rank and in the finitary limit,
//! Borel-dependent positive systems, lattices, and the dot action.

use crate::borel::BorelDescriptor;
use crate::error::{Error, Result};
use crate::scalar::ExtScalar;
use crate::weight::{Weight, WeightSeq};
use num::bigint::BigInt;
use num::Zero;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    AInf,
    BInf,
    CInf,
    DInf,
}

impl LieType {
    /// Number of epsilon coordinates in play; for infinite types this is the
    /// requested window.
    pub fn index_bound(&self, window: u32) -> u32 {
        match self {
            LieType::A(n) => n + 1,
            LieType::B(n) | LieType::C(n) | LieType::D(n) => *n,
            _ => window,
        }
    }

    pub fn series(&self) -> char {
        match self {
            LieType::A(_) | LieType::AInf => 'A',
            LieType::B(_) | LieType::BInf => 'B',
            LieType::C(_) | LieType::CInf => 'C',
            LieType::D(_) | LieType::DInf => 'D',
        }
    }
}

/// Roots in epsilon coordinates. Sum roots are stored with i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    EiMinusEj(u64, u64),
    EiPlusEj(u64, u64),
    MinusEiMinusEj(u64, u64),
    Ei(u64),
    MinusEi(u64),
    TwoEi(u64),
    MinusTwoEi(u64),
}

impl Root {
    /// Normalized root `s_i e_i + s_j e_j` (signs ±1); `i == j` yields a long
    /// root, opposite signs at equal indices are rejected.
    pub fn from_signed_pair(si: i8, i: u64, sj: i8, j: u64) -> Option<Root> {
        if i == j {
            if si != sj {
                return None;
            }
            return Some(if si > 0 { Root::TwoEi(i) } else { Root::MinusTwoEi(i) });
        }
        let ((si, i), (sj, j)) = if i < j { ((si, i), (sj, j)) } else { ((sj, j), (si, i)) };
        Some(match (si > 0, sj > 0) {
            (true, true) => Root::EiPlusEj(i, j),
            (false, false) => Root::MinusEiMinusEj(i, j),
            (true, false) => Root::EiMinusEj(i, j),
            (false, true) => Root::EiMinusEj(j, i),
        })
    }

    pub fn negate(&self) -> Root {
        match *self {
            Root::EiMinusEj(i, j) => Root::EiMinusEj(j, i),
            Root::EiPlusEj(i, j) => Root::MinusEiMinusEj(i, j),
            Root::MinusEiMinusEj(i, j) => Root::EiPlusEj(i, j),
            Root::Ei(i) => Root::MinusEi(i),
            Root::MinusEi(i) => Root::Ei(i),
            Root::TwoEi(i) => Root::MinusTwoEi(i),
            Root::MinusTwoEi(i) => Root::TwoEi(i),
        }
    }

    /// Nonzero coordinates (index, coefficient).
    pub fn coeffs(&self) -> Vec<(u64, i64)> {
        match *self {
            Root::EiMinusEj(i, j) => vec![(i, 1), (j, -1)],
            Root::EiPlusEj(i, j) => vec![(i, 1), (j, 1)],
            Root::MinusEiMinusEj(i, j) => vec![(i, -1), (j, -1)],
            Root::Ei(i) => vec![(i, 1)],
            Root::MinusEi(i) => vec![(i, -1)],
            Root::TwoEi(i) => vec![(i, 2)],
            Root::MinusTwoEi(i) => vec![(i, 2 * -1)],
        }
    }

    pub fn support(&self) -> Vec<u64> {
        self.coeffs().into_iter().map(|(i, _)| i).collect()
    }

    /// Add the root to a finite-rank weight.
    pub fn add_to(&self, w: &Weight) -> Weight {
        let mut out = w.clone();
        for (i, c) in self.coeffs() {
            out.set_entry(i, out.entry(i).add_int(c));
        }
        out
    }

    /// The sum of two roots as coordinate data, when nonzero; used for
    /// root-system closure tests.
    pub fn sum_coeffs(&self, other: &Root) -> Vec<(u64, i64)> {
        let mut m: std::collections::BTreeMap<u64, i64> = std::collections::BTreeMap::new();
        for (i, c) in self.coeffs().into_iter().chain(other.coeffs()) {
            *m.entry(i).or_insert(0) += c;
        }
        m.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    /// Is `v` (as coordinate data) a root of the given type?
    pub fn from_coeffs(v: &[(u64, i64)], ty: LieType) -> Option<Root> {
        let r = match v {
            [(i, 1), (j, -1)] => Root::EiMinusEj(*i, *j),
            [(i, -1), (j, 1)] => Root::EiMinusEj(*j, *i),
            [(i, 1), (j, 1)] => Root::EiPlusEj(*i, *j),
            [(i, -1), (j, -1)] => Root::MinusEiMinusEj(*i, *j),
            [(i, 1)] => Root::Ei(*i),
            [(i, -1)] => Root::MinusEi(*i),
            [(i, 2)] => Root::TwoEi(*i),
            [(i, -2)] => Root::MinusTwoEi(*i),
            _ => return None,
        };
        let ok = match ty.series() {
            'A' => matches!(r, Root::EiMinusEj(..)),
            'B' => matches!(r, Root::EiMinusEj(..) | Root::EiPlusEj(..) | Root::MinusEiMinusEj(..) | Root::Ei(..) | Root::MinusEi(..)),
            'C' => matches!(r, Root::EiMinusEj(..) | Root::EiPlusEj(..) | Root::MinusEiMinusEj(..) | Root::TwoEi(..) | Root::MinusTwoEi(..)),
            'D' => matches!(r, Root::EiMinusEj(..) | Root::EiPlusEj(..) | Root::MinusEiMinusEj(..)),
            _ => unreachable!(),
        };
        ok.then_some(r)
    }

    pub fn sum(&self, other: &Root, ty: LieType) -> Option<Root> {
        let s = self.sum_coeffs(other);
        if s.is_empty() {
            return None;
        }
        Root::from_coeffs(&s, ty)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::EiMinusEj(i, j) => write!(f, "e{}-e{}", i, j),
            Root::EiPlusEj(i, j) => write!(f, "e{}+e{}", i, j),
            Root::MinusEiMinusEj(i, j) => write!(f, "-e{}-e{}", i, j),
            Root::Ei(i) => write!(f, "e{}", i),
            Root::MinusEi(i) => write!(f, "-e{}", i),
            Root::TwoEi(i) => write!(f, "2e{}", i),
            Root::MinusTwoEi(i) => write!(f, "-2e{}", i),
        }
    }
}

/// The full root system within the first `window` indices (finite types
/// ignore the window and use their own rank).
pub fn roots(ty: LieType, window: u32) -> BTreeSet<Root> {
    let n = ty.index_bound(window) as u64;
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            out.insert(Root::EiMinusEj(i, j));
            if i < j && ty.series() != 'A' {
                out.insert(Root::EiPlusEj(i, j));
                out.insert(Root::MinusEiMinusEj(i, j));
            }
        }
        match ty.series() {
            'B' => {
                out.insert(Root::Ei(i));
                out.insert(Root::MinusEi(i));
            }
            'C' => {
                out.insert(Root::TwoEi(i));
                out.insert(Root::MinusTwoEi(i));
            }
            _ => {}
        }
    }
    out
}

/// Positive roots of the Borel `b` within the first `window` indices.
pub fn positive_roots(b: &BorelDescriptor, ty: LieType, window: u32) -> Result<BTreeSet<Root>> {
    let n = ty.index_bound(window) as u64;
    let order = b.order_window(n)?;
    let series = ty.series();
    if series == 'D' {
        // the greatest element of the full order, if one exists, must carry +1
        if let Some(m) = b.global_max() {
            if b.sigma(m)? != 1 {
                return Err(Error::InvalidBorel(
                    "type D requires sign +1 at the greatest index".into(),
                ));
            }
        }
    }
    let mut out = BTreeSet::new();
    if series == 'A' {
        for (pi, &i) in order.iter().enumerate() {
            for &j in &order[pi + 1..] {
                out.insert(Root::EiMinusEj(i, j));
            }
        }
        return Ok(out);
    }
    let sigma: Vec<i8> = (1..=n).map(|i| b.sigma(i)).collect::<Result<_>>()?;
    let s = |i: u64| sigma[(i - 1) as usize];
    for (pi, &i) in order.iter().enumerate() {
        for &j in &order[pi + 1..] {
            // sigma(i) e_i - sigma(j) e_j for i before j
            out.insert(Root::from_signed_pair(s(i), i, -s(j), j).unwrap());
        }
    }
    for i in 1..=n {
        for j in i..=n {
            if i == j {
                if series == 'C' {
                    out.insert(Root::from_signed_pair(s(i), i, s(i), i).unwrap());
                }
            } else if series != 'A' {
                out.insert(Root::from_signed_pair(s(i), i, s(j), j).unwrap());
            }
        }
        if series == 'B' {
            out.insert(if s(i) > 0 { Root::Ei(i) } else { Root::MinusEi(i) });
        }
    }
    Ok(out)
}

/// Root-lattice membership for an integer vector of coordinates.
pub fn lattice_member(ty: LieType, v: &Weight) -> bool {
    let ints = match v.as_ints() {
        Some(x) => x,
        None => return false,
    };
    let sum: BigInt = ints.iter().sum();
    match ty.series() {
        'A' => sum.is_zero(),
        'B' => true,
        'C' | 'D' => (&sum % 2u8).is_zero(),
        _ => unreachable!(),
    }
}

/// rho for gl(n+1): (n/2, (n-2)/2, ..., -n/2).
pub fn rho_gl(rank: usize) -> Weight {
    let n = rank as i64 - 1;
    Weight::new((0..rank as i64).map(|k| ExtScalar::ratio(n - 2 * k, 2)).collect())
}

/// A Weyl group element with finite support: a permutation given by its
/// nontrivial images, plus sign changes (types B/C/D).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeylElement {
    pub images: std::collections::BTreeMap<u64, u64>,
    pub sign_flips: BTreeSet<u64>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement::default()
    }

    pub fn transposition(i: u64, j: u64) -> Self {
        let mut images = std::collections::BTreeMap::new();
        images.insert(i, j);
        images.insert(j, i);
        WeylElement { images, sign_flips: BTreeSet::new() }
    }

    pub fn sign_change(i: u64) -> Self {
        WeylElement { images: Default::default(), sign_flips: [i].into_iter().collect() }
    }

    pub fn validate(&self) -> Result<()> {
        let keys: BTreeSet<u64> = self.images.keys().copied().collect();
        let vals: BTreeSet<u64> = self.images.values().copied().collect();
        if keys != vals {
            return Err(Error::InvalidBorel("permutation images are not a bijection".into()));
        }
        Ok(())
    }

    pub fn perm(&self, i: u64) -> u64 {
        self.images.get(&i).copied().unwrap_or(i)
    }

    /// Even number of sign flips, required for type D.
    pub fn d_parity_ok(&self) -> bool {
        self.sign_flips.len() % 2 == 0
    }

    /// (w lambda)_{perm(i)} = s_i lambda_i : flip signs first, then permute.
    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        self.validate()?;
        let n = w.rank() as u64;
        let mut out = Weight::zero(w.rank());
        for i in 1..=n {
            let j = self.perm(i);
            if j > n {
                return Err(Error::RankMismatch { expected: w.rank(), got: j as usize });
            }
            let v = if self.sign_flips.contains(&i) {
                w.entry(i).checked_neg()
            } else {
                w.entry(i).clone()
            };
            out.set_entry(j, v);
        }
        Ok(out)
    }

    /// Group composition: (a.compose(b)).apply(w) == a.apply(b.apply(w)).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let support: BTreeSet<u64> = self
            .images
            .keys()
            .chain(other.images.keys())
            .chain(self.sign_flips.iter())
            .chain(other.sign_flips.iter())
            .copied()
            .collect();
        let mut images = std::collections::BTreeMap::new();
        let mut sign_flips = BTreeSet::new();
        for &i in &support {
            let j = self.perm(other.perm(i));
            if j != i {
                images.insert(i, j);
            }
            // flips act at the source index before permuting: the composite
            // flips i iff other flips i xor self flips other.perm(i)
            if other.sign_flips.contains(&i) != self.sign_flips.contains(&other.perm(i)) {
                sign_flips.insert(i);
            }
        }
        WeylElement { images, sign_flips }
    }
}

/// w . lambda = w(lambda + rho) - rho.
pub fn dot_action(w: &WeylElement, lambda: &Weight, rho: &Weight) -> Result<Weight> {
    w.apply(&lambda.checked_add(rho)?)?.checked_sub(rho)
}

/// Membership in the support of the natural module (and its dual data):
/// weights 0 (type B only) and ±e_i per series conventions.
pub fn natural_support(ty: LieType, v: &Weight) -> bool {
    let nz: Vec<(u64, &ExtScalar)> = v
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(k, e)| (k as u64 + 1, e))
        .collect();
    match nz.len() {
        0 => ty.series() == 'B',
        1 => {
            let (_, e) = nz[0];
            let one = ExtScalar::int(1);
            let mone = ExtScalar::int(-1);
            match ty.series() {
                'A' => *e == one,
                _ => *e == one || *e == mone,
            }
        }
        _ => false,
    }
}

/// Same, for sequences with finite support.
pub fn natural_support_seq(ty: LieType, v: &WeightSeq) -> bool {
    if !v.finite_support() {
        return false;
    }
    let n = v.bound() as usize;
    natural_support(ty, &v.truncate(n.max(1)))
}

/// Delta_sl(I) = { e_i - e_j : i in I, j notin I } within the window.
pub fn delta_sl(i_set: &BTreeSet<u64>, window: u64) -> BTreeSet<Root> {
    let mut out = BTreeSet::new();
    for i in i_set {
        for j in 1..=window {
            if !i_set.contains(&j) {
                out.insert(Root::EiMinusEj(*i, j));
            }
        }
    }
    out
}

/// Delta_sp(J) = { e_i + e_j : i,j in J } u { e_i - e_k : i in J, k notin J }
/// u { -e_k - e_l : k,l notin J } within the window.  Equal indices give the
/// long roots ±2e_i.
pub fn delta_sp(j_set: &BTreeSet<u64>, window: u64) -> BTreeSet<Root> {
    let mut out = BTreeSet::new();
    let inside: Vec<u64> = j_set.iter().copied().filter(|&i| i <= window).collect();
    let outside: Vec<u64> = (1..=window).filter(|i| !j_set.contains(i)).collect();
    for &i in &inside {
        for &j in &inside {
            out.insert(Root::from_signed_pair(1, i, 1, j).unwrap());
        }
        for &k in &outside {
            out.insert(Root::EiMinusEj(i, k));
        }
    }
    for &k in &outside {
        for &l in &outside {
            out.insert(Root::from_signed_pair(-1, k, -1, l).unwrap());
        }
    }
    out
}

/// Partition of a root set into locally-finite and "infinite" parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootPartition {
    pub fin: BTreeSet<Root>,
    pub inf: BTreeSet<Root>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setdesc::SetDescriptor;

    #[test]
    fn root_counts() {
        assert_eq!(roots(LieType::A(1), 0).len(), 2);
        assert_eq!(roots(LieType::A(2), 0).len(), 6);
        assert_eq!(roots(LieType::B(2), 0).len(), 8);
        assert_eq!(roots(LieType::C(3), 0).len(), 18);
        assert_eq!(roots(LieType::D(4), 0).len(), 24);
    }

    #[test]
    fn positive_c2_all_minus() {
        // natural order, sigma = -1 everywhere
        let b = BorelDescriptor::natural_signed(SetDescriptor::empty());
        let pos = positive_roots(&b, LieType::C(2), 0).unwrap();
        let expect: BTreeSet<Root> = [
            Root::EiMinusEj(2, 1),
            Root::MinusEiMinusEj(1, 2),
            Root::MinusTwoEi(1),
            Root::MinusTwoEi(2),
        ]
        .into_iter()
        .collect();
        assert_eq!(pos, expect);
    }

    #[test]
    fn positive_bn_fixed() {
        // the fixed symplectic Borel: {e_i - e_j : i<j} u {-e_k - e_l : k<=l}
        let b = BorelDescriptor::bn_descending(3);
        let pos = positive_roots(&b, LieType::C(3), 0).unwrap();
        let mut expect = BTreeSet::new();
        for i in 1..=3u64 {
            for j in (i + 1)..=3 {
                expect.insert(Root::EiMinusEj(i, j));
                expect.insert(Root::MinusEiMinusEj(i, j));
            }
            expect.insert(Root::MinusTwoEi(i));
        }
        assert_eq!(pos, expect);
    }

    #[test]
    fn lattice_sums() {
        assert!(lattice_member(LieType::A(2), &Weight::from_ints(&[1, -1, 0])));
        assert!(!lattice_member(LieType::A(2), &Weight::from_ints(&[1, 0, 0])));
        assert!(lattice_member(LieType::C(2), &Weight::from_ints(&[1, 1])));
        assert!(!lattice_member(LieType::C(2), &Weight::from_ints(&[1, 0])));
        assert!(lattice_member(LieType::B(2), &Weight::from_ints(&[1, 0])));
        assert!(!lattice_member(LieType::D(2), &Weight::from_ints(&[1, 0])));
    }

    #[test]
    fn dot_action_gl2() {
        // s1 . (a, b) = (b-1, a+1) for gl(2), rho = (1/2, -1/2)
        let w = WeylElement::transposition(1, 2);
        let rho = rho_gl(2);
        let lam = Weight::from_ints(&[3, 0]);
        let out = dot_action(&w, &lam, &rho).unwrap();
        assert_eq!(out, Weight::from_ints(&[-1, 4]));
    }

    #[test]
    fn weyl_composition() {
        let a = WeylElement::transposition(1, 2);
        let b = WeylElement::sign_change(1);
        let w = Weight::from_ints(&[5, 7, -2]);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(&w).unwrap(), a.apply(&b.apply(&w).unwrap()).unwrap());
        let ba = b.compose(&a);
        assert_eq!(ba.apply(&w).unwrap(), b.apply(&a.apply(&w).unwrap()).unwrap());
    }

    #[test]
    fn delta_sets() {
        let j: BTreeSet<u64> = [1].into_iter().collect();
        let d = delta_sp(&j, 2);
        let expect: BTreeSet<Root> =
            [Root::TwoEi(1), Root::EiMinusEj(1, 2), Root::MinusTwoEi(2)].into_iter().collect();
        assert_eq!(d, expect);
        let i: BTreeSet<u64> = [2].into_iter().collect();
        let d = delta_sl(&i, 3);
        let expect: BTreeSet<Root> =
            [Root::EiMinusEj(2, 1), Root::EiMinusEj(2, 3)].into_iter().collect();
        assert_eq!(d, expect);
    }
}
