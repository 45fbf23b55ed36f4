//! Finite-rank weights, eventually-periodic infinite weight sequences, and
//! the Int / Int+ / Int- index sets.

use crate::error::{Error, Result};
use crate::scalar::{ExtScalar, IntClass, Poly, Tag};
use crate::setdesc::SetDescriptor;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub entries: Vec<ExtScalar>,
}

impl Weight {
    pub fn new(entries: Vec<ExtScalar>) -> Self {
        Weight { entries }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight::new(v.iter().map(|&k| ExtScalar::int(k)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![ExtScalar::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// 1-based entry access.
    pub fn entry(&self, i: u64) -> &ExtScalar {
        &self.entries[(i - 1) as usize]
    }

    pub fn set_entry(&mut self, i: u64, v: ExtScalar) {
        self.entries[(i - 1) as usize] = v;
    }

    pub fn add_at(&self, i: u64, k: i64) -> Weight {
        let mut w = self.clone();
        w.set_entry(i, w.entry(i).add_int(k));
        w
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: other.rank() });
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.checked_add(&other.checked_neg())
    }

    pub fn checked_neg(&self) -> Weight {
        Weight::new(self.entries.iter().map(|e| e.checked_neg()).collect())
    }

    /// Entrywise integer difference; `None` if some entry differs by a
    /// non-integer (or incomparable) amount.
    pub fn int_diff(&self, other: &Weight) -> Option<Vec<BigInt>> {
        if self.rank() != other.rank() {
            return None;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.int_diff(b))
            .collect()
    }

    pub fn int_sets(&self) -> IndexSets {
        let mut s = IndexSets::default();
        for (k, e) in self.entries.iter().enumerate() {
            let i = k as u64 + 1;
            match e.int_class() {
                IntClass::NonNegInt => {
                    s.int.insert(i);
                    s.plus.insert(i);
                }
                IntClass::NegInt => {
                    s.int.insert(i);
                    s.minus.insert(i);
                }
                IntClass::NonInt => {}
            }
        }
        s
    }

    /// Sum of all entries when expressible as a single scalar.
    pub fn abs_sum(&self) -> Result<ExtScalar> {
        let mut acc = Poly::zero();
        for e in &self.entries {
            acc = acc.add(&Poly::from_scalar(e));
        }
        acc.to_scalar()
    }

    pub fn as_ints(&self) -> Option<Vec<BigInt>> {
        self.entries.iter().map(|e| e.as_int()).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Indices whose entry is an integer / nonnegative integer / negative
/// integer. For finite-rank weights.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexSets {
    pub int: BTreeSet<u64>,
    pub plus: BTreeSet<u64>,
    pub minus: BTreeSet<u64>,
}

/// An infinite weight sequence: explicit prefix, then a repeating block.
/// A constant tail is a block of length 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSeq {
    pub prefix: Vec<ExtScalar>,
    pub tail: Vec<ExtScalar>,
}

impl WeightSeq {
    pub fn new(prefix: Vec<ExtScalar>, tail: Vec<ExtScalar>) -> Self {
        assert!(!tail.is_empty(), "tail block must be nonempty");
        WeightSeq { prefix, tail }
    }

    pub fn constant(c: ExtScalar) -> Self {
        WeightSeq::new(vec![], vec![c])
    }

    pub fn from_ints(prefix: &[i64], tail: i64) -> Self {
        WeightSeq::new(
            prefix.iter().map(|&k| ExtScalar::int(k)).collect(),
            vec![ExtScalar::int(tail)],
        )
    }

    pub fn zero() -> Self {
        WeightSeq::constant(ExtScalar::zero())
    }

    /// 1-based.
    pub fn entry(&self, i: u64) -> &ExtScalar {
        let idx = (i - 1) as usize;
        if idx < self.prefix.len() {
            &self.prefix[idx]
        } else {
            &self.tail[(idx - self.prefix.len()) % self.tail.len()]
        }
    }

    pub fn truncate(&self, n: usize) -> Weight {
        Weight::new((1..=n as u64).map(|i| self.entry(i).clone()).collect())
    }

    /// Index from which the sequence is purely periodic.
    pub fn bound(&self) -> u64 {
        self.prefix.len() as u64 + 1
    }

    pub fn period(&self) -> usize {
        self.tail.len()
    }

    /// Does the sequence have finitely many nonzero entries?
    pub fn finite_support(&self) -> bool {
        self.tail.iter().all(|e| e.is_zero())
    }

    pub fn support(&self) -> Option<BTreeSet<u64>> {
        if !self.finite_support() {
            return None;
        }
        Some(
            (1..self.bound())
                .filter(|&i| !self.entry(i).is_zero())
                .collect(),
        )
    }

    pub fn is_eventually(&self, v: &ExtScalar) -> bool {
        self.tail.iter().all(|e| e == v)
    }

    pub fn int_sets(&self) -> SeqIndexSets {
        let start = self.bound();
        let period = self.period();
        let class = |i: u64| self.entry(i).int_class();
        let build = |want: fn(IntClass) -> bool| {
            let exc: BTreeSet<u64> = (1..start).filter(|&i| want(class(i))).collect();
            let pattern: Vec<bool> = (0..period as u64).map(|j| want(class(start + j))).collect();
            SetDescriptor::new(exc, BTreeSet::new(), start, pattern)
        };
        let plus = build(|c| c == IntClass::NonNegInt);
        let minus = build(|c| c == IntClass::NegInt);
        SeqIndexSets { int: plus.union(&minus), plus, minus }
    }

    /// Entrywise difference as polynomials, defined beyond index `n` by
    /// periodicity of both sequences.
    fn diff_poly(&self, other: &WeightSeq, i: u64) -> Poly {
        Poly::from_scalar(self.entry(i)).sub(&Poly::from_scalar(other.entry(i)))
    }

    /// Horizon past which the pairwise comparison repeats.
    pub fn compare_horizon(&self, other: &WeightSeq) -> u64 {
        fn lcm(a: usize, b: usize) -> usize {
            fn gcd(a: usize, b: usize) -> usize {
                if b == 0 { a } else { gcd(b, a % b) }
            }
            a / gcd(a, b) * b
        }
        self.bound().max(other.bound()) + lcm(self.period(), other.period()) as u64
    }

    /// `self - other` constant (the same scalar difference at every index)?
    pub fn equal_mod_constant(&self, other: &WeightSeq) -> bool {
        let h = self.compare_horizon(other);
        let d1 = self.diff_poly(other, 1);
        (2..=h).all(|i| self.diff_poly(other, i) == d1)
    }

    /// Pointwise equality.
    pub fn seq_eq(&self, other: &WeightSeq) -> bool {
        let h = self.compare_horizon(other);
        (1..=h).all(|i| self.entry(i) == other.entry(i))
    }

    /// Equal at all but finitely many positions?
    pub fn eventually_eq(&self, other: &WeightSeq) -> bool {
        let b = self.bound().max(other.bound());
        let h = self.compare_horizon(other);
        (b..=h).all(|i| self.entry(i) == other.entry(i))
    }

    /// Finitely supported entrywise integer difference, if any.
    /// Returned as a map index -> difference (nonzero entries only).
    pub fn finite_int_diff(&self, other: &WeightSeq) -> Option<BTreeMap<u64, BigInt>> {
        if !self.eventually_eq(other) {
            return None;
        }
        let b = self.bound().max(other.bound());
        let mut out = BTreeMap::new();
        for i in 1..b {
            let d = self.entry(i).int_diff(other.entry(i))?;
            if !d.is_zero() {
                out.insert(i, d);
            }
        }
        Some(out)
    }

    pub fn with_entry(&self, i: u64, v: ExtScalar) -> WeightSeq {
        let n = (i as usize).max(self.prefix.len());
        let mut prefix: Vec<ExtScalar> = (1..=n as u64).map(|j| self.entry(j).clone()).collect();
        prefix[(i - 1) as usize] = v;
        WeightSeq::new(prefix, self.tail.clone())
    }

    /// Largest tag used by generic entries, if any.
    pub fn max_tag(&self) -> Option<Tag> {
        self.prefix
            .iter()
            .chain(self.tail.iter())
            .filter_map(|e| match e {
                ExtScalar::Generic { tag, .. } => Some(*tag),
                _ => None,
            })
            .max()
    }

    /// Number of indices with non-integer entries, `None` if infinite.
    pub fn nonint_indices(&self) -> Option<BTreeSet<u64>> {
        if self.tail.iter().any(|e| !e.is_integer()) {
            return None;
        }
        Some((1..self.bound()).filter(|&i| !self.entry(i).is_integer()).collect())
    }
}

impl fmt::Display for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.prefix.iter().map(|e| e.to_string()).collect();
        let tail: Vec<String> = self.tail.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}; tail={}]", parts.join(","), if tail.len() == 1 {
            tail[0].clone()
        } else {
            format!("({})", tail.join(","))
        })
    }
}

#[derive(Debug, Clone)]
pub struct SeqIndexSets {
    pub int: SetDescriptor,
    pub plus: SetDescriptor,
    pub minus: SetDescriptor,
}

/// Weakly decreasing positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    pub parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(Error::NotDominant(format!(
                "partition parts must be weakly decreasing and positive: {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Half-integer rational helper.
pub fn half() -> ExtScalar {
    ExtScalar::ratio(1, 2)
}

/// Rational from BigInt.
pub fn scalar_from_bigint(b: BigInt) -> ExtScalar {
    ExtScalar::Rational(BigRational::from_integer(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_sets_finite() {
        // (3, -1/2, g0, -2) -> Int={1,4}, Int+={1}, Int-={4}
        let w = Weight::new(vec![
            ExtScalar::int(3),
            ExtScalar::ratio(-1, 2),
            ExtScalar::generic(0),
            ExtScalar::int(-2),
        ]);
        let s = w.int_sets();
        assert_eq!(s.int, [1, 4].into_iter().collect());
        assert_eq!(s.plus, [1].into_iter().collect());
        assert_eq!(s.minus, [4].into_iter().collect());
    }

    #[test]
    fn int_sets_seq() {
        // (1, 2, g0, -1, -2, -3, then constant -1): Int+={1,2}, Int-={4,5,...}
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
        let s = mu.int_sets();
        assert!(s.plus.set_eq(&SetDescriptor::from_finite([1, 2])));
        assert!(s.minus.set_eq(&SetDescriptor::from_onwards(4)));
        assert!(s.int.set_eq(&SetDescriptor::from_onwards(4).with(1, true).with(2, true)));
    }

    #[test]
    fn abs_sum_examples() {
        let w = Weight::new(vec![ExtScalar::generic(0), ExtScalar::int(1)]);
        assert_eq!(w.abs_sum().unwrap(), ExtScalar::generic_shift(0, 1));
        let bad = Weight::new(vec![ExtScalar::generic(0), ExtScalar::generic(1)]);
        assert!(bad.abs_sum().is_err());
        // same tag with opposite signs cancels
        let ok = Weight::new(vec![
            ExtScalar::generic(0),
            ExtScalar::generic(0).checked_neg().add_int(1),
        ]);
        assert_eq!(ok.abs_sum().unwrap(), ExtScalar::int(1));
    }

    #[test]
    fn equal_mod_constant() {
        let a = WeightSeq::from_ints(&[3, 4], 1);
        let b = WeightSeq::from_ints(&[2, 3], 0);
        assert!(a.equal_mod_constant(&b));
        let c = WeightSeq::from_ints(&[2, 4], 0);
        assert!(!a.equal_mod_constant(&c));
    }

    #[test]
    fn periodic_tail() {
        let eps_odds = WeightSeq::new(vec![], vec![ExtScalar::int(-1), ExtScalar::int(0)]);
        assert_eq!(*eps_odds.entry(1), ExtScalar::int(-1));
        assert_eq!(*eps_odds.entry(4), ExtScalar::int(0));
        let s = eps_odds.int_sets();
        assert!(s.minus.set_eq(&SetDescriptor::odds()));
        assert!(s.plus.set_eq(&SetDescriptor::evens()));
    }
}
