//! Finitely-described subsets of Z_{>0}: finite exception sets plus an
//! eventually-periodic membership pattern.

use std::collections::BTreeSet;
use std::fmt;

/// Membership rule: indices `>= start` follow `pattern` cyclically
/// (position `(i - start) % pattern.len()`), overridden by the exception
/// sets; indices `< start` are members iff listed in `exc_in`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetDescriptor {
    pub exc_in: BTreeSet<u64>,
    pub exc_out: BTreeSet<u64>,
    pub start: u64,
    pub pattern: Vec<bool>,
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

impl SetDescriptor {
    pub fn new(exc_in: BTreeSet<u64>, exc_out: BTreeSet<u64>, start: u64, pattern: Vec<bool>) -> Self {
        assert!(start >= 1 && !pattern.is_empty(), "start >= 1, nonempty pattern");
        assert!(exc_in.is_disjoint(&exc_out), "in/out exceptions must be disjoint");
        assert!(!exc_in.contains(&0) && !exc_out.contains(&0), "indices are 1-based");
        SetDescriptor { exc_in, exc_out, start, pattern }
    }

    pub fn empty() -> Self {
        SetDescriptor::new(BTreeSet::new(), BTreeSet::new(), 1, vec![false])
    }

    pub fn all() -> Self {
        SetDescriptor::new(BTreeSet::new(), BTreeSet::new(), 1, vec![true])
    }

    pub fn from_finite<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        SetDescriptor::new(iter.into_iter().collect(), BTreeSet::new(), 1, vec![false])
    }

    pub fn odds() -> Self {
        SetDescriptor::new(BTreeSet::new(), BTreeSet::new(), 1, vec![true, false])
    }

    pub fn evens() -> Self {
        SetDescriptor::new(BTreeSet::new(), BTreeSet::new(), 1, vec![false, true])
    }

    /// All indices `>= from`.
    pub fn from_onwards(from: u64) -> Self {
        SetDescriptor::new(BTreeSet::new(), BTreeSet::new(), from.max(1), vec![true])
    }

    pub fn member(&self, i: u64) -> bool {
        if i == 0 {
            return false;
        }
        if self.exc_in.contains(&i) {
            return true;
        }
        if self.exc_out.contains(&i) {
            return false;
        }
        if i >= self.start {
            self.pattern[((i - self.start) % self.pattern.len() as u64) as usize]
        } else {
            false
        }
    }

    /// First index from which plain periodicity holds (no exceptions at or
    /// beyond it).
    fn bound(&self) -> u64 {
        let e = self
            .exc_in
            .iter()
            .chain(self.exc_out.iter())
            .max()
            .map(|m| m + 1)
            .unwrap_or(1);
        e.max(self.start)
    }

    /// Rebuild a descriptor from pointwise membership of a function that is
    /// guaranteed periodic with period `period` from index `start` on.
    fn rebuild(start: u64, period: usize, f: impl Fn(u64) -> bool) -> Self {
        let exc_in: BTreeSet<u64> = (1..start).filter(|&i| f(i)).collect();
        let pattern: Vec<bool> = (0..period as u64).map(|j| f(start + j)).collect();
        SetDescriptor::new(exc_in, BTreeSet::new(), start, pattern)
    }

    fn combine(&self, other: &SetDescriptor, f: impl Fn(bool, bool) -> bool) -> SetDescriptor {
        let start = self.bound().max(other.bound());
        let period = lcm(self.pattern.len(), other.pattern.len());
        SetDescriptor::rebuild(start, period, |i| f(self.member(i), other.member(i)))
    }

    pub fn union(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a && b)
    }

    pub fn minus(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a && !b)
    }

    pub fn sym_diff(&self, other: &SetDescriptor) -> SetDescriptor {
        self.combine(other, |a, b| a != b)
    }

    pub fn complement(&self) -> SetDescriptor {
        let start = self.bound();
        SetDescriptor::rebuild(start, self.pattern.len(), |i| !self.member(i))
    }

    pub fn is_finite(&self) -> bool {
        let start = self.bound();
        (0..self.pattern.len() as u64).all(|j| !self.member(start + j))
    }

    pub fn is_empty(&self) -> bool {
        self.is_finite() && self.exc_in.is_empty() && {
            (1..self.bound()).all(|i| !self.member(i))
        }
    }

    pub fn is_cofinite(&self) -> bool {
        self.complement().is_finite()
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn is_semi_infinite(&self) -> bool {
        self.is_infinite() && !self.is_cofinite()
    }

    pub fn set_eq(&self, other: &SetDescriptor) -> bool {
        self.sym_diff(other).is_empty()
    }

    pub fn finite_sym_diff(&self, other: &SetDescriptor) -> bool {
        self.sym_diff(other).is_finite()
    }

    /// Elements of a finite set; `None` when infinite.
    pub fn elements(&self) -> Option<BTreeSet<u64>> {
        if !self.is_finite() {
            return None;
        }
        Some((1..self.bound()).filter(|&i| self.member(i)).collect())
    }

    pub fn elements_up_to(&self, n: u64) -> BTreeSet<u64> {
        (1..=n).filter(|&i| self.member(i)).collect()
    }

    pub fn min_element(&self) -> Option<u64> {
        let b = self.bound();
        (1..b + self.pattern.len() as u64)
            .find(|&i| self.member(i))
    }

    /// Natural max of a finite set.
    pub fn max_element(&self) -> Option<u64> {
        self.elements().and_then(|e| e.iter().last().copied())
    }

    pub fn subset_of(&self, other: &SetDescriptor) -> bool {
        self.minus(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &SetDescriptor) -> bool {
        self.intersect(other).is_empty()
    }

    /// Insert or remove finitely many indices.
    pub fn with(&self, i: u64, present: bool) -> SetDescriptor {
        let start = self.bound().max(i + 1);
        SetDescriptor::rebuild(start, self.pattern.len(), |j| {
            if j == i { present } else { self.member(j) }
        })
    }
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(els) = self.elements() {
            let list: Vec<String> = els.iter().map(|i| i.to_string()).collect();
            return write!(f, "{{{}}}", list.join(","));
        }
        let ins: Vec<String> = self.exc_in.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}; ", ins.join(","))?;
        if !self.exc_out.is_empty() {
            let outs: Vec<String> = self.exc_out.iter().map(|i| i.to_string()).collect();
            write!(f, "out={}, ", outs.join(","))?;
        }
        let pat: String = self.pattern.iter().map(|&b| if b { '1' } else { '0' }).collect();
        write!(f, "period={}, pattern={}, start={}}}", self.pattern.len(), pat, self.start)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_with_exceptions() {
        // {1,3} plus everything >= 5 with pattern 10 (members 5,7,9,...)
        let s = SetDescriptor::new(
            [1, 3].into_iter().collect(),
            BTreeSet::new(),
            5,
            vec![true, false],
        );
        let up: Vec<u64> = (1..=10).filter(|&i| s.member(i)).collect();
        assert_eq!(up, vec![1, 3, 5, 7, 9]);
        assert!(s.is_semi_infinite());
    }

    #[test]
    fn boolean_ops() {
        let odds = SetDescriptor::odds();
        let evens = SetDescriptor::evens();
        assert!(odds.union(&evens).set_eq(&SetDescriptor::all()));
        assert!(odds.intersect(&evens).is_empty());
        assert!(odds.complement().set_eq(&evens));
        assert!(!odds.finite_sym_diff(&evens));
        assert!(odds.finite_sym_diff(&odds.with(2, true).with(1, false)));
    }

    #[test]
    fn finiteness() {
        assert!(SetDescriptor::from_finite([2, 9]).is_finite());
        assert_eq!(SetDescriptor::from_finite([2, 9]).max_element(), Some(9));
        assert!(SetDescriptor::all().is_cofinite());
        assert!(!SetDescriptor::all().is_semi_infinite());
        assert_eq!(SetDescriptor::odds().min_element(), Some(1));
        assert_eq!(SetDescriptor::from_onwards(4).min_element(), Some(4));
    }
}
