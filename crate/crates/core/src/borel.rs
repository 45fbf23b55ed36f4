//! Borel subalgebras of the finitary algebras, described by an ordered list
//! of blocks partitioning the index set, plus (for types B/C/D) a sign map.

use crate::error::{Error, Result};
use crate::setdesc::SetDescriptor;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    /// Finitely many indices in the listed order.
    Explicit(Vec<u64>),
    /// Carrier ordered by the natural order of Z_{>0}.
    Ascending(SetDescriptor),
    /// Carrier ordered by the reverse of the natural order.
    Descending(SetDescriptor),
    /// Dense linear order without endpoints; only set-level queries are
    /// supported inside such a block.
    Dense(SetDescriptor),
}

impl Block {
    pub fn carrier(&self) -> SetDescriptor {
        match self {
            Block::Explicit(v) => SetDescriptor::from_finite(v.iter().copied()),
            Block::Ascending(s) | Block::Descending(s) | Block::Dense(s) => s.clone(),
        }
    }
}

/// `sign` is the +1 locus; `None` for type A where no sign map applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelDescriptor {
    pub blocks: Vec<Block>,
    pub sign: Option<SetDescriptor>,
}

impl BorelDescriptor {
    pub fn new(blocks: Vec<Block>, sign: Option<SetDescriptor>) -> Result<Self> {
        let b = BorelDescriptor { blocks, sign };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let mut union = SetDescriptor::empty();
        for (k, blk) in self.blocks.iter().enumerate() {
            if let Block::Explicit(v) = blk {
                let set: BTreeSet<u64> = v.iter().copied().collect();
                if set.len() != v.len() {
                    return Err(Error::InvalidBorel(format!("repeated index in block {}", k)));
                }
            }
            let c = blk.carrier();
            if !union.is_disjoint(&c) {
                return Err(Error::InvalidBorel(format!("block {} overlaps earlier blocks", k)));
            }
            union = union.union(&c);
        }
        if !union.set_eq(&SetDescriptor::all()) {
            return Err(Error::InvalidBorel("blocks do not cover Z_{>0}".into()));
        }
        Ok(())
    }

    /// Natural order 1 < 2 < 3 < ... (type A flavor).
    pub fn natural() -> Self {
        BorelDescriptor { blocks: vec![Block::Ascending(SetDescriptor::all())], sign: None }
    }

    /// Natural order with a sign map.
    pub fn natural_signed(sign: SetDescriptor) -> Self {
        BorelDescriptor {
            blocks: vec![Block::Ascending(SetDescriptor::all())],
            sign: Some(sign),
        }
    }

    /// The order n < n-1 < ... < 1 < (everything above n ascending), with
    /// sign identically -1.  Restricted to a window of size n this is the
    /// fixed finite-rank symplectic / orthogonal Borel b_n.
    pub fn bn_descending(n: u64) -> Self {
        let first: Vec<u64> = (1..=n).rev().collect();
        BorelDescriptor {
            blocks: vec![
                Block::Explicit(first),
                Block::Ascending(SetDescriptor::from_onwards(n + 1)),
            ],
            sign: Some(SetDescriptor::empty()),
        }
    }

    pub fn block_of(&self, i: u64) -> Option<usize> {
        self.blocks.iter().position(|b| b.carrier().member(i))
    }

    /// +1 / -1 at index i (types B/C/D).
    pub fn sigma(&self, i: u64) -> Result<i8> {
        match &self.sign {
            Some(s) => Ok(if s.member(i) { 1 } else { -1 }),
            None => Err(Error::InvalidBorel("no sign map on this Borel".into())),
        }
    }

    /// Does i strictly precede j?
    pub fn precedes(&self, i: u64, j: u64) -> Result<bool> {
        if i == j {
            return Ok(false);
        }
        let bi = self.block_of(i).ok_or_else(|| Error::InvalidBorel(format!("index {} uncovered", i)))?;
        let bj = self.block_of(j).ok_or_else(|| Error::InvalidBorel(format!("index {} uncovered", j)))?;
        if bi != bj {
            return Ok(bi < bj);
        }
        match &self.blocks[bi] {
            Block::Explicit(v) => {
                let pi = v.iter().position(|&x| x == i).unwrap();
                let pj = v.iter().position(|&x| x == j).unwrap();
                Ok(pi < pj)
            }
            Block::Ascending(_) => Ok(i < j),
            Block::Descending(_) => Ok(i > j),
            Block::Dense(_) => Err(Error::UndecidableOrder(format!(
                "indices {} and {} share a dense block",
                i, j
            ))),
        }
    }

    /// The indices 1..=n sorted by the order; error when a dense block
    /// contains two of them.
    pub fn order_window(&self, n: u64) -> Result<Vec<u64>> {
        let mut v: Vec<u64> = (1..=n).collect();
        // insertion sort via precedes so the first order error surfaces
        let mut out: Vec<u64> = Vec::with_capacity(v.len());
        for &i in &v {
            let mut pos = out.len();
            for (k, &j) in out.iter().enumerate() {
                if self.precedes(i, j)? {
                    pos = k;
                    break;
                }
            }
            out.insert(pos, i);
        }
        v.clear();
        Ok(out)
    }

    /// The <=-least element of `s` in this order, when one exists and is
    /// computable.  Dense blocks have no least element.
    pub fn min_of(&self, s: &SetDescriptor) -> Option<u64> {
        for b in &self.blocks {
            let c = b.carrier().intersect(s);
            if c.is_empty() {
                continue;
            }
            return match b {
                Block::Explicit(v) => v.iter().copied().find(|i| c.member(*i)),
                Block::Ascending(_) => c.min_element(),
                Block::Descending(_) => c.max_element(), // None when infinite
                Block::Dense(_) => None,
            };
        }
        None
    }

    /// The <=-greatest element of `s`, when computable.
    pub fn max_of(&self, s: &SetDescriptor) -> Option<u64> {
        for b in self.blocks.iter().rev() {
            let c = b.carrier().intersect(s);
            if c.is_empty() {
                continue;
            }
            return match b {
                Block::Explicit(v) => v.iter().rev().copied().find(|i| c.member(*i)),
                Block::Ascending(_) => c.max_element(),
                Block::Descending(_) => c.min_element(),
                Block::Dense(_) => None,
            };
        }
        None
    }

    /// Greatest element of the whole order, if any.
    pub fn global_max(&self) -> Option<u64> {
        self.max_of(&SetDescriptor::all())
    }

    pub fn global_min(&self) -> Option<u64> {
        self.min_of(&SetDescriptor::all())
    }

    /// Is every element of `a` strictly before every element outside `a`?
    /// Mixed dense blocks are treated as incompatible (their internal order
    /// is opaque).
    pub fn compatible(&self, a: &SetDescriptor) -> bool {
        let mut seen_boundary = false;
        for b in &self.blocks {
            let c = b.carrier();
            let cin = c.intersect(a);
            let cout = c.minus(a);
            if seen_boundary {
                if !cin.is_empty() {
                    return false;
                }
                continue;
            }
            if cout.is_empty() {
                continue; // still fully inside a
            }
            seen_boundary = true;
            if cin.is_empty() {
                continue;
            }
            // mixed boundary block: a-part must precede the rest inside it
            let ok = match b {
                Block::Explicit(v) => {
                    let last_in = v.iter().rposition(|i| cin.member(*i));
                    let first_out = v.iter().position(|i| cout.member(*i));
                    match (last_in, first_out) {
                        (Some(li), Some(fo)) => li < fo,
                        _ => true,
                    }
                }
                Block::Ascending(_) => match cout.min_element() {
                    // all of cin naturally below min(cout)
                    Some(m) => cin.intersect(&SetDescriptor::from_onwards(m)).is_empty(),
                    None => false,
                },
                Block::Descending(_) => match cout.max_element() {
                    Some(m) => cin
                        .minus(&SetDescriptor::from_onwards(m + 1))
                        .is_empty(),
                    None => false, // cout infinite, nothing can sit above all of it
                },
                Block::Dense(_) => false,
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// The k least elements of the order (each strictly before everything
    /// else), if they exist.
    pub fn first_elements(&self, k: usize) -> Option<Vec<u64>> {
        let mut taken = SetDescriptor::empty();
        let mut out = Vec::new();
        for _ in 0..k {
            let rest = SetDescriptor::all().minus(&taken);
            let m = self.min_of(&rest)?;
            out.push(m);
            taken = taken.with(m, true);
        }
        Some(out)
    }

    pub fn last_elements(&self, k: usize) -> Option<Vec<u64>> {
        let mut taken = SetDescriptor::empty();
        let mut out = Vec::new();
        for _ in 0..k {
            let rest = SetDescriptor::all().minus(&taken);
            let m = self.max_of(&rest)?;
            out.push(m);
            taken = taken.with(m, true);
        }
        out.reverse();
        Some(out)
    }

    /// Unions of initial blocks, used for down-set searches.
    pub fn initial_unions(&self) -> Vec<SetDescriptor> {
        let mut out = vec![SetDescriptor::empty()];
        let mut acc = SetDescriptor::empty();
        for b in &self.blocks {
            acc = acc.union(&b.carrier());
            out.push(acc.clone());
        }
        out
    }
}

impl fmt::Display for BorelDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match b {
                Block::Explicit(v) => v
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                Block::Ascending(s) => format!("asc{}", s),
                Block::Descending(s) => format!("desc{}", s),
                Block::Dense(s) => format!("dense{}", s),
            })
            .collect();
        write!(f, "blocks=[{}]", bs.join("; "))?;
        if let Some(s) = &self.sign {
            write!(f, " sign=+{}", s)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odds_then_evens_desc() -> BorelDescriptor {
        // 1 < 3 < 5 < ... ... < 6 < 4 < 2
        BorelDescriptor::new(
            vec![
                Block::Ascending(SetDescriptor::odds()),
                Block::Descending(SetDescriptor::evens()),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn precedes_queries() {
        let b = odds_then_evens_desc();
        assert!(b.precedes(1, 3).unwrap());
        assert!(b.precedes(5, 2).unwrap());
        assert!(b.precedes(6, 4).unwrap());
        assert!(!b.precedes(2, 6).unwrap());
        assert_eq!(b.global_max(), Some(2));
        assert_eq!(b.global_min(), Some(1));
    }

    #[test]
    fn compatibility() {
        let b = odds_then_evens_desc();
        assert!(b.compatible(&SetDescriptor::odds()));
        assert!(b.compatible(&SetDescriptor::from_finite([1, 3])));
        assert!(!b.compatible(&SetDescriptor::from_finite([3])));
        // 2 is the order-greatest element, so odds + {2} is no down-set
        assert!(!b.compatible(&SetDescriptor::odds().with(2, true)));
        // but dropping the bottom of the descending tail is fine
        assert!(b.compatible(&SetDescriptor::all().with(2, false)));
        assert!(!b.compatible(&SetDescriptor::evens()));
        let nat = BorelDescriptor::natural();
        assert!(nat.compatible(&SetDescriptor::from_finite([1, 2, 3])));
        assert!(!nat.compatible(&SetDescriptor::from_finite([2])));
        assert!(nat.compatible(&SetDescriptor::empty()));
        assert!(nat.compatible(&SetDescriptor::all()));
    }

    #[test]
    fn window_ordering() {
        let b = odds_then_evens_desc();
        assert_eq!(b.order_window(6).unwrap(), vec![1, 3, 5, 6, 4, 2]);
        let bn = BorelDescriptor::bn_descending(3);
        assert_eq!(bn.order_window(3).unwrap(), vec![3, 2, 1]);
        assert_eq!(bn.sigma(1).unwrap(), -1);
    }

    #[test]
    fn chains() {
        let b = odds_then_evens_desc();
        assert_eq!(b.first_elements(3), Some(vec![1, 3, 5]));
        assert_eq!(b.last_elements(2), Some(vec![4, 2]));
        assert_eq!(BorelDescriptor::natural().last_elements(1), None);
    }
}
