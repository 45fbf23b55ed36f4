//! Exact scalars: rationals plus "generic" transcendental symbols with an
//! integer offset, e.g. `g0 + 2` standing for an entry like π + 2.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Tag = u32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtScalar {
    Rational(BigRational),
    /// `sign * g_tag + offset` with `sign = -1` iff `neg`.
    Generic { tag: Tag, neg: bool, offset: BigInt },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntClass {
    NonNegInt,
    NegInt,
    NonInt,
}

impl ExtScalar {
    pub fn int(k: i64) -> Self {
        ExtScalar::Rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        ExtScalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn generic(tag: Tag) -> Self {
        ExtScalar::Generic { tag, neg: false, offset: BigInt::zero() }
    }

    pub fn generic_shift(tag: Tag, offset: i64) -> Self {
        ExtScalar::Generic { tag, neg: false, offset: BigInt::from(offset) }
    }

    pub fn zero() -> Self {
        ExtScalar::int(0)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtScalar::Rational(r) if r.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExtScalar::Rational(r) if r.is_integer())
    }

    pub fn int_class(&self) -> IntClass {
        match self {
            ExtScalar::Rational(r) if r.is_integer() => {
                if r.is_negative() {
                    IntClass::NegInt
                } else {
                    IntClass::NonNegInt
                }
            }
            _ => IntClass::NonInt,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<BigInt> {
        match self {
            ExtScalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// `self - other` when it is an integer; `None` otherwise.
    pub fn int_diff(&self, other: &ExtScalar) -> Option<BigInt> {
        match (self, other) {
            (ExtScalar::Rational(a), ExtScalar::Rational(b)) => {
                let d = a - b;
                d.is_integer().then(|| d.to_integer())
            }
            (
                ExtScalar::Generic { tag: t, neg: n, offset: a },
                ExtScalar::Generic { tag: u, neg: m, offset: b },
            ) if t == u && n == m => Some(a - b),
            _ => None,
        }
    }

    pub fn add_int(&self, k: i64) -> ExtScalar {
        match self {
            ExtScalar::Rational(r) => ExtScalar::Rational(r + BigRational::from_integer(k.into())),
            ExtScalar::Generic { tag, neg, offset } => ExtScalar::Generic {
                tag: *tag,
                neg: *neg,
                offset: offset + BigInt::from(k),
            },
        }
    }

    pub fn checked_neg(&self) -> ExtScalar {
        match self {
            ExtScalar::Rational(r) => ExtScalar::Rational(-r),
            ExtScalar::Generic { tag, neg, offset } => ExtScalar::Generic {
                tag: *tag,
                neg: !neg,
                offset: -offset,
            },
        }
    }

    pub fn checked_add(&self, other: &ExtScalar) -> Result<ExtScalar> {
        Poly::from_scalar(self).add(&Poly::from_scalar(other)).to_scalar()
    }

    pub fn checked_sub(&self, other: &ExtScalar) -> Result<ExtScalar> {
        self.checked_add(&other.checked_neg())
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Rational(r) => write!(f, "{}", r),
            ExtScalar::Generic { tag, neg, offset } => {
                if *neg {
                    write!(f, "-g{}", tag)?;
                } else {
                    write!(f, "g{}", tag)?;
                }
                if offset.is_positive() {
                    write!(f, "+{}", offset)?;
                } else if offset.is_negative() {
                    write!(f, "{}", offset)?;
                }
                Ok(())
            }
        }
    }
}

/// Exact multivariate polynomial in the generic symbols, with rational
/// coefficients.  Used for operator coefficients where products and
/// cancellations of generic exponents occur.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    /// monomial (tag -> exponent, nonzero) -> coefficient (nonzero)
    terms: BTreeMap<BTreeMap<Tag, u32>, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut p = Poly::default();
        if !r.is_zero() {
            p.terms.insert(BTreeMap::new(), r);
        }
        p
    }

    pub fn int(k: i64) -> Self {
        Poly::from_rational(BigRational::from_integer(k.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Poly::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn var(tag: Tag) -> Self {
        let mut p = Poly::default();
        let mut m = BTreeMap::new();
        m.insert(tag, 1);
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn from_scalar(s: &ExtScalar) -> Self {
        match s {
            ExtScalar::Rational(r) => Poly::from_rational(r.clone()),
            ExtScalar::Generic { tag, neg, offset } => {
                let sign = if *neg { Poly::int(-1) } else { Poly::one() };
                Poly::var(*tag)
                    .mul(&sign)
                    .add(&Poly::from_rational(BigRational::from_integer(offset.clone())))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let e = out.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (t, e) in m2 {
                    *m.entry(*t).or_insert(0) += e;
                }
                let e = out.terms.entry(m).or_insert_with(BigRational::zero);
                *e += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, r: &BigRational) -> Poly {
        self.mul(&Poly::from_rational(r.clone()))
    }

    /// Collapse to a single scalar when the polynomial has the shape
    /// `rational` or `±g + integer`.
    pub fn to_scalar(&self) -> Result<ExtScalar> {
        let constant = self
            .terms
            .get(&BTreeMap::new())
            .cloned()
            .unwrap_or_else(BigRational::zero);
        let nonconst: Vec<_> = self.terms.iter().filter(|(m, _)| !m.is_empty()).collect();
        if nonconst.is_empty() {
            return Ok(ExtScalar::Rational(constant));
        }
        if nonconst.len() == 1 {
            let (m, c) = nonconst[0];
            if m.len() == 1 {
                let (&tag, &exp) = m.iter().next().unwrap();
                let one = BigRational::one();
                if exp == 1 && (c == &one || c == &-one.clone()) && constant.is_integer() {
                    return Ok(ExtScalar::Generic {
                        tag,
                        neg: c != &one,
                        offset: constant.to_integer(),
                    });
                }
            }
        }
        Err(Error::MixedGenericTags(format!("{}", self)))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_empty() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*", c)?;
                let vars: Vec<String> = m
                    .iter()
                    .map(|(t, e)| {
                        if *e == 1 {
                            format!("g{}", t)
                        } else {
                            format!("g{}^{}", t, e)
                        }
                    })
                    .collect();
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_is_never_integer() {
        assert!(!ExtScalar::generic_shift(0, 5).is_integer());
        assert_eq!(ExtScalar::generic_shift(0, 5).int_class(), IntClass::NonInt);
    }

    #[test]
    fn int_diff_same_tag() {
        let a = ExtScalar::generic_shift(0, 3);
        let b = ExtScalar::generic_shift(0, 1);
        assert_eq!(a.int_diff(&b), Some(BigInt::from(2)));
        let c = ExtScalar::generic_shift(1, 3);
        assert_eq!(a.int_diff(&c), None);
        assert_eq!(a.int_diff(&ExtScalar::int(3)), None);
    }

    #[test]
    fn mixed_tags_error() {
        let a = ExtScalar::generic(0);
        let b = ExtScalar::generic(1);
        assert!(matches!(a.checked_add(&b), Err(Error::MixedGenericTags(_))));
        // opposite signs of the same tag cancel
        let c = a.checked_add(&a.checked_neg().add_int(1)).unwrap();
        assert_eq!(c, ExtScalar::int(1));
    }

    #[test]
    fn half_shift_of_generic_errors() {
        let a = ExtScalar::generic(0);
        assert!(a.checked_add(&ExtScalar::ratio(1, 2)).is_err());
        assert_eq!(a.checked_add(&ExtScalar::int(2)).unwrap(), ExtScalar::generic_shift(0, 2));
    }

    #[test]
    fn poly_products_cancel() {
        // mu_j (mu_i + 1) - mu_i (mu_j + 1) = mu_j - mu_i
        let mi = Poly::var(0);
        let mj = Poly::var(1);
        let lhs = mj.mul(&mi.add(&Poly::one())).sub(&mi.mul(&mj.add(&Poly::one())));
        assert_eq!(lhs, mj.sub(&mi));
    }
}
