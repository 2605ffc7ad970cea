//! Exact arithmetic in the ring of Laurent polynomials in `q` with
//! arbitrary-precision integer coefficients.
//!
//! This is the universal coefficient ring of the kernel. Division never
//! happens here; where the field of fractions is needed (graded ideal
//! membership) the linear algebra is fraction-free instead.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse Laurent polynomial in `q` over `Z`, kept in canonical form:
/// no stored coefficient is zero, and two values are equal iff their term
/// maps are identical. Iteration over exponents is ascending.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(BigInt::one(), 0)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::term(BigInt::one(), k)
    }

    /// `q - q^{-1}`.
    pub fn q_hat() -> Self {
        Self::q_pow(1).sub(&Self::q_pow(-1))
    }

    pub fn from_int(n: i64) -> Self {
        Self::term(BigInt::from(n), 0)
    }

    /// Single term `coeff * q^exp` (canonical: dropped if `coeff` is zero).
    pub fn term(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentInt { terms }
    }

    /// `(sign q)^k` where `negative` selects `-q`; defined for all integer `k`.
    pub fn signed_q_pow(negative: bool, k: i64) -> Self {
        let coeff = if negative && k.rem_euclid(2) == 1 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        Self::term(coeff, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Difference between the largest and smallest exponent (0 for <= 1 term).
    pub fn exp_spread(&self) -> i64 {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentInt { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentInt {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentInt { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a unit. Units of this ring are exactly `±q^k`.
    pub fn try_unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.magnitude().is_one() {
            Some(Self::term(c.clone(), -e))
        } else {
            None
        }
    }

    /// `(gcd of integer coefficients, minimal exponent)`; `None` for zero.
    pub fn content(&self) -> Option<(BigInt, i64)> {
        let min_exp = *self.terms.keys().next()?;
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        Some((g, min_exp))
    }

    /// Exact division by the monomial `coeff * q^exp`; every integer division
    /// must be exact (used for content stripping).
    pub fn div_term_exact(&self, coeff: &BigInt, exp: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let (quot, rem) = c.div_rem(coeff);
                debug_assert!(rem.is_zero(), "non-exact content division");
                (e - exp, quot)
            })
            .collect();
        LaurentInt { terms }
    }

    /// Sign of the coefficient of the highest power of `q` (0 for zero).
    pub fn leading_sign(&self) -> i32 {
        match self.terms.values().next_back() {
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
            None => 0,
        }
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_abs_term(f: &mut fmt::Formatter<'_>, coeff_abs: &BigInt, exp: i64) -> fmt::Result {
    if exp == 0 {
        return write!(f, "{}", coeff_abs);
    }
    if !coeff_abs.is_one() {
        write!(f, "{}*", coeff_abs)?;
    }
    if exp == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{}", exp)
    }
}

impl fmt::Display for LaurentInt {
    /// Canonical text form: terms in descending exponent order,
    /// e.g. `q^2 - 1`, `-q^-1`, `2*q^3 + q - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_abs_term(f, &c.abs(), *e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentInt {
        LaurentInt::q()
    }

    #[test]
    fn add_cancels_inverse() {
        assert!(q().add(&q().neg()).is_zero());
    }

    #[test]
    fn add_keeps_distinct_exponents() {
        let s = LaurentInt::one().add(&LaurentInt::q_pow(-1));
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.coefficient(-1), BigInt::one());
        assert_eq!(s.coefficient(0), BigInt::one());
    }

    #[test]
    fn qhat_plus_qinv_is_q() {
        assert_eq!(LaurentInt::q_hat().add(&LaurentInt::q_pow(-1)), q());
    }

    #[test]
    fn mul_qhat_by_q() {
        let want = LaurentInt::q_pow(2).sub(&LaurentInt::one());
        assert_eq!(LaurentInt::q_hat().mul(&q()), want);
    }

    #[test]
    fn mul_unit_cancellation() {
        assert!(LaurentInt::q_pow(3).mul(&LaurentInt::q_pow(-3)).is_one());
    }

    #[test]
    fn mul_by_zero() {
        assert!(LaurentInt::zero().mul(&LaurentInt::q_pow(5)).is_zero());
    }

    #[test]
    fn signed_powers() {
        assert_eq!(LaurentInt::signed_q_pow(true, 2), LaurentInt::q_pow(2));
        assert_eq!(
            LaurentInt::signed_q_pow(true, -1),
            LaurentInt::q_pow(-1).neg()
        );
        assert!(LaurentInt::signed_q_pow(false, 0).is_one());
        assert_eq!(
            LaurentInt::signed_q_pow(true, -3),
            LaurentInt::term(BigInt::from(-1), -3)
        );
    }

    #[test]
    fn unit_inverse() {
        let u = LaurentInt::term(BigInt::from(-1), 4);
        let inv = u.try_unit_inverse().unwrap();
        assert!(u.mul(&inv).is_one());
        assert!(LaurentInt::q_hat().try_unit_inverse().is_none());
        assert!(LaurentInt::from_int(2).try_unit_inverse().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(LaurentInt::zero().to_string(), "0");
        assert_eq!(LaurentInt::q_hat().to_string(), "q - q^-1");
        assert_eq!(LaurentInt::q_pow(-1).neg().to_string(), "-q^-1");
        assert_eq!(
            LaurentInt::q_pow(2).sub(&LaurentInt::one()).to_string(),
            "q^2 - 1"
        );
        assert_eq!(
            LaurentInt::term(BigInt::from(2), 3)
                .add(&LaurentInt::from_int(-3))
                .to_string(),
            "2*q^3 - 3"
        );
    }
}
