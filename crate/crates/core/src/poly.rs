//! Dense univariate polynomials in `y` over a field: the base ring R = K[y].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::{FieldDescriptor, Scalar};
use crate::{Error, Result};

/// Polynomial in `y`, coefficients in ascending order of degree.
///
/// The zero polynomial has no coefficients and degree `None`, which orders
/// below every `Some(d)` and so plays the role of minus infinity.
#[derive(Clone, PartialEq)]
pub struct YPoly<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> YPoly<K> {
    pub fn new(coeffs: Vec<K>) -> Self {
        let mut p = YPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// `c * y^d`
    pub fn monomial(c: K, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); d + 1];
        coeffs[d] = c;
        YPoly { coeffs }
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        Self::monomial(K::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    /// Coefficient of `y^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn coerce(&self, field: &FieldDescriptor) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.coerce(field)).collect())
    }

    /// Multiply by `y^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { coeffs }
    }

    pub fn eval(&self, at: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self(q(y))`, by Horner's rule.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(q) + Self::constant(c.clone()))
    }

    /// Euclidean division: `self = quot * divisor + rem`, `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead_inv = divisor
            .leading_coeff()
            .and_then(Scalar::inverse)
            .ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![K::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Scale to leading coefficient one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff().and_then(Scalar::inverse) {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `Some(c)` when `self == c * other` for a scalar `c`.
    pub fn proportional_to(&self, other: &Self) -> Option<K> {
        if other.is_zero() {
            return self.is_zero().then(K::zero);
        }
        if self.degree() != other.degree() {
            return None;
        }
        let c = self.leading_coeff()?.checked_div(other.leading_coeff()?)?;
        (other.scale(&c) == *self).then_some(c)
    }

    /// `Some(m)` when the polynomial is `y^m` exactly.
    pub fn as_monic_monomial(&self) -> Option<usize> {
        let d = self.degree()?;
        (self.coeffs[..d].iter().all(Zero::is_zero) && self.coeffs[d].is_one()).then_some(d)
    }
}

impl<K: Scalar> Default for YPoly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

fn zip_with<K: Scalar>(a: &[K], b: &[K], f: impl Fn(K, K) -> K) -> Vec<K> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            f(
                a.get(i).cloned().unwrap_or_else(K::zero),
                b.get(i).cloned().unwrap_or_else(K::zero),
            )
        })
        .collect()
}

impl<K: Scalar> Add for &YPoly<K> {
    type Output = YPoly<K>;
    fn add(self, rhs: Self) -> YPoly<K> {
        YPoly::new(zip_with(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl<K: Scalar> Add for YPoly<K> {
    type Output = YPoly<K>;
    fn add(self, rhs: Self) -> YPoly<K> {
        &self + &rhs
    }
}

impl<K: Scalar> Sub for &YPoly<K> {
    type Output = YPoly<K>;
    fn sub(self, rhs: Self) -> YPoly<K> {
        YPoly::new(zip_with(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl<K: Scalar> Sub for YPoly<K> {
    type Output = YPoly<K>;
    fn sub(self, rhs: Self) -> YPoly<K> {
        &self - &rhs
    }
}

impl<K: Scalar> Neg for YPoly<K> {
    type Output = YPoly<K>;
    fn neg(self) -> YPoly<K> {
        YPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<K: Scalar> Mul for &YPoly<K> {
    type Output = YPoly<K>;
    fn mul(self, rhs: Self) -> YPoly<K> {
        YPoly::mul(self, rhs)
    }
}

impl<K: Scalar> fmt::Debug for YPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

impl<K: Scalar> fmt::Display for YPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_ypoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    type Q = BigRational;

    fn qp(c: &[i64]) -> YPoly<Q> {
        YPoly::new(c.iter().map(|&v| Q::from_integer(v.into())).collect())
    }

    /// Schoolbook convolution written independently of `YPoly::mul`.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..a.len() {
            for j in 0..b.len() {
                out[i + j] += a[i] * b[j];
            }
        }
        out
    }

    #[test]
    fn mul_examples() {
        assert_eq!(qp(&[1, 1]).mul(&qp(&[-1, 1])), qp(&[-1, 0, 1]));
        assert!(qp(&[3, 2]).mul(&YPoly::zero()).is_zero());
        // (y^2 + y)(y + 2)
        assert_eq!(qp(&[0, 1, 1]).mul(&qp(&[2, 1])), qp(&convolve(&[0, 1, 1], &[2, 1])));
        assert_eq!(qp(&[0, 1, 1]).mul(&qp(&[2, 1])), qp(&[0, 2, 3, 1]));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(qp(&[1, 0, 1]).compose(&qp(&[0, 0, 0, 1])), qp(&[1, 0, 0, 0, 0, 0, 1]));
        let q = qp(&[4, -1, 7]);
        assert_eq!(YPoly::y().compose(&q), q);
        // (y^2 + y) o (y + 1): expand (y+1)^2 + (y+1) by hand
        assert_eq!(qp(&[0, 1, 1]).compose(&qp(&[1, 1])), qp(&[2, 3, 1]));
    }

    #[test]
    fn divrem_examples() {
        assert_eq!(qp(&[-1, 0, 1]).divrem(&qp(&[-1, 1])).unwrap(), (qp(&[1, 1]), YPoly::zero()));
        assert_eq!(qp(&[0, 1]).divrem(&qp(&[0, 0, 1])).unwrap(), (YPoly::zero(), qp(&[0, 1])));
        assert_eq!(qp(&[0, 2, 0, 1]).divrem(&qp(&[1, 0, 1])).unwrap(), (qp(&[0, 1]), qp(&[0, 1])));
        assert!(matches!(qp(&[1]).divrem(&YPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(qp(&[-1, 0, 1]).gcd(&qp(&[-1, 1])), qp(&[-1, 1]));
        assert_eq!(qp(&[4, 2]).gcd(&YPoly::zero()), qp(&[2, 1]));
        assert_eq!(qp(&[-4, 0, 1]).gcd(&qp(&[-2, -1, 1])), qp(&[-2, 1]));
        assert!(YPoly::<Q>::zero().gcd(&YPoly::zero()).is_zero());
    }

    #[test]
    fn degree_sentinel_orders_below_integers() {
        assert_eq!(YPoly::<Q>::zero().degree(), None);
        assert!(YPoly::<Q>::zero().degree() < qp(&[5]).degree());
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..10, 0..6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn mul_degree_is_additive(a in small_poly(), b in small_poly()) {
            let (a, b) = (qp(&a), qp(&b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let d = a.degree().unwrap() + b.degree().unwrap();
            prop_assert_eq!(a.mul(&b).degree(), Some(d));
        }

        #[test]
        fn compose_is_multiplicative(a in small_poly(), b in small_poly(), q in small_poly()) {
            let (a, b, q) = (qp(&a), qp(&b), qp(&q));
            prop_assert_eq!(a.mul(&b).compose(&q), a.compose(&q).mul(&b.compose(&q)));
        }

        #[test]
        fn divrem_contract(a in small_poly(), b in small_poly()) {
            let (a, b) = (qp(&a), qp(&b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&q.mul(&b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_with_planted_factor(a in small_poly(), b in small_poly(), f in small_poly()) {
            let (a, b, f) = (qp(&a), qp(&b), qp(&f));
            prop_assume!(!f.is_zero());
            let (fa, fb) = (a.mul(&f), b.mul(&f));
            let g = fa.gcd(&fb);
            if !g.is_zero() {
                prop_assert!(fa.divrem(&g).unwrap().1.is_zero());
                prop_assert!(fb.divrem(&g).unwrap().1.is_zero());
                prop_assert!(g.divrem(&f.monic()).unwrap().1.is_zero());
                prop_assert_eq!(g.leading_coeff().cloned(), Some(Q::one()));
            }
        }
    }
}
