//! The Ore extension S = K[y][x; σ, δ].
//!
//! σ is the K-algebra endomorphism fixed by `σ(y)`, δ the σ-derivation fixed
//! by `δ(y)`. Elements of S are kept in the canonical form Σ aᵢ(y) xⁱ and
//! products are normalized with the relation `x·r = σ(r)·x + δ(r)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::poly::YPoly;
use crate::scalar::{FieldDescriptor, Scalar};
use crate::{Error, Result};

/// Element of S: `coeffs[i]` is the coefficient of `x^i`.
#[derive(Clone, PartialEq)]
pub struct SkewPoly<K> {
    coeffs: Vec<YPoly<K>>,
}

impl<K: Scalar> SkewPoly<K> {
    pub fn new(coeffs: Vec<YPoly<K>>) -> Self {
        let mut p = SkewPoly { coeffs };
        while p.coeffs.last().is_some_and(YPoly::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_ypoly(YPoly::one())
    }

    pub fn constant(c: K) -> Self {
        Self::from_ypoly(YPoly::constant(c))
    }

    pub fn from_ypoly(r: YPoly<K>) -> Self {
        Self::new(vec![r])
    }

    /// The generator `x`.
    pub fn x() -> Self {
        Self::new(vec![YPoly::zero(), YPoly::one()])
    }

    /// The element `y`.
    pub fn y() -> Self {
        Self::from_ypoly(YPoly::y())
    }

    /// `c · y^ydeg · x^xdeg`
    pub fn monomial(c: K, ydeg: usize, xdeg: usize) -> Self {
        Self::from_ypoly(YPoly::monomial(c, ydeg)).shift_x(xdeg)
    }

    /// `r(y) · x^k`
    pub fn term(r: YPoly<K>, k: usize) -> Self {
        Self::from_ypoly(r).shift_x(k)
    }

    pub fn coeffs(&self) -> &[YPoly<K>] {
        &self.coeffs
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> YPoly<K> {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree in `x`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest `y`-degree over all coefficients.
    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(YPoly::degree).max()
    }

    pub fn leading_coeff(&self) -> Option<&YPoly<K>> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for elements of R = K[y] (x-degree at most zero).
    pub fn in_base_ring(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True for elements of K.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1 && self.coeffs.first().map_or(true, YPoly::is_constant)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn coerce(&self, field: &FieldDescriptor) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.coerce(field)).collect())
    }

    /// Multiply on the right by `x^k` (a pure index shift).
    pub fn shift_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![YPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        SkewPoly { coeffs }
    }

    /// Multiply on the left by `r(y)`; no normalization needed.
    pub fn left_mul_base(&self, r: &YPoly<K>) -> Self {
        Self::new(self.coeffs.iter().map(|a| r.mul(a)).collect())
    }
}

impl<K: Scalar> Default for SkewPoly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

fn zip_coeffs<K: Scalar>(
    a: &[YPoly<K>],
    b: &[YPoly<K>],
    f: impl Fn(&YPoly<K>, &YPoly<K>) -> YPoly<K>,
) -> Vec<YPoly<K>> {
    let zero = YPoly::zero();
    (0..a.len().max(b.len()))
        .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect()
}

impl<K: Scalar> Add for &SkewPoly<K> {
    type Output = SkewPoly<K>;
    fn add(self, rhs: Self) -> SkewPoly<K> {
        SkewPoly::new(zip_coeffs(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl<K: Scalar> Add for SkewPoly<K> {
    type Output = SkewPoly<K>;
    fn add(self, rhs: Self) -> SkewPoly<K> {
        &self + &rhs
    }
}

impl<K: Scalar> Sub for &SkewPoly<K> {
    type Output = SkewPoly<K>;
    fn sub(self, rhs: Self) -> SkewPoly<K> {
        SkewPoly::new(zip_coeffs(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl<K: Scalar> Sub for SkewPoly<K> {
    type Output = SkewPoly<K>;
    fn sub(self, rhs: Self) -> SkewPoly<K> {
        &self - &rhs
    }
}

impl<K: Scalar> Neg for SkewPoly<K> {
    type Output = SkewPoly<K>;
    fn neg(self) -> SkewPoly<K> {
        SkewPoly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<K: Scalar> fmt::Debug for SkewPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}

impl<K: Scalar> fmt::Display for SkewPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_skew(self))
    }
}

/// Lazily grown table of `σ(y)^k`.
#[derive(Default)]
struct Tables<K> {
    sigma_powers: Vec<YPoly<K>>,
}

/// The data `(K, σ(y), δ(y))` defining S.
///
/// Clones share the memoized power tables; the context itself never
/// changes after construction.
#[derive(Clone)]
pub struct OreContext<K> {
    field: FieldDescriptor,
    sigma_y: YPoly<K>,
    delta_y: YPoly<K>,
    /// `(s, c)` when `σ(y) = c·y^s`; then σ is a pure reindexing.
    sigma_monomial: Option<(usize, K)>,
    /// `σ(y) - y`, never zero since `deg σ(y) >= 2`.
    sigma_minus_y: YPoly<K>,
    tables: Arc<RwLock<Tables<K>>>,
}

impl<K: Scalar> OreContext<K> {
    /// Requires `deg_y σ(y) >= 2`.
    pub fn new(field: FieldDescriptor, sigma_y: YPoly<K>, delta_y: YPoly<K>) -> Result<Self> {
        if !K::accepts_field(&field) {
            return Err(Error::InvalidContext(format!(
                "scalar type cannot represent the field {field}"
            )));
        }
        match sigma_y.degree() {
            Some(d) if d >= 2 => {}
            d => {
                return Err(Error::InvalidContext(format!(
                    "sigma(y) must have y-degree at least 2 (deg_y sigma(y) > 1), got {}",
                    d.map_or("-inf".to_string(), |d| d.to_string())
                )))
            }
        }
        let sigma_y = sigma_y.coerce(&field);
        let sigma_monomial = sigma_y.degree().and_then(|s| {
            let lower_zero = sigma_y.coeffs()[..s].iter().all(Zero::is_zero);
            lower_zero.then(|| (s, sigma_y.coeffs()[s].clone()))
        });
        Ok(OreContext {
            sigma_minus_y: &sigma_y - &YPoly::y(),
            sigma_y,
            delta_y: delta_y.coerce(&field),
            sigma_monomial,
            field,
            tables: Arc::new(RwLock::new(Tables {
                sigma_powers: vec![YPoly::one()],
            })),
        })
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn sigma_y(&self) -> &YPoly<K> {
        &self.sigma_y
    }

    pub fn delta_y(&self) -> &YPoly<K> {
        &self.delta_y
    }

    /// `s = deg_y σ(y)`.
    pub fn s(&self) -> usize {
        self.sigma_y.degree().expect("validated at construction")
    }

    /// `Some(s)` when `σ(y) = y^s` exactly.
    pub fn pure_power_sigma(&self) -> Option<usize> {
        self.sigma_y.as_monic_monomial()
    }

    /// `p` with every coefficient tagged as an element of this field.
    pub fn embed(&self, p: &SkewPoly<K>) -> SkewPoly<K> {
        p.coerce(&self.field)
    }

    /// Scalar image of an integer in this context's field.
    pub fn scalar(&self, n: i64) -> K {
        K::from_integer(&self.field, n)
    }

    fn ensure_tables(&self, upto: usize) {
        if self.tables.read().expect("table lock").sigma_powers.len() > upto {
            return;
        }
        let mut t = self.tables.write().expect("table lock");
        while t.sigma_powers.len() <= upto {
            let next = t.sigma_powers.last().expect("starts at 1").mul(&self.sigma_y);
            t.sigma_powers.push(next);
        }
    }

    /// `σ(p) = p(σ(y))`.
    pub fn sigma(&self, p: &YPoly<K>) -> YPoly<K> {
        let Some(d) = p.degree() else {
            return YPoly::zero();
        };
        if let Some((s, c)) = &self.sigma_monomial {
            let mut out = vec![K::zero(); s * d + 1];
            let mut ck = K::one();
            for (k, a) in p.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out[s * k] = a.clone() * ck.clone();
                }
                ck = ck * c.clone();
            }
            return YPoly::new(out);
        }
        self.ensure_tables(d);
        let t = self.tables.read().expect("table lock");
        let mut acc = vec![K::zero(); t.sigma_powers[d].coeffs().len()];
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, b) in t.sigma_powers[k].coeffs().iter().enumerate() {
                if !b.is_zero() {
                    acc[i] = acc[i].clone() + c.clone() * b.clone();
                }
            }
        }
        YPoly::new(acc)
    }

    /// `σ^k(p)`; `σ^0` is the identity.
    pub fn sigma_iter(&self, p: &YPoly<K>, k: usize) -> YPoly<K> {
        (0..k).fold(p.clone(), |acc, _| self.sigma(&acc))
    }

    /// `δ(p)`, extended from `δ(y)` by linearity and the twisted Leibniz rule.
    pub fn delta(&self, p: &YPoly<K>) -> YPoly<K> {
        self.delta_given_sigma(p, &self.sigma(p))
    }

    // Summing δ(y^k) = Σ_{i<k} σ(y)^i δ(y) y^(k-1-i) over the terms of p
    // telescopes to δ(p) = δ(y)·(σ(p) - p)/(σ(y) - y), an exact division.
    fn delta_given_sigma(&self, p: &YPoly<K>, sigma_p: &YPoly<K>) -> YPoly<K> {
        if self.delta_y.is_zero() || p.is_constant() {
            return YPoly::zero();
        }
        let (q, r) = (sigma_p - p)
            .divrem(&self.sigma_minus_y)
            .expect("sigma(y) - y is nonzero");
        debug_assert!(r.is_zero(), "sigma(p) - p is divisible by sigma(y) - y");
        q.mul(&self.delta_y)
    }

    /// `x · a`
    pub fn x_times(&self, a: &SkewPoly<K>) -> SkewPoly<K> {
        let mut out = vec![YPoly::zero(); a.coeffs.len() + 1];
        for (j, b) in a.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let sb = self.sigma(b);
            out[j] = &out[j] + &self.delta_given_sigma(b, &sb);
            out[j + 1] = &out[j + 1] + &sb;
        }
        SkewPoly::new(out)
    }

    /// `x^k · a`
    pub fn x_pow_times(&self, a: &SkewPoly<K>, k: usize) -> SkewPoly<K> {
        (0..k).fold(a.clone(), |acc, _| self.x_times(&acc))
    }

    /// Product in S, in canonical form.
    pub fn mul(&self, a: &SkewPoly<K>, b: &SkewPoly<K>) -> SkewPoly<K> {
        if a.is_zero() || b.is_zero() {
            return SkewPoly::zero();
        }
        let mut acc = SkewPoly::zero();
        let mut xb = b.clone();
        for (i, ai) in a.coeffs.iter().enumerate() {
            if i > 0 {
                xb = self.x_times(&xb);
            }
            if !ai.is_zero() {
                acc = &acc + &xb.left_mul_base(ai);
            }
        }
        acc
    }

    pub fn pow(&self, a: &SkewPoly<K>, e: usize) -> SkewPoly<K> {
        (0..e).fold(SkewPoly::one(), |acc, _| self.mul(a, &acc))
    }

    /// `ab - ba`
    pub fn commutator(&self, a: &SkewPoly<K>, b: &SkewPoly<K>) -> SkewPoly<K> {
        &self.mul(a, b) - &self.mul(b, a)
    }

    pub fn commutes(&self, a: &SkewPoly<K>, b: &SkewPoly<K>) -> bool {
        self.commutator(a, b).is_zero()
    }
}

impl<K: Scalar> fmt::Debug for OreContext<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OreContext")
            .field("field", &self.field)
            .field("sigma_y", &self.sigma_y)
            .field("delta_y", &self.delta_y)
            .finish()
    }
}

impl<K: Scalar> PartialEq for OreContext<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.sigma_y == other.sigma_y && self.delta_y == other.delta_y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::scalar::Fp;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> YPoly<Rational> {
        YPoly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    fn ctx(sigma: &[i64], delta: &[i64]) -> OreContext<Rational> {
        OreContext::new(FieldDescriptor::Rationals, qp(sigma), qp(delta)).unwrap()
    }

    fn mono(ydeg: usize, xdeg: usize) -> SkewPoly<Rational> {
        SkewPoly::monomial(Rational::from_integer(1.into()), ydeg, xdeg)
    }

    #[test]
    fn rejects_degree_one_sigma() {
        assert!(matches!(
            OreContext::new(FieldDescriptor::Rationals, qp(&[0, 1]), qp(&[])),
            Err(Error::InvalidContext(_))
        ));
        assert!(OreContext::<Fp<7>>::new(FieldDescriptor::Rationals, YPoly::y().pow(2), YPoly::zero()).is_err());
    }

    #[test]
    fn sigma_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        assert_eq!(c.sigma(&qp(&[0, 0, 0, 1])), qp(&[0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(c.sigma(&qp(&[5])), qp(&[5]));
        let c = ctx(&[1, 0, 1], &[]);
        assert_eq!(c.sigma(&qp(&[0, 1, 1])), qp(&[2, 0, 3, 0, 1]));
        assert_eq!(c.sigma(&qp(&[0, 1, 1])), qp(&[0, 1, 1]).compose(c.sigma_y()));
    }

    #[test]
    fn sigma_iter_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        assert_eq!(c.sigma_iter(&qp(&[3, 1]), 0), qp(&[3, 1]));
        assert_eq!(c.sigma_iter(&YPoly::y(), 3), YPoly::y().pow(8));
        assert_eq!(c.sigma_iter(&qp(&[1, 1]), 2), qp(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn delta_examples() {
        let c = ctx(&[0, 0, 1], &[1]);
        assert!(c.delta(&qp(&[7])).is_zero());
        assert_eq!(c.delta(&YPoly::y()), qp(&[1]));
        assert_eq!(c.delta(&qp(&[0, 0, 1])), qp(&[0, 1, 1]));
    }

    #[test]
    fn defining_relation_example() {
        let c = ctx(&[0, 0, 1], &[1]);
        let xy = c.mul(&SkewPoly::x(), &SkewPoly::y());
        assert_eq!(xy, &mono(2, 1) + &SkewPoly::one());
        let a = &mono(3, 2) + &mono(1, 0);
        assert_eq!(c.mul(&a, &SkewPoly::one()), a);
        let c0 = ctx(&[0, 0, 1], &[]);
        assert_eq!(c0.mul(&mono(0, 2), &mono(1, 1)), mono(4, 3));
    }

    #[test]
    fn pow_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        let yx = mono(1, 1);
        assert_eq!(c.pow(&yx, 0), SkewPoly::one());
        assert_eq!(c.pow(&yx, 1), yx);
        assert_eq!(c.pow(&yx, 2), mono(3, 2));
    }

    #[test]
    fn commutator_examples() {
        let c = ctx(&[0, 0, 1], &[1]);
        let a = &mono(2, 3) + &mono(1, 0);
        assert!(c.commutator(&a, &a).is_zero());
        let expected = SkewPoly::new(vec![qp(&[1]), qp(&[0, -1, 1])]);
        assert_eq!(c.commutator(&SkewPoly::x(), &SkewPoly::y()), expected);
        let c0 = ctx(&[0, 0, 1], &[]);
        assert!(c0.commutator(&mono(1, 1), &mono(3, 2)).is_zero());
        assert_eq!(c0.mul(&mono(1, 1), &mono(3, 2)), mono(7, 3));
    }

    fn arb_ypoly(maxdeg: usize) -> impl Strategy<Value = YPoly<Rational>> {
        prop::collection::vec(-5i64..6, 0..=maxdeg + 1).prop_map(|c| qp(&c))
    }

    fn arb_skew() -> impl Strategy<Value = SkewPoly<Rational>> {
        prop::collection::vec(arb_ypoly(3), 0..=4).prop_map(SkewPoly::new)
    }

    // δ(y^k) summed term by term, without the closed form.
    fn delta_by_sum(c: &OreContext<Rational>, p: &YPoly<Rational>) -> YPoly<Rational> {
        let mut out = YPoly::zero();
        for (k, a) in p.coeffs().iter().enumerate() {
            for i in 0..k {
                let t = c.sigma_y().pow(i).mul(c.delta_y()).shift(k - 1 - i).scale(a);
                out = &out + &t;
            }
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn sigma_and_delta_match_oracles(p in arb_ypoly(6)) {
            for (sig, del) in [(&[0, 0, 1][..], &[1][..]), (&[0, 0, -3], &[0, 2]), (&[1, 2, 1], &[3, 0, 1]), (&[0, -1, 0, 2], &[1, 0, 1])] {
                let c = ctx(sig, del);
                prop_assert_eq!(c.sigma(&p), p.compose(c.sigma_y()));
                prop_assert_eq!(c.delta(&p), delta_by_sum(&c, &p));
            }
        }

        #[test]
        fn leibniz_holds(a in arb_ypoly(4), b in arb_ypoly(4)) {
            let c = ctx(&[1, 2, 1], &[3, 0, 1]);
            let lhs = c.delta(&a.mul(&b));
            let rhs = &c.sigma(&a).mul(&c.delta(&b)) + &c.delta(&a).mul(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn leading_coefficient_rule(a in arb_skew(), b in arb_skew()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let c = ctx(&[0, 1, 1], &[1, 1]);
            let (i, j) = (a.degree().unwrap(), b.degree().unwrap());
            let ab = c.mul(&a, &b);
            prop_assert_eq!(ab.degree(), Some(i + j));
            let expected = a.leading_coeff().unwrap().mul(&c.sigma_iter(b.leading_coeff().unwrap(), i));
            prop_assert_eq!(ab.leading_coeff().unwrap(), &expected);
        }

        #[test]
        fn distributive(a in arb_skew(), b in arb_skew(), d in arb_skew()) {
            let c = ctx(&[0, 0, 1], &[1]);
            prop_assert_eq!(c.mul(&a, &(&b + &d)), &c.mul(&a, &b) + &c.mul(&a, &d));
            prop_assert_eq!(c.mul(&(&b + &d), &a), &c.mul(&b, &a) + &c.mul(&d, &a));
        }
    }
}
