//! Repunit arithmetic and the sufficient conditions for `C_S(P) = K[P]`.
//!
//! Throughout, `s = deg_y σ(y)`, `n = deg_x P` and `ρ = deg_y` of the leading
//! coefficient of P. The leading-coefficient equation of a commuting pair
//! forces `deg_y q_m = ρ·R(m)/R(n)`, where `R(k) = 1 + s + … + s^(k-1)` is the
//! base-`s` repunit of length `k`; everything here is arithmetic on those
//! quotients.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::ore::{OreContext, SkewPoly};
use crate::poly::YPoly;
use crate::scalar::{is_prime, Scalar};
use crate::{Error, Result};

/// Base-`s` repunit: `1 + s + … + s^(length-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repunit {
    pub s: u64,
    pub length: u32,
    pub value: BigUint,
}

impl Repunit {
    pub fn new(s: u64, length: u32) -> Self {
        Repunit {
            s,
            length,
            value: repunit(s, length),
        }
    }
}

/// `Σ_{i<n} s^i`, with `repunit(s, 0) = 0`.
pub fn repunit(s: u64, n: u32) -> BigUint {
    let s = BigUint::from(s);
    let mut acc = BigUint::zero();
    for _ in 0..n {
        acc = acc * &s + 1u32;
    }
    acc
}

/// `gcd(R(m), R(n)) = R(gcd(m, n))`.
pub fn repunit_gcd(s: u64, m: u32, n: u32) -> BigUint {
    repunit(s, m.gcd(&n))
}

/// Prime `n` with `R(n) ∤ ρ` guarantees `C_S(P) = K[P]`.
pub fn criterion_prime_degree(n: u32, s: u64, rho: u64) -> bool {
    is_prime(u64::from(n)) && !(BigUint::from(rho) % repunit(s, n)).is_zero()
}

/// `0 < ρ <= n` guarantees `C_S(P) = K[P]`.
pub fn criterion_small_leading(n: u32, rho: u64) -> bool {
    rho > 0 && rho <= u64::from(n)
}

/// Outcome of the bounded search for a violation of the root hypothesis
/// used when `σ(y) = y^s`.
#[derive(Debug, Clone, PartialEq)]
pub enum PurePowerVerdict<K> {
    /// `a^i` and `a^j` are both roots of the leading coefficient (`i < j`).
    /// This is a genuine violation.
    ViolationFound { a: K, i: u32, j: u32 },
    /// No witness inside K with exponents up to the bound. Witnesses in the
    /// algebraic closure are not searched, so this is not a proof.
    NoViolationUpTo(u32),
}

impl<K> PurePowerVerdict<K> {
    pub fn is_violation(&self) -> bool {
        matches!(self, PurePowerVerdict::ViolationFound { .. })
    }
}

/// Search for `a ∈ K` and `1 <= i < j <= max_exp` with `a^i`, `a^j` both
/// roots of `leading`.
pub fn criterion_pure_power_sigma<K: Scalar>(leading: &YPoly<K>, max_exp: u32) -> PurePowerVerdict<K> {
    let roots = K::roots_of(leading.coeffs());
    if roots.is_empty() {
        return PurePowerVerdict::NoViolationUpTo(max_exp);
    }
    for i in 1..=max_exp {
        for r in &roots {
            for a in r.nth_roots(i) {
                for j in (i + 1)..=max_exp {
                    if roots.contains(&a.pow(j)) {
                        return PurePowerVerdict::ViolationFound { a, i, j };
                    }
                }
            }
        }
    }
    PurePowerVerdict::NoViolationUpTo(max_exp)
}

/// Generator `y^l x^k` of the centralizer of `y^i x^j` when `σ(y) = y^s`
/// and `δ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialGenerator {
    pub l: usize,
    pub k: usize,
}

impl MonomialGenerator {
    pub fn to_skew<K: Scalar>(&self) -> SkewPoly<K> {
        SkewPoly::monomial(K::one(), self.l, self.k)
    }
}

/// Least positive `k` with `R(j) | i·R(k)`, and `l = i·R(k)/R(j)`.
///
/// `k = j` always qualifies, so the search is bounded by `j`.
pub fn monomial_generator(i: usize, j: usize, s: u64) -> Result<MonomialGenerator> {
    if j == 0 {
        return Err(Error::InvalidArgument("x-exponent j must be positive".into()));
    }
    if s < 2 {
        return Err(Error::InvalidArgument("s must be at least 2".into()));
    }
    let rj = repunit(s, j as u32);
    let i_big = BigUint::from(i);
    for k in 1..=j {
        let num = &i_big * repunit(s, k as u32);
        let (l, rem) = num.div_rem(&rj);
        if rem.is_zero() {
            let l = l.to_usize().expect("l <= i");
            return Ok(MonomialGenerator { l, k });
        }
    }
    unreachable!("k = j always yields an integer")
}

/// All criteria evaluated for one element P.
#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaVerdicts<K> {
    pub n: usize,
    pub rho: usize,
    pub s: usize,
    pub prime_degree: bool,
    pub small_leading: bool,
    /// Present when `σ(y) = y^s`.
    pub pure_power: Option<PurePowerVerdict<K>>,
    /// Present when `σ(y) = y^s`, `δ = 0` and P is a monic monomial `y^i x^j`.
    pub monomial: Option<MonomialGenerator>,
}

impl<K> CriteriaVerdicts<K> {
    /// True when some criterion guarantees `C_S(P) = K[P]`.
    ///
    /// The pure-power criterion only contributes when its hypothesis has been
    /// established by other means, so it never counts here.
    pub fn guarantees_polynomial_in_p(&self) -> bool {
        self.n > 0 && (self.prime_degree || self.small_leading)
    }
}

pub const DEFAULT_ROOT_EXPONENT_BOUND: u32 = 6;

/// Evaluate every criterion for `p`. `None` when `deg_x p == 0`.
pub fn evaluate<K: Scalar>(ctx: &OreContext<K>, p: &SkewPoly<K>, max_exp: u32) -> Option<CriteriaVerdicts<K>> {
    let n = p.degree().filter(|&n| n > 0)?;
    let lead = p.leading_coeff()?;
    let rho = lead.degree()?;
    let s = ctx.s();
    let pure = ctx.pure_power_sigma();
    let monomial = match pure {
        Some(s) if ctx.delta_y().is_zero() => lead
            .as_monic_monomial()
            .filter(|_| p.coeffs()[..n].iter().all(YPoly::is_zero))
            .and_then(|i| monomial_generator(i, n, s as u64).ok()),
        _ => None,
    };
    Some(CriteriaVerdicts {
        n,
        rho,
        s,
        prime_degree: criterion_prime_degree(n as u32, s as u64, rho as u64),
        small_leading: criterion_small_leading(n as u32, rho as u64),
        pure_power: pure.map(|_| criterion_pure_power_sigma(lead, max_exp)),
        monomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::scalar::{FieldDescriptor, Fp};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn qp(c: &[i64]) -> YPoly<Rational> {
        YPoly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    #[test]
    fn repunit_examples() {
        assert_eq!(repunit(2, 4), big(15));
        assert_eq!(repunit(7, 1), big(1));
        assert_eq!(repunit(3, 3), big(13));
        assert_eq!(repunit(5, 0), big(0));
        let r = Repunit::new(10, 5);
        assert_eq!(r.value, big(11111));
        // (s^n - 1)/(s - 1)
        assert_eq!(repunit(3, 7), big((3u64.pow(7) - 1) / 2));
    }

    #[test]
    fn repunit_gcd_examples() {
        assert_eq!(repunit_gcd(2, 4, 6), big(3));
        assert_eq!(repunit_gcd(5, 3, 7), big(1));
        assert_eq!(repunit_gcd(3, 6, 4), big(4));
        assert_eq!(repunit(3, 6).gcd(&repunit(3, 4)), big(4));
    }

    #[test]
    fn prime_degree_examples() {
        assert!(criterion_prime_degree(3, 2, 5));
        assert!(!criterion_prime_degree(2, 2, 3));
        assert!(!criterion_prime_degree(4, 2, 1));
        assert!(criterion_prime_degree(2, 2, 5));
    }

    #[test]
    fn small_leading_examples() {
        assert!(criterion_small_leading(5, 5));
        assert!(!criterion_small_leading(5, 0));
        assert!(!criterion_small_leading(2, 3));
    }

    #[test]
    fn pure_power_examples() {
        // (y - 2)(y - 4)
        let v = criterion_pure_power_sigma(&qp(&[8, -6, 1]), 3);
        assert_eq!(
            v,
            PurePowerVerdict::ViolationFound { a: Rational::from_integer(2.into()), i: 1, j: 2 }
        );
        assert_eq!(criterion_pure_power_sigma(&qp(&[-2, 1]), 8), PurePowerVerdict::NoViolationUpTo(8));
        assert_eq!(criterion_pure_power_sigma(&qp(&[3]), 4), PurePowerVerdict::NoViolationUpTo(4));
        // a root at 1 is always a violation: 1^1 = 1^2
        assert!(criterion_pure_power_sigma(&qp(&[-1, 1]), 2).is_violation());
        // over F_7, 2 has order 3 so 2^1 = 2^4 are both roots
        let f7 = YPoly::new(vec![Fp::<7>::from_i64(-2), Fp::<7>::new(1)]);
        assert_eq!(
            criterion_pure_power_sigma(&f7, 4),
            PurePowerVerdict::ViolationFound { a: Fp::new(2), i: 1, j: 4 }
        );
    }

    #[test]
    fn monomial_generator_examples() {
        assert_eq!(monomial_generator(1, 2, 2).unwrap(), MonomialGenerator { l: 1, k: 2 });
        assert_eq!(monomial_generator(0, 1, 2).unwrap(), MonomialGenerator { l: 0, k: 1 });
        assert_eq!(monomial_generator(3, 2, 2).unwrap(), MonomialGenerator { l: 1, k: 1 });
        assert!(monomial_generator(1, 0, 2).is_err());
    }

    /// Brute force over exponent pairs: `y^l x^k` commutes with `y^i x^j`
    /// iff `i + l·s^j = l + i·s^k`.
    fn least_commuting_exponent(i: u64, j: u32, s: u64) -> (u64, u32) {
        for k in 1..=j {
            for l in 0..=i {
                if i + l * s.pow(j) == l + i * s.pow(k) {
                    return (l, k);
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn monomial_generator_matches_exponent_search() {
        for s in 2..5u64 {
            for j in 1..6u32 {
                for i in 0..12u64 {
                    let g = monomial_generator(i as usize, j as usize, s).unwrap();
                    assert_eq!((g.l as u64, g.k as u32), least_commuting_exponent(i, j, s));
                }
            }
        }
    }

    #[test]
    fn evaluate_reports_monomial_generator() {
        let ctx = OreContext::new(FieldDescriptor::Rationals, qp(&[0, 0, 1]), YPoly::zero()).unwrap();
        let p = SkewPoly::monomial(Rational::from_integer(1.into()), 3, 2);
        let v = evaluate(&ctx, &p, 4).unwrap();
        assert_eq!((v.n, v.rho, v.s), (2, 3, 2));
        assert!(!v.prime_degree && !v.small_leading);
        assert_eq!(v.monomial, Some(MonomialGenerator { l: 1, k: 1 }));
        assert!(v.pure_power.unwrap().is_violation()); // 0 is a root of y^3
        assert!(evaluate(&ctx, &SkewPoly::y(), 4).is_none());
    }
}
