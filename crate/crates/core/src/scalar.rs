//! Exact field scalars.
//!
//! Everything above this module is generic over [`Scalar`]. Three
//! implementations are provided:
//!
//! - [`BigRational`]: the rationals, the reference semantics.
//! - [`Fp`]: a prime field whose modulus is fixed at compile time. Used for
//!   fast randomized stress runs.
//! - [`FieldElem`]: a runtime-tagged scalar (rational or residue modulo a
//!   prime chosen at run time). This is what the command line front-end uses.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// The field a context computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "rationals"),
            FieldDescriptor::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Trial-division primality; desk-scale moduli only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of an exact field K.
///
/// Arithmetic is exact. `Zero::zero()` and `One::one()` must be valid in
/// every field the type can represent.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Whether values of this type can live in `field`.
    fn accepts_field(field: &FieldDescriptor) -> bool;

    /// Image of a rational number in `field`. `None` when the denominator
    /// vanishes in `field`.
    fn from_rational(field: &FieldDescriptor, q: &BigRational) -> Option<Self>;

    fn from_integer(field: &FieldDescriptor, n: i64) -> Self {
        Self::from_rational(field, &BigRational::from_integer(BigInt::from(n)))
            .expect("integers embed in every field")
    }

    /// Size measure used for pivot selection.
    fn bit_size(&self) -> u64;

    /// All `a` in K with `a^n == self`. `n >= 1`.
    fn nth_roots(&self, n: u32) -> Vec<Self>;

    /// Distinct roots in K of the polynomial with ascending coefficients
    /// `coeffs` (no trailing zero). Empty for constants.
    fn roots_of(coeffs: &[Self]) -> Vec<Self>;

    /// The same value tagged as an element of `field`. Only types that can
    /// hold several fields need to override this.
    fn coerce(&self, _field: &FieldDescriptor) -> Self {
        self.clone()
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * inv)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn horner<K: Scalar>(coeffs: &[K], at: &K) -> K {
    coeffs
        .iter()
        .rev()
        .fold(K::zero(), |acc, c| acc * at.clone() + c.clone())
}

impl Scalar for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn accepts_field(field: &FieldDescriptor) -> bool {
        matches!(field, FieldDescriptor::Rationals)
    }

    fn from_rational(_field: &FieldDescriptor, q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    fn bit_size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    fn nth_roots(&self, n: u32) -> Vec<Self> {
        assert!(n >= 1, "root index must be positive");
        if self.is_zero() {
            return vec![Self::zero()];
        }
        if self.is_negative() && n % 2 == 0 {
            return Vec::new();
        }
        let num = self.numer().abs();
        let den = self.denom().clone();
        let (rn, rd) = (num.nth_root(n), den.nth_root(n));
        if num::pow_big(&rn, n) != num || num::pow_big(&rd, n) != den {
            return Vec::new();
        }
        let root = BigRational::new(rn, rd);
        if self.is_negative() {
            vec![-root]
        } else if n % 2 == 0 {
            vec![-root.clone(), root]
        } else {
            vec![root]
        }
    }

    fn roots_of(coeffs: &[Self]) -> Vec<Self> {
        if coeffs.len() < 2 {
            return Vec::new();
        }
        // Clear denominators, then apply the rational root theorem.
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            roots.push(Self::zero());
        }
        let trimmed = &ints[low..];
        if trimmed.len() >= 2 {
            let lead = trimmed.last().unwrap();
            let constant = &trimmed[0];
            let nums = positive_divisors(constant);
            let dens = positive_divisors(lead);
            let mut seen: Vec<BigRational> = Vec::new();
            for p in &nums {
                for q in &dens {
                    for sign in [-1, 1] {
                        let cand = BigRational::new(p * sign, q.clone());
                        if seen.contains(&cand) {
                            continue;
                        }
                        seen.push(cand.clone());
                        if horner(coeffs, &cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

mod num {
    use num_bigint::BigInt;
    use num_traits::One;

    pub fn pow_big(b: &BigInt, e: u32) -> BigInt {
        let mut acc = BigInt::one();
        for _ in 0..e {
            acc *= b;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Compile-time prime field
// ---------------------------------------------------------------------------

/// Residue modulo `P`. Ring operations work for any modulus; inverses
/// and root finding assume `P` is prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow_u64(self, mut e: u64) -> Self {
        let mut acc = 1u64;
        let mut base = self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, P);
            }
            base = mul_mod(base, base, P);
            e >>= 1;
        }
        Fp(acc)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if a % m == 0 {
        return None;
    }
    let e = i128::from(a).extended_gcd(&i128::from(m));
    Some(e.x.rem_euclid(i128::from(m)) as u64)
}

fn rational_mod(q: &BigRational, m: u64) -> Option<u64> {
    let mb = BigInt::from(m);
    let num = q.numer().mod_floor(&mb).to_u64()?;
    let den = q.denom().mod_floor(&mb).to_u64()?;
    inv_mod(den, m).map(|d| mul_mod(num, d, m))
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(mul_mod(self.0, rhs.0, P))
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn inverse(&self) -> Option<Self> {
        inv_mod(self.0, P).map(Fp)
    }

    fn accepts_field(field: &FieldDescriptor) -> bool {
        *field == FieldDescriptor::Prime(P)
    }

    fn from_rational(_field: &FieldDescriptor, q: &BigRational) -> Option<Self> {
        rational_mod(q, P).map(Fp)
    }

    fn bit_size(&self) -> u64 {
        64 - u64::from(self.0.leading_zeros())
    }

    fn nth_roots(&self, n: u32) -> Vec<Self> {
        (0..P)
            .map(Fp)
            .filter(|a| a.pow_u64(u64::from(n)) == *self)
            .collect()
    }

    fn roots_of(coeffs: &[Self]) -> Vec<Self> {
        if coeffs.len() < 2 {
            return Vec::new();
        }
        (0..P).map(Fp).filter(|a| horner(coeffs, a).is_zero()).collect()
    }
}

// ---------------------------------------------------------------------------
// Runtime-tagged scalar
// ---------------------------------------------------------------------------

/// A scalar whose field is chosen at run time.
///
/// Rationals map into a prime field through the canonical reduction map, so
/// the untagged constants produced by `zero()`, `one()` and integer literals
/// combine with residues transparently. Mixing two different moduli panics.
#[derive(Clone)]
pub enum FieldElem {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl FieldElem {
    pub fn residue(value: u64, modulus: u64) -> Self {
        FieldElem::Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn rational(q: BigRational) -> Self {
        FieldElem::Rational(q)
    }

    fn modulus(&self) -> Option<u64> {
        match self {
            FieldElem::Rational(_) => None,
            FieldElem::Residue { modulus, .. } => Some(*modulus),
        }
    }

    fn reduce_to(&self, m: u64) -> u64 {
        match self {
            FieldElem::Rational(q) => rational_mod(q, m)
                .unwrap_or_else(|| panic!("{q} has no image modulo {m}")),
            FieldElem::Residue { value, modulus } => {
                assert_eq!(*modulus, m, "mixed prime moduli");
                *value
            }
        }
    }

    fn binary(
        self,
        rhs: Self,
        rat: impl FnOnce(BigRational, BigRational) -> BigRational,
        res: impl FnOnce(u64, u64, u64) -> u64,
    ) -> Self {
        match (self.modulus().or(rhs.modulus()), self, rhs) {
            (None, FieldElem::Rational(a), FieldElem::Rational(b)) => {
                FieldElem::Rational(rat(a, b))
            }
            (Some(m), a, b) => {
                let (x, y) = (a.reduce_to(m), b.reduce_to(m));
                FieldElem::Residue {
                    value: res(x, y, m),
                    modulus: m,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => write!(f, "{q}"),
            FieldElem::Residue { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => write!(f, "{q}"),
            FieldElem::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => a == b,
            (
                FieldElem::Residue { value: a, modulus: m },
                FieldElem::Residue { value: b, modulus: n },
            ) => m == n && a == b,
            (FieldElem::Rational(q), FieldElem::Residue { value, modulus })
            | (FieldElem::Residue { value, modulus }, FieldElem::Rational(q)) => {
                rational_mod(q, *modulus) == Some(*value)
            }
        }
    }
}

impl Add for FieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.binary(rhs, |a, b| a + b, |a, b, m| ((a as u128 + b as u128) % m as u128) as u64)
    }
}

impl Sub for FieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.binary(
            rhs,
            |a, b| a - b,
            |a, b, m| ((a as u128 + m as u128 - b as u128) % m as u128) as u64,
        )
    }
}

impl Mul for FieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.binary(rhs, |a, b| a * b, mul_mod)
    }
}

impl Neg for FieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        match self {
            FieldElem::Rational(q) => FieldElem::Rational(-q),
            FieldElem::Residue { value, modulus } => FieldElem::Residue {
                value: (modulus - value) % modulus,
                modulus,
            },
        }
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Residue { value, .. } => *value == 0,
        }
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::Rational(BigRational::one())
    }
}

impl Scalar for FieldElem {
    fn inverse(&self) -> Option<Self> {
        match self {
            FieldElem::Rational(q) => q.inverse().map(FieldElem::Rational),
            FieldElem::Residue { value, modulus } => {
                inv_mod(*value, *modulus).map(|v| FieldElem::residue(v, *modulus))
            }
        }
    }

    fn accepts_field(_field: &FieldDescriptor) -> bool {
        true
    }

    fn coerce(&self, field: &FieldDescriptor) -> Self {
        match (self, field) {
            (FieldElem::Rational(q), FieldDescriptor::Prime(p)) => match rational_mod(q, *p) {
                Some(v) => FieldElem::residue(v, *p),
                None => self.clone(),
            },
            _ => self.clone(),
        }
    }

    fn from_rational(field: &FieldDescriptor, q: &BigRational) -> Option<Self> {
        match field {
            FieldDescriptor::Rationals => Some(FieldElem::Rational(q.clone())),
            FieldDescriptor::Prime(p) => {
                rational_mod(q, *p).map(|v| FieldElem::residue(v, *p))
            }
        }
    }

    fn bit_size(&self) -> u64 {
        match self {
            FieldElem::Rational(q) => q.bit_size(),
            FieldElem::Residue { value, .. } => 64 - u64::from(value.leading_zeros()),
        }
    }

    fn nth_roots(&self, n: u32) -> Vec<Self> {
        match self {
            FieldElem::Rational(q) => q.nth_roots(n).into_iter().map(FieldElem::Rational).collect(),
            FieldElem::Residue { value, modulus } => (0..*modulus)
                .filter(|a| {
                    let mut acc = 1 % *modulus;
                    for _ in 0..n {
                        acc = mul_mod(acc, *a, *modulus);
                    }
                    acc == *value
                })
                .map(|a| FieldElem::residue(a, *modulus))
                .collect(),
        }
    }

    fn roots_of(coeffs: &[Self]) -> Vec<Self> {
        if coeffs.len() < 2 {
            return Vec::new();
        }
        match coeffs.iter().find_map(FieldElem::modulus) {
            None => {
                let rat: Vec<BigRational> = coeffs
                    .iter()
                    .map(|c| match c {
                        FieldElem::Rational(q) => q.clone(),
                        FieldElem::Residue { .. } => unreachable!(),
                    })
                    .collect();
                BigRational::roots_of(&rat)
                    .into_iter()
                    .map(FieldElem::Rational)
                    .collect()
            }
            Some(m) => (0..m)
                .map(|a| FieldElem::residue(a, m))
                .filter(|a| horner(coeffs, a).is_zero())
                .collect(),
        }
    }
}

/// Parse a rational literal such as `-3`, `7/2`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}
