//! Centralizers `C_S(P)` inside a bounded box of coefficients.
//!
//! The solver treats every coefficient of `Q = Σ c_{a,b} y^b x^a` with
//! `a <= D`, `b <= B` as an unknown and imposes `PQ - QP = 0` coefficient by
//! coefficient. Every solution is an exact element of the centralizer; the
//! box only limits which elements can be seen. Module generators and the
//! reductions below follow the leading-coefficient argument: two commuting
//! elements of equal degree have proportional leading coefficients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::criteria::{self, repunit, CriteriaVerdicts};
use crate::linalg::{echelon_basis_sparse, SparseEchelon, SparseRow};
use crate::ore::{OreContext, SkewPoly};
use crate::poly::YPoly;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Integrality condition on the `y`-degree `k` of the leading coefficient of
/// a degree-`m` element commuting with P: `k = ρ(s^m - 1)/(s^n - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeConstraint {
    pub m: usize,
    pub k: BigRational,
    pub admissible: bool,
}

impl DegreeConstraint {
    /// `k` as an integer when admissible.
    pub fn k_integer(&self) -> Option<usize> {
        self.admissible.then(|| self.k.to_integer().to_usize()).flatten()
    }
}

/// `(s^m - 1)/(s^n - 1) = R(m)/R(n)` for base-`s` repunits `R`.
pub fn leading_constraint(n: usize, rho: usize, s: usize, m: usize) -> DegreeConstraint {
    assert!(n > 0, "x-degree of P must be positive");
    let num = BigInt::from(rho) * BigInt::from(repunit(s as u64, m as u32));
    let den = BigInt::from(repunit(s as u64, n as u32));
    let k = BigRational::new(num, den);
    DegreeConstraint {
        m,
        admissible: k.is_integer(),
        k,
    }
}

/// The constraints for `1 <= m <= max_m` whose `k` is a nonnegative integer.
pub fn admissible_degrees<K: Scalar>(
    ctx: &OreContext<K>,
    p: &SkewPoly<K>,
    max_m: usize,
) -> Result<Vec<DegreeConstraint>> {
    let (n, rho) = degree_and_rho(p)?;
    Ok((1..=max_m)
        .map(|m| leading_constraint(n, rho, ctx.s(), m))
        .filter(|c| c.admissible)
        .collect())
}

fn degree_and_rho<K: Scalar>(p: &SkewPoly<K>) -> Result<(usize, usize)> {
    match (p.degree(), p.leading_coeff().and_then(YPoly::degree)) {
        (Some(n), Some(rho)) if n > 0 => Ok((n, rho)),
        _ => Err(Error::InvalidArgument(
            "P must have positive x-degree".into(),
        )),
    }
}

/// Size of the coefficient box and the stability re-solve step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// `D`: largest x-degree of a candidate.
    pub max_xdeg: usize,
    /// `B`: largest y-degree of any coefficient of a candidate.
    pub ydeg_bound: usize,
    /// The space is recomputed at `B + stability_delta`.
    pub stability_delta: usize,
}

pub const DEFAULT_STABILITY_DELTA: usize = 5;
const YDEG_MARGIN: usize = 8;

/// `max k over admissible m <= D`, plus a margin of 8.
pub fn default_ydeg_bound<K: Scalar>(ctx: &OreContext<K>, p: &SkewPoly<K>, max_xdeg: usize) -> usize {
    let top = admissible_degrees(ctx, p, max_xdeg)
        .map(|cs| cs.iter().filter_map(DegreeConstraint::k_integer).max().unwrap_or(0))
        .unwrap_or(0);
    top + YDEG_MARGIN
}

/// Elements whose centralizer has a known closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialCase {
    /// P ∈ K: the centralizer is all of S.
    Constant,
    /// P ∈ R \ K: the centralizer is R.
    BaseRing,
}

/// Output of [`centralizer_space`].
#[derive(Debug, Clone)]
pub struct CentralizerReport<K: Scalar> {
    pub context: OreContext<K>,
    pub p: SkewPoly<K>,
    pub bounds: Bounds,
    /// Canonical basis of the bounded solution space, ascending by leading
    /// monomial. Each element has leading coefficient monic in `y`.
    pub basis: Vec<SkewPoly<K>>,
    /// One minimal-degree element per residue class of degrees mod `deg P`.
    pub module_generators: Vec<SkewPoly<K>>,
    pub generator_count: usize,
    /// All basis elements commute pairwise.
    pub commutative: bool,
    /// Dimension unchanged at `B + stability_delta`.
    pub stable: bool,
    pub stability_dim: usize,
    /// `P^q` fits in the box for every `q` with `q·deg P <= D`.
    pub powers_in_box: bool,
    /// Number of basis elements per x-degree: the dimension of the space of
    /// leading coefficients of that degree.
    pub leading_space_dims: BTreeMap<usize, usize>,
    /// Every degree-0 solution is a constant.
    pub base_ring_part_is_constants: bool,
    pub special_case: Option<SpecialCase>,
    pub criteria: Option<CriteriaVerdicts<K>>,
}

impl<K: Scalar> CentralizerReport<K> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The uniqueness property: at most one leading coefficient direction
    /// per degree.
    pub fn leading_spaces_at_most_one(&self) -> bool {
        self.leading_space_dims.values().all(|&d| d <= 1)
    }

    /// Soundness failures: properties that hold for every nonconstant P.
    pub fn soundness_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.special_case.is_some() {
            return out;
        }
        if !self.commutative {
            out.push("centralizer basis is not commutative");
        }
        if !self.leading_spaces_at_most_one() {
            out.push("leading coefficient space of some degree exceeds dimension one");
        }
        if !self.base_ring_part_is_constants {
            out.push("a degree-0 solution is not constant");
        }
        if let Some(n) = self.p.degree() {
            if self.generator_count > n {
                out.push("more module generators than deg P");
            }
        }
        out
    }
}

/// Column of unknown `y^b x^a` in a `(D+1)×(B+1)` box, ordered so that
/// column 0 is the largest monomial `(x^D, y^B)`.
fn column(a: usize, b: usize, bounds_d: usize, bounds_b: usize) -> usize {
    (bounds_d - a) * (bounds_b + 1) + (bounds_b - b)
}

fn monomial_of(col: usize, bounds_d: usize, bounds_b: usize) -> (usize, usize) {
    let (hi, lo) = col.div_rem(&(bounds_b + 1));
    (bounds_d - hi, bounds_b - lo)
}

/// Canonical basis of `{Q in box : QA = AQ for all A in elems}`.
pub fn solve_box<K: Scalar>(
    ctx: &OreContext<K>,
    elems: &[SkewPoly<K>],
    max_xdeg: usize,
    ydeg_bound: usize,
) -> Vec<SkewPoly<K>> {
    let (d, b) = (max_xdeg, ydeg_bound);
    let cols = (d + 1) * (b + 1);
    let mut rows: HashMap<(usize, usize, usize), Vec<(usize, K)>> = HashMap::new();
    for (e, p) in elems.iter().enumerate() {
        if p.is_constant() {
            continue;
        }
        // P·(y^j x^i) = (P·y^j)·x^i and (y^j x^i)·P = y^j·(x^i·P).
        let p_y: Vec<SkewPoly<K>> = (0..=b)
            .map(|j| ctx.mul(p, &SkewPoly::monomial(K::one(), j, 0)))
            .collect();
        let mut x_p = Vec::with_capacity(d + 1);
        x_p.push(p.clone());
        for i in 1..=d {
            let next = ctx.x_times(&x_p[i - 1]);
            x_p.push(next);
        }
        for i in 0..=d {
            for (j, pyj) in p_y.iter().enumerate() {
                let col = column(i, j, d, b);
                for (xp, coeff) in pyj.coeffs().iter().enumerate() {
                    for (yp, c) in coeff.coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            rows.entry((e, xp + i, yp)).or_default().push((col, c.clone()));
                        }
                    }
                }
                for (xp, coeff) in x_p[i].coeffs().iter().enumerate() {
                    for (yp, c) in coeff.coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            rows.entry((e, xp, yp + j)).or_default().push((col, -c.clone()));
                        }
                    }
                }
            }
        }
    }
    let mut keys: Vec<_> = rows.keys().copied().collect();
    keys.sort_unstable();
    let mut echelon = SparseEchelon::new(cols);
    for key in keys {
        echelon.insert(rows.remove(&key).expect("key present"));
    }
    let null: Vec<SparseRow<K>> = echelon
        .nullspace()
        .into_iter()
        .map(|v| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
        .collect();
    let mut basis: Vec<SkewPoly<K>> = echelon_basis_sparse(null, cols)
        .into_iter()
        .map(|row| vector_to_skew(&row, d, b))
        .collect();
    basis.reverse();
    basis
}

fn vector_to_skew<K: Scalar>(row: &SparseRow<K>, d: usize, b: usize) -> SkewPoly<K> {
    let mut coeffs: Vec<Vec<K>> = vec![Vec::new(); d + 1];
    for (col, v) in row {
        let (a, yb) = monomial_of(*col, d, b);
        let c = &mut coeffs[a];
        if c.len() <= yb {
            c.resize(yb + 1, K::zero());
        }
        c[yb] = v.clone();
    }
    SkewPoly::new(coeffs.into_iter().map(YPoly::new).collect())
}

/// Minimal-degree basis element per residue class mod `n`, ascending by
/// degree; the class of 0 is represented by the constant of the space.
pub fn generators_from_basis<K: Scalar>(basis: &[SkewPoly<K>], n: usize) -> Vec<SkewPoly<K>> {
    assert!(n > 0);
    let mut best: BTreeMap<usize, &SkewPoly<K>> = BTreeMap::new();
    for q in basis {
        let Some(d) = q.degree() else { continue };
        let slot = best.entry(d % n).or_insert(q);
        if slot.degree() > Some(d) {
            *slot = q;
        }
    }
    let mut gens: Vec<SkewPoly<K>> = best.into_values().cloned().collect();
    gens.sort_by_key(SkewPoly::degree);
    gens
}

/// Bounded centralizer of P with the default stability step.
pub fn centralizer_space<K: Scalar>(
    ctx: &OreContext<K>,
    p: &SkewPoly<K>,
    max_xdeg: usize,
    ydeg_bound: usize,
) -> CentralizerReport<K> {
    centralizer_space_with(
        ctx,
        p,
        Bounds {
            max_xdeg,
            ydeg_bound,
            stability_delta: DEFAULT_STABILITY_DELTA,
        },
    )
}

pub fn centralizer_space_with<K: Scalar>(
    ctx: &OreContext<K>,
    p: &SkewPoly<K>,
    bounds: Bounds,
) -> CentralizerReport<K> {
    let (d, b) = (bounds.max_xdeg, bounds.ydeg_bound);
    let basis = solve_box(ctx, std::slice::from_ref(p), d, b);
    let stability_dim = solve_box(ctx, std::slice::from_ref(p), d, b + bounds.stability_delta).len();

    let special_case = if p.is_constant() {
        Some(SpecialCase::Constant)
    } else if p.in_base_ring() {
        Some(SpecialCase::BaseRing)
    } else {
        None
    };

    let mut leading_space_dims = BTreeMap::new();
    for q in &basis {
        if let Some(deg) = q.degree() {
            *leading_space_dims.entry(deg).or_insert(0) += 1;
        }
    }
    let base_ring_part_is_constants = basis
        .iter()
        .filter(|q| q.degree() == Some(0))
        .all(SkewPoly::is_constant);

    let commutative = match special_case {
        // R is commutative.
        Some(SpecialCase::BaseRing) => true,
        // The box is all of S restricted; x and y never commute since σ(y) != y.
        Some(SpecialCase::Constant) => d == 0 || b == 0,
        None => check_commutative(ctx, &basis),
    };

    let module_generators = match p.degree() {
        Some(n) if n > 0 => generators_from_basis(&basis, n),
        _ => Vec::new(),
    };

    let powers_in_box = match p.degree() {
        Some(n) if n > 0 => {
            let mut pq = SkewPoly::one();
            let mut ok = true;
            for _ in 1..=d / n {
                pq = ctx.mul(p, &pq);
                if pq.y_degree().unwrap_or(0) > b {
                    ok = false;
                    break;
                }
            }
            ok
        }
        _ => p.y_degree().unwrap_or(0) <= b,
    };

    CentralizerReport {
        context: ctx.clone(),
        p: p.clone(),
        bounds,
        generator_count: module_generators.len(),
        module_generators,
        commutative,
        stable: stability_dim == basis.len(),
        stability_dim,
        powers_in_box,
        leading_space_dims,
        base_ring_part_is_constants,
        special_case,
        criteria: criteria::evaluate(ctx, p, criteria::DEFAULT_ROOT_EXPONENT_BOUND),
        basis,
    }
}

/// Module generators of the bounded centralizer.
pub fn module_generators<K: Scalar>(
    ctx: &OreContext<K>,
    p: &SkewPoly<K>,
    max_xdeg: usize,
    ydeg_bound: usize,
) -> Result<Vec<SkewPoly<K>>> {
    let (n, _) = degree_and_rho(p)?;
    let basis = solve_box(ctx, std::slice::from_ref(p), max_xdeg, ydeg_bound);
    Ok(generators_from_basis(&basis, n))
}

/// Eliminate leading terms of `q` with `α·P^t·g` for generators `g`.
///
/// Returns the remainder: zero when `q` lies in the K[P]-span of `gens`
/// (as far as the elimination can see), otherwise the first element whose
/// leading term could not be matched.
pub fn reduce_by<K: Scalar>(
    ctx: &OreContext<K>,
    p: &SkewPoly<K>,
    q: &SkewPoly<K>,
    gens: &[SkewPoly<K>],
) -> SkewPoly<K> {
    let Some(n) = p.degree().filter(|&n| n > 0) else {
        return q.clone();
    };
    let mut powers = vec![SkewPoly::one()];
    let mut rem = q.clone();
    while let Some(deg) = rem.degree() {
        let Some(g) = gens
            .iter()
            .filter_map(|g| g.degree().map(|gd| (gd, g)))
            .filter(|(gd, _)| *gd <= deg && (deg - gd) % n == 0)
            .max_by_key(|(gd, _)| *gd)
            .map(|(_, g)| g)
        else {
            return rem;
        };
        let t = (deg - g.degree().expect("nonzero generator")) / n;
        while powers.len() <= t {
            let next = ctx.mul(p, powers.last().expect("nonempty"));
            powers.push(next);
        }
        let target = ctx.mul(&powers[t], g);
        let lead_q = rem.leading_coeff().expect("nonzero");
        let lead_t = target.leading_coeff().expect("domain");
        let Some(alpha) = lead_q.proportional_to(lead_t) else {
            return rem;
        };
        rem = &rem - &target.scale(&alpha);
    }
    rem
}

/// Whether `q = Σ c_i P^i` for constants `c_i`.
pub fn is_polynomial_in_p<K: Scalar>(ctx: &OreContext<K>, p: &SkewPoly<K>, q: &SkewPoly<K>) -> bool {
    if q.is_zero() {
        return true;
    }
    match p.degree() {
        Some(n) if n > 0 => reduce_by(ctx, p, q, &[SkewPoly::one()]).is_zero(),
        _ if p.is_constant() => q.is_constant(),
        // P = r(y) ∈ R \ K: eliminate by y-degree using powers of r.
        _ => {
            if !q.in_base_ring() {
                return false;
            }
            let r = p.coeff(0);
            let dr = r.degree().expect("nonconstant");
            let mut rem = q.coeff(0);
            while let Some(dq) = rem.degree() {
                if dq % dr != 0 {
                    return false;
                }
                let rp = r.pow(dq / dr);
                let alpha = rem
                    .leading_coeff()
                    .and_then(|c| c.checked_div(rp.leading_coeff().expect("nonzero")))
                    .expect("nonzero leading coefficient");
                rem = &rem - &rp.scale(&alpha);
            }
            true
        }
    }
}

/// True iff all pairwise commutators vanish.
pub fn check_commutative<K: Scalar>(ctx: &OreContext<K>, elems: &[SkewPoly<K>]) -> bool {
    elems
        .iter()
        .enumerate()
        .all(|(i, a)| elems[i + 1..].iter().all(|b| ctx.commutes(a, b)))
}

/// The three possible shapes of `C_S(A)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SetVerdict<K: Scalar> {
    AllOfS,
    ConstantsOnly,
    CentralizerOf(SkewPoly<K>),
}

/// Verdict for a set plus a bounded cross-check of it.
#[derive(Debug, Clone, PartialEq)]
pub struct SetClassification<K: Scalar> {
    pub verdict: SetVerdict<K>,
    /// Dimension of the common centralizer of the whole set in the box.
    pub bounded_dim: usize,
    /// Dimension predicted by the verdict in the same box.
    pub expected_dim: usize,
}

impl<K: Scalar> SetClassification<K> {
    pub fn consistent(&self) -> bool {
        self.bounded_dim == self.expected_dim
    }
}

pub fn classify_set<K: Scalar>(
    ctx: &OreContext<K>,
    set: &[SkewPoly<K>],
    max_xdeg: usize,
    ydeg_bound: usize,
) -> SetClassification<K> {
    let verdict = match set.iter().find(|a| !a.is_constant()) {
        None => SetVerdict::AllOfS,
        Some(_) if !check_commutative(ctx, set) => SetVerdict::ConstantsOnly,
        Some(p) => SetVerdict::CentralizerOf(p.clone()),
    };
    let bounded_dim = solve_box(ctx, set, max_xdeg, ydeg_bound).len();
    let expected_dim = match &verdict {
        SetVerdict::AllOfS => (max_xdeg + 1) * (ydeg_bound + 1),
        SetVerdict::ConstantsOnly => 1,
        SetVerdict::CentralizerOf(p) => {
            solve_box(ctx, std::slice::from_ref(p), max_xdeg, ydeg_bound).len()
        }
    };
    SetClassification {
        verdict,
        bounded_dim,
        expected_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldDescriptor;
    use crate::Rational;

    fn qp(c: &[i64]) -> YPoly<Rational> {
        YPoly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    fn ctx(sigma: &[i64], delta: &[i64]) -> OreContext<Rational> {
        OreContext::new(FieldDescriptor::Rationals, qp(sigma), qp(delta)).unwrap()
    }

    fn mono(ydeg: usize, xdeg: usize) -> SkewPoly<Rational> {
        SkewPoly::monomial(Rational::from_integer(1.into()), ydeg, xdeg)
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    /// Monomial oracle for `σ(y) = y^s`, `δ = 0`, `P = y^i x^j`: `y^l x^k`
    /// commutes with P iff `i + l·s^j = l + i·s^k`. Returns the `(l, k)` in
    /// the box.
    fn commuting_monomials(i: u128, j: u32, s: u128, d: u32, b: u128) -> Vec<(u128, u32)> {
        let mut out = Vec::new();
        for k in 0..=d {
            for l in 0..=b {
                if i + l * s.pow(j) == l + i * s.pow(k) {
                    out.push((l, k));
                }
            }
        }
        out
    }

    #[test]
    fn leading_constraint_examples() {
        let c = leading_constraint(2, 3, 2, 1);
        assert_eq!((c.k.clone(), c.admissible), (int(1), true));
        let c = leading_constraint(3, 4, 5, 3);
        assert_eq!((c.k.clone(), c.admissible), (int(4), true));
        let c = leading_constraint(2, 1, 2, 1);
        assert_eq!((c.k.clone(), c.admissible), (BigRational::new(1.into(), 3.into()), false));
    }

    #[test]
    fn admissible_degree_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        let got: Vec<(usize, usize)> = admissible_degrees(&c, &mono(1, 2), 8)
            .unwrap()
            .iter()
            .map(|d| (d.m, d.k_integer().unwrap()))
            .collect();
        assert_eq!(got, vec![(2, 1), (4, 5), (6, 21), (8, 85)]);
        let got: Vec<(usize, usize)> = admissible_degrees(&c, &SkewPoly::x(), 3)
            .unwrap()
            .iter()
            .map(|d| (d.m, d.k_integer().unwrap()))
            .collect();
        assert_eq!(got, vec![(1, 0), (2, 0), (3, 0)]);
        let ms: Vec<usize> = admissible_degrees(&c, &mono(5, 2), 4).unwrap().iter().map(|d| d.m).collect();
        assert_eq!(ms, vec![2, 4]);
        assert!(admissible_degrees(&c, &SkewPoly::y(), 4).is_err());
    }

    #[test]
    fn centralizer_of_x_is_powers_of_x() {
        let c = ctx(&[0, 0, 1], &[]);
        let r = centralizer_space(&c, &SkewPoly::x(), 6, 10);
        assert_eq!(r.dim(), 7);
        let expected: Vec<_> = (0..=6).map(|k| mono(0, k)).collect();
        assert_eq!(r.basis, expected);
        assert_eq!(r.module_generators, vec![SkewPoly::one()]);
        assert!(r.stable && r.commutative && r.powers_in_box);
    }

    #[test]
    fn monomial_centralizers_match_exponent_oracle() {
        let c = ctx(&[0, 0, 1], &[]);
        for (i, j, d, b) in [(1usize, 2usize, 8usize, 40usize), (3, 2, 4, 40), (5, 2, 6, 110), (1, 2, 8, 93)] {
            let r = centralizer_space(&c, &mono(i, j), d, b);
            let oracle = commuting_monomials(i as u128, j as u32, 2, d as u32, b as u128);
            let expected: Vec<_> = oracle.iter().map(|&(l, k)| mono(l as usize, k as usize)).collect();
            assert_eq!(r.basis, expected, "P = y^{i} x^{j}");
        }
    }

    #[test]
    fn y3x2_generators() {
        let c = ctx(&[0, 0, 1], &[]);
        let p = mono(3, 2);
        let r = centralizer_space(&c, &p, 4, 40);
        assert_eq!(r.dim(), 5);
        assert_eq!(r.basis, vec![mono(0, 0), mono(1, 1), mono(3, 2), mono(7, 3), mono(15, 4)]);
        assert_eq!(r.module_generators, vec![SkewPoly::one(), mono(1, 1)]);
        assert_eq!(module_generators(&c, &p, 4, 40).unwrap(), r.module_generators);
        assert_eq!(c.pow(&mono(1, 1), 2), p);
    }

    #[test]
    fn module_generator_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        assert_eq!(module_generators(&c, &mono(1, 2), 8, 93).unwrap(), vec![SkewPoly::one()]);
        assert_eq!(module_generators(&c, &SkewPoly::x(), 3, 8).unwrap(), vec![SkewPoly::one()]);
        assert!(module_generators(&c, &SkewPoly::y(), 3, 8).is_err());
    }

    #[test]
    fn reduce_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        let p = mono(1, 2);
        assert!(reduce_by(&c, &p, &c.pow(&p, 3), &[SkewPoly::one()]).is_zero());
        let p = mono(3, 2);
        let gens = vec![SkewPoly::one(), mono(1, 1)];
        // P·(yx) = y^7 x^3
        assert_eq!(c.mul(&p, &mono(1, 1)), mono(7, 3));
        assert!(reduce_by(&c, &p, &mono(7, 3), &gens).is_zero());
        assert!(reduce_by(&c, &p, &SkewPoly::one(), &gens).is_zero());
        // y^4 x^3 does not commute with P; its leading term cannot be matched
        assert_eq!(reduce_by(&c, &p, &mono(4, 3), &gens), mono(4, 3));
    }

    #[test]
    fn polynomial_in_p_examples() {
        let c = ctx(&[0, 0, 1], &[1]);
        let p = &mono(3, 2) + &mono(1, 0);
        let q = &(&c.pow(&p, 2).scale(&int(3)) - &p) + &SkewPoly::constant(int(2));
        assert!(is_polynomial_in_p(&c, &p, &q));
        let c0 = ctx(&[0, 0, 1], &[]);
        assert!(!is_polynomial_in_p(&c0, &mono(3, 2), &mono(1, 1)));
        assert!(is_polynomial_in_p(&c0, &mono(3, 2), &SkewPoly::zero()));
        // base-ring P
        let r = SkewPoly::from_ypoly(qp(&[1, 0, 1]));
        let q = SkewPoly::from_ypoly(qp(&[1, 0, 1]).pow(2) + qp(&[4]));
        assert!(is_polynomial_in_p(&c0, &r, &q));
        assert!(!is_polynomial_in_p(&c0, &r, &SkewPoly::y()));
    }

    #[test]
    fn commutativity_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        let p = &mono(2, 2) + &mono(0, 1);
        assert!(check_commutative(&c, &[SkewPoly::one(), p.clone(), c.pow(&p, 2)]));
        assert!(!check_commutative(&c, &[SkewPoly::x(), SkewPoly::y()]));
        assert!(check_commutative::<Rational>(&c, &[]));
    }

    #[test]
    fn classify_examples() {
        let c = ctx(&[0, 0, 1], &[]);
        let r = classify_set(&c, &[SkewPoly::constant(int(2)), SkewPoly::constant(int(5))], 2, 3);
        assert_eq!(r.verdict, SetVerdict::AllOfS);
        assert!(r.consistent());
        let r = classify_set(&c, &[SkewPoly::x(), SkewPoly::y()], 3, 6);
        assert_eq!(r.verdict, SetVerdict::ConstantsOnly);
        assert!(r.consistent());
        let p = mono(3, 2);
        let r = classify_set(&c, &[p.clone(), c.pow(&p, 2)], 4, 20);
        assert_eq!(r.verdict, SetVerdict::CentralizerOf(p));
        assert!(r.consistent());
    }

    #[test]
    fn base_ring_element_has_base_ring_centralizer() {
        let c = ctx(&[0, 0, 1], &[1]);
        let r = centralizer_space(&c, &SkewPoly::from_ypoly(qp(&[0, 1, 1])), 3, 6);
        assert_eq!(r.special_case, Some(SpecialCase::BaseRing));
        let expected: Vec<_> = (0..=6).map(|k| mono(k, 0)).collect();
        assert_eq!(r.basis, expected);
        assert!(r.commutative);
    }

    #[test]
    fn constant_element_centralizes_the_whole_box() {
        let c = ctx(&[0, 0, 1], &[]);
        let r = centralizer_space(&c, &SkewPoly::constant(int(3)), 2, 3);
        assert_eq!(r.special_case, Some(SpecialCase::Constant));
        assert_eq!(r.dim(), 12);
        assert!(!r.commutative);
    }

    #[test]
    fn default_bound_uses_largest_admissible_k() {
        let c = ctx(&[0, 0, 1], &[]);
        assert_eq!(default_ydeg_bound(&c, &mono(1, 2), 8), 93);
        assert_eq!(default_ydeg_bound(&c, &SkewPoly::x(), 5), 8);
    }
}
