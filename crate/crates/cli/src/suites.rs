//! Named, seedable verification suites for `orecent verify`.
//!
//! Each suite draws its cases from a seeded generator and counts checks;
//! a failing check records a short description of the offending case.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use orecent_core::centralizer::{default_ydeg_bound, solve_box};
use orecent_core::criteria::{self, repunit, repunit_gcd};
use orecent_core::text::Expr;
use orecent_core::{
    centralizer_space, classify_set, format_skew, is_polynomial_in_p, monomial_generator,
    parse_skew, DynContext, DynPoly, DynSkew, FieldDescriptor, FieldElem, PurePowerVerdict,
    Scalar, SetVerdict,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::context::{parse_context, ContextSpec};
use crate::report::{Report, SuiteResult};

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(u64) -> Tally,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "ore-relation",
        description: "x·r = σ(r)x + δ(r), σ multiplicative, δ a σ-derivation",
        run: ore_relation,
    },
    Suite {
        name: "ring-laws",
        description: "associativity, distributivity, degree additivity",
        run: ring_laws,
    },
    Suite {
        name: "repunit-gcd",
        description: "gcd(R(m), R(n)) = R(gcd(m, n)), exhaustive s <= 10, m, n <= 40",
        run: repunit_gcd_suite,
    },
    Suite {
        name: "leading-uniqueness",
        description: "leading coefficients of one degree span at most a line; degree-0 part is K",
        run: leading_uniqueness,
    },
    Suite {
        name: "rank-bound",
        description: "at most deg P module generators",
        run: rank_bound,
    },
    Suite {
        name: "commutativity",
        description: "centralizer bases commute; set classification",
        run: commutativity,
    },
    Suite {
        name: "singly-generated",
        description: "monomial generators commute, are minimal, and generate",
        run: singly_generated,
    },
    Suite {
        name: "criteria-consistency",
        description: "positive criteria imply the bounded centralizer lies in K[P]",
        run: criteria_consistency,
    },
    Suite {
        name: "pure-power",
        description: "pure-power root search against planted and exhaustive oracles",
        run: pure_power,
    },
    Suite {
        name: "parser-roundtrip",
        description: "parse(format(P)) = P on random canonical elements",
        run: parser_roundtrip,
    },
    Suite {
        name: "normalization",
        description: "parsed expression trees equal direct evaluation",
        run: normalization,
    },
    Suite {
        name: "report-roundtrip",
        description: "JSON reports survive serialization unchanged",
        run: report_roundtrip,
    },
];

/// Run one suite, or every suite in parallel for `all`.
pub fn run(name: &str, seed: u64) -> Result<Vec<SuiteResult>, String> {
    let chosen: Vec<&Suite> = if name == "all" {
        SUITES.iter().collect()
    } else {
        let s = SUITES
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| format!("unknown suite `{name}` (see verify --list)"))?;
        vec![s]
    };
    let tallies: Vec<Tally> = std::thread::scope(|scope| {
        let handles: Vec<_> = chosen
            .iter()
            .map(|s| scope.spawn(move || (s.run)(seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Tally::panicked()))
            .collect()
    });
    Ok(chosen
        .iter()
        .zip(tallies)
        .map(|(s, t)| SuiteResult {
            suite: s.name.into(),
            seed,
            checks: t.checks,
            failures: t.failures,
        })
        .collect())
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn panicked() -> Self {
        Tally {
            checks: 1,
            failures: vec!["suite panicked".into()],
        }
    }
}

/// Contexts every randomized suite cycles through.
const CONTEXTS: &[(&str, &str, &str)] = &[
    ("rationals", "y^2", "1"),
    ("rationals", "y^2", "0"),
    ("rationals", "y^2 + y", "y"),
    ("rationals", "2*y^3 - y", "y^2 + 1"),
    ("fp:10007", "y^2", "1"),
    ("fp:7", "y^3 + 2*y", "3*y"),
];

fn contexts() -> Vec<DynContext> {
    CONTEXTS
        .iter()
        .map(|(f, s, d)| parse_context(&ContextSpec::new(f, s, d)).expect("fixed contexts are valid"))
        .collect()
}

fn rng_for(seed: u64, salt: u64) -> StdRng {
    StdRng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

pub fn random_scalar(rng: &mut StdRng, field: &FieldDescriptor) -> FieldElem {
    match field {
        FieldDescriptor::Rationals => {
            let num = rng.gen_range(-9i64..=9);
            let den = if rng.gen_bool(0.25) { rng.gen_range(2i64..=5) } else { 1 };
            FieldElem::rational(BigRational::new(num.into(), den.into()))
        }
        FieldDescriptor::Prime(p) => FieldElem::residue(rng.gen_range(0..*p), *p),
    }
}

pub fn random_ypoly(rng: &mut StdRng, field: &FieldDescriptor, max_deg: usize) -> DynPoly {
    let deg = rng.gen_range(0..=max_deg);
    DynPoly::new(
        (0..=deg)
            .map(|_| {
                if rng.gen_bool(0.3) {
                    FieldElem::from_integer(field, 0)
                } else {
                    random_scalar(rng, field)
                }
            })
            .collect(),
    )
}

pub fn random_skew(rng: &mut StdRng, field: &FieldDescriptor, max_xdeg: usize, max_ydeg: usize) -> DynSkew {
    let xdeg = rng.gen_range(0..=max_xdeg);
    DynSkew::new((0..=xdeg).map(|_| random_ypoly(rng, field, max_ydeg)).collect())
}

fn nonzero_skew(rng: &mut StdRng, field: &FieldDescriptor, max_xdeg: usize, max_ydeg: usize) -> DynSkew {
    loop {
        let p = random_skew(rng, field, max_xdeg, max_ydeg);
        if !p.is_zero() {
            return p;
        }
    }
}

fn text(ctx: &DynContext, p: &DynSkew) -> String {
    format_skew(&ctx.embed(p))
}

/// `δ(y^k) = Σ_{i<k} σ(y)^i δ(y) y^(k-1-i)`, summed term by term.
fn delta_oracle(ctx: &DynContext, r: &DynPoly) -> DynPoly {
    let mut out = DynPoly::zero();
    for (k, c) in r.coeffs().iter().enumerate() {
        for i in 0..k {
            let term = ctx.sigma_y().pow(i).mul(ctx.delta_y()).shift(k - 1 - i).scale(c);
            out = out + term;
        }
    }
    out
}

fn ore_relation(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ci, ctx) in contexts().iter().enumerate() {
        let mut rng = rng_for(seed, ci as u64);
        let f = ctx.field();
        for _ in 0..120 {
            let r = random_ypoly(&mut rng, &f, 5);
            let a = random_ypoly(&mut rng, &f, 4);
            let b = random_ypoly(&mut rng, &f, 4);
            let sigma_r = r.compose(ctx.sigma_y());
            t.check(ctx.sigma(&r) == sigma_r, || format!("sigma({r}) differs from substitution"));
            t.check(ctx.delta(&r) == delta_oracle(ctx, &r), || {
                format!("delta({r}) differs from the explicit sum")
            });
            let lhs = ctx.mul(&DynSkew::x(), &DynSkew::from_ypoly(r.clone()));
            let rhs = &DynSkew::term(sigma_r, 1) + &DynSkew::from_ypoly(ctx.delta(&r));
            t.check(lhs == rhs, || format!("x*({r}) != sigma(r)x + delta(r)"));
            let ab = a.mul(&b);
            t.check(ctx.sigma(&ab) == ctx.sigma(&a).mul(&ctx.sigma(&b)), || {
                format!("sigma not multiplicative on {a}, {b}")
            });
            let leibniz = ctx.sigma(&a).mul(&ctx.delta(&b)) + ctx.delta(&a).mul(&b);
            t.check(ctx.delta(&ab) == leibniz, || format!("Leibniz fails on {a}, {b}"));
        }
    }
    t
}

fn ring_laws(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ci, ctx) in contexts().iter().enumerate() {
        let mut rng = rng_for(seed, 100 + ci as u64);
        let f = ctx.field();
        // y-degrees grow like s^(x-degree); keep triple products small for s > 2.
        let xd = if ctx.s() > 2 { 2 } else { 3 };
        for _ in 0..25 {
            let a = random_skew(&mut rng, &f, xd, 3);
            let b = random_skew(&mut rng, &f, xd, 3);
            let c = random_skew(&mut rng, &f, xd, 3);
            let show = || format!("{}, {}, {}", text(ctx, &a), text(ctx, &b), text(ctx, &c));
            t.check(ctx.mul(&ctx.mul(&a, &b), &c) == ctx.mul(&a, &ctx.mul(&b, &c)), || {
                format!("associativity: {}", show())
            });
            t.check(ctx.mul(&a, &(&b + &c)) == &ctx.mul(&a, &b) + &ctx.mul(&a, &c), || {
                format!("left distributivity: {}", show())
            });
            t.check(ctx.mul(&(&a + &b), &c) == &ctx.mul(&a, &c) + &ctx.mul(&b, &c), || {
                format!("right distributivity: {}", show())
            });
        }
        for _ in 0..60 {
            let a = nonzero_skew(&mut rng, &f, 3, 3);
            let b = nonzero_skew(&mut rng, &f, 3, 3);
            let ab = ctx.mul(&a, &b);
            let expect = a.degree().zip(b.degree()).map(|(p, q)| p + q);
            t.check(ab.degree() == expect, || {
                format!("deg({} * {}) = {:?}", text(ctx, &a), text(ctx, &b), ab.degree())
            });
        }
    }
    t
}

fn repunit_gcd_suite(_seed: u64) -> Tally {
    // Exhaustive, so the seed plays no role.
    let mut t = Tally::default();
    for s in 2..=10u64 {
        let r: Vec<BigUint> = (0..=40).map(|n| repunit(s, n)).collect();
        for m in 1..=40u32 {
            for n in 1..=40u32 {
                let g = repunit_gcd(s, m, n);
                t.check(g == r[m as usize].gcd(&r[n as usize]), || {
                    format!("s={s} m={m} n={n}: repunit_gcd disagrees with gcd")
                });
                t.check(g.is_one() == (m.gcd(&n) == 1), || {
                    format!("s={s} m={m} n={n}: coprimality law fails")
                });
            }
        }
    }
    t
}

/// Fixed instances plus a few random ones, with their boxes.
fn instances(seed: u64) -> Vec<(DynContext, DynSkew, usize, usize)> {
    let fixed = [
        (("rationals", "y^2", "0"), "x"),
        (("rationals", "y^2", "0"), "y*x^2"),
        (("rationals", "y^2", "0"), "y^3*x^2"),
        (("rationals", "y^2", "1"), "x"),
        (("rationals", "y^2", "1"), "y*x^2 + x"),
        (("fp:7", "y^3 + 2*y", "3*y"), "y^2*x^2 + 1"),
    ];
    let mut out = Vec::new();
    for ((f, s, d), p) in fixed {
        let ctx = parse_context(&ContextSpec::new(f, s, d)).expect("valid");
        let p = parse_skew(p, &ctx).expect("valid");
        out.push((ctx, p));
    }
    let ctxs = contexts();
    let mut rng = rng_for(seed, 200);
    for _ in 0..4 {
        let ctx = ctxs[rng.gen_range(0..ctxs.len())].clone();
        let f = ctx.field();
        let n = rng.gen_range(1..=2);
        let mut coeffs: Vec<DynPoly> = (0..n).map(|_| random_ypoly(&mut rng, &f, 1)).collect();
        let lead = loop {
            let c = random_ypoly(&mut rng, &f, 2);
            if !c.is_zero() {
                break c;
            }
        };
        coeffs.push(lead);
        out.push((ctx, DynSkew::new(coeffs)));
    }
    out.into_iter()
        .map(|(ctx, p)| {
            let d = 2 * p.degree().unwrap_or(1).max(1);
            let b = default_ydeg_bound(&ctx, &p, d).min(24);
            (ctx, p, d, b)
        })
        .collect()
}

fn leading_uniqueness(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ctx, p, d, b) in instances(seed) {
        let rep = centralizer_space(&ctx, &p, d, b);
        let ptxt = text(&ctx, &p);
        t.check(rep.leading_spaces_at_most_one(), || {
            format!("{ptxt}: leading dims {:?}", rep.leading_space_dims)
        });
        t.check(rep.base_ring_part_is_constants, || format!("{ptxt}: nonconstant degree-0 solution"));
        t.check(rep.basis.iter().any(|q| q.is_constant()), || format!("{ptxt}: constants missing"));
    }
    t
}

fn rank_bound(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ctx, p, d, b) in instances(seed) {
        let rep = centralizer_space(&ctx, &p, d, b);
        let n = p.degree().expect("nonzero");
        t.check(rep.generator_count <= n, || {
            format!("{}: {} generators > deg {n}", text(&ctx, &p), rep.generator_count)
        });
        // Distinct residues mod n, one generator each.
        let mut residues: Vec<usize> = rep
            .module_generators
            .iter()
            .filter_map(|g| g.degree().map(|e| e % n))
            .collect();
        residues.sort_unstable();
        residues.dedup();
        t.check(residues.len() == rep.generator_count, || {
            format!("{}: generators share a residue class", text(&ctx, &p))
        });
    }
    t
}

fn commutativity(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ctx, p, d, b) in instances(seed) {
        let rep = centralizer_space(&ctx, &p, d, b);
        for (i, a) in rep.basis.iter().enumerate() {
            t.check(ctx.commutes(a, &p), || format!("{} does not commute with P", text(&ctx, a)));
            for c in &rep.basis[i + 1..] {
                t.check(ctx.commutes(a, c), || {
                    format!("{} and {} do not commute", text(&ctx, a), text(&ctx, c))
                });
            }
        }
    }
    let ctx = parse_context(&ContextSpec::new("rationals", "y^2", "0")).expect("valid");
    let q = |s: &str| parse_skew(s, &ctx).expect("valid");
    let c = classify_set(&ctx, &[q("x"), q("y")], 2, 4);
    t.check(c.verdict == SetVerdict::ConstantsOnly && c.consistent(), || {
        format!("{{x, y}} classified as {:?}", c.verdict)
    });
    let c = classify_set(&ctx, &[q("2")], 2, 4);
    t.check(c.verdict == SetVerdict::AllOfS && c.consistent(), || {
        format!("{{2}} classified as {:?}", c.verdict)
    });
    let p = q("y*x^2");
    let c = classify_set(&ctx, &[p.clone(), ctx.mul(&p, &p)], 4, 12);
    t.check(c.verdict == SetVerdict::CentralizerOf(p) && c.consistent(), || {
        format!("{{P, P^2}} classified as {:?}", c.verdict)
    });
    t
}

fn singly_generated(_seed: u64) -> Tally {
    let mut t = Tally::default();
    for s in 2..=3u64 {
        let ctx = parse_context(&ContextSpec::new("rationals", &format!("y^{s}"), "0")).expect("valid");
        let one = ctx.scalar(1);
        for j in 1..=4usize {
            for i in 0..=6usize {
                let p = DynSkew::monomial(one.clone(), i, j);
                let g = match monomial_generator(i, j, s) {
                    Ok(g) => g,
                    Err(e) => {
                        t.check(false, || format!("({i},{j},{s}): {e}"));
                        continue;
                    }
                };
                let gen = DynSkew::monomial(one.clone(), g.l, g.k);
                t.check(ctx.commutes(&p, &gen), || format!("({i},{j},{s}): generator does not commute"));
                for k in 1..g.k {
                    for l in 0..=i + 2 {
                        let m = DynSkew::monomial(one.clone(), l, k);
                        t.check(!ctx.commutes(&p, &m), || {
                            format!("({i},{j},{s}): y^{l} x^{k} commutes, generator not minimal")
                        });
                    }
                }
                t.check(j % g.k == 0 && ctx.pow(&gen, j / g.k) == p, || {
                    format!("({i},{j},{s}): P is not a power of the generator")
                });
            }
        }
    }
    // Bounded centralizers of a few monomials lie in K[generator].
    let ctx = parse_context(&ContextSpec::new("rationals", "y^2", "0")).expect("valid");
    for (i, j) in [(1usize, 2usize), (3, 2), (0, 1), (2, 1)] {
        let g = monomial_generator(i, j, 2).expect("valid").to_skew::<FieldElem>();
        let p = DynSkew::monomial(ctx.scalar(1), i, j);
        let basis = solve_box(&ctx, std::slice::from_ref(&p), 2 * j, 16);
        for q in &basis {
            t.check(is_polynomial_in_p(&ctx, &g, q), || {
                format!("y^{i} x^{j}: {} not in K[{}]", text(&ctx, q), text(&ctx, &g))
            });
        }
    }
    t
}

fn criteria_consistency(seed: u64) -> Tally {
    let mut t = Tally::default();
    let ctxs = contexts();
    let mut rng = rng_for(seed, 300);
    let mut tested = 0;
    while tested < 6 {
        let ctx = &ctxs[rng.gen_range(0..ctxs.len())];
        let f = ctx.field();
        let n = rng.gen_range(1..=2usize);
        let rho = rng.gen_range(1..=3usize);
        let mut coeffs: Vec<DynPoly> = (0..n).map(|_| random_ypoly(&mut rng, &f, 1)).collect();
        let lc = loop {
            let c = random_scalar(&mut rng, &f);
            if !c.is_zero() {
                break c;
            }
        };
        coeffs.push(DynPoly::monomial(lc, rho) + random_ypoly(&mut rng, &f, rho - 1));
        let p = DynSkew::new(coeffs);
        let v = criteria::evaluate(ctx, &p, 4).expect("positive degree");
        t.check(
            v.prime_degree == (n == 2 && !BigUint::from(rho).is_multiple_of(&repunit(ctx.s() as u64, 2))),
            || format!("{}: prime-degree verdict", text(ctx, &p)),
        );
        t.check(v.small_leading == (rho <= n), || format!("{}: small-leading verdict", text(ctx, &p)));
        if !v.guarantees_polynomial_in_p() {
            continue;
        }
        tested += 1;
        let d = 2 * n;
        let b = default_ydeg_bound(ctx, &p, d).min(20);
        for q in solve_box(ctx, std::slice::from_ref(&p), d, b) {
            t.check(is_polynomial_in_p(ctx, &p, &q), || {
                format!("{}: {} escapes K[P]", text(ctx, &p), text(ctx, &q))
            });
        }
    }
    // A negative instance: y^3 x^2 with σ(y) = y^2 has y·x in its centralizer.
    let ctx = parse_context(&ContextSpec::new("rationals", "y^2", "0")).expect("valid");
    let p = parse_skew("y^3*x^2", &ctx).expect("valid");
    let v = criteria::evaluate(&ctx, &p, 4).expect("positive degree");
    t.check(!v.prime_degree && !v.small_leading, || "y^3 x^2: a criterion fired".into());
    let yx = parse_skew("y*x", &ctx).expect("valid");
    t.check(ctx.commutes(&p, &yx) && !is_polynomial_in_p(&ctx, &p, &yx), || {
        "y^3 x^2: y*x should commute without lying in K[P]".into()
    });
    t
}

fn pure_power(seed: u64) -> Tally {
    let mut t = Tally::default();
    let q = FieldDescriptor::Rationals;
    let mut rng = rng_for(seed, 400);
    let int = |v: i64| FieldElem::from_integer(&q, v);
    let linear = |root: &FieldElem| DynPoly::new(vec![-root.clone(), int(1)]);
    for _ in 0..30 {
        // Planted violation: a^i and a^j are roots.
        let a = int([2, 3, -2, 5][rng.gen_range(0..4)]);
        let i = rng.gen_range(1..=3u32);
        let j = rng.gen_range(i + 1..=4u32);
        let extra = int(rng.gen_range(-20..=20));
        let p = linear(&a.pow(i)).mul(&linear(&a.pow(j))).mul(&linear(&extra));
        match criteria::criterion_pure_power_sigma(&p, 4) {
            PurePowerVerdict::ViolationFound { a: w, i: wi, j: wj } => {
                t.check(wi < wj && p.eval(&w.pow(wi)).is_zero() && p.eval(&w.pow(wj)).is_zero(), || {
                    format!("{p}: witness ({w},{wi},{wj}) is not a violation")
                });
            }
            PurePowerVerdict::NoViolationUpTo(_) => t.check(false, || format!("{p}: planted violation missed")),
        }
        // One root outside {0, 1, -1}: no witness exists in Q.
        let c = loop {
            let c = rng.gen_range(-30i64..=30);
            if c.abs() > 1 {
                break c;
            }
        };
        let v = criteria::criterion_pure_power_sigma(&linear(&int(c)), 6);
        t.check(!v.is_violation(), || format!("y - {c}: spurious violation {v:?}"));
    }
    // Exhaustive oracle over F_7.
    let f7 = FieldDescriptor::Prime(7);
    for _ in 0..40 {
        let p = loop {
            let p = random_ypoly(&mut rng, &f7, 3);
            if p.degree().unwrap_or(0) >= 1 {
                break p;
            }
        };
        let max_exp = 4;
        let elems: Vec<FieldElem> = (0..7).map(|v| FieldElem::residue(v, 7)).collect();
        let oracle = elems.iter().any(|a| {
            (1..=max_exp).any(|i| {
                (i + 1..=max_exp).any(|j| p.eval(&a.pow(i)).is_zero() && p.eval(&a.pow(j)).is_zero())
            })
        });
        let v = criteria::criterion_pure_power_sigma(&p, max_exp);
        t.check(v.is_violation() == oracle, || format!("{p} over F_7: verdict {v:?}, oracle {oracle}"));
    }
    t
}

fn parser_roundtrip(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ci, ctx) in contexts().iter().enumerate() {
        let mut rng = rng_for(seed, 500 + ci as u64);
        let f = ctx.field();
        for _ in 0..200 {
            let p = ctx.embed(&random_skew(&mut rng, &f, 4, 4));
            let s = format_skew(&p);
            match parse_skew(&s, ctx) {
                Ok(back) => t.check(back == p && format_skew(&back) == s, || format!("{s} did not round-trip")),
                Err(e) => t.check(false, || format!("{s}: {e}")),
            }
        }
    }
    t
}

pub fn random_expr(rng: &mut StdRng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..3) {
            0 => Expr::X,
            1 => Expr::Y,
            _ => {
                let num = rng.gen_range(-6i64..=6);
                let den = rng.gen_range(1i64..=3);
                Expr::Num(BigRational::new(num.into(), den.into()))
            }
        };
    }
    let sub = |rng: &mut StdRng| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..5) {
        0 => Expr::Add(sub(rng), sub(rng)),
        1 => Expr::Sub(sub(rng), sub(rng)),
        2 => Expr::Mul(sub(rng), sub(rng)),
        3 => Expr::Neg(sub(rng)),
        _ => Expr::Pow(sub(rng), rng.gen_range(0..=2)),
    }
}

/// Evaluate by direct calls, bypassing the text layer.
fn direct_eval(ctx: &DynContext, e: &Expr) -> Option<DynSkew> {
    Some(match e {
        Expr::Num(q) => DynSkew::constant(FieldElem::from_rational(&ctx.field(), q)?),
        Expr::X => DynSkew::x(),
        Expr::Y => DynSkew::y(),
        Expr::Neg(a) => -direct_eval(ctx, a)?,
        Expr::Add(a, b) => &direct_eval(ctx, a)? + &direct_eval(ctx, b)?,
        Expr::Sub(a, b) => &direct_eval(ctx, a)? - &direct_eval(ctx, b)?,
        Expr::Mul(a, b) => ctx.mul(&direct_eval(ctx, a)?, &direct_eval(ctx, b)?),
        Expr::Pow(a, k) => {
            let base = direct_eval(ctx, a)?;
            (0..*k).fold(DynSkew::one(), |acc, _| ctx.mul(&acc, &base))
        }
    })
}

fn normalization(seed: u64) -> Tally {
    let mut t = Tally::default();
    for (ci, ctx) in contexts().iter().enumerate() {
        let mut rng = rng_for(seed, 600 + ci as u64);
        let depth = if ctx.s() > 2 { 3 } else { 4 };
        for _ in 0..60 {
            let e = random_expr(&mut rng, depth);
            let s = e.to_string();
            let Some(direct) = direct_eval(ctx, &e) else { continue };
            match parse_skew(&s, ctx) {
                Ok(p) => t.check(p == direct, || format!("{s}: parsed {} vs direct {}", text(ctx, &p), text(ctx, &direct))),
                Err(err) => t.check(false, || format!("{s}: {err}")),
            }
        }
    }
    t
}

fn report_roundtrip(_seed: u64) -> Tally {
    let mut t = Tally::default();
    let cases: &[&[&str]] = &[
        &["mul", "--sigma", "y^2", "--delta", "1", "x", "y"],
        &["commutator", "--sigma", "y^2", "--delta", "1", "x", "y"],
        &["pow", "--sigma", "y^2+1", "--field", "fp:7", "-x+y", "3"],
        &["centralizer", "--sigma", "y^2", "y^3*x^2", "--max-xdeg", "4", "--ydeg-bound", "16"],
        &["basis", "--sigma", "y^2", "y^3*x^2", "--max-xdeg", "4", "--ydeg-bound", "12"],
        &["analyze", "--sigma", "y^2", "(y-2)*(y-4)*x^2"],
        &["classify", "--sigma", "y^2", "x", "y"],
        &["monomial-gen", "3", "2", "2"],
        &["verify", "--list"],
    ];
    for args in cases {
        let argv = std::iter::once("orecent").chain(args.iter().copied());
        let out = crate::run_command(argv);
        let Some(report) = out.report else {
            t.check(false, || format!("{args:?}: no report ({:?})", out.message));
            continue;
        };
        let json = report.to_json();
        t.check(Report::from_json(&json).ok().as_ref() == Some(&report), || {
            format!("{args:?}: report changed in a JSON round trip")
        });
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_are_unique() {
        let mut names: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run("no-such-suite", 1).is_err());
    }

    #[test]
    fn delta_oracle_matches_hand_expansion() {
        // δ(y^2) = σ(y)δ(y) + δ(y)y = y^2 + y for σ(y) = y^2, δ(y) = 1.
        let ctx = parse_context(&ContextSpec::new("rationals", "y^2", "1")).unwrap();
        let y2 = DynPoly::monomial(ctx.scalar(1), 2);
        assert_eq!(orecent_core::format_ypoly(&delta_oracle(&ctx, &y2)), "y^2 + y");
    }
}
