use num_rational::BigRational;
use orecent_core::text::{eval_skew, parse_expr, Expr};
use orecent_core::{
    format_skew, parse_skew, parse_ypoly, FieldDescriptor, OreContext, QContext, QSkew, Rational,
    Scalar, SkewPoly, YPoly, F10007,
};
use proptest::prelude::*;

fn q_ctx(sigma: &str, delta: &str) -> QContext {
    let f = FieldDescriptor::Rationals;
    QContext::new(f, parse_ypoly(sigma, &f).unwrap(), parse_ypoly(delta, &f).unwrap()).unwrap()
}

fn fp_ctx() -> OreContext<F10007> {
    let f = FieldDescriptor::Prime(10007);
    OreContext::new(f, parse_ypoly("y^2 + 3", &f).unwrap(), parse_ypoly("y - 1", &f).unwrap()).unwrap()
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=7).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn arb_qskew() -> impl Strategy<Value = QSkew> {
    prop::collection::vec(prop::collection::vec(arb_rational(), 0..5), 0..5)
        .prop_map(|rows| SkewPoly::new(rows.into_iter().map(YPoly::new).collect()))
}

fn arb_fpskew() -> impl Strategy<Value = SkewPoly<F10007>> {
    prop::collection::vec(prop::collection::vec(0u64..10007, 0..5), 0..5).prop_map(|rows| {
        SkewPoly::new(
            rows.into_iter()
                .map(|r| YPoly::new(r.into_iter().map(F10007::new).collect()))
                .collect(),
        )
    })
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::X),
        Just(Expr::Y),
        arb_rational().prop_map(Expr::Num),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner, 0u32..3).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

/// Evaluation through explicit ring operations only.
fn direct<K: Scalar>(ctx: &OreContext<K>, e: &Expr) -> SkewPoly<K> {
    match e {
        Expr::Num(q) => SkewPoly::constant(K::from_rational(&ctx.field(), q).unwrap()),
        Expr::X => SkewPoly::x(),
        Expr::Y => SkewPoly::y(),
        Expr::Neg(a) => -direct(ctx, a),
        Expr::Add(a, b) => &direct(ctx, a) + &direct(ctx, b),
        Expr::Sub(a, b) => &direct(ctx, a) - &direct(ctx, b),
        Expr::Mul(a, b) => ctx.mul(&direct(ctx, a), &direct(ctx, b)),
        Expr::Pow(a, k) => {
            let base = direct(ctx, a);
            (0..*k).fold(SkewPoly::one(), |acc, _| ctx.mul(&acc, &base))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_round_trip(p in arb_qskew()) {
        let ctx = q_ctx("y^2", "1");
        let text = format_skew(&p);
        let back = parse_skew(&text, &ctx).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(format_skew(&back), text);
    }

    #[test]
    fn prime_field_round_trip(p in arb_fpskew()) {
        let ctx = fp_ctx();
        let text = format_skew(&p);
        prop_assert_eq!(parse_skew(&text, &ctx).unwrap(), p);
    }

    #[test]
    fn parsed_trees_match_direct_evaluation(e in arb_expr()) {
        let ctx = q_ctx("y^2 + y", "y");
        let text = e.to_string();
        let via_text = parse_skew(&text, &ctx).unwrap();
        prop_assert_eq!(&via_text, &direct(&ctx, &e));
        prop_assert_eq!(eval_skew(&ctx, &parse_expr(&text).unwrap()).unwrap(), via_text);
    }
}

#[test]
fn normalization_examples() {
    let ctx = q_ctx("y^2", "1");
    assert_eq!(parse_skew("x*y", &ctx).unwrap().to_string(), "(y^2)*x + 1");
    let canonical = "(y^2 + 1)*x^3 + 5";
    assert_eq!(parse_skew(canonical, &ctx).unwrap().to_string(), canonical);
    let ctx0 = q_ctx("y^2", "0");
    assert_eq!(parse_skew("x^2*y", &ctx0).unwrap().to_string(), "(y^4)*x^2");
}

#[test]
fn division_is_rejected_everywhere() {
    let ctx = q_ctx("y^2", "1");
    for bad in ["x/2", "y/y", "(x+1)/3", "1/0", "x*/y"] {
        assert!(parse_skew(bad, &ctx).is_err(), "{bad}");
    }
    assert!(parse_skew("1/2*x", &ctx).is_ok());
}
