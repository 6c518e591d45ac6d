use nq_core::scalars::{FieldCtx, Scalar};
use proptest::prelude::*;

fn ratfun_from(coeffs: &[(i64, i64)], den: &[(i64, i64)]) -> Scalar {
    let k = FieldCtx::RatFun;
    let build = |terms: &[(i64, i64)]| {
        terms.iter().fold(k.zero(), |acc, &(c, e)| &acc + &(&k.int(c) * &k.s_pow(e).unwrap()))
    };
    let d = build(den);
    let d = if d.is_zero() { k.one() } else { d };
    build(coeffs).try_div(&d).unwrap()
}

fn terms() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, -4i64..=6), 0..4)
}

fn ratfun() -> impl Strategy<Value = Scalar> {
    (terms(), terms()).prop_map(|(n, d)| ratfun_from(&n, &d))
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..30).prop_map(|(n, d)| FieldCtx::Rational.ratio(n, d))
}

fn cyclo() -> impl Strategy<Value = Scalar> {
    let k = FieldCtx::cyclotomic(6).unwrap();
    prop::collection::vec(-5i64..5, 0..6).prop_map(move |cs| k.q_laurent(-1, &cs).unwrap())
}

fn axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
    assert_eq!(a + b, b + a);
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    if !b.is_zero() {
        assert_eq!(&a.try_div(b).unwrap() * b, a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        axioms(&a, &b, &c);
    }

    #[test]
    fn canonical_form_is_stable(a in ratfun()) {
        let k = FieldCtx::RatFun;
        // Re-entering through the JSON schema re-normalizes the value.
        prop_assert_eq!(k.parse_json(&a.to_json()).unwrap(), a.clone());
        prop_assert_eq!(&(&a * &k.one()) + &k.zero(), a);
    }
}
