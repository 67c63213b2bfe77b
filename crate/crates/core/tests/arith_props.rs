use pretzel_core::arith::{exact_div, laurent_mul, max_degree, GaussInt, HalfLaurent};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-12i64..12, -5i64..6, -3i64..4), 0..6).prop_map(|terms| {
        HalfLaurent::from_terms(
            terms
                .into_iter()
                .map(|(e, re, im)| (e, GaussInt::new(re, im))),
        )
    })
}

fn nonzero() -> impl Strategy<Value = HalfLaurent> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn degrees_add(p in nonzero(), q in nonzero()) {
        let d = max_degree(&laurent_mul(&p, &q)).unwrap();
        prop_assert_eq!(d, max_degree(&p).unwrap() + max_degree(&q).unwrap());
    }

    #[test]
    fn division_undoes_multiplication(p in laurent(), q in nonzero()) {
        prop_assert_eq!(exact_div(&laurent_mul(&p, &q), &q).unwrap(), p);
    }

    #[test]
    fn display_parse_roundtrip(p in laurent()) {
        let back: HalfLaurent = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rational_text_roundtrip(n in -1000i64..1000, d in 1i64..1000) {
        let r = pretzel_core::arith::rat(n, d);
        let text = pretzel_core::arith::format_rational(&r);
        prop_assert_eq!(pretzel_core::arith::parse_rational(&text).unwrap(), r);
    }
}

#[test]
fn division_by_zero_is_an_error() {
    let p: HalfLaurent = "v + 1".parse().unwrap();
    assert!(exact_div(&p, &HalfLaurent::zero()).is_err());
}
