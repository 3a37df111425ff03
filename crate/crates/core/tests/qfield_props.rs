use proptest::prelude::*;

use iquantum::qfield::{qfact, qint, LaurentPoly, RatFunc};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            &acc + &LaurentPoly::from_int(c).shift(e)
        })
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFunc::from(n)
        } else {
            RatFunc::new(n, d).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form(a in ratfunc(), b in ratfunc()) {
        prop_assume!(!b.is_zero());
        let back = (&a * &b).div(&b).unwrap();
        prop_assert_eq!(back.to_string(), a.to_string());
        prop_assert_eq!(back, a);
    }

    #[test]
    fn printing_round_trips(a in ratfunc()) {
        let parsed: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }
}

#[test]
fn quantum_numbers() {
    assert_eq!(qint(3, 1).to_string(), "q^2+1+q^-2");
    assert_eq!(qint(-2, 1), -qint(2, 1));
    assert_eq!(qfact(3, 2).unwrap(), &qint(2, 2) * &qint(3, 2));
    assert!(qfact(-1, 1).is_err());
    assert!(RatFunc::zero().inv().is_err());
}
