//! Algebraic property tests for the truncated-series kernel.

use frame48::qseries::{QSeries, UNIT};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

const TRUNC: i64 = 6 * UNIT;

fn arb_series() -> impl Strategy<Value = QSeries> {
    proptest::collection::vec((-UNIT..=TRUNC, -9i64..=9, 1i64..=4), 0..8).prop_map(|terms| {
        QSeries::from_terms(
            TRUNC,
            terms
                .into_iter()
                .map(|(i, n, d)| (i, BigRational::new(n.into(), d.into()))),
        )
    })
}

/// Series with a nonzero constant term, safe to invert without losing
/// truncation range.
fn arb_unit_series() -> impl Strategy<Value = QSeries> {
    arb_series().prop_map(|s| {
        let trimmed = QSeries::from_terms(TRUNC, s.terms().filter(|(i, _)| *i > 0).map(|(i, c)| (i, c.clone())));
        trimmed.add(&QSeries::one(TRUNC))
    })
}

proptest! {
    #[test]
    fn addition_commutes_and_mul_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        // Compare over the common known range.
        let t = left.trunc().min(right.trunc());
        prop_assert_eq!(left.truncated(t), right.truncated(t));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        let left = a.mul(&b).mul(&c);
        let right = a.mul(&b.mul(&c));
        let t = left.trunc().min(right.trunc());
        prop_assert_eq!(left.truncated(t), right.truncated(t));
    }

    #[test]
    fn reciprocal_inverts(a in arb_unit_series()) {
        let r = a.recip().unwrap();
        let product = a.mul(&r);
        prop_assert_eq!(product.coeff(0), BigRational::one());
        for (i, c) in product.terms() {
            prop_assert!(i == 0 || c == &BigRational::from_integer(0.into()), "index {i}");
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication(a in arb_unit_series(), k in 0u32..6) {
        let mut expected = QSeries::one(TRUNC);
        for _ in 0..k {
            expected = expected.mul(&a);
        }
        let got = a.pow(k);
        let t = got.trunc().min(expected.trunc());
        prop_assert_eq!(got.truncated(t), expected.truncated(t));
    }

    #[test]
    fn shift_round_trips(a in arb_series(), offset in -2*UNIT..=2*UNIT) {
        prop_assert_eq!(a.shift(offset).shift(-offset), a);
    }

    #[test]
    fn coeffwise_leq_is_a_partial_order(a in arb_series(), b in arb_series()) {
        prop_assert!(a.coeffwise_leq(&a));
        if a.coeffwise_leq(&b) && b.coeffwise_leq(&a) {
            let t = a.trunc().min(b.trunc());
            prop_assert_eq!(a.truncated(t), b.truncated(t));
        }
    }
}
