//! Property tests for the GF(2) code engine: duality, MacWilliams
//! consistency, and the structural facts the module calculus relies on.

use frame48::catalog::{hamming8, moonshine_c, moonshine_d, moonshine_d_rows, reed_muller};
use frame48::structure::{max_self_orthogonal_subcode, support_restricted_dual};
use frame48::weights::{coset_min_weight, WeightDistribution};
use frame48::{BinaryWord, LinearCode};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

fn arb_code(max_len: u32, max_rows: usize) -> impl Strategy<Value = LinearCode> {
    (2..=max_len).prop_flat_map(move |n| {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        proptest::collection::vec(0u64..=mask, 1..=max_rows).prop_map(move |rows| {
            let words: Vec<BinaryWord> =
                rows.into_iter().map(|b| BinaryWord::from_bits(n, b)).collect();
            LinearCode::from_rows(n, &words).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution(code in arb_code(20, 12)) {
        prop_assert_eq!(code.dual().dual(), code);
    }

    #[test]
    fn dual_dimension_is_complementary(code in arb_code(20, 12)) {
        prop_assert_eq!(code.dual().dim(), code.length() - code.dim());
    }

    #[test]
    fn macwilliams_matches_direct_dual_enumeration(code in arb_code(20, 12)) {
        let direct = WeightDistribution::of_code(&code.dual()).unwrap();
        let transformed = WeightDistribution::of_code(&code)
            .unwrap()
            .macwilliams(code.dim())
            .unwrap();
        prop_assert_eq!(direct, transformed);
    }

    #[test]
    fn distribution_total_is_code_size(code in arb_code(20, 12)) {
        let d = WeightDistribution::of_code(&code).unwrap();
        prop_assert_eq!(d.total(), BigUint::one() << code.dim());
    }

    #[test]
    fn coset_distribution_total_and_min_weight(code in arb_code(16, 8), shift_bits in any::<u64>()) {
        let shift = BinaryWord::from_bits(code.length(), shift_bits);
        let d = WeightDistribution::of_coset(&code, &shift).unwrap();
        prop_assert_eq!(d.total(), BigUint::one() << code.dim());
        let min_direct = d.min_weight().unwrap();
        prop_assert_eq!(coset_min_weight(&code, &shift).unwrap(), min_direct);
        // The leader weight is zero exactly on the code itself.
        prop_assert_eq!(min_direct == 0, code.contains(&shift).unwrap());
    }

    #[test]
    fn maximal_self_orthogonal_subcode_is_maximal(code in arb_code(14, 7)) {
        let h = max_self_orthogonal_subcode(&code);
        prop_assert!(h.is_self_orthogonal());
        prop_assert!(h.is_subcode_of(&code));
        for w in code.codewords() {
            if h.reduce(w).is_zero() {
                continue;
            }
            let extendable = w.weight() % 2 == 0
                && h.basis().iter().all(|b| b.dot(&w) == 0);
            prop_assert!(!extendable);
        }
    }
}

#[test]
fn reed_muller_nesting() {
    for m in 1..=5u32 {
        for r in 0..m {
            assert!(reed_muller(r, m).unwrap().is_subcode_of(&reed_muller(r + 1, m).unwrap()));
        }
    }
}

#[test]
fn moonshine_subcode_structure_over_all_tau_words() {
    // For every word of the [48,7] code: the support-restricted dual lies
    // in C and its maximal self-orthogonal subcode has half the support
    // dimension (a self-dual subcode on the support).
    let d = moonshine_d();
    let c = moonshine_c();
    for beta in d.codewords() {
        let cb = support_restricted_dual(&d, &beta).unwrap();
        for row in cb.basis() {
            assert!(c.contains(row).unwrap());
        }
        let h = max_self_orthogonal_subcode(&cb);
        assert_eq!(h.dim(), beta.weight() / 2, "beta = {beta}");
    }
}

#[test]
fn weight16_blocks_restrict_to_rm24() {
    let d = moonshine_d();
    let rm = reed_muller(2, 4).unwrap();
    let dist = WeightDistribution::of_code(&moonshine_d()).unwrap();
    assert_eq!(dist.count(16), &BigUint::from(3u32));
    for beta in d.codewords().filter(|b| b.weight() == 16) {
        let cb = support_restricted_dual(&d, &beta).unwrap();
        assert_eq!(cb.project(&beta), rm, "beta = {beta}");
    }
}

#[test]
fn moonshine_c_weight4_count_against_direct_scan() {
    // Independent count of the weight-4 words of C by scanning all
    // C(48,4) supports, frozen, and cross-checked against MacWilliams.
    let c = moonshine_c();
    let scanned = frame48::structure::weight4_words(&c).len() as u64;
    assert_eq!(scanned, frame48::defaults::C_WEIGHT4_COUNT);
    let dist = WeightDistribution::of_code(&moonshine_d())
        .unwrap()
        .macwilliams(7)
        .unwrap();
    assert_eq!(dist.count(4), &BigUint::from(frame48::defaults::C_WEIGHT4_COUNT));
}

#[test]
fn coset_leader_of_single_bit_shift_in_c() {
    // Minimum distance 4 makes the weight-1 leader unique: A_1 = 1 and
    // A_0 = 0 in the coset of any single-bit shift.
    let c = moonshine_c();
    let shift = BinaryWord::unit(48, 0);
    let dist = WeightDistribution::of_coset(&c, &shift).unwrap();
    assert_eq!(dist.count(0), &BigUint::ZERO);
    assert_eq!(dist.count(1), &BigUint::one());
    assert_eq!(coset_min_weight(&c, &shift).unwrap(), 1);
    // A two-bit shift outside C has leader weight 2.
    let shift2 = BinaryWord::unit(48, 0) ^ BinaryWord::unit(48, 1);
    assert!(!c.contains(&shift2).unwrap());
    assert_eq!(coset_min_weight(&c, &shift2).unwrap(), 2);
}

#[test]
fn hamming8_self_dual_under_macwilliams() {
    let dist = WeightDistribution::of_code(&hamming8()).unwrap();
    assert_eq!(dist.macwilliams(4).unwrap(), dist);
}

#[test]
fn block_words_are_the_generator_rows() {
    let rows = moonshine_d_rows();
    assert_eq!(rows[0].weight(), 16);
    assert_eq!(rows[1].weight(), 16);
    assert_eq!(rows[2].weight(), 16);
    for row in &rows[3..] {
        assert_eq!(row.weight(), 24);
    }
    let ones = rows[0] ^ rows[1] ^ rows[2];
    assert_eq!(ones, BinaryWord::ones(48));
}
