//! Invariants of the module-label calculus: the fusion group, tau-word
//! orthogonality, lowest weights, and the Hamming specialization.

use frame48::catalog::moonshine_d_rows;
use frame48::modules::{tau_word, ModuleSystem};
use frame48::weights::coset_min_weight;
use frame48::BinaryWord;
use num_bigint::BigUint;
use num_rational::Rational64;

#[test]
fn census_values() {
    assert_eq!(ModuleSystem::moonshine().census(), BigUint::from(16384u32));
    assert_eq!(ModuleSystem::hamming8().census(), BigUint::from(256u32));
    // Analog for the repetition code {00, 11}: 2 x 2 labels, checked both
    // through the system and by brute force over (dual word, syndrome).
    let rep = frame48::LinearCode::from_rows(2, &[BinaryWord::parse("11").unwrap()]).unwrap();
    let rep_sys = ModuleSystem::new(rep.clone()).unwrap();
    assert_eq!(rep_sys.census(), BigUint::from(4u32));
    let brute = rep.dual().size() * (1u64 << (2 - rep.dim()));
    assert_eq!(BigUint::from(brute), rep_sys.census());
    // Full space: trivial dual and trivial quotient, a single label. The
    // full space is not an even code, so only the grid count applies.
    let full = frame48::LinearCode::full(2);
    assert_eq!(frame48::modules::label_census(&full), BigUint::from(1u32));
}

#[test]
fn label_canonicalization_and_equivalence() {
    let sys = ModuleSystem::moonshine();
    let c = sys.code().clone();
    let zero = BinaryWord::zero(48);
    // (0, c) for c in C is the vacuum.
    for cw in c.basis() {
        let label = sys.label(&zero, cw).unwrap();
        assert!(label.is_vacuum());
    }
    // Shifting gamma by a codeword does not change the label.
    let beta = moonshine_d_rows()[3];
    let gamma = BinaryWord::parse(
        "110010101110001011001010111000101100101011100010",
    )
    .unwrap();
    let l1 = sys.label(&beta, &gamma).unwrap();
    let l2 = sys.label(&beta, &(gamma ^ c.basis()[17])).unwrap();
    assert!(sys.is_equivalent(&l1, &l2));
    // Distinct single-bit gammas are inequivalent (min weight of C is 4).
    let a = sys.label(&zero, &BinaryWord::unit(48, 0)).unwrap();
    let b = sys.label(&zero, &BinaryWord::unit(48, 1)).unwrap();
    assert!(!sys.is_equivalent(&a, &b));
    // Different tau-words are never equivalent.
    let tw = sys.label(&beta, &gamma).unwrap();
    let tz = sys.label(&zero, &gamma).unwrap();
    assert!(!sys.is_equivalent(&tw, &tz));
    // Tau-words outside the dual are rejected.
    assert!(sys.label(&BinaryWord::unit(48, 5), &gamma).is_err());
}

#[test]
fn syndrome_generators_must_be_a_dual_basis() {
    let code = frame48::catalog::moonshine_c();
    let rows = moonshine_d_rows();
    // Dependent family rejected.
    let dependent = vec![rows[0], rows[1], rows[0] ^ rows[1], rows[3], rows[4], rows[5], rows[6]];
    assert!(ModuleSystem::with_dual_generators(code.clone(), dependent).is_err());
    // Too few generators rejected.
    assert!(ModuleSystem::with_dual_generators(code, rows[..6].to_vec()).is_err());
}

#[test]
fn tau_word_construction() {
    let h = vec![Rational64::new(1, 16); 48];
    assert_eq!(tau_word(&h).unwrap().0, BinaryWord::ones(48));
    let h = vec![Rational64::new(0, 1); 48];
    assert_eq!(tau_word(&h).unwrap().0, BinaryWord::zero(48));
    let mut h = vec![Rational64::new(0, 1); 48];
    h[0] = Rational64::new(1, 2);
    h[2] = Rational64::new(1, 16);
    let t = tau_word(&h).unwrap().0;
    assert_eq!(t, BinaryWord::unit(48, 2));
    h[1] = Rational64::new(1, 3);
    assert!(tau_word(&h).is_err());
}

#[test]
fn fusion_forms_an_elementary_abelian_2_group() {
    let sys = ModuleSystem::moonshine();
    let vacuum = sys.vacuum();
    let labels: Vec<_> = sys.all_labels().collect();
    assert_eq!(labels.len(), 16384);
    // Identity, self-inverse, commutativity on the full label set.
    for m in &labels {
        assert_eq!(sys.fuse(m, &vacuum), *m);
        assert_eq!(sys.fuse(m, m), vacuum);
    }
    // Associativity and commutativity on a deterministic pseudo-random
    // sample of triples.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state as usize % 16384
    };
    for _ in 0..100_000 {
        let (a, b, c) = (&labels[next()], &labels[next()], &labels[next()]);
        assert_eq!(sys.fuse(&sys.fuse(a, b), c), sys.fuse(a, &sys.fuse(b, c)));
        assert_eq!(sys.fuse(a, b), sys.fuse(b, a));
    }
    // Simple currents: fusion with a fixed label permutes the labels.
    let fixed = &labels[12345];
    let mut seen = std::collections::HashSet::with_capacity(16384);
    for m in &labels {
        seen.insert(sys.fuse(fixed, m));
    }
    assert_eq!(seen.len(), 16384);
}

#[test]
fn hamming_fusion_reproduces_the_specialized_rule() {
    // Brute force over all label pairs with tau-words 0 or all-ones: the
    // fusion product is the componentwise sum on both components.
    let sys = ModuleSystem::hamming8();
    let taus = [BinaryWord::zero(8), BinaryWord::ones(8)];
    for b1 in taus {
        for b2 in taus {
            for g1 in 0..16u32 {
                for g2 in 0..16u32 {
                    let m1 = sys.label_from_class(&b1, g1).unwrap();
                    let m2 = sys.label_from_class(&b2, g2).unwrap();
                    let product = sys.fuse(&m1, &m2);
                    assert_eq!(product.beta(), b1 ^ b2);
                    assert_eq!(product.gamma_class(), g1 ^ g2);
                }
            }
        }
    }
}

#[test]
fn tau_words_are_orthogonal_to_the_code() {
    let sys = ModuleSystem::moonshine();
    for beta in sys.dual().codewords() {
        for gen in sys.code().basis() {
            assert_eq!(beta.dot(gen), 0);
        }
    }
}

#[test]
fn lowest_weight_examples() {
    let sys = ModuleSystem::moonshine();
    assert_eq!(sys.lowest_weight(&sys.vacuum()).unwrap(), Rational64::new(0, 1));
    // The all-ones tau-word has an empty complement: weight 48/16 = 3 for
    // every gamma class.
    let ones = BinaryWord::ones(48);
    for class in 0..128 {
        let label = sys.label_from_class(&ones, class).unwrap();
        assert_eq!(sys.lowest_weight(&label).unwrap(), Rational64::from_integer(3));
    }
}

#[test]
fn untwisted_lowest_weights_are_half_coset_leaders() {
    let sys = ModuleSystem::moonshine();
    let zero = BinaryWord::zero(48);
    for class in 0..128u32 {
        let label = sys.label_from_class(&zero, class).unwrap();
        let gamma = sys.gamma_representative(class);
        let leader = coset_min_weight(sys.code(), &gamma).unwrap();
        assert_eq!(
            sys.lowest_weight(&label).unwrap(),
            Rational64::new(leader as i64, 2),
            "class {class}"
        );
    }
}

#[test]
fn hamming_lowest_weights_against_brute_force() {
    // Oracle: minimize the total slot weight over all induced summands by
    // direct enumeration of the code.
    let sys = ModuleSystem::hamming8();
    for beta in [BinaryWord::zero(8), BinaryWord::ones(8)] {
        for class in 0..16u32 {
            let label = sys.label_from_class(&beta, class).unwrap();
            let gamma = sys.gamma_representative(class);
            let brute = sys
                .code()
                .codewords()
                .map(|delta| {
                    let mut total = Rational64::new(0, 1);
                    for i in 0..8 {
                        total += if beta.bit(i) {
                            Rational64::new(1, 16)
                        } else if gamma.bit(i) ^ delta.bit(i) {
                            Rational64::new(1, 2)
                        } else {
                            Rational64::new(0, 1)
                        };
                    }
                    total
                })
                .min()
                .unwrap();
            assert_eq!(sys.lowest_weight(&label).unwrap(), brute, "({beta}, {class})");
        }
    }
    // The fully twisted labels sit at weight 1/2, as the tensor product of
    // eight twisted slots.
    let label = sys.label_from_class(&BinaryWord::ones(8), 3).unwrap();
    assert_eq!(sys.lowest_weight(&label).unwrap(), Rational64::new(1, 2));
}

#[test]
fn fusion_table_csv_is_closed() {
    let sys = ModuleSystem::hamming8();
    let labels: Vec<_> = [BinaryWord::zero(8), BinaryWord::ones(8)]
        .into_iter()
        .flat_map(|b| (0..16u32).map(move |c| (b, c)))
        .map(|(b, c)| sys.label_from_class(&b, c).unwrap())
        .collect();
    let csv = sys.fusion_table_csv(&labels);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 1 + 32 * 32);
    assert_eq!(lines[0], "beta1,class1,beta2,class2,beta3,class3");
    // Every product row references a label from the same set.
    for row in &lines[1..] {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 6);
        let beta = BinaryWord::parse(cols[4]).unwrap();
        assert!(beta.is_zero() || beta == BinaryWord::ones(8));
    }
}

#[test]
fn coordinate_automorphism_classes() {
    let sys = ModuleSystem::moonshine();
    // Words of D act trivially.
    for beta in sys.dual().codewords() {
        assert!(sys.coordinate_automorphism_class(&beta).unwrap().is_zero());
    }
    // Words differing by an element of D share a class.
    let w = BinaryWord::parse("101101001011010010110100101101001011010010110100").unwrap();
    let shifted = w ^ moonshine_d_rows()[4];
    assert_eq!(
        sys.coordinate_automorphism_class(&w).unwrap(),
        sys.coordinate_automorphism_class(&shifted).unwrap()
    );
    // A single-bit word acts nontrivially (D has minimum weight 16).
    assert!(!sys
        .coordinate_automorphism_class(&BinaryWord::unit(48, 7))
        .unwrap()
        .is_zero());
}
