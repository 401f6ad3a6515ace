//! Property-based tests: algebraic laws and structural invariants on
//! randomly generated instances, with shrinking on failure.

use proptest::prelude::*;

use cover_algebra::{
    decompose_single_facet, format_instance, generation_bound, graded_count_direct,
    graded_count_via_decomposition, maximal_elements, parse_instance, split_high_degree_with_rule,
    CoverVector, ExtNat, Facet, SplitRule, WeightedMulticomplex,
};

fn extnat_entry() -> impl Strategy<Value = ExtNat> {
    prop_oneof![
        4 => (0u64..=4).prop_map(ExtNat::Finite),
        1 => Just(ExtNat::Infinity),
    ]
}

fn arb_facet(n: usize) -> impl Strategy<Value = Facet> {
    prop::collection::vec(extnat_entry(), n).prop_map(Facet::new)
}

/// A weighted multicomplex with 1–3 facets in dimension 1–3, entries in
/// {0..4, ∞}, weights in 1..=3. Candidate facets are normalized to their
/// maximal antichain before weights are attached.
fn arb_instance() -> impl Strategy<Value = WeightedMulticomplex> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(arb_facet(n), 1..=3),
            prop::collection::vec(1u64..=3, 3),
        )
            .prop_map(|(candidates, weights)| {
                let pairs = maximal_elements(&candidates)
                    .expect("candidates are nonempty and of one dimension")
                    .into_iter()
                    .zip(weights)
                    .collect();
                WeightedMulticomplex::from_pairs(pairs).expect("maximal elements form an antichain")
            })
    })
}

/// An instance together with vectors of its dimension.
fn instance_and_vectors(
    count: usize,
) -> impl Strategy<Value = (WeightedMulticomplex, Vec<CoverVector>)> {
    arb_instance().prop_flat_map(move |w| {
        let n = w.dimension();
        let vectors = prop::collection::vec(
            prop::collection::vec(0u64..=4, n).prop_map(CoverVector::new),
            count,
        );
        (Just(w), vectors)
    })
}

fn arb_extnat() -> impl Strategy<Value = ExtNat> {
    prop_oneof![
        5 => (0u64..=50).prop_map(ExtNat::Finite),
        1 => Just(ExtNat::Infinity),
    ]
}

proptest! {
    /// Addition and multiplication on ℕ∪{∞} are commutative, associative,
    /// and distribute, with 0 annihilating even ∞.
    #[test]
    fn extended_naturals_form_a_commutative_semiring(
        a in arb_extnat(),
        b in arb_extnat(),
        c in arb_extnat(),
    ) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a * ExtNat::ZERO, ExtNat::ZERO);
        prop_assert_eq!(a + ExtNat::ZERO, a);
        prop_assert_eq!(a * ExtNat::Finite(1), a);
    }

    /// The order on ℕ∪{∞} is compatible with the operations.
    #[test]
    fn extended_natural_order_is_compatible(
        a in arb_extnat(),
        b in arb_extnat(),
        c in arb_extnat(),
    ) {
        if a <= b {
            prop_assert!(a + c <= b + c);
            prop_assert!(a * c <= b * c);
        }
        prop_assert!(a <= ExtNat::Infinity);
    }

    /// The componentwise order is a partial order, and `leq` agrees with it.
    #[test]
    fn componentwise_order_laws(
        (_, vectors) in instance_and_vectors(3),
    ) {
        let (a, b, c) = (&vectors[0], &vectors[1], &vectors[2]);
        prop_assert_eq!(a.partial_cmp(a), Some(std::cmp::Ordering::Equal));
        if a.leq(b).unwrap() && b.leq(a).unwrap() {
            prop_assert_eq!(a, b);
        }
        if a.leq(b).unwrap() && b.leq(c).unwrap() {
            prop_assert!(a.leq(c).unwrap());
        }
        prop_assert_eq!(
            a.leq(b).unwrap(),
            matches!(
                a.partial_cmp(b),
                Some(std::cmp::Ordering::Less | std::cmp::Ordering::Equal)
            )
        );
    }

    /// Normalization returns an antichain that still dominates every input
    /// and invents nothing.
    #[test]
    fn maximal_elements_normalize(
        candidates in (1usize..=3).prop_flat_map(|n| prop::collection::vec(arb_facet(n), 1..=5)),
    ) {
        let maximal = maximal_elements(&candidates).unwrap();
        prop_assert!(!maximal.is_empty());
        for (i, x) in maximal.iter().enumerate() {
            prop_assert!(candidates.contains(x));
            for (j, y) in maximal.iter().enumerate() {
                if i != j {
                    prop_assert!(x.partial_cmp(y).is_none());
                }
            }
        }
        for candidate in &candidates {
            prop_assert!(maximal.iter().any(|m| candidate.leq(m).unwrap()));
        }
    }

    /// Multicomplexes are downward closed: shrinking a member keeps it in.
    #[test]
    fn membership_is_downward_closed(
        (w, vectors) in instance_and_vectors(2),
    ) {
        let point = vectors[0].to_facet();
        if w.complex().contains(&point).unwrap() {
            let smaller = CoverVector::new(
                vectors[0]
                    .entries()
                    .iter()
                    .zip(vectors[1].entries())
                    .map(|(&p, &q)| p.min(q))
                    .collect(),
            );
            prop_assert!(w.complex().contains(&smaller.to_facet()).unwrap());
            prop_assert!(!w.complex().in_ideal(&smaller).unwrap());
        }
    }

    /// A weighted sum is infinite exactly when the vector is positive on an
    /// infinite coordinate of the facet.
    #[test]
    fn weighted_sum_infinite_characterization(
        (w, vectors) in instance_and_vectors(1),
    ) {
        let b = &vectors[0];
        for (facet, _) in w.pairs() {
            let expected = facet
                .entries()
                .iter()
                .zip(b.entries())
                .any(|(&m, &v)| m.is_infinite() && v > 0);
            prop_assert_eq!(facet.weighted_sum(b).unwrap().is_infinite(), expected);
        }
    }

    /// Cover orders are superadditive and monotone, and the graded pieces
    /// form a descending filtration.
    #[test]
    fn cover_orders_are_superadditive_and_monotone(
        (w, vectors) in instance_and_vectors(2),
    ) {
        let (a, b) = (&vectors[0], &vectors[1]);
        let sum_order = w.cover_order(&a.add(b).unwrap()).unwrap();
        prop_assert!(sum_order >= w.cover_order(a).unwrap() + w.cover_order(b).unwrap());
        for i in 0..w.dimension() {
            let mut bigger = a.entries().to_vec();
            bigger[i] += 1;
            prop_assert!(
                w.cover_order(&CoverVector::new(bigger)).unwrap()
                    >= w.cover_order(a).unwrap()
            );
        }
        for k in 0..=4u64 {
            if w.is_cover(a, k + 1).unwrap() {
                prop_assert!(w.is_cover(a, k).unwrap());
            }
        }
    }

    /// Instances survive a round trip through the text format.
    #[test]
    fn instance_format_round_trips(w in arb_instance()) {
        let text = format_instance(&w);
        let reparsed = parse_instance(&text).unwrap();
        prop_assert_eq!(&reparsed, &w);
        prop_assert_eq!(format_instance(&reparsed), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The pruned search agrees with the exhaustive oracle.
    #[test]
    fn search_equals_oracle(w in arb_instance(), k in 0u64..=3) {
        prop_assert_eq!(w.minimal_covers(k), w.minimal_covers_oracle(k));
    }

    /// Minimal covers are locally minimal covers inside the search box.
    #[test]
    fn minimal_covers_are_minimal(w in arb_instance(), k in 1u64..=3) {
        let bound = w.cover_box_bound(k).unwrap();
        for b in w.minimal_covers(k).iter() {
            prop_assert!(w.is_cover(b, k).unwrap());
            prop_assert!(b.leq(&bound).unwrap());
            for i in 0..b.len() {
                if b.entry(i) > 0 {
                    let mut smaller = b.entries().to_vec();
                    smaller[i] -= 1;
                    prop_assert!(!w.is_cover(&CoverVector::new(smaller), k).unwrap());
                }
            }
        }
    }

    /// The single-facet counting identity holds pointwise in (k, d).
    #[test]
    fn counting_identity(
        facet in (1usize..=3).prop_flat_map(arb_facet),
        weight in 1u64..=2,
        k in 1u64..=3,
        d in 0u64..=4,
    ) {
        let w = WeightedMulticomplex::principal(facet.clone(), weight).unwrap();
        let decomposition = decompose_single_facet(&facet, weight).unwrap();
        prop_assert_eq!(
            graded_count_direct(&w, k, d),
            graded_count_via_decomposition(&decomposition, k, d)
        );
    }

    /// Every certificate in a generation report re-verifies, and the report
    /// classifies every tabulated minimal cover exactly once.
    #[test]
    fn generation_reports_are_sound(w in arb_instance()) {
        let report = w.algebra_generators(3);
        for (target, certificate) in report.certificates() {
            prop_assert!(certificate.verify(&w, target).unwrap());
        }
        let tabulated: usize = (1..=3u64)
            .map(|k| report.table().degree(k).map_or(0, |s| s.len()))
            .sum();
        prop_assert_eq!(
            report.new_generators().len() + report.certificates().len(),
            tabulated
        );
    }

    /// Directly above the generation bound, every minimal cover splits into
    /// two valid factors that recombine exactly.
    #[test]
    fn splits_above_the_bound_are_valid(
        entries in prop::collection::vec(1u64..=3, 1..=3),
        weight in 1u64..=2,
    ) {
        let facet = Facet::finite(&entries);
        let bound = generation_bound(&facet, weight).unwrap();
        let w = WeightedMulticomplex::principal(facet.clone(), weight).unwrap();
        let degree = bound + 1;
        for cover in w.minimal_covers(degree).iter() {
            let attempt = split_high_degree_with_rule(
                &facet,
                weight,
                cover,
                degree,
                SplitRule::WeightedSupport,
            )
            .unwrap();
            prop_assert!(attempt.is_valid());
            prop_assert_eq!(
                &attempt.left.exponents.add(&attempt.right.exponents).unwrap(),
                cover
            );
            prop_assert_eq!(attempt.left.degree + attempt.right.degree, degree);
            prop_assert!(attempt.right.degree >= 1);
            prop_assert!(attempt.left.degree >= 1);
        }
    }
}
