//! High-degree splits: above the generation bound every minimal cover
//! factors, and the degree assignment rule decides whether the factors are
//! actually covers of their assigned degrees. This example contrasts the
//! two rules on the instance where they disagree.
//!
//! ```sh
//! cargo run --example split_rules
//! ```

use cover_algebra::{
    generation_bound, split_high_degree, split_high_degree_with_rule, CoverVector, ExtNat, Facet,
    SplitRule, WeightedMulticomplex,
};

fn main() -> Result<(), cover_algebra::Error> {
    // Single facet a = (2, 1) with weight ω = 1. The generation bound is
    // (Σᵢ a(i) + 1)·ω − 1 = 3: no new generators appear above degree 3,
    // because any cover of higher degree splits into two smaller factors.
    let facet = Facet::finite(&[2, 1]);
    let weight = 1;
    let bound = generation_bound(&facet, weight)?;
    println!("facet {facet}, weight {weight}: generation bound = {bound}");

    let w = WeightedMulticomplex::principal(facet.clone(), weight)?;

    // The split works on any cover of degree k ≥ bound + 1. Both rules put
    // ω on each coordinate of I = {i : b(i) > ω} to form the right factor;
    // they differ only in how much of the degree the right factor takes:
    //
    //   weighted-support:     k″ = Σ_{i∈I} a(i)
    //   support-cardinality:  k″ = |I|
    //
    // The left factor keeps degree k − k″. The weighted rule gives the left
    // factor a degree its cover order can always reach; the cardinality
    // rule undershoots k″ whenever a(i) ≥ 2 somewhere on I, and the left
    // factor is then assigned a degree it cannot cover.
    println!("\nsplit attempts for covers of degree 4 and 5:");
    let cases: [(CoverVector, u64); 2] = [
        (CoverVector::new(vec![2, 0]), 4),
        (CoverVector::new(vec![2, 1]), 5),
    ];
    for (cover, degree) in &cases {
        let order = w.cover_order(cover)?;
        println!("\n  cover {cover}, degree {degree} (cover order {order}):");
        for rule in [SplitRule::WeightedSupport, SplitRule::SupportCardinality] {
            let attempt = split_high_degree_with_rule(&facet, weight, cover, *degree, rule)?;
            let verdict = if attempt.is_valid() {
                "valid".to_string()
            } else {
                format!(
                    "INVALID (left factor order {} < degree {})",
                    attempt.left_order, attempt.left.degree
                )
            };
            println!(
                "    {:>19}: ({}) * ({})  {}",
                rule.label(),
                attempt.left,
                attempt.right,
                verdict
            );
        }
    }

    // Freeze the disagreement at (2,1), degree 5: the cardinality rule
    // hands the left factor (1,1) degree 4, but its order is only 3.
    let strict = split_high_degree_with_rule(
        &facet,
        weight,
        &CoverVector::new(vec![2, 1]),
        5,
        SplitRule::SupportCardinality,
    )?;
    assert!(!strict.is_valid());
    assert_eq!(strict.left_order, ExtNat::Finite(3));
    assert_eq!(strict.left.degree, 4);
    assert_eq!(strict.right.degree, 1);

    let (left, right) = split_high_degree(&facet, weight, &CoverVector::new(vec![2, 1]), 5)?;
    assert_eq!(right.degree, 2);
    assert_eq!(
        left.exponents.add(&right.exponents)?,
        CoverVector::new(vec![2, 1])
    );

    // The default split (weighted-support) asserts validity internally, so
    // downstream code can recombine factors without re-checking.
    println!("\ndefault split of (2, 1) at degree 5: ({left}) * ({right}), exponents recombine");
    Ok(())
}
