//! Structure of single-facet algebras: classifying coordinates as zero,
//! positive, or unbounded; the structural decomposition this induces; and
//! the counting identity that makes the decomposition checkable.
//!
//! ```sh
//! cargo run --example single_facet_structure
//! ```

use cover_algebra::{
    classify_coordinates, decompose_single_facet, graded_count_direct,
    graded_count_via_decomposition, ExtNat, Facet, WeightedMulticomplex,
};

fn main() -> Result<(), cover_algebra::Error> {
    // One facet (2, 0, ∞) with weight 3. Each coordinate plays a different
    // role for covers: a zero entry never contributes to a weighted sum, an
    // infinite entry absorbs every order at once, and a positive finite
    // entry participates normally.
    let facet = Facet::new(vec![ExtNat::Finite(2), ExtNat::Finite(0), ExtNat::Infinity]);
    let weight = 3;

    let classes = classify_coordinates(&facet);
    println!("facet {facet} with weight {weight}:");
    println!("  positive coordinates (0-based): {:?}", classes.positive());
    println!("  zero coordinates:               {:?}", classes.zero());
    println!("  infinite coordinates:           {:?}", classes.infinite());
    println!();

    // The decomposition reduces the algebra to the positive part: zero
    // coordinates ride along as free polynomial variables, and the
    // unbounded coordinates contribute the ideal they generate, at every
    // degree. Its membership rule never consults the original complex.
    let decomposition = decompose_single_facet(&facet, weight)?;
    println!("kind: {:?}", decomposition.kind());
    println!("form: {decomposition}");
    println!(
        "reduced facet: {} (weight {})\n",
        decomposition.reduced_facet(),
        decomposition.reduced_weight()
    );

    // The identity: counting monomials x^b t^k with |b| ≤ d directly (by
    // evaluating cover orders) and via the decomposition's membership rule
    // gives the same table. The two tallies share no logic.
    let w = WeightedMulticomplex::principal(facet.clone(), weight)?;
    println!("graded counts, direct | via decomposition:");
    print!("          ");
    for d in 0..=4u64 {
        print!("   d={d}   ");
    }
    println!();
    for k in 1..=3u64 {
        print!("  k = {k}:  ");
        for d in 0..=4 {
            let direct = graded_count_direct(&w, k, d);
            let via = graded_count_via_decomposition(&decomposition, k, d);
            assert_eq!(direct, via);
            print!(" {direct:>3}|{via:<3} ");
        }
        println!();
    }
    println!();

    // Extremes collapse to closed forms: an all-∞ facet admits every
    // nonzero vector at every order, an all-zero facet admits nothing.
    let all_inf =
        WeightedMulticomplex::principal(Facet::new(vec![ExtNat::Infinity, ExtNat::Infinity]), 1)?;
    let all_zero = WeightedMulticomplex::principal(Facet::finite(&[0, 0]), 1)?;
    assert_eq!(graded_count_direct(&all_inf, 7, 1), 2); // (1,0) and (0,1)
    assert_eq!(graded_count_direct(&all_zero, 1, 6), 0);
    println!("all-inf facet, k = 7, d = 1: 2 monomials (every nonzero vector)");
    println!("all-zero facet, any k ≥ 1:   0 monomials");
    Ok(())
}
