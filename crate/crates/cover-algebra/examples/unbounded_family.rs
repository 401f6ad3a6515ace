//! A two-facet instance whose cover algebra is *not* finitely generated:
//! a new generator appears at every degree, forever.
//!
//! ```sh
//! cargo run --example unbounded_family
//! ```

use cover_algebra::{parse_instance, CoverVector};

fn main() -> Result<(), cover_algebra::Error> {
    // Facets (0, ∞) and (2, 0), both of weight 1. The first forces every
    // positive-order cover to be positive in x2; the second forces
    // 2·b(1) ≥ k. The unique minimal cover of order k is therefore
    // (⌈k/2⌉, 1), and its x2-entry is stuck at 1 no matter how large k gets.
    let w = parse_instance("0 inf : 1\n2 0 : 1\n")?;
    println!("facets:");
    for (facet, weight) in w.pairs() {
        println!("  {facet} : {weight}");
    }
    println!();

    let horizon = 12;
    for k in 1..=horizon {
        let covers = w.minimal_covers(k);
        assert_eq!(covers.covers(), &[CoverVector::new(vec![k.div_ceil(2), 1])]);
    }
    println!("minimal cover of order k is (⌈k/2⌉, 1) for every k ≤ {horizon}");

    // Why no product of lower degrees reaches it: a factorization would
    // split the single x2 into one factor and leave the other with x2 = 0 —
    // but a vector with x2 = 0 has weighted sum 0 against the facet
    // (0, ∞), hence cover order 0, and cannot carry positive degree.
    let report = w.algebra_generators(horizon);
    for k in 1..=horizon {
        let new: Vec<_> = report.new_generators_of_degree(k).collect();
        assert_eq!(new.len(), 1, "degree {k} must introduce a generator");
        println!("degree {k:>2}: new generator {}", new[0]);
    }

    // Consequently there is no finite certificate: the certified bound
    // only exists for single bounded facets, and this family genuinely
    // needs infinitely many generators.
    assert_eq!(report.certified_bound(), None);
    assert_eq!(report.max_new_generator_degree(), Some(horizon));
    println!("\nno finite certificate within horizon — and none exists at any horizon");
    Ok(())
}
