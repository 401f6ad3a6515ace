//! Cover orders and minimal covers: exact evaluation, the finite search
//! box, the pruned enumeration, and the brute-force oracle it is checked
//! against.
//!
//! ```sh
//! cargo run --example minimal_covers
//! ```

use cover_algebra::{parse_instance, CoverVector, ExtNat};

fn main() -> Result<(), cover_algebra::Error> {
    // Two crossing facets with weights: b is a cover of order k when its
    // weighted sum against *every* facet m reaches k·ω_m, under 0·∞ = 0.
    let w = parse_instance("1 0 : 1\n0 1 : 2\n")?;
    println!("instance:");
    for (facet, weight) in w.pairs() {
        println!("  {facet} : {weight}");
    }
    println!();

    // Cover orders: min over facets of ⌊weighted sum / weight⌋.
    for entries in [[0u64, 0], [1, 2], [2, 4], [3, 1]] {
        let b = CoverVector::new(entries.to_vec());
        println!("cover order of ({b}) = {}", w.cover_order(&b)?);
    }
    println!();

    // Every minimal cover of order k fits in an explicit box: coordinate i
    // never needs more than what satisfies each facet single-handedly.
    let k = 3;
    println!("box bound for order {k}: {}", w.cover_box_bound(k)?);

    // The enumeration returns the full antichain of componentwise-minimal
    // covers, descending lexicographically (so the x1-heaviest prints
    // first). An exhaustive scan of the box double-checks it.
    let covers = w.minimal_covers(k);
    println!("minimal covers of order {k}:");
    for b in covers.iter() {
        println!("  {b}");
    }
    assert_eq!(covers, w.minimal_covers_oracle(k));
    println!("(confirmed by the exhaustive oracle)\n");

    // Orders can be infinite: against a facet that is ∞ wherever b is
    // positive, the weighted sum is ∞, and if that holds for all facets the
    // order is ∞ too.
    let unbounded = parse_instance("inf inf : 5\n")?;
    let b = CoverVector::new(vec![0, 1]);
    assert_eq!(unbounded.cover_order(&b)?, ExtNat::Infinity);
    println!(
        "against the all-inf facet, ({b}) has order {}",
        unbounded.cover_order(&b)?
    );

    // Superadditivity makes the graded pieces multiply: orders of a sum
    // accumulate the orders of its parts.
    let x = CoverVector::new(vec![2, 1]);
    let y = CoverVector::new(vec![1, 3]);
    let sum = x.add(&y)?;
    println!(
        "\norders: ({x}) ↦ {}, ({y}) ↦ {}, sum ({sum}) ↦ {}",
        w.cover_order(&x)?,
        w.cover_order(&y)?,
        w.cover_order(&sum)?
    );
    Ok(())
}
