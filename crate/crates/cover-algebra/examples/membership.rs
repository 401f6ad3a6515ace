//! Multicomplexes as antichains of maximal facets: building them, testing
//! membership, and the complement ideal.
//!
//! ```sh
//! cargo run --example membership
//! ```

use cover_algebra::{maximal_elements, CoverVector, ExtNat, Facet, Multicomplex};

fn main() -> Result<(), cover_algebra::Error> {
    // A multicomplex over ℕ∪{∞} is a downward-closed set of vectors. It is
    // stored by its maximal facets, which must form an antichain under the
    // componentwise order; `inf` entries are allowed and sit above every
    // natural number.
    let complex = Multicomplex::new(vec![
        Facet::new(vec![ExtNat::Finite(0), ExtNat::Infinity]),
        Facet::finite(&[2, 0]),
    ])?;
    println!("maximal facets (ascending lexicographic):");
    println!("{complex}\n");

    // Membership: a point lies in the complex when some maximal facet
    // dominates it componentwise.
    for point in [
        Facet::finite(&[1, 0]),
        Facet::finite(&[0, 7]),
        Facet::finite(&[1, 1]),
        Facet::new(vec![ExtNat::Finite(0), ExtNat::Infinity]),
    ] {
        let verdict = if complex.contains(&point)? {
            "in"
        } else {
            "not in"
        };
        println!("({point}) is {verdict} the complex");
    }
    println!();

    // The complement of the complex spans a monomial ideal: exponent
    // vectors *outside* the complex. (2,1) exceeds both facets, so x1²x2
    // lies in the ideal; (2,0) is a facet itself, so x1² does not.
    for exponents in [CoverVector::new(vec![2, 1]), CoverVector::new(vec![2, 0])] {
        let verdict = if complex.in_ideal(&exponents)? {
            "in"
        } else {
            "not in"
        };
        println!("x-monomial with exponents ({exponents}) is {verdict} the ideal");
    }
    println!();

    // Redundant rows are normalized away: anything dominated by another
    // candidate is not maximal.
    let candidates = vec![
        Facet::finite(&[1, 0]),
        Facet::finite(&[2, 0]),
        Facet::finite(&[0, 1]),
        Facet::finite(&[2, 0]),
    ];
    let maximal = maximal_elements(&candidates)?;
    println!("maximal elements of four candidate rows:");
    for facet in &maximal {
        println!("  {facet}");
    }
    assert_eq!(maximal.len(), 2);
    Ok(())
}
