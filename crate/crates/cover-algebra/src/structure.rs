//! Structure theory for complexes with a single maximal facet.
//!
//! For the principal downset of one facet `a`, covers interact with each
//! coordinate in exactly one of three ways:
//!
//! * `a(i) = 0` — the coordinate never contributes to a weighted sum, so
//!   covers ignore it entirely;
//! * `a(i) = ∞` — any cover positive there has an infinite weighted sum and
//!   therefore every order at once;
//! * `0 < a(i) < ∞` — the coordinate participates normally.
//!
//! This yields a decomposition of the graded algebra: a monomial `x^b t^k`
//! (`k ≥ 1`) belongs to it iff `b` is positive somewhere on the unbounded
//! coordinates, or `b` vanishes there and its restriction to the positive
//! coordinates covers the reduced facet at order `k`. The module exposes the
//! classification, the decomposition, and two deliberately independent
//! graded counting routes whose agreement is the checkable content of the
//! decomposition:
//!
//! * [`graded_count_direct`] — evaluate cover orders on the original complex;
//! * [`graded_count_via_decomposition`] — apply the membership rule of the
//!   decomposition, touching only the reduced facet.

use std::fmt;

use crate::complex::{CoverVector, Facet, WeightedMulticomplex};
use crate::covers::vectors_up_to_degree;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// The indices of a facet, split by how covers see them. Indices are
/// 0-based positions into the original facet; no renumbering happens here.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoordinateClassification {
    positive: Vec<usize>,
    zero: Vec<usize>,
    infinite: Vec<usize>,
}

impl CoordinateClassification {
    /// Indices with `0 < a(i) < ∞`, ascending.
    pub fn positive(&self) -> &[usize] {
        &self.positive
    }

    /// Indices with `a(i) = 0`, ascending.
    pub fn zero(&self) -> &[usize] {
        &self.zero
    }

    /// Indices with `a(i) = ∞`, ascending.
    pub fn infinite(&self) -> &[usize] {
        &self.infinite
    }
}

/// Splits the coordinates of a facet into positive / zero / infinite classes.
pub fn classify_coordinates(facet: &Facet) -> CoordinateClassification {
    let mut positive = Vec::new();
    let mut zero = Vec::new();
    let mut infinite = Vec::new();
    for (i, &e) in facet.entries().iter().enumerate() {
        match e {
            ExtNat::Finite(0) => zero.push(i),
            ExtNat::Finite(_) => positive.push(i),
            ExtNat::Infinity => infinite.push(i),
        }
    }
    CoordinateClassification {
        positive,
        zero,
        infinite,
    }
}

/// The coarse shape of a single-facet algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecompositionKind {
    /// Every entry is zero: no cover of positive order exists and the
    /// algebra is the base ring alone.
    BaseRing,
    /// Every entry is infinite: the graded pieces of every positive degree
    /// coincide (all nonzero vectors, and only those).
    FullPolynomialExtension,
    /// A genuine mix; the reduced facet carries the interesting part.
    Composite,
}

/// The decomposition of a single-facet algebra into base ring, reduced part
/// over the positive coordinates (zero coordinates ride along as free
/// polynomial variables), and the ideal generated by the unbounded
/// coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingleFacetDecomposition {
    dimension: usize,
    kind: DecompositionKind,
    classification: CoordinateClassification,
    /// The original facet restricted to its positive coordinates.
    reduced: Facet,
    reduced_weight: u64,
}

/// Classifies the coordinates of `facet` and assembles the decomposition
/// data for the principal downset `(Γ(facet), weight)`.
pub fn decompose_single_facet(facet: &Facet, weight: u64) -> Result<SingleFacetDecomposition> {
    if weight == 0 {
        return Err(Error::Weight);
    }
    let classification = classify_coordinates(facet);
    let kind = if classification.zero.len() == facet.len() {
        DecompositionKind::BaseRing
    } else if classification.infinite.len() == facet.len() {
        DecompositionKind::FullPolynomialExtension
    } else {
        DecompositionKind::Composite
    };
    let reduced = facet.restrict(&classification.positive);
    Ok(SingleFacetDecomposition {
        dimension: facet.len(),
        kind,
        classification,
        reduced,
        reduced_weight: weight,
    })
}

impl SingleFacetDecomposition {
    /// The ambient dimension of the original facet.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The coarse shape of the algebra.
    pub fn kind(&self) -> DecompositionKind {
        self.kind
    }

    /// Which coordinates are positive, zero, and infinite.
    pub fn classification(&self) -> &CoordinateClassification {
        &self.classification
    }

    /// The facet restricted to its positive coordinates (possibly empty).
    pub fn reduced_facet(&self) -> &Facet {
        &self.reduced
    }

    /// The weight, unchanged by the reduction.
    pub fn reduced_weight(&self) -> u64 {
        self.reduced_weight
    }

    /// The membership rule of the decomposition: does `x^b t^k` belong to
    /// the graded algebra, judged *without* consulting the original complex?
    ///
    /// `b` qualifies iff it is positive on some unbounded coordinate, or it
    /// vanishes on all of them and its restriction to the positive
    /// coordinates covers the reduced facet at order `k`. Zero coordinates
    /// are never consulted. (For `k = 0` everything qualifies.)
    pub fn qualifies(&self, b: &CoverVector, k: u64) -> Result<bool> {
        if b.len() != self.dimension {
            return Err(Error::Dimension {
                expected: self.dimension,
                found: b.len(),
            });
        }
        if k == 0 {
            return Ok(true);
        }
        if self.classification.infinite.iter().any(|&i| b.entry(i) > 0) {
            return Ok(true);
        }
        let restricted = b.restrict(&self.classification.positive);
        let sum = self.reduced.weighted_sum(&restricted)?;
        Ok(sum.div_floor(self.reduced_weight) >= ExtNat::Finite(k))
    }
}

impl fmt::Display for SingleFacetDecomposition {
    /// The structural form of the algebra, e.g. for facet `(2, 0, ∞)` with
    /// weight 3: `S + t( A(Gamma(2), w=3)[x2] + (x3) S[t] )`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == DecompositionKind::BaseRing {
            return write!(f, "S");
        }
        let mut parts: Vec<String> = Vec::new();
        if !self.classification.positive.is_empty() {
            let entries: Vec<String> = self
                .reduced
                .entries()
                .iter()
                .map(|e| e.to_string())
                .collect();
            let mut part = format!("A(Gamma({}), w={})", entries.join(","), self.reduced_weight);
            if !self.classification.zero.is_empty() {
                let vars: Vec<String> = self
                    .classification
                    .zero
                    .iter()
                    .map(|i| format!("x{}", i + 1))
                    .collect();
                part.push_str(&format!("[{}]", vars.join(", ")));
            }
            parts.push(part);
        }
        if !self.classification.infinite.is_empty() {
            let vars: Vec<String> = self
                .classification
                .infinite
                .iter()
                .map(|i| format!("x{}", i + 1))
                .collect();
            parts.push(format!("({}) S[t]", vars.join(", ")));
        }
        write!(f, "S + t( {} )", parts.join(" + "))
    }
}

/// Counts the vectors `b` with `|b| ≤ max_degree` whose cover order on `w`
/// is at least `k`: the size of the degree-`≤ max_degree` slice of the
/// graded piece `A_k`.
pub fn graded_count_direct(w: &WeightedMulticomplex, k: u64, max_degree: u64) -> u64 {
    vectors_up_to_degree(w.dimension(), max_degree)
        .iter()
        .filter(|b| {
            w.cover_order(b).expect("enumerated in the right dimension") >= ExtNat::Finite(k)
        })
        .count() as u64
}

/// The same count, answered by the decomposition's membership rule alone.
/// Agreement with [`graded_count_direct`] for every `(k, max_degree)` is the
/// verifiable content of the single-facet decomposition.
pub fn graded_count_via_decomposition(
    decomposition: &SingleFacetDecomposition,
    k: u64,
    max_degree: u64,
) -> u64 {
    vectors_up_to_degree(decomposition.dimension(), max_degree)
        .iter()
        .filter(|b| {
            decomposition
                .qualifies(b, k)
                .expect("enumerated in the right dimension")
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extnat::ExtNat::{Finite, Infinity};

    fn facet(entries: &[ExtNat]) -> Facet {
        Facet::new(entries.to_vec())
    }

    fn cv(entries: &[u64]) -> CoverVector {
        CoverVector::new(entries.to_vec())
    }

    /// C(n + d, n) computed the slow way, for expectation values.
    fn simplex_size(n: u64, d: u64) -> u64 {
        let mut value: u128 = 1;
        for i in 1..=n {
            value = value * (d + i) as u128 / i as u128;
        }
        u64::try_from(value).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = classify_coordinates(&facet(&[Finite(2), Finite(0), Infinity]));
        assert_eq!(c.positive(), &[0]);
        assert_eq!(c.zero(), &[1]);
        assert_eq!(c.infinite(), &[2]);

        let c = classify_coordinates(&facet(&[Finite(1), Finite(3)]));
        assert_eq!(c.positive(), &[0, 1]);
        assert!(c.zero().is_empty());
        assert!(c.infinite().is_empty());

        let c = classify_coordinates(&facet(&[Infinity, Infinity]));
        assert_eq!(c.infinite(), &[0, 1]);
    }

    #[test]
    fn decomposition_kinds() {
        let d = decompose_single_facet(&facet(&[Finite(0), Finite(0)]), 1).unwrap();
        assert_eq!(d.kind(), DecompositionKind::BaseRing);
        assert_eq!(d.to_string(), "S");

        let d = decompose_single_facet(&facet(&[Infinity, Infinity]), 1).unwrap();
        assert_eq!(d.kind(), DecompositionKind::FullPolynomialExtension);
        assert_eq!(d.to_string(), "S + t( (x1, x2) S[t] )");

        let d = decompose_single_facet(&facet(&[Finite(2), Finite(0), Infinity]), 3).unwrap();
        assert_eq!(d.kind(), DecompositionKind::Composite);
        assert_eq!(d.reduced_facet(), &facet(&[Finite(2)]));
        assert_eq!(d.reduced_weight(), 3);
        assert_eq!(d.to_string(), "S + t( A(Gamma(2), w=3)[x2] + (x3) S[t] )");

        let d = decompose_single_facet(&facet(&[Finite(0), Infinity]), 1).unwrap();
        assert_eq!(d.to_string(), "S + t( (x2) S[t] )");

        assert!(matches!(
            decompose_single_facet(&facet(&[Finite(1)]), 0),
            Err(Error::Weight)
        ));
    }

    #[test]
    fn graded_count_examples() {
        let simplex = WeightedMulticomplex::principal(facet(&[Finite(1), Finite(1)]), 1).unwrap();
        assert_eq!(graded_count_direct(&simplex, 1, 1), 2);

        let unbounded = WeightedMulticomplex::principal(facet(&[Infinity, Infinity]), 1).unwrap();
        assert_eq!(graded_count_direct(&unbounded, 7, 1), 2);

        let d = decompose_single_facet(&facet(&[Finite(2), Finite(0), Infinity]), 1).unwrap();
        assert_eq!(graded_count_via_decomposition(&d, 1, 1), 2);
    }

    #[test]
    fn counting_identity_on_mixed_facets() {
        let facets = [
            facet(&[Finite(2), Finite(0), Infinity]),
            facet(&[Finite(1), Finite(1)]),
            facet(&[Finite(0), Infinity]),
            facet(&[Finite(3)]),
            facet(&[Finite(2), Finite(3), Finite(1)]),
        ];
        for a in &facets {
            for weight in [1, 2] {
                let w = WeightedMulticomplex::principal(a.clone(), weight).unwrap();
                let d = decompose_single_facet(a, weight).unwrap();
                for k in 1..=4 {
                    for max_degree in 0..=5 {
                        assert_eq!(
                            graded_count_direct(&w, k, max_degree),
                            graded_count_via_decomposition(&d, k, max_degree),
                            "identity fails for a={a}, w={weight}, k={k}, d={max_degree}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn extreme_counts_have_closed_forms() {
        // All-unbounded: every nonzero vector, C(n+d, n) − 1 of them.
        for n in 1..=4usize {
            let a = facet(&vec![Infinity; n]);
            let w = WeightedMulticomplex::principal(a, 1).unwrap();
            for k in 1..=3 {
                for d in 0..=4 {
                    assert_eq!(graded_count_direct(&w, k, d), simplex_size(n as u64, d) - 1);
                }
            }
        }
        // All-zero: nothing covers at positive order.
        let zero = WeightedMulticomplex::principal(facet(&[Finite(0), Finite(0)]), 1).unwrap();
        for k in 1..=3 {
            assert_eq!(graded_count_direct(&zero, k, 6), 0);
        }
    }

    #[test]
    fn zero_coordinates_never_affect_cover_orders() {
        let a = facet(&[Finite(2), Finite(0), Finite(1)]);
        let w = WeightedMulticomplex::principal(a, 2).unwrap();
        for b1 in 0..=3 {
            for b3 in 0..=3 {
                let base = w.cover_order(&cv(&[b1, 0, b3])).unwrap();
                for bump in 1..=4 {
                    assert_eq!(w.cover_order(&cv(&[b1, bump, b3])).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn positive_entries_on_unbounded_coordinates_absorb_every_order() {
        let a = facet(&[Finite(2), Infinity]);
        let w = WeightedMulticomplex::principal(a, 3).unwrap();
        for b1 in 0..=2 {
            assert_eq!(w.cover_order(&cv(&[b1, 1])).unwrap(), ExtNat::Infinity);
        }
        assert_eq!(w.cover_order(&cv(&[3, 0])).unwrap(), Finite(2));
    }

    #[test]
    fn restriction_to_bounded_coordinates_preserves_orders() {
        // For b vanishing on the unbounded coordinates, the order over the
        // full facet equals the order of the restriction over the reduced
        // facet (zero coordinates kept, they change nothing).
        let a = facet(&[Finite(2), Finite(0), Infinity, Finite(1)]);
        let bounded = [0usize, 1, 3];
        let reduced = a.restrict(&bounded);
        for weight in [1, 3] {
            let w_full = WeightedMulticomplex::principal(a.clone(), weight).unwrap();
            let w_reduced = WeightedMulticomplex::principal(reduced.clone(), weight).unwrap();
            for b in vectors_up_to_degree(3, 4) {
                let lifted = cv(&[b.entry(0), b.entry(1), 0, b.entry(2)]);
                assert_eq!(
                    w_full.cover_order(&lifted).unwrap(),
                    w_reduced.cover_order(&b).unwrap()
                );
            }
        }
    }

    #[test]
    fn membership_rule_matches_direct_orders_pointwise() {
        let a = facet(&[Finite(1), Infinity, Finite(0), Finite(2)]);
        let w = WeightedMulticomplex::principal(a.clone(), 2).unwrap();
        let d = decompose_single_facet(&a, 2).unwrap();
        for b in vectors_up_to_degree(4, 4) {
            for k in 1..=3 {
                assert_eq!(
                    d.qualifies(&b, k).unwrap(),
                    w.is_cover(&b, k).unwrap(),
                    "membership mismatch at b={b}, k={k}"
                );
            }
        }
    }
}
