//! Exact arithmetic for vertex cover algebras of weighted simplicial
//! multicomplexes.
//!
//! # The objects
//!
//! Fix a dimension `n`. A *multicomplex* Γ is a downward-closed set of
//! vectors over ℕ ∪ {∞}, described here by the finite antichain of its
//! maximal facets: `a ∈ Γ` iff `a` is componentwise below some facet. Each
//! facet `m` carries a positive integer weight `ω_m`. A vector `b ∈ ℕⁿ` is a
//! *cover of order `k`* when
//!
//! ```text
//! Σᵢ b(i)·m(i)  ≥  k·ω_m        for every maximal facet m,
//! ```
//!
//! and the *cover order* of `b` is the largest such `k` (possibly ∞, e.g.
//! when `b` is positive on a coordinate that is ∞ in every facet). All
//! arithmetic happens in ℕ ∪ {∞} with the conventions `0·∞ = 0`,
//! `x·∞ = ∞` for `x ≥ 1`, and `∞ + x = ∞`; see [`extnat`].
//!
//! The *vertex cover algebra* of the weighted complex is the graded algebra
//! whose degree-`k` piece is spanned by the monomials `x^b t^k` with `b` a
//! cover of order `≥ k`. Cover orders are superadditive, so this really is
//! an algebra: the product of covers of orders `j` and `k` is a cover of
//! order `≥ j + k`.
//!
//! # What the crate computes
//!
//! * [`complex`] — facets, cover vectors, the componentwise partial order,
//!   antichain normalization, membership in the complex and its ideal.
//! * [`covers`] — cover orders, a finite search box containing every
//!   minimal cover of a given order, minimal-cover enumeration by a pruned
//!   search, and an independent brute-force oracle used for checking it.
//! * [`algebra`] — graded generator tables: which minimal covers are new
//!   generators in their degree and which decompose as products from lower
//!   degrees, with checkable decomposition certificates.
//! * [`structure`] — for a single maximal facet: classification of
//!   coordinates into zero / positive / unbounded, the structural
//!   decomposition of the algebra, a degree bound after which no new
//!   generators appear (when every coordinate is bounded), explicit
//!   high-degree factorizations, and a counting identity checked by two
//!   independent tallies.
//! * [`instance`] — a small text format for instances, used by the `vca`
//!   command-line tool.
//!
//! Everything is exact: inputs are machine naturals, arithmetic is checked,
//! and enumeration results are returned in a deterministic order (facet
//! lists ascending lexicographically, cover sets descending, so that the
//! leading cover prints first).
//!
//! # A short tour
//!
//! ```
//! use cover_algebra::{parse_instance, CoverVector, ExtNat};
//!
//! # fn main() -> Result<(), cover_algebra::Error> {
//! // Two maximal facets: (0, ∞) and (2, 0), both of weight 1.
//! let w = parse_instance("0 inf : 1\n2 0 : 1\n")?;
//!
//! // (1, 1) has weighted sums ∞ and 2 against the two facets, so its
//! // cover order is 2.
//! let b = CoverVector::new(vec![1, 1]);
//! assert_eq!(w.cover_order(&b)?, ExtNat::Finite(2));
//!
//! // The unique minimal cover of order 3 is (2, 1).
//! let covers = w.minimal_covers(3);
//! assert_eq!(covers.covers(), &[CoverVector::new(vec![2, 1])]);
//!
//! // This family never stops producing new generators: the table of
//! // minimal covers up to degree 5 has a new generator in every degree.
//! let report = w.algebra_generators(5);
//! assert_eq!(report.max_new_generator_degree(), Some(5));
//! assert_eq!(report.certified_bound(), None);
//! # Ok(())
//! # }
//! ```
//!
//! The `examples/` directory exercises each capability in a runnable form,
//! and the `vca` binary exposes the same operations on instance files.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod covers;
pub mod error;
pub mod extnat;
pub mod instance;
pub mod report;
pub mod structure;
pub mod verify;

pub use algebra::{
    generation_bound, split_high_degree, split_high_degree_with_rule, AlgebraMonomial,
    DecompositionCertificate, GenerationReport, GeneratorTable, SplitAttempt, SplitRule,
};
pub use complex::{maximal_elements, CoverVector, Facet, Multicomplex, WeightedMulticomplex};
pub use covers::{box_points, vectors_up_to_degree, MinimalCoverSet};
pub use error::{Error, Result};
pub use extnat::ExtNat;
pub use instance::{format_instance, parse_instance};
pub use structure::{
    classify_coordinates, decompose_single_facet, graded_count_direct,
    graded_count_via_decomposition, CoordinateClassification, DecompositionKind,
    SingleFacetDecomposition,
};
pub use verify::{run_verification, SuiteResult, SuiteStatus, VerifyReport};
