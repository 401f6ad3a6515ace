//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when building complexes, evaluating covers,
/// or reading instance files.
///
/// Variants starting with `Parse` carry the 1-based line number of the
/// offending row in an instance file; the remaining variants are raised by
/// the library API itself.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two vectors that must live in the same ambient dimension do not.
    #[error("dimension mismatch: expected {expected} entries, found {found}")]
    Dimension {
        /// The required number of entries.
        expected: usize,
        /// The number of entries actually supplied.
        found: usize,
    },

    /// A multicomplex needs at least one maximal facet.
    #[error("a multicomplex needs at least one maximal facet")]
    EmptyComplex,

    /// Facet weights must be positive integers.
    #[error("facet weights must be positive integers")]
    Weight,

    /// A facet list contains a dominated or duplicate row.
    #[error("facet list is not an antichain: {dominated} is covered by {dominating}")]
    Antichain {
        /// Display form of the facet that is dominated (or duplicated).
        dominated: String,
        /// Display form of the facet dominating it.
        dominating: String,
    },

    /// An operation that needs a positive degree was called with degree 0.
    #[error("degree must be at least 1")]
    DegenerateDegree,

    /// The requested degree is below the threshold where the high-degree
    /// split is guaranteed to exist.
    #[error("degree {degree} is below the split threshold {threshold}")]
    SplitDegreeTooLow {
        /// The degree that was requested.
        degree: u64,
        /// The smallest degree the split supports.
        threshold: u64,
    },

    /// A vector was passed as a cover of some order it does not reach.
    #[error("vector has cover order {order}, below the requested degree {degree}")]
    NotACover {
        /// Display form of the cover order the vector actually has.
        order: String,
        /// The order the caller claimed.
        degree: u64,
    },

    /// A generator table does not extend far enough for the requested query.
    #[error("generator table with horizon {horizon} cannot classify degree {degree}")]
    HorizonTooSmall {
        /// The horizon the table was built with.
        horizon: u64,
        /// The degree that was asked about.
        degree: u64,
    },

    /// The operation only applies to facets with finite positive entries.
    #[error("operation requires a facet with finite positive entries")]
    FinitePositiveRequired,

    /// The operation only applies to complexes with a single maximal facet.
    #[error("operation requires a single maximal facet")]
    SingleFacetRequired,

    /// An instance file contains a token that is neither a natural number
    /// nor `inf`.
    #[error("line {line}: unrecognized token {token:?}")]
    ParseSyntax {
        /// 1-based line number.
        line: usize,
        /// The offending token.
        token: String,
    },

    /// A facet row in an instance file has the wrong number of entries.
    #[error("line {line}: expected {expected} entries, found {found}")]
    ParseDimension {
        /// 1-based line number.
        line: usize,
        /// Entry count fixed by the first facet row.
        expected: usize,
        /// Entry count found on this row.
        found: usize,
    },

    /// A facet row in an instance file has a missing or non-positive weight.
    #[error("line {line}: facet weight must be a positive integer")]
    ParseWeight {
        /// 1-based line number.
        line: usize,
    },

    /// A facet row in an instance file is dominated by or duplicates another.
    #[error("line {line}: facet row breaks the antichain requirement ({detail})")]
    ParseAntichain {
        /// 1-based line number of the later of the two clashing rows.
        line: usize,
        /// Which rows clash and how.
        detail: String,
    },

    /// The instance file contains no facet rows at all.
    #[error("instance file contains no facet rows")]
    ParseEmpty,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
