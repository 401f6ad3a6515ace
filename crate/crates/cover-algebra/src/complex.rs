//! Multicomplexes over the extended naturals and the vectors that cover them.
//!
//! A *multicomplex* `Γ ⊆ (ℕ∪{∞})ⁿ` is a downward-closed set of exponent
//! vectors, represented here by its finite antichain of maximal facets: a
//! point belongs to `Γ` exactly when it is componentwise below some maximal
//! facet. Monomials whose exponent vector falls *outside* `Γ` span a monomial
//! ideal in the ambient polynomial ring, so membership and ideal membership
//! are complementary queries.
//!
//! Two vector types keep the roles apart:
//!
//! * [`Facet`] — a point of the ambient space, entries in `ℕ∪{∞}`;
//! * [`CoverVector`] — a candidate vertex cover, entries always finite.
//!
//! Both are ordered componentwise ([`PartialOrd`] is the honest partial
//! order — incomparable pairs return `None`); deterministic output ordering
//! uses the explicit lexicographic comparators instead.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// A point of `(ℕ∪{∞})ⁿ`, used both for maximal facets and for membership
/// queries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Facet {
    entries: Vec<ExtNat>,
}

impl Facet {
    /// Wraps a list of extended naturals as a facet.
    pub fn new(entries: Vec<ExtNat>) -> Self {
        Facet { entries }
    }

    /// Builds a facet from plain naturals (no infinite entries).
    pub fn finite(entries: &[u64]) -> Self {
        Facet {
            entries: entries.iter().copied().map(ExtNat::Finite).collect(),
        }
    }

    /// The ambient dimension (number of entries).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the facet has no entries at all.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entries, in coordinate order.
    pub fn entries(&self) -> &[ExtNat] {
        &self.entries
    }

    /// The entry at 0-based coordinate `i`.
    pub fn entry(&self, i: usize) -> ExtNat {
        self.entries[i]
    }

    /// True when every entry is finite and at least 1.
    pub fn is_finite_positive(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e, ExtNat::Finite(v) if *v >= 1))
    }

    /// Sum of the entries, `∞` if any entry is infinite.
    pub fn total(&self) -> ExtNat {
        self.entries.iter().copied().sum()
    }

    /// The sub-facet obtained by keeping the listed coordinates, in order.
    pub fn restrict(&self, coords: &[usize]) -> Facet {
        Facet {
            entries: coords.iter().map(|&i| self.entries[i]).collect(),
        }
    }

    /// Componentwise `≤` against another facet of the same dimension.
    pub fn leq(&self, other: &Facet) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// Total lexicographic order (first differing coordinate decides,
    /// `∞` greatest). Used only for deterministic sorting of facet lists.
    pub fn lex_cmp(&self, other: &Facet) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

/// The componentwise partial order; incomparable facets return `None`.
impl PartialOrd for Facet {
    fn partial_cmp(&self, other: &Facet) -> Option<Ordering> {
        if self.len() != other.len() {
            return None;
        }
        let mut seen_less = false;
        let mut seen_greater = false;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            match a.cmp(b) {
                Ordering::Less => seen_less = true,
                Ordering::Greater => seen_greater = true,
                Ordering::Equal => {}
            }
            if seen_less && seen_greater {
                return None;
            }
        }
        Some(match (seen_less, seen_greater) {
            (false, false) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (true, true) => unreachable!(),
        })
    }
}

impl fmt::Display for Facet {
    /// Space-separated entries, `inf` for infinite ones: `"0 inf"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// A candidate vertex cover: a vector of plain naturals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoverVector {
    entries: Vec<u64>,
}

impl CoverVector {
    /// Wraps a list of naturals as a cover vector.
    pub fn new(entries: Vec<u64>) -> Self {
        CoverVector { entries }
    }

    /// The zero vector in the given dimension.
    pub fn zeros(dimension: usize) -> Self {
        CoverVector {
            entries: vec![0; dimension],
        }
    }

    /// `scale · e_i` in the given dimension.
    pub fn scaled_unit(dimension: usize, i: usize, scale: u64) -> Self {
        let mut entries = vec![0; dimension];
        entries[i] = scale;
        CoverVector { entries }
    }

    /// The ambient dimension (number of entries).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the vector has no entries at all.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entries, in coordinate order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// The entry at 0-based coordinate `i`.
    pub fn entry(&self, i: usize) -> u64 {
        self.entries[i]
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Total degree `|b| = Σᵢ b(i)`.
    pub fn total_degree(&self) -> u64 {
        self.entries
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .expect("cover vector degree overflow")
    }

    /// Componentwise sum.
    pub fn add(&self, other: &CoverVector) -> Result<CoverVector> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(CoverVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.checked_add(*b).expect("cover vector sum overflow"))
                .collect(),
        })
    }

    /// Componentwise difference; `None` when `other` is not below `self`.
    pub fn checked_sub(&self, other: &CoverVector) -> Option<CoverVector> {
        if self.len() != other.len() {
            return None;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u64>>>()
            .map(CoverVector::new)
    }

    /// Componentwise `≤` against another vector of the same dimension.
    pub fn leq(&self, other: &CoverVector) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// Total lexicographic order, used for deterministic output sorting.
    pub fn lex_cmp(&self, other: &CoverVector) -> Ordering {
        self.entries.cmp(&other.entries)
    }

    /// The restriction of the vector to the listed coordinates, in order.
    pub fn restrict(&self, coords: &[usize]) -> CoverVector {
        CoverVector {
            entries: coords.iter().map(|&i| self.entries[i]).collect(),
        }
    }

    /// Lift to a point of the ambient space (all entries finite).
    pub fn to_facet(&self) -> Facet {
        Facet {
            entries: self.entries.iter().copied().map(ExtNat::Finite).collect(),
        }
    }
}

/// The componentwise partial order; incomparable vectors return `None`.
impl PartialOrd for CoverVector {
    fn partial_cmp(&self, other: &CoverVector) -> Option<Ordering> {
        if self.len() != other.len() {
            return None;
        }
        let mut seen_less = false;
        let mut seen_greater = false;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            match a.cmp(b) {
                Ordering::Less => seen_less = true,
                Ordering::Greater => seen_greater = true,
                Ordering::Equal => {}
            }
            if seen_less && seen_greater {
                return None;
            }
        }
        Some(match (seen_less, seen_greater) {
            (false, false) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (true, true) => unreachable!(),
        })
    }
}

impl fmt::Display for CoverVector {
    /// Space-separated entries: `"2 0"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Keeps only the maximal elements of a facet list and sorts them
/// lexicographically (so `∞`-heavy facets land at the end).
///
/// Duplicates collapse to a single copy. Errors on an empty input: a
/// multicomplex must have at least one maximal facet.
pub fn maximal_elements(candidates: &[Facet]) -> Result<Vec<Facet>> {
    if candidates.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let expected = candidates[0].len();
    for c in candidates {
        if c.len() != expected {
            return Err(Error::Dimension {
                expected,
                found: c.len(),
            });
        }
    }
    let mut kept: Vec<Facet> = Vec::new();
    for c in candidates {
        if kept.contains(c) {
            continue;
        }
        // Strictly dominated candidates are dropped; candidates that
        // strictly dominate previously kept facets evict them.
        if candidates
            .iter()
            .any(|d| c.leq(d).unwrap() && d.leq(c).map(|back| !back).unwrap())
        {
            continue;
        }
        kept.push(c.clone());
    }
    kept.sort_by(Facet::lex_cmp);
    Ok(kept)
}

/// A multicomplex, stored as its antichain of maximal facets.
///
/// Invariants enforced at construction: at least one facet, all facets of the
/// same positive dimension, no facet componentwise below another, facets
/// sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multicomplex {
    dimension: usize,
    facets: Vec<Facet>,
}

impl Multicomplex {
    /// Builds a multicomplex from a list that must already be an antichain.
    ///
    /// Dominated or duplicate rows are rejected rather than silently removed:
    /// with weights attached downstream, a non-maximal row is meaningless and
    /// more likely an input mistake than an intentional shorthand.
    pub fn new(facets: Vec<Facet>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let dimension = facets[0].len();
        if dimension == 0 {
            return Err(Error::Dimension {
                expected: 1,
                found: 0,
            });
        }
        for f in &facets {
            if f.len() != dimension {
                return Err(Error::Dimension {
                    expected: dimension,
                    found: f.len(),
                });
            }
        }
        for (i, f) in facets.iter().enumerate() {
            for (j, g) in facets.iter().enumerate() {
                if i != j && f.leq(g)? {
                    return Err(Error::Antichain {
                        dominated: f.to_string(),
                        dominating: g.to_string(),
                    });
                }
            }
        }
        let mut facets = facets;
        facets.sort_by(Facet::lex_cmp);
        Ok(Multicomplex { dimension, facets })
    }

    /// Builds a multicomplex from an arbitrary generating list by keeping
    /// only the maximal facets.
    pub fn from_candidates(candidates: &[Facet]) -> Result<Self> {
        let facets = maximal_elements(candidates)?;
        let dimension = facets[0].len();
        if dimension == 0 {
            return Err(Error::Dimension {
                expected: 1,
                found: 0,
            });
        }
        Ok(Multicomplex { dimension, facets })
    }

    /// The smallest multicomplex containing the given point: the principal
    /// downset `Γ(a)`.
    pub fn principal(facet: Facet) -> Result<Self> {
        Multicomplex::new(vec![facet])
    }

    /// The ambient dimension shared by all facets.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The maximal facets, ascending lexicographically.
    pub fn maximal_facets(&self) -> &[Facet] {
        &self.facets
    }

    /// True when the complex has exactly one maximal facet.
    pub fn is_single_facet(&self) -> bool {
        self.facets.len() == 1
    }

    /// Membership: `a ∈ Γ` iff `a` is componentwise below some maximal facet.
    pub fn contains(&self, point: &Facet) -> Result<bool> {
        if point.len() != self.dimension {
            return Err(Error::Dimension {
                expected: self.dimension,
                found: point.len(),
            });
        }
        for f in &self.facets {
            if point.leq(f)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Ideal membership: the monomial with exponent vector `a` lies in the
    /// ideal attached to `Γ` iff `a ∉ Γ`.
    pub fn in_ideal(&self, exponents: &CoverVector) -> Result<bool> {
        Ok(!self.contains(&exponents.to_facet())?)
    }
}

impl fmt::Display for Multicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for facet in &self.facets {
            if !first {
                writeln!(f)?;
            }
            write!(f, "{facet}")?;
            first = false;
        }
        Ok(())
    }
}

/// A multicomplex with a positive integer weight on each maximal facet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedMulticomplex {
    complex: Multicomplex,
    // Parallel to `complex.maximal_facets()`.
    weights: Vec<u64>,
}

impl WeightedMulticomplex {
    /// Builds from `(facet, weight)` pairs; the facets must already form an
    /// antichain and every weight must be positive.
    pub fn from_pairs(pairs: Vec<(Facet, u64)>) -> Result<Self> {
        if pairs.iter().any(|(_, w)| *w == 0) {
            return Err(Error::Weight);
        }
        let mut pairs = pairs;
        pairs.sort_by(|(a, _), (b, _)| a.lex_cmp(b));
        let facets: Vec<Facet> = pairs.iter().map(|(f, _)| f.clone()).collect();
        let weights: Vec<u64> = pairs.iter().map(|(_, w)| *w).collect();
        let complex = Multicomplex::new(facets)?;
        Ok(WeightedMulticomplex { complex, weights })
    }

    /// The canonical weighting: every maximal facet gets weight 1.
    pub fn canonical(complex: Multicomplex) -> Self {
        let weights = vec![1; complex.maximal_facets().len()];
        WeightedMulticomplex { complex, weights }
    }

    /// The weighted principal downset `(Γ(a), ω)`.
    pub fn principal(facet: Facet, weight: u64) -> Result<Self> {
        WeightedMulticomplex::from_pairs(vec![(facet, weight)])
    }

    /// The underlying multicomplex.
    pub fn complex(&self) -> &Multicomplex {
        &self.complex
    }

    /// The ambient dimension shared by all facets.
    pub fn dimension(&self) -> usize {
        self.complex.dimension()
    }

    /// Facet weights, parallel to [`Multicomplex::maximal_facets`].
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Iterates `(maximal facet, weight)` pairs in the canonical facet order.
    pub fn pairs(&self) -> impl Iterator<Item = (&Facet, u64)> {
        self.complex
            .maximal_facets()
            .iter()
            .zip(self.weights.iter().copied())
    }

    /// The single maximal facet and its weight, if the complex has one facet.
    pub fn single_facet(&self) -> Option<(&Facet, u64)> {
        if self.complex.is_single_facet() {
            Some((&self.complex.maximal_facets()[0], self.weights[0]))
        } else {
            None
        }
    }
}
