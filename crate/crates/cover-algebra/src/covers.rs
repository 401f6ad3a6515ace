//! Vertex covers of weighted multicomplexes.
//!
//! A vector `b ∈ ℕⁿ` is a *cover of order `k`* of a weighted multicomplex
//! when `Σᵢ b(i)·m(i) ≥ k·ω_m` holds for every maximal facet `m` with weight
//! `ω_m`, the sum taken in the extended naturals (so `0·∞ = 0`: a coordinate
//! absent from `b` contributes nothing even where the facet is unbounded).
//! The *cover order* of `b` is the largest such `k`, possibly `∞`.
//!
//! Orders are monotone (enlarging `b` never lowers the order) and
//! superadditive (`order(b₁+b₂) ≥ order(b₁)+order(b₂)`), so the covers of
//! order `≥ k` form an upward-closed set whose finitely many minimal elements
//! this module enumerates. Two independent routes are provided on purpose:
//!
//! * [`WeightedMulticomplex::minimal_covers`] — depth-first search inside the
//!   a-priori box bound with feasibility and dominance pruning;
//! * [`WeightedMulticomplex::minimal_covers_oracle`] — exhaustive scan of the
//!   full box followed by a minimality filter.
//!
//! The oracle is kept naive so it can serve as differential-testing ground
//! truth for the search; do not "optimize" them into sharing code.

use crate::complex::{CoverVector, Facet, WeightedMulticomplex};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// `Σᵢ b(i)·m(i)` over the extended naturals, without a dimension check.
fn weighted_sum_entries(facet: &Facet, b: &[u64]) -> ExtNat {
    facet
        .entries()
        .iter()
        .zip(b)
        .map(|(&m, &bi)| ExtNat::Finite(bi) * m)
        .sum()
}

impl Facet {
    /// The weighted incidence sum `Σᵢ b(i)·m(i)` of a cover vector against
    /// this facet. Infinite exactly when some `i` has `m(i) = ∞` and
    /// `b(i) ≥ 1`.
    pub fn weighted_sum(&self, b: &CoverVector) -> Result<ExtNat> {
        if b.len() != self.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                found: b.len(),
            });
        }
        Ok(weighted_sum_entries(self, b.entries()))
    }
}

/// The minimal covers of one degree: a componentwise antichain listed in
/// descending lexicographic order (the monomial-display convention, `x₁`
/// most significant).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalCoverSet {
    degree: u64,
    covers: Vec<CoverVector>,
}

impl MinimalCoverSet {
    /// The order `k` the covers were computed for.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The minimal covers, descending lexicographically.
    pub fn covers(&self) -> &[CoverVector] {
        &self.covers
    }

    /// The number of minimal covers.
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    /// Whether there are no covers of this order. For `k ≥ 1` this happens
    /// exactly when some maximal facet is identically zero.
    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Whether `b` is one of the minimal covers.
    pub fn contains(&self, b: &CoverVector) -> bool {
        self.covers.contains(b)
    }

    /// Iterates the covers in their stored (descending) order.
    pub fn iter(&self) -> std::slice::Iter<'_, CoverVector> {
        self.covers.iter()
    }
}

impl WeightedMulticomplex {
    fn order_of_entries(&self, b: &[u64]) -> ExtNat {
        self.pairs()
            .map(|(m, w)| weighted_sum_entries(m, b).div_floor(w))
            .min()
            .expect("a multicomplex always has at least one maximal facet")
    }

    /// The largest `k` such that `b` is a cover of order `k`; `∞` when every
    /// facet constraint is met with an infinite sum.
    pub fn cover_order(&self, b: &CoverVector) -> Result<ExtNat> {
        if b.len() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                found: b.len(),
            });
        }
        Ok(self.order_of_entries(b.entries()))
    }

    /// Whether `b` is a cover of order `k`.
    pub fn is_cover(&self, b: &CoverVector, k: u64) -> Result<bool> {
        Ok(self.cover_order(b)? >= ExtNat::Finite(k))
    }

    /// A componentwise upper bound `B` such that every *minimal* cover of
    /// order `k ≥ 1` satisfies `b ≤ B`.
    ///
    /// Coordinate `i` only needs to be large enough to satisfy, on its own,
    /// every facet that sees it: `⌈k·ω_m / m(i)⌉` for finite `m(i) ≥ 1`, and
    /// `1` where `m(i) = ∞`. Facets with `m(i) = 0` ignore the coordinate and
    /// contribute nothing. A cover exceeding `B` somewhere can be clamped to
    /// `B` there without breaking any facet inequality, so it is not minimal.
    pub fn cover_box_bound(&self, k: u64) -> Result<CoverVector> {
        if k == 0 {
            return Err(Error::DegenerateDegree);
        }
        let n = self.dimension();
        let mut bound = vec![0u64; n];
        for (m, w) in self.pairs() {
            let target = k as u128 * w as u128;
            for (i, slot) in bound.iter_mut().enumerate() {
                let need = match m.entry(i) {
                    ExtNat::Finite(0) => continue,
                    ExtNat::Infinity => 1,
                    ExtNat::Finite(v) => {
                        u64::try_from(target.div_ceil(v as u128)).expect("cover box bound overflow")
                    }
                };
                *slot = (*slot).max(need);
            }
        }
        Ok(CoverVector::new(bound))
    }

    /// The antichain of componentwise-minimal covers of order `k`, listed in
    /// descending lexicographic order. For `k = 0` this is the zero vector;
    /// for `k ≥ 1` the set is empty exactly when no cover of order `k`
    /// exists (a single all-zero maximal facet).
    ///
    /// Depth-first search over the box `[0, B]`, assigning coordinates left
    /// to right in increasing value, which visits candidates in ascending
    /// lexicographic order. Because componentwise dominance implies
    /// lexicographic precedence, every minimal cover below a candidate has
    /// already been recorded when the candidate is reached, so a candidate is
    /// kept iff it is a cover dominating no recorded one. Two prunes keep the
    /// tree small; neither can discard a minimal cover:
    ///
    /// * *dominance* — if the partial assignment (remaining coordinates zero)
    ///   already dominates a recorded cover, so does every completion at this
    ///   or any larger value of the current coordinate;
    /// * *feasibility* — if even the greatest completion inside the box fails
    ///   to reach order `k`, no completion is a cover.
    pub fn minimal_covers(&self, k: u64) -> MinimalCoverSet {
        let n = self.dimension();
        if k == 0 {
            return MinimalCoverSet {
                degree: 0,
                covers: vec![CoverVector::zeros(n)],
            };
        }
        let bound = self
            .cover_box_bound(k)
            .expect("degree is positive by the branch above");
        let mut current = vec![0u64; n];
        let mut found: Vec<CoverVector> = Vec::new();
        self.minimal_cover_search(k, bound.entries(), &mut current, 0, &mut found);
        found.sort_by(|a, b| b.lex_cmp(a));
        MinimalCoverSet {
            degree: k,
            covers: found,
        }
    }

    fn minimal_cover_search(
        &self,
        k: u64,
        bound: &[u64],
        current: &mut [u64],
        depth: usize,
        found: &mut Vec<CoverVector>,
    ) {
        let n = bound.len();
        for value in 0..=bound[depth] {
            current[depth] = value;
            if found
                .iter()
                .any(|g| prefix_dominates(current, depth, g.entries()))
            {
                // Raising this coordinate further keeps the domination.
                break;
            }
            if depth + 1 == n {
                if self.order_of_entries(current) >= ExtNat::Finite(k) {
                    found.push(CoverVector::new(current.to_vec()));
                }
            } else if self.best_completion_reaches(current, depth, bound, k) {
                self.minimal_cover_search(k, bound, current, depth + 1, found);
            }
        }
        current[depth] = 0;
    }

    /// Order reached by the current prefix with all later coordinates at
    /// their box maximum.
    fn best_completion_reaches(
        &self,
        current: &[u64],
        depth: usize,
        bound: &[u64],
        k: u64,
    ) -> bool {
        let mut best = current.to_vec();
        best[depth + 1..].copy_from_slice(&bound[depth + 1..]);
        self.order_of_entries(&best) >= ExtNat::Finite(k)
    }

    /// Ground-truth enumeration of the minimal covers of order `k`: scan
    /// every vector in the box `[0, B]`, keep the covers, and filter them to
    /// minimal elements by total degree (a dominating vector has strictly
    /// larger degree, so scanning degrees in increasing order makes the
    /// filter a single pass). Deliberately naive; kept as the differential
    /// oracle for [`Self::minimal_covers`].
    pub fn minimal_covers_oracle(&self, k: u64) -> MinimalCoverSet {
        let n = self.dimension();
        if k == 0 {
            return MinimalCoverSet {
                degree: 0,
                covers: vec![CoverVector::zeros(n)],
            };
        }
        let bound = self
            .cover_box_bound(k)
            .expect("degree is positive by the branch above");
        let mut covers: Vec<CoverVector> = box_points(&bound)
            .filter(|b| self.order_of_entries(b.entries()) >= ExtNat::Finite(k))
            .collect();
        covers.sort_by_key(CoverVector::total_degree);
        let mut minimal: Vec<CoverVector> = Vec::new();
        'candidates: for b in covers {
            for g in &minimal {
                if g.leq(&b).expect("box points share one dimension") {
                    continue 'candidates;
                }
            }
            minimal.push(b);
        }
        minimal.sort_by(|a, b| b.lex_cmp(a));
        MinimalCoverSet {
            degree: k,
            covers: minimal,
        }
    }
}

/// Does `g`, a full vector, sit componentwise below the partial assignment
/// `current[..=depth]` padded with zeros?
fn prefix_dominates(current: &[u64], depth: usize, g: &[u64]) -> bool {
    g[..=depth]
        .iter()
        .zip(&current[..=depth])
        .all(|(gi, ci)| gi <= ci)
        && g[depth + 1..].iter().all(|&gi| gi == 0)
}

/// All vectors of the box `[0, bound]` in ascending lexicographic order.
pub fn box_points(bound: &CoverVector) -> impl Iterator<Item = CoverVector> + '_ {
    let n = bound.len();
    let mut next: Option<Vec<u64>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut following = current.clone();
        // Odometer increment, rightmost coordinate fastest.
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if following[i] < bound.entry(i) {
                following[i] += 1;
                following[i + 1..].fill(0);
                next = Some(following);
                break;
            }
        }
        Some(CoverVector::new(current))
    })
}

/// All vectors of `ℕⁿ` with total degree at most `max_total`, in ascending
/// lexicographic order.
pub fn vectors_up_to_degree(dimension: usize, max_total: u64) -> Vec<CoverVector> {
    let mut out = Vec::new();
    let mut current = vec![0u64; dimension];
    fill_up_to_degree(dimension, max_total, 0, &mut current, &mut out);
    out
}

fn fill_up_to_degree(
    dimension: usize,
    remaining: u64,
    depth: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<CoverVector>,
) {
    if depth == dimension {
        out.push(CoverVector::new(current.clone()));
        return;
    }
    for v in 0..=remaining {
        current[depth] = v;
        fill_up_to_degree(dimension, remaining - v, depth + 1, current, out);
    }
    current[depth] = 0;
}
