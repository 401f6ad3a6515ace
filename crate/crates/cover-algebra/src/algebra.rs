//! The graded algebra spanned by covers, at the monomial level.
//!
//! Writing `A_k` for the span of monomials `x^b t^k` with `b` a cover of
//! order `k`, the direct sum `A = ⊕ A_k` is closed under multiplication
//! because cover orders are superadditive. Degree 0 is the whole polynomial
//! ring; each `A_k` is generated as a module by the minimal covers of order
//! `k`. This module classifies those module generators by *algebra* degree:
//! a monomial `x^b t^k` either factors as a product of two lower-degree
//! algebra elements (witnessed by a [`DecompositionCertificate`]) or is a new
//! algebra generator at degree `k`.
//!
//! For a single maximal facet with finite positive entries there is a closed
//! generation bound ([`generation_bound`]): no new generator appears beyond
//! degree `(Σᵢ a(i) + 1)·ω − 1`, witnessed constructively by
//! [`split_high_degree`]. The split assigns the right factor the degree
//! `Σ_{i∈I} a(i)` carried by the coordinates `I = {i : b(i) > ω}` it covers;
//! assigning it `|I|` instead ([`SplitRule::SupportCardinality`], available
//! for comparison) overstates the left degree whenever some `a(i) ≥ 2` on
//! `I` and then fails re-verification.

use std::fmt;

use crate::complex::{CoverVector, Facet, WeightedMulticomplex};
use crate::covers::MinimalCoverSet;
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::structure::classify_coordinates;

/// A monomial `x^b t^k` of the graded algebra: exponent vector plus
/// `t`-degree. Valid when `b` has cover order at least `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraMonomial {
    /// The exponent vector `b` of the `x`-part.
    pub exponents: CoverVector,
    /// The `t`-degree `k`.
    pub degree: u64,
}

impl AlgebraMonomial {
    /// Pairs an exponent vector with a `t`-degree (not validated here).
    pub fn new(exponents: CoverVector, degree: u64) -> Self {
        AlgebraMonomial { exponents, degree }
    }

    /// Whether the exponent vector really reaches the stated degree.
    pub fn is_valid(&self, complex: &WeightedMulticomplex) -> Result<bool> {
        Ok(complex.cover_order(&self.exponents)? >= ExtNat::Finite(self.degree))
    }
}

impl fmt::Display for AlgebraMonomial {
    /// Algebraic rendering: exponents (2,1) at degree 3 print as
    /// `x1^2 x2 t^3`; a zero exponent vector prints as `t^k` alone.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.entries().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
            first = false;
        }
        if self.degree > 0 {
            if !first {
                write!(f, " ")?;
            }
            if self.degree == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{}", self.degree)?;
            }
            first = false;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A two-factor witness that a monomial is a product of lower-degree algebra
/// elements (up to a monomial of the base ring): degrees add up to the
/// target's, exponents add up to at most the target's, each factor valid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionCertificate {
    /// The higher-degree factor.
    pub left: AlgebraMonomial,
    /// The factor drawn from a lower-degree minimal cover.
    pub right: AlgebraMonomial,
}

impl DecompositionCertificate {
    /// Re-derives every certificate invariant from scratch against `target`.
    pub fn verify(&self, complex: &WeightedMulticomplex, target: &AlgebraMonomial) -> Result<bool> {
        if self.left.degree == 0 || self.right.degree == 0 {
            return Ok(false);
        }
        if self.left.degree + self.right.degree != target.degree {
            return Ok(false);
        }
        let combined = self.left.exponents.add(&self.right.exponents)?;
        Ok(combined.leq(&target.exponents)?
            && self.left.is_valid(complex)?
            && self.right.is_valid(complex)?)
    }
}

impl fmt::Display for DecompositionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * ({})", self.left, self.right)
    }
}

/// Minimal covers of every degree `1..=horizon`, kept together with the
/// complex they belong to so monomials can be classified against them.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    complex: WeightedMulticomplex,
    per_degree: Vec<MinimalCoverSet>,
}

impl WeightedMulticomplex {
    /// Tabulates the minimal covers of each degree `1..=horizon` — the
    /// module generators of each graded piece.
    pub fn generator_table(&self, horizon: u64) -> GeneratorTable {
        let per_degree = (1..=horizon).map(|k| self.minimal_covers(k)).collect();
        GeneratorTable {
            complex: self.clone(),
            per_degree,
        }
    }
}

impl GeneratorTable {
    /// The largest degree the table covers.
    pub fn horizon(&self) -> u64 {
        self.per_degree.len() as u64
    }

    /// The weighted complex the table was computed for.
    pub fn complex(&self) -> &WeightedMulticomplex {
        &self.complex
    }

    /// The minimal covers of one degree, for `1 ≤ degree ≤ horizon`.
    pub fn degree(&self, degree: u64) -> Option<&MinimalCoverSet> {
        if degree == 0 {
            return None;
        }
        self.per_degree.get(degree as usize - 1)
    }

    /// Searches for a two-factor decomposition of `m`.
    ///
    /// It is enough to try, as right factor, the *minimal* covers `g` of each
    /// degree `k″ < m.degree` with `g ≤ b`: membership of the right factor in
    /// its graded piece is upward closed, so any decomposition can be pushed
    /// down onto a minimal one. Degrees are scanned in increasing order and
    /// candidates within a degree in ascending lexicographic order, so the
    /// returned certificate is unique and reproducible. `Ok(None)` means `m`
    /// is a new algebra generator.
    pub fn decompose(&self, m: &AlgebraMonomial) -> Result<Option<DecompositionCertificate>> {
        if m.degree == 0 {
            return Err(Error::DegenerateDegree);
        }
        let order = self.complex.cover_order(&m.exponents)?;
        if order < ExtNat::Finite(m.degree) {
            return Err(Error::NotACover {
                order: order.to_string(),
                degree: m.degree,
            });
        }
        if self.horizon() + 1 < m.degree {
            return Err(Error::HorizonTooSmall {
                horizon: self.horizon(),
                degree: m.degree,
            });
        }
        for right_degree in 1..m.degree {
            let set = self
                .degree(right_degree)
                .expect("table horizon checked above");
            // Stored descending; scan ascending so the lexicographically
            // smallest working right factor wins.
            for g in set.covers().iter().rev() {
                if !g.leq(&m.exponents)? {
                    continue;
                }
                let residual = m
                    .exponents
                    .checked_sub(g)
                    .expect("leq guarantees subtractability");
                let left_degree = m.degree - right_degree;
                if self.complex.cover_order(&residual)? >= ExtNat::Finite(left_degree) {
                    return Ok(Some(DecompositionCertificate {
                        left: AlgebraMonomial::new(residual, left_degree),
                        right: AlgebraMonomial::new(g.clone(), right_degree),
                    }));
                }
            }
        }
        Ok(None)
    }
}

/// The classification of every module generator up to a horizon: which are
/// new algebra generators and which decompose, plus an optional certified
/// finite-generation bound.
#[derive(Clone, Debug)]
pub struct GenerationReport {
    table: GeneratorTable,
    new_generators: Vec<AlgebraMonomial>,
    certificates: Vec<(AlgebraMonomial, DecompositionCertificate)>,
    certified_bound: Option<u64>,
}

impl GenerationReport {
    /// The largest degree the report covers.
    pub fn horizon(&self) -> u64 {
        self.table.horizon()
    }

    /// The underlying table of minimal covers per degree.
    pub fn table(&self) -> &GeneratorTable {
        &self.table
    }

    /// New algebra generators in (degree, descending-lex) order.
    pub fn new_generators(&self) -> &[AlgebraMonomial] {
        &self.new_generators
    }

    /// Certified decompositions of the remaining module generators, in the
    /// same order.
    pub fn certificates(&self) -> &[(AlgebraMonomial, DecompositionCertificate)] {
        &self.certificates
    }

    /// Looks up the certificate recorded for a decomposable monomial.
    pub fn certificate_for(&self, m: &AlgebraMonomial) -> Option<&DecompositionCertificate> {
        self.certificates
            .iter()
            .find(|(target, _)| target == m)
            .map(|(_, cert)| cert)
    }

    /// When set, every algebra generator provably lives in degrees up to the
    /// bound: the complex has a single maximal facet with no unbounded
    /// coordinate and the horizon reaches the closed-form bound of its
    /// positive part.
    pub fn certified_bound(&self) -> Option<u64> {
        self.certified_bound
    }

    /// Largest degree at which a new generator was observed, if any.
    pub fn max_new_generator_degree(&self) -> Option<u64> {
        self.new_generators.iter().map(|m| m.degree).max()
    }

    /// The new generators of one particular degree, descending lex.
    pub fn new_generators_of_degree(&self, degree: u64) -> impl Iterator<Item = &AlgebraMonomial> {
        self.new_generators
            .iter()
            .filter(move |m| m.degree == degree)
    }
}

impl WeightedMulticomplex {
    /// Classifies every minimal cover of degree `1..=horizon` as a new
    /// algebra generator or a decomposable element with certificate.
    ///
    /// The certified bound is set only when finite generation is actually
    /// established: the complex must have a single maximal facet with no
    /// infinite entry (an unbounded coordinate `j` makes `x_j t^k` a new
    /// generator at every degree `k`, because `t ∉ A` under `0·∞ = 0`), and
    /// the horizon must reach the closed-form bound computed on the positive
    /// entries (zero entries never influence covers).
    pub fn algebra_generators(&self, horizon: u64) -> GenerationReport {
        let table = self.generator_table(horizon);
        let mut new_generators = Vec::new();
        let mut certificates = Vec::new();
        for degree in 1..=horizon {
            let set = table.degree(degree).expect("degree within horizon");
            for b in set.covers() {
                let m = AlgebraMonomial::new(b.clone(), degree);
                match table
                    .decompose(&m)
                    .expect("minimal covers are valid monomials within the horizon")
                {
                    Some(cert) => certificates.push((m, cert)),
                    None => new_generators.push(m),
                }
            }
        }
        let certified_bound = self.single_facet().and_then(|(facet, weight)| {
            let classes = classify_coordinates(facet);
            if !classes.infinite().is_empty() {
                return None;
            }
            let positive_sum: u64 = classes
                .positive()
                .iter()
                .map(|&i| facet.entry(i).finite().expect("classified positive"))
                .sum();
            let bound = (positive_sum + 1)
                .checked_mul(weight)
                .expect("generation bound overflow")
                - 1;
            (horizon >= bound).then_some(bound)
        });
        GenerationReport {
            table,
            new_generators,
            certificates,
            certified_bound,
        }
    }
}

/// The closed-form generation bound for a single maximal facet with finite
/// positive entries and weight `ω`: every algebra generator lives in degree
/// at most `(Σᵢ a(i) + 1)·ω − 1`.
pub fn generation_bound(facet: &Facet, weight: u64) -> Result<u64> {
    if weight == 0 {
        return Err(Error::Weight);
    }
    if !facet.is_finite_positive() {
        return Err(Error::FinitePositiveRequired);
    }
    let total: u64 = facet
        .entries()
        .iter()
        .map(|e| e.finite().expect("finite by the check above"))
        .try_fold(0u64, |acc, v| acc.checked_add(v))
        .expect("facet entry sum overflow");
    Ok((total + 1)
        .checked_mul(weight)
        .expect("generation bound overflow")
        - 1)
}

/// How the high-degree split distributes the target degree over its factors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SplitRule {
    /// Right factor takes the weighted support `Σ_{i∈I} a(i)` of the
    /// coordinates `I = {i : b(i) > ω}` it covers (capped at `degree − 1`).
    /// Always yields two valid factors above the split threshold.
    WeightedSupport,
    /// Right factor takes only the cardinality `|I|`. Kept for comparison:
    /// whenever some `a(i) ≥ 2` on `I`, the left factor is assigned a degree
    /// its cover order cannot reach.
    SupportCardinality,
}

impl SplitRule {
    /// Stable kebab-case name, used in reports.
    pub fn label(self) -> &'static str {
        match self {
            SplitRule::WeightedSupport => "weighted-support",
            SplitRule::SupportCardinality => "support-cardinality",
        }
    }
}

/// The outcome of a split attempt, with both factors re-measured so an
/// invalid assignment is observable rather than silently trusted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitAttempt {
    /// The factor keeping everything outside the split support.
    pub left: AlgebraMonomial,
    /// The factor taking `ω` on each coordinate of the split support.
    pub right: AlgebraMonomial,
    /// The actual cover order of the left factor's exponents.
    pub left_order: ExtNat,
    /// The actual cover order of the right factor's exponents.
    pub right_order: ExtNat,
}

impl SplitAttempt {
    /// Both factors reach their assigned degrees.
    pub fn is_valid(&self) -> bool {
        self.left_order >= ExtNat::Finite(self.left.degree)
            && self.right_order >= ExtNat::Finite(self.right.degree)
    }
}

/// Splits a cover `b` of degree `k ≥ (Σᵢ a(i) + 1)·ω` over the single facet
/// `a` into two factors under the chosen degree rule.
///
/// Above the threshold the set `I = {i : b(i) > ω}` is nonempty (otherwise
/// the weighted sum of `b` could not reach `k·ω`). The right factor takes
/// `ω` on each coordinate of `I` and the left factor keeps the rest, so the
/// exponents add up to `b` exactly; only the degree assignment differs
/// between the rules.
pub fn split_high_degree_with_rule(
    facet: &Facet,
    weight: u64,
    cover: &CoverVector,
    degree: u64,
    rule: SplitRule,
) -> Result<SplitAttempt> {
    if weight == 0 {
        return Err(Error::Weight);
    }
    if !facet.is_finite_positive() {
        return Err(Error::FinitePositiveRequired);
    }
    if cover.len() != facet.len() {
        return Err(Error::Dimension {
            expected: facet.len(),
            found: cover.len(),
        });
    }
    let threshold = generation_bound(facet, weight)? + 1;
    if degree < threshold {
        return Err(Error::SplitDegreeTooLow { degree, threshold });
    }
    let complex = WeightedMulticomplex::principal(facet.clone(), weight)?;
    let order = complex.cover_order(cover)?;
    if order < ExtNat::Finite(degree) {
        return Err(Error::NotACover {
            order: order.to_string(),
            degree,
        });
    }
    let support: Vec<usize> = (0..cover.len())
        .filter(|&i| cover.entry(i) > weight)
        .collect();
    assert!(
        !support.is_empty(),
        "a cover of degree at least (Σa+1)·ω must exceed ω on some coordinate"
    );
    let mut right_entries = vec![0u64; cover.len()];
    for &i in &support {
        right_entries[i] = weight;
    }
    let right_exponents = CoverVector::new(right_entries);
    let left_exponents = cover
        .checked_sub(&right_exponents)
        .expect("support coordinates exceed the weight");
    let raw_right_degree: u64 = match rule {
        SplitRule::WeightedSupport => support
            .iter()
            .map(|&i| facet.entry(i).finite().expect("finite positive facet"))
            .sum(),
        SplitRule::SupportCardinality => support.len() as u64,
    };
    let right_degree = raw_right_degree.min(degree - 1);
    let left_degree = degree - right_degree;
    let left_order = complex.cover_order(&left_exponents)?;
    let right_order = complex.cover_order(&right_exponents)?;
    Ok(SplitAttempt {
        left: AlgebraMonomial::new(left_exponents, left_degree),
        right: AlgebraMonomial::new(right_exponents, right_degree),
        left_order,
        right_order,
    })
}

/// The default high-degree split: [`SplitRule::WeightedSupport`], which is
/// provably valid above the threshold. Returns `(left, right)` factors whose
/// degrees sum to `degree` and whose exponents sum to `cover`.
pub fn split_high_degree(
    facet: &Facet,
    weight: u64,
    cover: &CoverVector,
    degree: u64,
) -> Result<(AlgebraMonomial, AlgebraMonomial)> {
    let attempt =
        split_high_degree_with_rule(facet, weight, cover, degree, SplitRule::WeightedSupport)?;
    assert!(
        attempt.is_valid(),
        "weighted-support split produced an invalid factor for a legal input"
    );
    Ok((attempt.left, attempt.right))
}
