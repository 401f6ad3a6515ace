//! Self-checking: internal consistency suites over one instance.
//!
//! Each suite checks a mathematical property that the rest of the crate
//! relies on, preferring an independent route over re-running the code
//! under test: the pruned minimal-cover search is compared against the
//! brute-force oracle, decomposition certificates are re-verified from
//! their definition, the single-facet counting identity is evaluated by
//! two tallies that share no logic, and high-degree splits are re-measured
//! factor by factor. A suite that does not apply to the instance (the
//! single-facet suites on a multi-facet instance, say) reports itself as
//! skipped rather than silently passing.

use crate::algebra::SplitRule;
use crate::complex::WeightedMulticomplex;
use crate::covers::vectors_up_to_degree;
use crate::error::Result;
use crate::extnat::ExtNat;
use crate::structure::{
    decompose_single_facet, graded_count_direct, graded_count_via_decomposition,
};

/// Outcome of one suite.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteStatus {
    /// Every check of the suite held.
    Passed,
    /// At least one check failed; the detail has a counterexample.
    Failed,
    /// The suite does not apply to this instance.
    Skipped,
}

impl SuiteStatus {
    /// Stable lower-case label (`pass` / `FAIL` / `skipped`).
    pub fn label(self) -> &'static str {
        match self {
            SuiteStatus::Passed => "pass",
            SuiteStatus::Failed => "FAIL",
            SuiteStatus::Skipped => "skipped",
        }
    }
}

/// One suite's name, outcome, and a human-readable note: what was covered,
/// or the first counterexample, or why the suite was skipped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteResult {
    /// Stable kebab-case suite name.
    pub name: &'static str,
    /// Outcome.
    pub status: SuiteStatus,
    /// Coverage note or counterexample.
    pub detail: String,
}

/// Results of every suite, in a fixed order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    suites: Vec<SuiteResult>,
}

impl VerifyReport {
    /// The per-suite results in execution order.
    pub fn suites(&self) -> &[SuiteResult] {
        &self.suites
    }

    /// True when no suite failed (skipped suites do not count as failures).
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(|s| s.status != SuiteStatus::Failed)
    }
}

/// Runs every suite against `w`. `horizon` bounds the orders `k` the cover
/// suites sweep; `max_degree` bounds the total degree `|b|` of the vectors
/// the pointwise suites sweep.
pub fn run_verification(
    w: &WeightedMulticomplex,
    horizon: u64,
    max_degree: u64,
) -> Result<VerifyReport> {
    let suites = vec![
        oracle_equivalence(w, horizon),
        cover_set_invariants(w, horizon)?,
        order_properties(w, max_degree)?,
        certificate_soundness(w, horizon)?,
        counting_identity(w, horizon, max_degree)?,
        split_soundness(w, horizon)?,
    ];
    Ok(VerifyReport { suites })
}

/// The pruned search and the exhaustive oracle must return identical sets.
fn oracle_equivalence(w: &WeightedMulticomplex, horizon: u64) -> SuiteResult {
    for k in 0..=horizon {
        let searched = w.minimal_covers(k);
        let oracle = w.minimal_covers_oracle(k);
        if searched != oracle {
            return SuiteResult {
                name: "oracle-equivalence",
                status: SuiteStatus::Failed,
                detail: format!(
                    "k = {k}: search found {} minimal covers, oracle found {}",
                    searched.len(),
                    oracle.len()
                ),
            };
        }
    }
    SuiteResult {
        name: "oracle-equivalence",
        status: SuiteStatus::Passed,
        detail: format!("search agrees with the exhaustive oracle for k = 0..={horizon}"),
    }
}

/// Each minimal-cover set must be a strictly descending antichain of covers
/// of the right order, locally minimal, and contained in the search box.
fn cover_set_invariants(w: &WeightedMulticomplex, horizon: u64) -> Result<SuiteResult> {
    let fail = |detail: String| SuiteResult {
        name: "cover-set-invariants",
        status: SuiteStatus::Failed,
        detail,
    };
    for k in 1..=horizon {
        let set = w.minimal_covers(k);
        let bound = w.cover_box_bound(k)?;
        let covers = set.covers();
        for pair in covers.windows(2) {
            if pair[0].lex_cmp(&pair[1]) != std::cmp::Ordering::Greater {
                return Ok(fail(format!("k = {k}: covers not in descending order")));
            }
        }
        for (i, b) in covers.iter().enumerate() {
            if w.cover_order(b)? < ExtNat::Finite(k) {
                return Ok(fail(format!("k = {k}: {b} is not a cover of order {k}")));
            }
            if !b.leq(&bound)? {
                return Ok(fail(format!("k = {k}: {b} escapes the box {bound}")));
            }
            for (j, g) in covers.iter().enumerate() {
                if i != j && b.partial_cmp(g).is_some() {
                    return Ok(fail(format!("k = {k}: {b} and {g} are comparable")));
                }
            }
            for i in 0..b.len() {
                if b.entry(i) == 0 {
                    continue;
                }
                let mut smaller = b.entries().to_vec();
                smaller[i] -= 1;
                let smaller = crate::complex::CoverVector::new(smaller);
                if w.cover_order(&smaller)? >= ExtNat::Finite(k) {
                    return Ok(fail(format!(
                        "k = {k}: {b} stays a cover after lowering coordinate {}",
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(SuiteResult {
        name: "cover-set-invariants",
        status: SuiteStatus::Passed,
        detail: format!(
            "descending antichains of locally minimal covers inside the box, k = 1..={horizon}"
        ),
    })
}

/// Cover orders must be superadditive and monotone.
fn order_properties(w: &WeightedMulticomplex, max_degree: u64) -> Result<SuiteResult> {
    let vectors = vectors_up_to_degree(w.dimension(), max_degree);
    for a in &vectors {
        let order_a = w.cover_order(a)?;
        for b in &vectors {
            let combined = w.cover_order(&a.add(b)?)?;
            if combined < order_a + w.cover_order(b)? {
                return Ok(SuiteResult {
                    name: "order-properties",
                    status: SuiteStatus::Failed,
                    detail: format!("superadditivity fails at a = {a}, b = {b}"),
                });
            }
        }
        for i in 0..a.len() {
            let mut bigger = a.entries().to_vec();
            bigger[i] += 1;
            let bigger = crate::complex::CoverVector::new(bigger);
            if w.cover_order(&bigger)? < order_a {
                return Ok(SuiteResult {
                    name: "order-properties",
                    status: SuiteStatus::Failed,
                    detail: format!("monotonicity fails from {a} to {bigger}"),
                });
            }
        }
    }
    Ok(SuiteResult {
        name: "order-properties",
        status: SuiteStatus::Passed,
        detail: format!(
            "superadditivity and monotonicity over |b| ≤ {max_degree} ({} vectors)",
            vectors.len()
        ),
    })
}

/// Every decomposition certificate in the generation report must re-verify,
/// and new generators must outnumber nothing — each minimal cover is one or
/// the other.
fn certificate_soundness(w: &WeightedMulticomplex, horizon: u64) -> Result<SuiteResult> {
    let report = w.algebra_generators(horizon);
    for (target, certificate) in report.certificates() {
        if !certificate.verify(w, target)? {
            return Ok(SuiteResult {
                name: "certificate-soundness",
                status: SuiteStatus::Failed,
                detail: format!("certificate for {target} does not verify"),
            });
        }
    }
    let classified = report.new_generators().len() + report.certificates().len();
    let tabulated: usize = (1..=horizon)
        .map(|k| report.table().degree(k).map_or(0, |set| set.len()))
        .sum();
    if classified != tabulated {
        return Ok(SuiteResult {
            name: "certificate-soundness",
            status: SuiteStatus::Failed,
            detail: format!("{tabulated} minimal covers but {classified} classifications"),
        });
    }
    Ok(SuiteResult {
        name: "certificate-soundness",
        status: SuiteStatus::Passed,
        detail: format!(
            "{} certificates re-verified, {} new generators, degrees 1..={horizon}",
            report.certificates().len(),
            report.new_generators().len()
        ),
    })
}

/// For a single maximal facet, the direct tally of graded-piece sizes must
/// agree with the tally derived from the structural decomposition.
fn counting_identity(
    w: &WeightedMulticomplex,
    horizon: u64,
    max_degree: u64,
) -> Result<SuiteResult> {
    let Some((facet, weight)) = w.single_facet() else {
        return Ok(SuiteResult {
            name: "counting-identity",
            status: SuiteStatus::Skipped,
            detail: "requires a single maximal facet".to_string(),
        });
    };
    let decomposition = decompose_single_facet(facet, weight)?;
    for k in 1..=horizon {
        for d in 0..=max_degree {
            let direct = graded_count_direct(w, k, d);
            let via = graded_count_via_decomposition(&decomposition, k, d);
            if direct != via {
                return Ok(SuiteResult {
                    name: "counting-identity",
                    status: SuiteStatus::Failed,
                    detail: format!(
                        "k = {k}, |b| ≤ {d}: direct count {direct}, decomposition count {via}"
                    ),
                });
            }
        }
    }
    Ok(SuiteResult {
        name: "counting-identity",
        status: SuiteStatus::Passed,
        detail: format!(
            "direct and decomposition tallies agree for k = 1..={horizon}, |b| ≤ {max_degree}"
        ),
    })
}

/// Above the generation bound, every minimal cover must split into two
/// valid factors whose exponents add back to it.
fn split_soundness(w: &WeightedMulticomplex, horizon: u64) -> Result<SuiteResult> {
    let Some((facet, weight)) = w.single_facet() else {
        return Ok(SuiteResult {
            name: "split-soundness",
            status: SuiteStatus::Skipped,
            detail: "requires a single maximal facet".to_string(),
        });
    };
    if !facet.is_finite_positive() {
        return Ok(SuiteResult {
            name: "split-soundness",
            status: SuiteStatus::Skipped,
            detail: "requires a facet with finite positive entries".to_string(),
        });
    }
    let bound = crate::algebra::generation_bound(facet, weight)?;
    if horizon <= bound {
        return Ok(SuiteResult {
            name: "split-soundness",
            status: SuiteStatus::Skipped,
            detail: format!("horizon {horizon} does not exceed the generation bound {bound}"),
        });
    }
    for degree in bound + 1..=horizon {
        for cover in w.minimal_covers(degree).iter() {
            let attempt = crate::algebra::split_high_degree_with_rule(
                facet,
                weight,
                cover,
                degree,
                SplitRule::WeightedSupport,
            )?;
            let recombined = attempt.left.exponents.add(&attempt.right.exponents)?;
            if !attempt.is_valid()
                || recombined != *cover
                || attempt.left.degree + attempt.right.degree != degree
            {
                return Ok(SuiteResult {
                    name: "split-soundness",
                    status: SuiteStatus::Failed,
                    detail: format!("degree {degree}: split of {cover} does not verify"),
                });
            }
        }
    }
    Ok(SuiteResult {
        name: "split-soundness",
        status: SuiteStatus::Passed,
        detail: format!("splits verified for degrees {}..={horizon}", bound + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Facet;
    use crate::extnat::ExtNat::{Finite, Infinity};

    fn verify(w: &WeightedMulticomplex) -> VerifyReport {
        run_verification(w, 4, 4).unwrap()
    }

    fn status_of(report: &VerifyReport, name: &str) -> SuiteStatus {
        report
            .suites()
            .iter()
            .find(|s| s.name == name)
            .unwrap_or_else(|| panic!("no suite named {name}"))
            .status
    }

    #[test]
    fn all_suites_pass_on_a_bounded_single_facet() {
        let w = WeightedMulticomplex::principal(Facet::finite(&[2, 1]), 1).unwrap();
        let report = verify(&w);
        assert!(report.all_passed());
        for suite in report.suites() {
            assert_eq!(suite.status, SuiteStatus::Passed, "{}", suite.name);
        }
    }

    #[test]
    fn single_facet_suites_are_skipped_on_multi_facet_instances() {
        let w = WeightedMulticomplex::from_pairs(vec![
            (Facet::new(vec![Finite(0), Infinity]), 1),
            (Facet::new(vec![Finite(2), Finite(0)]), 1),
        ])
        .unwrap();
        let report = verify(&w);
        assert!(report.all_passed());
        assert_eq!(
            status_of(&report, "oracle-equivalence"),
            SuiteStatus::Passed
        );
        assert_eq!(
            status_of(&report, "counting-identity"),
            SuiteStatus::Skipped
        );
        assert_eq!(status_of(&report, "split-soundness"), SuiteStatus::Skipped);
    }

    #[test]
    fn split_suite_reports_when_the_horizon_stops_at_the_bound() {
        // Bound for facet (1, 1), weight 1, is (1 + 1 + 1)·1 − 1 = 2.
        let w = WeightedMulticomplex::principal(Facet::finite(&[1, 1]), 1).unwrap();
        let report = run_verification(&w, 2, 3).unwrap();
        assert!(report.all_passed());
        assert_eq!(status_of(&report, "split-soundness"), SuiteStatus::Skipped);
        let report = run_verification(&w, 5, 3).unwrap();
        assert_eq!(status_of(&report, "split-soundness"), SuiteStatus::Passed);
    }

    #[test]
    fn unbounded_coordinates_still_verify() {
        let w =
            WeightedMulticomplex::principal(Facet::new(vec![Finite(2), Finite(0), Infinity]), 2)
                .unwrap();
        let report = verify(&w);
        assert!(report.all_passed());
        assert_eq!(status_of(&report, "counting-identity"), SuiteStatus::Passed);
        assert_eq!(status_of(&report, "split-soundness"), SuiteStatus::Skipped);
    }
}
