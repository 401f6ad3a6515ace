//! Rendering of results as plain text and as JSON.
//!
//! Every renderer is a pure function from computed values to a `String`
//! ending in a newline, so output is byte-for-byte reproducible. The plain
//! format prints cover vectors as space-separated entries (descending
//! lexicographic order within a set) and extended naturals as a number or
//! `inf`; the JSON format mirrors the same data with covers as arrays of
//! naturals and `∞` as the string `"inf"`. All coordinate indices in either
//! format are 1-based, matching the variable names `x1, x2, …`.

use serde_json::{json, Value};

use crate::algebra::{
    generation_bound, split_high_degree_with_rule, AlgebraMonomial, GenerationReport, SplitAttempt,
    SplitRule,
};
use crate::complex::CoverVector;
use crate::covers::MinimalCoverSet;
use crate::error::Result;
use crate::extnat::ExtNat;
use crate::structure::SingleFacetDecomposition;
use crate::verify::VerifyReport;

/// JSON value for an extended natural: a number, or the string `"inf"`.
fn extnat_value(e: ExtNat) -> Value {
    match e {
        ExtNat::Finite(v) => json!(v),
        ExtNat::Infinity => json!("inf"),
    }
}

fn vector_value(b: &CoverVector) -> Value {
    json!(b.entries())
}

fn monomial_value(m: &AlgebraMonomial) -> Value {
    json!({
        "exponents": m.exponents.entries(),
        "degree": m.degree,
    })
}

/// One cover order, as the bare value.
pub fn render_order(vector: &CoverVector, order: ExtNat, as_json: bool) -> String {
    if as_json {
        let doc = json!({
            "vector": vector.entries(),
            "order": extnat_value(order),
        });
        format!("{doc}\n")
    } else {
        format!("{order}\n")
    }
}

/// A minimal-cover set, one cover per line in its stored (descending) order.
pub fn render_covers(set: &MinimalCoverSet, as_json: bool) -> String {
    if as_json {
        let doc = json!({
            "degree": set.degree(),
            "covers": set.covers().iter().map(vector_value).collect::<Vec<_>>(),
        });
        format!("{doc}\n")
    } else {
        let mut out = String::new();
        for cover in set.iter() {
            out.push_str(&cover.to_string());
            out.push('\n');
        }
        out
    }
}

/// High-degree splits computed for the generator report: one attempt per
/// minimal cover in the degrees strictly above the generation bound.
struct SplitSection {
    rule: SplitRule,
    bound: u64,
    attempts: Vec<(u64, CoverVector, SplitAttempt)>,
}

/// Collects split attempts when they apply: single maximal facet, finite
/// positive entries, and a horizon that reaches past the generation bound.
fn collect_splits(report: &GenerationReport, rule: SplitRule) -> Result<Option<SplitSection>> {
    let complex = report.table().complex();
    let Some((facet, weight)) = complex.single_facet() else {
        return Ok(None);
    };
    if !facet.is_finite_positive() {
        return Ok(None);
    }
    let bound = generation_bound(facet, weight)?;
    if report.horizon() <= bound {
        return Ok(None);
    }
    let mut attempts = Vec::new();
    for degree in bound + 1..=report.horizon() {
        if let Some(set) = report.table().degree(degree) {
            for cover in set.iter() {
                let attempt = split_high_degree_with_rule(facet, weight, cover, degree, rule)?;
                attempts.push((degree, cover.clone(), attempt));
            }
        }
    }
    Ok(Some(SplitSection {
        rule,
        bound,
        attempts,
    }))
}

fn split_validity_note(attempt: &SplitAttempt) -> String {
    if attempt.left_order < ExtNat::Finite(attempt.left.degree) {
        format!(
            "INVALID (left factor order {} < degree {})",
            attempt.left_order, attempt.left.degree
        )
    } else if attempt.right_order < ExtNat::Finite(attempt.right.degree) {
        format!(
            "INVALID (right factor order {} < degree {})",
            attempt.right_order, attempt.right.degree
        )
    } else {
        "valid".to_string()
    }
}

/// The generator table with per-degree minimal covers, new generators,
/// decomposition certificates, high-degree splits where they apply, and the
/// finite-generation verdict.
pub fn render_generators(
    report: &GenerationReport,
    rule: SplitRule,
    as_json: bool,
) -> Result<String> {
    let splits = collect_splits(report, rule)?;
    if as_json {
        return render_generators_json(report, splits.as_ref());
    }
    let mut out = String::new();
    for degree in 1..=report.horizon() {
        out.push_str(&format!("degree {degree}:\n"));
        let Some(set) = report.table().degree(degree) else {
            continue;
        };
        if set.is_empty() {
            out.push_str("  (none)\n");
            continue;
        }
        for cover in set.iter() {
            let monomial = AlgebraMonomial::new(cover.clone(), degree);
            match report.certificate_for(&monomial) {
                None => out.push_str(&format!("  {cover}  new generator\n")),
                Some(cert) => out.push_str(&format!("  {cover}  = {cert}\n")),
            }
            if let Some(section) = &splits {
                for (d, b, attempt) in &section.attempts {
                    if *d == degree && b == cover {
                        out.push_str(&format!(
                            "    split[{}]: ({}) * ({})  {}\n",
                            section.rule.label(),
                            attempt.left,
                            attempt.right,
                            split_validity_note(attempt)
                        ));
                    }
                }
            }
        }
    }
    match report.max_new_generator_degree() {
        Some(d) => out.push_str(&format!("max new generator degree: {d}\n")),
        None => out.push_str("max new generator degree: none\n"),
    }
    match report.certified_bound() {
        Some(bound) => out.push_str(&format!("certified finitely generated, bound={bound}\n")),
        None => out.push_str("no finite certificate within horizon\n"),
    }
    Ok(out)
}

fn render_generators_json(
    report: &GenerationReport,
    splits: Option<&SplitSection>,
) -> Result<String> {
    let mut degrees = Vec::new();
    for degree in 1..=report.horizon() {
        let Some(set) = report.table().degree(degree) else {
            continue;
        };
        let covers: Vec<Value> = set.covers().iter().map(vector_value).collect();
        let new_generators: Vec<Value> = report
            .new_generators_of_degree(degree)
            .map(|m| vector_value(&m.exponents))
            .collect();
        let certificates: Vec<Value> = report
            .certificates()
            .iter()
            .filter(|(target, _)| target.degree == degree)
            .map(|(target, cert)| {
                json!({
                    "target": vector_value(&target.exponents),
                    "left": monomial_value(&cert.left),
                    "right": monomial_value(&cert.right),
                })
            })
            .collect();
        degrees.push(json!({
            "degree": degree,
            "covers": covers,
            "new_generators": new_generators,
            "certificates": certificates,
        }));
    }
    let splits_value = match splits {
        None => Value::Null,
        Some(section) => json!({
            "rule": section.rule.label(),
            "bound": section.bound,
            "attempts": section
                .attempts
                .iter()
                .map(|(degree, cover, attempt)| {
                    json!({
                        "degree": degree,
                        "cover": vector_value(cover),
                        "left": monomial_value(&attempt.left),
                        "right": monomial_value(&attempt.right),
                        "left_order": extnat_value(attempt.left_order),
                        "right_order": extnat_value(attempt.right_order),
                        "valid": attempt.is_valid(),
                    })
                })
                .collect::<Vec<_>>(),
        }),
    };
    let doc = json!({
        "horizon": report.horizon(),
        "degrees": degrees,
        "max_new_generator_degree": report.max_new_generator_degree(),
        "certified_bound": report.certified_bound(),
        "splits": splits_value,
    });
    Ok(format!("{doc}\n"))
}

fn coordinate_list(indices: &[usize]) -> String {
    if indices.is_empty() {
        return "none".to_string();
    }
    indices
        .iter()
        .map(|i| format!("x{}", i + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

/// The single-facet structure report: coordinate classes, kind, and form.
pub fn render_decomposition(d: &SingleFacetDecomposition, as_json: bool) -> String {
    let classes = d.classification();
    if as_json {
        let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<usize>>();
        let doc = json!({
            "dimension": d.dimension(),
            "positive": one_based(classes.positive()),
            "zero": one_based(classes.zero()),
            "infinite": one_based(classes.infinite()),
            "kind": kind_label(d),
            "form": d.to_string(),
            "reduced_facet": d
                .reduced_facet()
                .entries()
                .iter()
                .map(|&e| extnat_value(e))
                .collect::<Vec<_>>(),
            "reduced_weight": d.reduced_weight(),
        });
        return format!("{doc}\n");
    }
    let mut out = String::new();
    out.push_str(&format!("dimension: {}\n", d.dimension()));
    out.push_str(&format!(
        "positive coordinates: {}\n",
        coordinate_list(classes.positive())
    ));
    out.push_str(&format!(
        "zero coordinates: {}\n",
        coordinate_list(classes.zero())
    ));
    out.push_str(&format!(
        "infinite coordinates: {}\n",
        coordinate_list(classes.infinite())
    ));
    out.push_str(&format!("kind: {}\n", kind_label(d)));
    out.push_str(&format!("form: {d}\n"));
    if d.reduced_facet().is_empty() {
        out.push_str("reduced facet: none\n");
    } else {
        out.push_str(&format!(
            "reduced facet: {} (weight {})\n",
            d.reduced_facet(),
            d.reduced_weight()
        ));
    }
    out
}

fn kind_label(d: &SingleFacetDecomposition) -> &'static str {
    match d.kind() {
        crate::structure::DecompositionKind::BaseRing => "base ring",
        crate::structure::DecompositionKind::FullPolynomialExtension => "full polynomial extension",
        crate::structure::DecompositionKind::Composite => "composite",
    }
}

/// The verification report, one line per suite plus a verdict line.
pub fn render_verification(report: &VerifyReport, as_json: bool) -> String {
    if as_json {
        let doc = json!({
            "suites": report
                .suites()
                .iter()
                .map(|s| {
                    json!({
                        "name": s.name,
                        "status": s.status.label(),
                        "detail": s.detail,
                    })
                })
                .collect::<Vec<_>>(),
            "passed": report.all_passed(),
        });
        return format!("{doc}\n");
    }
    let mut out = String::new();
    for suite in report.suites() {
        out.push_str(&format!(
            "{}: {} ({})\n",
            suite.name,
            suite.status.label(),
            suite.detail
        ));
    }
    if report.all_passed() {
        out.push_str("verification passed\n");
    } else {
        out.push_str("verification FAILED\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Facet, WeightedMulticomplex};
    use crate::extnat::ExtNat::{Finite, Infinity};
    use crate::instance::parse_instance;
    use crate::structure::decompose_single_facet;
    use crate::verify::run_verification;

    #[test]
    fn order_renders_bare_values() {
        let b = CoverVector::new(vec![1, 1]);
        assert_eq!(render_order(&b, Finite(2), false), "2\n");
        assert_eq!(render_order(&b, Infinity, false), "inf\n");
        let parsed: serde_json::Value =
            serde_json::from_str(&render_order(&b, Infinity, true)).unwrap();
        assert_eq!(parsed["order"], "inf");
        assert_eq!(parsed["vector"], serde_json::json!([1, 1]));
    }

    #[test]
    fn covers_render_one_per_line_descending() {
        let w = WeightedMulticomplex::principal(Facet::finite(&[1, 1]), 1).unwrap();
        let set = w.minimal_covers(2);
        assert_eq!(render_covers(&set, false), "2 0\n1 1\n0 2\n");
        let parsed: serde_json::Value = serde_json::from_str(&render_covers(&set, true)).unwrap();
        assert_eq!(
            parsed["covers"],
            serde_json::json!([[2, 0], [1, 1], [0, 2]])
        );
    }

    #[test]
    fn generator_report_contains_the_required_phrases() {
        let w = parse_instance("1 1 : 1\n").unwrap();
        let text =
            render_generators(&w.algebra_generators(4), SplitRule::WeightedSupport, false).unwrap();
        assert!(text.contains("certified finitely generated, bound=2"));
        assert!(text.contains("max new generator degree: 1"));
        assert!(text.contains("split[weighted-support]"));

        let unbounded = parse_instance("0 inf : 1\n2 0 : 1\n").unwrap();
        let text = render_generators(
            &unbounded.algebra_generators(4),
            SplitRule::WeightedSupport,
            false,
        )
        .unwrap();
        assert!(text.contains("no finite certificate within horizon"));
        assert!(!text.contains("split["));
    }

    #[test]
    fn strict_rule_splits_report_invalid_attempts() {
        // Facet (2, 1), weight 1: bound = 4; at degree 5 the strict rule
        // assigns the right factor degree 1 where the weighted rule needs 2.
        let w = parse_instance("2 1 : 1\n").unwrap();
        let report = w.algebra_generators(5);
        let strict = render_generators(&report, SplitRule::SupportCardinality, false).unwrap();
        assert!(strict.contains("INVALID"), "strict render was:\n{strict}");
        let weighted = render_generators(&report, SplitRule::WeightedSupport, false).unwrap();
        assert!(
            !weighted.contains("INVALID"),
            "weighted render was:\n{weighted}"
        );
    }

    #[test]
    fn generators_json_has_the_documented_fields() {
        let w = parse_instance("1 1 : 1\n").unwrap();
        let text =
            render_generators(&w.algebra_generators(3), SplitRule::WeightedSupport, true).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["horizon"], 3);
        assert_eq!(parsed["certified_bound"], 2);
        assert_eq!(parsed["degrees"][0]["degree"], 1);
        assert_eq!(
            parsed["degrees"][0]["covers"],
            serde_json::json!([[1, 0], [0, 1]])
        );
        assert_eq!(
            parsed["degrees"][0]["new_generators"],
            serde_json::json!([[1, 0], [0, 1]])
        );
        assert_eq!(parsed["splits"]["rule"], "weighted-support");
        assert_eq!(parsed["splits"]["bound"], 2);
    }

    #[test]
    fn decomposition_reports_use_one_based_variables() {
        let d =
            decompose_single_facet(&Facet::new(vec![Finite(2), Finite(0), Infinity]), 3).unwrap();
        let text = render_decomposition(&d, false);
        assert_eq!(
            text,
            "dimension: 3\n\
             positive coordinates: x1\n\
             zero coordinates: x2\n\
             infinite coordinates: x3\n\
             kind: composite\n\
             form: S + t( A(Gamma(2), w=3)[x2] + (x3) S[t] )\n\
             reduced facet: 2 (weight 3)\n"
        );
        let parsed: serde_json::Value =
            serde_json::from_str(&render_decomposition(&d, true)).unwrap();
        assert_eq!(parsed["positive"], serde_json::json!([1]));
        assert_eq!(parsed["zero"], serde_json::json!([2]));
        assert_eq!(parsed["infinite"], serde_json::json!([3]));
    }

    #[test]
    fn verification_renders_a_verdict_line() {
        let w = parse_instance("2 1 : 1\n").unwrap();
        let report = run_verification(&w, 3, 3).unwrap();
        let text = render_verification(&report, false);
        assert!(text.ends_with("verification passed\n"));
        assert!(text.contains("oracle-equivalence: pass"));
        let parsed: serde_json::Value =
            serde_json::from_str(&render_verification(&report, true)).unwrap();
        assert_eq!(parsed["passed"], true);
    }
}
