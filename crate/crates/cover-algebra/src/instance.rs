//! Reading and writing the plain-text instance format.
//!
//! An instance file lists one maximal facet per line together with its
//! weight:
//!
//! ```text
//! # an optional comment
//! 0 inf : 1
//! 2 0 : 1
//! ```
//!
//! Each row is a whitespace-separated list of entries — natural numbers or
//! the token `inf` (case-insensitive) — followed by `:` and a positive
//! integer weight. Blank lines are skipped and `#` starts a comment that
//! runs to the end of the line. All rows must have the same number of
//! entries, and no row may duplicate or be componentwise comparable with
//! another: the rows form the antichain of maximal facets. Violations are
//! reported with the 1-based line number of the offending row.

use std::str::FromStr;

use crate::complex::{Facet, WeightedMulticomplex};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;

/// Parses the instance format into a weighted multicomplex.
pub fn parse_instance(text: &str) -> Result<WeightedMulticomplex> {
    let mut rows: Vec<(Facet, u64, usize)> = Vec::new();
    for (index, raw_line) in text.lines().enumerate() {
        let line = index + 1;
        let content = match raw_line.split_once('#') {
            Some((before, _comment)) => before,
            None => raw_line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let (entry_part, weight_part) = match content.split_once(':') {
            Some(parts) => parts,
            None => return Err(Error::ParseWeight { line }),
        };
        let mut entries: Vec<ExtNat> = Vec::new();
        for token in entry_part.split_whitespace() {
            match ExtNat::from_str(token) {
                Ok(e) => entries.push(e),
                Err(_) => {
                    return Err(Error::ParseSyntax {
                        line,
                        token: token.to_string(),
                    })
                }
            }
        }
        if entries.is_empty() {
            return Err(Error::ParseSyntax {
                line,
                token: ":".to_string(),
            });
        }
        let weight = match weight_part.trim().parse::<u64>() {
            Ok(w) if w > 0 => w,
            _ => return Err(Error::ParseWeight { line }),
        };
        if let Some((first, _, _)) = rows.first() {
            if first.len() != entries.len() {
                return Err(Error::ParseDimension {
                    line,
                    expected: first.len(),
                    found: entries.len(),
                });
            }
        }
        let facet = Facet::new(entries);
        for (other, _, other_line) in &rows {
            if facet.partial_cmp(other).is_some() {
                return Err(Error::ParseAntichain {
                    line,
                    detail: format!(
                        "`{facet}` is comparable with `{other}` from line {other_line}"
                    ),
                });
            }
        }
        rows.push((facet, weight, line));
    }
    if rows.is_empty() {
        return Err(Error::ParseEmpty);
    }
    WeightedMulticomplex::from_pairs(
        rows.into_iter()
            .map(|(facet, weight, _)| (facet, weight))
            .collect(),
    )
}

/// Writes a weighted multicomplex back out in the instance format, one
/// facet row per line in the complex's canonical order, with a trailing
/// newline. The output parses back to an equal complex.
pub fn format_instance(w: &WeightedMulticomplex) -> String {
    let mut out = String::new();
    for (facet, weight) in w.pairs() {
        out.push_str(&format!("{facet} : {weight}\n"));
    }
    out
}
