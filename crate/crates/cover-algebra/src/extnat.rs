//! Arithmetic over the extended naturals `ℕ ∪ {∞}`.
//!
//! Every quantity in this crate that can be infinite — facet entries, weighted
//! sums, cover orders — is an [`ExtNat`], and all arithmetic on such
//! quantities goes through the operator impls in this module. The conventions
//! are load-bearing for everything built on top:
//!
//! * `0 · ∞ = 0` (an absent vertex contributes nothing, even on an
//!   unbounded coordinate),
//! * `x · ∞ = ∞` for `x ≥ 1`,
//! * `∞ + x = ∞`,
//! * `∞` compares strictly greater than every natural.
//!
//! Finite arithmetic is exact `u64` arithmetic and aborts loudly on overflow
//! rather than wrapping or saturating.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

/// A natural number or `∞`.
///
/// The derived order compares `Finite` values numerically and places
/// `Infinity` above all of them.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtNat {
    /// An ordinary natural number.
    Finite(u64),
    /// The absorbing top element `∞`.
    Infinity,
}

impl ExtNat {
    /// The additive identity, `Finite(0)`.
    pub const ZERO: ExtNat = ExtNat::Finite(0);

    /// Whether the value is an ordinary natural number.
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    /// Whether the value is `∞`.
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinity)
    }

    /// Whether the value is `Finite(0)`.
    pub fn is_zero(self) -> bool {
        self == ExtNat::ZERO
    }

    /// The finite value, if there is one.
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinity => None,
        }
    }

    /// Floor division by a positive natural; `∞ / d = ∞`.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero.
    pub fn div_floor(self, divisor: u64) -> ExtNat {
        assert!(divisor > 0, "division of an extended natural by zero");
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v / divisor),
            ExtNat::Infinity => ExtNat::Infinity,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Infinity, _) | (_, ExtNat::Infinity) => ExtNat::Infinity,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => {
                ExtNat::Finite(a.checked_add(b).expect("extended-natural sum overflow"))
            }
        }
    }
}

impl Mul for ExtNat {
    type Output = ExtNat;

    fn mul(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            // 0 · ∞ = ∞ · 0 = 0 takes precedence over the infinite cases.
            (ExtNat::Finite(0), _) | (_, ExtNat::Finite(0)) => ExtNat::ZERO,
            (ExtNat::Infinity, _) | (_, ExtNat::Infinity) => ExtNat::Infinity,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => {
                ExtNat::Finite(a.checked_mul(b).expect("extended-natural product overflow"))
            }
        }
    }
}

impl Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinity => write!(f, "inf"),
        }
    }
}

/// Error returned when a token is neither a natural number nor `inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseExtNatError {
    /// The offending input token.
    pub token: String,
}

impl fmt::Display for ParseExtNatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unrecognized extended natural {:?}", self.token)
    }
}

impl std::error::Error for ParseExtNatError {}

impl FromStr for ExtNat {
    type Err = ParseExtNatError;

    /// Accepts a decimal natural or `inf` in any letter case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(ExtNat::Infinity);
        }
        s.parse::<u64>()
            .map(ExtNat::Finite)
            .map_err(|_| ParseExtNatError {
                token: s.to_string(),
            })
    }
}

/// Convenience ordering helper used by the sort routines: plain total order
/// with `∞` greatest, i.e. the derived `Ord`.
pub fn cmp_entries(a: &ExtNat, b: &ExtNat) -> Ordering {
    a.cmp(b)
}
