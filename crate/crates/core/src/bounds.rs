//! Exact ratios, the Griesmer bound for the concatenated binary code, and
//! the asymptotic quantities `lambda_k` and `s_k`.
//!
//! Dimensions are passed as the integer `two_k = 2k`, so `k = 3.5` is `7`.

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `two_k` for which `2^{two_k}` fits comfortably in `u64`.
pub const MAX_TWO_K: u32 = 62;

/// A non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    numerator: u64,
    denominator: u64,
}

impl ExactRatio {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "ExactRatio with zero denominator");
        let g = numerator.gcd(&denominator);
        ExactRatio {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_integer(&self) -> bool {
        self.denominator == 1
    }

    /// `self * m`, exact.
    pub fn times(&self, m: u64) -> ExactRatio {
        let g = m.gcd(&self.denominator);
        ExactRatio::new(self.numerator * (m / g), self.denominator / g)
    }

    pub fn floor(&self) -> u64 {
        self.numerator / self.denominator
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.numerator as u128 * other.denominator as u128)
            .cmp(&(other.numerator as u128 * self.denominator as u128))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for ExactRatio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_two_k(two_k: u32) -> Result<()> {
    if !(3..=MAX_TWO_K).contains(&two_k) {
        return Err(Error::ParameterOutOfRange {
            name: "two_k",
            value: two_k as u64,
            min: 3,
            max: MAX_TWO_K as u64,
        });
    }
    Ok(())
}

/// Renders `two_k / 2` as `2`, `2.5`, ...
pub fn format_k(two_k: u32) -> String {
    if two_k.is_multiple_of(2) {
        format!("{}", two_k / 2)
    } else {
        format!("{}.5", two_k / 2)
    }
}

/// Sum over `i < k2` of `ceil(d2 / 2^i)`.
pub fn griesmer_sum(k2: u32, d2: u64) -> u64 {
    (0..k2)
        .map(|i| if i >= 64 { 1 } else { d2.div_ceil(1u64 << i) })
        .sum()
}

/// Whether a binary `[n2, k2, d2]` code passes the Griesmer bound.
pub fn griesmer_holds(n2: u64, k2: u32, d2: u64) -> bool {
    griesmer_sum(k2, d2) <= n2
}

/// Largest length `n > s` such that the concatenated `[3n, two_k, 2(n - s)]`
/// binary code passes the Griesmer bound; `None` when even `n = s + 1` fails.
///
/// Every admissible `n` is at most `lambda_k(two_k) * s`, so the scan starts there.
pub fn griesmer_max_n(two_k: u32, s: u64) -> Result<Option<u64>> {
    check_two_k(two_k)?;
    if s == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "s",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    let ceiling = lambda_k(two_k)?.times(s).floor();
    Ok((s + 1..=ceiling)
        .rev()
        .find(|&n| griesmer_holds(3 * n, two_k, 2 * (n - s))))
}

/// `(4^k - 1) / (4^{k-1} - 1)` in lowest terms.
pub fn lambda_k(two_k: u32) -> Result<ExactRatio> {
    check_two_k(two_k)?;
    Ok(ExactRatio::new(
        (1u64 << two_k) - 1,
        (1u64 << (two_k - 2)) - 1,
    ))
}

/// Least `s` with `n_k(s) / s = lambda_k`.
pub fn s_k(two_k: u32) -> Result<u64> {
    check_two_k(two_k)?;
    let base = (1u64 << (two_k - 2)) - 1;
    Ok(if two_k.is_multiple_of(2) {
        base / 3
    } else {
        base
    })
}
