//! The extremal count of maximal independent sets in an n-vertex graph
//! (the Moon-Moser bound) and the exact integer arithmetic around it.
//!
//! The bound is
//!
//! ```text
//!            | 3^(n/3)            n == 0 (mod 3)
//!   g(n)  =  | 4 * 3^((n-4)/3)    n == 1 (mod 3)
//!            | 2 * 3^((n-2)/3)    n == 2 (mod 3)
//! ```
//!
//! for n >= 2, with g(0) = g(1) = 1 by convention: the 0-vertex graph has
//! exactly one maximal independent set (the empty set) and `K_1` has
//! exactly one ({v}). The case formula yields a non-integer at n = 1, so
//! the convention fixes the values the combinatorics forces. Change
//! [`mis_bound`]'s base arm if a different convention is ever wanted.
//!
//! Everything here is exact integer arithmetic. Comparisons between
//! irrational expressions of the form `c * 3^(k/3)` are decided by cubing
//! both sides ([`Pow3Thirds`]); no floating point is used anywhere.

use std::cmp::Ordering;
use std::error::Error;
use std::fmt;

/// Overflow guard: inputs above this are rejected rather than wrapped.
/// g(120) = 3^40 is the largest bound value this module hands out.
pub const MAX_N: usize = 120;

/// Errors from bound computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    /// Input exceeds the [`MAX_N`] overflow guard.
    ExceedsGuard { n: usize },
    /// `branch_bound` called with `d + 1 > n`.
    InvalidBranch { n: usize, d: usize },
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::ExceedsGuard { n } => {
                write!(f, "n = {n} exceeds the overflow guard (max {MAX_N})")
            }
            BoundError::InvalidBranch { n, d } => {
                write!(f, "branch degree d = {d} needs d + 1 <= n = {n}")
            }
        }
    }
}

impl Error for BoundError {}

fn pow3(e: u32) -> u64 {
    3u64.checked_pow(e).expect("guard keeps 3^e within u64")
}

/// The maximum number of maximal independent sets over all n-vertex
/// graphs, exactly. `Err` past the overflow guard.
pub fn mis_bound(n: usize) -> Result<u64, BoundError> {
    if n > MAX_N {
        return Err(BoundError::ExceedsGuard { n });
    }
    Ok(match n {
        0 | 1 => 1,
        _ => match n % 3 {
            0 => pow3((n / 3) as u32),
            1 => 4u64
                .checked_mul(pow3(((n - 4) / 3) as u32))
                .expect("guard keeps 4*3^e within u64"),
            _ => 2u64
                .checked_mul(pow3(((n - 2) / 3) as u32))
                .expect("guard keeps 2*3^e within u64"),
        },
    })
}

/// The branching envelope `(d + 1) * mis_bound(n - d - 1)`: the largest
/// number of maximal independent sets a graph of minimum degree `d` can
/// contribute through the closed-neighborhood branching step.
pub fn branch_bound(n: usize, d: usize) -> Result<u64, BoundError> {
    if n > MAX_N {
        return Err(BoundError::ExceedsGuard { n });
    }
    if d >= n {
        return Err(BoundError::InvalidBranch { n, d });
    }
    let sub = mis_bound(n - d - 1)?;
    (d as u64 + 1)
        .checked_mul(sub)
        .ok_or(BoundError::ExceedsGuard { n })
}

// ============================================================================
// Exact comparison of c * 3^(k/3) expressions
// ============================================================================

/// An exact non-negative value of the form `coeff * 3^(thirds / 3)`.
///
/// Two such values are compared by cubing both sides:
/// `a * 3^(p/3) <= b * 3^(q/3)`  iff  `a^3 * 3^p <= b^3 * 3^q`,
/// which stays in integers. The comparison first divides out the common
/// power of three; if the remaining side overflows `u64` it is strictly
/// larger than the side that fits, so the result is still exact.
#[derive(Copy, Clone, Debug)]
pub struct Pow3Thirds {
    coeff: u64,
    thirds: u32,
}

impl Pow3Thirds {
    /// Panics if `coeff^3` does not fit in a `u64` (coefficients up to
    /// ~2.6 million are fine; this module only builds small ones).
    pub fn new(coeff: u64, thirds: u32) -> Self {
        assert!(
            coeff.checked_pow(3).is_some(),
            "coefficient {coeff} too large to compare by cubing"
        );
        Pow3Thirds { coeff, thirds }
    }

    pub fn coeff(self) -> u64 {
        self.coeff
    }

    pub fn thirds(self) -> u32 {
        self.thirds
    }
}

fn mul_pow3(v: u64, e: u32) -> Option<u64> {
    (0..e).try_fold(v, |acc, _| acc.checked_mul(3))
}

impl Ord for Pow3Thirds {
    fn cmp(&self, other: &Pow3Thirds) -> Ordering {
        let a = self.coeff.pow(3);
        let b = other.coeff.pow(3);
        let common = self.thirds.min(other.thirds);
        match (
            mul_pow3(a, self.thirds - common),
            mul_pow3(b, other.thirds - common),
        ) {
            (Some(x), Some(y)) => x.cmp(&y),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            // One exponent is zero after reduction, and a bare cube always fits.
            (None, None) => unreachable!("both sides overflowed after exponent reduction"),
        }
    }
}

impl PartialOrd for Pow3Thirds {
    fn partial_cmp(&self, other: &Pow3Thirds) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Pow3Thirds {
    fn eq(&self, other: &Pow3Thirds) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pow3Thirds {}

/// [`mis_bound`] in symbolic `coeff * 3^(thirds/3)` form, defined for all
/// `n` (no overflow guard needed: nothing large is materialized).
pub fn mis_bound_pow3(n: usize) -> Pow3Thirds {
    let thirds = |k: usize| u32::try_from(k).expect("vertex counts fit in u32");
    match n {
        0 | 1 => Pow3Thirds::new(1, 0),
        _ => match n % 3 {
            0 => Pow3Thirds::new(1, thirds(n)),
            1 => Pow3Thirds::new(4, thirds(n - 4)),
            _ => Pow3Thirds::new(2, thirds(n - 2)),
        },
    }
}

/// Checks the two-sided envelope `4 * 3^((n-4)/3) <= g(n) <= 3^(n/3)`
/// exactly, for `n >= 4`.
pub fn sandwich_check(n: usize) -> bool {
    assert!(n >= 4, "sandwich envelope needs n >= 4");
    let g = mis_bound_pow3(n);
    let lower = Pow3Thirds::new(4, (n - 4) as u32);
    let upper = Pow3Thirds::new(1, n as u32);
    lower <= g && g <= upper
}

/// True iff `mis_bound(k) <= mis_bound(k + 1)` for all `0 <= k < n_max`.
pub fn is_nondecreasing(n_max: usize) -> Result<bool, BoundError> {
    let mut prev = mis_bound(0)?;
    for k in 1..=n_max {
        let cur = mis_bound(k)?;
        if cur < prev {
            return Ok(false);
        }
        prev = cur;
    }
    Ok(true)
}

/// The largest product of positive integers summing to `n`, by dynamic
/// programming over 1..=n. Equals [`mis_bound`]`(n)` for every `n >= 2`.
pub fn max_product_partition(n: usize) -> Result<u64, BoundError> {
    assert!(n >= 1, "partitions of 0 are not defined here");
    if n > MAX_N {
        return Err(BoundError::ExceedsGuard { n });
    }
    let mut dp = vec![1u64; n + 1];
    for i in 1..=n {
        // Either i stands alone, or a first part j joins a partition of i - j.
        // Every candidate is itself a product of a partition of i, so it is
        // bounded by dp[n] <= g(120) and cannot overflow under the guard.
        let mut best = i as u64;
        for j in 1..i {
            let candidate = (j as u64)
                .checked_mul(dp[i - j])
                .expect("guarded partition products fit u64");
            best = best.max(candidate);
        }
        dp[i] = best;
    }
    Ok(dp[n])
}

// ============================================================================
// Tests
// ============================================================================
