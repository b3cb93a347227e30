//! Summation-limit schedules and their validation against the sieve oracle.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundsReport;
use crate::error::{Error, Result};
use crate::nat::Nat;
use crate::oracle::{nth_prime, SieveTable};

/// Largest `x` for which `W(x) = 2^(x+1)` fits in a `u64`.
pub const WILLANS_EXACT_MAX_X: u64 = 62;

/// Upper summation limit of the enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Schedule {
    /// `(x+1)^2`
    #[serde(rename = "sq")]
    Square,
    /// `⌈(x+1)(ln(x+e) + ln ln(x+e))⌉ + 10`
    #[default]
    #[serde(rename = "lin")]
    Linear,
    /// `2^(x+1)`; a comparison baseline only.
    #[serde(rename = "willans")]
    Willans,
}

impl Schedule {
    pub const ENUMERATOR: [Schedule; 2] = [Schedule::Square, Schedule::Linear];

    pub fn limit(self, x: u64) -> Result<u64> {
        match self {
            Schedule::Square => u_sq(x),
            Schedule::Linear => u_lin(x),
            Schedule::Willans => w_willans_exact(x),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Schedule::Square => "sq",
            Schedule::Linear => "lin",
            Schedule::Willans => "willans",
        }
    }
}

/// `(x+1)^2`.
pub fn u_sq(x: u64) -> Result<u64> {
    let n = Nat::new(x).add(Nat::ONE, "u_sq")?;
    n.mul(n, "u_sq").map(Nat::get)
}

/// `(x+1)(ln(x+e) + ln ln(x+e))` in double precision.
pub fn lin_bound(x: u64) -> f64 {
    let t = x as f64 + E;
    (x as f64 + 1.0) * (t.ln() + t.ln().ln())
}

/// `⌈(x+1)(ln(x+e) + ln ln(x+e))⌉ + 10`.
pub fn u_lin(x: u64) -> Result<u64> {
    let c = lin_bound(x).ceil();
    // 2^53: beyond this the ceiling is no longer an exact integer.
    if !c.is_finite() || c >= 9_007_199_254_740_992.0 {
        return Err(Error::range(
            "u_lin",
            format!("x={x} too large for double-precision schedule"),
        ));
    }
    Nat::new(c as u64).add(Nat::new(10), "u_lin").map(Nat::get)
}

/// `log2 W(x) = x + 1`.
pub fn w_willans_log2(x: u64) -> Result<u64> {
    Nat::new(x).add(Nat::ONE, "w_willans_log2").map(Nat::get)
}

/// `W(x) = 2^(x+1)`, exact only for `x <= 62`.
pub fn w_willans_exact(x: u64) -> Result<u64> {
    if x > WILLANS_EXACT_MAX_X {
        return Err(Error::range(
            "w_willans_exact",
            format!("2^(x+1) needs x <= {WILLANS_EXACT_MAX_X}, got x={x}"),
        ));
    }
    Ok(1u64 << (x + 1))
}

fn covering_prime(t: &SieveTable, x_max: u64, op: &'static str) -> Result<()> {
    let n = x_max.checked_add(1).ok_or(Error::Overflow { op })?;
    nth_prime(t, n).map(|_| ()).map_err(|_| {
        Error::range(
            op,
            format!("oracle limit {} does not reach p_{n}", t.limit()),
        )
    })
}

/// Checks the defining inequality of `kind` for every `x` in `[0, x_max]`.
///
/// Square and Linear must satisfy `U(x) >= p_{x+1} - 1`; the Willans
/// baseline is held to the stronger `W(x) >= p_{x+1}`.
pub fn validate_schedule(kind: Schedule, x_max: u64, oracle: &SieveTable) -> Result<BoundsReport> {
    covering_prime(oracle, x_max, "validate_schedule")?;
    if kind == Schedule::Willans && x_max > WILLANS_EXACT_MAX_X {
        return Err(Error::range(
            "validate_schedule",
            format!("Willans schedule is exact only up to x={WILLANS_EXACT_MAX_X}"),
        ));
    }
    let claim = match kind {
        Schedule::Willans => "willans: W(x) >= p(x+1)".to_string(),
        k => format!("{}: U(x) >= p(x+1) - 1", k.name()),
    };
    let mut report = BoundsReport::new(claim, 0, x_max);
    for x in 0..=x_max {
        let u = kind.limit(x)?;
        let p = nth_prime(oracle, x + 1)?;
        let need = if kind == Schedule::Willans { p } else { p - 1 };
        report.record(x, u as f64, need as f64, u >= need);
    }
    Ok(report)
}

/// For `x` in `[5, x_max]`: `p_{x+1} <= (x+1)(ln(x+e) + ln ln(x+e))`.
pub fn check_lin_analytic_bound(x_max: u64, oracle: &SieveTable) -> Result<BoundsReport> {
    if x_max < 5 {
        return Err(Error::domain("check_lin_analytic_bound", "need x_max >= 5"));
    }
    covering_prime(oracle, x_max, "check_lin_analytic_bound")?;
    let mut report = BoundsReport::new("lin: p(x+1) <= (x+1)(ln(x+e)+ln ln(x+e))", 5, x_max);
    for x in 5..=x_max {
        let p = nth_prime(oracle, x + 1)? as f64;
        let b = lin_bound(x);
        report.record(x, b, p, b > p);
    }
    Ok(report)
}

/// Stored small-`n` table: `(n, p_n - 1, n^2)` for `n = 1..=5`.
pub const SMALL_N_SQUARE_TABLE: [(u64, u64, u64); 5] =
    [(1, 1, 1), (2, 2, 4), (3, 4, 9), (4, 6, 16), (5, 10, 25)];

/// Confirms the stored small-`n` table against the oracle and `p_n - 1 <= n^2`.
pub fn check_small_n_square_table(oracle: &SieveTable) -> Result<BoundsReport> {
    let mut report = BoundsReport::new("small n: p(n) - 1 <= n^2, table matches oracle", 1, 5);
    for (n, pm1, sq) in SMALL_N_SQUARE_TABLE {
        let p = nth_prime(oracle, n)?;
        let holds = p - 1 == pm1 && n * n == sq && pm1 <= sq;
        report.record(n, sq as f64, pm1 as f64, holds);
    }
    Ok(report)
}
