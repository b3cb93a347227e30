//! Numeric checks of the separation and minimality claims: operator
//! signatures, Willans-versus-linear schedule divergence, the `Ω(x log x)`
//! lower bound on any valid schedule, and forward-count conformance.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundsReport;
use crate::enumerator::trace;
use crate::error::{Error, Result};
use crate::oracle::{nth_prime, SieveTable};
use crate::schedule::{u_lin, Schedule};

/// Largest `x` the forward-count check will trace.
pub const FORWARD_COUNT_MAX_X: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Folded,
    Willans,
    Mills,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Folded, Family::Willans, Family::Mills];
}

/// Six-bit operator palette fingerprint. The coordinates are opaque.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignatureVector {
    pub family: Family,
    pub coords: [u8; 6],
}

pub fn signature(family: Family) -> SignatureVector {
    let coords = match family {
        Family::Folded => [0, 0, 0, 0, 1, 1],
        Family::Willans => [1, 1, 1, 0, 0, 0],
        Family::Mills => [0, 0, 1, 0, 0, 0],
    };
    SignatureVector { family, coords }
}

/// Pairwise distinctness of the stored signatures, plus disjointness of the
/// folded and Willans palettes.
pub fn check_signature_separation() -> BoundsReport {
    let mut report = BoundsReport::new(
        "signatures pairwise distinct; folded and willans disjoint",
        0,
        3,
    );
    let sigs = Family::ALL.map(signature);
    let mut idx = 0;
    for a in 0..sigs.len() {
        for b in a + 1..sigs.len() {
            report.record_flag(idx, sigs[a].coords != sigs[b].coords);
            idx += 1;
        }
    }
    let folded = signature(Family::Folded).coords;
    let willans = signature(Family::Willans).coords;
    let overlap = folded.iter().zip(willans).any(|(a, w)| a & w == 1);
    report.record_flag(idx, !overlap);
    report
}

/// `ln(W(x) / U_lin(x)) = (x+1) ln 2 − ln U_lin(x)`.
pub fn log_ratio(x: u64) -> Result<f64> {
    Ok((x as f64 + 1.0) * LN_2 - (u_lin(x)? as f64).ln())
}

/// The log-ratio is strictly increasing on `[10, x_max]`, and when
/// `x_max >= 60` it has grown by more than 10 since `x = 10`.
pub fn check_schedule_divergence(x_max: u64) -> Result<BoundsReport> {
    if x_max < 10 {
        return Err(Error::domain(
            "check_schedule_divergence",
            "need x_max >= 10",
        ));
    }
    let mut report = BoundsReport::new("ln(W/U_lin) strictly increasing from x=10", 10, x_max);
    let base = log_ratio(10)?;
    let mut prev = base;
    for x in 11..=x_max {
        let cur = log_ratio(x)?;
        report.record(x, cur, prev, cur > prev);
        prev = cur;
    }
    if x_max >= 60 {
        report.record(x_max, prev, base + 10.0, prev > base + 10.0);
    }
    Ok(report)
}

/// `(x+1)(ln(x+1) + ln ln(x+1) − 1) − 1`, the lower bound for `p_{x+1} − 1`.
pub fn minimality_lower_bound(x: u64) -> f64 {
    let n = x as f64 + 1.0;
    n * (n.ln() + n.ln().ln() - 1.0) - 1.0
}

/// For `x` in `[5, x_max]`: `U_lin(x) >= p_{x+1} − 1 >= lower bound`.
/// Slack is measured on the second inequality.
pub fn check_minimality(x_max: u64, oracle: &SieveTable) -> Result<BoundsReport> {
    if x_max < 5 {
        return Err(Error::domain("check_minimality", "need x_max >= 5"));
    }
    let mut report = BoundsReport::new(
        "U_lin(x) >= p(x+1)-1 >= (x+1)(ln(x+1)+ln ln(x+1)-1)-1",
        5,
        x_max,
    );
    for x in 5..=x_max {
        let p = nth_prime(oracle, x + 1).map_err(|_| {
            Error::range(
                "check_minimality",
                format!("oracle does not reach p_{}", x + 1),
            )
        })?;
        let pm1 = p - 1;
        let lb = minimality_lower_bound(x);
        let holds = u_lin(x)? >= pm1 && pm1 as f64 > lb;
        report.record(x, pm1 as f64, lb, holds);
    }
    Ok(report)
}

/// Every trace for `x` in `[0, x_max]` has {0,1} steps that never increase
/// and switch off exactly at the oracle's `p_{x+1}`.
pub fn check_forward_count(x_max: u64, oracle: &SieveTable) -> Result<BoundsReport> {
    if x_max > FORWARD_COUNT_MAX_X {
        return Err(Error::range(
            "check_forward_count",
            format!("traces are limited to x <= {FORWARD_COUNT_MAX_X}"),
        ));
    }
    let mut report = BoundsReport::new(
        "forward-count: binary, nonincreasing, flip at p(x+1)",
        0,
        x_max,
    );
    for x in 0..=x_max {
        let t = trace(x, Schedule::Linear)?;
        let p = nth_prime(oracle, x + 1)?;
        let binary = t.rows.iter().all(|r| r.step.as_u64() <= 1);
        let nonincreasing = t.rows.windows(2).all(|w| w[0].step >= w[1].step);
        let unique_flip = t.rows.iter().all(|r| r.step.is_one() == (r.i < p));
        report.record_flag(
            x,
            binary && nonincreasing && unique_flip && t.flip_index() == Some(p),
        );
    }
    Ok(report)
}
