use serde::{Deserialize, Serialize};

/// A single point where a claimed inequality `lhs >= rhs` failed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub x: u64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Pass/fail ledger for one inequality claim over a range of `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub claim_id: String,
    pub x_range: (u64, u64),
    pub checked: u64,
    pub violations: Vec<Violation>,
    /// Smallest `lhs - rhs` seen, when the claim is a numeric inequality.
    pub min_slack: Option<f64>,
    /// Smallest `(lhs - rhs) / |rhs|` seen, alongside `min_slack`.
    pub min_relative_slack: Option<f64>,
    pub passed: bool,
}

impl BoundsReport {
    pub fn new(claim_id: impl Into<String>, lo: u64, hi: u64) -> Self {
        BoundsReport {
            claim_id: claim_id.into(),
            x_range: (lo, hi),
            checked: 0,
            violations: Vec::new(),
            min_slack: None,
            min_relative_slack: None,
            passed: true,
        }
    }

    /// Records a check of `lhs >= rhs` at `x`; `holds` is decided by the caller
    /// so integer comparisons stay exact.
    pub fn record(&mut self, x: u64, lhs: f64, rhs: f64, holds: bool) {
        self.checked += 1;
        let slack = lhs - rhs;
        self.min_slack = Some(self.min_slack.map_or(slack, |m| m.min(slack)));
        if rhs != 0.0 {
            let rel = slack / rhs.abs();
            self.min_relative_slack = Some(self.min_relative_slack.map_or(rel, |m| m.min(rel)));
        }
        if !holds {
            self.violations.push(Violation { x, lhs, rhs });
            self.passed = false;
        }
    }

    /// Records a non-numeric condition (no slack is tracked).
    pub fn record_flag(&mut self, x: u64, holds: bool) {
        self.checked += 1;
        if !holds {
            self.violations.push(Violation {
                x,
                lhs: 0.0,
                rhs: 0.0,
            });
            self.passed = false;
        }
    }
}
