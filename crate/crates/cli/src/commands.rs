//! Subcommand bodies: each runs library operations and builds a report.

use std::collections::BTreeMap;

use rayon::prelude::*;

use folded_prime::analysis::{
    check_forward_count, check_minimality, check_schedule_divergence, check_signature_separation,
    FORWARD_COUNT_MAX_X,
};
use folded_prime::audit::audit_range_with;
use folded_prime::oracle::{nth_prime, sieve_for_nth};
use folded_prime::schedule::{
    check_lin_analytic_bound, check_small_n_square_table, validate_schedule,
};
use folded_prime::{
    evaluate_with, record_lift, trace, EvalMode, IndicatorVariant, Result, Schedule, Strategy,
};

use crate::report::{Payload, ReportDocument, TableRow};

/// Largest `--max` accepted by `table` and `validate`.
pub const MAX_X: u64 = 10_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalConfig {
    pub schedule: Schedule,
    pub mode: EvalMode,
    pub variant: IndicatorVariant,
    pub strategy: Strategy,
}

impl EvalConfig {
    fn describe(&self, inputs: &mut BTreeMap<String, String>) {
        inputs.insert("schedule".into(), self.schedule.name().into());
        inputs.insert("mode".into(), format!("{:?}", self.mode).to_lowercase());
        let variant = match self.variant {
            IndicatorVariant::GcdForm => "gcd",
            IndicatorVariant::DeltaForm => "delta",
        };
        inputs.insert("variant".into(), variant.into());
        if self.strategy == Strategy::EarlyExit {
            inputs.insert("early_exit".into(), "true".into());
        }
    }

    fn evaluate(&self, x: u64) -> Result<u64> {
        evaluate_with(x, self.schedule, self.mode, self.variant, self.strategy)
    }
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn range_check(op: &'static str, what: &str, value: u64, max: u64) -> Result<()> {
    if value > max {
        return Err(folded_prime::Error::Range {
            op,
            detail: format!("{what} must be <= {max}, got {value}"),
        });
    }
    Ok(())
}

pub fn nth_prime_cmd(x: u64, cfg: EvalConfig) -> Result<ReportDocument> {
    let mut ins = inputs([("x", x.to_string())]);
    cfg.describe(&mut ins);
    let value = cfg.evaluate(x)?;
    let payload = Payload::Value {
        value,
        schedule: cfg.schedule,
        mode: cfg.mode,
        variant: cfg.variant,
    };
    Ok(ReportDocument::new("nth-prime", ins, payload))
}

/// `f(x)` beside the oracle for `x` in `[0, x_max]`. With `sweep`, rows are
/// evaluated in parallel; row order is unaffected.
pub fn table_cmd(x_max: u64, cfg: EvalConfig, sweep: bool) -> Result<ReportDocument> {
    range_check("table", "--max", x_max, MAX_X)?;
    let mut ins = inputs([("max", x_max.to_string())]);
    cfg.describe(&mut ins);
    let oracle = sieve_for_nth(x_max + 1)?;
    let row = |x: u64| -> Result<TableRow> {
        let f = cfg.evaluate(x)?;
        let p = nth_prime(&oracle, x + 1)?;
        Ok(TableRow {
            x,
            f,
            oracle: p,
            agree: f == p,
        })
    };
    let rows = if sweep {
        (0..=x_max)
            .into_par_iter()
            .map(row)
            .collect::<Result<Vec<_>>>()?
    } else {
        (0..=x_max).map(row).collect::<Result<Vec<_>>>()?
    };
    Ok(ReportDocument::new("table", ins, Payload::Table { rows }))
}

pub fn trace_cmd(x: u64, schedule: Schedule) -> Result<ReportDocument> {
    let ins = inputs([
        ("x", x.to_string()),
        ("schedule", schedule.name().to_string()),
    ]);
    let t = trace(x, schedule)?;
    let oracle = sieve_for_nth(x + 1)?;
    let oracle_prime = nth_prime(&oracle, x + 1)?;
    Ok(ReportDocument::new(
        "trace",
        ins,
        Payload::Trace {
            trace: t,
            oracle_prime,
        },
    ))
}

pub fn record_lift_cmd(l: u64, schedule: Schedule) -> Result<ReportDocument> {
    let ins = inputs([
        ("L", l.to_string()),
        ("schedule", schedule.name().to_string()),
    ]);
    let p_star = record_lift(l, schedule)?;
    let oracle = sieve_for_nth(l + 1)?;
    let payload = Payload::RecordLift {
        l,
        p_star,
        prime: oracle.is_prime(p_star)?,
        greater_than_l: p_star > l,
    };
    Ok(ReportDocument::new("record-lift", ins, payload))
}

pub fn audit_cmd(u_min: u64, u_max: u64, variant: IndicatorVariant) -> Result<ReportDocument> {
    let mut ins = inputs([("u_min", u_min.to_string()), ("u_max", u_max.to_string())]);
    EvalConfig {
        variant,
        ..Default::default()
    }
    .describe(&mut ins);
    ins.remove("schedule");
    ins.remove("mode");
    let rows = audit_range_with(u_min, u_max, variant)?;
    Ok(ReportDocument::new("audit", ins, Payload::Audit { rows }))
}

/// Schedule inequalities for both enumerator schedules, the analytic bound
/// behind the linear schedule (from `x = 5`), and the small-`n` square table.
pub fn validate_cmd(x_max: u64) -> Result<ReportDocument> {
    range_check("validate", "--max", x_max, MAX_X)?;
    let ins = inputs([("max", x_max.to_string())]);
    let oracle = sieve_for_nth(x_max + 1)?;
    let mut reports = vec![
        validate_schedule(Schedule::Square, x_max, &oracle)?,
        validate_schedule(Schedule::Linear, x_max, &oracle)?,
    ];
    if x_max >= 5 {
        reports.push(check_lin_analytic_bound(x_max, &oracle)?);
    }
    reports.push(check_small_n_square_table(&oracle)?);
    Ok(ReportDocument::new(
        "validate",
        ins,
        Payload::Bounds { reports },
    ))
}

/// Signature separation, schedule divergence, minimality, and forward-count
/// conformance (traced up to `min(x_max, 200)`).
pub fn compare_cmd(x_max: u64) -> Result<ReportDocument> {
    range_check("compare", "--max", x_max, MAX_X)?;
    let ins = inputs([("max", x_max.to_string())]);
    let oracle = sieve_for_nth(x_max + 1)?;
    let reports = vec![
        check_signature_separation(),
        check_schedule_divergence(x_max)?,
        check_minimality(x_max, &oracle)?,
        check_forward_count(x_max.min(FORWARD_COUNT_MAX_X), &oracle)?,
    ];
    Ok(ReportDocument::new(
        "compare",
        ins,
        Payload::Bounds { reports },
    ))
}
