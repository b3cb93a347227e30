//! The folded enumerator `f(x) = 1 + Σ_{i=1}^{U(x)} A(i, x)`.

use serde::{Deserialize, Serialize};

use crate::arith::{
    indicator_counted, indicator_scan, prefix_count_counted, prefix_scan, step_counted,
    IndicatorVariant,
};
use crate::counter::{OpSink, Uncounted};
use crate::error::{Error, Result};
use crate::nat::{Bit, Nat};
use crate::oracle::sieve_for_nth;
use crate::schedule::Schedule;

/// Traces longer than this are refused.
pub const MAX_TRACE_ROWS: u64 = 100_000;

/// How the prefix counter is obtained at each `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalMode {
    /// Recompute `S(i)` from scratch for every `i` (triple-nested).
    Naive,
    /// Carry `S(i) = S(i-1) + I(i)`.
    #[default]
    Incremental,
}

/// Whether evaluation may skip terms that cannot change the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Every sum runs to its upper limit.
    #[default]
    Literal,
    /// Divisor scans stop at the first hit and the outer sum stops after the
    /// first zero step (`S` is nondecreasing, so later steps are all zero).
    /// Never used for audits.
    EarlyExit,
}

/// `1 + Σ_{i=1}^{U(x)} A(i, x)`, which equals `p_{x+1}` for a valid schedule.
pub fn evaluate(
    x: u64,
    schedule: Schedule,
    mode: EvalMode,
    variant: IndicatorVariant,
) -> Result<u64> {
    evaluate_with(x, schedule, mode, variant, Strategy::Literal)
}

pub fn evaluate_with(
    x: u64,
    schedule: Schedule,
    mode: EvalMode,
    variant: IndicatorVariant,
    strategy: Strategy,
) -> Result<u64> {
    let limit = schedule.limit(x)?;
    match strategy {
        Strategy::Literal => evaluate_with_limit(x, limit, mode, variant, &mut Uncounted),
        Strategy::EarlyExit => evaluate_early_exit(x, limit, mode, variant),
    }
}

fn evaluate_early_exit(
    x: u64,
    limit: u64,
    mode: EvalMode,
    variant: IndicatorVariant,
) -> Result<u64> {
    let x = Nat::new(x);
    let mut sink = Uncounted;
    let mut s = Nat::ZERO;
    let mut sum_a = Nat::ZERO;
    for i in 1..=limit {
        s = match mode {
            EvalMode::Incremental => {
                let ind = if i < 2 {
                    Bit::Zero
                } else {
                    indicator_scan(i, variant, true, &mut sink)?
                };
                s.add(ind.into(), "evaluate")?
            }
            EvalMode::Naive => prefix_scan(i, variant, true, &mut sink)?,
        };
        let a = step_counted(s, x, &mut sink)?;
        if !a.is_one() {
            break;
        }
        sum_a = sum_a.add(a.into(), "evaluate")?;
    }
    Nat::ONE.add(sum_a, "evaluate").map(Nat::get)
}

/// The enumerator with the summation limit supplied directly.
pub(crate) fn evaluate_with_limit<C: OpSink>(
    x: u64,
    limit: u64,
    mode: EvalMode,
    variant: IndicatorVariant,
    sink: &mut C,
) -> Result<u64> {
    let x = Nat::new(x);
    let mut s = Nat::ZERO;
    let mut sum_a = Nat::ZERO;
    for i in 1..=limit {
        s = match mode {
            EvalMode::Incremental => {
                let ind = if i < 2 {
                    Bit::Zero
                } else {
                    indicator_counted(i, variant, sink)?
                };
                sink.addition();
                s.add(ind.into(), "evaluate")?
            }
            EvalMode::Naive => prefix_count_counted(i, variant, sink)?,
        };
        let a = step_counted(s, x, sink)?;
        sum_a = sum_a.add(a.into(), "evaluate")?;
        sink.addition();
    }
    sink.addition();
    Nat::ONE.add(sum_a, "evaluate").map(Nat::get)
}

/// One row of a trace: the indicator, prefix count and step at index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRow {
    pub i: u64,
    /// `I(i)`; row 1 carries 0 since the counter starts at `j = 2`.
    pub indicator: Bit,
    pub prefix: u64,
    pub step: Bit,
}

/// Full per-index breakdown of one enumerator run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub x: u64,
    pub schedule_used: Schedule,
    pub limit: u64,
    pub rows: Vec<TraceRow>,
    pub result: u64,
}

impl TraceRecord {
    /// First index whose step is 0, if the flip falls inside the traced range.
    pub fn flip_index(&self) -> Option<u64> {
        self.rows.iter().find(|r| !r.step.is_one()).map(|r| r.i)
    }

    pub fn step_sum(&self) -> u64 {
        self.rows.iter().map(|r| r.step.as_u64()).sum()
    }

    /// Steps are {0,1}, nonincreasing, and switch off exactly at `result`.
    pub fn is_coherent(&self) -> bool {
        let nonincreasing = self.rows.windows(2).all(|w| w[0].step >= w[1].step);
        let contiguous = self
            .rows
            .iter()
            .enumerate()
            .all(|(n, r)| r.i == n as u64 + 1);
        let flip_ok = match self.flip_index() {
            Some(f) => f == self.result,
            None => self.limit + 1 == self.result,
        };
        nonincreasing
            && contiguous
            && self.rows.len() as u64 == self.limit
            && self.step_sum() + 1 == self.result
            && flip_ok
    }
}

/// Traces `f(x)` under `schedule` using the incremental gcd evaluation.
pub fn trace(x: u64, schedule: Schedule) -> Result<TraceRecord> {
    let limit = schedule.limit(x)?;
    if limit > MAX_TRACE_ROWS {
        return Err(Error::range(
            "trace",
            format!("U(x)={limit} exceeds {MAX_TRACE_ROWS} rows; use untraced evaluation"),
        ));
    }
    let xn = Nat::new(x);
    let mut sink = Uncounted;
    let mut s = Nat::ZERO;
    let mut rows = Vec::with_capacity(limit as usize);
    for i in 1..=limit {
        let ind = if i < 2 {
            Bit::Zero
        } else {
            indicator_counted(i, IndicatorVariant::GcdForm, &mut sink)?
        };
        s = s.add(ind.into(), "trace")?;
        let step = step_counted(s, xn, &mut sink)?;
        rows.push(TraceRow {
            i,
            indicator: ind,
            prefix: s.get(),
            step,
        });
    }
    let result = 1 + rows.iter().map(|r| r.step.as_u64()).sum::<u64>();
    Ok(TraceRecord {
        x,
        schedule_used: schedule,
        limit,
        rows,
        result,
    })
}

/// `P* = f(L)`, certified prime and greater than `L` by the sieve oracle.
pub fn record_lift(l: u64, schedule: Schedule) -> Result<u64> {
    if l < 2 {
        return Err(Error::domain(
            "record_lift",
            format!("need L >= 2, got {l}"),
        ));
    }
    let p = evaluate(
        l,
        schedule,
        EvalMode::Incremental,
        IndicatorVariant::GcdForm,
    )?;
    let oracle = sieve_for_nth(l + 1)?;
    if p <= l || !oracle.is_prime(p)? {
        return Err(Error::range(
            "record_lift",
            format!("certification failed for P*={p}, L={l}"),
        ));
    }
    Ok(p)
}
