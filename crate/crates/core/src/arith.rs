//! The arithmetic building blocks: divisor tests, the prime indicator, the
//! prefix counter and the folded step.
//!
//! Every floor is an integer quotient of nonnegative operands and every sum
//! runs over its full index range. Nothing here short-circuits, so the
//! operation counts seen by an [`OpSink`] match the expression as written.

use serde::{Deserialize, Serialize};

use crate::counter::{OpSink, Uncounted};
use crate::error::{Error, Result};
use crate::nat::{Bit, Nat};

/// Which divisor test the indicator sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndicatorVariant {
    /// `⌊gcd(k, j) / k⌋`
    #[default]
    #[serde(rename = "gcd")]
    GcdForm,
    /// `⌊j / k⌋ − ⌊(j − 1) / k⌋`
    #[serde(rename = "delta")]
    DeltaForm,
}

/// Euclidean gcd by repeated remainder.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn check_divisor_range(op: &'static str, k: u64, j: u64) -> Result<()> {
    if k < 2 || k >= j {
        return Err(Error::domain(
            op,
            format!("need 2 <= k <= j-1, got k={k}, j={j}"),
        ));
    }
    Ok(())
}

/// `⌊gcd(k, j) / k⌋`: 1 exactly when `k` divides `j`.
pub fn divisor_hit(k: u64, j: u64) -> Result<Bit> {
    divisor_hit_counted(k, j, &mut Uncounted)
}

pub(crate) fn divisor_hit_counted<C: OpSink>(k: u64, j: u64, sink: &mut C) -> Result<Bit> {
    check_divisor_range("divisor_hit", k, j)?;
    sink.gcd_call();
    let g = Nat::new(gcd(k, j));
    sink.inner_floor(1);
    Bit::from_floor(g.floor_div(Nat::new(k), "divisor_hit")?, "divisor_hit")
}

/// `⌊j / k⌋ − ⌊(j − 1) / k⌋`: 1 exactly when `k` divides `j`.
pub fn delta(j: u64, k: u64) -> Result<Bit> {
    delta_counted(j, k, &mut Uncounted)
}

pub(crate) fn delta_counted<C: OpSink>(j: u64, k: u64, sink: &mut C) -> Result<Bit> {
    check_divisor_range("delta", k, j)?;
    sink.delta_eval();
    let k = Nat::new(k);
    let hi = Nat::new(j).floor_div(k, "delta")?;
    let lo = Nat::new(j - 1).floor_div(k, "delta")?;
    sink.inner_floor(2);
    Bit::from_floor(hi.sub(lo, "delta")?, "delta")
}

/// `⌊1 / (1 + Σ_{k=2}^{j-1} hit(k, j))⌋`: 1 exactly when `j` is prime.
pub fn indicator(j: u64, variant: IndicatorVariant) -> Result<Bit> {
    indicator_counted(j, variant, &mut Uncounted)
}

pub(crate) fn indicator_counted<C: OpSink>(
    j: u64,
    variant: IndicatorVariant,
    sink: &mut C,
) -> Result<Bit> {
    indicator_scan(j, variant, false, sink)
}

/// Indicator that stops scanning at the first divisor found. The enclosing
/// floor is still taken over the partial sum, which is already nonzero.
pub fn indicator_early_exit(j: u64, variant: IndicatorVariant) -> Result<Bit> {
    indicator_scan(j, variant, true, &mut Uncounted)
}

pub(crate) fn indicator_scan<C: OpSink>(
    j: u64,
    variant: IndicatorVariant,
    early_exit: bool,
    sink: &mut C,
) -> Result<Bit> {
    if j < 2 {
        return Err(Error::domain("indicator", format!("need j >= 2, got {j}")));
    }
    let mut hits = Nat::ZERO;
    for k in 2..j {
        let t = match variant {
            IndicatorVariant::GcdForm => divisor_hit_counted(k, j, sink)?,
            IndicatorVariant::DeltaForm => delta_counted(j, k, sink)?,
        };
        hits = hits.add(t.into(), "indicator")?;
        sink.inner_addition();
        if early_exit && t.is_one() {
            break;
        }
    }
    let denom = Nat::ONE.add(hits, "indicator")?;
    sink.addition();
    sink.indicator_floor();
    Bit::from_floor(Nat::ONE.floor_div(denom, "indicator")?, "indicator")
}

/// `S(i) = Σ_{j=2}^{i} I(j)`, which equals π(i). `S(1)` is the empty sum.
pub fn prefix_count(i: u64, variant: IndicatorVariant) -> Result<u64> {
    prefix_count_counted(i, variant, &mut Uncounted).map(Nat::get)
}

pub(crate) fn prefix_count_counted<C: OpSink>(
    i: u64,
    variant: IndicatorVariant,
    sink: &mut C,
) -> Result<Nat> {
    prefix_scan(i, variant, false, sink)
}

pub(crate) fn prefix_scan<C: OpSink>(
    i: u64,
    variant: IndicatorVariant,
    early_exit: bool,
    sink: &mut C,
) -> Result<Nat> {
    if i == 0 {
        return Err(Error::domain("prefix_count", "need i >= 1"));
    }
    let mut s = Nat::ZERO;
    for j in 2..=i {
        let ind = indicator_scan(j, variant, early_exit, sink)?;
        s = s.add(ind.into(), "prefix_count")?;
        sink.addition();
    }
    Ok(s)
}

/// `⌊1 / (1 + ⌊s / (x + 1)⌋)⌋`: 1 exactly when `s <= x`.
pub fn step(s: u64, x: u64) -> Result<Bit> {
    step_counted(Nat::new(s), Nat::new(x), &mut Uncounted)
}

pub(crate) fn step_counted<C: OpSink>(s: Nat, x: Nat, sink: &mut C) -> Result<Bit> {
    let width = x.add(Nat::ONE, "step")?;
    sink.addition();
    let q = s.floor_div(width, "step")?;
    sink.step_floor();
    let denom = Nat::ONE.add(q, "step")?;
    sink.addition();
    let a = Nat::ONE.floor_div(denom, "step")?;
    sink.step_floor();
    Bit::from_floor(a, "step")
}
