//! A prime enumerator built only from additions, floors, divisions, sums
//! and gcd: `f(x) = 1 + Σ_{i=1}^{U(x)} A(i, x) = p_{x+1}`.
//!
//! The crate pairs the literal expression with an independent sieve
//! ([`oracle`]), exact operation-count audits ([`audit`]) and numeric checks
//! of the schedule bounds and separation claims ([`schedule`], [`analysis`]).

pub mod analysis;
pub mod arith;
pub mod audit;
pub mod bounds;
pub mod counter;
pub mod enumerator;
pub mod error;
pub mod nat;
pub mod oracle;
pub mod schedule;

pub use arith::{delta, divisor_hit, indicator, prefix_count, step, IndicatorVariant};
pub use bounds::{BoundsReport, Violation};
pub use counter::{OpCounts, OpSink};
pub use enumerator::{
    evaluate, evaluate_with, record_lift, trace, EvalMode, Strategy, TraceRecord, TraceRow,
};
pub use error::{Error, Result};
pub use nat::{Bit, Nat};
pub use schedule::Schedule;
