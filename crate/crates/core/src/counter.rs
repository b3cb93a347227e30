//! Operation-count sinks threaded through the arithmetic core.
//!
//! Uncounted evaluation passes [`Uncounted`], whose hooks compile to nothing.
//! Audits pass an [`OpCounts`] owned by the caller, so counting stays
//! reentrant and the arithmetic functions stay pure.

use serde::{Deserialize, Serialize};

/// Receives one call per literal operation site executed.
pub trait OpSink {
    /// One `gcd(k, j)` inside a GcdForm divisor test.
    fn gcd_call(&mut self) {}
    /// One `δ(j, k)` evaluation inside a DeltaForm divisor test.
    fn delta_eval(&mut self) {}
    /// Floor divisions inside a divisor test (one for gcd/k, two for δ).
    fn inner_floor(&mut self, _n: u64) {}
    /// The enclosing `⌊1/(1+·)⌋` of one indicator.
    fn indicator_floor(&mut self) {}
    /// One of the two floors of a step evaluation.
    fn step_floor(&mut self) {}
    /// A binary `+` outside the divisor sum.
    fn addition(&mut self) {}
    /// A `+` accumulating the divisor sum inside an indicator.
    fn inner_addition(&mut self) {}
}

/// Sink that records nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct Uncounted;

impl OpSink for Uncounted {}

/// Tallies of every counted operation site.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounts {
    pub gcd_calls: u64,
    pub delta_evals: u64,
    pub inner_test_floors: u64,
    pub indicator_floors: u64,
    pub step_floors: u64,
    pub additions: u64,
    pub inner_additions: u64,
}

impl OpCounts {
    /// Divisor tests of either form.
    pub fn divisor_tests(&self) -> u64 {
        self.gcd_calls + self.delta_evals
    }
}

impl OpSink for OpCounts {
    fn gcd_call(&mut self) {
        self.gcd_calls += 1;
    }
    fn delta_eval(&mut self) {
        self.delta_evals += 1;
    }
    fn inner_floor(&mut self, n: u64) {
        self.inner_test_floors += n;
    }
    fn indicator_floor(&mut self) {
        self.indicator_floors += 1;
    }
    fn step_floor(&mut self) {
        self.step_floors += 1;
    }
    fn addition(&mut self) {
        self.additions += 1;
    }
    fn inner_addition(&mut self) {
        self.inner_additions += 1;
    }
}
