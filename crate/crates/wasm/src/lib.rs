//! Browser bindings for the demo page in `www/`.
//!
//! Each export returns a JSON string; the page parses it and draws. The
//! plain functions underneath are what the native tests exercise.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use folded_prime::analysis::minimality_lower_bound;
use folded_prime::audit::{audit_one, closed_form_incremental, closed_form_naive};
use folded_prime::oracle::{nth_prime, sieve_for_nth};
use folded_prime::schedule::{u_lin, u_sq, w_willans_log2};
use folded_prime::{trace, EvalMode, IndicatorVariant, Schedule, TraceRecord};

/// Largest `x` the curve panel will plot.
pub const CURVE_MAX_X: u64 = 2000;
/// Largest `U` the audit panel will count (naive runs are cubic).
pub const AUDIT_MAX_U: u64 = 150;

fn parse_schedule(name: &str) -> Result<Schedule, String> {
    match name {
        "sq" => Ok(Schedule::Square),
        "lin" => Ok(Schedule::Linear),
        other => Err(format!("unknown schedule {other:?}; expected sq or lin")),
    }
}

#[derive(Debug, Serialize)]
pub struct TraceView {
    pub trace: TraceRecord,
    pub flip: Option<u64>,
}

pub fn trace_view(x: u64, schedule: &str) -> Result<TraceView, String> {
    let t = trace(x, parse_schedule(schedule)?).map_err(|e| e.to_string())?;
    Ok(TraceView {
        flip: t.flip_index(),
        trace: t,
    })
}

#[derive(Debug, Default, Serialize)]
pub struct Curves {
    pub x: Vec<u64>,
    pub prime: Vec<u64>,
    pub u_sq: Vec<u64>,
    pub u_lin: Vec<u64>,
    pub willans_log2: Vec<u64>,
    pub lower_bound: Vec<f64>,
}

/// Schedules and the prime they must reach, for `x` in `[0, x_max]`.
pub fn schedule_curves(x_max: u64) -> Result<Curves, String> {
    if x_max > CURVE_MAX_X {
        return Err(format!("x_max must be <= {CURVE_MAX_X}"));
    }
    let oracle = sieve_for_nth(x_max + 1).map_err(|e| e.to_string())?;
    let mut c = Curves::default();
    for x in 0..=x_max {
        c.x.push(x);
        c.prime
            .push(nth_prime(&oracle, x + 1).map_err(|e| e.to_string())?);
        c.u_sq.push(u_sq(x).map_err(|e| e.to_string())?);
        c.u_lin.push(u_lin(x).map_err(|e| e.to_string())?);
        c.willans_log2
            .push(w_willans_log2(x).map_err(|e| e.to_string())?);
        c.lower_bound.push(minimality_lower_bound(x));
    }
    Ok(c)
}

#[derive(Debug, Serialize)]
pub struct AuditPoint {
    pub u: u64,
    pub naive_measured: u64,
    pub naive_predicted: u64,
    pub incremental_measured: u64,
    pub incremental_predicted: u64,
    pub step_floors: u64,
}

/// Measured divisor tests in both modes against their closed forms.
pub fn audit_points(u_max: u64, variant: &str) -> Result<Vec<AuditPoint>, String> {
    if !(2..=AUDIT_MAX_U).contains(&u_max) {
        return Err(format!("u_max must lie in [2, {AUDIT_MAX_U}]"));
    }
    let variant = match variant {
        "gcd" => IndicatorVariant::GcdForm,
        "delta" => IndicatorVariant::DeltaForm,
        other => return Err(format!("unknown variant {other:?}")),
    };
    (2..=u_max)
        .map(|u| {
            let naive = audit_one(u, EvalMode::Naive, variant).map_err(|e| e.to_string())?;
            let inc = audit_one(u, EvalMode::Incremental, variant).map_err(|e| e.to_string())?;
            Ok(AuditPoint {
                u,
                naive_measured: naive.measured.divisor_tests(),
                naive_predicted: closed_form_naive(u).map_err(|e| e.to_string())?,
                incremental_measured: inc.measured.divisor_tests(),
                incremental_predicted: closed_form_incremental(u).map_err(|e| e.to_string())?,
                step_floors: inc.measured.step_floors,
            })
        })
        .collect()
}

fn to_js<T: Serialize>(r: Result<T, String>) -> Result<String, JsValue> {
    r.and_then(|v| serde_json::to_string(&v).map_err(|e| e.to_string()))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = traceJson)]
pub fn trace_json(x: u32, schedule: &str) -> Result<String, JsValue> {
    to_js(trace_view(u64::from(x), schedule))
}

#[wasm_bindgen(js_name = scheduleCurvesJson)]
pub fn schedule_curves_json(x_max: u32) -> Result<String, JsValue> {
    to_js(schedule_curves(u64::from(x_max)))
}

#[wasm_bindgen(js_name = auditJson)]
pub fn audit_json(u_max: u32, variant: &str) -> Result<String, JsValue> {
    to_js(audit_points(u64::from(u_max), variant))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_panel() {
        let v = trace_view(3, "sq").unwrap();
        assert_eq!(v.flip, Some(7));
        assert_eq!(v.trace.result, 7);
        assert!(trace_view(3, "cube").is_err());
        assert!(trace_view(400, "sq").is_err());
    }

    #[test]
    fn curves_panel() {
        let c = schedule_curves(9).unwrap();
        assert_eq!(c.u_sq, [1, 4, 9, 16, 25, 36, 49, 64, 81, 100]);
        assert_eq!(c.prime, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(c.u_lin[0], 11);
        assert!(c.prime.iter().zip(&c.u_lin).all(|(p, u)| u + 1 >= *p));
        assert!(schedule_curves(CURVE_MAX_X + 1).is_err());
    }

    #[test]
    fn audit_panel() {
        let pts = audit_points(20, "gcd").unwrap();
        assert_eq!(pts.len(), 19);
        assert!(pts.iter().all(|p| p.naive_measured == p.naive_predicted
            && p.incremental_measured == p.incremental_predicted
            && p.step_floors == 2 * p.u));
        assert!(audit_points(1, "gcd").is_err());
        assert!(audit_points(10, "mod").is_err());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&schedule_curves(2).unwrap()).unwrap();
        assert!(s.starts_with("{\"x\":[0,1,2],\"prime\":[2,3,5]"));
    }
}
