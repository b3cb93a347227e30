//! Human-readable rendering of report documents.

use std::fmt::Write;

use folded_prime::BoundsReport;

use crate::report::{Payload, ReportDocument, Status};

fn status_word(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn bounds(out: &mut String, r: &BoundsReport) {
    let _ = write!(
        out,
        "[{}] {}  x in [{}, {}], {} checks",
        status_word(r.passed),
        r.claim_id,
        r.x_range.0,
        r.x_range.1,
        r.checked
    );
    if let Some(s) = r.min_slack {
        let _ = write!(out, ", min slack {s:.6}");
    }
    if let Some(s) = r.min_relative_slack {
        let _ = write!(out, " (relative {s:.3e})");
    }
    out.push('\n');
    for v in r.violations.iter().take(10) {
        let _ = writeln!(
            out,
            "    violation at x={}: lhs={} rhs={}",
            v.x, v.lhs, v.rhs
        );
    }
    if r.violations.len() > 10 {
        let _ = writeln!(out, "    ... {} more", r.violations.len() - 10);
    }
}

pub fn human(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match &doc.outputs {
        Payload::Value { value, .. } => {
            let _ = writeln!(out, "{value}");
        }
        Payload::Table { rows } => {
            let _ = writeln!(out, "{:>6} {:>10} {:>10}  agree", "x", "f(x)", "p(x+1)");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>6} {:>10} {:>10}  {}",
                    r.x,
                    r.f,
                    r.oracle,
                    if r.agree { "yes" } else { "NO" }
                );
            }
        }
        Payload::Trace {
            trace,
            oracle_prime,
        } => {
            let _ = writeln!(
                out,
                "x={} schedule={} U={}",
                trace.x,
                trace.schedule_used.name(),
                trace.limit
            );
            let _ = writeln!(out, "{:>6} {:>4} {:>6} {:>4}", "i", "I", "S", "A");
            for r in &trace.rows {
                let _ = writeln!(
                    out,
                    "{:>6} {:>4} {:>6} {:>4}",
                    r.i, r.indicator, r.prefix, r.step
                );
            }
            match trace.flip_index() {
                Some(i) => {
                    let _ = writeln!(out, "step flips 1 -> 0 at i={i}");
                }
                None => {
                    let _ = writeln!(out, "step stays 1 through i={}", trace.limit);
                }
            }
            let _ = writeln!(
                out,
                "result {} (oracle p(x+1) = {oracle_prime})",
                trace.result
            );
        }
        Payload::RecordLift {
            l,
            p_star,
            prime,
            greater_than_l,
        } => {
            let _ = writeln!(out, "P* = {p_star}");
            let prime_word = if *prime { "prime" } else { "NOT prime" };
            let cmp = if *greater_than_l { ">" } else { "<=" };
            let _ = writeln!(out, "certified: {prime_word}, {cmp} {l}");
        }
        Payload::Audit { rows } => {
            let _ = writeln!(
                out,
                "{:>6} {:>12} {:>14} {:>14} {:>8}  match",
                "U", "mode", "measured", "predicted", "2U"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>6} {:>12} {:>14} {:>14} {:>8}  {}",
                    r.limit,
                    format!("{:?}", r.mode).to_lowercase(),
                    r.measured.divisor_tests(),
                    r.predicted_gcd,
                    r.measured.step_floors,
                    if r.matches { "yes" } else { "NO" }
                );
            }
        }
        Payload::Bounds { reports } => {
            for r in reports {
                bounds(&mut out, r);
            }
        }
        Payload::Error { message } => {
            let _ = writeln!(out, "error: {message}");
        }
    }
    if doc.status == Status::Violation {
        out.push_str("status: violation\n");
    }
    out
}
