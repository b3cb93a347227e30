//! Instrumented evaluation and the exact operation-count closed forms.

use serde::{Deserialize, Serialize};

use crate::arith::IndicatorVariant;
use crate::counter::OpCounts;
use crate::enumerator::{evaluate_with_limit, EvalMode};
use crate::error::{Error, Result};
use crate::nat::Nat;

/// Largest limit accepted for a naive (cubic) counted run.
pub const NAIVE_MAX_LIMIT: u64 = 2000;

/// Divisor tests in a naive run: `(U-2)(U-1)U / 6`.
pub fn closed_form_naive(u: u64) -> Result<u64> {
    if u < 2 {
        return Err(Error::domain(
            "closed_form_naive",
            format!("need U >= 2, got {u}"),
        ));
    }
    let u = Nat::new(u);
    let prod = u
        .sub(Nat::new(2), "closed_form_naive")?
        .mul(u.sub(Nat::ONE, "closed_form_naive")?, "closed_form_naive")?
        .mul(u, "closed_form_naive")?;
    prod.floor_div(Nat::new(6), "closed_form_naive")
        .map(Nat::get)
}

/// Divisor tests in an incremental run: `(U-2)(U-1) / 2`.
pub fn closed_form_incremental(u: u64) -> Result<u64> {
    if u < 2 {
        return Err(Error::domain(
            "closed_form_incremental",
            format!("need U >= 2, got {u}"),
        ));
    }
    let u = Nat::new(u);
    u.sub(Nat::new(2), "closed_form_incremental")?
        .mul(
            u.sub(Nat::ONE, "closed_form_incremental")?,
            "closed_form_incremental",
        )?
        .floor_div(Nat::new(2), "closed_form_incremental")
        .map(Nat::get)
}

/// Runs the enumerator with the summation limit forced to `limit` and
/// returns its value together with the measured tallies.
pub fn run_counted(
    x: u64,
    limit: u64,
    mode: EvalMode,
    variant: IndicatorVariant,
) -> Result<(u64, OpCounts)> {
    if limit == 0 {
        return Err(Error::domain("run_counted", "need U >= 1"));
    }
    if mode == EvalMode::Naive && limit > NAIVE_MAX_LIMIT {
        return Err(Error::range(
            "run_counted",
            format!("naive runs are capped at U={NAIVE_MAX_LIMIT}, got {limit}"),
        ));
    }
    let mut counts = OpCounts::default();
    let value = evaluate_with_limit(x, limit, mode, variant, &mut counts)?;
    Ok((value, counts))
}

/// Measured versus predicted counts for one limit and mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    #[serde(rename = "U")]
    pub limit: u64,
    pub mode: EvalMode,
    pub variant: IndicatorVariant,
    pub measured: OpCounts,
    pub predicted_gcd: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl AuditRow {
    fn new(
        limit: u64,
        mode: EvalMode,
        variant: IndicatorVariant,
        measured: OpCounts,
    ) -> Result<Self> {
        let predicted_gcd = match mode {
            EvalMode::Naive => closed_form_naive(limit)?,
            EvalMode::Incremental => closed_form_incremental(limit)?,
        };
        let step_ok = Some(measured.step_floors) == limit.checked_mul(2);
        let matches = measured.divisor_tests() == predicted_gcd && step_ok;
        Ok(AuditRow {
            limit,
            mode,
            variant,
            measured,
            predicted_gcd,
            matches,
        })
    }
}

/// Audits one limit in one mode. `x` is pinned to `U`, so `π(U) <= x` and
/// the step stays at 1 across the whole range.
pub fn audit_one(limit: u64, mode: EvalMode, variant: IndicatorVariant) -> Result<AuditRow> {
    if limit < 2 {
        return Err(Error::domain("audit", format!("need U >= 2, got {limit}")));
    }
    let (_, measured) = run_counted(limit, limit, mode, variant)?;
    AuditRow::new(limit, mode, variant, measured)
}

/// Audits every limit in `[u_min, u_max]` in both modes (naive first).
pub fn audit_range(u_min: u64, u_max: u64) -> Result<Vec<AuditRow>> {
    audit_range_with(u_min, u_max, IndicatorVariant::GcdForm)
}

pub fn audit_range_with(
    u_min: u64,
    u_max: u64,
    variant: IndicatorVariant,
) -> Result<Vec<AuditRow>> {
    if u_min < 2 || u_min > u_max {
        return Err(Error::domain(
            "audit_range",
            format!("need 2 <= U_min <= U_max, got [{u_min}, {u_max}]"),
        ));
    }
    if u_max > NAIVE_MAX_LIMIT {
        return Err(Error::range(
            "audit_range",
            format!("naive rows are capped at U={NAIVE_MAX_LIMIT}, got {u_max}"),
        ));
    }
    let mut rows = Vec::with_capacity(2 * (u_max - u_min + 1) as usize);
    for u in u_min..=u_max {
        for mode in [EvalMode::Naive, EvalMode::Incremental] {
            rows.push(audit_one(u, mode, variant)?);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use EvalMode::*;
    use IndicatorVariant::*;

    // Direct double sum Σ_{i=2}^{U} Σ_{j=2}^{i} (j-2), independent of the closed form.
    fn naive_by_summation(u: u64) -> u64 {
        (2..=u).map(|i| (2..=i).map(|j| j - 2).sum::<u64>()).sum()
    }

    fn incremental_by_summation(u: u64) -> u64 {
        (2..=u).map(|j| j - 2).sum()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_naive(2), Ok(0));
        assert_eq!(closed_form_naive(3), Ok(1));
        assert_eq!(closed_form_naive(10), Ok(120));
        assert_eq!(closed_form_incremental(2), Ok(0));
        assert_eq!(closed_form_incremental(3), Ok(1));
        assert_eq!(closed_form_incremental(10), Ok(36));
        assert!(closed_form_naive(1).is_err());
        assert!(closed_form_incremental(0).is_err());
        assert!(matches!(
            closed_form_naive(u64::MAX),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn closed_forms_match_summation() {
        for u in 2..=300 {
            assert_eq!(
                closed_form_naive(u).unwrap(),
                naive_by_summation(u),
                "U={u}"
            );
            assert_eq!(
                closed_form_incremental(u).unwrap(),
                incremental_by_summation(u),
                "U={u}"
            );
        }
    }

    #[test]
    fn run_counted_examples() {
        let (v, c) = run_counted(3, 16, Incremental, GcdForm).unwrap();
        assert_eq!((v, c.gcd_calls, c.step_floors), (7, 105, 32));
        let (v, c) = run_counted(3, 16, Naive, GcdForm).unwrap();
        assert_eq!((v, c.gcd_calls), (7, 560));
        let (v, c) = run_counted(0, 1, Incremental, GcdForm).unwrap();
        assert_eq!((v, c.gcd_calls, c.step_floors), (2, 0, 2));
    }

    #[test]
    fn run_counted_guards() {
        assert!(matches!(
            run_counted(0, 0, Incremental, GcdForm),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            run_counted(0, 2001, Naive, GcdForm),
            Err(Error::Range { .. })
        ));
        assert!(run_counted(0, 2001, Incremental, GcdForm).is_ok());
    }

    #[test]
    fn gcd_form_floor_per_test() {
        let (_, c) = run_counted(5, 40, Naive, GcdForm).unwrap();
        assert_eq!(c.inner_test_floors, c.gcd_calls);
        let (_, d) = run_counted(5, 40, Naive, DeltaForm).unwrap();
        assert_eq!(d.gcd_calls, 0);
        assert_eq!(d.delta_evals, c.gcd_calls);
        assert_eq!(d.inner_test_floors, 2 * d.delta_evals);
    }

    #[test]
    fn audit_range_examples() {
        let rows = audit_range(2, 50).unwrap();
        assert_eq!(rows.len(), 98);
        assert!(rows.iter().all(|r| r.matches));

        let rows = audit_range(2, 2).unwrap();
        assert!(rows.iter().all(|r| r.measured.gcd_calls == 0));

        let rows = audit_range(10, 10).unwrap();
        assert_eq!(rows[0].mode, Naive);
        assert_eq!(rows[0].measured.gcd_calls, 120);
        assert_eq!(rows[1].measured.gcd_calls, 36);
    }

    #[test]
    fn audit_range_guards() {
        assert!(audit_range(1, 5).is_err());
        assert!(audit_range(6, 5).is_err());
        assert!(matches!(audit_range(2, 2001), Err(Error::Range { .. })));
    }

    #[test]
    fn additions_grow_linearly() {
        for u in 100..=250 {
            let (_, small) = run_counted(2 * u, u, Incremental, GcdForm).unwrap();
            let (_, large) = run_counted(2 * u, 2 * u, Incremental, GcdForm).unwrap();
            let ratio = large.additions as f64 / small.additions as f64;
            assert!(ratio <= 3.0, "U={u}: ratio {ratio}");
        }
        let (_, c) = run_counted(20, 10, Incremental, GcdForm).unwrap();
        // 9 indicators, 2 per step, S carry and sumA per i, final 1 + sumA
        assert_eq!(c.additions, 9 + 2 * 10 + 10 + 10 + 1);
    }

    #[test]
    fn delta_audit_obeys_same_forms() {
        assert!(audit_range_with(2, 40, DeltaForm)
            .unwrap()
            .iter()
            .all(|r| r.matches));
    }
}
