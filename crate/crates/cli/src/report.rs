//! The machine-readable report document emitted by every subcommand.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use folded_prime::audit::AuditRow;
use folded_prime::{BoundsReport, EvalMode, IndicatorVariant, Schedule, TraceRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self, error_code: i32) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => error_code,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub x: u64,
    pub f: u64,
    pub oracle: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Value {
        value: u64,
        schedule: Schedule,
        mode: EvalMode,
        variant: IndicatorVariant,
    },
    Table {
        rows: Vec<TableRow>,
    },
    Trace {
        trace: TraceRecord,
        oracle_prime: u64,
    },
    RecordLift {
        l: u64,
        p_star: u64,
        prime: bool,
        greater_than_l: bool,
    },
    Audit {
        rows: Vec<AuditRow>,
    },
    Bounds {
        reports: Vec<BoundsReport>,
    },
    Error {
        message: String,
    },
}

impl Payload {
    /// Whether every embedded check passed.
    pub fn all_passed(&self) -> bool {
        match self {
            Payload::Value { .. } | Payload::Error { .. } => true,
            Payload::Table { rows } => rows.iter().all(|r| r.agree),
            Payload::Trace {
                trace,
                oracle_prime,
            } => trace.is_coherent() && trace.result == *oracle_prime,
            Payload::RecordLift {
                prime,
                greater_than_l,
                ..
            } => *prime && *greater_than_l,
            Payload::Audit { rows } => rows.iter().all(|r| r.matches),
            Payload::Bounds { reports } => reports.iter().all(|r| r.passed),
        }
    }
}

/// One invocation's inputs, outputs and overall status. Field order is the
/// serialization order, and `inputs` is sorted, so output is byte-stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: Payload,
    pub status: Status,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: BTreeMap<String, String>, outputs: Payload) -> Self {
        let status = match &outputs {
            Payload::Error { .. } => Status::Error,
            p if p.all_passed() => Status::Ok,
            _ => Status::Violation,
        };
        ReportDocument {
            command: command.to_string(),
            inputs,
            outputs,
            status,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
