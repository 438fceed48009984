//! JSON reports with one record per check.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "cubeideal";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// An asserted bound or identity held.
    Pass,
    /// An asserted bound or identity failed.
    Fail,
    /// A computed value or an unasserted observation.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub values: Value,
    pub witnesses: Vec<Value>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// SHA-256 of the input file, when one was read.
    pub input_digest: Option<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: Option<String>) -> Self {
        Report {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            input_digest,
            checks: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Accumulates checks, timing each from the previous one.
pub struct Recorder {
    report: Report,
    started: Instant,
}

impl Recorder {
    pub fn new(command: impl Into<String>, input_digest: Option<String>) -> Self {
        Recorder { report: Report::new(command, input_digest), started: Instant::now() }
    }

    pub fn push(&mut self, name: &str, status: Status, values: Value, witnesses: Vec<Value>) {
        let now = Instant::now();
        let elapsed_ms = (now - self.started).as_secs_f64() * 1e3;
        self.started = now;
        self.report.checks.push(Check { name: name.to_string(), status, values, witnesses, elapsed_ms });
    }

    pub fn info(&mut self, name: &str, values: Value) {
        self.push(name, Status::Info, values, Vec::new());
    }

    pub fn finish(self) -> Report {
        self.report
    }
}
