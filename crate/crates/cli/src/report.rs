//! Verification report data model and rendering.

use std::time::Instant;

use serde::Serialize;

/// Status of one check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verification check: a stable id, the expected and observed values
/// rendered as strings, and the wall-clock cost.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub runtime_ms: u64,
}

/// A full suite run. `suite_status` is `pass` exactly when no check
/// failed (skipped checks do not fail the suite; they carry their reason
/// in `actual`).
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    /// The one nondeterministic header field; everything else is
    /// byte-identical across runs up to per-check runtimes.
    pub generated_unix_ms: u128,
    pub config: ReportConfig,
    pub checks: Vec<CheckResult>,
    pub suite_status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportConfig {
    pub suite: String,
    pub order: i64,
    pub grid: Vec<f64>,
    pub parallel: bool,
}

impl VerificationReport {
    pub fn new(config: ReportConfig, checks: Vec<CheckResult>) -> Self {
        let suite_status = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        VerificationReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            generated_unix_ms: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_millis())
                .unwrap_or(0),
            config,
            checks,
            suite_status,
        }
    }

    pub fn passed(&self) -> bool {
        self.suite_status == Status::Pass
    }

    pub fn render_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        let _ = writeln!(out, "verification suite: {}", self.config.suite);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = writeln!(
                out,
                "{tag:<4} {:<44} expected {} | actual {} ({} ms)",
                c.check_id, c.expected, c.actual, c.runtime_ms
            );
        }
        let _ = writeln!(
            out,
            "suite status: {}",
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }
}

/// Run one check body, timing it and rendering expected/actual values.
pub fn run_check<F>(check_id: &str, expected: &str, body: F) -> CheckResult
where
    F: FnOnce() -> Result<(bool, String), frame48::Error>,
{
    let start = Instant::now();
    let (status, actual) = match body() {
        Ok((true, actual)) => (Status::Pass, actual),
        Ok((false, actual)) => (Status::Fail, actual),
        Err(frame48::Error::Capacity(msg)) => (Status::Skipped, format!("capacity: {msg}")),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    CheckResult {
        check_id: check_id.to_string(),
        status,
        expected: expected.to_string(),
        actual,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}
