//! Verification records and reports.

use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};

/// Measured deviation of a check. Exact checks that hold report `ExactZero`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Deviation {
    ExactZero,
    Value(f64),
}

/// Acceptance threshold. Exact checks ignore the user tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tolerance {
    Exact,
    Value(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    /// `ExactZero` passes only an exact tolerance; a numeric deviation passes
    /// a numeric tolerance it does not exceed, and an exact one only when zero.
    pub fn decide(deviation: Deviation, tolerance: Tolerance) -> Status {
        let pass = match (deviation, tolerance) {
            (Deviation::ExactZero, Tolerance::Exact) => true,
            (Deviation::ExactZero, Tolerance::Value(_)) => false,
            (Deviation::Value(d), Tolerance::Value(t)) => d <= t,
            (Deviation::Value(d), Tolerance::Exact) => d == 0.0,
        };
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

fn finite(v: f64) -> f64 {
    if v.is_nan() || v.is_infinite() {
        f64::MAX
    } else {
        v
    }
}

impl Serialize for Deviation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Deviation::ExactZero => s.serialize_str("exact-zero"),
            Deviation::Value(v) => s.serialize_f64(finite(*v)),
        }
    }
}

impl Serialize for Tolerance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Tolerance::Exact => s.serialize_str("exact"),
            Tolerance::Value(v) => s.serialize_f64(finite(*v)),
        }
    }
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deviation::ExactZero => f.write_str("exact-zero"),
            Deviation::Value(v) => write!(f, "{v:.3e}"),
        }
    }
}

impl fmt::Display for Tolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tolerance::Exact => f.write_str("exact"),
            Tolerance::Value(v) => write!(f, "{v:.0e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub deviation: Deviation,
    pub tolerance: Tolerance,
    pub runtime_ms: u64,
}

impl CheckRecord {
    pub fn new(
        id: impl Into<String>,
        paper_ref: impl Into<String>,
        deviation: Deviation,
        tolerance: Tolerance,
    ) -> Self {
        CheckRecord {
            id: id.into(),
            paper_ref: paper_ref.into(),
            status: Status::decide(deviation, tolerance),
            deviation,
            tolerance,
            runtime_ms: 0,
        }
    }

    /// An exact check: `failures` counts the cases that did not hold.
    pub fn exact(id: impl Into<String>, paper_ref: impl Into<String>, failures: usize) -> Self {
        let deviation = if failures == 0 { Deviation::ExactZero } else { Deviation::Value(failures as f64) };
        CheckRecord::new(id, paper_ref, deviation, Tolerance::Exact)
    }

    pub fn float(id: impl Into<String>, paper_ref: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        let deviation = if deviation.is_nan() { f64::INFINITY } else { deviation };
        CheckRecord::new(id, paper_ref, Deviation::Value(deviation), Tolerance::Value(tolerance))
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Runs `f` and stamps the resulting record with its wall-clock time.
pub fn timed(f: impl FnOnce() -> CheckRecord) -> CheckRecord {
    let start = Instant::now();
    let mut record = f();
    record.runtime_ms = start.elapsed().as_millis() as u64;
    record
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub version: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, checks: Vec<CheckRecord>) -> Self {
        let pass = checks.iter().filter(|c| c.passed()).count();
        Report {
            suite: suite.into(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            summary: Summary { pass, fail: checks.len() - pass },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {}, version {})", self.suite, self.seed, self.version)?;
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(
                f,
                "  {} {:width$}  deviation {:>10}  tolerance {:>5}  {:>4} ms  [{}]",
                c.status,
                c.id,
                c.deviation.to_string(),
                c.tolerance.to_string(),
                c.runtime_ms,
                c.paper_ref
            )?;
        }
        write!(f, "{} passed, {} failed", self.summary.pass, self.summary.fail)
    }
}
