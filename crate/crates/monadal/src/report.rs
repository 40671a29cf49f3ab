//! Check records and reports with deterministic text and JSON rendering.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::semicat::Mor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub location: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatch: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pipeline: String,
    pub checks: Vec<Check>,
    /// Operations exercised while producing this report.
    #[serde(default)]
    pub coverage: BTreeSet<String>,
}

/// Describes the first entry where two morphisms differ, or a shape difference.
pub fn mismatch(lhs: &Mor, rhs: &Mor) -> Option<String> {
    if lhs.src != rhs.src || lhs.dst != rhs.dst {
        return Some(format!(
            "shape {}x{} vs {}x{}",
            lhs.dst.len(),
            lhs.src.len(),
            rhs.dst.len(),
            rhs.src.len()
        ));
    }
    lhs.first_difference(rhs)
        .map(|(r, c, a, b)| format!("entry ({r},{c}): {a} vs {b}"))
}

impl Report {
    pub fn new(pipeline: impl Into<String>) -> Self {
        Report { pipeline: pipeline.into(), ..Default::default() }
    }

    pub fn cover(&mut self, op: &str) {
        self.coverage.insert(op.to_string());
    }

    pub fn push(&mut self, id: impl Into<String>, location: impl Into<String>, ok: bool, detail: Option<String>) {
        self.checks.push(Check {
            id: id.into(),
            location: location.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            mismatch: if ok { None } else { detail },
        });
    }

    pub fn pass(&mut self, id: impl Into<String>, location: impl Into<String>) {
        self.push(id, location, true, None);
    }

    pub fn fail(&mut self, id: impl Into<String>, location: impl Into<String>, detail: impl Into<String>) {
        self.push(id, location, false, Some(detail.into()));
    }

    pub fn check_eq(&mut self, id: impl Into<String>, location: impl Into<String>, lhs: &Mor, rhs: &Mor) -> bool {
        let m = mismatch(lhs, rhs);
        let ok = m.is_none();
        self.push(id, location, ok, m);
        ok
    }

    /// Records one check for a family of equations: PASS if all hold, otherwise the first
    /// failing location.
    pub fn check_all<I>(&mut self, id: impl Into<String>, cases: I)
    where
        I: IntoIterator<Item = (String, Option<String>)>,
    {
        let id = id.into();
        let mut n = 0usize;
        for (loc, m) in cases {
            n += 1;
            if let Some(m) = m {
                self.fail(id, loc, m);
                return;
            }
        }
        self.pass(id, format!("{n} cases"));
    }

    pub fn merge(&mut self, other: Report) {
        let prefix = other.pipeline.clone();
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.id = format!("{prefix}/{}", c.id);
            }
            self.checks.push(c);
        }
        self.coverage.extend(other.coverage);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn counts(&self) -> (usize, usize) {
        let fails = self.failures().count();
        (self.checks.len() - fails, fails)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "pipeline {}", self.pipeline);
        for c in &self.checks {
            let st = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = write!(s, "{st} {} [{}]", c.id, c.location);
            if let Some(m) = &c.mismatch {
                let _ = write!(s, " {m}");
            }
            s.push('\n');
        }
        let (p, f) = self.counts();
        let _ = writeln!(s, "summary: {p} passed, {f} failed");
        if !self.coverage.is_empty() {
            let ops: Vec<&str> = self.coverage.iter().map(|s| s.as_str()).collect();
            let _ = writeln!(s, "coverage: {}", ops.join(" "));
        }
        s
    }

    pub fn to_json(&self) -> String {
        let (p, f) = self.counts();
        let v = serde_json::json!({
            "pipeline": self.pipeline,
            "checks": self.checks,
            "summary": {"passed": p, "failed": f},
            "coverage": self.coverage,
        });
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// Converts a failing report into an error, keeping passing reports as values.
    pub fn into_result(self) -> crate::Result<Report> {
        if self.passed() {
            Ok(self)
        } else {
            Err(crate::Error::Validation(Box::new(self)))
        }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_text())
    }
}
