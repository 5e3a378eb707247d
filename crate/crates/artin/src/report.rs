//! Machine- and human-readable verification reports.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::graph::CoxeterGraph;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        pass: bool,
        counterexample: Option<serde_json::Value>,
    ) -> Self {
        Check {
            name: name.into(),
            pass,
            counterexample,
        }
    }
}

/// Outcome of one verification suite on one graph. The JSON rendering and
/// the text rendering derive from the same data, so they agree on
/// pass/fail by construction.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub graph: String,
    pub params: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, graph: &CoxeterGraph) -> Self {
        VerificationReport {
            suite: suite.into(),
            graph: graph.vertices().join(","),
            params: Vec::new(),
            checks: Vec::new(),
            wall_ms: 0,
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.params.push((key.into(), value.into()));
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn finish(&mut self, started: Instant) {
        self.wall_ms = started.elapsed().as_millis();
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report JSON")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} on {{{}}}", self.suite, self.graph)?;
        for (k, v) in &self.params {
            writeln!(f, "  {k} = {v}")?;
        }
        for c in &self.checks {
            let verdict = if c.pass { "pass" } else { "FAIL" };
            writeln!(f, "  [{verdict}] {}", c.name)?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "         counterexample: {ce}")?;
            }
        }
        write!(
            f,
            "  {} in {} ms",
            if self.passed() {
                "all passed"
            } else {
                "FAILED"
            },
            self.wall_ms
        )
    }
}
