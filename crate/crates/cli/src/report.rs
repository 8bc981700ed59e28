use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

/// What `count` and `verify` print. Counts are decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<&'static str, usize>,
    pub counts: BTreeMap<&'static str, String>,
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            params: BTreeMap::new(),
            counts: BTreeMap::new(),
            checks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn count(&mut self, name: &'static str, value: impl ToString) {
        self.counts.insert(name, value.to_string());
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine { name: name.into(), passed, detail: detail.into(), counterexample: None });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{} {}", self.command, params.join(" ")).unwrap();
        for (k, v) in &self.counts {
            writeln!(out, "{k}: {v}").unwrap();
        }
        for c in &self.checks {
            writeln!(out, "{} {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail).unwrap();
            if let Some(ce) = &c.counterexample {
                writeln!(out, "  counterexample: {ce}").unwrap();
            }
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "elapsed: {ms} ms").unwrap();
        }
        out
    }
}
