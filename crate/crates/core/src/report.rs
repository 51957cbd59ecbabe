//! Check records and reports.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement this check instantiates.
    pub anchor: String,
    pub inputs_digest: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: &str, inputs: &str, expected: impl ToString, actual: impl ToString) -> Check {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Check { name: name.into(), anchor: anchor.into(), inputs_digest: digest(inputs), expected, actual, pass }
    }

    /// A check whose verdict is computed by the caller.
    pub fn verdict(name: impl Into<String>, anchor: &str, inputs: &str, expected: impl ToString, actual: impl ToString, pass: bool) -> Check {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            inputs_digest: digest(inputs),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

/// Hex SHA-256 of a string.
pub fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format: u32,
    pub command: String,
    pub checks: Vec<Check>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub data: serde_json::Map<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { format: 1, command: command.into(), checks: Vec::new(), verdict: true, data: serde_json::Map::new(), timing_ms: None }
    }

    pub fn push(&mut self, c: Check) {
        self.verdict &= c.pass;
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    pub fn insert(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {} [{}]\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.anchor));
        }
        out.push_str(&format!("{}: {}/{} checks passed\n", self.command, self.checks.iter().filter(|c| c.pass).count(), self.checks.len()));
        out
    }
}
