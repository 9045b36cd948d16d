//! The report written by every command: the command echo, per-check
//! verdicts and exact values. Numbers are always strings.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};
use std::path::Path;

use anyhow::Context;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Corrected,
    Skipped,
}

impl Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Corrected => "corrected",
            Verdict::Skipped => "skipped",
        })
    }
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub args: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub values: Value,
    /// Human-readable output; not serialized.
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            args: BTreeMap::new(),
            checks: Vec::new(),
            values: Value::Object(Default::default()),
            text: String::new(),
        }
    }

    pub fn arg(&mut self, key: &str, value: impl Display) -> &mut Report {
        self.args.insert(key.to_string(), value.to_string());
        self
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: impl Into<Verdict>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            verdict: verdict.into(),
            detail: detail.into(),
        });
    }

    pub fn set(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.values {
            map.insert(key.to_string(), value);
        }
    }

    pub fn line(&mut self, s: impl Display) {
        let _ = writeln!(self.text, "{s}");
    }

    /// 1 if any check failed, 3 if any was skipped at the cap, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            1
        } else if self.checks.iter().any(|c| c.verdict == Verdict::Skipped) {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_json(&self, path: &Path) -> anyhow::Result<()> {
        std::fs::write(path, self.to_json()).with_context(|| format!("writing {}", path.display()))
    }

    /// The text body followed by one line per check.
    pub fn render(&self) -> String {
        let mut s = self.text.clone();
        if !self.checks.is_empty() && !s.is_empty() && !s.ends_with("\n\n") {
            s.push('\n');
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = write!(s, "[{:<9}] {:<width$}", c.verdict.to_string(), c.name);
            if !c.detail.is_empty() {
                let _ = write!(s, "  {}", c.detail);
            }
            s.push('\n');
        }
        s
    }
}

/// An exact value as a JSON string.
pub fn exact(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn exact_list<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(exact).collect())
}
