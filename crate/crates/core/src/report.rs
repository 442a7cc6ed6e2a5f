use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// One named verification step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

/// Outcome of a verification run. Quantities are kept in a sorted map so the
/// serialized form is byte-stable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(default)]
    pub quantities: BTreeMap<String, String>,
}

/// Cap on how many witnesses a single check records.
pub const MAX_WITNESSES: usize = 8;

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            passed,
            witnesses: Vec::new(),
        });
        self
    }

    /// Adds a check that passes iff `witnesses` is empty.
    pub fn check_witnesses(&mut self, name: impl Into<String>, mut witnesses: Vec<String>) -> &mut Self {
        let passed = witnesses.is_empty();
        witnesses.truncate(MAX_WITNESSES);
        self.checks.push(Check {
            name: name.into(),
            passed,
            witnesses,
        });
        self
    }

    pub fn quantity(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.quantities.insert(key.into(), value.to_string());
        self
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) -> &mut Self {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.quantities {
            self.quantities.insert(format!("{prefix}{k}"), v);
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            for w in &c.witnesses {
                writeln!(f, "         {w}")?;
            }
        }
        for (k, v) in &self.quantities {
            writeln!(f, "  {k} = {v}")?;
        }
        Ok(())
    }
}
