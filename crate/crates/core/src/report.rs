//! Machine-readable verification reports.
//!
//! Every verifier produces an ordered list of named checks. A failing check
//! records the earliest failing basis tuple and both sides' coordinates, so a
//! broken structure constant can be located from the report alone. Verdicts
//! (facts like "not Galois") are kept separate from failures (broken inputs):
//! only failures map to a nonzero mathematical exit code.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Earliest failing basis tuple in lexicographic order, if any.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<String>,
}

/// A failing tuple with both sides rendered as coordinate lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub witness: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    /// Mathematical facts established by the run (e.g. `galois: false`).
    /// These are results, not failures.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub verdicts: BTreeMap<String, bool>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            verdicts: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, name: &str, failure: Option<Failure>) {
        match failure {
            None => self.checks.push(Check {
                name: name.to_string(),
                status: Status::Pass,
                witness: None,
                lhs: None,
                rhs: None,
            }),
            Some(f) => self.checks.push(Check {
                name: name.to_string(),
                status: Status::Fail,
                witness: Some(f.witness),
                lhs: Some(f.lhs),
                rhs: Some(f.rhs),
            }),
        }
    }

    pub fn pass(&mut self, name: &str) {
        self.record(name, None);
    }

    pub fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_string(), value);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Absorbs the checks of a sub-report under a prefixed name.
    pub fn absorb(&mut self, prefix: &str, sub: Report) {
        for mut c in sub.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in sub.verdicts {
            self.verdicts.insert(format!("{prefix}.{k}"), v);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subject: {}", self.subject)?;
        for c in &self.checks {
            match c.status {
                Status::Pass => writeln!(f, "  pass  {}", c.name)?,
                Status::Fail => {
                    writeln!(
                        f,
                        "  FAIL  {}  at tuple {:?}",
                        c.name,
                        c.witness.as_deref().unwrap_or(&[])
                    )?;
                    if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                        writeln!(f, "        lhs = {l}")?;
                        writeln!(f, "        rhs = {r}")?;
                    }
                }
            }
        }
        for (k, v) in &self.verdicts {
            writeln!(f, "  verdict {k} = {v}")?;
        }
        Ok(())
    }
}

/// Renders a coordinate vector for failure messages.
pub fn coords_string(v: &[crate::scalar::Scalar]) -> String {
    let entries: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("[{}]", entries.join(", "))
}
