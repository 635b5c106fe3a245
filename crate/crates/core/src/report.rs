//! Pass/fail records shared by the catalog and the verification suites.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
}

impl Check {
    /// Passes when `expected == actual`.
    pub fn equal<T: Serialize + PartialEq>(
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) -> Self {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.into(),
            status,
            expected: to_value(&expected),
            actual: to_value(&actual),
        }
    }

    /// A check whose outcome was decided by the caller.
    pub fn verdict(name: impl Into<String>, ok: bool, expected: Value, actual: Value) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected,
            actual,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("check values serialize")
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
