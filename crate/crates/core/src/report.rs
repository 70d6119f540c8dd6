//! Pass/fail reporting shared by the consistency checkers.

use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of one named check over some number of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub cases: u64,
    pub passed: bool,
    /// Present when the check failed or has something worth surfacing.
    pub detail: Option<String>,
}

impl CheckItem {
    pub fn pass(name: &str, cases: u64) -> CheckItem {
        CheckItem {
            name: String::from(name),
            cases,
            passed: true,
            detail: None,
        }
    }

    pub fn fail(name: &str, cases: u64, detail: String) -> CheckItem {
        CheckItem {
            name: String::from(name),
            cases,
            passed: false,
            detail: Some(detail),
        }
    }
}

/// A bundle of check outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, item: CheckItem) {
        self.checks.push(item);
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }
}
