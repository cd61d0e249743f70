use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The statement's hypotheses do not hold for this group.
    Skip,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        })
    }
}

/// One checked statement. Failures carry the offending element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
}

impl CheckEntry {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Pass,
            detail: detail.into(),
            witness: Vec::new(),
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>, witness: Vec<usize>) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Fail,
            detail: detail.into(),
            witness,
        }
    }

    pub fn skip(name: &str, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            status: CheckStatus::Skip,
            detail: detail.into(),
            witness: Vec::new(),
        }
    }

    /// Pass when `counterexample` is `None`, otherwise fail with it.
    pub fn from_search(
        name: &str,
        pass_detail: impl Into<String>,
        counterexample: Option<(String, Vec<usize>)>,
    ) -> Self {
        match counterexample {
            None => Self::pass(name, pass_detail),
            Some((detail, witness)) => Self::fail(name, detail, witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

pub fn all_passed(entries: &[CheckEntry]) -> bool {
    entries.iter().all(CheckEntry::passed)
}
