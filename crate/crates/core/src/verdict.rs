//! Pass/fail records shared by the theorem sweep and the catalog suites.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub instance: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
    /// Data needed to reproduce a failure (modules, dimensions).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Verdict {
    pub fn new(
        instance: impl Into<String>,
        check: impl Into<String>,
        status: Status,
        detail: impl Into<String>,
    ) -> Self {
        Verdict {
            instance: instance.into(),
            check: check.into(),
            status,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn pass(instance: impl Into<String>, check: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict::new(instance, check, Status::Pass, detail)
    }

    pub fn fail(
        instance: impl Into<String>,
        check: impl Into<String>,
        detail: impl Into<String>,
        witness: Value,
    ) -> Self {
        let mut v = Verdict::new(instance, check, Status::Fail, detail);
        v.witness = Some(witness);
        v
    }

    pub fn skipped(instance: impl Into<String>, check: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict::new(instance, check, Status::Skipped, detail)
    }

    /// Pass when `ok`, otherwise Fail carrying `witness`.
    pub fn from_check(
        instance: impl Into<String>,
        check: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
        witness: impl FnOnce() -> Value,
    ) -> Self {
        if ok {
            Verdict::pass(instance, check, detail)
        } else {
            Verdict::fail(instance, check, detail, witness())
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}
