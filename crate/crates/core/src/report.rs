//! Report records shared by the certifier and the registry.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::arrowing::{ArrowVerdict, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unknown,
}

/// One checked statement with the numbers or witnesses behind its status.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub label: String,
    pub statement: String,
    pub status: CheckStatus,
    pub evidence: Map<String, Value>,
}

impl HypothesisCheck {
    pub fn new(label: impl Into<String>, statement: impl Into<String>) -> Self {
        HypothesisCheck {
            label: label.into(),
            statement: statement.into(),
            status: CheckStatus::Unknown,
            evidence: Map::new(),
        }
    }

    #[must_use]
    pub fn status(mut self, status: CheckStatus) -> Self {
        self.status = status;
        self
    }

    #[must_use]
    pub fn pass_if(self, ok: bool) -> Self {
        self.status(if ok { CheckStatus::Pass } else { CheckStatus::Fail })
    }

    #[must_use]
    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.evidence.insert(
            key.to_string(),
            serde_json::to_value(value).expect("evidence serializes"),
        );
        self
    }

    /// Records a decider verdict; `expect_arrows` says which outcome passes.
    #[must_use]
    pub fn from_verdict(self, v: &ArrowVerdict, expect_arrows: bool) -> Self {
        let status = match (&v.outcome, expect_arrows) {
            (Outcome::Unknown, _) => CheckStatus::Unknown,
            (Outcome::Arrows, true) | (Outcome::FreeWitness(_), false) => CheckStatus::Pass,
            _ => CheckStatus::Fail,
        };
        self.status(status).with("verdict", v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    Certified,
    RefutedHypothesis,
    Inconclusive,
}

impl Overall {
    /// Certified only when every check passed; any failure refutes.
    pub fn from_checks(checks: &[HypothesisCheck]) -> Self {
        if checks.iter().any(|c| c.status == CheckStatus::Fail) {
            Overall::RefutedHypothesis
        } else if checks.iter().all(|c| c.status == CheckStatus::Pass) {
            Overall::Certified
        } else {
            Overall::Inconclusive
        }
    }
}
