use serde::{Deserialize, Serialize};

use super::FamilyId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub method: String,
    pub status: CheckStatus,
    pub mandatory: bool,
    pub detail: String,
}

/// Ordered ledger of the checks run on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCertificate {
    pub family: FamilyId,
    pub q: u64,
    pub i: u64,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl VerificationCertificate {
    pub fn new(family: FamilyId, q: u64, i: u64) -> Self {
        VerificationCertificate { family, q, i, checks: Vec::new(), notes: Vec::new(), pass: true }
    }

    pub fn record(
        &mut self,
        name: &str,
        method: &str,
        status: CheckStatus,
        mandatory: bool,
        detail: impl Into<String>,
    ) {
        if mandatory && status != CheckStatus::Pass {
            self.pass = false;
        }
        self.checks.push(Check {
            name: name.to_string(),
            method: method.to_string(),
            status,
            mandatory,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, name: &str, method: &str, ok: bool, mandatory: bool, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.record(name, method, status, mandatory, detail);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.mandatory && c.status != CheckStatus::Pass)
    }
}
