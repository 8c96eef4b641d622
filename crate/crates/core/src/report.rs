//! Pass/fail reports for relation suites, shared by the verification
//! entry points and the CLI's JSON output.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub instance: String,
    pub status: Status,
    /// Informational entries record variants that are checked but not part
    /// of the exit criteria (e.g. a relation printed with an index slip).
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl RelationReport {
    pub fn pass(relation: impl Into<String>, instance: impl Into<String>) -> Self {
        RelationReport {
            relation: relation.into(),
            instance: instance.into(),
            status: Status::Pass,
            required: true,
            witness: None,
        }
    }

    pub fn fail(
        relation: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        RelationReport {
            relation: relation.into(),
            instance: instance.into(),
            status: Status::Fail,
            required: true,
            witness: Some(witness.into()),
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

/// All required entries pass.
pub fn all_required_pass(reports: &[RelationReport]) -> bool {
    reports
        .iter()
        .all(|r| !r.required || r.status == Status::Pass)
}

pub fn failures(reports: &[RelationReport]) -> Vec<&RelationReport> {
    reports
        .iter()
        .filter(|r| r.required && r.status == Status::Fail)
        .collect()
}

pub fn to_json(reports: &[RelationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("serializable")
}
