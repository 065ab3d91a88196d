//! Structured pass/fail reports shared by the validators and checkers.

use serde::Serialize;

/// One violated law, with a witness naming the failing instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub code: String,
    pub witness: String,
}

impl Violation {
    pub fn new(code: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            code: code.into(),
            witness: witness.into(),
        }
    }
}

/// Outcome of a validator or checker: empty violations means pass. Notes
/// carry caveats that do not affect the verdict.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, code: &str, witness: impl Into<String>) {
        self.violations.push(Violation::new(code, witness));
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        if self.violations.is_empty() {
            writeln!(f, "pass")
        } else {
            for v in &self.violations {
                writeln!(f, "{}: {}", v.code, v.witness)?;
            }
            Ok(())
        }
    }
}
