//! Pass/fail reports produced by the verification routines.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one named check. A report fails as soon as one witness is
/// recorded; `cases` counts the individual instances examined.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    pub cases: u64,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            status: Status::Pass,
            cases: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, witness: Value) {
        self.status = Status::Fail;
        self.witnesses.push(witness);
    }

    /// Counts one case and fails with `witness` unless `ok`.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.case();
        if !ok {
            self.fail(witness());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Folds another report's cases and witnesses into this one.
    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        if !other.passed() {
            self.status = Status::Fail;
        }
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} ({} cases", self.check, self.cases)?;
        if !self.witnesses.is_empty() {
            write!(f, ", {} witnesses", self.witnesses.len())?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn fails_on_first_witness() {
        let mut r = Report::new("demo");
        r.expect(true, || json!(null));
        assert!(r.passed());
        r.expect(false, || json!({"x": 1}));
        assert!(!r.passed());
        assert_eq!(r.cases, 2);
        assert_eq!(r.to_string(), "FAIL demo (2 cases, 1 witnesses)");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(Report::new("tails")).unwrap();
        assert_eq!(
            v,
            json!({"check": "tails", "status": "pass", "cases": 0, "witnesses": []})
        );
    }
}
