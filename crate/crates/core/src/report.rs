use serde::{Deserialize, Serialize};

use crate::value::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked claim. For a two-sided claim the pass rule is
/// |computed - expected| <= tol * |expected| + computed.err + expected.err
/// (with tol absolute instead of relative when `absolute` is set); for a
/// one-sided claim the stated inequality must hold outright, error bounds
/// included. `margin` is the slack left, negative on failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub claim_id: String,
    pub description: String,
    pub computed: Value,
    pub expected: Value,
    pub tolerance: f64,
    pub absolute: bool,
    pub status: Status,
    pub margin: f64,
}

impl VerificationRecord {
    pub fn two_sided(
        claim_id: impl Into<String>,
        description: impl Into<String>,
        computed: Value,
        expected: Value,
        tolerance: f64,
    ) -> Self {
        Self::build(claim_id, description, computed, expected, tolerance, false)
    }

    pub fn two_sided_abs(
        claim_id: impl Into<String>,
        description: impl Into<String>,
        computed: Value,
        expected: Value,
        tolerance: f64,
    ) -> Self {
        Self::build(claim_id, description, computed, expected, tolerance, true)
    }

    fn build(
        claim_id: impl Into<String>,
        description: impl Into<String>,
        computed: Value,
        expected: Value,
        tolerance: f64,
        absolute: bool,
    ) -> Self {
        let scale = if absolute { 1.0 } else { expected.estimate.abs() };
        let allowed = tolerance * scale + computed.err + expected.err;
        let diff = (computed.estimate - expected.estimate).abs();
        let margin = allowed - diff;
        VerificationRecord {
            claim_id: claim_id.into(),
            description: description.into(),
            computed,
            expected,
            tolerance,
            absolute,
            status: if diff <= allowed { Status::Pass } else { Status::Fail },
            margin,
        }
    }

    /// One-sided claim `computed < expected`, strict, error bounds included.
    pub fn strictly_below(
        claim_id: impl Into<String>,
        description: impl Into<String>,
        computed: Value,
        expected: Value,
    ) -> Self {
        let margin = (expected.estimate - expected.err) - (computed.estimate + computed.err);
        VerificationRecord {
            claim_id: claim_id.into(),
            description: description.into(),
            computed,
            expected,
            tolerance: 0.0,
            absolute: true,
            status: if margin > 0.0 { Status::Pass } else { Status::Fail },
            margin,
        }
    }

    /// One-sided claim `computed > expected`, strict, error bounds included.
    pub fn strictly_above(
        claim_id: impl Into<String>,
        description: impl Into<String>,
        computed: Value,
        expected: Value,
    ) -> Self {
        let margin = (computed.estimate - computed.err) - (expected.estimate + expected.err);
        VerificationRecord {
            claim_id: claim_id.into(),
            description: description.into(),
            computed,
            expected,
            tolerance: 0.0,
            absolute: true,
            status: if margin > 0.0 { Status::Pass } else { Status::Fail },
            margin,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One fixed-format report line; stable across runs.
    pub fn line(&self) -> String {
        format!(
            "{} {} computed={:.9e} expected={:.9e} tol={:.3e}{} margin={:.3e}  {}",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            self.claim_id,
            self.computed.estimate,
            self.expected.estimate,
            self.tolerance,
            if self.absolute { "(abs)" } else { "" },
            self.margin,
            self.description,
        )
    }
}

/// A cell of a report table: either text or an error-tracked number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Text(String),
    Num(Value),
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }
}

/// An ordered table reproducing one of the reference tables, with per-row
/// provenance identifiers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportTable {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub provenance: Vec<String>,
}

impl ReportTable {
    pub fn new(name: impl Into<String>, headers: Vec<&str>) -> Self {
        ReportTable {
            name: name.into(),
            headers: headers.into_iter().map(String::from).collect(),
            rows: Vec::new(),
            provenance: Vec::new(),
        }
    }

    pub fn push_row(&mut self, cells: Vec<Cell>, provenance: impl Into<String>) {
        assert_eq!(cells.len(), self.headers.len(), "row width mismatch");
        self.rows.push(cells);
        self.provenance.push(provenance.into());
    }
}
