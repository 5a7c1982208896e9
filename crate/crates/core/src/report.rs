//! Check reports: one record per axiom, with explicit violation witnesses.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::linalg::{format_rational, Vector};

/// Default number of witnesses kept per axiom.
pub const DEFAULT_MAX_WITNESSES: usize = 10;

/// Version tag written into machine-readable reports.
pub const REPORT_FORMAT_VERSION: &str = "bihomega-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Witnesses kept per axiom; at least one is always kept.
    pub max_witnesses: usize,
    /// Stop scanning an axiom at the first violation. The violation count is
    /// then a lower bound.
    pub stop_at_first: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            max_witnesses: DEFAULT_MAX_WITNESSES,
            stop_at_first: false,
        }
    }
}

impl CheckConfig {
    pub fn with_max_witnesses(max_witnesses: usize) -> Self {
        Self {
            max_witnesses: max_witnesses.max(1),
            ..Self::default()
        }
    }

    pub fn fast() -> Self {
        Self {
            max_witnesses: 1,
            stop_at_first: true,
        }
    }

    pub(crate) fn cap(&self) -> usize {
        self.max_witnesses.max(1)
    }
}

/// A concrete violation: semigroup indices, 0-based basis indices and both
/// evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub omega: Vec<usize>,
    pub basis: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

fn rational_strings(v: &Vector) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Witness", 4)?;
        s.serialize_field("omega", &self.omega)?;
        s.serialize_field("basis", &self.basis)?;
        s.serialize_field("lhs", &rational_strings(&self.lhs))?;
        s.serialize_field("rhs", &rational_strings(&self.rhs))?;
        s.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub axiom: String,
    pub passed: bool,
    /// Total number of violating cells (a lower bound under `stop_at_first`).
    pub violations: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn new(axiom: impl Into<String>) -> Self {
        Self {
            axiom: axiom.into(),
            passed: true,
            violations: 0,
            witnesses: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, witness: Witness, cap: usize) {
        self.violations += 1;
        self.passed = false;
        if self.witnesses.len() < cap {
            self.witnesses.push(witness);
        }
    }
}

/// The reports of every axiom a checker ran, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub subject: String,
    pub reports: Vec<CheckReport>,
}

impl Verdict {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            reports: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn push(&mut self, report: CheckReport) {
        self.reports.push(report);
    }

    pub fn extend(&mut self, other: Verdict) {
        self.reports.extend(other.reports);
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.passed)
    }

    pub fn first_witness(&self) -> Option<(&str, &Witness)> {
        self.failures()
            .find_map(|r| r.witnesses.first().map(|w| (r.axiom.as_str(), w)))
    }

    /// Keeps only the reports whose axiom name contains `needle`.
    pub fn filter_axiom(&self, needle: &str) -> Verdict {
        Verdict {
            subject: self.subject.clone(),
            reports: self
                .reports
                .iter()
                .filter(|r| r.axiom.contains(needle))
                .cloned()
                .collect(),
        }
    }
}
