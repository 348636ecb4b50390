//! Verification records and the serializable report.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Version tag written into every serialized report.
pub const SCHEMA_VERSION: &str = "heiscat-report/1";

/// Parameters a record was produced with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<u32>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub extra: BTreeMap<String, String>,
}

/// Outcome of one suite or computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub suite: String,
    pub params: Params,
    pub holds: bool,
    pub checked_dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_counterexample: Option<String>,
}

impl Record {
    pub fn new(suite: impl Into<String>) -> Self {
        Record {
            suite: suite.into(),
            params: Params::default(),
            holds: true,
            checked_dimension: 0,
            elapsed_ms: None,
            first_counterexample: None,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.params.n = Some(n);
        self
    }

    pub fn with_ell(mut self, ell: u32) -> Self {
        self.params.ell = Some(ell);
        self
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.extra.insert(key.to_string(), value.to_string());
        self
    }

    /// Records one checked instance; the first failure's description is kept.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked_dimension += 1;
        if !ok {
            if self.holds {
                self.first_counterexample = Some(describe());
            }
            self.holds = false;
        }
    }

    /// Folds in a batch of checks already counted elsewhere.
    pub fn absorb(&mut self, checked: u64, failure: Option<String>) {
        self.checked_dimension += checked;
        if let Some(f) = failure {
            if self.holds {
                self.first_counterexample = Some(f);
            }
            self.holds = false;
        }
    }

    pub fn fail(&mut self, why: impl Into<String>) {
        if self.holds {
            self.first_counterexample = Some(why.into());
        }
        self.holds = false;
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        self
    }

    /// Sort key: suite name, then rank, then group order.
    pub fn key(&self) -> (&str, Option<usize>, Option<u32>, &BTreeMap<String, String>) {
        (&self.suite, self.params.n, self.params.ell, &self.params.extra)
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.suite)?;
        if let Some(n) = self.params.n {
            write!(f, " n={n}")?;
        }
        if let Some(l) = self.params.ell {
            write!(f, " ell={l}")?;
        }
        for (k, v) in &self.params.extra {
            write!(f, " {k}={v}")?;
        }
        write!(f, " checked={}", self.checked_dimension)?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, " ({ms:.1} ms)")?;
        }
        if let Some(c) = &self.first_counterexample {
            write!(f, "\n    counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Ordered records plus the configuration that produced them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    #[serde(default)]
    pub config: BTreeMap<String, String>,
    pub records: Vec<Record>,
}

impl Default for Report {
    fn default() -> Self {
        Report { schema: SCHEMA_VERSION.to_string(), config: BTreeMap::new(), records: Vec::new() }
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(r: Record) -> Self {
        let mut rep = Self::default();
        rep.records.push(r);
        rep
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn holds(&self) -> bool {
        self.records.iter().all(|r| r.holds)
    }

    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| a.key().cmp(&b.key()));
    }

    /// Drops timing so that output is byte-deterministic.
    pub fn strip_timing(&mut self) {
        for r in &mut self.records {
            r.elapsed_ms = None;
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.holds)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} records, {} failed", self.records.len(), failed)
    }
}
