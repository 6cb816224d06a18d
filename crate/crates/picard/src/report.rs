//! Per-axiom verdicts.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub axiom: String,
    pub pass: bool,
    /// Present exactly when `pass` is false.
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub entries: Vec<Entry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record one axiom family. `failure` is the witness of the first violation found.
    pub fn record(&mut self, axiom: impl Into<String>, failure: Option<Vec<String>>) {
        let pass = failure.is_none();
        self.entries.push(Entry { axiom: axiom.into(), pass, witness: failure });
    }

    pub fn pass(&mut self, axiom: impl Into<String>) {
        self.record(axiom, None);
    }

    pub fn fail(&mut self, axiom: impl Into<String>, witness: Vec<String>) {
        self.record(axiom, Some(witness));
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// Prefix every axiom id, e.g. when nesting the additive report of a ring.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for e in &mut self.entries {
            e.axiom = format!("{prefix}{}", e.axiom);
        }
        self
    }

    pub fn sorted(mut self) -> Self {
        self.entries.sort_by(|a, b| a.axiom.cmp(&b.axiom));
        self
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn get(&self, axiom: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn failed(&self, axiom: &str) -> bool {
        self.get(axiom).map(|e| !e.pass).unwrap_or(false)
    }
}
