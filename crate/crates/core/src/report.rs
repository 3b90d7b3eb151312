//! Pass/fail reports for axiom and lemma checks.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub passed: bool,
    /// First counterexample found, if any.
    pub witness: Option<String>,
    pub cases: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn pass(&mut self, name: &str, cases: usize) {
        self.push(Entry {
            name: name.to_string(),
            passed: true,
            witness: None,
            cases,
        });
    }

    pub fn fail(&mut self, name: &str, witness: String) {
        self.push(Entry {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
            cases: 0,
        });
    }

    /// Records `name` as passed unless `witness` holds a counterexample.
    pub fn record(&mut self, name: &str, cases: usize, witness: Option<String>) {
        match witness {
            None => self.pass(name, cases),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = if e.passed { "pass" } else { "FAIL" };
            write!(f, "{status:4} {}", e.name)?;
            if let Some(w) = &e.witness {
                write!(f, "  [{w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
