//! Plain-text check reports: one line per checked law or condition,
//! prefixed `PASS`/`FAIL`, in deterministic order. `VIOLATED` marks a
//! documented deviation that a suite asserts on purpose; it does not count
//! as a failure.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub status: Status,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn check(&mut self, ok: bool, message: impl Into<String>) {
        self.entries.push(Entry {
            status: if ok { Status::Pass } else { Status::Fail },
            message: message.into(),
        });
    }

    pub fn pass(&mut self, message: impl Into<String>) {
        self.check(true, message);
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        self.check(false, message);
    }

    /// Record an expected, documented law violation.
    pub fn violated(&mut self, message: impl Into<String>) {
        self.entries.push(Entry {
            status: Status::Violated,
            message: message.into(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn is_ok(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let prefix = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Violated => "VIOLATED",
            };
            writeln!(f, "{} {}", prefix, e.message)?;
        }
        Ok(())
    }
}
