//! Verdicts produced by the exhaustive checkers.

use std::fmt;

use serde::Serialize;

use crate::exactlin::{fmt_rat, Rat};

/// First violated instance of an identity.
///
/// `tuple` holds 0-based basis indices; it is rendered 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub lhs: Vec<Rat>,
    pub rhs: Vec<Rat>,
}

impl Witness {
    pub fn new(tuple: &[usize], lhs: Vec<Rat>, rhs: Vec<Rat>) -> Self {
        Witness { tuple: tuple.to_vec(), lhs, rhs }
    }

    pub fn scalar(tuple: &[usize], lhs: Rat, rhs: Rat) -> Self {
        Witness::new(tuple, vec![lhs], vec![rhs])
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.tuple.iter().map(|i| (i + 1).to_string()).collect();
        let l: Vec<String> = self.lhs.iter().map(fmt_rat).collect();
        let r: Vec<String> = self.rhs.iter().map(fmt_rat).collect();
        write!(f, "({}) lhs=[{}] rhs=[{}]", t.join(","), l.join(" "), r.join(" "))
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            tuple: Vec<usize>,
            lhs: Vec<String>,
            rhs: Vec<String>,
        }
        Repr {
            tuple: self.tuple.iter().map(|i| i + 1).collect(),
            lhs: self.lhs.iter().map(fmt_rat).collect(),
            rhs: self.rhs.iter().map(fmt_rat).collect(),
        }
        .serialize(s)
    }
}

/// Verdict of one identity over all enumerated instances. `passed` holds
/// exactly when `witness` is absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub checked: u64,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, checked: u64) -> Self {
        CheckReport { name: name.into(), passed: true, witness: None, checked }
    }

    pub fn fail(name: impl Into<String>, witness: Witness, checked: u64) -> Self {
        CheckReport { name: name.into(), passed: false, witness: Some(witness), checked }
    }

    pub fn from_result(name: impl Into<String>, checked: u64, witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => CheckReport::fail(name, w, checked),
            None => CheckReport::pass(name, checked),
        }
    }

    /// A yes/no fact with no tuple to point at (rank conditions and the like).
    pub fn fact(name: impl Into<String>, holds: bool) -> Self {
        if holds {
            CheckReport::pass(name, 1)
        } else {
            CheckReport::fail(name, Witness::new(&[], vec![], vec![]), 1)
        }
    }
}

/// Named list of clause verdicts with free-form notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub passed: bool,
    pub clauses: Vec<CheckReport>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), passed: true, clauses: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, clause: CheckReport) {
        self.passed &= clause.passed;
        self.clauses.push(clause);
    }

    /// Adds a clause that is reported but does not affect `passed`.
    pub fn push_info(&mut self, mut clause: CheckReport) {
        clause.name = format!("{} (informational)", clause.name);
        self.clauses.push(clause);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Appends every clause of `other`, prefixing names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.clauses {
            let informational = c.name.ends_with("(informational)");
            c.name = format!("{prefix}.{}", c.name);
            if informational {
                self.clauses.push(c);
            } else {
                self.push(c);
            }
        }
        if !other.passed {
            self.passed = false;
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }

    pub fn clause(&self, name: &str) -> Option<&CheckReport> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.clauses.iter().find(|c| !c.passed && !c.name.ends_with("(informational)"))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.passed { "PASS" } else { "FAIL" })?;
        for c in &self.clauses {
            write!(f, "  {:<40} {} ({} instances)", c.name, if c.passed { "pass" } else { "FAIL" }, c.checked)?;
            if let Some(w) = &c.witness {
                write!(f, " witness {w}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
