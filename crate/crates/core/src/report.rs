//! Named check results with witnesses.

use serde::Serialize;
use thiserror::Error;

use crate::scan::Scan;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A failed consistency check. These indicate a bug, not bad input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{check} fails at {witness:?}")]
pub struct Violation {
    pub check: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn record<const K: usize>(&mut self, name: impl Into<String>, scan: Scan<K>) -> bool {
        let holds = scan.holds();
        self.checks.push(Check {
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            cases: scan.cases,
            witness: scan.witness.map(|w| w.to_vec()),
            note: (!scan.exhaustive).then(|| "sampled".to_string()),
        });
        holds
    }

    /// Scans all `K`-tuples over `0..n` and records the outcome.
    pub fn forall<const K: usize>(
        &mut self,
        name: impl Into<String>,
        n: usize,
        holds: impl FnMut([usize; K]) -> bool,
    ) -> bool {
        self.record(name, crate::scan::scan(n, holds))
    }

    pub fn assert(&mut self, name: impl Into<String>, holds: bool, witness: Vec<usize>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            cases: 1,
            witness: (!holds).then_some(witness),
            note: None,
        });
        holds
    }

    /// Records `count` independent trials, the first failing one as witness.
    pub fn trials(&mut self, name: impl Into<String>, count: u64, failure: Option<usize>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            status: if failure.is_none() { Status::Pass } else { Status::Fail },
            cases: count,
            witness: failure.map(|i| vec![i]),
            note: None,
        });
        failure.is_none()
    }

    pub fn skip(&mut self, name: impl Into<String>, note: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skipped,
            cases: 0,
            witness: None,
            note: Some(note.into()),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    /// Turns the first failing check into a [`Violation`].
    pub fn into_result(self) -> Result<Report, Violation> {
        match self.first_failure() {
            None => Ok(self),
            Some(c) => Err(Violation {
                check: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_becomes_violation() {
        let mut r = Report::new();
        r.forall::<2>("sum", 3, |[a, b]| a + b < 4);
        r.skip("other", "not applicable");
        assert!(!r.ok());
        let v = r.into_result().unwrap_err();
        assert_eq!(v.check, "sum");
        assert_eq!(v.witness, vec![2, 2]);
    }
}
