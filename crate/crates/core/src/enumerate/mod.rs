//! All left trusses on a given finite group, and their isomorphism classes.
//!
//! [`enumerate_naive`] tries every binary operation and is the ground truth
//! for tiny groups. [`enumerate_structured`] searches cocycle/action pairs
//! `(σ, λ)` with `a∘b = σ(a) ◇ λ_a(b)`, where `∘` is associative exactly when
//! `σ(a∘b) = σ(a) ◇ λ_a(σ(b))` and `λ_{a∘b} = λ_a λ_b`.

mod classify;
mod fixtures;
mod structured;

pub use classify::{classify, Classes, Notion};
pub use fixtures::{pinned_counts, PinnedCounts};
pub use structured::enumerate_structured;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{GroupTable, MagmaTable};
use crate::error::{Error, Result};
use crate::report::Violation;
use crate::truss::{left_cocycle, left_law, Side, SkewTruss};

/// Largest group accepted by [`enumerate_naive`].
pub const NAIVE_BOUND: usize = 3;
/// Default largest group accepted by [`enumerate_structured`].
pub const STRUCTURED_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Naive,
    Structured,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationResult {
    #[serde(skip)]
    pub group: GroupTable,
    pub size: usize,
    pub mode: Mode,
    pub count: usize,
    /// The `∘` tables, sorted lexicographically by their row-major entries.
    #[serde(serialize_with = "as_rows")]
    pub tables: Vec<MagmaTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_classes: Option<Classes>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heap_classes: Option<Classes>,
}

fn as_rows<S: Serializer>(tables: &[MagmaTable], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(tables.iter().map(MagmaTable::rows))
}

impl EnumerationResult {
    pub(crate) fn new(group: GroupTable, mode: Mode, mut tables: Vec<MagmaTable>) -> Result<Self> {
        tables.sort_unstable_by(|a, b| a.entries().cmp(b.entries()));
        if let Some(i) = (1..tables.len()).find(|&i| tables[i] == tables[i - 1]) {
            // distinct (σ, λ) pairs must give distinct tables
            return Err(Violation {
                check: "enumeration.injective".into(),
                witness: tables[i].entries().to_vec(),
            }
            .into());
        }
        Ok(Self {
            size: group.size(),
            group,
            mode,
            count: tables.len(),
            tables,
            group_classes: None,
            heap_classes: None,
        })
    }

    /// The enumerated trusses, re-verified.
    pub fn trusses(&self) -> Result<Vec<SkewTruss>> {
        self.tables
            .iter()
            .map(|c| SkewTruss::new(self.group.clone(), c.clone(), Side::Left))
            .collect()
    }

    pub fn contains(&self, circ: &MagmaTable) -> bool {
        self.tables
            .binary_search_by(|t| t.entries().cmp(circ.entries()))
            .is_ok()
    }
}

fn check_bound(size: usize, bound: usize, advice: &'static str) -> Result<()> {
    if size > bound {
        Err(Error::TooLarge { size, bound, advice })
    } else {
        Ok(())
    }
}

/// Every one of the `n^(n²)` operations, filtered by associativity and the
/// left law. Only for `n ≤ 3`.
pub fn enumerate_naive(group: &GroupTable) -> Result<EnumerationResult> {
    let n = group.size();
    check_bound(n, NAIVE_BOUND, "use the structured mode for larger groups")?;
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    let tables = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut c = code;
            let entries = (0..cells)
                .map(|_| {
                    let d = (c % n as u64) as usize;
                    c /= n as u64;
                    d
                })
                .collect();
            let circ = MagmaTable::new(n, entries).ok()?;
            if !circ.is_associative() {
                return None;
            }
            let sigma = left_cocycle(group, &circ);
            left_law(group, &circ, &sigma).holds().then_some(circ)
        })
        .collect();
    EnumerationResult::new(group.clone(), Mode::Naive, tables)
}
