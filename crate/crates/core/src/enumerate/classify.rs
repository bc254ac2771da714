use serde::Serialize;

use super::EnumerationResult;
use crate::algebra::GroupTable;
use crate::error::Result;
use crate::report::Violation;

/// Which maps count as isomorphisms between trusses on the same group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Notion {
    /// Bijections preserving `◇` and `∘`: automorphisms of the group.
    Group,
    /// Bijections preserving the heap of `◇` and `∘`: maps `a ↦ g ◇ φ(a)`.
    Heap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classes {
    pub count: usize,
    /// Index into the sorted table list of each class's least member.
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
}

fn relabellings(group: &GroupTable, notion: Notion) -> Vec<Vec<usize>> {
    let auts = group.automorphisms();
    match notion {
        Notion::Group => auts,
        Notion::Heap => {
            let mut maps: Vec<Vec<usize>> = auts
                .iter()
                .flat_map(|phi| (0..group.size()).map(move |g| phi.iter().map(|&x| group.mul(g, x)).collect()))
                .collect();
            maps.sort();
            maps.dedup();
            maps
        }
    }
}

/// Partitions the result into orbits of `∘` under relabellings of the
/// carrier, recording them in the field for `notion`. Every relabelled table
/// must itself be in the result.
pub fn classify(result: &mut EnumerationResult, notion: Notion) -> Result<()> {
    let maps = relabellings(&result.group, notion);
    let tables = &result.tables;
    let mut class = vec![usize::MAX; tables.len()];
    let mut classes = Classes {
        count: 0,
        representatives: Vec::new(),
        sizes: Vec::new(),
    };
    for i in 0..tables.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let mut size = 0;
        for f in &maps {
            let image = tables[i].transport(f);
            let j = tables
                .binary_search_by(|t| t.entries().cmp(image.entries()))
                .map_err(|_| Violation {
                    check: "classify.closed_under_relabelling".into(),
                    witness: image.entries().to_vec(),
                })?;
            if class[j] == usize::MAX {
                class[j] = classes.count;
                size += 1;
            }
        }
        // tables are sorted and scanned in order, so i is the least member
        classes.representatives.push(i);
        classes.sizes.push(size);
        classes.count += 1;
    }
    match notion {
        Notion::Group => result.group_classes = Some(classes),
        Notion::Heap => result.heap_classes = Some(classes),
    }
    Ok(())
}
