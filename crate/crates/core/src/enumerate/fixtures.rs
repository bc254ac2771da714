use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::algebra::canonical_group_name;
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../fixtures/counts.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinnedCounts {
    pub trusses: usize,
    pub group_classes: usize,
    pub heap_classes: usize,
}

#[derive(Deserialize)]
struct CountsFile {
    #[serde(rename = "_comment", default)]
    _comment: String,
    #[serde(flatten)]
    counts: BTreeMap<String, PinnedCounts>,
}

/// Regression counts for a named group. Read from `counts.json` in the
/// directory named by `TRUSSLAB_FIXTURES` when set, otherwise from the copy
/// compiled into the library.
pub fn pinned_counts(group: &str) -> Result<Option<PinnedCounts>> {
    let (path, text) = match std::env::var_os("TRUSSLAB_FIXTURES") {
        Some(dir) => {
            let path = PathBuf::from(dir).join("counts.json");
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Fixture {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            (path.display().to_string(), text)
        }
        None => ("<built-in>".to_string(), BUILTIN.to_string()),
    };
    let file: CountsFile = serde_json::from_str(&text).map_err(|e| Error::Fixture {
        path,
        message: e.to_string(),
    })?;
    Ok(file.counts.get(&canonical_group_name(group)).copied())
}
