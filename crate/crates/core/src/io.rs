//! JSON file formats shared by the library and the command line.
//!
//! A truss file is `{"size": n, "diamond": [[...]], "circ": [[...]]}` with
//! optional `"side"` (`"left"`, `"right"` or `"two-sided"`, default left) and
//! optional `"sigma"`, which is checked against the derived cocycle.

use serde::{Deserialize, Serialize};

use crate::algebra::{GroupTable, MagmaTable};
use crate::error::{Error, Result};
use crate::truss::{Side, SkewTruss};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrussFile {
    pub size: usize,
    pub diamond: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
}

impl TrussFile {
    pub fn into_truss(self) -> Result<SkewTruss> {
        let group = GroupTable::from_magma(MagmaTable::from_rows(self.size, &self.diamond)?)?;
        let circ = MagmaTable::from_rows(self.size, &self.circ)?;
        let t = SkewTruss::new(group, circ, self.side.unwrap_or_default())?;
        if let Some(sigma) = &self.sigma {
            t.check_declared_sigma(sigma)?;
        }
        Ok(t)
    }
}

impl From<&SkewTruss> for TrussFile {
    fn from(t: &SkewTruss) -> Self {
        Self {
            size: t.size(),
            diamond: t.group().table().rows(),
            circ: t.circ_table().rows(),
            side: Some(t.side()),
            sigma: Some(t.cocycle().to_vec()),
        }
    }
}

pub fn truss_from_json(text: &str) -> Result<SkewTruss> {
    serde_json::from_str::<TrussFile>(text)?.into_truss()
}

pub fn truss_to_json(t: &SkewTruss) -> String {
    serde_json::to_string(&TrussFile::from(t)).expect("truss files always serialize")
}

/// A carrier map `{"map": [...]}`, optionally naming the truss files of its
/// domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub map: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<String>,
}

pub fn map_from_json(text: &str) -> Result<MapFile> {
    Ok(serde_json::from_str(text)?)
}

/// Parses a magma file `{"size": n, "table": [[...]]}`.
pub fn magma_from_json(text: &str) -> Result<MagmaTable> {
    serde_json::from_str(text).map_err(Error::from)
}
