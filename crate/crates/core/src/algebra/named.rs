//! Built-in groups by name: `z<n>`, `klein4` (or `v4`), `s3`, `d<n>` (order
//! `2n`), and direct products joined by `x`, e.g. `z2xz3`.

use super::GroupTable;
use crate::error::{Error, Result};

fn factor(name: &str) -> Option<GroupTable> {
    let order = |s: &str| s.parse::<usize>().ok().filter(|&n| n > 0);
    match name {
        "klein4" | "v4" => Some(GroupTable::klein4()),
        "s3" => Some(GroupTable::symmetric3()),
        _ => {
            if let Some(n) = name.strip_prefix('z').and_then(order) {
                Some(GroupTable::cyclic(n))
            } else {
                name.strip_prefix('d').and_then(order).map(GroupTable::dihedral)
            }
        }
    }
}

pub fn named_group(name: &str) -> Result<GroupTable> {
    let lower = name.trim().to_ascii_lowercase();
    let mut parts = lower.split('x');
    let unknown = || Error::UnknownGroup(name.to_string());
    let first = parts.next().and_then(factor).ok_or_else(unknown)?;
    parts.try_fold(first, |g, p| {
        factor(p)
            .map(|h| GroupTable::direct_product(&g, &h))
            .ok_or_else(unknown)
    })
}

/// Lowercase, with aliases resolved; used as the fixture key.
pub fn canonical_group_name(name: &str) -> String {
    name.trim()
        .to_ascii_lowercase()
        .split('x')
        .map(|p| if p == "v4" { "klein4" } else { p })
        .collect::<Vec<_>>()
        .join("x")
}
