use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::scan::{scan, Scan};

/// A binary operation on `0..n`, stored row-major.
///
/// No law is implied by the type; every entry is guaranteed to be in range.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MagmaFile", into = "MagmaFile")]
pub struct MagmaTable {
    size: usize,
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MagmaFile {
    size: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<MagmaFile> for MagmaTable {
    type Error = AlgebraError;

    fn try_from(f: MagmaFile) -> Result<Self, Self::Error> {
        Self::from_rows(f.size, &f.table)
    }
}

impl From<MagmaTable> for MagmaFile {
    fn from(m: MagmaTable) -> Self {
        MagmaFile {
            size: m.size,
            table: m.rows(),
        }
    }
}

impl MagmaTable {
    pub fn new(size: usize, entries: Vec<usize>) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        if entries.len() != size * size {
            return Err(AlgebraError::RowCount {
                size,
                rows: entries.len() / size,
            });
        }
        if let Some(i) = entries.iter().position(|&v| v >= size) {
            return Err(AlgebraError::EntryOutOfRange {
                row: i / size,
                col: i % size,
                value: entries[i],
                size,
            });
        }
        Ok(Self { size, entries })
    }

    pub fn from_rows(size: usize, rows: &[Vec<usize>]) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        if rows.len() != size {
            return Err(AlgebraError::RowCount { size, rows: rows.len() });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(AlgebraError::RowLength {
                    row,
                    len: r.len(),
                    size,
                });
            }
        }
        Self::new(size, rows.concat())
    }

    /// Tabulates `f`.
    ///
    /// # Panics
    /// If `f` returns a value outside `0..size`.
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                let v = f(a, b);
                assert!(v < size, "from_fn produced {v} for ({a},{b}) with size {size}");
                entries.push(v);
            }
        }
        Self { size, entries }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.size + b]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// The opposite operation `a ·ᵒᵖ b = b · a`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |a, b| self.op(b, a))
    }

    pub fn associativity(&self) -> Scan<3> {
        scan(self.size, |[a, b, c]| {
            self.op(self.op(a, b), c) == self.op(a, self.op(b, c))
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity().holds()
    }

    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        (0..self.size)
            .flat_map(|a| (a + 1..self.size).map(move |b| (a, b)))
            .find(|&(a, b)| self.op(a, b) != self.op(b, a))
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// Elements `e` with `a·e = a` for every `a`.
    pub fn right_identities(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&e| (0..self.size).all(|a| self.op(a, e) == a))
            .collect()
    }

    pub fn left_identities(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&e| (0..self.size).all(|a| self.op(e, a) == a))
            .collect()
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|a| self.op(a, e) == a && self.op(e, a) == a))
    }

    /// First element that fails to commute with `e`, if any.
    pub fn centrality_witness(&self, e: usize) -> Option<usize> {
        (0..self.size).find(|&a| self.op(a, e) != self.op(e, a))
    }

    pub fn is_central(&self, e: usize) -> bool {
        self.centrality_witness(e).is_none()
    }

    pub fn centre(&self) -> Vec<usize> {
        (0..self.size).filter(|&e| self.is_central(e)).collect()
    }

    /// Transports the operation along a bijection `f`: the result satisfies
    /// `result(f(a), f(b)) = f(a·b)`.
    pub fn transport(&self, f: &[usize]) -> Self {
        let inv = super::invert(f);
        Self::from_fn(self.size, |x, y| f[self.op(inv[x], inv[y])])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> MagmaTable {
        MagmaTable::from_rows(2, &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn z2_addition_is_a_semigroup() {
        assert!(z2().is_associative());
    }

    #[test]
    fn left_projection_is_a_semigroup() {
        let m = MagmaTable::from_fn(2, |a, _| a);
        assert!(m.is_associative());
    }

    #[test]
    fn non_associative_table_has_witness() {
        // oracle: scan all eight triples of [[0,1],[0,0]] by hand
        let m = MagmaTable::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap();
        let mut bad = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let rows = [[0, 1], [0, 0]];
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        bad.push([a, b, c]);
                    }
                }
            }
        }
        assert!(!bad.is_empty());
        assert_eq!(m.associativity().witness, Some(bad[0]));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert_eq!(
            MagmaTable::from_rows(2, &[vec![0, 2], vec![1, 0]]),
            Err(AlgebraError::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                size: 2
            })
        );
        assert!(matches!(
            MagmaTable::from_rows(2, &[vec![0, 1]]),
            Err(AlgebraError::RowCount { .. })
        ));
        assert!(matches!(
            MagmaTable::from_rows(2, &[vec![0, 1], vec![1]]),
            Err(AlgebraError::RowLength { row: 1, .. })
        ));
        assert_eq!(MagmaTable::new(0, vec![]), Err(AlgebraError::Empty));
    }

    #[test]
    fn json_round_trip() {
        let json = serde_json::to_string(&z2()).unwrap();
        assert_eq!(json, r#"{"size":2,"table":[[0,1],[1,0]]}"#);
        let back: MagmaTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z2());
        assert!(serde_json::from_str::<MagmaTable>(r#"{"size":2,"table":[[0,5],[1,0]]}"#).is_err());
    }
}
