use super::GroupTable;
use crate::scan::{scan, Scan};

/// The ternary heap `[a,b,c] = a ◇ b⁻¹ ◇ c` of a group.
#[derive(Clone, Copy, Debug)]
pub struct HeapView<'a> {
    group: &'a GroupTable,
}

impl<'a> HeapView<'a> {
    pub fn new(group: &'a GroupTable) -> Self {
        Self { group }
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize, c: usize) -> usize {
        self.group.bracket(a, b, c)
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    /// `[[a1,a2,a3],a4,a5] = [a1,a2,[a3,a4,a5]]` over 5-tuples.
    pub fn para_associativity(&self) -> Scan<5> {
        scan(self.size(), |[a1, a2, a3, a4, a5]| {
            self.op(self.op(a1, a2, a3), a4, a5) == self.op(a1, a2, self.op(a3, a4, a5))
        })
    }

    /// `[a,b,b] = a = [b,b,a]` over pairs.
    pub fn malcev(&self) -> Scan<2> {
        scan(self.size(), |[a, b]| self.op(a, b, b) == a && self.op(b, b, a) == a)
    }

    /// `f([a,b,c]) = [f(a),f(b),f(c)]` into another heap.
    pub fn morphism_witness(&self, target: &HeapView<'_>, f: &[usize]) -> Option<[usize; 3]> {
        scan(self.size(), |[a, b, c]| {
            f[self.op(a, b, c)] == target.op(f[a], f[b], f[c])
        })
        .witness
    }
}
