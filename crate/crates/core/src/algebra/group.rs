use std::collections::VecDeque;

use super::{HeapView, MagmaTable};
use crate::error::GroupError;

/// A finite group as a validated Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    op: MagmaTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates `op` as a group. Associativity is checked first, then the
    /// identity, then inverses.
    pub fn from_magma(op: MagmaTable) -> Result<Self, GroupError> {
        op.associativity().into_result().map_err(GroupError::NonAssociative)?;
        let identity = op.identity().ok_or(GroupError::NoIdentity)?;
        let n = op.size();
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| op.op(a, b) == identity && op.op(b, a) == identity)
                    .ok_or(GroupError::NoInverse(a))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { op, identity, inverse })
    }

    pub(crate) fn from_fn(n: usize, f: impl FnMut(usize, usize) -> usize) -> Self {
        Self::from_magma(MagmaTable::from_fn(n, f)).expect("constructor produced a group")
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// The Klein four-group `Z/2 × Z/2`, elements encoded as two-bit masks.
    pub fn klein4() -> Self {
        Self::from_fn(4, |a, b| a ^ b)
    }

    /// The symmetric group on three letters. Elements are the permutations of
    /// `{0,1,2}` in lexicographic order (index 0 is the identity), multiplied
    /// by composition `(p·q)(x) = p(q(x))`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        Self::from_fn(6, |p, q| {
            let c = [perms[p][perms[q][0]], perms[p][perms[q][1]], perms[p][perms[q][2]]];
            perms.iter().position(|x| *x == c).unwrap()
        })
    }

    /// The dihedral group of order `2n`: element `k + n·j` is `rᵏsʲ`, with
    /// `s r s = r⁻¹`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_fn(2 * n, |x, y| {
            let (k1, j1) = (x % n, x / n);
            let (k2, j2) = (y % n, y / n);
            let k = if j1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
            k + n * ((j1 + j2) % 2)
        })
    }

    /// Direct product; `(g, h)` is encoded as `g·|H| + h`.
    pub fn direct_product(g: &Self, h: &Self) -> Self {
        let m = h.size();
        Self::from_fn(g.size() * m, |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.op.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op.op(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &MagmaTable {
        &self.op
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn into_table(self) -> MagmaTable {
        self.op
    }

    pub fn heap(&self) -> HeapView<'_> {
        HeapView::new(self)
    }

    pub fn is_abelian(&self) -> bool {
        self.op.is_commutative()
    }

    /// `a ◇ b⁻¹ ◇ c`
    #[inline]
    pub fn bracket(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, self.inv(b)), c)
    }

    pub fn order_of(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Opposite group `a ·ᵒᵖ b = b · a`; same identity and inverses.
    pub fn opposite(&self) -> Self {
        Self {
            op: self.op.transpose(),
            identity: self.identity,
            inverse: self.inverse.clone(),
        }
    }

    /// The group `a ◇ₑ b = a ◇ e⁻¹ ◇ b` induced on the heap at base point `e`.
    /// Its identity is `e` and the inverse of `a` is `e ◇ a⁻¹ ◇ e`.
    pub fn at_base_point(&self, e: usize) -> Self {
        let op = MagmaTable::from_fn(self.size(), |a, b| self.bracket(a, e, b));
        let inverse = (0..self.size()).map(|a| self.bracket(e, a, e)).collect();
        Self {
            op,
            identity: e,
            inverse,
        }
    }

    /// A generating set chosen greedily: repeatedly add the least element not
    /// yet generated.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.size();
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        while let Some(g) = (0..n).find(|&a| !reached[a]) {
            gens.push(g);
            reached = self.closure(&gens);
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut reached = vec![false; self.size()];
        reached[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !reached[y] {
                    reached[y] = true;
                    queue.push_back(y);
                }
            }
        }
        reached
    }

    /// Every group homomorphism `self → target`, in lexicographic order of the
    /// image list.
    pub fn homomorphisms_to(&self, target: &GroupTable) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let mut images = vec![0; gens.len()];
        self.extend_homs(target, &gens, &mut images, 0, &mut out);
        out.sort();
        out
    }

    fn extend_homs(
        &self,
        target: &GroupTable,
        gens: &[usize],
        images: &mut Vec<usize>,
        depth: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == gens.len() {
            if let Some(map) = self.hom_from_generators(target, gens, images) {
                out.push(map);
            }
            return;
        }
        let order = self.order_of(gens[depth]);
        for y in 0..target.size() {
            // images must have order dividing the generator's order
            if !order.is_multiple_of(target.order_of(y)) {
                continue;
            }
            images[depth] = y;
            self.extend_homs(target, gens, images, depth + 1, out);
        }
    }

    fn hom_from_generators(&self, target: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut map = vec![UNSET; self.size()];
        map[self.identity] = target.identity();
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = target.mul(map[x], img);
                if map[y] == UNSET {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        debug_assert!(map.iter().all(|&v| v != UNSET));
        Some(map)
    }

    pub fn endomorphisms(&self) -> Vec<Vec<usize>> {
        self.homomorphisms_to(self)
    }

    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        super::find_isomorphisms(self, self)
    }

    /// Checks `f(a·b) = f(a)·f(b)` for all pairs, returning the first failing pair.
    pub fn hom_witness(&self, target: &GroupTable, f: &[usize]) -> Option<[usize; 2]> {
        crate::scan::scan::<2>(self.size(), |[a, b]| f[self.mul(a, b)] == target.mul(f[a], f[b])).witness
    }

    /// Subgroup test for a membership mask (nonempty and closed under `a ◇ b⁻¹`).
    pub fn is_subgroup(&self, mask: &[bool]) -> bool {
        let n = self.size();
        mask.iter().any(|&m| m)
            && (0..n).all(|a| !mask[a] || (0..n).all(|b| !mask[b] || mask[self.mul(a, self.inv(b))]))
    }

    pub fn is_normal_subgroup(&self, mask: &[bool]) -> bool {
        let n = self.size();
        self.is_subgroup(mask)
            && (0..n).all(|g| (0..n).all(|h| !mask[h] || mask[self.mul(self.mul(g, h), self.inv(g))]))
    }
}
