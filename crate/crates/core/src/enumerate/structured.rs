use rayon::prelude::*;

use super::{check_bound, EnumerationResult, Mode};
use crate::algebra::{GroupTable, MagmaTable};
use crate::error::Result;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    group: &'a GroupTable,
    ends: Vec<Vec<usize>>,
    /// `compose[i * m + j]` is the index of `ends[i] ∘ ends[j]`.
    compose: Vec<usize>,
}

#[derive(Clone)]
struct State {
    sigma: Vec<usize>,
    lambda: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(group: &'a GroupTable) -> Self {
        let ends = group.endomorphisms();
        let m = ends.len();
        let mut compose = Vec::with_capacity(m * m);
        for f in &ends {
            for g in &ends {
                let fg: Vec<usize> = g.iter().map(|&x| f[x]).collect();
                compose.push(ends.binary_search(&fg).expect("End(G) is closed under composition"));
            }
        }
        Self { group, ends, compose }
    }

    #[inline]
    fn circ(&self, s: &State, a: usize, b: usize) -> usize {
        self.group.mul(s.sigma[a], self.ends[s.lambda[a]][b])
    }

    /// Closes the partial assignment under the forcing rules
    /// `σ(a∘b) = σ(a) ◇ λ_a(σ(b))` and `λ_{a∘b} = λ_a λ_b`; false on conflict.
    fn propagate(&self, s: &mut State) -> bool {
        let n = self.group.size();
        let m = self.ends.len();
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..n {
                if s.sigma[a] == UNSET {
                    continue;
                }
                for b in 0..n {
                    if s.sigma[b] == UNSET {
                        continue;
                    }
                    let z = self.circ(s, a, b);
                    let sz = self.group.mul(s.sigma[a], self.ends[s.lambda[a]][s.sigma[b]]);
                    let lz = self.compose[s.lambda[a] * m + s.lambda[b]];
                    if s.sigma[z] == UNSET {
                        s.sigma[z] = sz;
                        s.lambda[z] = lz;
                        changed = true;
                    } else if s.sigma[z] != sz || s.lambda[z] != lz {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn assign(&self, s: &State, a: usize, sigma: usize, lambda: usize) -> Option<State> {
        let mut next = s.clone();
        next.sigma[a] = sigma;
        next.lambda[a] = lambda;
        self.propagate(&mut next).then_some(next)
    }

    fn choices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.group.size();
        (0..n).flat_map(move |x| (0..self.ends.len()).map(move |l| (x, l)))
    }

    fn extend(&self, s: State, out: &mut Vec<MagmaTable>) {
        match s.sigma.iter().position(|&x| x == UNSET) {
            None => out.push(MagmaTable::from_fn(self.group.size(), |a, b| self.circ(&s, a, b))),
            Some(a) => {
                for (x, l) in self.choices() {
                    if let Some(next) = self.assign(&s, a, x, l) {
                        self.extend(next, out);
                    }
                }
            }
        }
    }
}

/// Searches `(σ, λ)` with `λ` ranging over `End(A,◇)`, branching first on
/// `1◇` (in parallel) and propagating forced values. `bound` limits the
/// group order.
pub fn enumerate_structured(group: &GroupTable, bound: usize) -> Result<EnumerationResult> {
    let n = group.size();
    check_bound(n, bound, "pass a larger bound explicitly; the search grows very fast")?;
    let search = Search::new(group);
    let empty = State {
        sigma: vec![UNSET; n],
        lambda: vec![UNSET; n],
    };
    let first: Vec<(usize, usize)> = search.choices().collect();
    let tables: Vec<MagmaTable> = first
        .par_iter()
        .flat_map_iter(|&(x, l)| {
            let mut out = Vec::new();
            if let Some(s) = search.assign(&empty, group.identity(), x, l) {
                search.extend(s, &mut out);
            }
            out
        })
        .collect();
    let result = EnumerationResult::new(group.clone(), Mode::Structured, tables)?;
    // each table is re-verified as a truss
    result.trusses()?;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_naive;
    use super::*;

    #[test]
    fn agrees_with_naive_on_small_groups() {
        for n in 1..=3 {
            let g = GroupTable::cyclic(n);
            let a = enumerate_naive(&g).unwrap();
            let b = enumerate_structured(&g, 8).unwrap();
            assert_eq!(a.tables, b.tables, "Z/{n}");
        }
    }

    #[test]
    fn z4_count() {
        let r = enumerate_structured(&GroupTable::cyclic(4), 8).unwrap();
        assert_eq!(r.count, 172);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(enumerate_structured(&GroupTable::cyclic(5), 4).is_err());
    }
}
