use super::{GroupTable, MagmaTable};
use crate::error::AlgebraError;

/// Checks that `f` maps `0..domain` into `0..codomain`.
pub fn validate_map(f: &[usize], domain: usize, codomain: usize) -> Result<(), AlgebraError> {
    if f.len() != domain {
        return Err(AlgebraError::MapLength {
            len: f.len(),
            size: domain,
        });
    }
    match f.iter().position(|&v| v >= codomain) {
        Some(index) => Err(AlgebraError::MapOutOfRange {
            index,
            value: f[index],
            size: codomain,
        }),
        None => Ok(()),
    }
}

pub fn is_bijection(f: &[usize]) -> Result<(), AlgebraError> {
    validate_map(f, f.len(), f.len())?;
    let mut seen = vec![false; f.len()];
    for &v in f {
        if std::mem::replace(&mut seen[v], true) {
            return Err(AlgebraError::NotBijective { value: v });
        }
    }
    Ok(())
}

/// Inverse of a permutation of `0..n`. The caller guarantees bijectivity.
pub fn invert(f: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; f.len()];
    for (a, &b) in f.iter().enumerate() {
        inv[b] = a;
    }
    inv
}

/// All group isomorphisms `g1 → g2`. Empty when the orders differ.
pub fn find_isomorphisms(g1: &GroupTable, g2: &GroupTable) -> Vec<Vec<usize>> {
    if g1.size() != g2.size() {
        return Vec::new();
    }
    g1.homomorphisms_to(g2)
        .into_iter()
        .filter(|f| is_bijection(f).is_ok())
        .collect()
}

/// All bijections `f` of `0..n` with `f(x·y) = f(x)∗f(y)` for every pair of
/// operations `(·, ∗)` in `ops`, found by backtracking with partial checks.
pub fn find_bijections(n: usize, ops: &[(&MagmaTable, &MagmaTable)]) -> Vec<Vec<usize>> {
    debug_assert!(ops.iter().all(|(a, b)| a.size() == n && b.size() == n));
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(n, ops, 0, &mut map, &mut used, &mut out);
    out
}

fn extend(
    n: usize,
    ops: &[(&MagmaTable, &MagmaTable)],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if k == n {
        out.push(map.clone());
        return;
    }
    for y in 0..n {
        if used[y] {
            continue;
        }
        map[k] = y;
        // only pairs involving the newly assigned element need checking
        let consistent = ops.iter().all(|(src, dst)| {
            (0..=k).all(|x| {
                [(x, k), (k, x)].iter().all(|&(a, b)| {
                    let p = src.op(a, b);
                    p > k || map[p] == dst.op(map[a], map[b])
                })
            })
        });
        if consistent {
            used[y] = true;
            extend(n, ops, k + 1, map, used, out);
            used[y] = false;
        }
    }
    map[k] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn brute_force_isos(g1: &GroupTable, g2: &GroupTable) -> Vec<Vec<usize>> {
        let n = g1.size();
        (0..n)
            .permutations(n)
            .filter(|f| g1.hom_witness(g2, f).is_none())
            .sorted()
            .collect()
    }

    #[test]
    fn z2_has_only_the_identity_automorphism() {
        let g = GroupTable::cyclic(2);
        assert_eq!(find_isomorphisms(&g, &g), vec![vec![0, 1]]);
    }

    #[test]
    fn z4_and_klein_are_not_isomorphic() {
        assert!(find_isomorphisms(&GroupTable::cyclic(4), &GroupTable::klein4()).is_empty());
        assert!(find_isomorphisms(&GroupTable::cyclic(4), &GroupTable::cyclic(3)).is_empty());
    }

    #[test]
    fn z3_automorphisms_match_brute_force() {
        let g = GroupTable::cyclic(3);
        let found = find_isomorphisms(&g, &g);
        assert_eq!(found.len(), 2);
        assert_eq!(found, brute_force_isos(&g, &g));
    }

    #[test]
    fn backtracking_agrees_with_brute_force() {
        for (a, b) in [
            (GroupTable::symmetric3(), GroupTable::dihedral(3)),
            (GroupTable::klein4(), GroupTable::klein4()),
            (GroupTable::cyclic(6), GroupTable::cyclic(6)),
        ] {
            let mut bt = find_bijections(a.size(), &[(a.table(), b.table())]);
            bt.sort();
            assert_eq!(bt, brute_force_isos(&a, &b));
            assert_eq!(find_isomorphisms(&a, &b), bt);
        }
    }

    #[test]
    fn isomorphisms_closed_under_automorphisms() {
        let (g1, g2) = (GroupTable::symmetric3(), GroupTable::dihedral(3));
        let isos = find_isomorphisms(&g1, &g2);
        for f in &isos {
            for alpha in g2.automorphisms() {
                let composed: Vec<usize> = f.iter().map(|&x| alpha[x]).collect();
                assert!(isos.contains(&composed));
            }
        }
    }

    #[test]
    fn bijection_checks() {
        assert!(is_bijection(&[2, 0, 1]).is_ok());
        assert_eq!(is_bijection(&[1, 1, 0]), Err(AlgebraError::NotBijective { value: 1 }));
        assert_eq!(invert(&[2, 0, 1]), vec![1, 2, 0]);
    }
}
