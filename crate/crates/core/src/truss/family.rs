//! New trusses from old: the base-point family and porting along isomorphisms.

use super::{Side, SkewTruss};
use crate::algebra::{invert, is_bijection, validate_map, GroupTable, MagmaTable};
use crate::error::{Error, Result};
use crate::report::Report;

/// Replaces `◇` by `a ◇ₑ b = a ◇ e⁻¹ ◇ b` and keeps `∘`. The new identity is
/// `e` and the new cocycle is `σₑ(a) = a∘e`.
///
/// Left and right trusses keep their side. A two-sided truss stays two-sided
/// only when `e` is central in `(A,∘)`; otherwise the left and right cocycles
/// of the result differ and it is returned as a left truss.
pub fn translate_family(t: &SkewTruss, e: usize) -> Result<SkewTruss> {
    Error::check_element(e, t.size())?;
    let group = t.group().at_base_point(e);
    let side = match t.side() {
        Side::TwoSided if !t.circ_table().is_central(e) => Side::Left,
        s => s,
    };
    SkewTruss::new(group, t.circ_table().clone(), side)
}

/// What a truss is ported onto.
#[derive(Clone, Debug)]
pub enum PortTarget {
    /// A group `(B,∗)` with a group isomorphism `f: B → (A,◇)`; `∘` is ported.
    Group(GroupTable),
    /// A semigroup `(B,•)` with a semigroup isomorphism `g: B → (A,∘)`; `◇` is ported.
    Semigroup(MagmaTable),
}

/// Transfers the missing operation along an isomorphism. The result is
/// re-verified and its cocycle is checked to be `f⁻¹ σ f`.
pub fn port_structure(t: &SkewTruss, target: PortTarget, f: &[usize]) -> Result<SkewTruss> {
    let n = t.size();
    let target_size = match &target {
        PortTarget::Group(g) => g.size(),
        PortTarget::Semigroup(m) => m.size(),
    };
    if target_size != n {
        return Err(Error::SizeMismatch {
            left: target_size,
            right: n,
        });
    }
    validate_map(f, n, n)?;
    is_bijection(f)?;
    let f_inv = invert(f);
    let ported = match target {
        PortTarget::Group(group) => {
            if let Some(w) = group.hom_witness(t.group(), f) {
                return Err(Error::NotMorphism {
                    kind: "group isomorphism",
                    witness: w.to_vec(),
                });
            }
            let circ = t.circ_table().transport(&f_inv);
            SkewTruss::new(group, circ, t.side())?
        }
        PortTarget::Semigroup(circ) => {
            let w = crate::scan::scan::<2>(n, |[a, b]| f[circ.op(a, b)] == t.circ(f[a], f[b]));
            if let Some(w) = w.witness {
                return Err(Error::NotMorphism {
                    kind: "semigroup isomorphism",
                    witness: w.to_vec(),
                });
            }
            let group = GroupTable::from_magma(t.group().table().transport(&f_inv))?;
            SkewTruss::new(group, circ, t.side())?
        }
    };
    let mut r = Report::new();
    r.forall("port.cocycle_conjugate", n, |[b]| {
        ported.sigma(b) == f_inv[t.sigma(f[b])]
    });
    r.into_result()?;
    Ok(ported)
}

/// Ports `translate_family(t, e)` back onto `(A,◇)` through `f(a) = a◇e`.
///
/// The result keeps `◇` and deforms `∘` to
/// `a ∘ₑ b = ((a◇e)∘(b◇e)) ◇ e⁻¹`, with cocycle `τₑ(a) = σₑ(a◇e) ◇ e⁻¹`.
/// Both formulas are checked against the ported tables.
pub fn hierarchy_port(t: &SkewTruss, e: usize) -> Result<(SkewTruss, Report)> {
    t.require_left()?;
    let translated = translate_family(t, e)?.as_left()?;
    let f: Vec<usize> = (0..t.size()).map(|a| t.mul(a, e)).collect();
    let ported = port_structure(&translated, PortTarget::Group(t.group().clone()), &f)?.as_left()?;

    let n = t.size();
    let sigma_e = |a: usize| t.circ(a, e);
    let mut r = Report::new();
    r.forall("hierarchy.deformed_circ", n, |[a, b]| {
        ported.circ(a, b) == t.mul(t.circ(t.mul(a, e), t.mul(b, e)), t.inv(e))
    });
    r.forall("hierarchy.deformed_circ_expanded", n, |[a, b]| {
        let ae = t.mul(a, e);
        let lhs = t.mul(t.mul(t.circ(ae, b), t.inv(t.sigma(ae))), sigma_e(ae));
        ported.circ(a, b) == t.mul(lhs, t.inv(e))
    });
    r.forall("hierarchy.cocycle", n, |[a]| {
        ported.sigma(a) == t.mul(sigma_e(t.mul(a, e)), t.inv(e))
    });
    r.forall("hierarchy.map_is_truss_isomorphism", n, |[a, b]| {
        f[ported.circ(a, b)] == translated.circ(f[a], f[b]) && f[t.mul(a, b)] == translated.mul(f[a], f[b])
    });
    let r = r.into_result()?;
    Ok((ported, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translating_by_identity_is_a_no_op() {
        let t = SkewTruss::idempotent(GroupTable::cyclic(4), &[2, 2, 2, 2]).unwrap();
        assert_eq!(translate_family(&t, 0).unwrap(), t);
    }

    #[test]
    fn translating_by_sigma_of_identity_squares_the_cocycle() {
        // σ = [1,1,2] on Z/3 is idempotent, so σ² = σ is the expected cocycle
        let t = SkewTruss::idempotent(GroupTable::cyclic(3), &[1, 1, 2]).unwrap();
        let te = translate_family(&t, t.sigma(t.one())).unwrap();
        let squared: Vec<usize> = (0..3).map(|a| t.sigma(t.sigma(a))).collect();
        assert_eq!(te.cocycle(), squared.as_slice());
    }

    #[test]
    fn trivial_brace_z4_at_two() {
        let t = SkewTruss::trivial_brace(GroupTable::cyclic(4));
        let te = translate_family(&t, 2).unwrap();
        assert_eq!(te.one(), 2);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(te.mul(a, b), (a + b + 2) % 4);
            }
        }
        // cocycle a∘2 = a+2
        assert_eq!(te.cocycle(), &[2, 3, 0, 1]);
        assert_eq!(te.side(), Side::TwoSided);
    }

    #[test]
    fn translate_twice_returns_same_tables() {
        let t = SkewTruss::trivial_brace(GroupTable::symmetric3());
        for e in 0..6 {
            let te = translate_family(&t, e).unwrap();
            let again = translate_family(&te, te.one()).unwrap();
            assert_eq!(again, te);
        }
    }

    #[test]
    fn port_along_identity_is_a_no_op() {
        let t = SkewTruss::trivial_brace(GroupTable::cyclic(3));
        let same = port_structure(&t, PortTarget::Group(t.group().clone()), &[0, 1, 2]).unwrap();
        assert_eq!(same, t);
    }

    #[test]
    fn port_z3_brace_along_doubling() {
        let t = SkewTruss::trivial_brace(GroupTable::cyclic(3));
        let f = [0, 2, 1];
        let p = port_structure(&t, PortTarget::Group(GroupTable::cyclic(3)), &f).unwrap();
        // oracle: 2·(2a + 2b) mod 3
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(p.circ(a, b), 2 * (2 * a + 2 * b) % 3);
            }
        }
        assert!(p.is_brace_type());
    }

    #[test]
    fn port_along_semigroup_isomorphism() {
        let t = SkewTruss::idempotent(GroupTable::cyclic(3), &[0, 1, 1]).unwrap();
        // relabel by the transposition (0 2)
        let g = [2, 1, 0];
        let circ = t.circ_table().transport(&invert(&g));
        let p = port_structure(&t, PortTarget::Semigroup(circ), &g).unwrap();
        for b in 0..3 {
            assert_eq!(g[p.sigma(b)], t.sigma(g[b]));
        }
        assert_eq!(p.one(), 2);
    }

    #[test]
    fn non_morphisms_are_rejected() {
        let t = SkewTruss::trivial_brace(GroupTable::cyclic(3));
        let err = port_structure(&t, PortTarget::Group(GroupTable::cyclic(3)), &[1, 2, 0]);
        assert!(matches!(
            err,
            Err(Error::NotMorphism {
                kind: "group isomorphism",
                ..
            })
        ));
        let err = port_structure(&t, PortTarget::Group(GroupTable::cyclic(3)), &[1, 1, 0]);
        assert!(matches!(err, Err(Error::Algebra(_))));
    }

    #[test]
    fn hierarchy_on_nonabelian_brace() {
        let t = SkewTruss::trivial_brace(GroupTable::symmetric3());
        for e in 0..6 {
            let (p, r) = hierarchy_port(&t, e).unwrap();
            assert!(r.ok());
            assert_eq!(p.group(), t.group());
        }
    }
}
