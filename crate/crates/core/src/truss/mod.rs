//! The skew truss type and everything derived from a single truss.

mod actions;
mod family;
mod forms;
mod powers;

pub use actions::{derive_actions, ActionPair};
pub use family::{hierarchy_port, port_structure, translate_family, PortTarget};
pub use forms::{check_equivalent_forms, derived_identities};
pub use powers::{sigma_power_report, SigmaPowers};

use serde::{Deserialize, Serialize};

use crate::algebra::{GroupTable, MagmaTable};
use crate::error::{Error, Result};
use crate::scan::{scan, Scan};

/// Which distributive law(s) a truss satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    #[default]
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn includes_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    pub fn includes_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }
}

/// A group `(A,◇)` and a semigroup `(A,∘)` on one carrier, bound by the truss
/// law. The cocycle is always derived from `∘`, never supplied.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTruss {
    group: GroupTable,
    circ: MagmaTable,
    sigma: Vec<usize>,
    side: Side,
}

/// Builds and verifies a truss. Same as [`SkewTruss::new`].
pub fn build_truss(group: GroupTable, circ: MagmaTable, side: Side) -> Result<SkewTruss> {
    SkewTruss::new(group, circ, side)
}

/// `a∘(b◇c) = (a∘b) ◇ σ(a)⁻¹ ◇ (a∘c)` over all triples.
pub(crate) fn left_law(group: &GroupTable, circ: &MagmaTable, sigma: &[usize]) -> Scan<3> {
    scan(group.size(), |[a, b, c]| {
        circ.op(a, group.mul(b, c)) == group.bracket(circ.op(a, b), sigma[a], circ.op(a, c))
    })
}

/// Cocycle of the left law: `σ(a) = a∘1◇`.
pub(crate) fn left_cocycle(group: &GroupTable, circ: &MagmaTable) -> Vec<usize> {
    (0..group.size()).map(|a| circ.op(a, group.identity())).collect()
}

impl SkewTruss {
    /// Derives `σ` and verifies associativity of `∘` and the requested law(s)
    /// exhaustively. Right laws are checked by running the left check on the
    /// opposite group and opposite semigroup.
    pub fn new(group: GroupTable, circ: MagmaTable, side: Side) -> Result<Self> {
        if group.size() != circ.size() {
            return Err(Error::SizeMismatch {
                left: group.size(),
                right: circ.size(),
            });
        }
        circ.associativity().into_result().map_err(Error::NotSemigroup)?;

        let left_sigma = side.includes_left().then(|| {
            let sigma = left_cocycle(&group, &circ);
            (left_law(&group, &circ, &sigma).into_result(), sigma)
        });
        let right_sigma = side.includes_right().then(|| {
            let (g, c) = (group.opposite(), circ.transpose());
            let sigma = left_cocycle(&g, &c);
            // a left witness (a,b,c) on the opposite side is the right triple (c,b,a)
            (
                left_law(&g, &c, &sigma).into_result().map_err(|[a, b, c]| [c, b, a]),
                sigma,
            )
        });

        let sigma = match (left_sigma, right_sigma) {
            (Some((l, ls)), None) => {
                l.map_err(Error::LeftLaw)?;
                ls
            }
            (None, Some((r, rs))) => {
                r.map_err(Error::RightLaw)?;
                rs
            }
            (Some((l, ls)), Some((r, rs))) => {
                l.map_err(Error::LeftLaw)?;
                r.map_err(Error::RightLaw)?;
                if let Some(element) = (0..ls.len()).find(|&a| ls[a] != rs[a]) {
                    return Err(Error::CocycleMismatch {
                        element,
                        left: ls[element],
                        right: rs[element],
                    });
                }
                ls
            }
            (None, None) => unreachable!("every side includes left or right"),
        };
        Ok(Self {
            group,
            circ,
            sigma,
            side,
        })
    }

    /// Checks a user-declared cocycle against the derived one.
    pub fn check_declared_sigma(&self, declared: &[usize]) -> Result<()> {
        crate::algebra::validate_map(declared, self.size(), self.size())?;
        match (0..self.size()).find(|&a| declared[a] != self.sigma[a]) {
            None => Ok(()),
            Some(element) => Err(Error::DeclaredSigma {
                element,
                declared: declared[element],
                derived: self.sigma[element],
            }),
        }
    }

    /// Example family: `a∘b = σ(a)` for an idempotent `σ`.
    pub fn idempotent(group: GroupTable, sigma: &[usize]) -> Result<Self> {
        let n = group.size();
        crate::algebra::validate_map(sigma, n, n)?;
        if let Some(element) = (0..n).find(|&a| sigma[sigma[a]] != sigma[a]) {
            return Err(Error::NotIdempotent { element });
        }
        let circ = MagmaTable::from_fn(n, |a, _| sigma[a]);
        Self::new(group, circ, Side::Left)
    }

    /// The trivial brace: `∘ = ◇`.
    pub fn trivial_brace(group: GroupTable) -> Self {
        let circ = group.table().clone();
        let side = if group.is_abelian() { Side::TwoSided } else { Side::Left };
        Self::new(group, circ, side).expect("a group is a brace over itself")
    }

    /// The zero-multiplication ring type: `a∘b = 1◇`.
    pub fn zero_ring(group: GroupTable) -> Self {
        let one = group.identity();
        let circ = MagmaTable::from_fn(group.size(), |_, _| one);
        Self::new(group, circ, Side::TwoSided).expect("zero multiplication is two-sided")
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn circ_table(&self) -> &MagmaTable {
        &self.circ
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `a ◇ b`
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }

    /// `a⁻¹` in `(A,◇)`
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.group.inv(a)
    }

    /// `1◇`
    #[inline]
    pub fn one(&self) -> usize {
        self.group.identity()
    }

    /// `a ∘ b`
    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        self.circ.op(a, b)
    }

    #[inline]
    pub fn sigma(&self, a: usize) -> usize {
        self.sigma[a]
    }

    pub fn cocycle(&self) -> &[usize] {
        &self.sigma
    }

    /// `λ_a(b) = σ(a)⁻¹ ◇ (a∘b)`
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.mul(self.inv(self.sigma[a]), self.circ(a, b))
    }

    /// `μ_a(b) = (a∘b) ◇ σ(a)⁻¹`
    #[inline]
    pub fn mu(&self, a: usize, b: usize) -> usize {
        self.mul(self.circ(a, b), self.inv(self.sigma[a]))
    }

    pub fn is_brace_type(&self) -> bool {
        self.sigma.iter().enumerate().all(|(a, &s)| a == s)
    }

    pub fn is_ring_type(&self) -> bool {
        self.sigma.iter().all(|&s| s == self.one())
    }

    pub(crate) fn require_left(&self) -> Result<()> {
        if self.side.includes_left() {
            Ok(())
        } else {
            Err(Error::RequiresLeft)
        }
    }

    /// Re-validates the same tables as a left truss.
    pub fn as_left(&self) -> Result<Self> {
        match self.side {
            Side::Left => Ok(self.clone()),
            Side::TwoSided => Ok(Self {
                side: Side::Left,
                ..self.clone()
            }),
            Side::Right => Self::new(self.group.clone(), self.circ.clone(), Side::Left),
        }
    }

    /// The left truss `(A, ◇ᵒᵖ, ∘ᵒᵖ)` whose left law is this truss's right law.
    pub fn mirror(&self) -> Result<Self> {
        if !self.side.includes_right() {
            return Err(Error::RequiresRight);
        }
        Self::new(self.group.opposite(), self.circ.transpose(), Side::Left)
    }

    /// Builds a left truss from raw tables, without reporting which check failed.
    pub fn try_left(group: &GroupTable, circ: MagmaTable) -> Option<Self> {
        Self::new(group.clone(), circ, Side::Left).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupTable {
        GroupTable::cyclic(n)
    }

    #[test]
    fn trivial_brace_on_z2() {
        let t = SkewTruss::new(z(2), z(2).table().clone(), Side::Left).unwrap();
        assert_eq!(t.cocycle(), &[0, 1]);
        assert!(t.is_brace_type());
    }

    #[test]
    fn constant_zero_is_a_truss_with_zero_cocycle() {
        let t = SkewTruss::new(z(2), MagmaTable::from_fn(2, |_, _| 0), Side::Left).unwrap();
        assert_eq!(t.cocycle(), &[0, 0]);
        assert!(t.is_ring_type());
    }

    #[test]
    fn non_associative_circ_is_rejected() {
        let circ = MagmaTable::from_rows(2, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            SkewTruss::new(z(2), circ, Side::Left),
            Err(Error::NotSemigroup(_))
        ));
    }

    #[test]
    fn size_mismatch() {
        let err = SkewTruss::new(z(2), z(3).table().clone(), Side::Left).unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn law_violation_reports_witness() {
        // max is associative but fails the law at (1,1,1)
        let circ = MagmaTable::from_fn(3, |a, b| a.max(b));
        match SkewTruss::new(z(3), circ.clone(), Side::Left) {
            Err(Error::LeftLaw([a, b, c])) => {
                let s = circ.op(a, 0);
                let g = z(3);
                assert_ne!(circ.op(a, g.mul(b, c)), g.bracket(circ.op(a, b), s, circ.op(a, c)));
            }
            other => panic!("expected a left-law failure, got {other:?}"),
        }
    }

    #[test]
    fn idempotent_constant_two_on_z4() {
        let t = SkewTruss::idempotent(z(4), &[2, 2, 2, 2]).unwrap();
        assert!((0..4).all(|a| (0..4).all(|b| t.circ(a, b) == 2)));
        assert_eq!(t.cocycle(), &[2, 2, 2, 2]);
    }

    #[test]
    fn idempotent_identity_gives_left_projection() {
        let t = SkewTruss::idempotent(z(2), &[0, 1]).unwrap();
        assert_eq!(t.circ_table(), &MagmaTable::from_fn(2, |a, _| a));
        // oracle: a∘(b+c) = a and (a∘b) + σ(a)⁻¹ + (a∘c) = a - a + a over Z/2
        for a in 0..2 {
            assert_eq!((a + (2 - a) % 2 + a) % 2, a);
        }
    }

    #[test]
    fn non_idempotent_sigma_is_rejected() {
        assert_eq!(
            SkewTruss::idempotent(z(3), &[1, 2, 0]).unwrap_err(),
            Error::NotIdempotent { element: 0 }
        );
    }

    #[test]
    fn constant_identity_sigma_is_zero_ring() {
        for g in [z(3), GroupTable::symmetric3()] {
            let one = g.identity();
            let t = SkewTruss::idempotent(g.clone(), &vec![one; g.size()]).unwrap();
            assert!(t.is_ring_type());
        }
    }

    #[test]
    fn right_truss_by_mirroring() {
        // a∘b = σ(b) for idempotent σ satisfies the right law with cocycle σ
        let sigma = [1, 1, 2];
        let circ = MagmaTable::from_fn(3, |_, b| sigma[b]);
        let t = SkewTruss::new(z(3), circ.clone(), Side::Right).unwrap();
        assert_eq!(t.cocycle(), &sigma);
        assert!(SkewTruss::new(z(3), circ, Side::Left).is_err());
    }

    #[test]
    fn two_sided_cocycles_must_agree() {
        // left projection on Z/2 with σ=id is left only: right cocycle 1◇∘a = 1◇
        let circ = MagmaTable::from_fn(2, |a, _| a);
        let err = SkewTruss::new(z(2), circ, Side::TwoSided).unwrap_err();
        assert!(matches!(err, Error::RightLaw(_) | Error::CocycleMismatch { .. }));
    }

    #[test]
    fn declared_sigma_is_checked() {
        let t = SkewTruss::trivial_brace(z(3));
        assert!(t.check_declared_sigma(&[0, 1, 2]).is_ok());
        assert_eq!(
            t.check_declared_sigma(&[0, 2, 2]),
            Err(Error::DeclaredSigma {
                element: 1,
                declared: 2,
                derived: 1
            })
        );
    }
}
