//! Linearizations of finite trusses: the carrier becomes a basis of a
//! rational vector space with `Δ(a) = a ⊗ a` and `ε(a) = 1`, both operations
//! are extended bilinearly, and every identity is checked by exact
//! evaluation of Sweedler sums.

mod build;
mod laws;
mod linalg;

pub use build::{extract_hopf_brace, hopf_hierarchy, port_hopf};
pub use laws::{check_equivalent_hopf_forms, hopf_actions_and_cocycle, verify_hopf_truss_axioms, Trials};
pub use linalg::{Bilinear, LinearMap, Rational, Tensor2, Tensor3, Vector};

use num_traits::One;
use serde::ser::Error as _;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::report::Report;
use crate::truss::SkewTruss;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedTruss {
    dim: usize,
    coproduct: Vec<Tensor2>,
    counit: Vec<Rational>,
    unit: Vector,
    diamond: Bilinear,
    circ: Bilinear,
    antipode: LinearMap,
    sigma: LinearMap,
}

/// The group-like linearization of a left truss, with its structure
/// verified exactly.
pub fn linearize(t: &SkewTruss) -> Result<LinearizedTruss> {
    let t = t.as_left()?;
    let n = t.size();
    let g = t.group();
    let h = LinearizedTruss::from_parts(
        Vector::basis(n, g.identity()),
        Bilinear::from_table(g.table()),
        Bilinear::from_table(t.circ_table()),
        LinearMap::from_basis_map(g.inverses()),
    );
    let mut r = h.structure_report();
    r.assert(
        "linearize.sigma_matches_set_cocycle",
        h.sigma.basis_map().as_deref() == Some(t.cocycle()),
        vec![],
    );
    r.into_result()?;
    Ok(h)
}

impl LinearizedTruss {
    /// Assembles a structure on the group-like coalgebra of dimension
    /// `unit.dim()`, deriving `σ(a) = a∘1◇`.
    pub(crate) fn from_parts(unit: Vector, diamond: Bilinear, circ: Bilinear, antipode: LinearMap) -> Self {
        let n = unit.dim();
        let coproduct = (0..n)
            .map(|i| Tensor2::outer(&Vector::basis(n, i), &Vector::basis(n, i)))
            .collect();
        let sigma = LinearMap::from_images((0..n).map(|i| circ.apply(&Vector::basis(n, i), &unit)).collect());
        Self {
            dim: n,
            coproduct,
            counit: vec![Rational::one(); n],
            unit,
            diamond,
            circ,
            antipode,
            sigma,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn diamond_map(&self) -> &Bilinear {
        &self.diamond
    }

    pub fn circ_map(&self) -> &Bilinear {
        &self.circ
    }

    pub fn antipode_map(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn sigma_map(&self) -> &LinearMap {
        &self.sigma
    }

    pub fn dia(&self, x: &Vector, y: &Vector) -> Vector {
        self.diamond.apply(x, y)
    }

    pub fn circ(&self, x: &Vector, y: &Vector) -> Vector {
        self.circ.apply(x, y)
    }

    pub fn s(&self, x: &Vector) -> Vector {
        self.antipode.apply(x)
    }

    pub fn sigma(&self, x: &Vector) -> Vector {
        self.sigma.apply(x)
    }

    pub fn eps(&self, x: &Vector) -> Rational {
        x.terms().map(|(i, c)| c * &self.counit[i]).sum()
    }

    pub fn delta(&self, x: &Vector) -> Tensor2 {
        let mut t = Tensor2::zeros(self.dim);
        for (i, c) in x.terms() {
            t.add_scaled(c, &self.coproduct[i]);
        }
        t
    }

    /// `(Δ ⊗ id) Δ`
    pub fn delta2(&self, x: &Vector) -> Tensor3 {
        let mut t = Tensor3::zeros(self.dim);
        for (i, j, c) in self.delta(x).terms() {
            for (k, l, d) in self.coproduct[i].terms() {
                t.add_at(k, l, j, &(c * d));
            }
        }
        t
    }

    /// `(id ⊗ Δ) Δ`
    pub fn delta2_right(&self, x: &Vector) -> Tensor3 {
        let mut t = Tensor3::zeros(self.dim);
        for (i, j, c) in self.delta(x).terms() {
            for (k, l, d) in self.coproduct[j].terms() {
                t.add_at(i, k, l, &(c * d));
            }
        }
        t
    }

    /// `Σ f(x₍₁₎, x₍₂₎)`
    pub fn sweedler2(&self, x: &Vector, mut f: impl FnMut(&Vector, &Vector) -> Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, j, c) in self.delta(x).terms() {
            out.add_scaled(c, &f(&self.basis(i), &self.basis(j)));
        }
        out
    }

    /// `Σ f(x₍₁₎, x₍₂₎, x₍₃₎)`
    pub fn sweedler3(&self, x: &Vector, mut f: impl FnMut(&Vector, &Vector, &Vector) -> Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, j, k, c) in self.delta2(x).terms() {
            out.add_scaled(c, &f(&self.basis(i), &self.basis(j), &self.basis(k)));
        }
        out
    }

    /// `Δ(x) = x ⊗ x` and `ε(x) = 1`, checked exactly.
    pub fn is_group_like(&self, x: &Vector) -> bool {
        x.dim() == self.dim && self.eps(x).is_one() && self.delta(x) == Tensor2::outer(x, x)
    }

    /// `Σ (x₍₁₎·y₍₁₎) ⊗ (x₍₂₎·y₍₂₎)` for a bilinear product.
    fn delta_of_product(&self, m: &Bilinear, x: &Vector, y: &Vector) -> Tensor2 {
        let mut t = Tensor2::zeros(self.dim);
        let (dx, dy) = (self.delta(x), self.delta(y));
        for (i, j, a) in dx.terms() {
            for (k, l, b) in dy.terms() {
                let c = a * b;
                let (u, v) = (m.image(i, k), m.image(j, l));
                for (p, s) in u.terms() {
                    for (q, w) in v.terms() {
                        t.add_at(p, q, &(&c * s * w));
                    }
                }
            }
        }
        t
    }

    fn map_tensor(&self, f: &LinearMap, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zeros(self.dim);
        for (i, j, c) in t.terms() {
            for (p, s) in f.image(i).terms() {
                for (q, w) in f.image(j).terms() {
                    out.add_at(p, q, &(c * s * w));
                }
            }
        }
        out
    }

    /// Coalgebra axioms, the Hopf algebra `(A,Δ,◇)`, the bialgebra
    /// `(A,Δ,∘)`, `σ` as a coalgebra map, and the distributive law, all on
    /// basis tuples.
    pub fn structure_report(&self) -> Report {
        let n = self.dim;
        let e = |i: usize| self.basis(i);
        let mut r = Report::new();
        r.forall("coalgebra.coassociative", n, |[i]| {
            self.delta2(&e(i)) == self.delta2_right(&e(i))
        });
        r.forall("coalgebra.counit", n, |[i]| {
            let x = e(i);
            let mut left = Vector::zeros(n);
            let mut right = Vector::zeros(n);
            for (a, b, c) in self.delta(&x).terms() {
                left.add_scaled(&(c * &self.counit[a]), &e(b));
                right.add_scaled(&(c * &self.counit[b]), &e(a));
            }
            left == x && right == x
        });
        r.assert("hopf.unit_group_like", self.is_group_like(&self.unit), vec![]);
        r.forall("hopf.diamond_associative", n, |[i, j, k]| {
            self.dia(&self.dia(&e(i), &e(j)), &e(k)) == self.dia(&e(i), &self.dia(&e(j), &e(k)))
        });
        r.forall("hopf.diamond_unit", n, |[i]| {
            self.dia(&self.unit, &e(i)) == e(i) && self.dia(&e(i), &self.unit) == e(i)
        });
        for (name, m) in [
            ("hopf.diamond_coalgebra_map", &self.diamond),
            ("bialgebra.circ_coalgebra_map", &self.circ),
        ] {
            r.forall(name, n, |[i, j]| {
                let (x, y) = (e(i), e(j));
                let p = m.apply(&x, &y);
                self.delta(&p) == self.delta_of_product(m, &x, &y) && self.eps(&p) == self.eps(&x) * self.eps(&y)
            });
        }
        r.forall("hopf.antipode", n, |[i]| {
            let x = e(i);
            let unit = self.unit.scaled(&self.eps(&x));
            self.sweedler2(&x, |a, b| self.dia(a, &self.s(b))) == unit
                && self.sweedler2(&x, |a, b| self.dia(&self.s(a), b)) == unit
        });
        r.forall("bialgebra.circ_associative", n, |[i, j, k]| {
            self.circ(&self.circ(&e(i), &e(j)), &e(k)) == self.circ(&e(i), &self.circ(&e(j), &e(k)))
        });
        r.forall("sigma.coalgebra_map", n, |[i]| {
            let x = e(i);
            let sx = self.sigma(&x);
            self.delta(&sx) == self.map_tensor(&self.sigma, &self.delta(&x)) && self.eps(&sx) == self.eps(&x)
        });
        r.forall("hopf.truss_law", n, |[i, j, k]| {
            let (a, b, c) = (e(i), e(j), e(k));
            self.circ(&a, &self.dia(&b, &c)) == laws::truss_rhs(self, &a, &b, &c)
        });
        r
    }
}

impl Serialize for LinearizedTruss {
    /// Basis tables plus the field marker; fails for structures that do not
    /// close on the basis, which linearizations and their constructions
    /// always do.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct HopfFile {
            field: &'static str,
            dim: usize,
            coproduct: &'static str,
            unit: usize,
            diamond: Vec<Vec<usize>>,
            circ: Vec<Vec<usize>>,
            antipode: Vec<usize>,
            sigma: Vec<usize>,
        }
        let off_basis = || S::Error::custom("structure does not close on the basis");
        HopfFile {
            field: "Q",
            dim: self.dim,
            coproduct: "group-like",
            unit: self.unit.as_basis().ok_or_else(off_basis)?,
            diamond: self.diamond.basis_table().ok_or_else(off_basis)?.rows(),
            circ: self.circ.basis_table().ok_or_else(off_basis)?.rows(),
            antipode: self.antipode.basis_map().ok_or_else(off_basis)?,
            sigma: self.sigma.basis_map().ok_or_else(off_basis)?,
        }
        .serialize(s)
    }
}
