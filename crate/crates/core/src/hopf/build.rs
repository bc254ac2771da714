//! New Hopf trusses from old: base-point translation, brace extraction and
//! porting along basis isomorphisms.

use super::laws::{lambda, mu};
use super::{Bilinear, LinearMap, LinearizedTruss, Vector};
use crate::algebra::{invert, is_bijection, validate_group, validate_map};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scan::scan;
use crate::truss::PortTarget;
use crate::GroupError;

/// `a ◇ₑ b = a ◇ S(e) ◇ b` with identity `e`, antipode `Sₑ(a) = e ◇ S(a) ◇ e`
/// and cocycle `σₑ(a) = a∘e`, for a group-like `e`. When `e = σⁿ(1◇)` the new
/// cocycle is checked to be `σⁿ⁺¹`.
pub fn hopf_hierarchy(h: &LinearizedTruss, e: &Vector) -> Result<(LinearizedTruss, Report)> {
    if !h.is_group_like(e) {
        return Err(Error::NotGroupLike);
    }
    let n = h.dim();
    let se = h.s(e);
    let diamond = Bilinear::from_fn(n, |i, j| h.dia(&h.dia(&h.basis(i), &se), &h.basis(j)));
    let antipode = LinearMap::from_images((0..n).map(|i| h.dia(&h.dia(e, &h.s(&h.basis(i))), e)).collect());
    let new = LinearizedTruss::from_parts(e.clone(), diamond, h.circ_map().clone(), antipode);

    let mut r = new.structure_report();
    let mut power = h.unit().clone();
    let mut sigma_n = LinearMap::from_basis_map(&(0..n).collect::<Vec<_>>());
    let mut found = None;
    for k in 0..=n {
        if &power == e {
            found = Some(k);
            break;
        }
        power = h.sigma(&power);
        sigma_n = h.sigma_map().compose(&sigma_n);
    }
    match found {
        Some(k) => {
            let next = h.sigma_map().compose(&sigma_n);
            r.assert("hierarchy.sigma_power", new.sigma_map() == &next, vec![k]);
        }
        None => r.skip("hierarchy.sigma_power", "e is not in the σ-orbit of 1◇"),
    }
    let report = r.into_result()?;
    Ok((new, report))
}

/// `a•b = σ⁻¹(a)∘b`, for `∘` a group on the basis; cross-checked against
/// `a ∘ (1◇)⁻ ∘ b` with the inverse taken for `∘`.
pub fn extract_hopf_brace(h: &LinearizedTruss) -> Result<(LinearizedTruss, Report)> {
    let table = h
        .circ_map()
        .basis_table()
        .ok_or(Error::CircNotGroup(GroupError::NoIdentity))?;
    let cg = validate_group(table).map_err(Error::CircNotGroup)?;
    let n = h.dim();
    let sigma = h
        .sigma_map()
        .basis_map()
        .expect("σ of a basis-closed product is a basis map");
    let sigma_inv = LinearMap::from_basis_map(&invert(&sigma));
    let bullet = Bilinear::from_fn(n, |i, j| h.circ(&sigma_inv.apply(&h.basis(i)), &h.basis(j)));
    let unit = h
        .unit()
        .as_basis()
        .expect("the unit of a linearization is a basis vector");
    let unit_bar = h.basis(cg.inv(unit));

    let mut r = Report::new();
    r.forall("bullet.formulas_agree", n, |[i, j]| {
        bullet.image(i, j) == &h.circ(&h.circ(&h.basis(i), &unit_bar), &h.basis(j))
    });
    let new = LinearizedTruss::from_parts(
        h.unit().clone(),
        h.diamond_map().clone(),
        bullet,
        h.antipode_map().clone(),
    );
    r.assert(
        "brace.sigma_is_identity",
        new.sigma_map().basis_map() == Some((0..n).collect()),
        vec![],
    );
    let bullet_group = new.circ_map().basis_table().map(validate_group);
    r.assert("brace.bullet_is_group", matches!(bullet_group, Some(Ok(_))), vec![]);
    r.extend(new.structure_report());
    let report = r.into_result()?;
    Ok((new, report))
}

/// Ports `∘` along a Hopf algebra isomorphism `f: (B,∗) → (A,◇)`, or `◇`
/// along a bialgebra isomorphism `f: (B,•) → (A,∘)`. The result is verified,
/// its cocycle and antipode are checked to be the conjugates `f⁻¹σf` and
/// `f⁻¹Sf`, and `f` is checked to intertwine `σ`, `▷` and `▶`.
pub fn port_hopf(h: &LinearizedTruss, target: PortTarget, f: &[usize]) -> Result<(LinearizedTruss, Report)> {
    let n = h.dim();
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
    let fw = LinearMap::from_basis_map(f);
    let bw = LinearMap::from_basis_map(&invert(f));
    let e = |i: usize| h.basis(i);

    let new = match target {
        PortTarget::Group(g) => {
            let star = Bilinear::from_table(g.table());
            let w = scan::<2>(n, |[x, y]| {
                fw.apply(star.image(x, y)) == h.dia(&fw.apply(&e(x)), &fw.apply(&e(y)))
            });
            let unit_ok = &fw.apply(&e(g.identity())) == h.unit();
            if let (Some(w), _) | (None, Some(w)) = (w.witness, (!unit_ok).then_some([g.identity(), g.identity()])) {
                return Err(Error::NotMorphism {
                    kind: "Hopf algebra isomorphism",
                    witness: w.to_vec(),
                });
            }
            let circ = Bilinear::from_fn(n, |x, y| bw.apply(&h.circ(&fw.apply(&e(x)), &fw.apply(&e(y)))));
            LinearizedTruss::from_parts(e(g.identity()), star, circ, LinearMap::from_basis_map(g.inverses()))
        }
        PortTarget::Semigroup(m) => {
            let bullet = Bilinear::from_table(&m);
            let w = scan::<2>(n, |[x, y]| {
                fw.apply(bullet.image(x, y)) == h.circ(&fw.apply(&e(x)), &fw.apply(&e(y)))
            });
            if let Some(w) = w.witness {
                return Err(Error::NotMorphism {
                    kind: "bialgebra isomorphism",
                    witness: w.to_vec(),
                });
            }
            let diamond = Bilinear::from_fn(n, |x, y| bw.apply(&h.dia(&fw.apply(&e(x)), &fw.apply(&e(y)))));
            let antipode = bw.compose(&h.antipode_map().compose(&fw));
            LinearizedTruss::from_parts(bw.apply(h.unit()), diamond, bullet, antipode)
        }
    };

    let mut r = new.structure_report();
    r.assert(
        "port.cocycle_conjugate",
        new.sigma_map() == &bw.compose(&h.sigma_map().compose(&fw)),
        vec![],
    );
    r.assert(
        "port.antipode_conjugate",
        new.antipode_map() == &bw.compose(&h.antipode_map().compose(&fw)),
        vec![],
    );
    r.forall("morphism.sigma", n, |[x]| {
        fw.apply(&new.sigma(&e(x))) == h.sigma(&fw.apply(&e(x)))
    });
    r.forall("morphism.triangle", n, |[x, y]| {
        fw.apply(&lambda(&new, &e(x), &e(y))) == lambda(h, &fw.apply(&e(x)), &fw.apply(&e(y)))
    });
    r.forall("morphism.blacktriangle", n, |[x, y]| {
        fw.apply(&mu(&new, &e(x), &e(y))) == mu(h, &fw.apply(&e(x)), &fw.apply(&e(y)))
    });
    let report = r.into_result()?;
    Ok((new, report))
}
