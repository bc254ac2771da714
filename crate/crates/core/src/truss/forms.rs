//! The equivalent formulations of the truss law and the identities that
//! follow from it.

use super::{ActionPair, SkewTruss};
use crate::error::Result;
use crate::report::Report;

/// Checks the law in its cocycle form and in the four equivalent forms:
/// through `λ`, through `μ`, through the pair `(κ, κ̂)` and as left
/// distributivity of `∘` over the heap of `◇`. The alternative forms use the
/// maps derived from `σ`; any mismatch is a bug and is returned as an error.
pub fn check_equivalent_forms(t: &SkewTruss) -> Result<Report> {
    t.require_left()?;
    let n = t.size();
    let heap = t.group().heap();
    let mut r = Report::new();
    r.forall("form.cocycle", n, |[a, b, c]| {
        t.circ(a, t.mul(b, c)) == t.mul(t.mul(t.circ(a, b), t.inv(t.sigma(a))), t.circ(a, c))
    });
    r.forall("form.lambda", n, |[a, b, c]| {
        t.circ(a, t.mul(b, c)) == t.mul(t.circ(a, b), t.lambda(a, c))
    });
    r.forall("form.mu", n, |[a, b, c]| {
        t.circ(a, t.mul(b, c)) == t.mul(t.mu(a, b), t.circ(a, c))
    });
    // κ_a(b) = a∘b and κ̂_a(c) = σ(a)⁻¹ ◇ (a∘c)
    let kappa = |a: usize, b: usize| t.circ(a, b);
    let kappa_hat = |a: usize, c: usize| t.mul(t.inv(t.sigma(a)), t.circ(a, c));
    r.forall("form.kappa", n, |[a, b, c]| {
        t.circ(a, t.mul(b, c)) == t.mul(kappa(a, b), kappa_hat(a, c))
    });
    r.forall("form.heap", n, |[a, b, c, d]| {
        t.circ(a, heap.op(b, c, d)) == heap.op(t.circ(a, b), t.circ(a, c), t.circ(a, d))
    });
    Ok(r.into_result()?)
}

/// Identities every left truss satisfies: the cocycle formula and
/// equivariance, the two inverse forms of the law, the action and cocycle
/// conditions for `λ` and `μ`, the relation between the two actions, and
/// `σ(1∘) = 1◇` when `(A,∘)` is a monoid.
pub fn derived_identities(t: &SkewTruss) -> Result<Report> {
    t.require_left()?;
    let n = t.size();
    let one = t.one();
    let mut r = Report::new();
    r.forall("cocycle.is_circ_with_identity", n, |[a]| t.sigma(a) == t.circ(a, one));
    r.forall("cocycle.equivariant", n, |[a, b]| {
        t.sigma(t.circ(a, b)) == t.circ(a, t.sigma(b))
    });
    r.forall("law.inverse_first", n, |[a, b, c]| {
        t.circ(a, t.mul(t.inv(b), c)) == t.mul(t.mul(t.sigma(a), t.inv(t.circ(a, b))), t.circ(a, c))
    });
    r.forall("law.inverse_second", n, |[a, b, c]| {
        t.circ(a, t.mul(b, t.inv(c))) == t.mul(t.mul(t.circ(a, b), t.inv(t.circ(a, c))), t.sigma(a))
    });
    r.extend(ActionPair::tabulate(t).verify(t));
    r.forall("cocycle.lambda_condition", n, |[a, b]| {
        t.sigma(t.circ(a, b)) == t.mul(t.sigma(a), t.lambda(a, t.sigma(b)))
    });
    r.forall("cocycle.mu_condition", n, |[a, b]| {
        t.sigma(t.circ(a, b)) == t.mul(t.mu(a, t.sigma(b)), t.sigma(a))
    });
    r.forall("actions.related_by_sigma", n, |[a, b]| {
        t.mul(t.sigma(a), t.lambda(a, b)) == t.mul(t.mu(a, b), t.sigma(a))
    });
    if t.group().is_abelian() {
        r.forall("actions.equal_when_abelian", n, |[a, b]| t.lambda(a, b) == t.mu(a, b));
    } else {
        r.skip("actions.equal_when_abelian", "(A,◇) is not abelian");
    }
    match t.circ_table().identity() {
        Some(unit) => {
            r.assert("cocycle.fixes_circ_identity", t.sigma(unit) == one, vec![unit]);
        }
        None => r.skip("cocycle.fixes_circ_identity", "(A,∘) has no identity"),
    }
    Ok(r.into_result()?)
}
