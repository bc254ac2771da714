use serde::Serialize;

use super::SkewTruss;
use crate::algebra::MagmaTable;
use crate::error::Result;
use crate::report::Report;

/// The two left actions of `(A,∘)` on `(A,◇)` by group endomorphisms:
/// `λ_a(b) = σ(a)⁻¹ ◇ (a∘b)` and `μ_a(b) = (a∘b) ◇ σ(a)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionPair {
    pub lambda: MagmaTable,
    pub mu: MagmaTable,
}

impl ActionPair {
    pub fn tabulate(t: &SkewTruss) -> Self {
        let n = t.size();
        Self {
            lambda: MagmaTable::from_fn(n, |a, b| t.lambda(a, b)),
            mu: MagmaTable::from_fn(n, |a, b| t.mu(a, b)),
        }
    }

    /// Each `λ_a`, `μ_a` is an endomorphism of `(A,◇)` and both maps are
    /// semigroup actions: `λ_{a∘b} = λ_a λ_b`.
    pub fn verify(&self, t: &SkewTruss) -> Report {
        let n = t.size();
        let mut r = Report::new();
        for (name, table) in [("lambda", &self.lambda), ("mu", &self.mu)] {
            r.forall(format!("{name}.endomorphism"), n, |[a, b, c]| {
                table.op(a, t.mul(b, c)) == t.mul(table.op(a, b), table.op(a, c))
            });
            r.forall(format!("{name}.action"), n, |[a, b, c]| {
                table.op(t.circ(a, b), c) == table.op(a, table.op(b, c))
            });
        }
        r
    }
}

/// Tabulates `λ`, `μ` and verifies their endomorphism and action properties.
pub fn derive_actions(t: &SkewTruss) -> Result<ActionPair> {
    t.require_left()?;
    let pair = ActionPair::tabulate(t);
    pair.verify(t).into_result()?;
    Ok(pair)
}
