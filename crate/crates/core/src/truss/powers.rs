use std::collections::HashSet;

use serde::Serialize;

use super::SkewTruss;
use crate::error::Result;
use crate::report::Report;

#[derive(Clone, Debug, Serialize)]
pub struct SigmaPowers {
    /// Whether `1◇` commutes with everything under `∘`.
    pub identity_central: bool,
    /// `σ, σ², …, σᵏ` are distinct and `σᵏ⁺¹` repeats one of them.
    pub distinct_powers: usize,
    pub report: Report,
}

/// Powers of the cocycle when `1◇` is central in `(A,∘)`: the twisted
/// additivity `σⁿ(a◇b) = σⁿ(a) ◇ σⁿ(1◇)⁻¹ ◇ σⁿ(b)`, `σⁿ` as a homomorphism
/// into the base-point group at `σⁿ(1◇)`, the action form of additivity when
/// `σⁿ⁻¹(1◇)` is also central, and `σ` as a heap endomorphism.
///
/// Powers are iterated until the sequence of maps repeats.
pub fn sigma_power_report(t: &SkewTruss) -> Result<SigmaPowers> {
    t.require_left()?;
    let n = t.size();
    let one = t.one();
    let mut powers: Vec<Vec<usize>> = Vec::new();
    let mut seen = HashSet::new();
    let mut current: Vec<usize> = t.cocycle().to_vec();
    while seen.insert(current.clone()) {
        powers.push(current.clone());
        current = current.iter().map(|&x| t.sigma(x)).collect();
    }

    let central = t.circ_table().is_central(one);
    let mut r = Report::new();
    if !central {
        let note = "1◇ is not central in (A,∘)";
        for name in [
            "powers.additive",
            "powers.group_hom",
            "powers.action_form",
            "sigma.heap_endomorphism",
        ] {
            r.skip(name, note);
        }
        return Ok(SigmaPowers {
            identity_central: false,
            distinct_powers: powers.len(),
            report: r,
        });
    }

    // σ⁰ = id, so σⁿ⁻¹(1◇) for n = 1 is 1◇ itself
    let mut prev_at_one = one;
    for (i, p) in powers.iter().enumerate() {
        let k = i + 1;
        let e = p[one];
        r.forall(format!("powers.additive[{k}]"), n, |[a, b]| {
            p[t.mul(a, b)] == t.bracket(p[a], e, p[b])
        });
        let target = t.group().at_base_point(e);
        r.forall(format!("powers.group_hom[{k}]"), n, |[a, b]| {
            p[t.mul(a, b)] == target.mul(p[a], p[b])
        });
        let u = prev_at_one;
        if t.circ_table().is_central(u) {
            r.forall(format!("powers.action_form[{k}]"), n, |[a, b]| {
                let lhs = p[t.mul(a, b)];
                lhs == t.mul(p[a], t.lambda(u, b)) && lhs == t.mul(t.mu(u, a), p[b])
            });
        } else {
            r.skip(format!("powers.action_form[{k}]"), "σⁿ⁻¹(1◇) is not central");
        }
        prev_at_one = e;
    }
    let heap = t.group().heap();
    r.forall("sigma.heap_endomorphism", n, |[a, b, c]| {
        t.sigma(heap.op(a, b, c)) == heap.op(t.sigma(a), t.sigma(b), t.sigma(c))
    });
    let report = r.into_result()?;
    Ok(SigmaPowers {
        identity_central: true,
        distinct_powers: powers.len(),
        report,
    })
}

impl SkewTruss {
    /// `a ◇ b⁻¹ ◇ c`
    #[inline]
    pub fn bracket(&self, a: usize, b: usize, c: usize) -> usize {
        self.group().bracket(a, b, c)
    }
}
