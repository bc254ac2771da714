//! The distributive law and its consequences, checked on basis tuples and on
//! seeded random rational vectors.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{LinearizedTruss, Vector};
use crate::error::Result;
use crate::report::Report;

/// Random multilinearity trials run after the basis scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trials {
    pub count: usize,
    pub seed: u64,
}

impl Default for Trials {
    fn default() -> Self {
        Self { count: 10, seed: 0 }
    }
}

/// `Σ (a₍₁₎∘b) ◇ Sσ(a₍₂₎) ◇ (a₍₃₎∘c)`
pub(super) fn truss_rhs(h: &LinearizedTruss, a: &Vector, b: &Vector, c: &Vector) -> Vector {
    h.sweedler3(a, |x, y, z| {
        h.dia(&h.dia(&h.circ(x, b), &h.s(&h.sigma(y))), &h.circ(z, c))
    })
}

/// `λ(a⊗b) = Σ Sσ(a₍₁₎) ◇ (a₍₂₎∘b)`, also the action `a▷b`.
pub fn lambda(h: &LinearizedTruss, a: &Vector, b: &Vector) -> Vector {
    h.sweedler2(a, |x, y| h.dia(&h.s(&h.sigma(x)), &h.circ(y, b)))
}

/// `μ(a⊗b) = Σ (a₍₁₎∘b) ◇ Sσ(a₍₂₎)`, also the action `a▶b`.
pub fn mu(h: &LinearizedTruss, a: &Vector, b: &Vector) -> Vector {
    h.sweedler2(a, |x, y| h.dia(&h.circ(x, b), &h.s(&h.sigma(y))))
}

/// `[a,b,c] = a ◇ S(b) ◇ c`
pub fn heap(h: &LinearizedTruss, a: &Vector, b: &Vector, c: &Vector) -> Vector {
    h.dia(&h.dia(a, &h.s(b)), c)
}

struct Checker<'a> {
    h: &'a LinearizedTruss,
    trials: Trials,
    rng: ChaCha8Rng,
    report: Report,
}

impl<'a> Checker<'a> {
    fn new(h: &'a LinearizedTruss, trials: Trials) -> Self {
        Self {
            h,
            trials,
            rng: ChaCha8Rng::seed_from_u64(trials.seed),
            report: Report::new(),
        }
    }

    /// Records `name` over all basis `K`-tuples and `name.random` over the
    /// random trials.
    fn check<const K: usize>(&mut self, name: &str, law: impl Fn(&[Vector; K]) -> bool) {
        let h = self.h;
        self.report
            .forall(name, h.dim(), |idx: [usize; K]| law(&idx.map(|i| h.basis(i))));
        let failure = (0..self.trials.count).find(|_| {
            let v: [Vector; K] = std::array::from_fn(|_| Vector::random(h.dim(), &mut self.rng));
            !law(&v)
        });
        self.report
            .trials(format!("{name}.random"), self.trials.count as u64, failure);
    }

    fn finish(self) -> Result<Report> {
        Ok(self.report.into_result()?)
    }
}

/// The distributive law, `σ(a) = a∘1◇`, left `∘`-linearity of `σ`, and the
/// two antipode variants of the law.
pub fn verify_hopf_truss_axioms(h: &LinearizedTruss, trials: Trials) -> Result<Report> {
    let mut c = Checker::new(h, trials);
    c.check("hopf.truss_law", |[a, b, x]| {
        h.circ(a, &h.dia(b, x)) == truss_rhs(h, a, b, x)
    });
    c.check("hopf.sigma_is_circ_with_unit", |[a]| h.sigma(a) == h.circ(a, h.unit()));
    c.check("hopf.sigma_left_linear", |[a, b]| {
        h.sigma(&h.circ(a, b)) == h.circ(a, &h.sigma(b))
    });
    c.check("hopf.law_antipode_first", |[a, b, x]| {
        let rhs = h.sweedler3(a, |p, q, r| {
            h.dia(&h.dia(&h.sigma(p), &h.s(&h.circ(q, b))), &h.circ(r, x))
        });
        h.circ(a, &h.dia(&h.s(b), x)) == rhs
    });
    c.check("hopf.law_antipode_second", |[a, b, x]| {
        let rhs = h.sweedler3(a, |p, q, r| {
            h.dia(&h.dia(&h.circ(p, b), &h.s(&h.circ(q, x))), &h.sigma(r))
        });
        h.circ(a, &h.dia(b, &h.s(x))) == rhs
    });
    c.finish()
}

/// The distributive law restated through `λ`, through `μ`, through the pair
/// `(κ, κ̂) = (∘, λ)`, and through the linear heap.
pub fn check_equivalent_hopf_forms(h: &LinearizedTruss, trials: Trials) -> Result<Report> {
    let mut c = Checker::new(h, trials);
    let lhs = |a: &Vector, b: &Vector, x: &Vector| h.circ(a, &h.dia(b, x));
    c.check("form.cocycle", |[a, b, x]| lhs(a, b, x) == truss_rhs(h, a, b, x));
    c.check("form.lambda", |[a, b, x]| {
        lhs(a, b, x) == h.sweedler2(a, |p, q| h.dia(&h.circ(p, b), &lambda(h, q, x)))
    });
    c.check("form.mu", |[a, b, x]| {
        lhs(a, b, x) == h.sweedler2(a, |p, q| h.dia(&mu(h, p, b), &h.circ(q, x)))
    });
    c.check("form.kappa", |[a, b, x]| {
        let kappa = |p: &Vector, y: &Vector| h.circ(p, y);
        let kappa_hat = |p: &Vector, y: &Vector| lambda(h, p, y);
        lhs(a, b, x) == h.sweedler2(a, |p, q| h.dia(&kappa(p, b), &kappa_hat(q, x)))
    });
    c.check("form.heap", |[a, b, x, d]| {
        let rhs = h.sweedler3(a, |p, q, r| heap(h, &h.circ(p, b), &h.circ(q, x), &h.circ(r, d)));
        h.circ(a, &heap(h, b, x, d)) == rhs
    });
    c.finish()
}

/// Both actions make `(A,◇)` a module algebra over `(A,∘)`, both cocycle
/// conditions hold, and when `∘` has an identity `1∘` among the basis
/// elements, `σ(1∘) = 1◇` and both actions are unital.
pub fn hopf_actions_and_cocycle(h: &LinearizedTruss, trials: Trials) -> Result<Report> {
    let mut c = Checker::new(h, trials);
    type Action = fn(&LinearizedTruss, &Vector, &Vector) -> Vector;
    for (name, act) in [("triangle", lambda as Action), ("blacktriangle", mu as Action)] {
        c.check(&format!("action.{name}.multiplicative"), |[a, b, x]| {
            act(h, a, &h.dia(b, x)) == h.sweedler2(a, |p, q| h.dia(&act(h, p, b), &act(h, q, x)))
        });
        c.check(&format!("action.{name}.unit"), |[a]| {
            act(h, a, h.unit()) == h.unit().scaled(&h.eps(a))
        });
        c.check(&format!("action.{name}.associative"), |[a, b, x]| {
            act(h, &h.circ(a, b), x) == act(h, a, &act(h, b, x))
        });
    }
    c.check("cocycle.triangle", |[a, b]| {
        h.sigma(&h.circ(a, b)) == h.sweedler2(a, |p, q| h.dia(&h.sigma(p), &lambda(h, q, &h.sigma(b))))
    });
    c.check("cocycle.blacktriangle", |[a, b]| {
        h.sigma(&h.circ(a, b)) == h.sweedler2(a, |p, q| h.dia(&mu(h, p, &h.sigma(b)), &h.sigma(q)))
    });
    let mut report = c.finish()?;
    let mut r = Report::new();
    match h.circ_map().basis_table().and_then(|t| t.identity()) {
        Some(i) => {
            let one = h.basis(i);
            r.assert("unital.sigma_of_circ_identity", &h.sigma(&one) == h.unit(), vec![i]);
            r.forall("unital.triangle", h.dim(), |[j]| {
                lambda(h, &one, &h.basis(j)) == h.basis(j)
            });
            r.forall("unital.blacktriangle", h.dim(), |[j]| {
                mu(h, &one, &h.basis(j)) == h.basis(j)
            });
        }
        None => {
            for name in [
                "unital.sigma_of_circ_identity",
                "unital.triangle",
                "unital.blacktriangle",
            ] {
                r.skip(name, "∘ has no identity");
            }
        }
    }
    report.extend(r.into_result()?);
    Ok(report)
}
