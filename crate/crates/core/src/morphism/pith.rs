//! Piths: preimages of the orbit of `1◇` under the codomain cocycle.
//!
//! On a finite carrier the orbit `1◇, σ(1◇), σ²(1◇), …` is eventually
//! periodic with preperiod `p` and period `q`. Chambers are indexed by orbit
//! position `0..p+q`, and any index `m ≥ p` is folded to `p + (m - p) mod q`.

use std::collections::HashMap;

use serde::Serialize;

use super::TrussMorphism;
use crate::error::Result;
use crate::report::Report;

#[derive(Clone, Debug, Serialize)]
pub struct Pith {
    /// `σ_Bⁿ(1◇)` for `n` in `0..p+q`; all values are distinct.
    pub orbit: Vec<usize>,
    pub preperiod: usize,
    pub period: usize,
    /// `chambers[n] = { a : f(a) = σ_Bⁿ(1◇) }`, each sorted.
    pub chambers: Vec<Vec<usize>>,
    pub report: Report,
}

impl Pith {
    /// Reduces an orbit index into `0..p+q`.
    pub fn fold(&self, m: usize) -> usize {
        fold(m, self.preperiod, self.period)
    }

    pub fn chamber_of(&self, a: usize) -> Option<usize> {
        self.chambers.iter().position(|c| c.binary_search(&a).is_ok())
    }

    /// The pith as a sorted set.
    pub fn members(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.chambers.concat();
        all.sort_unstable();
        all
    }
}

fn fold(m: usize, p: usize, q: usize) -> usize {
    if m < p {
        m
    } else {
        p + (m - p) % q
    }
}

/// Computes the orbit, chambers and the structural properties: the zeroth
/// chamber is the normal kernel, chambers are nonempty, `a∘b` lands in
/// chamber `m+n+1`, the pith is `∘`-closed and `σ_A` shifts chambers by one.
pub fn compute_pith(f: &TrussMorphism<'_>) -> Result<Pith> {
    let (dom, cod) = (f.domain(), f.codomain());
    let mut position = HashMap::new();
    let mut orbit = Vec::new();
    let mut x = cod.one();
    while let std::collections::hash_map::Entry::Vacant(v) = position.entry(x) {
        v.insert(orbit.len());
        orbit.push(x);
        x = cod.sigma(x);
    }
    let preperiod = position[&x];
    let period = orbit.len() - preperiod;
    let chambers: Vec<Vec<usize>> = orbit
        .iter()
        .map(|&y| (0..dom.size()).filter(|&a| f.apply(a) == y).collect())
        .collect();
    let label: Vec<Option<usize>> = (0..dom.size()).map(|a| position.get(&f.apply(a)).copied()).collect();

    let n = dom.size();
    let fo = |m: usize| fold(m, preperiod, period);
    let mut r = Report::new();
    let kernel: Vec<bool> = (0..n).map(|a| f.apply(a) == cod.one()).collect();
    let chamber0: Vec<bool> = (0..n).map(|a| label[a] == Some(0)).collect();
    r.assert("pith.chamber_zero_is_kernel", kernel == chamber0, vec![]);
    r.assert("pith.kernel_normal", dom.group().is_normal_subgroup(&kernel), vec![]);
    // σ_Aⁿ(1◇) lies in chamber n
    let mut s = dom.one();
    let mut nonempty = true;
    let mut bad = Vec::new();
    for k in 0..orbit.len() {
        if label[s] != Some(k) {
            nonempty = false;
            bad = vec![k, s];
            break;
        }
        s = dom.sigma(s);
    }
    r.assert("pith.chambers_nonempty", nonempty, bad);
    r.forall("pith.circ_closed", n, |[a, b]| match (label[a], label[b]) {
        (Some(_), Some(_)) => label[dom.circ(a, b)].is_some(),
        _ => true,
    });
    r.forall("pith.circ_grading", n, |[a, b]| match (label[a], label[b]) {
        (Some(m), Some(k)) => label[dom.circ(a, b)] == Some(fo(m + k + 1)),
        _ => true,
    });
    r.forall("pith.sigma_shift", n, |[a]| match label[a] {
        Some(m) => label[dom.sigma(a)] == Some(fo(m + 1)),
        None => true,
    });
    let report = r.into_result()?;
    Ok(Pith {
        orbit,
        preperiod,
        period,
        chambers,
        report,
    })
}

/// The disjoint union of chambers as a graded semigroup: elements are pairs
/// `(a, n)` with `a` in chamber `n`, of degree `n + 1`, multiplied by
/// `(a,m)·(b,n) = (a∘b, fold(m+n+1))`.
#[derive(Clone, Debug, Serialize)]
pub struct GradedPith {
    pub pith: Pith,
    pub elements: Vec<(usize, usize)>,
    pub report: Report,
}

impl GradedPith {
    pub fn degree(&self, x: (usize, usize)) -> usize {
        x.1 + 1
    }
}

impl GradedPith {
    pub fn product(&self, dom: &crate::SkewTruss, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
        (dom.circ(x.0, y.0), self.pith.fold(x.1 + y.1 + 1))
    }
}

pub fn graded_pith(f: &TrussMorphism<'_>) -> Result<GradedPith> {
    let pith = compute_pith(f)?;
    let dom = f.domain();
    let elements: Vec<(usize, usize)> = pith
        .chambers
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.iter().map(move |&a| (a, k)))
        .collect();
    let mut g = GradedPith {
        pith,
        elements,
        report: Report::new(),
    };
    let m = g.elements.len();
    let mut r = Report::new();
    r.forall("graded.product_in_chamber", m, |[i, j]| {
        let (a, k) = g.product(dom, g.elements[i], g.elements[j]);
        g.pith.chambers[k].binary_search(&a).is_ok()
    });
    r.forall("graded.degree_additive", m, |[i, j]| {
        let (x, y) = (g.elements[i], g.elements[j]);
        let xy = g.product(dom, x, y);
        g.pith.fold(g.degree(xy) - 1) == g.pith.fold(g.degree(x) + g.degree(y) - 1)
    });
    r.forall("graded.associative", m, |[i, j, k]| {
        let (x, y, z) = (g.elements[i], g.elements[j], g.elements[k]);
        g.product(dom, g.product(dom, x, y), z) == g.product(dom, x, g.product(dom, y, z))
    });
    g.report = r.into_result()?;
    Ok(g)
}
