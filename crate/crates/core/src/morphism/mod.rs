//! Truss morphisms: maps preserving both `◇` and `∘`.

mod pith;

pub use pith::{compute_pith, graded_pith, GradedPith, Pith};

use crate::algebra::{find_bijections, validate_map};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::scan::scan;
use crate::truss::SkewTruss;

/// Default bound on the domain size for [`enumerate_morphisms`].
pub const DEFAULT_MORPHISM_BOUND: usize = 6;

#[derive(Clone, Debug)]
pub struct TrussMorphism<'a> {
    domain: &'a SkewTruss,
    codomain: &'a SkewTruss,
    map: Vec<usize>,
}

/// Verifies both homomorphism laws, then the consequences: `f σ_A = σ_B f`
/// and compatibility with `λ` and `μ`.
pub fn build_morphism<'a>(
    domain: &'a SkewTruss,
    codomain: &'a SkewTruss,
    map: Vec<usize>,
) -> Result<TrussMorphism<'a>> {
    validate_map(&map, domain.size(), codomain.size())?;
    if let Some(w) = domain.group().hom_witness(codomain.group(), &map) {
        return Err(Error::NotMorphism {
            kind: "group homomorphism",
            witness: w.to_vec(),
        });
    }
    if let Some(w) = circ_witness(domain, codomain, &map) {
        return Err(Error::NotMorphism {
            kind: "semigroup homomorphism",
            witness: w.to_vec(),
        });
    }
    let f = TrussMorphism { domain, codomain, map };
    f.diagrams().into_result()?;
    Ok(f)
}

fn circ_witness(domain: &SkewTruss, codomain: &SkewTruss, f: &[usize]) -> Option<[usize; 2]> {
    scan::<2>(domain.size(), |[a, b]| {
        f[domain.circ(a, b)] == codomain.circ(f[a], f[b])
    })
    .witness
}

/// Whether `f` preserves the heap brackets and `∘`: the alternative notion
/// of morphism built on heaps instead of groups.
pub fn is_heap_morphism(domain: &SkewTruss, codomain: &SkewTruss, f: &[usize]) -> bool {
    validate_map(f, domain.size(), codomain.size()).is_ok()
        && domain
            .group()
            .heap()
            .morphism_witness(&codomain.group().heap(), f)
            .is_none()
        && circ_witness(domain, codomain, f).is_none()
}

/// All truss morphisms `domain → codomain`: group homomorphisms are found by
/// backtracking over generator images, then filtered by `∘`.
pub fn enumerate_morphisms<'a>(
    domain: &'a SkewTruss,
    codomain: &'a SkewTruss,
    bound: usize,
) -> Result<Vec<TrussMorphism<'a>>> {
    if domain.size() > bound {
        return Err(Error::TooLarge {
            size: domain.size(),
            bound,
            advice: "raise the bound explicitly if the search is really wanted",
        });
    }
    domain
        .group()
        .homomorphisms_to(codomain.group())
        .into_iter()
        .filter(|f| circ_witness(domain, codomain, f).is_none())
        .map(|f| build_morphism(domain, codomain, f))
        .collect()
}

/// All bijections preserving both `◇` and `∘`, by exhaustive backtracking.
pub fn find_truss_isomorphisms(a: &SkewTruss, b: &SkewTruss) -> Vec<Vec<usize>> {
    if a.size() != b.size() {
        return Vec::new();
    }
    find_bijections(
        a.size(),
        &[(a.group().table(), b.group().table()), (a.circ_table(), b.circ_table())],
    )
}

impl<'a> TrussMorphism<'a> {
    pub fn domain(&self) -> &'a SkewTruss {
        self.domain
    }

    pub fn codomain(&self) -> &'a SkewTruss {
        self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// The three commuting diagrams for `σ`, `λ` and `μ`.
    pub fn diagrams(&self) -> Report {
        let (a, b, f) = (self.domain, self.codomain, &self.map);
        let n = a.size();
        let mut r = Report::new();
        r.forall("morphism.sigma", n, |[x]| f[a.sigma(x)] == b.sigma(f[x]));
        r.forall("morphism.lambda", n, |[x, y]| f[a.lambda(x, y)] == b.lambda(f[x], f[y]));
        r.forall("morphism.mu", n, |[x, y]| f[a.mu(x, y)] == b.mu(f[x], f[y]));
        r
    }

    pub fn is_heap_morphism(&self) -> bool {
        is_heap_morphism(self.domain, self.codomain, &self.map)
    }
}
