//! Invertible cocycles, the brace attached to a truss whose `∘` is a group,
//! and the set-theoretic Yang–Baxter solutions built from it.

use serde::{Deserialize, Serialize};

use crate::algebra::{invert, validate_group, GroupTable, MagmaTable};
use crate::error::{AlgebraError, Error, Result};
use crate::report::Report;
use crate::scan::scan;
use crate::truss::{Side, SkewTruss};

/// Outcome of the two independent tests for bijectivity of `σ`.
#[derive(Clone, Debug, Serialize)]
pub struct SigmaInvertibility {
    pub bijective: bool,
    /// A right identity `e` of `∘` together with `u` such that `1◇∘u = e = u∘1◇`.
    pub right_identity: Option<usize>,
    pub unit: Option<usize>,
    pub report: Report,
}

/// Tests `σ` for bijectivity directly and via the existence of a right
/// identity `e` of `∘` for which `1◇` is invertible, and checks that both
/// answers agree.
pub fn check_sigma_invertible(t: &SkewTruss) -> Result<SigmaInvertibility> {
    t.require_left()?;
    let n = t.size();
    let one = t.one();
    let sigma = t.cocycle();
    let mut seen = vec![false; n];
    let bijective = sigma.iter().all(|&s| !std::mem::replace(&mut seen[s], true));

    let circ = t.circ_table();
    let pair = circ.right_identities().into_iter().find_map(|e| {
        (0..n)
            .find(|&u| circ.op(one, u) == e && circ.op(u, one) == e)
            .map(|u| (e, u))
    });

    let mut r = Report::new();
    r.assert("sigma.criteria_agree", bijective == pair.is_some(), vec![]);
    match pair {
        Some((e, u)) if bijective => {
            let inv = invert(sigma);
            r.assert("sigma.right_identity_is_preimage_of_one", e == inv[one], vec![e]);
            r.assert("sigma.unit_is_preimage_of_right_identity", u == inv[e], vec![u]);
        }
        _ => {
            r.skip("sigma.right_identity_is_preimage_of_one", "sigma is not bijective");
            r.skip("sigma.unit_is_preimage_of_right_identity", "sigma is not bijective");
        }
    }
    let report = r.into_result()?;
    Ok(SigmaInvertibility {
        bijective,
        right_identity: pair.map(|p| p.0),
        unit: pair.map(|p| p.1),
        report,
    })
}

fn circ_group(t: &SkewTruss) -> Result<GroupTable> {
    t.require_left()?;
    validate_group(t.circ_table().clone()).map_err(Error::CircNotGroup)
}

/// A skew brace `(A,◇,•)` extracted from a truss whose `∘` is a group.
#[derive(Clone, Debug)]
pub struct BraceData {
    /// The brace as a truss: `∘` replaced by `•`, so `σ` is the identity.
    pub truss: SkewTruss,
    pub report: Report,
}

impl BraceData {
    pub fn bullet(&self) -> &MagmaTable {
        self.truss.circ_table()
    }
}

/// `a•b = σ⁻¹(a)∘b`, cross-checked against `a∘(1◇)⁻¹∘b` with the inverse
/// taken in `(A,∘)`.
pub fn extract_brace(t: &SkewTruss) -> Result<BraceData> {
    let cg = circ_group(t)?;
    let n = t.size();
    let sigma_inv = invert(t.cocycle());
    let bullet = MagmaTable::from_fn(n, |a, b| t.circ(sigma_inv[a], b));
    let one_bar = cg.inv(t.one());

    let mut r = Report::new();
    r.forall("bullet.formulas_agree", n, |[a, b]| {
        bullet.op(a, b) == cg.mul(cg.mul(a, one_bar), b)
    });
    r.forall("bullet.sigma_equivariant", n, |[a, b]| {
        t.sigma(t.circ(sigma_inv[a], sigma_inv[b])) == bullet.op(a, b)
    });
    let g = t.group();
    r.forall("brace.law", n, |[a, b, c]| {
        bullet.op(a, g.mul(b, c)) == g.bracket(bullet.op(a, b), a, bullet.op(a, c))
    });
    r.assert("brace.bullet_is_group", validate_group(bullet.clone()).is_ok(), vec![]);
    let sigma = t.cocycle();
    if t.circ_table().is_central(t.one()) {
        // σ is then a heap map (A,◇) → (A,◇) carrying ∘ to •
        r.forall("brace.heap_isomorphism_via_sigma", n, |[a, b, c]| {
            sigma[g.bracket(a, b, c)] == g.bracket(sigma[a], sigma[b], sigma[c])
                && sigma[t.circ(a, b)] == bullet.op(sigma[a], sigma[b])
        });
    } else {
        r.skip("brace.heap_isomorphism_via_sigma", "1◇ is not ∘-central");
    }
    let mut report = r.into_result()?;
    let truss = SkewTruss::new(g.clone(), bullet, Side::Left)?;
    let mut id = Report::new();
    id.assert("brace.sigma_is_identity", truss.is_brace_type(), vec![]);
    report.extend(id.into_result()?);
    Ok(BraceData { truss, report })
}

/// A map `r: A×A → A×A`, stored row-major in `(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "YBFile", into = "YBFile")]
pub struct YBMap {
    size: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct YBFile {
    size: usize,
    r: Vec<[usize; 2]>,
}

impl TryFrom<YBFile> for YBMap {
    type Error = AlgebraError;

    fn try_from(f: YBFile) -> Result<Self, AlgebraError> {
        YBMap::new(f.size, f.r.into_iter().map(|[c, d]| (c, d)).collect())
    }
}

impl From<YBMap> for YBFile {
    fn from(m: YBMap) -> Self {
        YBFile {
            size: m.size,
            r: m.pairs.into_iter().map(|(c, d)| [c, d]).collect(),
        }
    }
}

impl YBMap {
    pub fn new(size: usize, pairs: Vec<(usize, usize)>) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::Empty);
        }
        if pairs.len() != size * size {
            return Err(AlgebraError::MapLength {
                len: pairs.len(),
                size: size * size,
            });
        }
        for (i, &(c, d)) in pairs.iter().enumerate() {
            if c >= size || d >= size {
                return Err(AlgebraError::MapOutOfRange {
                    index: i,
                    value: c.max(d),
                    size,
                });
            }
        }
        Ok(Self { size, pairs })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> (usize, usize)) -> Self {
        let pairs = (0..size * size).map(|i| f(i / size, i % size)).collect();
        Self::new(size, pairs).expect("images must lie in the carrier")
    }

    pub fn flip(size: usize) -> Self {
        Self::from_fn(size, |a, b| (b, a))
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |a, b| (a, b))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn apply(&self, a: usize, b: usize) -> (usize, usize) {
        self.pairs[a * self.size + b]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The first pair whose image repeats an earlier one.
    pub fn collision(&self) -> Option<[usize; 2]> {
        let n = self.size;
        let mut seen = vec![false; n * n];
        self.pairs
            .iter()
            .enumerate()
            .find_map(|(i, &(c, d))| std::mem::replace(&mut seen[c * n + d], true).then_some([i / n, i % n]))
    }

    /// Both sides of the braid relation on one triple.
    pub fn braid_sides(&self, a: usize, b: usize, c: usize) -> ([usize; 3], [usize; 3]) {
        // (r×id)(id×r)(r×id), applied right to left
        let (a1, b1) = self.apply(a, b);
        let (b2, c1) = self.apply(b1, c);
        let (a2, b3) = self.apply(a1, b2);
        let left = [a2, b3, c1];
        // (id×r)(r×id)(id×r)
        let (b1, c1) = self.apply(b, c);
        let (a1, b2) = self.apply(a, b1);
        let (b3, c2) = self.apply(b2, c1);
        (left, [a1, b3, c2])
    }
}

/// Checks that `r` is a bijection of `A×A` and satisfies the braid relation
/// `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple.
pub fn verify_ybe(r: &YBMap) -> Report {
    let mut rep = Report::new();
    let collision = r.collision();
    rep.assert(
        "ybe.bijective",
        collision.is_none(),
        collision.map(|w| w.to_vec()).unwrap_or_default(),
    );
    rep.record(
        "ybe.braid",
        scan(r.size(), |[a, b, c]| {
            let (l, rr) = r.braid_sides(a, b, c);
            l == rr
        }),
    );
    rep
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub r: YBMap,
    pub report: Report,
}

/// `r(a,b) = (x, e∘x⁻∘∘a∘e⁻∘∘b)` with `x = e◇a⁻¹◇(a∘e⁻∘∘b)`, where `⁻∘` is the
/// inverse of `(A,∘)`. Evaluated three ways (plain group operations, the heap
/// of `◇`, and the heaps of both operations); the tables must coincide and the
/// result must be a bijective braided map.
pub fn solution_from_truss(t: &SkewTruss, e: usize) -> Result<Solution> {
    let cg = circ_group(t)?;
    let n = t.size();
    Error::check_element(e, n)?;
    let g = t.group();
    let e_bar = cg.inv(e);

    let direct = YBMap::from_fn(n, |a, b| {
        let aeb = t.circ(t.circ(a, e_bar), b);
        let x = g.mul(g.mul(e, g.inv(a)), aeb);
        (x, t.circ(t.circ(t.circ(e, cg.inv(x)), a), t.circ(e_bar, b)))
    });
    let heap = g.heap();
    let with_heap = YBMap::from_fn(n, |a, b| {
        let aeb = cg.mul(a, cg.mul(e_bar, b));
        let x = heap.op(e, a, aeb);
        (x, cg.mul(cg.mul(e, cg.inv(x)), aeb))
    });
    let circ_heap = cg.heap();
    let double_heap = YBMap::from_fn(n, |a, b| {
        let x = heap.op(e, a, circ_heap.op(a, e, b));
        (x, circ_heap.op(circ_heap.op(e, x, a), e, b))
    });

    let mut r = Report::new();
    let diff = |m: &YBMap| {
        (0..n * n)
            .find(|&i| m.pairs[i] != direct.pairs[i])
            .map(|i| vec![i / n, i % n])
    };
    for (name, m) in [
        ("ybe.heap_form_agrees", &with_heap),
        ("ybe.double_heap_form_agrees", &double_heap),
    ] {
        let w = diff(m);
        r.assert(name, w.is_none(), w.unwrap_or_default());
    }
    r.extend(verify_ybe(&direct));
    let report = r.into_result()?;
    Ok(Solution { r: direct, report })
}
