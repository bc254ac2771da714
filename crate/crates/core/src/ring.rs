//! Rings from two-sided trusses over abelian groups.

use serde::{Serialize, Serializer};

use crate::algebra::{GroupTable, MagmaTable};
use crate::error::{Error, Result};
use crate::morphism::TrussMorphism;
use crate::report::Report;
use crate::scan::scan;
use crate::truss::{sigma_power_report, translate_family, SkewTruss};

/// An abelian group `(A,+)` with a multiplication `•`. Not necessarily unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    pub add: GroupTable,
    pub mul: MagmaTable,
}

impl Serialize for RingTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RingFile {
            size: usize,
            add: Vec<Vec<usize>>,
            mul: Vec<Vec<usize>>,
        }
        RingFile {
            size: self.size(),
            add: self.add.table().rows(),
            mul: self.mul.rows(),
        }
        .serialize(s)
    }
}

impl RingTable {
    pub fn size(&self) -> usize {
        self.add.size()
    }

    /// Abelian addition, associative `•`, both distributive laws and
    /// `(-a)•b = a•(-b) = -(a•b)`.
    pub fn axioms(&self) -> Report {
        let (g, m, n) = (&self.add, &self.mul, self.size());
        let mut r = Report::new();
        r.forall("ring.add_abelian", n, |[a, b]| g.mul(a, b) == g.mul(b, a));
        r.record("ring.mul_associative", m.associativity());
        r.forall("ring.left_distributive", n, |[a, b, c]| {
            m.op(a, g.mul(b, c)) == g.mul(m.op(a, b), m.op(a, c))
        });
        r.forall("ring.right_distributive", n, |[a, b, c]| {
            m.op(g.mul(a, b), c) == g.mul(m.op(a, c), m.op(b, c))
        });
        r.forall("ring.negation", n, |[a, b]| {
            let neg = g.inv(m.op(a, b));
            m.op(g.inv(a), b) == neg && m.op(a, g.inv(b)) == neg
        });
        r
    }
}

/// Checks both distributive laws against the single cocycle
/// `σ(a) = a∘0 = 0∘a`, independently of the side the truss was declared with.
pub fn verify_two_sided(t: &SkewTruss) -> Result<Report> {
    let g = t.group();
    if let Some((a, b)) = g.table().commutativity_witness() {
        return Err(Error::NotAbelian(a, b));
    }
    let (n, zero) = (t.size(), t.one());
    let sigma: Vec<usize> = (0..n).map(|a| t.circ(a, zero)).collect();
    let minus = |x: usize, y: usize| g.mul(x, g.inv(y));
    let mut r = Report::new();
    r.forall("two_sided.cocycles_agree", n, |[a]| t.circ(zero, a) == sigma[a]);
    r.forall("two_sided.left_law", n, |[a, b, c]| {
        t.circ(a, g.mul(b, c)) == minus(g.mul(t.circ(a, b), t.circ(a, c)), sigma[a])
    });
    r.forall("two_sided.right_law", n, |[a, b, c]| {
        t.circ(g.mul(a, b), c) == minus(g.mul(t.circ(a, c), t.circ(b, c)), sigma[c])
    });
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct TrussRing {
    pub ring: RingTable,
    pub report: Report,
}

/// `a•b = a∘b − σ(a+b)`. Fails if the truss is not two-sided, and with a
/// [`Violation`](crate::Violation) if any ring axiom fails.
pub fn ring_from_truss(t: &SkewTruss) -> Result<TrussRing> {
    let mut report = verify_two_sided(t)?.into_result()?;
    let g = t.group();
    let mul = MagmaTable::from_fn(t.size(), |a, b| {
        g.mul(t.circ(a, b), g.inv(t.circ(g.mul(a, b), g.identity())))
    });
    let ring = RingTable { add: g.clone(), mul };
    report.extend(ring.axioms().into_result()?);
    report.extend(sigma_power_report(&t.as_left()?)?.report);
    Ok(TrussRing { ring, report })
}

/// The ring on `(A, +ₑ)` with `a +ₑ b = a + b − e` and
/// `a •ₑ b = a∘b − a∘e − b∘e + e∘e + e`, for `e` central in `(A,∘)`.
/// Cross-checked against the ring of the translated truss.
pub fn shifted_ring(t: &SkewTruss, e: usize) -> Result<TrussRing> {
    Error::check_element(e, t.size())?;
    if let Some(witness) = t.circ_table().centrality_witness(e) {
        return Err(Error::NotCentral { element: e, witness });
    }
    let mut report = verify_two_sided(t)?.into_result()?;
    let g = t.group();
    let add = g.at_base_point(e);
    let ee = t.circ(e, e);
    let mul = MagmaTable::from_fn(t.size(), |a, b| {
        let ae = g.inv(t.circ(a, e));
        let be = g.inv(t.circ(b, e));
        g.mul(g.mul(g.mul(g.mul(t.circ(a, b), ae), be), ee), e)
    });
    let ring = RingTable { add, mul };
    report.extend(ring.axioms().into_result()?);

    let via_translation = ring_from_truss(&translate_family(t, e)?)?;
    let mut r = Report::new();
    let n = t.size();
    r.record(
        "shifted.matches_translated_ring",
        scan(n, |[a, b]| {
            ring.mul.op(a, b) == via_translation.ring.mul.op(a, b)
                && ring.add.mul(a, b) == via_translation.ring.add.mul(a, b)
        }),
    );
    report.extend(r.into_result()?);
    Ok(TrussRing { ring, report })
}

/// A truss morphism between two-sided trusses is a ring homomorphism of the
/// associated rings.
pub fn ring_functoriality(f: &TrussMorphism<'_>) -> Result<Report> {
    let ra = ring_from_truss(f.domain())?.ring;
    let rb = ring_from_truss(f.codomain())?.ring;
    let map = f.map();
    let mut r = Report::new();
    r.forall("ring.functorial_add", ra.size(), |[a, b]| {
        map[ra.add.mul(a, b)] == rb.add.mul(map[a], map[b])
    });
    r.forall("ring.functorial_mul", ra.size(), |[a, b]| {
        map[ra.mul.op(a, b)] == rb.mul.op(map[a], map[b])
    });
    Ok(r.into_result()?)
}
