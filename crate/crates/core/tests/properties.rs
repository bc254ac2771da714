use std::sync::OnceLock;

use proptest::prelude::*;
use trusslab::algebra::named_group;
use trusslab::enumerate::{enumerate_structured, EnumerationResult, STRUCTURED_BOUND};
use trusslab::hopf::{linearize, verify_hopf_truss_axioms, Trials};
use trusslab::io::{truss_from_json, truss_to_json};
use trusslab::truss::{check_equivalent_forms, derived_identities, hierarchy_port, translate_family};
use trusslab::ybe::solution_from_truss;
use trusslab::{Side, SkewTruss};

const GROUPS: [&str; 3] = ["z4", "klein4", "s3"];

fn corpus() -> &'static [EnumerationResult] {
    static CORPUS: OnceLock<Vec<EnumerationResult>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        GROUPS
            .iter()
            .map(|g| enumerate_structured(&named_group(g).unwrap(), STRUCTURED_BOUND).unwrap())
            .collect()
    })
}

fn pick(group: usize, index: usize) -> (&'static EnumerationResult, SkewTruss) {
    let r = &corpus()[group];
    let circ = r.tables[index % r.count].clone();
    (r, SkewTruss::new(r.group.clone(), circ, Side::Left).unwrap())
}

/// A retraction onto a non-empty subset: idempotent by construction.
fn retraction(n: usize, keep: &[bool], targets: &[usize]) -> Vec<usize> {
    let image: Vec<usize> = (0..n).filter(|&a| keep[a]).collect();
    let image = if image.is_empty() { vec![0] } else { image };
    (0..n)
        .map(|a| {
            if image.contains(&a) {
                a
            } else {
                image[targets[a] % image.len()]
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn idempotent_cocycles_give_trusses(
        name in prop::sample::select(vec!["z2", "z5", "z6", "klein4", "s3", "d4", "z2xz3"]),
        keep in prop::collection::vec(any::<bool>(), 8),
        targets in prop::collection::vec(0usize..8, 8),
    ) {
        let g = named_group(name).unwrap();
        let sigma = retraction(g.size(), &keep, &targets);
        let t = SkewTruss::idempotent(g, &sigma).unwrap();
        prop_assert_eq!(t.cocycle(), &sigma[..]);
        prop_assert!(check_equivalent_forms(&t).unwrap().ok());
        prop_assert!(derived_identities(&t).unwrap().ok());
    }

    #[test]
    fn ported_family_stays_in_the_enumeration(group in 0usize..3, index in any::<usize>(), e in 0usize..6) {
        let (r, t) = pick(group, index);
        let e = e % t.size();
        let (ported, report) = hierarchy_port(&t, e).unwrap();
        prop_assert!(report.ok());
        prop_assert!(r.contains(ported.circ_table()));
    }

    #[test]
    fn translating_back_restores_the_truss(group in 0usize..3, index in any::<usize>(), e in 0usize..6) {
        let (_, t) = pick(group, index);
        let e = e % t.size();
        let there = translate_family(&t, e).unwrap();
        let back = translate_family(&there, t.one()).unwrap();
        prop_assert_eq!(back.group(), t.group());
        prop_assert_eq!(back.circ_table(), t.circ_table());
    }

    #[test]
    fn json_round_trip(group in 0usize..3, index in any::<usize>()) {
        let (_, t) = pick(group, index);
        prop_assert_eq!(truss_from_json(&truss_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn mirror_of_the_opposite_right_truss_is_the_original(group in 0usize..3, index in any::<usize>()) {
        let (_, t) = pick(group, index);
        let right = SkewTruss::new(t.group().opposite(), t.circ_table().transpose(), Side::Right).unwrap();
        prop_assert_eq!(right.mirror().unwrap(), t);
    }

    #[test]
    fn solutions_at_any_base_point(group in 0usize..3, index in any::<usize>(), e in 0usize..6) {
        let r = &corpus()[group];
        let groups: Vec<_> = r
            .tables
            .iter()
            .filter(|c| trusslab::algebra::validate_group((*c).clone()).is_ok())
            .collect();
        let circ = groups[index % groups.len()].clone();
        let t = SkewTruss::new(r.group.clone(), circ, Side::Left).unwrap();
        let sol = solution_from_truss(&t, e % t.size()).unwrap();
        prop_assert!(sol.report.ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hopf_laws_hold_for_any_seed(group in 0usize..2, index in any::<usize>(), seed in any::<u64>()) {
        let (_, t) = pick(group, index);
        let h = linearize(&t).unwrap();
        let report = verify_hopf_truss_axioms(&h, Trials { count: 3, seed }).unwrap();
        prop_assert!(report.ok());
    }
}
