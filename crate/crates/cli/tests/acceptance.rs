//! Acceptance run over the enumerated corpus: every left truss on Z/2 and Z/3
//! (exhaustive search) and on Z/4, the Klein four-group and S3 (structured
//! search). Prints one PASS/FAIL line per criterion and exits non-zero if any
//! fails.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rayon::prelude::*;
use trusslab::algebra::{invert, named_group, validate_group};
use trusslab::enumerate::{
    classify, enumerate_naive, enumerate_structured, pinned_counts, EnumerationResult, Notion, STRUCTURED_BOUND,
};
use trusslab::hopf::{
    check_equivalent_hopf_forms, extract_hopf_brace, hopf_actions_and_cocycle, hopf_hierarchy, linearize, port_hopf,
    verify_hopf_truss_axioms, Trials,
};
use trusslab::io::truss_to_json;
use trusslab::morphism::{compute_pith, enumerate_morphisms, find_truss_isomorphisms, graded_pith};
use trusslab::ring::{ring_from_truss, shifted_ring};
use trusslab::truss::{
    check_equivalent_forms, derive_actions, derived_identities, port_structure, sigma_power_report, translate_family,
    PortTarget,
};
use trusslab::ybe::{check_sigma_invertible, extract_brace, solution_from_truss, YBMap};
use trusslab::{Report, Side, SkewTruss};

const NAIVE: [&str; 2] = ["z2", "z3"];
const STRUCTURED: [&str; 3] = ["z4", "klein4", "s3"];

struct Item {
    label: String,
    truss: SkewTruss,
}

type Outcome = Result<String, String>;
type Corpus = (Vec<(String, EnumerationResult)>, Vec<Item>);

fn failure(label: &str) -> impl Fn(trusslab::Error) -> String + '_ {
    move |e| format!("{label}: {e}")
}

/// Total cases of a report, or the first failing check.
fn clean(label: &str, r: &Report) -> Result<u64, String> {
    match r.first_failure() {
        Some(c) => Err(format!(
            "{label}: {} fails at {:?}",
            c.name,
            c.witness.clone().unwrap_or_default()
        )),
        None => Ok(r.checks.iter().map(|c| c.cases).sum()),
    }
}

/// Runs `f` on every item in parallel and reports the first failure in corpus order.
fn par_all<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Result<R, String> + Sync + Send) -> Result<Vec<R>, String> {
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().collect()
}

fn circ_is_group(t: &SkewTruss) -> bool {
    validate_group(t.circ_table().clone()).is_ok()
}

fn build_corpus() -> Result<Corpus, String> {
    let mut results = Vec::new();
    for name in NAIVE.iter().chain(&STRUCTURED) {
        let group = named_group(name).map_err(failure(name))?;
        let result = if NAIVE.contains(name) {
            enumerate_naive(&group)
        } else {
            enumerate_structured(&group, STRUCTURED_BOUND)
        }
        .map_err(failure(name))?;
        results.push((name.to_string(), result));
    }
    let mut items = Vec::new();
    for (name, result) in &results {
        for (i, truss) in result.trusses().map_err(failure(name))?.into_iter().enumerate() {
            items.push(Item {
                label: format!("{name}#{i}"),
                truss,
            });
        }
    }
    Ok((results, items))
}

fn forms(items: &[Item]) -> Outcome {
    let cases: u64 = par_all(items, |it| {
        let r = check_equivalent_forms(&it.truss).map_err(failure(&it.label))?;
        if r.checks.len() != 5 {
            return Err(format!("{}: expected five forms, got {}", it.label, r.checks.len()));
        }
        clean(&it.label, &r)
    })?
    .into_iter()
    .sum();
    Ok(format!(
        "{} trusses, {cases} tuple evaluations, five forms agree",
        items.len()
    ))
}

fn derived(items: &[Item]) -> Outcome {
    let rows = par_all(items, |it| {
        let t = &it.truss;
        let e = failure(&it.label);
        let mut cases = clean(&it.label, &derived_identities(t).map_err(&e)?)?;
        let actions = derive_actions(t).map_err(&e)?;
        cases += clean(&it.label, &actions.verify(t))?;
        let powers = sigma_power_report(t).map_err(&e)?;
        cases += clean(&it.label, &powers.report)?;
        let inv = check_sigma_invertible(t).map_err(&e)?;
        cases += clean(&it.label, &inv.report)?;
        Ok([
            cases,
            powers.identity_central as u64,
            t.circ_table().identity().is_some() as u64,
        ])
    })?;
    let sum = |k: usize| rows.iter().map(|r| r[k]).sum::<u64>();
    Ok(format!(
        "{} trusses, {} cases; 1◇ central in {}, (A,∘) unital in {}",
        items.len(),
        sum(0),
        sum(1),
        sum(2)
    ))
}

fn oracle(results: &mut [(String, EnumerationResult)]) -> Outcome {
    let mut summary = Vec::new();
    for (name, result) in results.iter_mut() {
        if NAIVE.contains(&name.as_str()) {
            let group = named_group(name).map_err(failure(name))?;
            let structured = enumerate_structured(&group, STRUCTURED_BOUND).map_err(failure(name))?;
            if structured.tables != result.tables {
                return Err(format!("{name}: structured and exhaustive table sets differ"));
            }
        }
        classify(result, Notion::Group).map_err(failure(name))?;
        classify(result, Notion::Heap).map_err(failure(name))?;
        let pinned = pinned_counts(name)
            .map_err(failure(name))?
            .ok_or_else(|| format!("{name}: no pinned counts"))?;
        let found = (
            result.count,
            result.group_classes.as_ref().map_or(0, |c| c.count),
            result.heap_classes.as_ref().map_or(0, |c| c.count),
        );
        if found != (pinned.trusses, pinned.group_classes, pinned.heap_classes) {
            return Err(format!("{name}: found {found:?}, pinned {pinned:?}"));
        }
        summary.push(format!("{name} {}/{}/{}", found.0, found.1, found.2));
    }
    Ok(format!(
        "structured = exhaustive on z2, z3; counts/group classes/heap classes match fixtures: {}",
        summary.join(", ")
    ))
}

fn yang_baxter(items: &[Item]) -> Outcome {
    let groups: Vec<&Item> = items.iter().filter(|it| circ_is_group(&it.truss)).collect();
    let rows = par_all(&groups, |it| {
        let t = &it.truss;
        let n = t.size();
        let g = t.group();
        let trivial = t.circ_table() == g.table();
        for e in 0..n {
            let label = format!("{} e={e}", it.label);
            let sol = solution_from_truss(t, e).map_err(failure(&label))?;
            for name in [
                "ybe.heap_form_agrees",
                "ybe.double_heap_form_agrees",
                "ybe.bijective",
                "ybe.braid",
            ] {
                if !sol.report.passed(name) {
                    return Err(format!("{label}: {name} did not pass"));
                }
            }
            if trivial {
                let expected = if g.is_abelian() {
                    YBMap::flip(n)
                } else {
                    YBMap::from_fn(n, |a, b| (b, g.mul(g.mul(g.mul(g.mul(e, g.inv(b)), a), g.inv(e)), b)))
                };
                if sol.r != expected {
                    return Err(format!("{label}: trivial brace does not give the expected map"));
                }
            }
        }
        Ok([n as u64, (trivial && g.is_abelian()) as u64])
    })?;
    let pairs: u64 = rows.iter().map(|r| r[0]).sum();
    let flips: u64 = rows.iter().map(|r| r[1]).sum();
    Ok(format!(
        "{} trusses with (A,∘) a group, {pairs} (truss, e) solutions bijective and braided; flip on {flips} abelian trivial braces",
        groups.len()
    ))
}

fn rigidity(items: &[Item]) -> Outcome {
    let groups: Vec<&Item> = items.iter().filter(|it| circ_is_group(&it.truss)).collect();
    let rows = par_all(&groups, |it| {
        let t = &it.truss;
        let b = extract_brace(t).map_err(failure(&it.label))?;
        clean(&it.label, &b.report)?;
        let again = extract_brace(&b.truss).map_err(failure(&it.label))?;
        if again.truss != b.truss {
            return Err(format!("{}: extracting a brace from a brace changed it", it.label));
        }
        if t.is_brace_type() {
            if b.truss != *t {
                return Err(format!("{}: brace extraction moved a brace", it.label));
            }
            Ok(0u64)
        } else {
            if let Some(iso) = find_truss_isomorphisms(t, &b.truss).first() {
                return Err(format!("{}: isomorphic to its brace via {iso:?}", it.label));
            }
            Ok(1)
        }
    })?;
    let rigid: u64 = rows.iter().sum();
    Ok(format!(
        "{} trusses with (A,∘) a group: {rigid} with σ ≠ id have no isomorphism to their brace, {} braces fixed by extraction",
        groups.len(),
        groups.len() as u64 - rigid
    ))
}

fn rings(items: &[Item]) -> Outcome {
    let rows = par_all(items, |it| {
        let t = &it.truss;
        if !t.group().is_abelian() {
            return Ok([0u64; 3]);
        }
        let Ok(two) = SkewTruss::new(t.group().clone(), t.circ_table().clone(), Side::TwoSided) else {
            return Ok([0; 3]);
        };
        let e = failure(&it.label);
        let tr = ring_from_truss(&two).map_err(&e)?;
        clean(&it.label, &tr.report)?;
        clean(&it.label, &tr.ring.axioms())?;
        let mut round_trips = 0;
        if two.is_ring_type() {
            if tr.ring.mul != *two.circ_table() || tr.ring.add != *two.group() {
                return Err(format!("{}: σ ≡ 1◇ but the ring differs from (A,◇,∘)", it.label));
            }
            round_trips = 1;
        }
        let mut shifts = 0;
        for c in two.circ_table().centre() {
            let shifted = shifted_ring(&two, c).map_err(&e)?;
            let via = ring_from_truss(&translate_family(&two, c).map_err(&e)?).map_err(&e)?;
            if shifted.ring != via.ring {
                return Err(format!(
                    "{}: shifted ring at {c} differs from the translated ring",
                    it.label
                ));
            }
            shifts += 1;
        }
        Ok([1, round_trips, shifts])
    })?;
    let sum = |k: usize| rows.iter().map(|r| r[k]).sum::<u64>();
    Ok(format!(
        "{} two-sided trusses give rings; {} ring-type round trips; {} central shifts agree with translation",
        sum(0),
        sum(1),
        sum(2)
    ))
}

fn piths(small: &[&Item]) -> Outcome {
    let rows = par_all(small, |a| {
        let mut counts = [0u64; 4];
        for b in small {
            let pair = format!("{} → {}", a.label, b.label);
            let e = failure(&pair);
            let (ta, tb) = (&a.truss, &b.truss);
            let one = tb.one();
            let sigma_b: Vec<usize> = (0..tb.size()).map(|x| tb.sigma(x)).collect();
            let idempotent = (0..tb.size()).all(|x| sigma_b[sigma_b[x]] == sigma_b[x]);
            let collapses = tb.is_ring_type() || tb.is_brace_type();
            for f in enumerate_morphisms(ta, tb, 4).map_err(&e)? {
                let label = format!("{pair} via {:?}", f.map());
                clean(&label, &f.diagrams())?;
                let p = compute_pith(&f).map_err(failure(&label))?;
                clean(&label, &p.report)?;
                let g = graded_pith(&f).map_err(failure(&label))?;
                clean(&label, &g.report)?;

                let preimage = |targets: &[usize]| -> Vec<usize> {
                    (0..ta.size()).filter(|&x| targets.contains(&f.apply(x))).collect()
                };
                let kernel = preimage(&[one]);
                if p.chambers[0] != kernel {
                    return Err(format!("{label}: chamber 0 is not the kernel"));
                }
                let mask: Vec<bool> = (0..ta.size()).map(|x| kernel.contains(&x)).collect();
                if !ta.group().is_normal_subgroup(&mask) {
                    return Err(format!("{label}: kernel is not a normal subgroup"));
                }
                if idempotent {
                    let first = preimage(&[sigma_b[one]]);
                    let mut power = one;
                    for m in 0..6 {
                        if m > 0 && (preimage(&[power]) != first || p.chambers[p.fold(m)] != first) {
                            return Err(format!("{label}: chamber {m} differs from chamber 1"));
                        }
                        power = sigma_b[power];
                    }
                    let mut union = preimage(&[one, sigma_b[one]]);
                    union.sort_unstable();
                    if p.members() != union {
                        return Err(format!("{label}: pith is not f⁻¹(1◇) ∪ f⁻¹(σ(1◇))"));
                    }
                    counts[1] += 1;
                }
                if collapses {
                    if p.members() != kernel || p.chambers.iter().any(|c| *c != kernel) {
                        return Err(format!("{label}: pith does not collapse to the kernel"));
                    }
                    counts[2] += 1;
                }
                if p.preperiod + p.period > 1 {
                    counts[3] += 1;
                }
                counts[0] += 1;
            }
        }
        Ok(counts)
    })?;
    let sum = |k: usize| rows.iter().map(|r| r[k]).sum::<u64>();
    Ok(format!(
        "{} morphisms among {} trusses of order ≤ 4; idempotent-cocycle codomain {}, ring/brace collapse {}, several chambers {}",
        sum(0),
        small.len(),
        sum(1),
        sum(2),
        sum(3)
    ))
}

fn hopf(small: &[&Item]) -> Outcome {
    let rows = par_all(small, |it| {
        let t = &it.truss;
        let n = t.size();
        let e = failure(&it.label);
        let h = linearize(t).map_err(&e)?;
        let trials = Trials { count: 10, seed: 0 };
        clean(&it.label, &h.structure_report())?;
        clean(&it.label, &verify_hopf_truss_axioms(&h, trials).map_err(&e)?)?;
        clean(&it.label, &check_equivalent_hopf_forms(&h, trials).map_err(&e)?)?;
        clean(&it.label, &hopf_actions_and_cocycle(&h, trials).map_err(&e)?)?;

        let mut squares = 0u64;
        for x in 0..n {
            let (hx, _) = hopf_hierarchy(&h, &h.basis(x)).map_err(&e)?;
            if hx != linearize(&translate_family(t, x).map_err(&e)?).map_err(&e)? {
                return Err(format!("{}: translation square fails at e={x}", it.label));
            }
            squares += 1;
        }
        if circ_is_group(t) {
            let (hb, _) = extract_hopf_brace(&h).map_err(&e)?;
            if hb != linearize(&extract_brace(t).map_err(&e)?.truss).map_err(&e)? {
                return Err(format!("{}: brace square fails", it.label));
            }
            squares += 1;
        }
        let shift: Vec<usize> = (0..n).map(|a| (a + 1) % n).collect();
        let back = invert(&shift);
        let group = validate_group(t.group().table().transport(&back)).map_err(|g| format!("{}: {g}", it.label))?;
        let targets = [
            PortTarget::Group(group),
            PortTarget::Semigroup(t.circ_table().transport(&back)),
        ];
        for target in targets {
            let (hp, _) = port_hopf(&h, target.clone(), &shift).map_err(&e)?;
            let ported = port_structure(t, target, &shift).map_err(&e)?;
            if hp != linearize(&ported).map_err(&e)? {
                return Err(format!("{}: porting square fails", it.label));
            }
            squares += 1;
        }
        Ok(squares)
    })?;
    Ok(format!(
        "{} trusses of order ≤ 4 exact on basis tuples and 10 seeded trials; {} commuting squares hold",
        small.len(),
        rows.iter().sum::<u64>()
    ))
}

fn run_cli(dir: &Path, jobs: usize, tag: &str, args: &[String]) -> Result<(Vec<u8>, Option<i32>), String> {
    let out = dir.join(format!("{tag}.jobs{jobs}.json"));
    let status = Command::new(env!("CARGO_BIN_EXE_trusslab"))
        .arg("--jobs")
        .arg(jobs.to_string())
        .arg("--out")
        .arg(&out)
        .args(args)
        .status()
        .map_err(|e| format!("cannot run trusslab: {e}"))?;
    let bytes = std::fs::read(&out).map_err(|e| format!("{tag}: no report written: {e}"))?;
    Ok((bytes, status.code()))
}

fn determinism(items: &[Item]) -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut runs: Vec<(String, Vec<String>)> = Vec::new();
    for name in NAIVE.iter().chain(&STRUCTURED) {
        let mode = if NAIVE.contains(name) { "naive" } else { "structured" };
        runs.push((
            format!("enumerate-{name}"),
            [
                "enumerate",
                "--group",
                name,
                "--mode",
                mode,
                "--classify",
                "both",
                "--tables",
            ]
            .map(String::from)
            .to_vec(),
        ));
    }
    for it in items.iter().step_by(97) {
        let path = dir.path().join(format!("{}.json", it.label.replace('#', "-")));
        std::fs::write(&path, truss_to_json(&it.truss)).map_err(|e| e.to_string())?;
        let p = path.display().to_string();
        let tag = it.label.replace('#', "-");
        runs.push((
            format!("verify-{tag}"),
            vec!["verify".into(), "--input".into(), p.clone()],
        ));
        runs.push((
            format!("family-{tag}"),
            vec!["family".into(), "--input".into(), p.clone(), "--e".into(), "1".into()],
        ));
        if circ_is_group(&it.truss) {
            runs.push((
                format!("ybe-{tag}"),
                vec!["ybe".into(), "--input".into(), p.clone(), "--brace".into()],
            ));
        }
        if it.truss.size() <= 4 {
            runs.push((
                format!("hopf-{tag}"),
                vec!["hopf".into(), "--input".into(), p.clone(), "--e".into(), "1".into()],
            ));
        }
    }
    for (tag, args) in &runs {
        let serial = run_cli(dir.path(), 1, tag, args)?;
        let parallel = run_cli(dir.path(), 8, tag, args)?;
        if serial != parallel {
            return Err(format!("{tag}: --jobs 1 and --jobs 8 reports differ"));
        }
        if serial.1 != Some(0) {
            return Err(format!("{tag}: exited with {:?}", serial.1));
        }
    }
    Ok(format!(
        "{} CLI reports byte-identical under --jobs 1 and --jobs 8",
        runs.len()
    ))
}

fn report(number: usize, title: &str, limit: Option<f64>, f: &mut dyn FnMut() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let secs = start.elapsed().as_secs_f64();
    let in_time = limit.is_none_or(|l| secs < l);
    let passed = outcome.is_ok() && in_time;
    let budget = limit.map(|l| format!(" of {l:.0}s")).unwrap_or_default();
    let detail = match outcome {
        Ok(s) if in_time => s,
        Ok(s) => format!("{s}; over the time budget"),
        Err(e) => e,
    };
    println!(
        "criterion {number} {} [{title}] {detail} ({secs:.2}s{budget})",
        if passed { "PASS" } else { "FAIL" }
    );
    passed
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (mut results, items) = match build_corpus() {
        Ok(c) => c,
        Err(e) => {
            println!("corpus FAIL {e}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "corpus: {} trusses built in {:.2}s",
        items.len(),
        start.elapsed().as_secs_f64()
    );
    let small: Vec<&Item> = items.iter().filter(|it| it.truss.size() <= 4).collect();

    // Criterion numbers on the command line restrict the run, e.g. `-- 4 8`.
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let wanted = |k: usize| only.is_empty() || only.contains(&k);
    let mut outcomes = Vec::new();
    let mut run = |k: usize, title: &str, limit: Option<f64>, f: &mut dyn FnMut() -> Outcome| {
        if wanted(k) {
            outcomes.push(report(k, title, limit, f));
        }
    };
    run(1, "law equivalence", Some(60.0), &mut || forms(&items));
    run(2, "derived structure", None, &mut || derived(&items));
    run(3, "oracle equivalence", None, &mut || oracle(&mut results));
    run(4, "Yang-Baxter", Some(120.0), &mut || yang_baxter(&items));
    run(5, "brace rigidity", None, &mut || rigidity(&items));
    run(6, "rings", None, &mut || rings(&items));
    run(7, "piths", None, &mut || piths(&small));
    run(8, "Hopf linearization", Some(300.0), &mut || hopf(&small));
    run(9, "determinism", None, &mut || determinism(&items));
    let failed = outcomes.iter().filter(|&&ok| !ok).count();
    println!(
        "acceptance: {} of {} criteria passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
