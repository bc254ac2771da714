//! One function per subcommand. Each loads its inputs, calls the library and
//! assembles the JSON report.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use trusslab::algebra::{canonical_group_name, named_group, GroupTable};
use trusslab::enumerate::{classify, enumerate_naive, enumerate_structured, pinned_counts, Notion};
use trusslab::hopf::{
    check_equivalent_hopf_forms, extract_hopf_brace, hopf_actions_and_cocycle, hopf_hierarchy, linearize, port_hopf,
    verify_hopf_truss_axioms, Trials,
};
use trusslab::io::{magma_from_json, map_from_json, truss_from_json, MapFile, TrussFile};
use trusslab::morphism::{build_morphism, enumerate_morphisms, find_truss_isomorphisms, graded_pith};
use trusslab::ring::{ring_from_truss, shifted_ring};
use trusslab::truss::{
    check_equivalent_forms, derive_actions, derived_identities, hierarchy_port, port_structure, sigma_power_report,
    translate_family, PortTarget,
};
use trusslab::ybe::{check_sigma_invertible, extract_brace, solution_from_truss, verify_ybe, YBMap};
use trusslab::{Error, Report, SkewTruss};

use crate::{ClassifyArg, EnumerateArgs, Failure, HopfArgs, HopfCheck, ModeArg, MorphismArgs, PortArgs, YbeArgs};

type Outcome = Result<Value, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

/// Attaches the file name to a library error without changing its exit code.
fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let f = Failure::from(e);
        Failure {
            message: format!("{}: {}", path.display(), f.message),
            ..f
        }
    }
}

fn load_truss(path: &Path) -> Result<SkewTruss, Failure> {
    truss_from_json(&read(path)?).map_err(in_file(path))
}

fn checks(r: &Report) -> Value {
    json!(r.checks)
}

fn prefixed(mut r: Report, prefix: &str) -> Report {
    for c in &mut r.checks {
        c.name = format!("{prefix}{}", c.name);
    }
    r
}

fn left_checks(t: &SkewTruss) -> trusslab::Result<Report> {
    let mut r = check_equivalent_forms(t)?;
    r.extend(derived_identities(t)?);
    r.extend(derive_actions(t)?.verify(t));
    r.extend(sigma_power_report(t)?.report);
    r.extend(check_sigma_invertible(t)?.report);
    Ok(r)
}

pub fn verify(input: &Path) -> Outcome {
    let t = load_truss(input)?;
    let mut r = Report::new();
    if t.side().includes_left() {
        r.extend(left_checks(&t)?);
    }
    if t.side().includes_right() {
        r.extend(prefixed(left_checks(&t.mirror()?)?, "right."));
    }
    Ok(json!({
        "ok": r.ok(),
        "size": t.size(),
        "side": t.side(),
        "sigma": t.cocycle(),
        "brace_type": t.is_brace_type(),
        "ring_type": t.is_ring_type(),
        "checks": checks(&r),
    }))
}

pub fn enumerate(a: &EnumerateArgs) -> Outcome {
    let name = canonical_group_name(&a.group);
    let group = named_group(&name)?;
    let mut result = match a.mode {
        ModeArg::Naive => enumerate_naive(&group)?,
        ModeArg::Structured => enumerate_structured(&group, a.bound)?,
    };
    let notions: &[Notion] = match a.classify {
        ClassifyArg::None => &[],
        ClassifyArg::Group => &[Notion::Group],
        ClassifyArg::Heap => &[Notion::Heap],
        ClassifyArg::Both => &[Notion::Group, Notion::Heap],
    };
    for &notion in notions {
        classify(&mut result, notion)?;
    }

    let mut out = json!(result);
    if !a.tables {
        out.as_object_mut().expect("result is an object").remove("tables");
    }
    let mut ok = true;
    out["fixture"] = match pinned_counts(&name)? {
        Some(pinned) => {
            let mut cmp = json!({ "trusses": pinned.trusses, "count_matches": pinned.trusses == result.count });
            ok &= pinned.trusses == result.count;
            let classes = [
                ("group_classes", &result.group_classes, pinned.group_classes),
                ("heap_classes", &result.heap_classes, pinned.heap_classes),
            ];
            for (key, found, expected) in classes {
                if let Some(c) = found {
                    cmp[key] = json!(expected);
                    cmp[format!("{key}_match")] = json!(c.count == expected);
                    ok &= c.count == expected;
                }
            }
            cmp
        }
        None => Value::Null,
    };
    out["group"] = json!(name);
    out["ok"] = json!(ok);
    Ok(out)
}

pub fn family(input: &Path, e: usize) -> Outcome {
    let t = load_truss(input)?;
    let translated = translate_family(&t, e)?;
    let mut out = json!({ "e": e, "translated": TrussFile::from(&translated) });
    let r = if t.side().includes_left() {
        let (ported, r) = hierarchy_port(&t, e)?;
        out["ported"] = json!(TrussFile::from(&ported));
        r
    } else {
        Report::new()
    };
    out["checks"] = checks(&r);
    out["ok"] = json!(r.ok());
    Ok(out)
}

/// Domain, codomain and carrier map; paths inside the map file are relative to it.
fn morphism_inputs(a: &MorphismArgs) -> Result<(SkewTruss, SkewTruss, Option<MapFile>), Failure> {
    let map = match &a.map {
        Some(p) => Some((
            map_from_json(&read(p)?).map_err(in_file(p))?,
            p.parent().map(Path::to_path_buf),
        )),
        None => None,
    };
    let resolve = |flag: &Option<PathBuf>, named: Option<&String>, what: &str| -> Result<PathBuf, Failure> {
        if let Some(p) = flag {
            return Ok(p.clone());
        }
        match (named, &map) {
            (Some(n), Some((_, Some(dir)))) => Ok(dir.join(n)),
            (Some(n), _) => Ok(PathBuf::from(n)),
            (None, _) => Err(Failure::input(format!(
                "no {what} given: pass --{what} or name it in the map file"
            ))),
        }
    };
    let file = map.as_ref().map(|(m, _)| m);
    let domain = resolve(&a.domain, file.and_then(|m| m.domain.as_ref()), "domain")?;
    let codomain = resolve(&a.codomain, file.and_then(|m| m.codomain.as_ref()), "codomain")?;
    Ok((load_truss(&domain)?, load_truss(&codomain)?, map.map(|(m, _)| m)))
}

pub fn pith(a: &MorphismArgs) -> Outcome {
    let (dom, cod, map) = morphism_inputs(a)?;
    let map = map.ok_or_else(|| Failure::input("pith needs --map".into()))?;
    let f = build_morphism(&dom, &cod, map.map)?;
    let graded = graded_pith(&f)?;
    let mut r = f.diagrams();
    r.extend(graded.pith.report.clone());
    r.extend(graded.report.clone());
    let p = &graded.pith;
    Ok(json!({
        "ok": r.ok(),
        "map": f.map(),
        "heap_morphism": f.is_heap_morphism(),
        "orbit": p.orbit,
        "preperiod": p.preperiod,
        "period": p.period,
        "chambers": p.chambers,
        "graded_elements": graded.elements,
        "checks": checks(&r),
    }))
}

pub fn morphism(a: &MorphismArgs) -> Outcome {
    let (dom, cod, map) = morphism_inputs(a)?;
    match map {
        Some(m) => {
            let f = build_morphism(&dom, &cod, m.map)?;
            let r = f.diagrams();
            Ok(json!({
                "ok": r.ok(),
                "map": f.map(),
                "heap_morphism": f.is_heap_morphism(),
                "checks": checks(&r),
            }))
        }
        None => {
            let found = enumerate_morphisms(&dom, &cod, a.bound)?;
            let maps: Vec<&[usize]> = found.iter().map(|f| f.map()).collect();
            Ok(json!({ "ok": true, "count": maps.len(), "maps": maps }))
        }
    }
}

pub fn ybe(a: &YbeArgs) -> Outcome {
    if let Some(p) = &a.source.verify {
        let r: YBMap = serde_json::from_str(&read(p)?).map_err(|e| in_file(p)(e.into()))?;
        let rep = verify_ybe(&r);
        return Ok(json!({ "ok": rep.ok(), "size": r.size(), "checks": checks(&rep) }));
    }
    let input = a.source.input.as_ref().expect("clap requires --input or --verify");
    let t = load_truss(input)?;
    let e = a.e.unwrap_or_else(|| t.one());
    let sol = solution_from_truss(&t, e)?;
    let mut r = sol.report;
    let mut out = json!(sol.r);
    out["e"] = json!(e);
    if a.brace {
        let b = extract_brace(&t)?;
        r.extend(b.report.clone());
        let isos = find_truss_isomorphisms(&t, &b.truss);
        if t.is_brace_type() {
            r.assert("brace.equals_source", b.truss == t, vec![]);
        } else {
            let w = isos.first().cloned().unwrap_or_default();
            r.assert("brace.not_isomorphic_to_source", isos.is_empty(), w);
        }
        out["brace"] = json!(TrussFile::from(&b.truss));
    }
    out["checks"] = checks(&r);
    out["ok"] = json!(r.ok());
    Ok(out)
}

pub fn ring(input: &Path, e: Option<usize>) -> Outcome {
    let t = load_truss(input)?;
    let tr = match e {
        Some(e) => shifted_ring(&t, e)?,
        None => ring_from_truss(&t)?,
    };
    Ok(json!({ "ok": tr.report.ok(), "e": e, "ring": tr.ring, "checks": checks(&tr.report) }))
}

pub fn hopf(a: &HopfArgs) -> Outcome {
    let t = load_truss(&a.input)?;
    let h = linearize(&t)?;
    let trials = Trials {
        count: a.trials,
        seed: a.seed,
    };
    let mut r = h.structure_report();
    let wants = |c: HopfCheck| a.check == HopfCheck::All || a.check == c;
    if wants(HopfCheck::Axioms) {
        r.extend(verify_hopf_truss_axioms(&h, trials)?);
    }
    if wants(HopfCheck::Forms) {
        r.extend(check_equivalent_hopf_forms(&h, trials)?);
    }
    if wants(HopfCheck::Actions) {
        r.extend(hopf_actions_and_cocycle(&h, trials)?);
    }
    if let Some(e) = a.e {
        if e >= t.size() {
            return Err(Error::ElementOutOfRange {
                element: e,
                size: t.size(),
            }
            .into());
        }
        let (translated, hr) = hopf_hierarchy(&h, &h.basis(e))?;
        r.extend(hr);
        let set_level = linearize(&translate_family(&t, e)?)?;
        r.assert("square.translation", translated == set_level, vec![e]);
    }
    match extract_brace(&t) {
        Ok(b) => {
            let (hb, br) = extract_hopf_brace(&h)?;
            r.extend(br);
            r.assert("square.brace", hb == linearize(&b.truss)?, vec![]);
        }
        Err(Error::CircNotGroup(_)) => r.skip("square.brace", "(A,∘) is not a group"),
        Err(e) => return Err(e.into()),
    }
    Ok(json!({
        "ok": r.ok(),
        "trials": a.trials,
        "seed": a.seed,
        "linearized": h,
        "checks": checks(&r),
    }))
}

pub fn port(a: &PortArgs) -> Outcome {
    let t = load_truss(&a.input)?;
    let (path, is_group) = match (&a.target.group, &a.target.semigroup) {
        (Some(p), _) => (p, true),
        (None, Some(p)) => (p, false),
        (None, None) => unreachable!("clap requires a target"),
    };
    let table = magma_from_json(&read(path)?).map_err(in_file(path))?;
    let target = if is_group {
        PortTarget::Group(GroupTable::from_magma(table).map_err(|e| in_file(path)(e.into()))?)
    } else {
        PortTarget::Semigroup(table)
    };
    let f = map_from_json(&read(&a.map)?).map_err(in_file(&a.map))?.map;
    let ported = port_structure(&t, target.clone(), &f)?;
    let mut r = Report::new();
    if a.hopf {
        let (hp, hr) = port_hopf(&linearize(&t)?, target, &f)?;
        r.extend(hr);
        r.assert("square.port", hp == linearize(&ported)?, vec![]);
    }
    Ok(json!({ "ok": r.ok(), "truss": TrussFile::from(&ported), "checks": checks(&r) }))
}
