//! `trusslab`: verify, enumerate and transform finite skew trusses.
//!
//! Every run prints a JSON report with a top-level `"ok"`. Exit status is 0
//! when all checks pass, 1 when a check fails, 2 when an input cannot be read.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "trusslab", version, about = "Computational toolkit for finite skew trusses")]
struct Cli {
    /// Worker threads for parallel searches (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add wall-clock timings to the report (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a truss file and every identity derived from it.
    Verify(Input),
    /// List all left trusses on a built-in group.
    Enumerate(EnumerateArgs),
    /// Translate a truss to a new base point and port the result back.
    Family(FamilyArgs),
    /// Chambers of the pith of a morphism.
    Pith(MorphismArgs),
    /// Yang–Baxter solution of a truss whose ∘ is a group, or check a given map.
    Ybe(YbeArgs),
    /// Ring of a two-sided truss, optionally shifted to a central element.
    Ring(RingArgs),
    /// Exact-rational linearization and its Hopf truss checks.
    Hopf(HopfArgs),
    /// Port one operation of a truss along a bijection.
    Port(PortArgs),
    /// Check a morphism, or list all morphisms between two trusses.
    Morphism(MorphismArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// Truss file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Naive,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassifyArg {
    None,
    Group,
    Heap,
    Both,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// z<n>, klein4, s3, d<n>, or a product such as z2xz2.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Structured)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = ClassifyArg::Both)]
    classify: ClassifyArg,
    /// Largest group order accepted by the structured search.
    #[arg(long, default_value_t = trusslab::enumerate::STRUCTURED_BOUND)]
    bound: usize,
    /// Include every ∘ table in the report.
    #[arg(long)]
    tables: bool,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    input: PathBuf,
    /// New base point.
    #[arg(long)]
    e: usize,
}

#[derive(Args, Debug)]
struct MorphismArgs {
    /// Map file `{"map": [...]}`; may name its domain and codomain files.
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long)]
    domain: Option<PathBuf>,
    #[arg(long)]
    codomain: Option<PathBuf>,
    /// Largest domain searched when listing morphisms.
    #[arg(long, default_value_t = trusslab::morphism::DEFAULT_MORPHISM_BOUND)]
    bound: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "source")]
struct YbeSource {
    #[arg(long)]
    input: Option<PathBuf>,
    /// Check an existing solution file `{"size": n, "r": [[c,d], ...]}`.
    #[arg(long)]
    verify: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct YbeArgs {
    #[command(flatten)]
    source: YbeSource,
    /// Base point of the solution; defaults to 1◇.
    #[arg(long)]
    e: Option<usize>,
    /// Also extract the brace and check it is not isomorphic to the truss.
    #[arg(long)]
    brace: bool,
}

#[derive(Args, Debug)]
struct RingArgs {
    #[arg(long)]
    input: PathBuf,
    /// Shift to this ∘-central element.
    #[arg(long)]
    e: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HopfCheck {
    All,
    Axioms,
    Forms,
    Actions,
}

#[derive(Args, Debug)]
struct HopfArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = HopfCheck::All)]
    check: HopfCheck,
    /// Random rational trials per identity.
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also translate to this base point and compare with the set-level translation.
    #[arg(long)]
    e: Option<usize>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "target")]
struct PortTargetArgs {
    /// Magma file of a group `(B,∗)`; `∘` is ported.
    #[arg(long)]
    group: Option<PathBuf>,
    /// Magma file of a semigroup `(B,•)`; `◇` is ported.
    #[arg(long)]
    semigroup: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PortArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    target: PortTargetArgs,
    /// Map file with the bijection `B → A`.
    #[arg(long)]
    map: PathBuf,
    /// Also port the linearization and compare.
    #[arg(long)]
    hopf: bool,
}

/// A failed run: exit code plus what goes into the report.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    pub witness: Option<Vec<usize>>,
}

impl From<trusslab::Error> for Failure {
    fn from(e: trusslab::Error) -> Self {
        Failure {
            code: if e.is_malformed_input() { 2 } else { 1 },
            message: e.to_string(),
            witness: e.witness(),
        }
    }
}

impl Failure {
    pub fn input(message: String) -> Self {
        Failure {
            code: 2,
            message,
            witness: None,
        }
    }
}

fn dispatch(command: &Command) -> Result<Value, Failure> {
    use commands::*;
    match command {
        Command::Verify(a) => verify(&a.input),
        Command::Enumerate(a) => enumerate(a),
        Command::Family(a) => family(&a.input, a.e),
        Command::Pith(a) => pith(a),
        Command::Ybe(a) => ybe(a),
        Command::Ring(a) => ring(&a.input, a.e),
        Command::Hopf(a) => hopf(a),
        Command::Port(a) => port(a),
        Command::Morphism(a) => morphism(a),
    }
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::Verify(_) => "verify",
        Command::Enumerate(_) => "enumerate",
        Command::Family(_) => "family",
        Command::Pith(_) => "pith",
        Command::Ybe(_) => "ybe",
        Command::Ring(_) => "ring",
        Command::Hopf(_) => "hopf",
        Command::Port(_) => "port",
        Command::Morphism(_) => "morphism",
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start {} worker threads: {e}", cli.jobs);
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = pool.install(|| dispatch(&cli.command));
    let (mut report, code) = match outcome {
        Ok(v) => {
            let ok = v.get("ok").and_then(Value::as_bool).unwrap_or(false);
            (v, if ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            let mut v = json!({ "ok": false, "error": f.message });
            if let Some(w) = f.witness {
                v["witness"] = json!(w);
            }
            (v, f.code)
        }
    };
    report["command"] = json!(name(&cli.command));
    if cli.timings {
        report["timings"] = json!({ "total_ms": start.elapsed().as_secs_f64() * 1e3 });
    }
    let mut text = serde_json::to_string_pretty(&report).expect("reports are plain JSON");
    text.push('\n');
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
