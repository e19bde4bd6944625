use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sextic_core::lifts::find_family;
use sextic_core::pipeline::{analyze, prepare, resolve};
use sextic_core::CycloNum;

use sextic_forge::config::{parse_covering, parse_rational, seed_from_env};
use sextic_forge::dump::{decomposition, invariants, parse_group, render_table, table};
use sextic_forge::error::{bad, ForgeError};
use sextic_forge::report::row_from_report;
use sextic_forge::suites::TableFixture;
use sextic_forge::{run_classification, verify_all, RunConfig};

#[derive(Parser)]
#[command(name = "sextic-forge", version, about = "Galois lifts of sextic curves in V5: build, classify, verify")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every family at the t samples and report divisors, ranks and labels.
    Classify(ClassifyArgs),
    /// Multiplicities of the irreducibles in V_n and V_n ⊗ C².
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    Lifts {
        #[command(subcommand)]
        cmd: LiftsCmd,
    },
    Groups {
        #[command(subcommand)]
        cmd: GroupsCmd,
    },
    Invariants {
        #[command(subcommand)]
        cmd: InvariantsCmd,
    },
    /// Property suites, classification and the acceptance criteria.
    Verify {
        #[arg(long, required = true)]
        all: bool,
        /// Character-table fixtures (one object or a list) replacing the built-in tables.
        #[arg(long)]
        tables: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Covering groups (C2, C3, C4, D2, D3, D4, A4, S4); repeatable, default all.
    #[arg(long)]
    group: Vec<String>,
    #[arg(long)]
    deg: Option<usize>,
    #[arg(long)]
    case: Option<String>,
    /// Parameter samples p/q; repeatable, default 2, 3, 5/2, 7/3.
    #[arg(long, allow_hyphen_values = true)]
    t: Vec<String>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum LiftsCmd {
    /// Build one family at one t and print its report row.
    Build {
        #[arg(long)]
        group: String,
        #[arg(long)]
        deg: usize,
        #[arg(long, default_value = "generic")]
        case: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupsCmd {
    /// Character table; --json writes it as a fixture.
    Dump {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum InvariantsCmd {
    Dump {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), ForgeError> {
    std::fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}

fn maybe_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), ForgeError> {
    path.map_or(Ok(()), |p| write_json(p, value))
}

fn classify(a: ClassifyArgs) -> Result<i32, ForgeError> {
    let mut cfg = RunConfig::default();
    if !a.group.is_empty() {
        cfg.groups = a.group.iter().map(|g| parse_covering(g)).collect::<Result<_, _>>()?;
    }
    if !a.t.is_empty() {
        cfg.t_samples = a.t.iter().map(|t| parse_rational(t)).collect::<Result<_, _>>()?;
    }
    cfg.deg = a.deg;
    cfg.case = a.case;
    cfg.output = a.json;
    cfg.jobs = a.jobs;
    let report = run_classification(&cfg)?;
    for r in &report.rows {
        let routed = r.routed_from.as_ref().map(|k| format!(" (from {k})")).unwrap_or_default();
        println!(
            "{:<18} t={:<5} rank {}  {:<24} Q = {}  F = {}  {}{routed}",
            r.key,
            r.t.as_deref().unwrap_or("-"),
            r.rank,
            r.label,
            r.q,
            r.f,
            if r.passed { "ok" } else { "FAILED" }
        );
    }
    for d in &report.degenerate {
        println!("{:<18} t={:<5} degenerate: {}", d.key, d.t.as_deref().unwrap_or("-"), d.reason);
    }
    for s in &report.sweeps {
        let parts: Vec<String> = s.degrees.iter().map(|e| format!("{}:{}", e.deg_g, e.outcome)).collect();
        println!("{} accepted {:?}  [{}]", s.group, s.accepted, parts.join(" "));
    }
    for f in report.failures() {
        eprintln!("failed: {f}");
    }
    if let Some(p) = &cfg.output {
        std::fs::write(p, report.to_json()?)?;
    }
    Ok(if report.passed { 0 } else { 2 })
}

fn lifts_build(group: &str, deg: usize, case: &str, t: Option<&str>, json: Option<&Path>) -> Result<i32, ForgeError> {
    let kind = parse_covering(group)?;
    let spec = find_family(kind, deg, case).ok_or_else(|| bad(format!("no family {group}/{deg}/{case}")))?;
    let t: Option<CycloNum> = t.map(parse_rational).transpose()?.map(|r| CycloNum::from_rational(&r));
    let base = prepare(spec.clone())?;
    let mut routed_from = None;
    let pf = match &t {
        Some(tv) if spec.plane.uses_t() => {
            let case = spec.route(tv).map_err(|e| bad(e.to_string()))?;
            match case {
                None => base,
                Some(c) => {
                    routed_from = Some(spec.key());
                    let target = find_family(kind, deg, c).ok_or_else(|| bad(format!("no family {group}/{deg}/{c}")))?;
                    let all = [prepare(target)?];
                    resolve(&all, &spec, tv)?.clone()
                }
            }
        }
        None if spec.plane.uses_t() => return Err(bad(format!("{} needs --t", spec.key()))),
        _ => base,
    };
    let rep = analyze(&pf, t.as_ref())?;
    let row = row_from_report(&pf, &rep, &RunConfig::default().z_values(), routed_from);
    println!("{}  t = {}", row.key, row.t.as_deref().unwrap_or("-"));
    if let Some(k) = &row.routed_from {
        println!("routed from {k}");
    }
    println!("block: n = {}, k = {}, {}", row.block.n, row.block.k, row.block.character);
    for (name, f) in rep.forms.entries() {
        println!("{name} = {f}");
    }
    println!("det g = {}", row.det);
    println!("Q = {}\nF = {}", row.q, row.f);
    println!("rank {}  {}  {}", row.rank, row.label, row.witness.as_deref().unwrap_or(""));
    for (c, ok) in &row.checks {
        println!("  {c:<24} {}", if *ok { "ok" } else { "FAILED" });
    }
    maybe_json(json, &row)?;
    Ok(if row.passed { 0 } else { 2 })
}

fn read_fixtures(path: &Path) -> Result<Vec<TableFixture>, ForgeError> {
    let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
    let v: serde_json::Value = serde_json::from_str(&text)?;
    Ok(if v.is_array() { serde_json::from_value(v)? } else { vec![serde_json::from_value(v)?] })
}

fn run(cli: Cli) -> Result<i32, ForgeError> {
    match cli.cmd {
        Cmd::Classify(a) => classify(a),
        Cmd::Decompose { group, deg, json } => {
            let (name, _) = parse_group(&group)?;
            let d = decomposition(name, deg)?;
            println!("{} V{}: {}\n{} V{} (x) C2: {}", d.group, d.n, d.vn, d.group, d.n, d.vn_c2);
            maybe_json(json.as_deref(), &d)?;
            Ok(0)
        }
        Cmd::Lifts { cmd: LiftsCmd::Build { group, deg, case, t, json } } => {
            lifts_build(&group, deg, &case, t.as_deref(), json.as_deref())
        }
        Cmd::Groups { cmd: GroupsCmd::Dump { group, json } } => {
            let (name, _) = parse_group(&group)?;
            let g = table(name)?;
            print!("{}", render_table(&g));
            maybe_json(json.as_deref(), &TableFixture::from_table(&g))?;
            Ok(if g.verify().is_ok() { 0 } else { 2 })
        }
        Cmd::Invariants { cmd: InvariantsCmd::Dump { group, json } } => {
            let (name, kind) = parse_group(&group)?;
            let d = invariants(name, kind)?;
            for e in &d.entries {
                println!("{} (degree {}, {}) = {}", e.name, e.degree, e.character, e.form);
            }
            println!("syzygy residual: {}", d.syzygy_residual);
            if let Some(c) = &d.covering {
                println!("{}: Nu = {}\n    De = {}\n    invariant: {}", c.kind, c.nu, c.de, c.invariant);
            }
            maybe_json(json.as_deref(), &d)?;
            Ok(0)
        }
        Cmd::Verify { all: _, tables, json, jobs } => {
            let seed = seed_from_env()?;
            let overrides = tables.as_deref().map(read_fixtures).transpose()?.unwrap_or_default();
            let cfg = RunConfig { jobs, ..RunConfig::default() };
            let out = verify_all(&cfg, seed, &overrides)?;
            for c in &out.criteria {
                println!("{}", c.line());
            }
            for f in &out.failures {
                eprintln!("failed: {f}");
            }
            maybe_json(json.as_deref(), &out)?;
            Ok(out.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
