//! `polyhole`: exact checks on lattice polytopes from the command line.
//!
//! Exit codes: 0 success or verdict holds, 1 verdict fails, 2 invalid input,
//! 3 budget exhausted or verdict unknown.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use polyhole::families::{FamilyParams, FamilyRegistry, PhdSpec};
use polyhole::polytope::{HRep, LatticePolytope, PolytopeJson};
use polyhole::report::{run_theorem_report, ReportOptions};
use polyhole::semigroup::{certify_very_ample, default_degree_budget, GradedSemigroup, MembershipRegistry, StopReason};
use polyhole::toric::{buchberger_verify, generate_g_sets, ToricMap, VerifyOptions};
use polyhole::{Budget, Error, Verdict};
use serde::Serialize;

const BUDGET_ENV: &str = "POLYHOLE_BUDGET_MS";

#[derive(Parser)]
#[command(name = "polyhole", version, about = "Exact lattice-polytope checks: facets, holes, normality, very ampleness")]
struct Cli {
    /// Write JSON output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Membership algorithm for semigroup queries.
    #[arg(long, global = true, default_value = "dfs")]
    membership: String,
    /// Soft wall-clock budget in milliseconds (overrides POLYHOLE_BUDGET_MS).
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Polytope JSON: {"ambient_dim": N, "points": [[...], ...]}.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Builtin family name (see `polyhole family --list`).
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    h: Option<u32>,
    #[arg(long)]
    d: Option<usize>,
    /// Parameter k of the qk families (`--k` is taken by `knormal`).
    #[arg(id = "qk", long = "qk")]
    k: Option<u32>,
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a builtin polytope as JSON.
    Family {
        /// Family name; defaults to `phd`.
        #[arg(long)]
        name: Option<String>,
        /// List the builtin families instead.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Facets as an H-representation.
    Facets {
        #[command(flatten)]
        input: Input,
    },
    /// Lattice points of the n-th dilation.
    Points {
        #[arg(long, default_value_t = 1)]
        dilation: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Holes of the homogenized semigroup up to a degree budget.
    Holes {
        /// Degree budget; default max(d + 3, 8).
        #[arg(long)]
        budget: Option<u32>,
        #[command(flatten)]
        input: Input,
    },
    /// Normality verdict.
    Normal {
        #[arg(long)]
        budget: Option<u32>,
        #[command(flatten)]
        input: Input,
    },
    /// Very ampleness certificate.
    Veryample {
        #[command(flatten)]
        input: Input,
    },
    /// k-normality up to a horizon.
    Knormal {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        horizon: u32,
        #[command(flatten)]
        input: Input,
    },
    /// Buchberger check of the sets G_1..G_8 for the F_0 configuration of P_{h,d}.
    GroebnerVerify {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        d: usize,
        /// Degree bound for the ideal-generation check; default max degree + 2.
        #[arg(long)]
        membership_bound: Option<u32>,
    },
    /// Run every check on P_{h,d} and combine the verdicts.
    Report {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        d: usize,
        /// Compare against this H-representation instead of the listed one.
        #[arg(long)]
        expected_hrep: Option<PathBuf>,
        #[arg(long)]
        degree_budget: Option<u32>,
        #[arg(long)]
        horizon: Option<u32>,
        #[arg(long)]
        membership_bound: Option<u32>,
        /// Skip the Gröbner stage.
        #[arg(long)]
        no_groebner: bool,
        /// Include per-stage wall-clock times (output is then not byte-stable).
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Unknown => 3,
    }
}

fn budget(cli: &Cli) -> Result<Budget, Failure> {
    let ms = match cli.budget_ms {
        Some(ms) => Some(ms),
        None => match std::env::var(BUDGET_ENV) {
            Ok(s) => Some(s.trim().parse().map_err(|_| Failure::Input(format!("{BUDGET_ENV} must be an integer")))?),
            Err(_) => None,
        },
    };
    Ok(match ms {
        Some(ms) => Budget::default().with_time_limit(Duration::from_millis(ms)),
        None => Budget::default(),
    })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(input: &Input, default_family: Option<&str>) -> Result<LatticePolytope, Failure> {
    let params = FamilyParams { h: input.h, d: input.d, k: input.k, dim: input.dim };
    match (&input.input, input.family.as_deref().or(default_family)) {
        (Some(_), Some(_)) if input.family.is_some() => {
            Err(Failure::Input("give either --in or --family, not both".into()))
        }
        (Some(path), _) => {
            let json: PolytopeJson = read_json(path)?;
            Ok(LatticePolytope::from_json(&json)?)
        }
        (None, Some(name)) => Ok(FamilyRegistry::with_builtins().build(name, &params)?),
        (None, None) => {
            if input.h.is_some() || input.d.is_some() {
                Ok(FamilyRegistry::with_builtins().build("phd", &params)?)
            } else {
                Err(Failure::Input("no input: use --in FILE or --family NAME".into()))
            }
        }
    }
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct FamilyList {
    families: Vec<FamilyEntry>,
}

#[derive(Serialize)]
struct FamilyEntry {
    name: &'static str,
    summary: &'static str,
}

#[derive(Serialize)]
struct PointsOut {
    dilation: u32,
    count: usize,
    points: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct NormalOut {
    verdict: Verdict,
    certified: bool,
    hole_count: usize,
    degree_budget: u32,
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let budget = budget(cli)?;
    let strategy = MembershipRegistry::with_builtins().get(&cli.membership)?;
    let semigroup = |p: &LatticePolytope| GradedSemigroup::with_budget(p, strategy.clone(), &budget);
    match &cli.command {
        Command::Family { name, list, input } => {
            if *list {
                let registry = FamilyRegistry::with_builtins();
                let families = registry
                    .names()
                    .map(|n| FamilyEntry { name: n, summary: registry.get(n).expect("listed").summary() })
                    .collect();
                emit(cli, &FamilyList { families })?;
                return Ok(0);
            }
            let mut input = input.clone();
            if name.is_some() {
                input.family = name.clone();
            }
            let p = load(&input, Some("phd"))?;
            emit(cli, &p.to_json())?;
            Ok(0)
        }
        Command::Facets { input } => {
            let p = load(input, None)?;
            let hrep: HRep = polyhole::polytope::facet_enumeration(&p)?;
            emit(cli, &hrep)?;
            Ok(0)
        }
        Command::Points { dilation, input } => {
            let p = load(input, None)?;
            let points = p.lattice_points_with(*dilation, &budget)?;
            emit(cli, &PointsOut { dilation: *dilation, count: points.len(), points })?;
            Ok(0)
        }
        Command::Holes { budget: degrees, input } => {
            let p = load(input, None)?;
            let s = semigroup(&p)?;
            let degrees = degrees.unwrap_or_else(|| default_degree_budget(s.dim()));
            let report = s.enumerate_holes_with(degrees, &budget)?;
            emit(cli, &report)?;
            Ok(match report.stop_reason {
                StopReason::PropagationEmpty => 0,
                StopReason::DegreeBudget | StopReason::InfiniteSuspected => 3,
            })
        }
        Command::Normal { budget: degrees, input } => {
            let p = load(input, None)?;
            let s = semigroup(&p)?;
            let degrees = degrees.unwrap_or_else(|| default_degree_budget(s.dim())).max(s.dim() as u32);
            let report = s.enumerate_holes_with(degrees, &budget)?;
            let verdict = if report.hole_count() > 0 {
                Verdict::Fails
            } else if report.certified_complete {
                Verdict::Holds
            } else {
                Verdict::Unknown
            };
            emit(
                cli,
                &NormalOut {
                    verdict,
                    certified: report.certified_complete,
                    hole_count: report.hole_count(),
                    degree_budget: degrees,
                },
            )?;
            Ok(verdict_code(verdict))
        }
        Command::Veryample { input } => {
            let p = load(input, None)?;
            let cert = certify_very_ample(&p, &budget)?;
            emit(cli, &cert)?;
            Ok(verdict_code(cert.verdict))
        }
        Command::Knormal { k, horizon, input } => {
            let p = load(input, None)?;
            let s = semigroup(&p)?;
            let report = s.is_k_normal_with(*k, *horizon, &budget)?;
            emit(cli, &report)?;
            Ok(verdict_code(report.verdict))
        }
        Command::GroebnerVerify { h, d, membership_bound } => {
            let spec = PhdSpec::new(*h, *d)?;
            let g = generate_g_sets(spec)?;
            let report = buchberger_verify(
                &g.binomials,
                &g.order,
                &ToricMap::new(spec),
                &VerifyOptions { membership_bound: *membership_bound },
                &budget,
            )?;
            emit(cli, &report)?;
            Ok(verdict_code(report.verdict))
        }
        Command::Report { h, d, expected_hrep, degree_budget, horizon, membership_bound, no_groebner, timings } => {
            let spec = PhdSpec::new(*h, *d)?;
            let expected_hrep = match expected_hrep {
                Some(path) => Some(read_json::<HRep>(path)?),
                None => None,
            };
            let options = ReportOptions {
                degree_budget: *degree_budget,
                horizon: *horizon,
                membership_bound: *membership_bound,
                expected_hrep,
                membership: strategy.clone(),
                groebner: !no_groebner,
                timings: *timings,
                budget: budget.clone(),
            };
            let report = run_theorem_report(spec, &options)?;
            emit(cli, &report)?;
            Ok(verdict_code(report.overall))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(3)
        }
    }
}
