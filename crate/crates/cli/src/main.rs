//! `ihall`: command-line front end. Every subcommand parses its flags, calls
//! one library entry point and prints the result.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ihall_core::exactalg::{Rational, TValue};
use ihall_core::genfun::{verify_identity, Identity, VRing};
use ihall_core::giambelli::{giambelli_direct, Family, Mode};
use ihall_core::hall::{hall_count_table, HallCache, HallEngine, DEFAULT_GUARD};
use ihall_core::ihall::{phi_expansion, phi_iso, IHallAlgebra};
use ihall_core::pieri::{expansion_to_json, PieriRule};
use ihall_core::realize::{realize_v, t_symbolic, theta_value, Target};
use ihall_core::suite::{run_all, Scale, SuiteContext, SuiteReport};
use ihall_core::{Error, IHallElement, Partition};

use config::{OutputFormat, RunConfig, CONFIG_ENV};

const SCHEMA_VERSION: u32 = 1;
const DEFAULT_ORDER: usize = 6;
const DEFAULT_VERIFY_GUARD: u64 = 10;
const DEFAULT_REALIZE_GUARD: u64 = 8;
const DEFAULT_CACHE_VERIFY_GUARD: u64 = 1 << 12;

#[derive(Parser)]
#[command(name = "ihall", version, about = "Exact iHall algebra and iHall-Littlewood computations")]
struct Cli {
    /// TOML run configuration; the IHALL_CONFIG variable takes precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit JSON regardless of the configured output format.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hl,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Expand V_α (or its Schur analogue) in the v basis.
    Giambelli {
        /// Integer vector, e.g. "[2,-1,1]".
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value = "hl")]
        family: FamilyArg,
        /// Drop the θ-weighted lowering factors.
        #[arg(long)]
        classical: bool,
    },
    /// One of the four Pieri rules in the V^ı basis.
    Pieri {
        #[arg(long)]
        rule: PieriRule,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        r: usize,
    },
    /// The Hall polynomial G^λ_{μν}(T).
    Hallpoly {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Submodule counts of S^{(λ)} over a finite field, by (quotient, submodule) type.
    Hallcount {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, requires = "nu")]
        mu: Option<Partition>,
        #[arg(long, requires = "mu")]
        nu: Option<Partition>,
    },
    /// [S^{(μ)}]∗[S^{(ν)}] in the ıHall algebra.
    Multiply {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        /// Coefficients as rational functions in q instead of structure polynomials in T.
        #[arg(long)]
        generic: bool,
    },
    /// Image of an ıHall element under the isomorphism.
    Phi {
        /// {"terms":[{"lambda":[..],"a":0,"coeff":"1"}]}
        #[arg(long)]
        element: String,
    },
    /// Check a transition identity up to a z-order.
    Verify {
        #[arg(long)]
        identity: Identity,
        #[arg(long)]
        order: Option<usize>,
    },
    /// V^ı_λ in N variables, monomial basis.
    Realize {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "q")]
        basis: Target,
        #[arg(long)]
        vars: usize,
        /// An integer or "sym".
        #[arg(long, default_value = "sym")]
        theta: String,
        /// A rational or "sym".
        #[arg(long, default_value = "sym")]
        t: String,
    },
    /// Run the acceptance suites, cache-cold then cache-warm.
    Selftest {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::SizeGuard(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

struct Output {
    json: Value,
    text: String,
    verified: bool,
}

impl Output {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Output { json, text: text.into(), verified: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config_path = std::env::var_os(CONFIG_ENV).map(PathBuf::from).or(cli.config.clone());
    let cfg = match config_path.as_deref().map(RunConfig::load).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: --config: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = cfg.worker_count {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: workerCount: {e}");
            return ExitCode::from(2);
        }
    }
    let as_json = cli.json || cfg.output_format == OutputFormat::Json;
    match run(cli.command, &cfg) {
        Ok(out) => {
            if as_json {
                let mut v = out.json;
                v["schemaVersion"] = json!(SCHEMA_VERSION);
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn hall_engine(cfg: &RunConfig) -> Result<Arc<HallEngine>, Failure> {
    Ok(Arc::new(match &cfg.cache_path {
        Some(p) => {
            let cache = HallCache::open(p, cfg.guard("cacheVerify", DEFAULT_CACHE_VERIFY_GUARD))?;
            HallEngine::with_cache(Arc::new(cache))
        }
        None => HallEngine::new(),
    }))
}

fn run(cmd: Command, cfg: &RunConfig) -> Result<Output, Failure> {
    match cmd {
        Command::Giambelli { alpha, family, classical } => {
            let v: Vec<i32> =
                serde_json::from_str(&alpha).map_err(|e| Failure::Usage(format!("--alpha: {e}")))?;
            let mode = if classical { Mode::Classical } else { Mode::Iota };
            let family = match family {
                FamilyArg::Hl => Family::HallLittlewood(mode),
                FamilyArg::Schur => Family::Schur(mode),
            };
            let e = giambelli_direct(&v, family);
            Ok(Output::ok(json!({"alpha": v, "terms": e.to_json()}), e.to_string()))
        }
        Command::Pieri { rule, mu, r } => {
            let e = rule.apply(&mu, r)?;
            let text = e.iter().map(|(l, c)| format!("{l}: {c}")).collect::<Vec<_>>().join("\n");
            Ok(Output::ok(json!({"mu": mu, "r": r, "expansion": expansion_to_json(&e)}), text))
        }
        Command::Hallpoly { mu, nu, lambda } => {
            let p = hall_engine(cfg)?.hall_polynomial(&mu, &nu, &lambda)?;
            Ok(Output::ok(json!({"mu": mu, "nu": nu, "lambda": lambda, "poly": p.to_string()}), p.to_string()))
        }
        Command::Hallcount { q, lambda, mu, nu } => {
            let table = hall_count_table(&lambda, q, cfg.guard("hallcount", DEFAULT_GUARD))?;
            if let (Some(mu), Some(nu)) = (mu, nu) {
                let n = table.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0);
                let v = json!({"q": q, "lambda": lambda, "mu": mu, "nu": nu, "count": n});
                return Ok(Output::ok(v, n.to_string()));
            }
            let rows: Vec<Value> =
                table.iter().map(|((m, n), c)| json!({"mu": m, "nu": n, "count": c})).collect();
            let text = table.iter().map(|((m, n), c)| format!("{m} {n}: {c}")).collect::<Vec<_>>().join("\n");
            Ok(Output::ok(json!({"q": q, "lambda": lambda, "counts": rows}), text))
        }
        Command::Multiply { mu, nu, generic } => {
            let alg = IHallAlgebra::new(hall_engine(cfg)?);
            if generic {
                let e = alg.basis_product(&mu, &nu)?;
                let text = e.terms().iter().map(|((l, a), c)| format!("{l} a={a}: {c}")).collect::<Vec<_>>();
                return Ok(Output::ok(json!({"mu": mu, "nu": nu, "product": e.to_json()}), text.join("\n")));
            }
            let sc = alg.structure_constants(&mu, &nu)?;
            let rows: Vec<Value> =
                sc.iter().map(|((l, a), p)| json!({"lambda": l, "a": a, "coeff": p.to_string()})).collect();
            let text = sc.iter().map(|((l, a), p)| format!("{l} a={a}: {p}")).collect::<Vec<_>>().join("\n");
            Ok(Output::ok(json!({"mu": mu, "nu": nu, "constants": rows}), text))
        }
        Command::Phi { element } => {
            let v: Value = serde_json::from_str(&element).map_err(|e| Failure::Usage(format!("--element: {e}")))?;
            let x = IHallElement::from_json(&v).map_err(|e| Failure::Usage(format!("--element: {e}")))?;
            let e = phi_expansion(&x)?;
            let m = phi_iso(&x)?;
            let v = json!({"element": x.to_json(), "vIotaBasis": expansion_to_json(&e), "vBasis": m.to_json()});
            Ok(Output::ok(v, m.to_string()))
        }
        Command::Verify { identity, order } => {
            let n = order.unwrap_or_else(|| cfg.order(identity, DEFAULT_ORDER));
            let budget = cfg.guard("verify", DEFAULT_VERIFY_GUARD) as usize;
            let alg = IHallAlgebra::new(hall_engine(cfg)?);
            let report = verify_identity(identity, n, budget, &VRing::new(&alg))?;
            let text = match &report.first_failure {
                None => format!("{identity} to z^{n}: pass ({} ms)", report.elapsed_ms),
                Some(f) => format!("{identity} to z^{n}: FAIL at z^{} on {}", f.z_power, f.term),
            };
            Ok(Output { verified: report.pass, json: report.to_json(), text })
        }
        Command::Realize { lambda, basis, vars, theta, t } => {
            let guard = cfg.guard("realize", DEFAULT_REALIZE_GUARD);
            if vars as u64 > guard {
                return Err(Failure::Usage(format!("--vars {vars} exceeds the realize size guard {guard}")));
            }
            let theta_v = match theta.as_str() {
                "sym" => None,
                s => Some(s.parse::<i64>().map_err(|e| Failure::Usage(format!("--theta: {e}")))?),
            };
            let t_v = match t.as_str() {
                "sym" => t_symbolic(),
                s => TValue::Rational(s.parse::<Rational>().map_err(|e| Failure::Usage(format!("--t: {e}")))?),
            };
            let e = ihall_core::giambelli::v_iota(&lambda);
            let f = realize_v(&e, basis, vars).specialize(&t_v, &theta_value(theta_v))?;
            Ok(Output::ok(json!({"lambda": lambda, "theta": theta, "t": t, "poly": f.to_json()}), f.to_string()))
        }
        Command::Selftest { level } => selftest(level, cfg),
    }
}

/// Runs every suite against a fresh cache, then again against the cache
/// the first run wrote, and compares the two reports without timings.
fn selftest(level: Level, cfg: &RunConfig) -> Result<Output, Failure> {
    let scale = match level {
        Level::Quick => Scale::Quick,
        Level::Full => Scale::Full,
    };
    let path = match &cfg.cache_path {
        Some(p) => {
            let mut s = p.clone().into_os_string();
            s.push(".selftest");
            PathBuf::from(s)
        }
        None => std::env::temp_dir().join(format!("ihall-selftest-{}.jsonl", std::process::id())),
    };
    let _ = std::fs::remove_file(&path);
    let guard = cfg.guard("cacheVerify", DEFAULT_CACHE_VERIFY_GUARD);
    let pass_with = |p: &PathBuf| -> Result<Vec<SuiteReport>, Failure> {
        let engine = HallEngine::with_cache(Arc::new(HallCache::open(p, guard)?));
        Ok(run_all(&SuiteContext::new(Arc::new(engine), scale)))
    };
    let cold = pass_with(&path)?;
    let warm = pass_with(&path)?;
    if cfg.cache_path.is_none() {
        let _ = std::fs::remove_file(&path);
    }
    let strip = |rs: &[SuiteReport]| rs.iter().map(|r| r.to_json(false)).collect::<Vec<_>>();
    let identical = strip(&cold) == strip(&warm);
    let ok = identical && warm.iter().all(|r| r.pass || r.documented);
    let mut text: Vec<String> = warm.iter().map(SuiteReport::line).collect();
    text.push(format!("cache-cold and cache-warm reports identical: {identical}"));
    let v = json!({
        "level": match level { Level::Quick => "quick", Level::Full => "full" },
        "suites": warm.iter().map(|r| r.to_json(true)).collect::<Vec<_>>(),
        "coldWarmIdentical": identical,
        "pass": ok,
    });
    Ok(Output { json: v, text: text.join("\n"), verified: ok })
}
