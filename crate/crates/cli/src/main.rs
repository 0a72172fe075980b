//! `tensor-decomp`: compute, tabulate, and verify decompositions of
//! symmetric-group tensor representations.
//!
//! Exit codes: 0 success, 1 verification or integrity failure, 2 usage error.

mod output;
mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tensor_decomp::decomp::{
    compute_pi, compute_rho, infinite_symbol, stable_symbol, symbol_table,
};
use tensor_decomp::oracle::{oracle_dim, oracle_rho, OracleBounds};
use tensor_decomp::partitions::{enumerate, Partition};
use tensor_decomp::symfunc::SymFunc;
use tensor_decomp::{characters, Error};

use output::{decomposition_human, OutputDocument};

#[derive(Parser)]
#[command(
    name = "tensor-decomp",
    version,
    about = "Exact decomposition of symmetric-group tensor representations"
)]
struct Cli {
    /// Emit a JSON document instead of human-readable text
    #[arg(long, global = true)]
    json: bool,

    /// Include elapsed milliseconds in JSON output (human output always
    /// shows them; JSON omits them by default so identical runs are
    /// byte-identical)
    #[arg(long, global = true)]
    timing: bool,

    /// Plethysm cache file; overrides TENSORDECOMP_CACHE
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Md,
    Json,
    Tex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Oracle,
    Identities,
    Stability,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List all partitions of a nonnegative integer
    Partitions {
        #[arg(long)]
        n: u32,
    },
    /// Irreducible character value χ^λ(ρ)
    Char {
        /// Shape of the irreducible (e.g. 2,1)
        #[arg(long)]
        lambda: String,
        /// Cycle type of the conjugacy class
        #[arg(long)]
        class: String,
    },
    /// Plethysm s_outer[h_j] or s_outer[s_inner], in the Schur basis
    Plethysm {
        #[arg(long)]
        outer: String,
        /// Inner complete homogeneous function h_j
        #[arg(long, value_name = "J", conflicts_with = "inner_s")]
        inner_h: Option<u32>,
        /// Inner Schur function s_μ
        #[arg(long, value_name = "PARTITION")]
        inner_s: Option<String>,
    },
    /// Π(μ,ν): the length-l(μ) building block of ρ_{μ,ν}
    Pi {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// ρ_{μ,ν} as a decomposition into irreducibles of 𝔖_n
    Rho {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        n: u32,
        /// Also run the brute-force oracle and report agreement
        #[arg(long)]
        oracle: bool,
        /// Lift the oracle size bounds
        #[arg(long)]
        force: bool,
    },
    /// Stable decomposition symbol T_{μν}
    Symbol {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Multiplicities of the irreducible 𝔖_∞ representations in ρ^∞_{μ,ν}
    Infinite {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Full table of stable symbols over μ,ν ⊢ k
    Table {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
    },
    /// Brute-force fixed-point-counting decomposition of ρ_{μ,ν}
    Oracle {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        n: u32,
        /// Report only dim ℋ_{μ,ν}
        #[arg(long)]
        dim_only: bool,
        /// Lift the oracle size bounds
        #[arg(long)]
        force: bool,
    },
    /// Run a named invariant suite; exits 1 on any failure
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long, default_value_t = 6)]
        n: u32,
        /// Lift the oracle size bounds
        #[arg(long)]
        force: bool,
    },
}

struct CommandOutput {
    command: Value,
    result: Value,
    human: String,
    /// A completed run that nevertheless reports failure (verify suites,
    /// oracle disagreement).
    failed: bool,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    init_thread_pool();
    let cache_path = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os("TENSORDECOMP_CACHE").map(PathBuf::from));
    if let Some(path) = &cache_path {
        match tensor_decomp::cache::load(path) {
            Ok(doc) => {
                doc.preload();
            }
            Err(_) if !path.exists() => {}
            Err(e) => eprintln!("warning: ignoring cache: {e}"),
        }
    }

    let started = Instant::now();
    let outcome = dispatch(&cli.command);
    let elapsed_ms = started.elapsed().as_millis();

    if let Some(path) = &cache_path {
        let doc = tensor_decomp::cache::CacheDocument::snapshot();
        if let Err(e) = tensor_decomp::cache::save(path, &doc) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }

    match outcome {
        Ok(out) => {
            if cli.json {
                let doc = OutputDocument::new(out.command, out.result, cli.timing.then_some(elapsed_ms));
                println!("{}", serde_json::to_string(&doc).expect("document serializes"));
            } else {
                println!("{}", out.human.trim_end());
                println!("elapsed: {elapsed_ms} ms");
            }
            if out.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ParsePartition { .. }
                | Error::InvalidPartition(_)
                | Error::SizeMismatch { .. }
                | Error::DegreeMismatch(..)
                | Error::OracleBounds { .. } => 2,
                Error::Integrity(_) | Error::Cache(_) => 1,
            }
        }
    }
}

fn init_thread_pool() {
    if let Ok(value) = std::env::var("TENSORDECOMP_THREADS") {
        if let Ok(threads) = value.trim().parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn bounds_for(force: bool) -> OracleBounds {
    if force {
        OracleBounds::unlimited()
    } else {
        OracleBounds::default()
    }
}

fn dispatch(command: &Command) -> Result<CommandOutput, Error> {
    match command {
        Command::Partitions { n } => {
            let parts = enumerate(*n);
            let listed: Vec<&[u32]> = parts.iter().map(Partition::parts).collect();
            let human = format!(
                "p({n}) = {}\n{}",
                parts.len(),
                parts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            );
            Ok(CommandOutput {
                command: json!({"name": "partitions", "n": n}),
                result: json!({"count": parts.len(), "partitions": listed}),
                human,
                failed: false,
            })
        }
        Command::Char { lambda, class } => {
            let lambda = parse_partition(lambda)?;
            let class = parse_partition(class)?;
            let value = characters::mn_character(&lambda, &class)?;
            Ok(CommandOutput {
                command: json!({"name": "char", "lambda": lambda.parts(), "class": class.parts()}),
                result: json!({"value": value}),
                human: format!("χ[{lambda}] on class {class} = {value}"),
                failed: false,
            })
        }
        Command::Plethysm {
            outer,
            inner_h,
            inner_s,
        } => {
            let outer = parse_partition(outer)?;
            let (inner, inner_echo, inner_human) = match (inner_h, inner_s) {
                (Some(j), None) => (
                    SymFunc::homogeneous(Partition::from_unsorted([*j])),
                    json!(format!("h{j}")),
                    format!("h_{j}"),
                ),
                (None, Some(s)) => {
                    let mu = parse_partition(s)?;
                    let echo = json!(mu.parts());
                    let human = format!("s{mu}");
                    (SymFunc::schur(mu), echo, human)
                }
                _ => {
                    return Err(Error::InvalidPartition(
                        "exactly one of --inner-h and --inner-s is required".into(),
                    ))
                }
            };
            let result = SymFunc::schur(outer.clone()).plethysm(&inner);
            Ok(CommandOutput {
                command: json!({"name": "plethysm", "outer": outer.parts(), "inner": inner_echo}),
                result: serde_json::to_value(&result).expect("symfunc serializes"),
                human: format!("s{outer}[{inner_human}] = {result}"),
                failed: false,
            })
        }
        Command::Pi { mu, nu } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let dec = compute_pi(&mu, &nu)?;
            Ok(CommandOutput {
                command: json!({"name": "pi", "mu": mu.parts(), "nu": nu.parts()}),
                result: json!({
                    "decomposition": serde_json::to_value(&dec).expect("serializes"),
                    "dimension": dec.dimension().to_string(),
                }),
                human: format!("Π[{mu},{nu}] = {dec}"),
                failed: false,
            })
        }
        Command::Rho {
            mu,
            nu,
            n,
            oracle,
            force,
        } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let dec = compute_rho(&mu, &nu, *n)?;
            let verdict = if dec.is_empty() {
                Some(if !nu.dominates(&mu)? {
                    "zero (ν does not dominate μ)".to_string()
                } else {
                    format!("zero (n = {n} is below l(μ) = {})", mu.len())
                })
            } else {
                None
            };
            let mut human = format!("ρ[{mu},{nu}] at n = {n}:\n{}", decomposition_human(&dec));
            if let Some(v) = &verdict {
                human.push_str(&format!("\nverdict: {v}"));
            }
            let mut result = json!({
                "decomposition": serde_json::to_value(&dec).expect("serializes"),
                "dimension": dec.dimension().to_string(),
            });
            let mut failed = false;
            if let Some(v) = &verdict {
                result["verdict"] = json!(v);
            }
            if *oracle {
                let reference = oracle_rho(&mu, &nu, *n, &bounds_for(*force))?;
                let agree = reference == dec;
                result["oracle"] = serde_json::to_value(&reference).expect("serializes");
                result["agreement"] = json!(agree);
                human.push_str(&format!(
                    "\noracle: {}",
                    if agree {
                        "formula and oracle agree".to_string()
                    } else {
                        format!("MISMATCH — oracle says {reference}")
                    }
                ));
                failed = !agree;
            }
            Ok(CommandOutput {
                command: json!({
                    "name": "rho", "mu": mu.parts(), "nu": nu.parts(), "n": n,
                    "oracle": oracle,
                }),
                result,
                human,
                failed,
            })
        }
        Command::Symbol { mu, nu } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let sym = stable_symbol(&mu, &nu)?;
            let human = if sym.is_empty() {
                format!("T[{mu},{nu}] = 0 (ν does not dominate μ)")
            } else {
                format!("T[{mu},{nu}] = {}", sym.render())
            };
            Ok(CommandOutput {
                command: json!({"name": "symbol", "mu": mu.parts(), "nu": nu.parts()}),
                result: serde_json::to_value(&sym).expect("serializes"),
                human,
                failed: false,
            })
        }
        Command::Infinite { mu, nu } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let dec = infinite_symbol(&mu, &nu)?;
            Ok(CommandOutput {
                command: json!({"name": "infinite", "mu": mu.parts(), "nu": nu.parts()}),
                result: serde_json::to_value(&dec).expect("serializes"),
                human: format!("ρ∞[{mu},{nu}] = {dec}"),
                failed: false,
            })
        }
        Command::Table { k, format } => {
            if *k < 1 {
                return Err(Error::InvalidPartition("table needs k ≥ 1".into()));
            }
            let table = symbol_table(*k)?;
            let (result, human) = match format {
                FormatArg::Md => {
                    let rendered = table.to_markdown();
                    (json!({"format": "md", "rendered": rendered}), rendered)
                }
                FormatArg::Tex => {
                    let rendered = table.to_tex();
                    (json!({"format": "tex", "rendered": rendered}), rendered)
                }
                FormatArg::Json => {
                    let value = serde_json::to_value(&table).expect("serializes");
                    let human = serde_json::to_string_pretty(&value).expect("serializes");
                    (json!({"format": "json", "table": value}), human)
                }
            };
            Ok(CommandOutput {
                command: json!({"name": "table", "k": k, "format": match format {
                    FormatArg::Md => "md", FormatArg::Json => "json", FormatArg::Tex => "tex",
                }}),
                result,
                human,
                failed: false,
            })
        }
        Command::Oracle {
            mu,
            nu,
            n,
            dim_only,
            force,
        } => {
            let mu = parse_partition(mu)?;
            let nu = parse_partition(nu)?;
            let bounds = bounds_for(*force);
            if *dim_only {
                let dim = oracle_dim(&mu, &nu, *n, &bounds)?;
                Ok(CommandOutput {
                    command: json!({
                        "name": "oracle", "mu": mu.parts(), "nu": nu.parts(), "n": n,
                        "dim_only": true,
                    }),
                    result: json!({"dimension": dim}),
                    human: format!("dim ℋ[{mu},{nu}] at n = {n}: {dim}"),
                    failed: false,
                })
            } else {
                let dec = oracle_rho(&mu, &nu, *n, &bounds)?;
                Ok(CommandOutput {
                    command: json!({
                        "name": "oracle", "mu": mu.parts(), "nu": nu.parts(), "n": n,
                        "dim_only": false,
                    }),
                    result: json!({
                        "decomposition": serde_json::to_value(&dec).expect("serializes"),
                        "dimension": dec.dimension().to_string(),
                    }),
                    human: format!(
                        "oracle ρ[{mu},{nu}] at n = {n}:\n{}",
                        decomposition_human(&dec)
                    ),
                    failed: false,
                })
            }
        }
        Command::Verify { suite, k, n, force } => {
            let report = match suite {
                SuiteArg::Tables => verify::tables(),
                SuiteArg::Oracle => verify::oracle(*k, *n, *force)?,
                SuiteArg::Identities => verify::identities(*k, *n)?,
                SuiteArg::Stability => verify::stability(*k)?,
                SuiteArg::All => verify::all(*k, *n, *force)?,
            };
            let passed = report.iter().all(|c| c.passed);
            let suite_name = match suite {
                SuiteArg::Tables => "tables",
                SuiteArg::Oracle => "oracle",
                SuiteArg::Identities => "identities",
                SuiteArg::Stability => "stability",
                SuiteArg::All => "all",
            };
            let mut human = String::new();
            for check in &report {
                if check.passed {
                    human.push_str(&format!("PASS {}\n", check.label));
                } else {
                    human.push_str(&format!(
                        "FAIL {}: {}\n",
                        check.label,
                        check.detail.as_deref().unwrap_or("(no detail)")
                    ));
                }
            }
            human.push_str(&format!(
                "{} checks, {}",
                report.len(),
                if passed {
                    "all passed".to_string()
                } else {
                    format!("{} failed", report.iter().filter(|c| !c.passed).count())
                }
            ));
            let checks: Vec<Value> = report
                .iter()
                .map(|c| {
                    json!({"label": c.label, "passed": c.passed, "detail": c.detail})
                })
                .collect();
            Ok(CommandOutput {
                command: json!({"name": "verify", "suite": suite_name, "k": k, "n": n}),
                result: json!({"checks": checks, "passed": passed}),
                human,
                failed: !passed,
            })
        }
    }
}

