use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use indcomplex::complex::{euler_from_fvector, f_vector};
use indcomplex::graph::{FamilyTag, GraphJson};
use indcomplex::homology::{homology, reduced_homology, BettiProfile};
use indcomplex::predict::chi_of_wedge;
use indcomplex::transfer::{euler_chi, OverflowPolicy};
use indcomplex::verify::{run_all, run_suite, VerifyOptions, DEFAULT_SEED, SUITES};
use indcomplex::{predict_family, reduce, Coefficients, Error, FaceBudget, Graph};

#[derive(Parser)]
#[command(
    name = "indcomplex",
    version,
    about = "Independence complexes of grid graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form homotopy type of a family member.
    Predict {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "gamma")]
        family: FamilyTag,
    },
    /// Reduced homology of a family member or of a graph file.
    Homology {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "gf2")]
        coeff: Coefficients,
        /// Skip fold reduction and work on the full complex.
        #[arg(long)]
        no_reduce: bool,
    },
    /// Euler characteristic of the grid complex, or of a graph file.
    Euler {
        #[arg(long, required_unless_present_any = ["sweep", "input"])]
        n: Option<u32>,
        #[arg(long, default_value_t = 6)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Transfer)]
        method: Method,
        /// Inclusive range `A..B`; prints CSV `n,chi`.
        #[arg(long, conflicts_with_all = ["n", "input"])]
        sweep: Option<String>,
        /// Graph JSON; requires `--method enumerate`.
        #[arg(long, conflicts_with = "n")]
        input: Option<PathBuf>,
    },
    /// Fold-reduction trace as JSON.
    Reduce {
        #[command(flatten)]
        source: Source,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        #[arg(long)]
        suite: Option<String>,
        /// Adds the n = 5 family homology check.
        #[arg(long)]
        deep: bool,
        /// Adds n = 6 as well.
        #[arg(long)]
        deeper: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write the reports as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Source {
    #[arg(long, conflicts_with = "input", requires = "n")]
    family: Option<FamilyTag>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, default_value_t = 6)]
    k: u32,
    /// Graph JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl Source {
    fn graph(&self) -> anyhow::Result<Graph> {
        match (&self.input, self.family, self.n) {
            (Some(path), _, _) => read_graph(path),
            (None, family, Some(n)) => {
                let family = family.unwrap_or(FamilyTag::Gamma).with(n, self.k);
                Ok(Graph::build_family(family)?)
            }
            (None, _, None) => Err(Usage("give --input PATH or --n N [--family F]".into()).into()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Transfer,
    Enumerate,
    Predict,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Transfer => "transfer",
            Method::Enumerate => "enumerate",
            Method::Predict => "predict",
        }
    }
}

/// Bad arguments that clap cannot catch on its own.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let json: GraphJson =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Graph::from_json(json)?)
}

fn profile_json(profile: &BettiProfile, suspensions: u32) -> Value {
    let torsion: Vec<Value> = profile
        .torsion
        .iter()
        .map(|t| json!({"dim": t.dim, "factor": big_json(&t.factor.to_string())}))
        .collect();
    json!({
        "reduced_betti": profile.reduced_betti,
        "torsion": torsion,
        "suspensions_applied": suspensions,
    })
}

/// A JSON number when it fits in 64 bits, a string otherwise.
fn big_json(digits: &str) -> Value {
    digits
        .parse::<i64>()
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(digits))
}

fn parse_sweep(s: &str) -> anyhow::Result<(u32, u32)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Usage(format!("sweep `{s}` is not of the form A..B")))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |x: &str| {
        x.trim()
            .parse::<u32>()
            .map_err(|_| Usage(format!("sweep bound `{x}` is not a positive integer")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a == 0 || a > b {
        bail!(Usage(format!("sweep `{s}` must satisfy 1 <= A <= B")));
    }
    Ok((a, b))
}

fn euler_value(n: u32, k: u32, method: Method, budget: FaceBudget) -> anyhow::Result<Value> {
    Ok(match method {
        Method::Transfer => {
            big_json(&euler_chi(n as usize, k, OverflowPolicy::Escalate)?.to_string())
        }
        Method::Enumerate => {
            let g = Graph::build_gamma(n, k)?;
            json!(euler_from_fvector(&f_vector(&g, budget)?))
        }
        Method::Predict => {
            if k != 6 {
                bail!(Usage(format!(
                    "no closed form for k = {k}; predict needs k = 6"
                )));
            }
            json!(chi_of_wedge(&predict_family(FamilyTag::Gamma.with(n, 6))?))
        }
    })
}

fn print(value: &Value) {
    println!(
        "{}",
        serde_json::to_string(value).expect("values are serializable")
    );
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let budget = FaceBudget::from_env();
    match cli.command {
        Command::Predict { n, family } => {
            let w = predict_family(family.with(n, 6))?;
            print(&json!({"wedge": w, "chi": chi_of_wedge(&w), "contractible": w.is_point()}));
        }
        Command::Homology {
            source,
            coeff,
            no_reduce,
        } => {
            let g = source.graph()?;
            let value = if no_reduce {
                profile_json(&homology(&g, coeff, budget)?, 0)
            } else {
                let r = reduced_homology(&g, coeff, budget)?;
                profile_json(&r.profile, r.suspensions_applied)
            };
            print(&value);
        }
        Command::Euler {
            n,
            k,
            method,
            sweep,
            input,
        } => {
            if let Some(path) = input {
                if method != Method::Enumerate {
                    bail!(Usage("--input requires --method enumerate".into()));
                }
                let fv = f_vector(&read_graph(&path)?, budget)?;
                print(&json!({"chi": euler_from_fvector(&fv), "f_vector": fv.counts}));
            } else if let Some(range) = sweep {
                let (lo, hi) = parse_sweep(&range)?;
                println!("n,chi");
                for n in lo..=hi {
                    println!("{n},{}", euler_value(n, k, method, budget)?);
                }
            } else {
                let n = n.expect("clap requires n here");
                let chi = euler_value(n, k, method, budget)?;
                print(&json!({"n": n, "k": k, "chi": chi, "method": method.name()}));
            }
        }
        Command::Reduce { source } => {
            let trace = reduce(&source.graph()?);
            print(&serde_json::to_value(trace.to_json())?);
        }
        Command::Verify {
            all,
            suite,
            deep,
            deeper,
            seed,
            json,
        } => {
            let opts = VerifyOptions {
                seed,
                budget,
                deep,
                deeper,
            };
            let reports = match suite {
                Some(name) if !all => vec![run_suite(&name, &opts).ok_or_else(|| {
                    Usage(format!(
                        "unknown suite `{name}` (known: {}, deep-homology, deeper-homology)",
                        SUITES.join(", ")
                    ))
                })?],
                _ => run_all(&opts),
            };
            for r in &reports {
                println!("{}", r.summary());
                for f in r.failures() {
                    println!("  {}: expected {}, got {}", f.input, f.expected, f.actual);
                }
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&reports)?;
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::FaceBudgetExceeded { .. } | Error::IntegralTooLarge { .. }) => 3,
        Some(Error::Overflow { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
