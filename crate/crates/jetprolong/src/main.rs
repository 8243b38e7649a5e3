//! Command-line front end: generate prolongation coefficients and chain-rule
//! formulas with any engine, compare engines, and run verification sweeps.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jetprolong::closedform::{prolongation_closed, ClosedFormRequest};
use jetprolong::faadibruno::{faa_closed, faa_inductive, faa_partitions, FaaPolynomial};
use jetprolong::inductive::prolong_inductive;
use jetprolong::jetalgebra::{CoefficientPolynomial, Dims};
use jetprolong::render::{
    faa_to_json, latex_faa, latex_poly, poly_to_json, text_combination, text_faa, text_monomial,
    text_poly, LatexStyle,
};
use jetprolong::verify::{run_suite, Suite, VerifyBudget};

#[derive(Parser)]
#[command(
    name = "jetprolong",
    about = "Exact prolongation coefficients and multivariate chain-rule formulas",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one prolongation coefficient and optionally cross-check engines.
    Prolong(ProlongArgs),
    /// Compute one higher-derivative chain-rule polynomial.
    Faa(FaaArgs),
    /// Run verification sweeps and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ProlongArgs {
    /// Number of independent variables.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Number of dependent variables.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Jet order κ.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    kappa: u32,
    /// Dependent component index.
    #[arg(long, default_value_t = 1)]
    j: u32,
    /// Comma-separated lower indices i_1,…,i_κ; defaults to 1,1,…,1.
    #[arg(long, value_delimiter = ',')]
    indices: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = ProlongEngine::Both)]
    engine: ProlongEngine,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct FaaArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    kappa: u32,
    /// Comma-separated derivative indices i_1,…,i_κ; defaults to 1,1,…,1.
    #[arg(long, value_delimiter = ',')]
    indices: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = FaaEngine::All)]
    engine: FaaEngine,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_kappa: u32,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    max_n: u32,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    max_m: u32,
    /// Worker threads; falls back to JETPROLONG_JOBS, then to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProlongEngine {
    Closed,
    Inductive,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FaaEngine {
    Closed,
    Inductive,
    Partitions,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Latex,
    Text,
    Json,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> jetprolong::Result<ExitCode> {
    match cli.command {
        Command::Prolong(args) => cmd_prolong(args),
        Command::Faa(args) => cmd_faa(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn indices_or_default(indices: Option<Vec<u32>>, kappa: u32) -> Vec<u32> {
    indices.unwrap_or_else(|| vec![1; kappa as usize])
}

fn print_poly(p: &CoefficientPolynomial, format: Format) {
    match format {
        Format::Latex => println!("{}", latex_poly(p, LatexStyle::Paper)),
        Format::Text => println!("{}", text_poly(p, LatexStyle::Paper)),
        Format::Json => println!("{}", poly_to_json(p)),
    }
}

fn print_faa(p: &FaaPolynomial, format: Format) {
    match format {
        Format::Latex => println!("{}", latex_faa(p, LatexStyle::Paper)),
        Format::Text => println!("{}", text_faa(p, LatexStyle::Paper)),
        Format::Json => println!("{}", faa_to_json(p)),
    }
}

fn cmd_prolong(args: ProlongArgs) -> jetprolong::Result<ExitCode> {
    let dims = Dims::new(args.n, args.m)?;
    let indices = indices_or_default(args.indices, args.kappa);
    let req = ClosedFormRequest::new(dims, args.kappa, args.j, indices.clone())?;
    let closed = match args.engine {
        ProlongEngine::Closed | ProlongEngine::Both => Some(prolongation_closed(&req)?),
        ProlongEngine::Inductive => None,
    };
    let inductive = match args.engine {
        ProlongEngine::Inductive | ProlongEngine::Both => {
            let table = prolong_inductive(dims, args.kappa)?;
            Some(table.entry(args.j, &indices)?.clone())
        }
        ProlongEngine::Closed => None,
    };
    match (closed, inductive) {
        (Some(c), None) => print_poly(&c, args.format),
        (None, Some(i)) => print_poly(&i, args.format),
        (Some(c), Some(i)) => {
            print_poly(&c, args.format);
            if c == i {
                println!("engines agree: closed == inductive");
            } else {
                let diff = c.first_difference(&i).expect("unequal");
                let report = serde_json::json!({
                    "verdict": "mismatch",
                    "monomial": text_monomial(&dims, &diff.monomial),
                    "closed": text_combination(&dims, &diff.left),
                    "inductive": text_combination(&dims, &diff.right),
                });
                println!("{report}");
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        (None, None) => unreachable!(),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_faa(args: FaaArgs) -> jetprolong::Result<ExitCode> {
    let dims = Dims::new(args.n, args.m)?;
    let indices = indices_or_default(args.indices, args.kappa);
    let compute = |engine: FaaEngine| -> jetprolong::Result<FaaPolynomial> {
        match engine {
            FaaEngine::Closed => faa_closed(dims, args.kappa, &indices),
            FaaEngine::Inductive => faa_inductive(dims, args.kappa, &indices),
            FaaEngine::Partitions => faa_partitions(dims, args.kappa, &indices),
            FaaEngine::All => unreachable!(),
        }
    };
    if args.engine == FaaEngine::All {
        let closed = compute(FaaEngine::Closed)?;
        for (name, engine) in [
            ("inductive", FaaEngine::Inductive),
            ("partitions", FaaEngine::Partitions),
        ] {
            let other = compute(engine)?;
            if closed != other {
                let (mono, l, r) = closed.first_difference(&other).expect("unequal");
                let report = serde_json::json!({
                    "verdict": "mismatch",
                    "engines": ["closed", name],
                    "monomial": format!("{mono:?}"),
                    "closed": l.to_string(),
                    "other": r.to_string(),
                });
                println!("{report}");
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        print_faa(&closed, args.format);
        println!("engines agree: closed == inductive == partitions");
    } else {
        print_faa(&compute(args.engine)?, args.format);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> jetprolong::Result<ExitCode> {
    let jobs = args.jobs.or_else(|| {
        std::env::var("JETPROLONG_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(jobs) = jobs {
        // ignore failure if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let budget = VerifyBudget {
        max_kappa: args.max_kappa,
        max_n: args.max_n,
        max_m: args.max_m,
        seed: args.seed,
    };
    let suite = match args.suite {
        SuiteArg::Prolong => Suite::Prolong,
        SuiteArg::Faa => Suite::Faa,
        SuiteArg::Combinatorics => Suite::Combinatorics,
        SuiteArg::All => Suite::All,
    };
    let report = run_suite(suite, &budget)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Prolong,
    Faa,
    Combinatorics,
    All,
}
