//! ns-bound: exact invariants of projective varieties and explicit bounds on
//! the torsion of their divisor class groups modulo algebraic equivalence.
//!
//! Exit codes: 0 success, 2 usage/parse error, 3 resource limit exceeded,
//! 4 verification discrepancy.

use nsbound_cli::{ideal_file, report};

use clap::{Parser, Subcommand};
use nsbound::bounds::{self, BoundsError, PipelineError, PipelineOptions};
use nsbound::gotzmann::{self, GotzmannError};
use nsbound::groebner::ReductionBudget;
use nsbound::hilbert::{self, HilbertError, HilbertOptions, HilbertPolynomial};
use nsbound::poly::{parse_univariate_t, MonomialOrder};
use nsbound::tower::TowerContext;
use nsbound::verify::{run_checks, CheckKind, GridSpec};
use num_rational::BigRational;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ns-bound",
    about = "Hilbert-theoretic invariants and divisor-class torsion bounds, in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Fractional bits for directed log/division arithmetic.
    #[arg(long, global = true, default_value_t = 128)]
    precision: u64,
    /// Cap on Buchberger S-pair reductions.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_pairs: u64,
    /// Cap on intermediate polynomial degrees during reduction.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, codimension, degree, and Hilbert polynomial of an ideal file.
    Invariants {
        file: PathBuf,
        /// Run the Jacobian criterion as well.
        #[arg(long)]
        check_smooth: bool,
        /// Write the machine-readable report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The full bound report for an ideal file.
    Bound {
        file: PathBuf,
        /// Only the worst-case closed-form substitutions.
        #[arg(long)]
        paper_faithful: bool,
        /// Run the Jacobian criterion before bounding.
        #[arg(long)]
        check_smooth: bool,
        /// Print exact decimal expansions where the value is exact.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Macaulay decomposition and Gotzmann number of a Hilbert polynomial.
    Gotzmann {
        /// Ideal file; its subscheme Hilbert polynomial is decomposed.
        file: Option<PathBuf>,
        /// A literal polynomial in t, e.g. "2t + 1".
        #[arg(long, conflicts_with = "file")]
        hp: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-check the inequality chains behind the bounds over a grid.
    Verify {
        /// Inclusive range A..B for r (default 3..8).
        #[arg(long)]
        r: Option<String>,
        /// Inclusive range A..B for d (default 2..8).
        #[arg(long)]
        d: Option<String>,
        /// Run a single check: binom, hoa-step, hilbert-chain, divisor-chain,
        /// gotzmann-hoa, compare-bounds.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Program-level failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn discrepancy(message: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

fn classify_hilbert(e: HilbertError) -> Failure {
    match e {
        HilbertError::Groebner(_)
        | HilbertError::SeriesBudgetExceeded { .. }
        | HilbertError::DegreeOverflow => Failure::resource(e.to_string()),
        _ => Failure::usage(e.to_string()),
    }
}

fn classify_pipeline(e: PipelineError) -> Failure {
    match e {
        PipelineError::Hilbert(e) => classify_hilbert(e),
        PipelineError::Bounds(BoundsError::ClosedFormTooLarge { .. }) => {
            Failure::resource(e.to_string())
        }
        PipelineError::Bounds(e) => Failure::usage(e.to_string()),
        PipelineError::Gotzmann(GotzmannError::LengthBudgetExceeded { .. }) => {
            Failure::resource(e.to_string())
        }
        PipelineError::Gotzmann(e) => Failure::usage(e.to_string()),
    }
}

fn write_json<T: serde::Serialize>(path: &Path, doc: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(doc)
        .map_err(|e| Failure::usage(format!("serialization failed: {e}")))?;
    std::fs::write(path, text + "\n")
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn hilbert_options(cli: &Cli) -> HilbertOptions {
    HilbertOptions {
        order: MonomialOrder::GrevLex,
        budget: ReductionBudget {
            max_pairs: cli.max_pairs,
            max_degree: cli.max_degree,
        },
        max_series_nodes: 1_000_000,
    }
}

fn cmd_invariants(
    cli: &Cli,
    file: &Path,
    check_smooth: bool,
    json: Option<&Path>,
) -> Result<(), Failure> {
    let ideal = ideal_file::read_ideal_file(file).map_err(|e| Failure::usage(e.to_string()))?;
    let opts = hilbert_options(cli);
    let inv = hilbert::invariants(&ideal, &opts).map_err(classify_hilbert)?;
    let smoothness = if check_smooth {
        Some(bounds::smoothness_check(&ideal, &opts).map_err(classify_pipeline)?)
    } else {
        None
    };
    print!("{}", report::render_invariants(&inv, smoothness));
    if let Some(path) = json {
        let doc = report::InvariantsDocument {
            schema: report::SCHEMA.to_string(),
            command: "invariants".to_string(),
            invariants: report::invariants_to_json(&inv),
            smoothness: report::smoothness_str(smoothness),
        };
        write_json(path, &doc)?;
    }
    Ok(())
}

fn cmd_bound(
    cli: &Cli,
    file: &Path,
    paper_faithful: bool,
    check_smooth: bool,
    exact: bool,
    json: Option<&Path>,
) -> Result<(), Failure> {
    let ideal = ideal_file::read_ideal_file(file).map_err(|e| Failure::usage(e.to_string()))?;
    let opts = PipelineOptions {
        hilbert: hilbert_options(cli),
        tower: TowerContext::with_precision(cli.precision),
        paper_faithful_only: paper_faithful,
        check_smoothness: check_smooth,
    };
    let report_core = bounds::full_pipeline(&ideal, &opts).map_err(classify_pipeline)?;
    print!(
        "{}",
        report::render_bound_report(&report_core, &opts.tower, exact)
    );
    if let Some(path) = json {
        write_json(path, &report::bound_to_json(&report_core))?;
    }
    Ok(())
}

fn hp_from_expr(expr: &str) -> Result<HilbertPolynomial, Failure> {
    let poly = parse_univariate_t(expr).map_err(|e| Failure::usage(e.to_string()))?;
    // Dense coefficients indexed by the exponent of t.
    let mut dense: Vec<BigRational> = Vec::new();
    for (mono, coeff) in poly.terms() {
        let e = mono.exps()[0] as usize;
        if dense.len() <= e {
            dense.resize(e + 1, BigRational::from(num_bigint::BigInt::from(0)));
        }
        dense[e] = coeff.clone();
    }
    HilbertPolynomial::from_dense(&dense)
        .ok_or_else(|| Failure::usage(format!("`{expr}` is not integer-valued at all integers")))
}

fn cmd_gotzmann(
    cli: &Cli,
    file: Option<&Path>,
    hp: Option<&str>,
    json: Option<&Path>,
) -> Result<(), Failure> {
    let (label, q) = match (file, hp) {
        (None, Some(expr)) => (expr.to_string(), hp_from_expr(expr)?),
        (Some(path), None) => {
            let ideal =
                ideal_file::read_ideal_file(path).map_err(|e| Failure::usage(e.to_string()))?;
            let inv =
                hilbert::invariants(&ideal, &hilbert_options(cli)).map_err(classify_hilbert)?;
            (inv.hp.to_text(), inv.hp)
        }
        _ => return Err(Failure::usage("provide exactly one of FILE or --hp EXPR")),
    };
    let decomposition = gotzmann::gotzmann_decomposition(&q).map_err(|e| match e {
        GotzmannError::LengthBudgetExceeded { .. } => Failure::resource(e.to_string()),
        _ => Failure::usage(e.to_string()),
    })?;
    let phi = decomposition.len();
    println!("hilbert polynomial: {label}");
    println!("decomposition:      {:?}", decomposition.sequence());
    println!("gotzmann number:    {phi}");
    if let Some(path) = json {
        let doc = report::GotzmannDocument {
            schema: report::SCHEMA.to_string(),
            command: "gotzmann".to_string(),
            hp: q.to_text(),
            decomposition: decomposition.sequence().to_vec(),
            phi,
        };
        write_json(path, &doc)?;
    }
    Ok(())
}

fn parse_range(arg: &str, name: &str) -> Result<(u64, u64), Failure> {
    if let Some((a, b)) = arg.split_once("..") {
        let lo: u64 = a
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("--{name}: bad range `{arg}`")))?;
        let hi: u64 = b
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("--{name}: bad range `{arg}`")))?;
        if lo > hi {
            return Err(Failure::usage(format!("--{name}: empty range `{arg}`")));
        }
        Ok((lo, hi))
    } else {
        let v: u64 = arg
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("--{name}: bad range `{arg}`")))?;
        Ok((v, v))
    }
}

fn cmd_verify(
    cli: &Cli,
    r: Option<&str>,
    d: Option<&str>,
    only: Option<&str>,
    json: Option<&Path>,
) -> Result<(), Failure> {
    let (r_min, r_max) = match r {
        Some(arg) => parse_range(arg, "r")?,
        None => (3, 8),
    };
    let (d_min, d_max) = match d {
        Some(arg) => parse_range(arg, "d")?,
        None => (2, 8),
    };
    let selection: Vec<CheckKind> = match only {
        None => CheckKind::default_set(),
        Some(name) => vec![CheckKind::from_name(name).ok_or_else(|| {
            Failure::usage(format!(
                "--only: unknown check `{name}` (expected binom, hoa-step, hilbert-chain, \
                 divisor-chain, gotzmann-hoa, compare-bounds)"
            ))
        })?],
    };
    let binom_only = selection == [CheckKind::BinomLtPower];
    if r_min < 2 {
        return Err(Failure::usage("r >= 2 required"));
    }
    if r_min < 3 && !binom_only {
        return Err(Failure::usage(
            "r >= 3 required for the theorem chains; `--only binom` allows r = 2",
        ));
    }
    let grid = GridSpec {
        r_min,
        r_max,
        d_min,
        d_max,
        precision_bits: cli.precision,
        t_samples: None,
    };
    let outcomes = run_checks(&grid, &selection).map_err(Failure::usage)?;
    let ctx = grid.tower_context();
    print!("{}", report::render_outcomes(&outcomes, &ctx));
    let failures = outcomes.iter().filter(|o| !o.holds).count() as u64;
    if let Some(path) = json {
        let doc = report::VerifyDocument {
            schema: report::SCHEMA.to_string(),
            command: "verify".to_string(),
            grid: format!("r={r_min}..{r_max}, d={d_min}..{d_max}"),
            total: outcomes.len() as u64,
            failures,
            outcomes: outcomes.iter().map(report::outcome_to_json).collect(),
        };
        write_json(path, &doc)?;
    }
    if failures > 0 {
        return Err(Failure::discrepancy(format!(
            "{failures} inequality check(s) failed on the grid"
        )));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Invariants {
            file,
            check_smooth,
            json,
        } => cmd_invariants(cli, file, *check_smooth, json.as_deref()),
        Command::Bound {
            file,
            paper_faithful,
            check_smooth,
            exact,
            json,
        } => cmd_bound(
            cli,
            file,
            *paper_faithful,
            *check_smooth,
            *exact,
            json.as_deref(),
        ),
        Command::Gotzmann { file, hp, json } => {
            cmd_gotzmann(cli, file.as_deref(), hp.as_deref(), json.as_deref())
        }
        Command::Verify { r, d, only, json } => cmd_verify(
            cli,
            r.as_deref(),
            d.as_deref(),
            only.as_deref(),
            json.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
