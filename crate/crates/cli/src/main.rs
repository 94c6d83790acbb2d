//! `puredec`: exact decompositions of Betti diagrams and cohomology
//! tables, facet equations, pairings and pure-resolution ranks.
//!
//! Exit codes: 0 on success, 1 on parse or usage errors, 2 on
//! mathematical rejection (for example `NOT_IN_CONE ...`).

mod display;
mod formats;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use boijsoderberg as bs;
use boijsoderberg::{
    BettiDiagram, DegreeSequence, Normalization, RootSequence, Window,
};

#[derive(Parser)]
#[command(name = "puredec", version, about = "Exact Boij-Soderberg computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Cm,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormArg {
    Canonical,
    Smallest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Equivariant,
    GenericMatrix,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a Betti diagram file into pure diagrams
    Decompose {
        path: PathBuf,
        /// cm needs a codimension (flag or `codim` line in the file)
        #[arg(long, value_enum, default_value = "cm")]
        mode: ModeArg,
        #[arg(long)]
        codim: Option<usize>,
        /// Cross-check the result against the chain-enumeration oracle
        /// (cap configurable via PUREDEC_CHAIN_CAP)
        #[arg(long)]
        oracle_check: bool,
    },
    /// Print the smallest integral pure diagram of a degree sequence
    Pure {
        /// comma-separated degrees, e.g. 0,3,4,5
        #[arg(allow_hyphen_values = true)]
        degrees: String,
    },
    /// Print the supernatural table of a root sequence
    Supernatural {
        /// comma-separated roots, e.g. 1,-3
        #[arg(allow_hyphen_values = true)]
        roots: String,
        /// twist range, e.g. --range -6 6
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["D_MIN", "D_MAX"])]
        range: Vec<i64>,
        #[arg(long, value_enum, default_value = "smallest")]
        normalization: NormArg,
    },
    /// Print an upper or lower facet equation table
    Facet {
        /// the omitted degree sequence f, e.g. -1,0,2,3
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        tau: usize,
        /// window bounds, e.g. --window -6,-5,-3,-2 0,1,3,4
        #[arg(long, num_args = 2, allow_hyphen_values = true, value_names = ["A", "B"])]
        window: Vec<String>,
        #[arg(long, conflicts_with = "lower")]
        upper: bool,
        #[arg(long)]
        lower: bool,
    },
    /// Pair a Betti diagram file with a cohomology table file
    Pair {
        betti: PathBuf,
        cohomology: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long)]
        tau: usize,
    },
    /// Print the Herzog-Kuhl residuals of a Betti diagram file
    CheckHk {
        path: PathBuf,
        #[arg(long)]
        codim: Option<usize>,
    },
    /// List (or count) the maximal chains between two degree sequences
    Chains {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        count: bool,
    },
    /// Corner-peel a cohomology table file into supernatural tables
    DecomposeCohomology {
        path: PathBuf,
        #[arg(long, default_value_t = 32)]
        max_steps: usize,
    },
    /// Ranks of a pure-resolution construction for a degree sequence
    ConstructionRanks {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(allow_hyphen_values = true)]
        degrees: String,
    },
    /// Reprint a diagram or table file in canonical form (sorted keys,
    /// lowest-terms values)
    Canonicalize { path: PathBuf },
}

/// Failures split by exit code: usage/parse (1) versus mathematics (2).
enum AppError {
    Usage(String),
    Math(bs::Error),
}

impl From<bs::Error> for AppError {
    fn from(e: bs::Error) -> Self {
        AppError::Math(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, AppError> {
    Err(AppError::Usage(msg.into()))
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, AppError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| AppError::Usage(format!("bad integer `{part}` in `{s}`")))
        })
        .collect()
}

fn parse_degrees(s: &str) -> Result<DegreeSequence, AppError> {
    Ok(DegreeSequence::new(parse_i64_list(s)?)?)
}

fn parse_roots(s: &str) -> Result<RootSequence, AppError> {
    Ok(RootSequence::new(parse_i64_list(s)?)?)
}

fn read_file(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_betti(path: &Path) -> Result<formats::BettiFile, AppError> {
    let text = read_file(path)?;
    formats::parse_betti(&text)
        .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))
}

fn read_coh(path: &Path) -> Result<formats::CohFile, AppError> {
    let text = read_file(path)?;
    formats::parse_coh(&text).map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))
}

fn chain_cap() -> u64 {
    std::env::var("PUREDEC_CHAIN_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(bs::DEFAULT_CHAIN_CAP)
}

/// A window around the support of a diagram, for the oracle cross-check.
fn bounding_window(beta: &BettiDiagram) -> Result<Window, AppError> {
    let lower = bs::lower_bound_sequence(beta)?;
    let mut upper = Vec::with_capacity(beta.ncols());
    for i in 0..beta.ncols() {
        let hi = beta
            .column_max(i)
            .expect("lower_bound_sequence checked all columns");
        let floor = upper.last().map_or(i64::MIN, |&p: &i64| p + 1);
        upper.push(hi.max(floor).max(lower.get(i)));
    }
    Ok(Window::new(lower, DegreeSequence::new(upper)?)?)
}

fn cmd_decompose(
    path: &Path,
    mode: ModeArg,
    codim: Option<usize>,
    oracle_check: bool,
) -> Result<(), AppError> {
    let file = read_betti(path)?;
    let mode = match mode {
        ModeArg::General => {
            if oracle_check {
                return usage("--oracle-check needs --mode cm");
            }
            bs::DecomposeMode::General
        }
        ModeArg::Cm => {
            let Some(c) = codim.or(file.codim) else {
                return usage("cm mode needs --codim or a `codim` line in the file");
            };
            bs::DecomposeMode::CohenMacaulay { codim: c }
        }
    };
    let dec = bs::decompose_betti(&file.diagram, mode)?;
    for term in &dec.terms {
        println!("coef {} deg {}", term.coefficient, term.degrees);
    }
    if !bs::verify_decomposition(&file.diagram, &dec) {
        return Err(AppError::Math(bs::Error::NotInCone(
            "resum check failed".to_string(),
        )));
    }
    println!("check: exact");
    let report = bs::integrality_report(&dec);
    println!(
        "integrality: denominator lcm {}, smallest integral multiple {}",
        report.denominator_lcm, report.minimal_integer_multiple
    );
    if oracle_check {
        let window = bounding_window(&file.diagram)?;
        match bs::oracle_membership(&file.diagram, &window, chain_cap())? {
            Some(ref oracle_dec) if *oracle_dec == dec => println!("oracle: agrees"),
            _ => {
                return Err(AppError::Math(bs::Error::NotInCone(
                    "oracle disagrees with the greedy decomposition".to_string(),
                )))
            }
        }
    }
    Ok(())
}

fn cmd_pure(degrees: &str) -> Result<(), AppError> {
    let d = parse_degrees(degrees)?;
    let pi = bs::pure_diagram(&d);
    let values = pi
        .values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    println!("pure {} values ({values})", pi.degrees);
    print!("{}", display::format_betti(&pi.to_diagram()));
    Ok(())
}

fn cmd_supernatural(roots: &str, range: &[i64], norm: NormArg) -> Result<(), AppError> {
    let z = parse_roots(roots)?;
    let (lo, hi) = (range[0], range[1]);
    if lo > hi {
        return usage(format!("inverted range {lo} > {hi}"));
    }
    let normalization = match norm {
        NormArg::Canonical => Normalization::Canonical,
        NormArg::Smallest => Normalization::SmallestIntegral,
    };
    let table = bs::supernatural_table(&z, lo, hi, normalization);
    println!("supernatural {z} range {lo}..{hi}");
    print!("{}", display::format_cohomology(&table));
    Ok(())
}

fn cmd_facet(
    f: &str,
    tau: usize,
    window: &[String],
    upper: bool,
    lower: bool,
) -> Result<(), AppError> {
    if upper == lower {
        return usage("exactly one of --upper / --lower is required");
    }
    let f = parse_degrees(f)?;
    let a = parse_degrees(&window[0])?;
    let b = parse_degrees(&window[1])?;
    let w = Window::new(a, b)?;
    let table = if upper {
        bs::upper_facet_equation(&f, tau, &w)?
    } else {
        bs::lower_facet_equation(&f, tau, &w)?
    };
    let side = if upper { "upper" } else { "lower" };
    println!("{side} facet equation for facet({f}, {tau})");
    print!("{}", display::format_coefficients(&table));
    Ok(())
}

fn cmd_pair(betti: &Path, cohomology: &Path, e: i64, tau: usize) -> Result<(), AppError> {
    let beta = read_betti(betti)?;
    let gamma = read_coh(cohomology)?;
    let value = bs::pairing(&beta.diagram, &gamma.table, e, tau)?;
    println!("{value}");
    Ok(())
}

fn cmd_check_hk(path: &Path, codim: Option<usize>) -> Result<(), AppError> {
    let file = read_betti(path)?;
    let Some(c) = codim.or(file.codim) else {
        return usage("check-hk needs --codim or a `codim` line in the file");
    };
    let residuals = bs::hk_residual(&file.diagram, c);
    for (p, r) in residuals.iter().enumerate() {
        println!("residual p={p}: {r}");
    }
    let all_zero = residuals.iter().all(|r| r.is_zero());
    println!("all zero: {all_zero}");
    Ok(())
}

fn cmd_chains(a: &str, b: &str, count: bool) -> Result<(), AppError> {
    let w = Window::new(parse_degrees(a)?, parse_degrees(b)?)?;
    if count {
        println!("{}", bs::count_maximal_chains(&w));
        return Ok(());
    }
    for chain in bs::maximal_chains(&w) {
        let rendered = chain
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" < ");
        println!("{rendered}");
    }
    Ok(())
}

fn cmd_decompose_cohomology(path: &Path, max_steps: usize) -> Result<(), AppError> {
    let file = read_coh(path)?;
    let dec = bs::decompose_cohomology(&file.table, max_steps)?;
    for term in &dec.terms {
        println!("coef {} roots {}", term.coefficient, term.roots);
    }
    if dec.remainder.is_zero() {
        println!("remainder: zero");
    } else {
        println!("remainder: nonzero");
        print!("{}", display::format_cohomology(&dec.remainder));
    }
    Ok(())
}

fn cmd_construction_ranks(kind: KindArg, degrees: &str) -> Result<(), AppError> {
    let d = parse_degrees(degrees)?;
    let ranks = match kind {
        KindArg::Equivariant => {
            let e: Vec<u64> = d
                .entries()
                .windows(2)
                .map(|w| (w[1] - w[0]) as u64)
                .collect();
            if e.is_empty() {
                return usage("equivariant ranks need a degree sequence of length >= 2");
            }
            bs::equivariant_betti(&e)
        }
        KindArg::GenericMatrix => bs::generic_matrix_betti(&d)?,
    };
    let rendered = ranks
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    println!("ranks ({rendered})");
    Ok(())
}

fn cmd_canonicalize(path: &Path) -> Result<(), AppError> {
    let text = read_file(path)?;
    let header = text.lines().next().map(str::trim).unwrap_or("");
    let canonical = match header {
        "BETTI v1" => formats::write_betti(
            &formats::parse_betti(&text)
                .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?,
        ),
        "COHTAB v1" => formats::write_coh(
            &formats::parse_coh(&text)
                .map_err(|e| AppError::Usage(format!("{}: {e}", path.display())))?,
        ),
        other => return usage(format!("{}: unknown header `{other}`", path.display())),
    };
    print!("{canonical}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Decompose {
            path,
            mode,
            codim,
            oracle_check,
        } => cmd_decompose(&path, mode, codim, oracle_check),
        Command::Pure { degrees } => cmd_pure(&degrees),
        Command::Supernatural {
            roots,
            range,
            normalization,
        } => cmd_supernatural(&roots, &range, normalization),
        Command::Facet {
            f,
            tau,
            window,
            upper,
            lower,
        } => cmd_facet(&f, tau, &window, upper, lower),
        Command::Pair {
            betti,
            cohomology,
            e,
            tau,
        } => cmd_pair(&betti, &cohomology, e, tau),
        Command::CheckHk { path, codim } => cmd_check_hk(&path, codim),
        Command::Chains { a, b, count } => cmd_chains(&a, &b, count),
        Command::DecomposeCohomology { path, max_steps } => {
            cmd_decompose_cohomology(&path, max_steps)
        }
        Command::ConstructionRanks { kind, degrees } => cmd_construction_ranks(kind, &degrees),
        Command::Canonicalize { path } => cmd_canonicalize(&path),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Math(e)) => {
            println!("{e}");
            ExitCode::from(2)
        }
    }
}
