use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod input;
mod output;

use girard::suite::{run_suites, Suite, SuiteConfig};
use girard::twovar::PairBasis;
use girard::Error;

use girard::families::parse_size_range;
use input::AlphabetArgs;
use output::{Format, Sink};

#[derive(Parser)]
#[command(name = "girard", version, about = "Exact symmetric functions and Newton-Girard identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// e_k, h_k, p_k for k ≤ K on an alphabet or family.
    Bases(BasesArgs),
    /// Run identity suites; exit status 1 on any inequality.
    Verify(VerifyArgs),
    /// Family values next to their closed forms over a size range.
    Table(TableArgs),
    /// Truncated generating series E, H, P or a two-alphabet product.
    Series(SeriesArgs),
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct BasesArgs {
    #[command(flatten)]
    alphabet: AlphabetArgs,
    #[arg(long = "k-max", default_value_t = 5)]
    k_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite names (comma-separated), or `all`.
    #[arg(default_value = "all")]
    suites: String,
    #[command(flatten)]
    alphabet: AlphabetArgs,
    /// Second alphabet for the two-alphabet suites.
    #[arg(long)]
    yvars: Option<String>,
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest degree n (or table size for family rows).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "k-max")]
    k_max: Option<usize>,
    #[arg(long)]
    truncation: Option<usize>,
    /// Largest random alphabet size.
    #[arg(long = "max-size")]
    max_size: Option<usize>,
    /// Exact size of random first alphabets.
    #[arg(long)]
    nx: Option<usize>,
    /// Exact size of random second alphabets.
    #[arg(long)]
    ny: Option<usize>,
    /// Let random values be zero.
    #[arg(long = "allow-zero")]
    allow_zero: bool,
    #[arg(long, value_parser = parse_basis)]
    basis: Option<PairBasis>,
    /// Include passing reports, not only failures.
    #[arg(long = "all-reports")]
    all_reports: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    alphabet: AlphabetArgs,
    /// Size range `a..b` (inclusive) or a single size; defaults to the size
    /// in the family parameters.
    #[arg(long)]
    n: Option<String>,
    #[arg(long = "k-max", default_value_t = 5)]
    k_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    E,
    H,
    P,
    Pair,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_enum, default_value_t = SeriesKind::H)]
    which: SeriesKind,
    #[command(flatten)]
    alphabet: AlphabetArgs,
    /// Second alphabet for `--which pair`.
    #[arg(long)]
    yvars: Option<String>,
    #[arg(long, value_parser = parse_basis, default_value = "H_M")]
    basis: PairBasis,
    #[arg(long, default_value_t = 8)]
    truncation: usize,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_basis(s: &str) -> Result<PairBasis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Upper bound on any degree, order or size requested on the command line.
const MAX_DEGREE: usize = 40;

enum Failure {
    Config(String),
    Identity,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn bounded(name: &str, v: usize) -> Result<usize, Failure> {
    if v > MAX_DEGREE {
        return Err(Failure::Config(format!("--{name} {v} exceeds the limit {MAX_DEGREE}")));
    }
    Ok(v)
}

fn bases(args: BasesArgs) -> Result<(), Failure> {
    let k_max = bounded("k-max", args.k_max)?;
    let resolved = args.alphabet.resolve()?;
    let table = girard::basis_table(&resolved.alphabet, k_max);
    let sink = Sink::open(args.output.format, args.output.out.as_deref())?;
    output::write_bases(sink, &resolved, &table)?;
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = if args.suites.trim() == "all" {
        Suite::ALL.to_vec()
    } else {
        args.suites
            .split(',')
            .map(str::parse)
            .collect::<Result<_, Error>>()?
    };
    let alphabet = args.alphabet.resolve_optional()?;
    let (vars, family) = match alphabet {
        Some(r) => match r.family {
            Some(f) => (None, Some(f)),
            None => (Some(r.alphabet), None),
        },
        None => (None, None),
    };
    let yvars = args.yvars.as_deref().map(input::parse_vars).transpose()?;
    let cfg = SuiteConfig {
        seed: args.seed,
        cases: args.cases,
        n_max: args.n,
        k_max: args.k_max,
        truncation: args.truncation,
        max_size: args.max_size,
        nx: args.nx,
        ny: args.ny,
        allow_zero: args.allow_zero,
        vars,
        yvars,
        family,
        basis: args.basis,
        keep_all: args.all_reports,
    };
    let summary = run_suites(&suites, &cfg)?;
    for s in &summary.suites {
        eprintln!(
            "{}: {} cases, {}/{} checks equal{}",
            s.suite,
            s.cases,
            s.checks - s.failed_checks,
            s.checks,
            if s.passed { "" } else { " (FAILED)" }
        );
    }
    let sink = Sink::open(args.output.format, args.output.out.as_deref())?;
    output::write_verify(sink, &summary)?;
    if summary.passed {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn table(args: TableArgs) -> Result<(), Failure> {
    let k_max = bounded("k-max", args.k_max)?;
    let spec = args
        .alphabet
        .spec()?
        .ok_or_else(|| Failure::Config("table needs --family or --spec".into()))?;
    let families = match &args.n {
        Some(text) => parse_size_range(text)?
            .into_iter()
            .map(|size| spec.clone().with(spec.kind.size_param(), size).validate())
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![spec.validate()?],
    };
    let mut rows = Vec::new();
    for f in &families {
        rows.extend(girard::families::table_rows(f, k_max));
    }
    let all_match = rows.iter().all(|r| r.matches);
    let sink = Sink::open(args.output.format, args.output.out.as_deref())?;
    output::write_table(sink, &rows)?;
    if all_match {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn series(args: SeriesArgs) -> Result<(), Failure> {
    use girard::series::{build_e, build_h, build_p};
    let order = bounded("truncation", args.truncation)?;
    let resolved = args.alphabet.resolve()?;
    let x = &resolved.alphabet;
    let (label, series) = match args.which {
        SeriesKind::E => ("E".to_string(), build_e(x, order)),
        SeriesKind::H => ("H".to_string(), build_h(x, order)),
        SeriesKind::P => ("P".to_string(), build_p(x, order)),
        SeriesKind::Pair => {
            let y = args
                .yvars
                .as_deref()
                .ok_or_else(|| Failure::Config("--which pair needs --yvars".into()))
                .and_then(|t| Ok(input::parse_vars(t)?))?;
            let label = match args.basis {
                PairBasis::HM => "PI_H_M",
                PairBasis::EM => "PI_E_M",
            };
            (
                label.to_string(),
                girard::twovar::pair_product_series(x, &y, order, args.basis)?,
            )
        }
    };
    let sink = Sink::open(args.output.format, args.output.out.as_deref())?;
    output::write_series(sink, &label, &series)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bases(a) => bases(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
        Command::Series(a) => series(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            let _ = writeln!(io::stderr(), "error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            let _ = writeln!(io::stderr(), "error: {e}");
            ExitCode::from(2)
        }
    }
}
