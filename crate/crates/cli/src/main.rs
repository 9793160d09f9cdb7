use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use logseries::arith::{check_prime, parse_rat, BigRat};
use logseries::combinatorics::IndexTuple;
use logseries::harness::{self, VerifyReport};
use logseries::{par, series, Error};

/// Exact coefficients and p-adic valuations of powers of log(1+x)/x.
#[derive(Debug, Parser)]
#[command(name = "logseries", version)]
struct Cli {
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,

    /// Truncation order (series output of `coeff`, `reconstruct`).
    #[arg(long, global = true)]
    order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact coefficient of x^n in ℓ(x)^t (or the whole series with --order).
    Coeff {
        #[arg(short, allow_negative_numbers = true)]
        t: i64,
        #[arg(short, required_unless_present = "order")]
        n: Option<usize>,
    },
    /// Valuations of [x^((p-1)m)] ℓ(x)^t for m = 1..=m_max against the formula.
    Valtable {
        #[arg(short)]
        p: u64,
        #[arg(short, allow_negative_numbers = true)]
        t: i64,
        #[arg(short = 'm', long = "m-max")]
        m_max: u64,
    },
    /// Bernoulli number B_n, or B_0..=B_n with --all.
    Bernoulli {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        all: bool,
    },
    /// The series f = 1 + c1 x + ... determined by its zero coefficients.
    Reconstruct {
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
    },
    /// Run verification suites and print one report per checked point.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Main,
    Multinomial,
    CRecursion,
    CValuation,
    Zero,
    Reconstruct,
    LowerBound,
    Equality,
    All,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    t: Option<i64>,
    #[arg(long = "m-max")]
    m_max: Option<u64>,
    /// Largest power for the zero-coefficient suite.
    #[arg(long = "max-m", default_value_t = 60)]
    max_m: u64,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    /// Random samples (multinomial: triples, c-recursion/c-valuation: extra tuples).
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exhaustive tuple corpus: longest tuple.
    #[arg(long = "max-r", default_value_t = 6)]
    max_r: usize,
    /// Exhaustive tuple corpus: largest entry.
    #[arg(long = "max-entry", default_value_t = 6)]
    max_entry: u64,
    /// Explicit tuple for the multinomial suite, e.g. "[2,0,1]".
    #[arg(long)]
    tuple: Option<String>,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::OutOfRange(_) => EXIT_HYPOTHESIS,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(cli: &Cli) -> logseries::Result<u8> {
    match &cli.command {
        Command::Coeff { t, n } => {
            match (n, cli.order) {
                (Some(n), _) => println!("{}", series::log_power_coeff(*t, *n)?),
                (None, Some(order)) => println!("{}", series::log_power(*t, order)?),
                (None, None) => unreachable!("clap requires -n or --order"),
            }
            Ok(0)
        }
        Command::Valtable { p, t, m_max } => {
            let reports = harness::verify_main(*p, *t, *m_max)?;
            print_valtable(&reports, cli.format);
            Ok(exit_for(&reports))
        }
        Command::Bernoulli { n, all } => {
            if *all {
                let values = series::bernoulli_numbers(*n);
                for (k, b) in values.iter().enumerate() {
                    match cli.format {
                        Format::Tsv => println!("{k}\t{b}"),
                        Format::Json => println!(r#"{{"n":{k},"value":"{b}"}}"#),
                    }
                }
            } else {
                println!("{}", series::bernoulli(*n));
            }
            Ok(0)
        }
        Command::Reconstruct { c1 } => {
            let c1 = parse_rat(c1)?;
            let order = cli.order.unwrap_or(10);
            println!("{}", harness::reconstruct(&c1, order)?);
            Ok(0)
        }
        Command::Verify(args) => {
            let reports = run_suite(args, cli.order)?;
            print_reports(&reports, cli.format);
            Ok(exit_for(&reports))
        }
    }
}

fn exit_for(reports: &[VerifyReport]) -> u8 {
    if harness::all_pass(reports) {
        0
    } else {
        EXIT_FAIL
    }
}

fn print_reports(reports: &[VerifyReport], format: Format) {
    match format {
        Format::Tsv => print!("{}", harness::to_tsv(reports)),
        Format::Json => print!("{}", harness::to_json_lines(reports)),
    }
}

fn print_valtable(reports: &[VerifyReport], format: Format) {
    match format {
        Format::Tsv => {
            println!("m\tn\tactual\tpredicted\tpass");
            for r in reports {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.m.unwrap_or(0),
                    r.n.unwrap_or(0),
                    r.actual,
                    r.predicted,
                    r.pass
                );
            }
        }
        Format::Json => print!("{}", harness::to_json_lines(reports)),
    }
}

/// `t ∈ {±p, ±2p, ±p², ±3p²}`.
fn main_grid_ts(p: u64) -> Vec<i64> {
    let p = p as i64;
    [p, 2 * p, p * p, 3 * p * p]
        .into_iter()
        .flat_map(|t| [t, -t])
        .collect()
}

fn off_multiple_ts(p: u64) -> Vec<i64> {
    let p = p as i64;
    vec![p, -p, p * p, -p * p]
}

/// Runs `f` over every `(p, t)` point, concatenating in grid order.
fn sweep<F>(points: Vec<(u64, i64)>, f: F) -> logseries::Result<Vec<VerifyReport>>
where
    F: Fn(u64, i64) -> logseries::Result<Vec<VerifyReport>> + Sync + Send,
{
    let chunks = par::map_slice(&points, |&(p, t)| f(p, t));
    let mut out = Vec::new();
    for chunk in chunks {
        out.extend(chunk?);
    }
    Ok(out)
}

fn grid(primes: &[u64], ts: fn(u64) -> Vec<i64>) -> Vec<(u64, i64)> {
    primes
        .iter()
        .flat_map(|&p| ts(p).into_iter().map(move |t| (p, t)))
        .collect()
}

fn points(
    args: &VerifyArgs,
    primes: &[u64],
    ts: fn(u64) -> Vec<i64>,
) -> logseries::Result<Vec<(u64, i64)>> {
    match (args.p, args.t) {
        (Some(p), Some(t)) => Ok(vec![(p, t)]),
        (Some(p), None) => {
            check_prime(p)?;
            Ok(grid(&[p], ts))
        }
        (None, Some(_)) => Err(Error::InvalidArgument("--t needs --p".into())),
        (None, None) => Ok(grid(primes, ts)),
    }
}

fn tuple_corpus(args: &VerifyArgs) -> (Vec<IndexTuple>, String) {
    let mut corpus = harness::exhaustive_tuples(args.max_r, args.max_entry);
    let extra = args.count.unwrap_or(500);
    corpus.extend(harness::random_tuples(extra, args.seed));
    let name = format!(
        "r<={} entries<={} + {extra} random",
        args.max_r, args.max_entry
    );
    (corpus, name)
}

fn run_suite(args: &VerifyArgs, order: Option<usize>) -> logseries::Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::Main {
        let pts = points(args, &[2, 3, 5], main_grid_ts)?;
        let m_max = args.m_max;
        out.extend(sweep(pts, |p, t| {
            let bound = harness::hypothesis_bound(p, t)?;
            harness::verify_main(p, t, m_max.unwrap_or(bound.min(27)))
        })?);
    }
    if all || args.suite == Suite::Multinomial {
        match (&args.tuple, args.p, args.t) {
            (Some(tuple), Some(p), Some(t)) => {
                let tuple: IndexTuple = tuple.parse()?;
                out.push(harness::verify_multinomial_valuation(p, t, &tuple)?);
            }
            (Some(_), _, _) => {
                return Err(Error::InvalidArgument("--tuple needs --p and --t".into()))
            }
            (None, _, _) => out.extend(harness::verify_multinomial_random(
                args.count.unwrap_or(1000),
                args.seed,
            )?),
        }
    }
    if all || matches!(args.suite, Suite::CRecursion | Suite::CValuation) {
        let (corpus, name) = tuple_corpus(args);
        if all || args.suite == Suite::CRecursion {
            out.push(harness::verify_c_positive(&corpus, &name));
            out.push(harness::verify_c_recursion(&corpus, &name));
        }
        if all || args.suite == Suite::CValuation {
            let primes = match args.p {
                Some(p) => vec![p],
                None => vec![2, 3, 5, 7],
            };
            for p in primes {
                out.push(harness::verify_c_valuation(&corpus, &name, p)?);
            }
        }
    }
    if all || args.suite == Suite::Zero {
        out.extend(harness::verify_zero_coeffs(args.max_m)?);
    }
    if all || args.suite == Suite::Reconstruct {
        let c1s: Vec<BigRat> = match &args.c1 {
            Some(c) => vec![parse_rat(c)?],
            None => ["1/2", "1", "-3/7"]
                .iter()
                .map(|s| parse_rat(s).expect("literal"))
                .collect(),
        };
        for c1 in c1s {
            out.extend(harness::verify_reconstruct(&c1, order.unwrap_or(40))?);
        }
    }
    if all || args.suite == Suite::LowerBound {
        let pts = points(args, &[3, 5, 7], off_multiple_ts)?;
        if pts.iter().any(|&(p, _)| p == 2) {
            eprintln!("note: p = 2 has no 0 < delta < p - 1; nothing to check");
        }
        out.extend(sweep(pts, harness::verify_lower_bound)?);
    }
    if all || args.suite == Suite::Equality {
        let pts = points(args, &[5, 7, 11], off_multiple_ts)?;
        out.extend(sweep(pts, harness::verify_equality)?);
    }
    Ok(out)
}
