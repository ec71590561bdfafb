use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dconsec::asymptotics::Asymptotics;
use dconsec::counts::{count_exact_with, QKernel};
use dconsec::oracle::Oracle;
use dconsec::{CountSpec, ExactInt};
use rayon::prelude::*;

use crate::render::{self, TableRow};
use crate::report::{VerificationEntry, VerificationReport};
use crate::{CliError, Outcome, ResultCache};

/// Exact counts of permutations with no d-consecutive values at distance d.
#[derive(Debug, Parser)]
#[command(name = "dconsec", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a(n, d).
    Count(CountArgs),
    /// Print a table of a(n, d) for n = 1..n-max.
    Table(TableArgs),
    /// Compare the formulas with brute force over a grid.
    Verify(VerifyArgs),
    /// Write an OEIS b-file for one d.
    Bfile(BfileArgs),
    /// Empirical first-order asymptotic coefficients.
    Asym(AsymArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    /// Closed formulas; the oracle only runs when asked for by name.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Markdown,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: Method,
    /// Run the oracle above its practical size bound.
    #[arg(long)]
    pub force: bool,
    #[arg(long, env = "DCONSEC_CACHE")]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long, value_delimiter = ',', required = true)]
    pub d_list: Vec<u32>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long, default_value_t = 5)]
    pub d_max: u32,
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct BfileArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_list: Vec<u32>,
    /// Working precision in significant digits.
    #[arg(long, default_value_t = dconsec::asymptotics::DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(25..))]
    pub digits: u32,
}

/// Significant digits printed by `asym`.
const ASYM_PRINT_DIGITS: u32 = 25;

fn oracle_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
}

pub fn run(command: &Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Count(args) => count(args, out),
        Command::Table(args) => table(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Bfile(args) => bfile(args),
        Command::Asym(args) => asym(args, out),
    }
}

pub fn count(args: &CountArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let mut cache = match &args.cache {
        Some(path) => Some(ResultCache::load(path)?),
        None => None,
    };
    let cached = cache.as_ref().and_then(|c| c.get(args.n, args.d));
    let value = match cached {
        Some(v) => v,
        None => {
            let v = match args.method {
                Method::Formula | Method::Auto => dconsec::count(args.n, args.d)?,
                Method::Oracle => {
                    let oracle = Oracle::new(args.n, args.d).force(args.force);
                    ExactInt::from(oracle.count_parallel(2, oracle_workers())?)
                }
            };
            if let (Some(cache), Some(path)) = (cache.as_mut(), &args.cache) {
                cache.insert(args.n, args.d, &v);
                cache.save(path)?;
            }
            v
        }
    };
    write_out(out, &format!("{value}\n"))?;
    Ok(Outcome::Success)
}

/// `a(n, d)` for every `n ≤ n_max` and `d` in `ds`, rows ordered by `n`.
pub fn table_rows(n_max: u32, ds: &[u32]) -> Result<Vec<TableRow>, CliError> {
    let kernel = QKernel::<ExactInt>::new();
    let cells: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| ds.iter().map(move |&d| (n, d))).collect();
    let values: Vec<ExactInt> = cells
        .par_iter()
        .map(|&(n, d)| count_exact_with(&kernel, CountSpec::new(n, d)?))
        .collect::<Result<_, _>>()?;
    Ok(values
        .chunks(ds.len().max(1))
        .zip(1..=n_max)
        .map(|(vals, n)| TableRow { n, values: vals.to_vec() })
        .collect())
}

pub fn table(args: &TableArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let rows = table_rows(args.n_max, &args.d_list)?;
    let text = match args.format {
        Format::Csv => render::csv(&args.d_list, &rows),
        Format::Markdown => render::markdown(&args.d_list, &rows),
    };
    write_out(out, &text)?;
    Ok(Outcome::Success)
}

/// Formula against oracle for `1 ≤ n ≤ n_max`, `0 ≤ d ≤ d_max`.
pub fn verification_report(n_max: u32, d_max: u32, force: bool) -> Result<VerificationReport, CliError> {
    let kernel = QKernel::<ExactInt>::new();
    let cells: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (0..=d_max).map(move |d| (n, d))).collect();
    let entries = cells
        .par_iter()
        .map(|&(n, d)| -> Result<VerificationEntry, CliError> {
            let formula = count_exact_with(&kernel, CountSpec::new(n, d)?)?;
            let oracle = ExactInt::from(Oracle::new(n, d).force(force).count()?);
            Ok(VerificationEntry { n, d, formula, oracle })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport { entries })
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let report = verification_report(args.n_max, args.d_max, args.force)?;
    let mut text = String::new();
    for e in report.mismatches() {
        text.push_str(&format!(
            "mismatch n={} d={}: formula={} oracle={}\n",
            e.n, e.d, e.formula, e.oracle
        ));
    }
    text.push_str(&report.summary());
    text.push('\n');
    write_out(out, &text)?;
    Ok(if report.all_match() { Outcome::Success } else { Outcome::Failed })
}

pub fn bfile(args: &BfileArgs) -> Result<Outcome, CliError> {
    let rows = table_rows(args.n_max, &[args.d])?;
    let values: Vec<ExactInt> = rows.into_iter().map(|r| r.values[0].clone()).collect();
    std::fs::write(&args.out, render::bfile(&values))
        .map_err(|e| CliError::io(args.out.display().to_string(), e))?;
    Ok(Outcome::Success)
}

pub fn asym(args: &AsymArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let asymptotics = Asymptotics::new(args.digits);
    let rows = asymptotics.convergence_report(args.d, &args.n_list)?;
    let mut text = String::from("n,scaled_ratio,e_n,target,distance\n");
    for row in rows {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            row.n,
            row.scaled_ratio.to_significant(ASYM_PRINT_DIGITS),
            row.coefficient.to_significant(ASYM_PRINT_DIGITS),
            row.target,
            row.distance.to_significant(ASYM_PRINT_DIGITS),
        ));
    }
    write_out(out, &text)?;
    Ok(Outcome::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn output(command: Command) -> (Outcome, String) {
        let mut buf = Vec::new();
        let outcome = run(&command, &mut buf).unwrap();
        (outcome, String::from_utf8(buf).unwrap())
    }

    fn count_args(n: u32, d: u32, method: Method) -> CountArgs {
        CountArgs { n, d, method, force: false, cache: None }
    }

    #[test]
    fn count_methods_agree() {
        for method in [Method::Auto, Method::Formula, Method::Oracle] {
            let (outcome, text) = output(Command::Count(count_args(8, 2, method)));
            assert_eq!(outcome, Outcome::Success);
            assert_eq!(text, "9512\n");
        }
    }

    #[test]
    fn oracle_refusal() {
        let err = count(&count_args(14, 3, Method::Oracle), &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), crate::exit::REFUSED);
        // auto never falls back to brute force
        let (_, text) = output(Command::Count(count_args(14, 3, Method::Auto)));
        assert_eq!(text, "20935873872\n");
    }

    #[test]
    fn table_single_cell() {
        let (_, text) = output(Command::Table(TableArgs { n_max: 1, d_list: vec![2], format: Format::Csv }));
        assert_eq!(text, "n,d2\n1,1\n");
    }

    #[test]
    fn verify_small_grid() {
        let (outcome, text) = output(Command::Verify(VerifyArgs { n_max: 1, d_max: 1, force: false }));
        assert_eq!(outcome, Outcome::Success);
        assert_eq!(text, "verified 2 cells: all match\n");
        let report = verification_report(1, 1, false).unwrap();
        assert!(report.entries.iter().all(|e| e.formula == ExactInt::from(1)));
    }

    #[test]
    fn asym_targets() {
        let (_, text) = output(Command::Asym(AsymArgs { d: 1, n_list: vec![16], digits: 30 }));
        let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row[0], "16");
        assert_eq!(row[3], "0");
    }
}
