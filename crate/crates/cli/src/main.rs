use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use sunk::fusion_ring::DOCUMENT_VERSION;
use sunk::{Error, SuNk, UnitRootExp};

mod report;

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "sunk", version, about = "Fusion rings and braidings of SU(N)_k")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple objects in canonical order.
    Labels(Pairs),
    /// Full fusion-matrix document.
    Fusion(Pairs),
    /// Braidings on the pointed category over Z_N.
    Pointed(PointedArgs),
    /// Braidings on the untwisted, twisted or MC fusion category.
    Classify(ClassifyArgs),
    /// Simple-current autoequivalences and the braided subgroup.
    Autoeq(Pairs),
    /// Orbits of braidings under braided autoequivalences.
    Orbits(Pairs),
    /// Oracle cross-checks for every module.
    Verify(Pairs),
}

#[derive(Args, Debug, Clone)]
struct Pairs {
    /// Rank parameter N, a single value or an inclusive range a..b.
    #[arg(long = "N", value_parser = parse_range)]
    n: Span,
    /// Level k, a single value or an inclusive range a..b.
    #[arg(long, value_parser = parse_range)]
    k: Span,
}

#[derive(Args, Debug, Clone)]
struct PointedArgs {
    #[arg(long = "N", value_parser = parse_range)]
    n: Span,
    #[arg(long, value_enum, default_value_t = Twist::Trivial)]
    twist: Twist,
}

#[derive(Args, Debug, Clone)]
struct ClassifyArgs {
    #[command(flatten)]
    pairs: Pairs,
    #[arg(long, value_enum, default_value_t = Twist::Trivial)]
    twist: Twist,
    /// Classify braidings on the fusion subcategory MC instead.
    #[arg(long, conflicts_with = "twist")]
    subcategory: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Twist {
    Trivial,
    Minus,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug)]
struct Span(RangeInclusive<u32>);

fn parse_range(s: &str) -> Result<Span, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| format!("`{t}`: {e}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(Span(a..=b))
}

impl Pairs {
    fn params(&self) -> Result<Vec<SuNk>, Error> {
        let mut out = Vec::new();
        for n in self.n.0.clone() {
            for k in self.k.0.clone() {
                out.push(SuNk::new(n, k)?);
            }
        }
        Ok(out)
    }
}

/// Multi-pair output.
#[derive(Serialize)]
struct Sweep<'a> {
    version: u32,
    command: &'a str,
    results: &'a [Report],
}

enum Failure {
    Param(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parameter(_) => Failure::Param(e.to_string()),
            Error::Consistency(_) => Failure::Internal(e.to_string()),
        }
    }
}

/// Runs `f` over the pairs in parallel; results keep the input order.
fn sweep<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> sunk::Result<Report> + Sync + Send,
) -> Result<Vec<Report>, Failure> {
    let results: Vec<sunk::Result<Report>> = items.par_iter().map(f).collect();
    results.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

fn run(cli: &Cli) -> Result<(&'static str, Vec<Report>), Failure> {
    let (name, reports) = match &cli.command {
        Command::Labels(a) => ("labels", sweep(&a.params()?, |&p| Ok(Report::labels(p)))?),
        Command::Fusion(a) => ("fusion", sweep(&a.params()?, |&p| Report::fusion(p))?),
        Command::Pointed(a) => {
            let ns: Vec<u64> = a.n.0.clone().map(u64::from).collect();
            if ns.contains(&0) {
                return Err(Failure::Param("N must be at least 1".into()));
            }
            let eta = match a.twist {
                Twist::Trivial => UnitRootExp::one(),
                Twist::Minus => UnitRootExp::minus_one(),
            };
            ("pointed", sweep(&ns, |&n| Report::pointed(n, eta))?)
        }
        Command::Classify(a) => {
            let ps = a.pairs.params()?;
            let rs = if a.subcategory {
                sweep(&ps, |&p| Report::subcategory(p))?
            } else if a.twist == Twist::Minus {
                if let Some(p) = ps.iter().find(|p| p.n % 2 == 1) {
                    return Err(Failure::Param(format!(
                        "invalid parameter: {p}: the minus twist needs N even"
                    )));
                }
                sweep(&ps, |&p| Report::twisted(p))?
            } else {
                sweep(&ps, |&p| Report::classify(p))?
            };
            ("classify", rs)
        }
        Command::Autoeq(a) => ("autoeq", sweep(&a.params()?, |&p| Report::autoeq(p))?),
        Command::Orbits(a) => ("orbits", sweep(&a.params()?, |&p| Report::orbits(p))?),
        Command::Verify(a) => ("verify", sweep(&a.params()?, |&p| Report::verify(p))?),
    };
    Ok((name, reports))
}

fn render(cli: &Cli, command: &str, reports: &[Report]) -> serde_json::Result<String> {
    Ok(match cli.format {
        Format::Json => {
            let mut s = if let [single] = reports {
                serde_json::to_string_pretty(single)?
            } else {
                serde_json::to_string_pretty(&Sweep {
                    version: DOCUMENT_VERSION,
                    command,
                    results: reports,
                })?
            };
            s.push('\n');
            s
        }
        Format::Table => reports
            .iter()
            .map(Report::table)
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, reports) = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Param(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let written = render(&cli, command, &reports)
        .map_err(anyhow::Error::from)
        .and_then(|text| emit(&cli, &text));
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    let discrepancies: Vec<String> = reports.iter().filter_map(Report::discrepancy).collect();
    for d in &discrepancies {
        eprintln!("discrepancy: {d}");
    }
    if discrepancies.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap().0, 3..=3);
        assert_eq!(parse_range("2..5").unwrap().0, 2..=5);
        assert_eq!(parse_range("2..=5").unwrap().0, 2..=5);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..2").is_err());
        assert!(parse_range("").is_err());
    }

    #[test]
    fn pairs_are_row_major() {
        let pairs = Pairs {
            n: Span(2..=3),
            k: Span(1..=2),
        };
        let got: Vec<(u32, u32)> = pairs.params().unwrap().iter().map(|p| (p.n, p.k)).collect();
        assert_eq!(got, vec![(2, 1), (2, 2), (3, 1), (3, 2)]);
    }

    #[test]
    fn single_pair_is_not_wrapped() {
        let cli = Cli::parse_from(["sunk", "labels", "--N", "2", "--k", "1"]);
        let (command, reports) = run(&cli).ok().unwrap();
        let text = render(&cli, command, &reports).unwrap();
        assert!(text.starts_with("{\n  \"version\": 1,\n  \"N\": 2,"));
        let cli = Cli::parse_from(["sunk", "labels", "--N", "2..3", "--k", "1"]);
        let (command, reports) = run(&cli).ok().unwrap();
        let text = render(&cli, command, &reports).unwrap();
        assert!(text.contains("\"command\": \"labels\""));
    }
}
