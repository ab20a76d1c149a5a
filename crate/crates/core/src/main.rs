use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde_json::json;

use anticyclic::characters::{series, SeriesName};
use anticyclic::error::Result;
use anticyclic::nsoperad::{engine, OperadKind, TauTable};
use anticyclic::verify::{self, VerifyReport};

#[derive(Parser)]
#[command(name = "anticyclic", version, about = "Characters and anticyclic structures of Dias, Dend and their relatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    P,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named characteristic series.
    Char {
        name: String,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Basis::P)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Table)]
        format: SeriesFormat,
    },
    /// Run one identity check, or `all` at default bounds.
    Verify {
        id: String,
        #[arg(long, conflicts_with = "max_arity")]
        max_degree: Option<usize>,
        #[arg(long)]
        max_arity: Option<usize>,
        /// Print the registered identities and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evidence for the conjectured PreLie character.
    Conjecture {
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
    /// Export the matrix of τ_n.
    Tau {
        operad: OperadKind,
        #[arg(long)]
        arity: usize,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Brute-force dimensions against the expected formulas.
    Dims {
        operad: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Char { name, max_degree, basis, format } => cmd_char(&name, max_degree, basis, format),
        Command::Verify { id, max_degree, max_arity, list, json } => {
            if list {
                for e in verify::registry() {
                    println!("{:<24} {:>3}  {}", e.id, e.default_bound, e.summary);
                }
                return Ok(true);
            }
            let reports = if id == "all" {
                verify::run_all()
            } else {
                vec![verify::run_identity(&id, max_degree.or(max_arity))?]
            };
            print_reports(&reports, json);
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::Conjecture { max_n } => cmd_conjecture(max_n),
        Command::Tau { operad, arity, format } => {
            let mut op = engine(operad);
            let table = TauTable::build(op.as_mut(), arity)?;
            let m = table.matrix(op.as_mut(), arity)?;
            match format {
                MatrixFormat::Csv => print!("{}", m.to_csv()),
                MatrixFormat::Json => println!("{}", m.to_json()),
            }
            Ok(true)
        }
        Command::Dims { operad, max_n } => {
            let rows = verify::dimension_table(&operad.to_lowercase(), max_n)?;
            println!("{:>3} {:>12} {:>12}", "n", "computed", "expected");
            for r in &rows {
                println!("{:>3} {:>12} {:>12}", r.n, r.computed, r.expected);
            }
            Ok(rows.iter().all(|r| r.computed == r.expected))
        }
    }
}

fn cmd_char(name: &str, max_degree: usize, basis: Basis, format: SeriesFormat) -> Result<bool> {
    let name: SeriesName = name.parse()?;
    let f = series(name, max_degree)?;
    match (basis, format) {
        (Basis::P, SeriesFormat::Json) => println!("{}", f.to_json()),
        (Basis::P, SeriesFormat::Table) => {
            for d in 0..=max_degree {
                let part = f.degree_part(d);
                if part.terms().next().is_some() {
                    println!("degree {d}: {part}");
                }
            }
        }
        (Basis::Schur, SeriesFormat::Json) => {
            let degrees: Vec<_> = (0..=max_degree)
                .map(|d| {
                    let terms: Vec<_> = f
                        .schur_expand(d)
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(l, c)| (l, c.to_fraction_string()))
                        .collect();
                    json!({ "degree": d, "terms": terms })
                })
                .collect();
            println!("{}", json!({ "name": name.as_str(), "basis": "schur", "degrees": degrees }));
        }
        (Basis::Schur, SeriesFormat::Table) => {
            for d in 0..=max_degree {
                let terms: Vec<String> = f
                    .schur_expand(d)
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| if c.is_one() { format!("s_{l}") } else { format!("{c}*s_{l}") })
                    .collect();
                if !terms.is_empty() {
                    println!("degree {d}: {}", terms.join(" + "));
                }
            }
        }
    }
    Ok(true)
}

fn print_reports(reports: &[VerifyReport], as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(reports).expect("serialisable"));
    } else {
        for r in reports {
            println!("{r}");
        }
    }
}

fn cmd_conjecture(max_n: usize) -> Result<bool> {
    let (rows, reports) = verify::conjecture_report(max_n)?;
    let mark = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "-",
    };
    println!("{:>3} {:>14} {:>9} {:>12} {:>12}", "n", "schur-positive", "integral", "brute-force", "restriction");
    for r in &rows {
        println!(
            "{:>3} {:>14} {:>9} {:>12} {:>12}",
            r.n,
            mark(Some(r.schur_positive)),
            mark(Some(r.integral)),
            mark(r.brute_force),
            mark(r.restriction)
        );
    }
    print_reports(&reports, false);
    let rows_ok = rows
        .iter()
        .all(|r| r.schur_positive && r.integral && r.brute_force != Some(false) && r.restriction != Some(false));
    Ok(rows_ok && reports.iter().all(|r| r.pass))
}
