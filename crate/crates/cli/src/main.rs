//! `grasshom`: tables and machine-readable reports of the homology of real
//! Grassmannians G_k(R^n).
//!
//! Exit codes: 0 on success (including full oracle agreement), 1 on usage
//! errors, 2 when the oracle check finds a mismatch.

mod report;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, ValueEnum};
use rayon::prelude::*;

use grassmann_homology::schubert::{ChainComplex, DEFAULT_MAX_CELLS};
use grassmann_homology::{Error, GrassmannianParams};

use report::{build_report, csv_rows, render_json, render_table, Report, CSV_HEADER};

#[derive(Debug, Parser)]
#[command(
    name = "grasshom",
    about = "Exact Betti numbers and 2-torsion of integral (co)homology of real Grassmannians",
    after_help = "Examples:\n  grasshom --k 2 --n 4\n  grasshom --k 2 --n 4 --format json --with-oracle\n  grasshom --range-n 7 --format csv"
)]
struct Cli {
    /// Plane dimension k of G_k(R^n)
    #[arg(long)]
    k: Option<u64>,

    /// Ambient dimension n of G_k(R^n)
    #[arg(long)]
    n: Option<u64>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Also compute integral homology from the Schubert chain complex and
    /// compare it degree by degree
    #[arg(long)]
    with_oracle: bool,

    /// Batch mode: report every G_k(R^n) with 1 <= k <= n/2 and n up to this bound
    #[arg(long, conflicts_with_all = ["k", "n"])]
    range_n: Option<u64>,

    /// Write all boundary matrices as sparse `row col value` triplets to this file
    #[arg(long, value_name = "PATH")]
    dump_boundaries: Option<PathBuf>,

    /// Cell budget for the chain-complex oracle
    #[arg(long, value_name = "INT")]
    max_cells: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let max_cells = cli.max_cells.unwrap_or(DEFAULT_MAX_CELLS);
    match (cli.k, cli.n, cli.range_n) {
        (Some(k), Some(n), None) => {
            let params = GrassmannianParams::new(k as usize, n as usize)?;
            if let Some(path) = &cli.dump_boundaries {
                dump_boundaries(&params, max_cells, path)?;
            }
            let report = build_report(&params, cli.with_oracle, max_cells)?;
            print!("{}", render_single(cli.format, &report));
            Ok(ExitCode::from(exit_code(&[report])))
        }
        (None, None, Some(range_n)) => {
            if cli.dump_boundaries.is_some() {
                return Err(Error::InvalidArgs(
                    "--dump-boundaries needs a single pair; use it with --k and --n".into(),
                ));
            }
            let pairs: Vec<GrassmannianParams> = (2..=range_n as usize)
                .flat_map(|n| (1..=n / 2).map(move |k| (k, n)))
                .map(|(k, n)| GrassmannianParams::new(k, n).expect("k <= n/2"))
                .collect();
            let reports: Vec<Report> = pairs
                .par_iter()
                .map(|p| build_report(p, cli.with_oracle, max_cells))
                .collect::<Result<_, _>>()?;
            print!("{}", render_batch(cli.format, &reports));
            Ok(ExitCode::from(exit_code(&reports)))
        }
        _ => Err(Error::InvalidArgs(
            "give either both --k and --n, or --range-n for batch mode".into(),
        )),
    }
}

fn render_single(format: Format, report: &Report) -> String {
    match format {
        Format::Table => render_table(report),
        Format::Json => render_json(report),
        Format::Csv => format!("{CSV_HEADER}\n{}", csv_rows(report, false)),
    }
}

fn render_batch(format: Format, reports: &[Report]) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&render_table(r));
            }
            out
        }
        Format::Json => {
            let docs: Vec<_> = reports.iter().map(|r| &r.doc).collect();
            let mut s = serde_json::to_string_pretty(&docs).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = format!("k,n,{CSV_HEADER}\n");
            for r in reports {
                out.push_str(&csv_rows(r, true));
            }
            out
        }
    }
}

/// Exit 2 as soon as any oracle check reported a mismatch.
fn exit_code(reports: &[Report]) -> u8 {
    let mismatch = reports
        .iter()
        .filter_map(|r| r.doc.oracle.as_ref())
        .any(|o| !o.matched);
    if mismatch {
        2
    } else {
        0
    }
}

fn dump_boundaries(
    params: &GrassmannianParams,
    max_cells: usize,
    path: &PathBuf,
) -> Result<(), Error> {
    let complex = ChainComplex::build(params, max_cells)?;
    let file = File::create(path)
        .map_err(|e| Error::InvalidArgs(format!("cannot create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    complex
        .dump_boundaries(&mut w)
        .and_then(|()| w.flush())
        .map_err(|e| Error::InvalidArgs(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use grassmann_homology::schubert::DEFAULT_MAX_CELLS;

    #[test]
    fn mismatched_oracle_forces_exit_two() {
        let params = GrassmannianParams::new(1, 3).unwrap();
        let mut report = build_report(&params, true, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(exit_code(&[build_report(&params, true, DEFAULT_MAX_CELLS).unwrap()]), 0);
        report.doc.oracle.as_mut().unwrap().matched = false;
        assert_eq!(exit_code(&[report]), 2);
    }

    #[test]
    fn reports_without_oracle_exit_zero() {
        let params = GrassmannianParams::new(2, 4).unwrap();
        let report = build_report(&params, false, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(exit_code(&[report]), 0);
    }
}
