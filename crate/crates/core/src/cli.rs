//! Command-line surface: coefficient queries, table regeneration with
//! golden-fixture diffing, LR enumeration, theorem sweeps, and stretch
//! reports.
//!
//! Exit codes: 0 success / all pass, 1 verified mismatch, 2 usage or
//! domain error.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalan::{build_table, CatalanTable, TableKind};
use crate::error::Error;
use crate::lr::{enumerate_lr_tableaux, SkewTableau};
use crate::partitions::{skew, HalfInt, Partition};
use crate::sbinomial::sbinom;
use crate::stretchpoly::analyze_stretch;
use crate::verify::{sweep, SweepRanges, VerificationResult, DEFAULT_ENUM_BUDGET};
use crate::Natural;

const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "scatalan",
    about = "s-binomials, generalized Catalan numbers, and Littlewood-Richardson coefficients in exact arithmetic"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// s-binomial coefficient: x^k coefficient of (1 + x + ... + x^s)^n.
    Sbinom { n: usize, k: i64, s: usize },

    /// Build an s-Catalan or spin s-Catalan table.
    Table {
        #[arg(value_enum)]
        kind: TableArg,
        n_max: usize,
        /// Largest column, e.g. "7" or "7/2".
        s_max: HalfInt,
        /// Diff the generated CSV against the shipped fixture.
        #[arg(long)]
        golden: bool,
        /// Fixture path override for --golden.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },

    /// Littlewood-Richardson coefficient for a partition triple.
    Lrcoef {
        /// Outer partition, e.g. "(3,2,1)".
        outer: Partition,
        inner: Partition,
        content: Partition,
        /// Also print every tableau.
        #[arg(long)]
        list: bool,
    },

    /// Sweep one of the three verified identities over parameter ranges.
    Verify {
        #[arg(value_enum)]
        theorem: TheoremArg,
        /// Range like "1..3" or a single value (scatlr, spinlr).
        #[arg(long)]
        n: Option<IntRange>,
        /// Half-integer range like "1/2..5/2" (spinlr) or integer range (scatlr).
        #[arg(long)]
        s: Option<HalfRange>,
        /// Integer range (oddrow).
        #[arg(long)]
        t: Option<IntRange>,
        /// Integer range (oddrow).
        #[arg(long)]
        m: Option<IntRange>,
    },

    /// Fit and check the stretched-coefficient polynomial of a triple.
    Stretch {
        outer: Partition,
        inner: Partition,
        content: Partition,
        /// Number of leading sample points used for the fit.
        #[arg(long, default_value_t = 3)]
        fit: usize,
        /// Number of further points the fit must reproduce exactly.
        #[arg(long, default_value_t = 2)]
        check: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum TableArg {
    Scatalan,
    Spin,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum TheoremArg {
    Scatlr,
    Spinlr,
    Oddrow,
}

/// Inclusive integer range: "1..3" or "2".
#[derive(Clone, Debug)]
pub struct IntRange(pub RangeInclusive<usize>);

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad range endpoint: {t:?}")))
        };
        if let Some((a, b)) = s.split_once("..") {
            Ok(IntRange(parse(a)?..=parse(b)?))
        } else {
            let v = parse(s)?;
            Ok(IntRange(v..=v))
        }
    }
}

/// Inclusive half-integer range stepping by 1/2, kept in twice-units:
/// "1/2..5/2", "1..2", or a single value.
#[derive(Clone, Debug)]
pub struct HalfRange(pub RangeInclusive<u64>);

impl FromStr for HalfRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if let Some((a, b)) = s.split_once("..") {
            let a: HalfInt = a.parse()?;
            let b: HalfInt = b.parse()?;
            Ok(HalfRange(a.twice()..=b.twice()))
        } else {
            let v: HalfInt = s.parse()?;
            Ok(HalfRange(v.twice()..=v.twice()))
        }
    }
}

fn enum_budget() -> usize {
    std::env::var("LR_ENUM_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_BUDGET)
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ExtrapolationMismatch { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Sbinom { n, k, s } => {
            if n == 0 || s == 0 {
                return Err(Error::Parse("n and s must be positive".into()));
            }
            let value: Natural = sbinom(n, k, s);
            match cli.format {
                Format::Plain => println!("{value}"),
                Format::Csv => {
                    println!("n,k,s,value");
                    println!("{n},{k},{s},{value}");
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "n": n, "k": k, "s": s,
                        "value": value.to_string(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Table {
            kind,
            n_max,
            s_max,
            golden,
            fixture,
        } => {
            let kind = match kind {
                TableArg::Scatalan => TableKind::SCatalan,
                TableArg::Spin => TableKind::SpinSCatalan,
            };
            if kind == TableKind::SCatalan && !s_max.is_integer() {
                return Err(Error::Parse(
                    "s-Catalan table takes an integer s_max".into(),
                ));
            }
            let table = build_table::<Natural>(kind, n_max, s_max);
            if golden {
                return golden_diff(&table, fixture);
            }
            match cli.format {
                Format::Plain => print!("{}", render_table_plain(&table)),
                Format::Csv => print!("{}", table.to_csv()),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "kind": match kind {
                            TableKind::SCatalan => "scatalan",
                            TableKind::SpinSCatalan => "spin",
                        },
                        "columns": table.cols.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "rows": table.values.iter().enumerate().map(|(i, row)| {
                            serde_json::json!({
                                "n": i + 1,
                                "values": row.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            })
                        }).collect::<Vec<_>>(),
                    })
                ),
            }
            Ok(0)
        }
        Command::Lrcoef {
            outer,
            inner,
            content,
            list,
        } => {
            let shape = skew(outer.clone(), inner.clone())?;
            let tableaux = enumerate_lr_tableaux(&shape, &content);
            match cli.format {
                Format::Plain => {
                    println!("{}", tableaux.len());
                    if list {
                        for t in &tableaux {
                            println!();
                            print!("{}", t.render());
                        }
                    }
                }
                Format::Csv => {
                    println!("outer,inner,content,count");
                    println!(
                        "{},{},{},{}",
                        quote_csv(&outer.to_string()),
                        quote_csv(&inner.to_string()),
                        quote_csv(&content.to_string()),
                        tableaux.len()
                    );
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schema_version": SCHEMA_VERSION,
                        "outer": outer.parts(),
                        "inner": inner.parts(),
                        "content": content.parts(),
                        "count": tableaux.len().to_string(),
                        "tableaux": if list {
                            tableaux.iter().map(tableau_rows_json).collect::<Vec<_>>()
                        } else {
                            Vec::new()
                        },
                    })
                ),
            }
            Ok(0)
        }
        Command::Verify { theorem, n, s, t, m } => {
            let ranges = match theorem {
                TheoremArg::Scatlr => {
                    let s = s.unwrap_or(HalfRange(2..=8));
                    if s.0.start() % 2 != 0 || s.0.end() % 2 != 0 {
                        return Err(Error::Parse(
                            "scatlr takes integer s values".into(),
                        ));
                    }
                    SweepRanges::ScatLR {
                        n: n.map(|r| r.0).unwrap_or(1..=3),
                        s: (*s.0.start() as usize / 2)..=(*s.0.end() as usize / 2),
                    }
                }
                TheoremArg::Spinlr => SweepRanges::SpinLR {
                    n: n.map(|r| r.0).unwrap_or(1..=5),
                    s_twice: s.map(|r| r.0).unwrap_or(1..=5),
                },
                TheoremArg::Oddrow => SweepRanges::OddRow {
                    t: t.map(|r| r.0).unwrap_or(1..=4),
                    m: m.map(|r| r.0).unwrap_or(1..=3),
                },
            };
            let results = sweep(&ranges, enum_budget());
            if results.is_empty() {
                // Every requested pair fell outside the theorem hypothesis.
                if let SweepRanges::SpinLR { n, s_twice } = &ranges {
                    return Err(Error::OutsideTheoremDomain {
                        n: *n.start(),
                        s: HalfInt::from_twice(*s_twice.start())
                            .map(|h| h.to_string())
                            .unwrap_or_default(),
                    });
                }
                return Err(Error::Parse("empty sweep".into()));
            }
            print_verify(&results, cli.format);
            Ok(if results.iter().all(|r| r.pass) { 0 } else { 1 })
        }
        Command::Stretch {
            outer,
            inner,
            content,
            fit,
            check,
        } => {
            if fit < 2 {
                return Err(Error::TooFewSamples { needed: 2, got: fit });
            }
            let report = analyze_stretch(&outer, &inner, &content, fit, check)?;
            match cli.format {
                Format::Plain => {
                    println!("triple: {outer} / {inner}, content {content}");
                    println!(
                        "samples: {}",
                        report
                            .samples
                            .iter()
                            .map(|(n, v)| format!("({n},{v})"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    println!(
                        "polynomial (constant first): [{}]",
                        report.poly.coeff_strings().join(", ")
                    );
                    println!("degree: {}", report.degree);
                    println!(
                        "extrapolation: exact through N = {}",
                        report.extrapolation_checked_to
                    );
                    println!(
                        "coefficient nonnegativity: {}",
                        if report.all_coeffs_nonnegative {
                            "all coefficients nonnegative"
                        } else {
                            "NEGATIVE COEFFICIENT FOUND"
                        }
                    );
                }
                Format::Csv => {
                    println!("N,value");
                    for (n, v) in &report.samples {
                        println!("{n},{v}");
                    }
                }
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(0)
        }
    }
}

fn tableau_rows_json(t: &SkewTableau) -> serde_json::Value {
    serde_json::Value::Array(
        t.render()
            .lines()
            .map(|l| serde_json::Value::String(l.to_string()))
            .collect(),
    )
}

fn quote_csv(s: &str) -> String {
    format!("\"{s}\"")
}

fn render_table_plain(table: &CatalanTable<Natural>) -> String {
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n".to_string()];
    header.extend(table.cols.iter().map(|c| format!("s={c}")));
    cells.push(header);
    for (i, row) in table.values.iter().enumerate() {
        let mut line = vec![(i + 1).to_string()];
        line.extend(row.iter().map(|v| v.to_string()));
        cells.push(line);
    }
    let cols = cells[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn default_fixture(kind: TableKind) -> PathBuf {
    let name = match kind {
        TableKind::SCatalan => "figure1.csv",
        TableKind::SpinSCatalan => "figure2.csv",
    };
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn normalize(s: &str) -> String {
    let mut t = s.replace("\r\n", "\n");
    if !t.ends_with('\n') && !t.is_empty() {
        t.push('\n');
    }
    t
}

/// Byte-compares the regenerated CSV against the fixture (after newline
/// normalization) and names the first differing cell on mismatch.
fn golden_diff(table: &CatalanTable<Natural>, fixture: Option<PathBuf>) -> Result<i32, Error> {
    let path = fixture.unwrap_or_else(|| default_fixture(table.kind));
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| Error::Parse(format!("cannot read fixture {}: {e}", path.display())))?;
    let expected = normalize(&expected);
    let actual = normalize(&table.to_csv());
    if expected == actual {
        println!("golden match: {}", path.display());
        return Ok(0);
    }
    let exp_rows: Vec<Vec<&str>> = expected.lines().map(|l| l.split(',').collect()).collect();
    let act_rows: Vec<Vec<&str>> = actual.lines().map(|l| l.split(',').collect()).collect();
    for (i, act_row) in act_rows.iter().enumerate() {
        let exp_row = match exp_rows.get(i) {
            Some(r) => r,
            None => {
                eprintln!("golden mismatch: fixture has {} lines, output has {}", exp_rows.len(), act_rows.len());
                return Ok(1);
            }
        };
        for (j, act_cell) in act_row.iter().enumerate() {
            let exp_cell = exp_row.get(j).copied().unwrap_or("<missing>");
            if *act_cell != exp_cell {
                let col = exp_rows[0].get(j).copied().unwrap_or("?");
                let row = exp_row.first().copied().unwrap_or("?");
                eprintln!(
                    "golden mismatch at n={row}, s={col}: expected {exp_cell}, got {act_cell}"
                );
                return Ok(1);
            }
        }
    }
    eprintln!("golden mismatch: fixture has extra lines");
    Ok(1)
}

fn print_verify(results: &[VerificationResult], format: Format) {
    let passed = results.iter().filter(|r| r.pass).count();
    match format {
        Format::Plain => {
            for r in results {
                println!(
                    "{} {}: lhs={} rhs={} {}{}",
                    r.theorem.name(),
                    r.params_string(),
                    r.lhs,
                    r.rhs,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.note
                        .as_ref()
                        .map(|n| format!(" [{n}]"))
                        .unwrap_or_default(),
                );
            }
            println!("{passed}/{} pass", results.len());
        }
        Format::Csv => {
            println!("theorem,params,lhs,rhs,pass,note");
            for r in results {
                println!(
                    "{},{},{},{},{},{}",
                    r.theorem.name(),
                    quote_csv(&r.params_string()),
                    r.lhs,
                    r.rhs,
                    r.pass,
                    quote_csv(r.note.as_deref().unwrap_or("")),
                );
            }
        }
        Format::Json => {
            let json = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "results": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "passed": passed,
                "total": results.len(),
            });
            println!("{json}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(*"1..3".parse::<IntRange>().unwrap().0.end(), 3);
        assert_eq!("2".parse::<IntRange>().unwrap().0, 2..=2);
        assert_eq!("1/2..5/2".parse::<HalfRange>().unwrap().0, 1..=5);
        assert_eq!("2".parse::<HalfRange>().unwrap().0, 4..=4);
        assert!("x..y".parse::<IntRange>().is_err());
    }

    #[test]
    fn plain_table_is_aligned() {
        let table = build_table::<Natural>(
            TableKind::SCatalan,
            2,
            HalfInt::from_int(2),
        );
        let out = render_table_plain(&table);
        assert!(out.starts_with("n  s=1  s=2\n"));
    }
}
