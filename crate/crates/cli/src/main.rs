//! `negaconv`: build, verify and tabulate negacyclic MDS convolutional codes.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use negaconv::families::{
    build_instance, layout, reproduce_table, run_instance, CheckStatus, Depth, DiffCategory, FamilyId, FamilyInstance,
    TableReport, TableRow, DEFAULT_BUDGET,
};
use negaconv::fields::Tower;
use negaconv::Error;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "negaconv", version, about = "Negacyclic MDS convolutional codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Reserved; the tool uses no randomness.
    #[arg(long, global = true)]
    seedless: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct an instance and print its parameters.
    Build(InstanceArgs),
    /// Run every check on an instance and emit its certificate.
    Verify(InstanceArgs),
    /// Regenerate a published table and diff it.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "NEGACONV_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// I, II, III, IV or V.
    #[arg(long)]
    family: String,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    i: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    table: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_)
            | Error::NotOddPrime(_)
            | Error::NotOddPrimePower(_)
            | Error::NoPrimitiveRoot { .. }
            | Error::UnknownTable(_) => Failure::Usage(e.to_string()),
            e => Failure::Verification(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Verification(e.to_string())
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: String,
    q: u64,
    i: u64,
    n: usize,
    k: usize,
    gamma: usize,
    mu: usize,
    d_f: usize,
    status: &'a str,
}

impl<'a> From<&'a TableRow> for CsvRow<'a> {
    fn from(r: &'a TableRow) -> Self {
        CsvRow {
            family: r.family.to_string(),
            q: r.q,
            i: r.i,
            n: r.n,
            k: r.k,
            gamma: r.gamma,
            mu: r.mu,
            d_f: r.d_f,
            status: r.status.as_str(),
        }
    }
}

fn csv_text(rows: &[TableRow]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(CsvRow::from(r)).map_err(|e| Failure::Verification(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Verification(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn json_text<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| Failure::Verification(e.to_string()))
}

fn headline(inst: &FamilyInstance) -> String {
    match &inst.quantum {
        Some(qp) => qp.tuple(),
        None => inst.dual.to_string(),
    }
}

fn instance_text(inst: &FamilyInstance, with_checks: bool) -> String {
    let mut s = String::new();
    if with_checks {
        for c in &inst.certificate.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            let tag = if c.mandatory { "" } else { " (informational)" };
            s += &format!("[{status}] {}{tag}: {} [{}]\n", c.name, c.detail, c.method);
        }
        for n in &inst.certificate.notes {
            s += &format!("note: {n}\n");
        }
    }
    s += &headline(inst);
    s.push('\n');
    if with_checks {
        s += if inst.certificate.pass { "certificate: PASS\n" } else { "certificate: FAIL\n" };
    }
    s
}

fn table_text(report: &TableReport) -> String {
    let mut s = String::new();
    for r in &report.rows {
        let mark = if r.pass { "" } else { "  FAILED" };
        s += &format!("{:<3} q={:<2} i={:<2} {}  {}{mark}\n", r.family, r.q, r.i, r.tuple, r.status.as_str());
    }
    s += "\ndiff against the published table:\n";
    for d in report.diffs.iter().filter(|d| d.category != DiffCategory::Match) {
        let i = d.i.map_or("?".to_string(), |i| i.to_string());
        s += &format!(
            "{:?} {} q={} i={i}: paper {} computed {} {}\n",
            d.category,
            d.family,
            d.q,
            d.paper.as_deref().unwrap_or("-"),
            d.computed.as_deref().unwrap_or("-"),
            d.detail
        );
    }
    s += &format!(
        "{} rows, {} matches, {} whitelisted, {} outside range, {} omissions, {} mismatches\n",
        report.rows.len(),
        report.count(DiffCategory::Match),
        report.count(DiffCategory::WhitelistedOrdering),
        report.count(DiffCategory::OutsideTheoremRange),
        report.count(DiffCategory::PaperOmission),
        report.count(DiffCategory::Mismatch)
    );
    s += if report.pass { "table: PASS\n" } else { "table: FAIL\n" };
    s
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render_instance(inst: &FamilyInstance, format: Format, with_checks: bool) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(instance_text(inst, with_checks)),
        Format::Json => json_text(inst),
        Format::Csv => csv_text(&[TableRow::from_instance(inst)]),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if cli.seedless {
        return Err(Failure::Usage("--seedless is reserved: the tool is deterministic and takes no seed".into()));
    }
    match cli.command {
        Command::Build(a) => {
            let family: FamilyId = a.family.parse()?;
            let inst = build_instance(family, a.q, a.i)?;
            emit(&render_instance(&inst, a.common.format, false)?, &a.common.out)?;
            Ok(true)
        }
        Command::Verify(a) => {
            let family: FamilyId = a.family.parse()?;
            let l = layout(family, a.q, a.i)?;
            let tower = Tower::new(a.q)?;
            let inst = run_instance(&tower, &l, a.common.budget, Depth::Verify)?;
            emit(&render_instance(&inst, a.common.format, true)?, &a.common.out)?;
            Ok(inst.certificate.pass)
        }
        Command::Table(a) => {
            let report = reproduce_table(a.table, a.common.budget)?;
            let text = match a.common.format {
                Format::Text => table_text(&report),
                Format::Json => json_text(&report)?,
                Format::Csv => csv_text(&report.rows)?,
            };
            emit(&text, &a.common.out)?;
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
