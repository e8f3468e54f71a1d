//! `hyperex verify` and `hyperex scan`.

use std::path::PathBuf;

use anyhow::Context;
use hyperex_verify::scan::scan;
use hyperex_verify::{run_suite, SuiteConfig};
use serde_json::json;

use crate::input::{table, write_out};
use crate::{print_json, usage, Cli, EXIT_FAIL};

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Suite configuration (JSON). Without one the default matrix runs;
    /// `{}` is the empty matrix.
    pub config: Option<PathBuf>,
    /// Print the default configuration and exit.
    #[arg(long)]
    pub print_default: bool,
}

#[derive(clap::Args, Debug)]
pub struct ScanArgs {
    pub pattern: String,
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub t_max: usize,
    /// Use only values already in the ex-table.
    #[arg(long)]
    pub no_search: bool,
}

fn config(cli: &Cli, a: &VerifyArgs) -> anyhow::Result<SuiteConfig> {
    let mut c = match &a.config {
        None => SuiteConfig::default(),
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", p.display())))?
        }
    };
    if let Some(seed) = cli.seed {
        c.seed = seed;
    }
    if cli.node_cap.is_some() {
        c.node_cap = cli.node_cap;
    }
    Ok(c)
}

/// With `--out`, writes `report.json`, `report.csv` and the working
/// `ex_table.jsonl` there and prints the summary; otherwise prints the
/// whole report.
pub fn run_verify(cli: &Cli, a: &VerifyArgs) -> anyhow::Result<u8> {
    if a.print_default {
        print_json(&SuiteConfig::default())?;
        return Ok(0);
    }
    let c = config(cli, a)?;
    let (report, working) = run_suite(&c, table(cli)?, &cli.run_options()?)?;
    let s = &report.summary;
    eprintln!(
        "{} cases: {} pass, {} fail, {} vacuous, {} unresolved",
        s.total, s.pass, s.fail, s.vacuous, s.unresolved
    );
    for case in report.cases.iter().filter(|c| c.is_fail()) {
        eprintln!("FAIL {} {}", case.check_id, case.params);
    }
    match &cli.out {
        Some(dir) => {
            report.write(dir)?;
            std::fs::write(dir.join("ex_table.jsonl"), working.to_jsonl())?;
            print_json(&json!({"summary": s, "out": dir}))?;
        }
        None => crate::print_stdout(&report.to_json())?,
    }
    Ok(if report.exit_code() != 0 { EXIT_FAIL } else { 0 })
}

pub fn run_scan(cli: &Cli, a: &ScanArgs) -> anyhow::Result<u8> {
    let (s, _) = scan(&a.pattern, a.n, a.t_max, table(cli)?, !a.no_search, cli.node_cap, &cli.run_options()?)?;
    let csv = s.to_csv();
    crate::print_stdout(&csv)?;
    write_out(cli, "scan.csv", &csv)?;
    for issue in &s.issues {
        eprintln!("{} {}: {}", issue.check_id, issue.verdict.as_str(), issue.evidence);
    }
    eprintln!("{} at n = {}: {} rows", s.pattern, s.n, s.rows.len());
    Ok(0)
}
