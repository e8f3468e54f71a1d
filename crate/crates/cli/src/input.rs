//! Reading hosts, patterns and tables.

use std::path::Path;

use anyhow::Context;
use hyperex_bounds::ExTable;
use hyperex_core::io::read_file;
use hyperex_core::pattern::{parse_pattern, NamedPattern};
use hyperex_core::Hypergraph;

use crate::{usage, Cli};

/// A hypergraph from a text-format file.
pub fn graph_file(path: &str) -> anyhow::Result<Hypergraph> {
    read_file(Path::new(path)).map_err(|e| usage(format!("{path}: {e}")))
}

/// A pattern given by name (`K3`, `K2,2`, `hat(P3)`, ...) or, when the
/// argument names an existing file, read from that file.
pub fn pattern(arg: &str) -> anyhow::Result<NamedPattern> {
    if Path::new(arg).is_file() {
        let graph = graph_file(arg)?;
        return Ok(NamedPattern {
            name: arg.to_string(),
            graph,
            partition: None,
        });
    }
    parse_pattern(arg).map_err(|e| usage(e.to_string()))
}

/// Comma-separated part sizes, e.g. `2,3`.
pub fn sizes(arg: &str) -> anyhow::Result<Vec<usize>> {
    arg.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("expected comma-separated sizes, got {arg:?}")))
}

/// The table named by `--ex-table`, or an empty one. A missing file is an
/// empty table.
pub fn table(cli: &Cli) -> anyhow::Result<ExTable> {
    match &cli.ex_table {
        None => Ok(ExTable::new()),
        Some(p) => ExTable::load_or_empty(p).with_context(|| format!("reading ex-table {}", p.display())),
    }
}

pub fn save_table(cli: &Cli, table: &ExTable) -> anyhow::Result<()> {
    if let Some(p) = &cli.ex_table {
        table.save(p).with_context(|| format!("writing ex-table {}", p.display()))?;
    }
    Ok(())
}

pub fn write_out(cli: &Cli, name: &str, contents: &str) -> anyhow::Result<()> {
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(name), contents)?;
    }
    Ok(())
}
