//! `hyperex construct`.

use clap::Subcommand;
use hyperex_bounds::formulas::{g1, g2, g3};
use hyperex_bounds::{ExKey, ExStatus, PatternParams, ReportStatus, Variant};
use hyperex_core::construct::{
    b_construction, complete, cycle, disjoint_copies, disjoint_union, generalized_triangle, join, path, star, suspension,
    turan_graph,
};
use hyperex_core::io::to_text;
use hyperex_core::pattern::parse_family;
use hyperex_core::Hypergraph;
use hyperex_search::{ex_column, ex_table_update};

use crate::input::{graph_file, pattern, save_table, table, write_out};
use crate::search::options;
use crate::{usage, Cli};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(subcommand)]
    pub kind: Kind,
}

#[derive(Subcommand, Debug)]
pub enum Kind {
    /// Complete r-graph on n vertices.
    Complete { n: usize, r: usize },
    /// Turán graph T(n, l).
    Turan { n: usize, l: usize },
    /// Path on k vertices.
    Path { k: usize },
    /// Cycle on k vertices.
    Cycle { k: usize },
    /// Star with k leaves.
    Star { k: usize },
    /// Generalized triangle T_r.
    Triangle { r: usize },
    /// B(n, m, r, i): edges meeting a fixed m-set in 1..=i vertices.
    B { n: usize, m: usize, r: usize, i: usize },
    /// A named pattern, e.g. `K2,3` or `hat(P3)`.
    Pattern { name: String },
    /// Join of two graph files.
    Join { a: String, b: String },
    /// Disjoint union of two graph files.
    Union { a: String, b: String },
    /// k disjoint copies of a graph file.
    Copies { file: String, k: usize },
    /// Suspension of a graph file.
    Suspension { file: String },
    /// A member of the first construction family: K_t joined to an
    /// extremal F-free host on n - t vertices.
    G1 { pattern: String, n: usize, t: usize },
    /// A member of the second construction family: K_{τ(t+1)-1} joined to an
    /// extremal F[m-τ+1]-free host.
    G2 { pattern: String, n: usize, t: usize },
    /// A member of the third construction family: K_{m(t+1)-1} plus a
    /// disjoint extremal F-free host.
    G3 { pattern: String, n: usize, t: usize },
}

fn family_member(cli: &Cli, which: u8, name: &str, n: usize, t: usize) -> anyhow::Result<Hypergraph> {
    let p = pattern(name)?;
    let params = PatternParams::of(p.name.clone(), &p.graph)?;
    let mut tab = table(cli)?;
    let rep = match which {
        1 => g1(n, t, &params, &tab),
        2 => g2(n, t, &params, &tab),
        _ => g3(n, t, &params, &tab),
    };
    if rep.status == ReportStatus::Undefined {
        return Err(usage(format!("construction undefined: {}", rep.notes.join("; "))));
    }
    let clique = rep.params["clique"].as_u64().unwrap_or(0) as usize;
    let family = rep.params["rest_family"].as_str().unwrap_or_default().to_string();
    let rest = n - clique;
    let key = ExKey::plain(family.clone(), rest);
    let witness = match tab.best(&key, ExStatus::Lower).and_then(|r| r.witness_graph()) {
        Some(w) => w?,
        None => {
            let fam = parse_family(&family)?;
            let col = ex_column(rest, &fam, &options(cli)?)?;
            for (k, o) in col.iter().enumerate() {
                ex_table_update(&mut tab, &family, Variant::Plain, k, o)?;
            }
            save_table(cli, &tab)?;
            col.into_iter().next_back().expect("column is non-empty").witness
        }
    };
    let k = complete(clique, params.r);
    Ok(if which == 3 { disjoint_union(&k, &witness)? } else { join(&k, &witness)? })
}

pub fn run(cli: &Cli, a: &Args) -> anyhow::Result<u8> {
    let h = match &a.kind {
        Kind::Complete { n, r } => complete(*n, *r),
        Kind::Turan { n, l } => turan_graph(*n, *l)?,
        Kind::Path { k } => path(*k),
        Kind::Cycle { k } => cycle(*k)?,
        Kind::Star { k } => star(*k),
        Kind::Triangle { r } => generalized_triangle(*r)?,
        Kind::B { n, m, r, i } => b_construction(*n, *m, *r, *i)?,
        Kind::Pattern { name } => pattern(name)?.graph,
        Kind::Join { a, b } => join(&graph_file(a)?, &graph_file(b)?)?,
        Kind::Union { a, b } => disjoint_union(&graph_file(a)?, &graph_file(b)?)?,
        Kind::Copies { file, k } => disjoint_copies(&graph_file(file)?, *k),
        Kind::Suspension { file } => suspension(&graph_file(file)?),
        Kind::G1 { pattern, n, t } => family_member(cli, 1, pattern, *n, *t)?,
        Kind::G2 { pattern, n, t } => family_member(cli, 2, pattern, *n, *t)?,
        Kind::G3 { pattern, n, t } => family_member(cli, 3, pattern, *n, *t)?,
    };
    let text = to_text(&h);
    crate::print_stdout(&text)?;
    write_out(cli, "construct.txt", &text)?;
    eprintln!("r = {}, n = {}, edges = {}", h.r(), h.n(), h.edge_count());
    Ok(0)
}
