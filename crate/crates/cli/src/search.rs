//! `hyperex search`.

use clap::Subcommand;
use hyperex_bounds::Variant;
use hyperex_core::pattern::parse_family;
use hyperex_search::{
    ex_column, ex_table_update, exact_star_ex, exact_zarankiewicz, ordered_multipartite, packing_column,
    packing_family_id, zarankiewicz_family_id, Budget, SearchOptions, SearchOutcome, SearchStatus,
};
use serde_json::json;

use crate::input::{pattern, save_table, sizes, table};
use crate::{print_json, usage, Cli, EXIT_BUDGET};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(subcommand)]
    pub target: Target,
}

#[derive(Subcommand, Debug)]
pub enum Target {
    /// ex(n, family); the family is a pattern name, `NAME[s]` or `kxID`.
    Ex { family: String, n: usize },
    /// ex(n, (t+1)F).
    Packing { pattern: String, n: usize, t: usize },
    /// Largest F-free host on n vertices whose edges all meet 0..m.
    Star { family: String, m: usize, n: usize },
    /// Zarankiewicz number: hosts on m + n vertices, parts in the given
    /// order, the first part inside the class of size m.
    Zar { sizes: String, m: usize, n: usize },
}

pub fn options(cli: &Cli) -> anyhow::Result<SearchOptions> {
    Ok(SearchOptions::with_budget(Budget {
        node_cap: cli.node_cap,
        wall_cap: cli.wall_cap()?,
    }))
}

pub fn run(cli: &Cli, a: &Args) -> anyhow::Result<u8> {
    let opts = options(cli)?;
    let mut tab = table(cli)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build()?;
    let (family, variant, key_n, outcome): (String, Variant, serde_json::Value, SearchOutcome) =
        pool.install(|| -> anyhow::Result<_> {
            Ok(match &a.target {
                Target::Ex { family, n } => {
                    let fam = parse_family(family).map_err(|e| usage(e.to_string()))?;
                    let col = ex_column(*n, &fam, &opts)?;
                    for (k, o) in col.iter().enumerate() {
                        ex_table_update(&mut tab, family, Variant::Plain, k, o)?;
                    }
                    let o = col.into_iter().next_back().expect("column is non-empty");
                    (family.clone(), Variant::Plain, json!({"n": n}), o)
                }
                Target::Packing { pattern: name, n, t } => {
                    let p = pattern(name)?;
                    let id = packing_family_id(&p.name, *t);
                    let col = packing_column(*n, &p.graph, *t, &opts)?;
                    for (k, o) in col.iter().enumerate() {
                        ex_table_update(&mut tab, &id, Variant::Plain, k, o)?;
                    }
                    let o = col.into_iter().next_back().expect("column is non-empty");
                    (id, Variant::Plain, json!({"n": n, "t": t}), o)
                }
                Target::Star { family, m, n } => {
                    let fam = parse_family(family).map_err(|e| usage(e.to_string()))?;
                    let o = exact_star_ex(*m, *n, &fam, &opts)?;
                    ex_table_update(&mut tab, family, Variant::Star(*m), *n, &o)?;
                    (family.clone(), Variant::Star(*m), json!({"m": m, "n": n}), o)
                }
                Target::Zar { sizes: s, m, n } => {
                    let p = ordered_multipartite(&sizes(s)?)?;
                    let id = zarankiewicz_family_id(&p);
                    let o = exact_zarankiewicz(*m, *n, &p, &opts)?;
                    ex_table_update(&mut tab, &id, Variant::Zar(*m), *n, &o)?;
                    (id, Variant::Zar(*m), json!({"m": m, "n": n}), o)
                }
            })
        })?;
    save_table(cli, &tab)?;
    eprintln!("{family}: {} ({:?}, {} nodes)", outcome.optimum, outcome.status, outcome.nodes);
    print_json(&json!({"family": family, "variant": variant, "at": key_n, "outcome": outcome}))?;
    Ok(if outcome.status == SearchStatus::Lower { EXIT_BUDGET } else { 0 })
}
