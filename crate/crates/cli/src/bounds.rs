//! `hyperex bounds`.

use clap::Subcommand;
use hyperex_bounds::formulas::{
    erdos_gallai, erdos_kst, erdos_triangle_t_max, g1, g2, g3, i_independent_lower, interval1_bound,
    interval1_t_max_suspension, interval2_bound, interval2_graph_bound, interval3_bound, interval3_graph_bound, kst,
    lu_szekely, moon_t_max, star_turan, star_turan_as_stated, trivial_maxdeg, zarankiewicz_graph, zarankiewicz_hypergraph,
};
use hyperex_bounds::{BoundReport, PatternParams};
use num_rational::BigRational;

use crate::input::{pattern, sizes, table};
use crate::{print_json, usage, Cli};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(subcommand)]
    pub formula: Formula,
}

#[derive(Subcommand, Debug)]
pub enum Formula {
    /// Kővári–Sós–Turán bound on ex(n, K_{s1,s2}).
    Kst { n: usize, s1: usize, s2: usize },
    /// Erdős bound on ex(n, K^{(r)}_{s1,...,sr}).
    ErdosKst { n: usize, sizes: String },
    /// Zarankiewicz bound; graph form for two parts, hypergraph form otherwise.
    Zarankiewicz { m: usize, n: usize, sizes: String },
    /// Bound on star hosts with centre of size m.
    StarTuran {
        m: usize,
        n: usize,
        sizes: String,
        /// Divide both terms by r; this form fails on small stars.
        #[arg(long)]
        as_stated: bool,
    },
    /// max{C(2t+1,2), C(n,2) - C(n-t,2)}.
    ErdosGallai { n: usize, t: usize },
    /// Size of the first construction.
    G1 { pattern: String, n: usize, t: usize },
    /// Size of the second construction.
    G2 { pattern: String, n: usize, t: usize },
    /// Size of the third construction.
    G3 { pattern: String, n: usize, t: usize },
    /// m·t·Δ + ex(n - mt, F) for hosts of maximum degree Δ.
    Maxdeg { pattern: String, n: usize, t: usize, delta: usize },
    /// Size of B(n, (t+1)τ_i - 1, r, i).
    BLower { n: usize, t: usize, tau_i: usize, r: usize, i: usize },
    /// First-range bound (the first construction size).
    Interval1 { pattern: String, n: usize, t: usize },
    /// Upper end of the first range for a suspension with base density `pi`.
    Interval1Suspension {
        pattern: String,
        n: usize,
        #[arg(long, default_value = "0")]
        pi: String,
    },
    /// Second-range bound, hypergraph form.
    Interval2 { pattern: String, n: usize, t: usize },
    /// Second-range value, graph form.
    Interval2Graph { pattern: String, n: usize, t: usize },
    /// Third-range bound, hypergraph form.
    Interval3 { pattern: String, n: usize, t: usize },
    /// Third-range bound, graph form.
    Interval3Graph { pattern: String, n: usize, t: usize },
    /// Lu–Székely degree bound on the matching threshold.
    LuSzekely { pattern: String },
    /// Upper end of the disjoint cliques range for K_{l+1}.
    Moon { n: usize, l: usize },
    /// Upper end of the disjoint triangles range.
    ErdosTriangle { n: usize },
}

fn params(name: &str) -> anyhow::Result<PatternParams> {
    let p = pattern(name)?;
    Ok(PatternParams::of(p.name, &p.graph)?)
}

/// Params and part sizes of a complete multipartite pattern.
fn multipartite(name: &str) -> anyhow::Result<(PatternParams, Vec<usize>)> {
    let p = pattern(name)?;
    let part = p
        .partition
        .as_ref()
        .ok_or_else(|| usage(format!("{} is not a complete multipartite pattern", p.name)))?;
    let sizes = part.sizes();
    Ok((PatternParams::of(p.name.clone(), &p.graph)?, sizes))
}

pub fn run(cli: &Cli, a: &Args) -> anyhow::Result<u8> {
    let tab = table(cli)?;
    let rep: BoundReport = match &a.formula {
        Formula::Kst { n, s1, s2 } => kst(*n, *s1, *s2),
        Formula::ErdosKst { n, sizes: s } => erdos_kst(*n, &sizes(s)?),
        Formula::Zarankiewicz { m, n, sizes: s } => {
            let s = sizes(s)?;
            if s.len() == 2 {
                zarankiewicz_graph(*m, *n, s[0], s[1])
            } else {
                zarankiewicz_hypergraph(*m, *n, &s)
            }
        }
        Formula::StarTuran { m, n, sizes: s, as_stated } => {
            if *as_stated {
                star_turan_as_stated(*m, *n, &sizes(s)?)
            } else {
                star_turan(*m, *n, &sizes(s)?)
            }
        }
        Formula::ErdosGallai { n, t } => erdos_gallai(*n, *t),
        Formula::G1 { pattern, n, t } => g1(*n, *t, &params(pattern)?, &tab),
        Formula::G2 { pattern, n, t } => g2(*n, *t, &params(pattern)?, &tab),
        Formula::G3 { pattern, n, t } => g3(*n, *t, &params(pattern)?, &tab),
        Formula::Maxdeg { pattern, n, t, delta } => trivial_maxdeg(*n, *t, *delta, &params(pattern)?, &tab),
        Formula::BLower { n, t, tau_i, r, i } => i_independent_lower(*n, *t, *tau_i, *r, *i),
        Formula::Interval1 { pattern, n, t } => interval1_bound(*n, *t, &params(pattern)?, &tab),
        Formula::Interval1Suspension { pattern, n, pi } => {
            let pi: BigRational = pi.parse().map_err(|_| usage(format!("bad rational {pi:?}")))?;
            interval1_t_max_suspension(&params(pattern)?, &pi, *n, &tab)?
        }
        Formula::Interval2 { pattern, n, t } => {
            let (b, s) = multipartite(pattern)?;
            interval2_bound(*n, *t, &b, &s, &tab)
        }
        Formula::Interval2Graph { pattern, n, t } => {
            let (b, s) = multipartite(pattern)?;
            interval2_graph_bound(*n, *t, &b, &s, &tab)
        }
        Formula::Interval3 { pattern, n, t } => {
            let (b, s) = multipartite(pattern)?;
            interval3_bound(*n, *t, &b, &s, &tab)
        }
        Formula::Interval3Graph { pattern, n, t } => {
            let (b, s) = multipartite(pattern)?;
            interval3_graph_bound(*n, *t, &b, &s, &tab)
        }
        Formula::LuSzekely { pattern: name } => lu_szekely(&pattern(name)?.graph),
        Formula::Moon { n, l } => moon_t_max(*n, *l),
        Formula::ErdosTriangle { n } => erdos_triangle_t_max(*n),
    };
    let value = rep.value.as_ref().map_or("none".to_string(), |v| format!("{:.6}", v.approx()));
    let failing = rep.preconditions.iter().filter(|c| !c.holds).count();
    eprintln!(
        "{} = {value} ({:?}, {failing} of {} hypotheses fail)",
        rep.formula,
        rep.status,
        rep.preconditions.len()
    );
    print_json(&rep)?;
    Ok(0)
}
