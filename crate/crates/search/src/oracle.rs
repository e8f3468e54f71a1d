//! Raw all-subsets enumeration, checked with the pattern solvers directly.
//! Used to cross-check the search engines on small instances.

use hyperex_core::combinatorics::for_each_combination;
use hyperex_core::solve::{contains_family, is_free, ordered_contains, SemibipartiteHost};
use hyperex_core::{Hypergraph, PartitionedPattern, PatternFamily};

use crate::error::{Error, Result};

/// Most candidate edges an enumeration will take on.
pub const MAX_EDGES: usize = 24;

fn best_subset(n: usize, r: usize, edges: &[Vec<u32>], mut ok: impl FnMut(&Hypergraph) -> Result<bool>) -> Result<(u64, Hypergraph)> {
    if edges.len() > MAX_EDGES {
        return Err(Error::TooLarge(format!("{} candidate edges for enumeration", edges.len())));
    }
    let mut best = (0u64, Hypergraph::empty(n, r));
    for bits in 0u64..1 << edges.len() {
        let count = bits.count_ones() as u64;
        if count <= best.0 {
            continue;
        }
        let chosen: Vec<&Vec<u32>> = (0..edges.len()).filter(|&i| bits >> i & 1 == 1).map(|i| &edges[i]).collect();
        let h = Hypergraph::new(n, r, chosen)?;
        if ok(&h)? {
            best = (count, h);
        }
    }
    Ok(best)
}

fn all_edges(n: usize, r: usize, keep: impl Fn(&[u32]) -> bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_combination(n, r, |c| {
        if keep(c) {
            out.push(c.to_vec());
        }
    });
    out
}

/// `ex(n, family)` by enumeration.
pub fn enumerate_ex(n: usize, family: &PatternFamily) -> Result<(u64, Hypergraph)> {
    let edges = all_edges(n, family.r(), |_| true);
    best_subset(n, family.r(), &edges, |h| Ok(!contains_family(h, family)?))
}

/// `ex(n, (t+1)F)` by enumeration.
pub fn enumerate_packing(n: usize, f: &Hypergraph, t: usize) -> Result<(u64, Hypergraph)> {
    let edges = all_edges(n, f.r(), |_| true);
    best_subset(n, f.r(), &edges, |h| Ok(is_free(h, f, t)?))
}

/// `ex_star(m, n, family)` with the centre `0..m`, by enumeration.
pub fn enumerate_star(m: usize, n: usize, family: &PatternFamily) -> Result<(u64, Hypergraph)> {
    let edges = all_edges(n, family.r(), |e| (e[0] as usize) < m);
    best_subset(n, family.r(), &edges, |h| Ok(!contains_family(h, family)?))
}

/// `Z(m, n, P)` with `V_1 = 0..m`, by enumeration.
pub fn enumerate_zarankiewicz(m: usize, n: usize, p: &PartitionedPattern) -> Result<(u64, Hypergraph)> {
    let r = p.base().r();
    let v1: Vec<u32> = (0..m as u32).collect();
    let edges = all_edges(m + n, r, |e| e.iter().filter(|&&v| (v as usize) < m).count() == 1);
    best_subset(m + n, r, &edges, |h| {
        let s = SemibipartiteHost::new(h.clone(), &v1)?;
        Ok(!ordered_contains(&s, p)?)
    })
}
