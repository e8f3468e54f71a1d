//! Exact small-order values of `ex(n, F)`, `ex(n, (t+1)F)`, star-host and
//! Zarankiewicz numbers, with witnesses.
//!
//! Three engines cover the instances: vertex-by-vertex extension with
//! isomorph rejection for plain and packing numbers, row search for
//! Zarankiewicz numbers and graph star hosts, and edge branch-and-bound for
//! hypergraph star hosts. [`oracle`] enumerates every edge subset for
//! cross-checks.

mod augment;
mod branch;
mod error;
pub mod mask;
pub mod oracle;
mod outcome;
pub mod property;
mod rows;

use std::time::Instant;

use hyperex_bounds::{ExRecord, ExStatus, ExTable, Upsert, Variant};
use hyperex_core::canon::{canonical, canonical_coloured};
use hyperex_core::construct::complete;
use hyperex_core::io::to_text;
use hyperex_core::solve::{contains_family, is_free, ordered_contains, SemibipartiteHost};
use hyperex_core::{Hypergraph, PartitionedPattern, PatternFamily};

pub use error::{Error, Result};
pub use outcome::{Budget, Method, SearchOutcome, SearchStatus};
pub use property::{Anything, FamilyFree, OrderedFree, PackingFree, Property};

use mask::{binom, subsets_of, MaskGraph, MAX_ORDER};
use outcome::Meter;

/// Budget and parallel split settings.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Edge decisions expanded before branch-and-bound subtrees run in
    /// parallel.
    pub split_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::unlimited(),
            split_depth: 6,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge(format!("hosts on {n} vertices (limit {MAX_ORDER})")));
    }
    Ok(())
}

fn canonical_plain(h: &Hypergraph) -> Hypergraph {
    let c = canonical(h).expect("order checked");
    h.relabel(&c.labelling)
}

/// Canonical form keeping `0..m` as the low labels.
fn canonical_split(h: &Hypergraph, m: usize) -> Hypergraph {
    let colours: Vec<u32> = (0..h.n()).map(|v| u32::from(v >= m)).collect();
    let c = canonical_coloured(h, &colours).expect("order checked");
    h.relabel(&c.labelling)
}

fn finish(
    witness: Hypergraph,
    method: Method,
    status: SearchStatus,
    nodes: u64,
    start: Instant,
    check: impl Fn(&Hypergraph) -> Result<bool>,
) -> Result<SearchOutcome> {
    if !check(&witness)? {
        return Err(Error::Witness(format!("witness fails the property:\n{}", to_text(&witness))));
    }
    Ok(SearchOutcome {
        optimum: witness.edge_count() as u64,
        witness,
        nodes,
        duration: start.elapsed(),
        method,
        status,
    })
}

/// Outcomes for every order `0..=n_max` of a hereditary property, each
/// order seeded with the previous one: the previous witness plus an
/// isolated vertex is a lower bound, and averaging over vertex-deleted
/// subhosts gives `ex(k) <= floor(ex(k-1) k / (k - r))`.
pub fn property_column<P: Property + ?Sized>(
    prop: &P,
    n_max: usize,
    opts: &SearchOptions,
    check: impl Fn(&Hypergraph) -> Result<bool>,
) -> Result<Vec<SearchOutcome>> {
    check_order(n_max)?;
    let r = prop.r();
    let meter = Meter::new(opts.budget);
    let mut out: Vec<SearchOutcome> = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let start = Instant::now();
        let before = meter.nodes();
        if !prop.can_fail(k) {
            out.push(finish(complete(k, r), Method::Trivial, SearchStatus::Exact, 0, start, &check)?);
            continue;
        }
        let prev = out.last();
        let mut lower_w = Hypergraph::empty(k, r);
        if let Some(p) = prev {
            let grown = p.witness.with_isolated(1);
            if prop.admits(&grown)? {
                lower_w = grown;
            }
        }
        let lower = lower_w.edge_count() as u64;
        let cap = binom(k, r);
        let upper = match prev {
            Some(p) if p.status == SearchStatus::Exact && k > r => cap.min(p.optimum * k as u64 / (k - r) as u64),
            _ => cap,
        };
        let (witness, status) = if meter.stopped() {
            (lower_w, SearchStatus::Lower)
        } else {
            match augment::maximise(prop, k, lower, upper, &meter) {
                None => (lower_w, SearchStatus::Lower),
                Some(None) => (lower_w, SearchStatus::Exact),
                Some(Some(h)) => (h, SearchStatus::Exact),
            }
        };
        let witness = canonical_plain(&witness);
        out.push(finish(witness, Method::VertexExtension, status, meter.nodes() - before, start, &check)?);
    }
    Ok(out)
}

/// `ex(k, family)` for every `k <= n_max`.
pub fn ex_column(n_max: usize, family: &PatternFamily, opts: &SearchOptions) -> Result<Vec<SearchOutcome>> {
    let prop = FamilyFree::new(family)?;
    property_column(&prop, n_max, opts, |h| Ok(!contains_family(h, family)?))
}

/// `ex(n, family)`: the maximum number of edges of an `n`-vertex host
/// containing no member of `family`.
pub fn exact_ex(n: usize, family: &PatternFamily, opts: &SearchOptions) -> Result<SearchOutcome> {
    Ok(ex_column(n, family, opts)?.pop().expect("column is non-empty"))
}

/// `ex(k, (t+1)F)` for every `k <= n_max`.
pub fn packing_column(n_max: usize, f: &Hypergraph, t: usize, opts: &SearchOptions) -> Result<Vec<SearchOutcome>> {
    let prop = PackingFree::new(f, t)?;
    property_column(&prop, n_max, opts, |h| Ok(is_free(h, f, t)?))
}

/// `ex(n, (t+1)F)`: the maximum number of edges of an `n`-vertex host with
/// no `t+1` vertex-disjoint copies of `F`.
pub fn exact_ex_packing(n: usize, f: &Hypergraph, t: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    Ok(packing_column(n, f, t, opts)?.pop().expect("column is non-empty"))
}

/// Table family id for `(t+1)F`: the pattern name itself when `t = 0`.
pub fn packing_family_id(name: &str, t: usize) -> String {
    if t == 0 {
        name.to_string()
    } else {
        format!("{}x{name}", t + 1)
    }
}

fn pick(best: Option<(u64, Vec<u64>)>, n: usize, r: usize) -> Option<Hypergraph> {
    best.map(|(_, edges)| Hypergraph::from_masks(n, r, &edges).expect("search edges are valid"))
}

/// `ex_star(m, n, family)`: the maximum over `n`-vertex hosts in which the
/// vertex set `0..m` meets every edge.
pub fn exact_star_ex(m: usize, n: usize, family: &PatternFamily, opts: &SearchOptions) -> Result<SearchOutcome> {
    check_order(n)?;
    if m > n {
        return Err(error::invalid(format!("centre size {m} exceeds n = {n}")));
    }
    let r = family.r();
    let start = Instant::now();
    let meets = |h: &Hypergraph| h.edges().all(|e| (e[0] as usize) < m);
    let check = |h: &Hypergraph| Ok(meets(h) && !contains_family(h, family)?);
    if n < m + r {
        // every r-set meets the centre
        let mut o = exact_ex(n, family, opts)?;
        o.duration = start.elapsed();
        return Ok(o);
    }
    let all_star: Vec<u64> = {
        let full = MaskGraph::new(n, r)?.all();
        subsets_of(full, r).into_iter().filter(|e| e & ((1u64 << m) - 1) != 0).collect()
    };
    let prop = FamilyFree::new(family)?;
    if !prop.can_fail(n) || m == 0 {
        let h = Hypergraph::from_masks(n, r, &all_star)?;
        return finish(canonical_split(&h, m), Method::Trivial, SearchStatus::Exact, 0, start, check);
    }
    let meter = Meter::new(opts.budget);
    let empty = Hypergraph::empty(n, r);
    let (found, method) = if r == 2 {
        // ex(n) caps every star host; reaching it ends the search
        let plain = exact_ex(n, family, opts)?;
        let cap = if plain.status == SearchStatus::Exact { plain.optimum } else { u64::MAX };
        let level = augment::level(&prop, m, &vec![0; m + 1], &meter);
        let mut bases: Vec<&Hypergraph> = level.iter().flatten().collect();
        bases.sort_by_key(|b| std::cmp::Reverse(b.edge_count()));
        let rows_most = ((n - m) * m) as u64;
        let mut best: Option<(u64, Vec<u64>)> = None;
        for base in bases {
            let lower = best.as_ref().map_or(0, |b| b.0);
            if lower >= cap || base.edge_count() as u64 + rows_most <= lower {
                break;
            }
            let problem = rows::RowProblem {
                prop: &prop,
                base,
                rows: n - m,
                choices: (0..m).map(|v| 1u64 << v).collect(),
            };
            if let Some(b) = rows::row_search(&problem, lower, &meter) {
                best = Some(b);
            }
            if meter.stopped() {
                break;
            }
        }
        (pick(best, n, r), Method::RowSearch)
    } else {
        let b = branch::branch_bound(&prop, n, &all_star, 0, opts.split_depth, &meter);
        (pick(b, n, r), Method::BranchBound)
    };
    let status = if meter.stopped() { SearchStatus::Lower } else { SearchStatus::Exact };
    let witness = canonical_split(&found.unwrap_or(empty), m);
    finish(witness, method, status, meter.nodes(), start, check)
}

/// Part sizes of a partitioned pattern joined in part order, e.g. `K3,2`
/// when the first part (the one placed in `V_1`) has three vertices.
pub fn zarankiewicz_family_id(p: &PartitionedPattern) -> String {
    let sizes: Vec<String> = p.sizes().iter().map(usize::to_string).collect();
    format!("K{}", sizes.join(","))
}

/// A complete multipartite pattern with parts in the given order.
pub fn ordered_multipartite(sizes: &[usize]) -> Result<PartitionedPattern> {
    let sorted = hyperex_core::pattern::complete_multipartite(sizes)?;
    let mut pool: Vec<Vec<u32>> = sorted.parts().to_vec();
    let mut parts = Vec::with_capacity(sizes.len());
    for &s in sizes {
        let i = pool.iter().position(|p| p.len() == s).expect("sizes come from the same list");
        parts.push(pool.remove(i));
    }
    Ok(PartitionedPattern::new(sorted.base().clone(), parts)?)
}

/// `Z(m, n, P)`: the maximum number of edges of a host on `V_1 = 0..m` and
/// `V_2 = m..m+n` whose edges each have exactly one vertex in `V_1`, with no
/// copy of `P` placing its first part in `V_1` and the rest in `V_2`.
pub fn exact_zarankiewicz(m: usize, n: usize, p: &PartitionedPattern, opts: &SearchOptions) -> Result<SearchOutcome> {
    check_order(m + n)?;
    let r = p.base().r();
    let choices = subsets_of(MaskGraph::new(n, 1)?.all(), r - 1);
    if choices.len() > 20 {
        return Err(Error::TooLarge(format!("{} row choices", choices.len())));
    }
    let start = Instant::now();
    let v1: Vec<u32> = (0..m as u32).collect();
    let check = |h: &Hypergraph| {
        let s = SemibipartiteHost::new(h.clone(), &v1)?;
        Ok(!ordered_contains(&s, p)?)
    };
    // search layout: V_2 is the base 0..n, rows n..n+m are V_1
    let rows_mask = ((1u64 << m) - 1) << n;
    let prop = OrderedFree::new(p, m + n, rows_mask)?;
    let to_final: Vec<u32> = (0..m + n).map(|x| if x >= n { (x - n) as u32 } else { (x + m) as u32 }).collect();
    if !prop.can_fail(m + n) {
        let edges: Vec<u64> = (0..m).flat_map(|i| choices.iter().map(move |&c| c | 1u64 << (n + i))).collect();
        let h = Hypergraph::from_masks(m + n, r, &edges)?.relabel(&to_final);
        return finish(canonical_split(&h, m), Method::Trivial, SearchStatus::Exact, 0, start, check);
    }
    let meter = Meter::new(opts.budget);
    let base = Hypergraph::empty(n, r);
    let problem = rows::RowProblem {
        prop: &prop,
        base: &base,
        rows: m,
        choices,
    };
    let found = pick(rows::row_search(&problem, 0, &meter), m + n, r).unwrap_or_else(|| Hypergraph::empty(m + n, r));
    let status = if meter.stopped() { SearchStatus::Lower } else { SearchStatus::Exact };
    let witness = canonical_split(&found.relabel(&to_final), m);
    finish(witness, Method::RowSearch, status, meter.nodes(), start, check)
}

/// `ex(n, family)` by edge branch-and-bound over all `r`-sets, without
/// isomorph rejection. Slower than [`exact_ex`]; kept as an independent
/// engine for cross-checks.
pub fn branch_bound_ex<P: Property + ?Sized>(prop: &P, n: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    check_order(n)?;
    let r = prop.r();
    let start = Instant::now();
    let meter = Meter::new(opts.budget);
    let all = subsets_of(MaskGraph::new(n, r)?.all(), r);
    let found = pick(branch::branch_bound(prop, n, &all, 0, opts.split_depth, &meter), n, r);
    let status = if meter.stopped() { SearchStatus::Lower } else { SearchStatus::Exact };
    let witness = canonical_plain(&found.unwrap_or_else(|| Hypergraph::empty(n, r)));
    finish(witness, Method::BranchBound, status, meter.nodes(), start, |h| prop.admits(h))
}

/// One representative of every isomorphism class of `r`-graphs on `n`
/// vertices, in canonical form, sorted by certificate.
pub fn generate_nonisomorphic(n: usize, r: usize, opts: &SearchOptions) -> Result<Vec<Hypergraph>> {
    check_order(n)?;
    if r == 0 {
        return Err(error::invalid("uniformity must be at least 1"));
    }
    let meter = Meter::new(opts.budget);
    augment::level(&Anything { r }, n, &vec![0; n + 1], &meter)
        .ok_or_else(|| Error::Budget(format!("generation of {r}-graphs on {n} vertices")))
}

/// Stores an outcome: exact outcomes as exact records, budget-limited ones
/// as lower bounds.
pub fn ex_table_update(
    table: &mut ExTable,
    family: &str,
    variant: Variant,
    n: usize,
    outcome: &SearchOutcome,
) -> Result<Upsert> {
    let status = match outcome.status {
        SearchStatus::Exact => ExStatus::Exact,
        SearchStatus::Lower => ExStatus::Lower,
    };
    Ok(table.upsert(ExRecord {
        family: family.to_string(),
        variant,
        n,
        value: outcome.optimum,
        status,
        witness: Some(to_text(&outcome.witness)),
    })?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperex_core::pattern::parse_family;

    fn fam(id: &str) -> PatternFamily {
        parse_family(id).unwrap()
    }

    #[test]
    fn small_turan_numbers() {
        let col = ex_column(7, &fam("K3"), &SearchOptions::default()).unwrap();
        let values: Vec<u64> = col.iter().map(|o| o.optimum).collect();
        assert_eq!(values, vec![0, 0, 1, 2, 4, 6, 9, 12]);
        assert!(col.iter().all(|o| o.status == SearchStatus::Exact));
    }

    #[test]
    fn packing_matches_known_value() {
        let o = exact_ex_packing(7, &complete(2, 2), 2, &SearchOptions::default()).unwrap();
        assert_eq!(o.optimum, 11);
    }

    #[test]
    fn zero_budget_is_lower() {
        let o = exact_ex(5, &fam("K3"), &SearchOptions::with_budget(Budget::nodes(0))).unwrap();
        assert_eq!(o.status, SearchStatus::Lower);
        assert!(o.optimum <= 6);
    }

    #[test]
    fn star_full_centre_is_plain() {
        let a = exact_star_ex(5, 6, &fam("K3"), &SearchOptions::default()).unwrap();
        assert_eq!(a.optimum, 9);
    }

    #[test]
    fn zarankiewicz_c4() {
        let p = ordered_multipartite(&[2, 2]).unwrap();
        let o = exact_zarankiewicz(3, 3, &p, &SearchOptions::default()).unwrap();
        assert_eq!(o.optimum, 6);
    }

    #[test]
    fn ordered_parts_keep_order() {
        let p = ordered_multipartite(&[3, 1]).unwrap();
        assert_eq!(p.sizes(), vec![3, 1]);
        assert_eq!(zarankiewicz_family_id(&p), "K3,1");
    }
}
