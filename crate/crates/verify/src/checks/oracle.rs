//! Engines against brute force.

use hyperex_core::combinatorics::for_each_combination;
use hyperex_core::construct::{complete, cycle, path, star};
use hyperex_core::io::to_text;
use hyperex_core::solve::matching_number;
use hyperex_core::{Hypergraph, PatternFamily};
use hyperex_search::oracle::enumerate_ex;
use hyperex_search::{branch_bound_ex, ex_column, FamilyFree, SearchOptions, SearchStatus};
use rand::Rng;
use rayon::prelude::*;
use serde_json::json;

use super::corpus_rng;
use crate::case::CheckCase;

fn random_hypergraph(n: usize, r: usize, p: f64, rng: &mut impl Rng) -> Hypergraph {
    let mut edges = Vec::new();
    for_each_combination(n, r, |e| {
        if rng.gen_bool(p) {
            edges.push(e.to_vec());
        }
    });
    Hypergraph::new(n, r, edges).expect("combinations are valid edges")
}

/// A random family of one or two patterns, each with at least one edge.
fn random_family(i: usize, r: usize, rng: &mut impl Rng) -> PatternFamily {
    let members = rng.gen_range(1..=2);
    let mut out = Vec::new();
    while out.len() < members {
        let k = if r == 2 { rng.gen_range(3..=4) } else { rng.gen_range(4..=5) };
        let h = random_hypergraph(k, r, 0.5, rng);
        if h.edge_count() > 0 {
            out.push(h);
        }
    }
    PatternFamily::new(format!("random-{i}"), out).expect("members share uniformity")
}

/// For each random family: all-subsets enumeration, edge branch-and-bound
/// and vertex extension agree at every `n <= n_max`.
pub fn oracle_ex_cases(instances: usize, n_max_graph: usize, n_max_3graph: usize, seed: u64) -> Vec<CheckCase> {
    let mut rng = corpus_rng(seed, "oracle-ex");
    let corpus: Vec<(usize, PatternFamily)> = (0..instances)
        .map(|i| {
            let r = if i % 3 == 2 { 3 } else { 2 };
            (i, random_family(i, r, &mut rng))
        })
        .collect();
    let opts = SearchOptions::default();
    corpus
        .par_iter()
        .map(|(i, fam)| {
            let n_max = if fam.r() == 2 { n_max_graph } else { n_max_3graph };
            let members: Vec<String> = fam.members().iter().map(to_text).collect();
            let params = json!({"instance": i, "r": fam.r(), "n_max": n_max});
            let run = || -> Result<(Vec<u64>, Vec<u64>, Vec<u64>), String> {
                let prop = FamilyFree::new(fam).map_err(|e| e.to_string())?;
                let column = ex_column(n_max, fam, &opts).map_err(|e| e.to_string())?;
                let mut oracle = Vec::new();
                let mut bb = Vec::new();
                for n in 0..=n_max {
                    oracle.push(enumerate_ex(n, fam).map_err(|e| e.to_string())?.0);
                    let o = branch_bound_ex(&prop, n, &opts).map_err(|e| e.to_string())?;
                    if o.status != SearchStatus::Exact {
                        return Err(format!("branch-and-bound stopped early at n = {n}"));
                    }
                    bb.push(o.optimum);
                }
                Ok((oracle, bb, column.iter().map(|o| o.optimum).collect()))
            };
            match run() {
                Ok((oracle, bb, ext)) => {
                    let ok = oracle == bb && oracle == ext;
                    CheckCase::judge(
                        "oracle-ex",
                        params,
                        ok,
                        json!({"enumeration": oracle, "branch_bound": bb, "vertex_extension": ext}),
                        || json!({"members": members, "enumeration": oracle, "branch_bound": bb, "vertex_extension": ext}),
                    )
                }
                Err(e) => CheckCase::unresolved("oracle-ex", params, e),
            }
        })
        .collect()
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Vertex sets of copies of `f` in `host`, found by trying every vertex
/// subset under every bijection.
fn copy_vertex_sets(host: &Hypergraph, f: &Hypergraph) -> Vec<u64> {
    let mut sets = Vec::new();
    let k = f.n();
    for_each_combination(host.n(), k, |s| {
        let mut perm = s.to_vec();
        loop {
            let hit = f.edges().all(|e| {
                let mut img: Vec<u32> = e.iter().map(|&v| perm[v as usize]).collect();
                img.sort_unstable();
                host.has_edge(&img)
            });
            if hit {
                sets.push(s.iter().fold(0u64, |m, &v| m | 1 << v));
                break;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    });
    sets
}

fn max_disjoint(sets: &[u64], used: u64) -> usize {
    match sets.split_first() {
        None => 0,
        Some((&first, rest)) => {
            let skip = max_disjoint(rest, used);
            if first & used == 0 {
                skip.max(1 + max_disjoint(rest, used | first))
            } else {
                skip
            }
        }
    }
}

/// The matching solver against copy enumeration on random hosts.
pub fn oracle_matching_cases(hosts: usize, n_max: usize, seed: u64) -> Vec<CheckCase> {
    let patterns: Vec<(&str, Hypergraph)> = vec![
        ("K2", complete(2, 2)),
        ("K3", complete(3, 2)),
        ("P3", path(3)),
        ("C4", cycle(4).expect("four vertices")),
        ("S3", star(3)),
        ("E3", complete(3, 3)),
        ("K4^3-", Hypergraph::new(4, 3, [[0u32, 1, 2], [0, 1, 3]]).expect("valid edges")),
    ];
    let mut rng = corpus_rng(seed, "oracle-matching");
    let corpus: Vec<(usize, usize, Hypergraph)> = (0..hosts)
        .map(|i| {
            let k = i % patterns.len();
            let n = rng.gen_range(0..=n_max);
            let p = rng.gen_range(0.2..0.8);
            (i, k, random_hypergraph(n, patterns[k].1.r(), p, &mut rng))
        })
        .collect();
    corpus
        .par_iter()
        .map(|(i, k, host)| {
            let (name, f) = &patterns[*k];
            let params = json!({"host": i, "F": name, "n": host.n()});
            let oracle = max_disjoint(&copy_vertex_sets(host, f), 0);
            match matching_number(host, f, None) {
                Ok(nu) => {
                    let valid = nu.matching.is_valid(host, f) && nu.matching.len() == nu.value;
                    CheckCase::judge(
                        "oracle-matching",
                        params,
                        valid && nu.value == oracle,
                        json!({"solver": nu.value, "oracle": oracle, "edges": host.edge_count()}),
                        || json!({"host": to_text(host), "solver": nu.value, "oracle": oracle, "matching_valid": valid}),
                    )
                }
                Err(e) => CheckCase::unresolved("oracle-matching", params, e.to_string()),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_copies() {
        // two disjoint triangles plus a bridge
        let h = Hypergraph::new(6, 2, [[0u32, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5], [2, 3]]).unwrap();
        let sets = copy_vertex_sets(&h, &complete(3, 2));
        assert_eq!(sets, vec![0b000111, 0b111000]);
        assert_eq!(max_disjoint(&sets, 0), 2);
        assert_eq!(max_disjoint(&copy_vertex_sets(&h, &complete(2, 2)), 0), 3);
    }

    #[test]
    fn small_corpora_agree() {
        for c in oracle_ex_cases(4, 5, 4, 7) {
            assert_eq!(c.verdict, crate::case::Verdict::Pass, "{c:?}");
        }
        for c in oracle_matching_cases(20, 8, 7) {
            assert_eq!(c.verdict, crate::case::Verdict::Pass, "{c:?}");
        }
    }
}
