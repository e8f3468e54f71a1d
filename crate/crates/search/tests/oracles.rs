//! The search engines against raw enumeration and against published
//! isomorphism class counts.

use std::collections::BTreeSet;

use hyperex_core::combinatorics::for_each_combination;
use hyperex_core::construct::complete;
use hyperex_core::pattern::parse_family;
use hyperex_core::{Hypergraph, PatternFamily};
use hyperex_search::oracle::{enumerate_ex, enumerate_packing, enumerate_star, enumerate_zarankiewicz};
use hyperex_search::{
    branch_bound_ex, exact_ex, exact_ex_packing, exact_star_ex, exact_zarankiewicz, ex_column, generate_nonisomorphic,
    ordered_multipartite, FamilyFree, SearchOptions, SearchStatus,
};
use proptest::prelude::*;

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn fam(id: &str) -> PatternFamily {
    parse_family(id).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, (n - 1) as u32);
            out.push(q);
        }
    }
    out
}

/// Isomorphism classes of `r`-graphs on `n` vertices by relabelling every
/// edge subset under every permutation and keeping the smallest form.
fn brute_class_count(n: usize, r: usize) -> usize {
    let mut all: Vec<Vec<u32>> = Vec::new();
    for_each_combination(n, r, |c| all.push(c.to_vec()));
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for bits in 0u64..1 << all.len() {
        let edges: Vec<&Vec<u32>> = (0..all.len()).filter(|&i| bits >> i & 1 == 1).map(|i| &all[i]).collect();
        let form = perms
            .iter()
            .map(|p| {
                let mut es: Vec<Vec<u32>> = edges
                    .iter()
                    .map(|e| {
                        let mut f: Vec<u32> = e.iter().map(|&v| p[v as usize]).collect();
                        f.sort_unstable();
                        f
                    })
                    .collect();
                es.sort();
                es
            })
            .min()
            .unwrap();
        seen.insert(form);
    }
    seen.len()
}

#[test]
fn graph_class_counts_match_the_published_sequence() {
    let published = [1usize, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &count) in published.iter().enumerate() {
        let n = i + 1;
        let classes = generate_nonisomorphic(n, 2, &opts()).unwrap();
        assert_eq!(classes.len(), count, "graphs on {n} vertices");
    }
}

#[test]
fn class_counts_match_brute_force_canonical_forms() {
    for (n, r) in [(1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (3, 3), (4, 3), (5, 3)] {
        let classes = generate_nonisomorphic(n, r, &opts()).unwrap();
        assert_eq!(classes.len(), brute_class_count(n, r), "{r}-graphs on {n} vertices");
    }
    assert_eq!(generate_nonisomorphic(4, 3, &opts()).unwrap().len(), 5);
    assert_eq!(generate_nonisomorphic(5, 3, &opts()).unwrap().len(), 34);
}

#[test]
fn turan_columns_match_enumeration() {
    for id in ["K3", "K4", "C4", "P3", "S3", "K2,3", "2xK2"] {
        let col = ex_column(6, &fam(id), &opts()).unwrap();
        for (n, o) in col.iter().enumerate() {
            assert_eq!(o.status, SearchStatus::Exact);
            assert_eq!(o.optimum, enumerate_ex(n, &fam(id)).unwrap().0, "ex({n}, {id})");
        }
    }
    for id in ["E3", "K4^3", "T3", "K1,1,2", "2xE3"] {
        let col = ex_column(5, &fam(id), &opts()).unwrap();
        for (n, o) in col.iter().enumerate() {
            assert_eq!(o.optimum, enumerate_ex(n, &fam(id)).unwrap().0, "ex({n}, {id})");
        }
    }
}

#[test]
fn packing_matches_enumeration() {
    for (f, t) in [(complete(2, 2), 1), (complete(2, 2), 2), (complete(3, 2), 1), (fam("P3").members()[0].clone(), 1)] {
        for n in 1..=6 {
            let got = exact_ex_packing(n, &f, t, &opts()).unwrap().optimum;
            assert_eq!(got, enumerate_packing(n, &f, t).unwrap().0, "n = {n}, t = {t}");
        }
    }
}

#[test]
fn star_hosts_match_enumeration() {
    for id in ["K1,2", "K2,2", "K3", "K2,3"] {
        for n in 1..=6 {
            for m in 0..=n {
                let got = exact_star_ex(m, n, &fam(id), &opts()).unwrap();
                assert_eq!(got.optimum, enumerate_star(m, n, &fam(id)).unwrap().0, "ex_star({m}, {n}, {id})");
                assert!(got.witness.edges().all(|e| (e[0] as usize) < m));
            }
        }
    }
    for n in 3..=5 {
        for m in 1..=n {
            let got = exact_star_ex(m, n, &fam("K1,1,2"), &opts()).unwrap().optimum;
            assert_eq!(got, enumerate_star(m, n, &fam("K1,1,2")).unwrap().0, "ex_star({m}, {n}, K1,1,2)");
        }
    }
}

#[test]
fn zarankiewicz_matches_enumeration() {
    for sizes in [[1, 2], [2, 2], [2, 1], [2, 3], [3, 2]] {
        let p = ordered_multipartite(&sizes).unwrap();
        for m in 1..=4 {
            for n in 1..=4 {
                let got = exact_zarankiewicz(m, n, &p, &opts()).unwrap().optimum;
                assert_eq!(got, enumerate_zarankiewicz(m, n, &p).unwrap().0, "Z({m}, {n}, {sizes:?})");
            }
        }
    }
    let p = ordered_multipartite(&[1, 1, 2]).unwrap();
    for (m, n) in [(1, 3), (2, 3), (3, 3), (2, 4)] {
        let got = exact_zarankiewicz(m, n, &p, &opts()).unwrap().optimum;
        assert_eq!(got, enumerate_zarankiewicz(m, n, &p).unwrap().0, "Z({m}, {n}, K1,1,2)");
    }
}

#[test]
fn zarankiewicz_is_symmetric_under_transpose() {
    let a = ordered_multipartite(&[2, 3]).unwrap();
    let b = ordered_multipartite(&[3, 2]).unwrap();
    for (m, n) in [(3, 4), (4, 5), (5, 4)] {
        let x = exact_zarankiewicz(m, n, &a, &opts()).unwrap().optimum;
        let y = exact_zarankiewicz(n, m, &b, &opts()).unwrap().optimum;
        assert_eq!(x, y, "Z({m}, {n}, K2,3) vs Z({n}, {m}, K3,2)");
    }
}

#[test]
fn isolated_vertex_members_block_every_larger_host() {
    // an edge plus an isolated vertex embeds in any host with an edge and a third vertex
    let edge_plus_point = Hypergraph::new(3, 2, [[0u32, 1]]).unwrap();
    let family = PatternFamily::single("K2+K1", edge_plus_point);
    let col = ex_column(7, &family, &opts()).unwrap();
    let values: Vec<u64> = col.iter().map(|o| o.optimum).collect();
    assert_eq!(values, vec![0, 0, 1, 0, 0, 0, 0, 0]);
    for n in 0..=7 {
        let bb = branch_bound_ex(&FamilyFree::new(&family).unwrap(), n, &opts()).unwrap();
        assert_eq!(bb.optimum, values[n]);
    }
}

#[test]
fn exact_ex_agrees_with_its_column() {
    let k = fam("K2,2");
    let col = ex_column(9, &k, &opts()).unwrap();
    assert_eq!(exact_ex(9, &k, &opts()).unwrap().optimum, col[9].optimum);
    // known values of ex(n, C4)
    let values: Vec<u64> = col.iter().map(|o| o.optimum).collect();
    assert_eq!(values, vec![0, 0, 1, 3, 4, 6, 7, 9, 11, 13]);
}

fn pattern_strategy() -> impl Strategy<Value = Hypergraph> {
    (3usize..=4)
        .prop_flat_map(|k| (Just(k), proptest::collection::vec(any::<bool>(), k * (k - 1) / 2)))
        .prop_filter_map("pattern needs an edge", |(k, bits)| {
            let mut all = Vec::new();
            for_each_combination(k, 2, |c| all.push([c[0], c[1]]));
            let edges: Vec<[u32; 2]> = all.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            if edges.is_empty() {
                return None;
            }
            Hypergraph::new(k, 2, edges).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_graph_patterns_match_enumeration(f in pattern_strategy(), n in 1usize..=6) {
        let family = PatternFamily::single("F", f);
        let col = ex_column(n, &family, &opts()).unwrap();
        prop_assert_eq!(col[n].optimum, enumerate_ex(n, &family).unwrap().0);
        let bb = branch_bound_ex(&FamilyFree::new(&family).unwrap(), n, &opts()).unwrap();
        prop_assert_eq!(bb.optimum, col[n].optimum);
    }

    #[test]
    fn witnesses_have_the_reported_size(f in pattern_strategy(), n in 1usize..=7) {
        let family = PatternFamily::single("F", f);
        let o = exact_ex(n, &family, &opts()).unwrap();
        prop_assert_eq!(o.witness.edge_count() as u64, o.optimum);
        prop_assert_eq!(o.witness.n(), n);
        prop_assert!(!hyperex_core::solve::contains_family(&o.witness, &family).unwrap());
    }
}
