use hyperex_core::canon::{certificate, is_isomorphic};
use hyperex_core::combinatorics::{binom_u128, for_each_combination};
use hyperex_core::construct::{complete, join, suspension};
use hyperex_core::io::{from_text, to_text};
use hyperex_core::pattern::complete_multipartite;
use hyperex_core::solve::{contains, is_free, matching_number, ordered_contains, SemibipartiteHost};
use hyperex_core::structure::{covering_number, i_independent_cover, shadow};
use hyperex_core::Hypergraph;
use proptest::prelude::*;

fn c(a: usize, b: usize) -> usize {
    binom_u128(a as u64, b as u64) as usize
}

fn from_bits(n: usize, r: usize, bits: &[bool]) -> Hypergraph {
    let mut edges = Vec::new();
    let mut i = 0;
    for_each_combination(n, r, |e| {
        if bits.get(i).copied().unwrap_or(false) {
            edges.push(e.to_vec());
        }
        i += 1;
    });
    Hypergraph::new(n, r, edges).unwrap()
}

prop_compose! {
    fn hypergraph(max_n: usize, r: usize)(n in 0..=max_n)(
        bits in proptest::collection::vec(any::<bool>(), c(n, r)),
        n in Just(n),
    ) -> Hypergraph {
        from_bits(n, r, &bits)
    }
}

prop_compose! {
    fn graph_with_perm(max_n: usize, r: usize)(h in hypergraph(max_n, r))(
        perm in Just((0..h.n() as u32).collect::<Vec<_>>()).prop_shuffle(),
        h in Just(h),
    ) -> (Hypergraph, Vec<u32>) {
        (h, perm)
    }
}

/// Isomorphism by trying every bijection.
fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.n() != b.n() || a.r() != b.r() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<u32> = (0..n as u32).collect();
    fn next_perm(p: &mut [u32]) -> bool {
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
    loop {
        if a.relabel(&perm) == *b {
            return true;
        }
        if !next_perm(&mut perm) {
            return false;
        }
    }
}

/// Maximum packing over explicitly listed copy vertex sets.
fn brute_matching_number(host: &Hypergraph, pattern: &Hypergraph) -> usize {
    let k = pattern.n();
    let mut sets: Vec<u64> = Vec::new();
    for_each_combination(host.n(), k, |s| {
        let sub = hyperex_core::structure::induced_subgraph(host, s).unwrap();
        if sub.edge_count() >= pattern.edge_count() && contains(&sub, pattern).unwrap() {
            sets.push(s.iter().fold(0u64, |m, &v| m | 1 << v));
        }
    });
    fn best(sets: &[u64], used: u64) -> usize {
        match sets.split_first() {
            None => 0,
            Some((&first, rest)) => {
                let skip = best(rest, used);
                if first & used == 0 {
                    skip.max(1 + best(rest, used | first))
                } else {
                    skip
                }
            }
        }
    }
    best(&sets, 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_size_identity(g in hypergraph(5, 2), h in hypergraph(5, 2), g3 in hypergraph(4, 3), h3 in hypergraph(4, 3)) {
        for (g, h) in [(&g, &h), (&g3, &h3)] {
            let r = g.r();
            let j = join(g, h).unwrap();
            let expect = g.edge_count() + h.edge_count() + c(g.n() + h.n(), r) - c(g.n(), r) - c(h.n(), r);
            prop_assert_eq!(j.edge_count(), expect);
        }
    }

    #[test]
    fn clique_join_shape(t in 0usize..4, h in hypergraph(6, 2)) {
        let n = t + h.n();
        let j = join(&complete(t, 2), &h).unwrap();
        prop_assert_eq!(j.edge_count(), c(n, 2) - c(n - t, 2) + h.edge_count());
    }

    #[test]
    fn suspension_and_shadow(f in hypergraph(6, 2)) {
        let s = suspension(&f);
        prop_assert_eq!(s.edge_count(), f.edge_count());
        prop_assert_eq!(s.r(), f.r() + 1);
        let sh = shadow(&s).unwrap();
        for e in f.edges() {
            prop_assert!(sh.has_edge(e));
        }
    }

    #[test]
    fn degree_sum(h in hypergraph(7, 3)) {
        let sum: usize = h.degrees().iter().map(|&d| d as usize).sum();
        prop_assert_eq!(sum, 3 * h.edge_count());
    }

    #[test]
    fn cover_chain(h in hypergraph(6, 4)) {
        let tau = covering_number(&h).unwrap();
        let covers: Vec<Option<usize>> = (1..=3).map(|i| i_independent_cover(&h, i).unwrap()).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                if let (Some(ti), Some(tj)) = (covers[i], covers[j]) {
                    prop_assert!(tau <= tj && tj <= ti);
                }
            }
        }
        for t in covers.into_iter().flatten() {
            prop_assert!(t >= tau);
        }
    }

    #[test]
    fn canonical_invariance((h, perm) in graph_with_perm(8, 2)) {
        let moved = h.relabel(&perm);
        prop_assert_eq!(certificate(&h).unwrap(), certificate(&moved).unwrap());
    }

    #[test]
    fn canonical_invariance_3((h, perm) in graph_with_perm(7, 3)) {
        let moved = h.relabel(&perm);
        prop_assert_eq!(certificate(&h).unwrap(), certificate(&moved).unwrap());
    }

    #[test]
    fn canonical_matches_brute_force(a in hypergraph(5, 2), b in hypergraph(5, 2)) {
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), brute_isomorphic(&a, &b));
    }

    #[test]
    fn text_round_trip(h in hypergraph(7, 3)) {
        let text = to_text(&h);
        let back = from_text(&text).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(to_text(&back), text);
    }

    #[test]
    fn matching_bounds_and_oracle(h in hypergraph(8, 2), pick in 0usize..4) {
        let patterns = [complete(2, 2), complete(3, 2), hyperex_core::construct::path(3), hyperex_core::construct::cycle(4).unwrap()];
        let f = &patterns[pick];
        let nu = matching_number(&h, f, None).unwrap();
        prop_assert!(nu.value <= h.n() / f.n());
        prop_assert!(nu.matching.is_valid(&h, f));
        prop_assert_eq!(nu.matching.len(), nu.value);
        prop_assert_eq!(nu.value, brute_matching_number(&h, f));
        for t in 0..3 {
            let capped = matching_number(&h, f, Some(t + 1)).unwrap().value;
            prop_assert_eq!(is_free(&h, f, t).unwrap(), capped <= t);
        }
    }

    #[test]
    fn matching_monotone(h in hypergraph(7, 2), extra in proptest::collection::vec((0u32..7, 0u32..7), 1..4)) {
        let k3 = complete(3, 2);
        let before = matching_number(&h, &k3, None).unwrap().value;
        let mut edges: Vec<Vec<u32>> = h.edges().map(|e| e.to_vec()).collect();
        for (a, b) in extra {
            if a != b && (a as usize) < h.n() && (b as usize) < h.n() {
                let e = vec![a.min(b), a.max(b)];
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
        let bigger = Hypergraph::new(h.n(), 2, edges).unwrap();
        prop_assert!(matching_number(&bigger, &k3, None).unwrap().value >= before);
    }

    #[test]
    fn hypergraph_matching_oracle(h in hypergraph(7, 3)) {
        let f = Hypergraph::new(4, 3, [[0u32, 1, 2], [0, 1, 3]]).unwrap();
        prop_assert_eq!(matching_number(&h, &f, None).unwrap().value, brute_matching_number(&h, &f));
    }

    #[test]
    fn ordered_implies_plain(bits in proptest::collection::vec(any::<bool>(), 3 * 5)) {
        let mut edges = Vec::new();
        for a in 0..3u32 {
            for b in 0..5u32 {
                if bits[(a * 5 + b) as usize] {
                    edges.push([a, 3 + b]);
                }
            }
        }
        let h = Hypergraph::new(8, 2, edges).unwrap();
        let s = SemibipartiteHost::new(h.clone(), &[0, 1, 2]).unwrap();
        for sizes in [[2usize, 2], [1, 2], [2, 3]] {
            let p = complete_multipartite(&sizes).unwrap();
            if ordered_contains(&s, &p).unwrap() {
                prop_assert!(contains(&h, p.base()).unwrap());
            }
        }
        // a single-vertex first part is the plain star question in V1-centred form
        let star = complete_multipartite(&[1, 2]).unwrap();
        let centred = (0..3).any(|v| h.degree(v) >= 2);
        prop_assert_eq!(ordered_contains(&s, &star).unwrap(), centred);
    }
}

#[test]
fn cover_of_complete_multipartite() {
    for r in 2..=3usize {
        let mut sizes = vec![1usize; r];
        loop {
            let p = complete_multipartite(&sizes).unwrap();
            let min = *sizes.iter().min().unwrap();
            assert_eq!(covering_number(p.base()).unwrap(), min, "{sizes:?}");
            let mut i = 0;
            while i < r && sizes[i] == 3 {
                sizes[i] = 1;
                i += 1;
            }
            if i == r {
                break;
            }
            sizes[i] += 1;
        }
    }
}
