//! Structural statistics: links, neighbourhoods, shadows, covers, and
//! induced subgraphs.

use std::collections::BTreeSet;

use crate::bits::BitSet;
use crate::combinatorics::{find_combination, for_each_combination};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;

/// `{A : A ∪ S ∈ H, A ∩ S = ∅}` as an `(r - |S|)`-graph on `V \ S`, with the
/// remaining vertices relabelled in increasing order.
pub fn link(h: &Hypergraph, s: &[u32]) -> Result<Hypergraph> {
    let s: BTreeSet<u32> = s.iter().copied().collect();
    if s.len() >= h.r() {
        return Err(invalid(format!(
            "link needs |S| < r, got |S| = {} and r = {}",
            s.len(),
            h.r()
        )));
    }
    if s.iter().any(|&v| v as usize >= h.n()) {
        return Err(invalid("link set has a vertex out of range"));
    }
    let mut label = vec![u32::MAX; h.n()];
    let mut next = 0u32;
    for v in 0..h.n() as u32 {
        if !s.contains(&v) {
            label[v as usize] = next;
            next += 1;
        }
    }
    let list = h
        .edges()
        .filter(|e| s.iter().all(|v| e.contains(v)))
        .map(|e| {
            e.iter()
                .filter(|v| !s.contains(v))
                .map(|&v| label[v as usize])
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(Hypergraph::from_edge_lists(
        h.n() - s.len(),
        h.r() - s.len(),
        list,
    ))
}

/// The common link `∩_{v ∈ S} L(v)`: the `(r-1)`-sets `A` with `A ∪ {v} ∈ H`
/// for every `v ∈ S`, kept on the original labels.
pub fn common_link(h: &Hypergraph, s: &[u32]) -> Result<Hypergraph> {
    if h.r() < 2 {
        return Err(invalid("common link needs r >= 2"));
    }
    if s.is_empty() {
        return Err(invalid("common link needs a non-empty set"));
    }
    if s.iter().any(|&v| v as usize >= h.n()) {
        return Err(invalid("link set has a vertex out of range"));
    }
    let link_of = |v: u32| -> BTreeSet<Vec<u32>> {
        h.edges()
            .filter(|e| e.contains(&v))
            .map(|e| e.iter().copied().filter(|&u| u != v).collect())
            .collect()
    };
    let mut acc = link_of(s[0]);
    for &v in &s[1..] {
        let other = link_of(v);
        acc.retain(|a| other.contains(a));
    }
    Ok(Hypergraph::from_edge_lists(
        h.n(),
        h.r() - 1,
        acc.into_iter().collect(),
    ))
}

/// `N(T) = {v : T ∪ {v} ∈ H}` for an `(r-1)`-set `T`.
pub fn neighborhood(h: &Hypergraph, t: &[u32]) -> Result<Vec<u32>> {
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.len() + 1 != h.r() {
        return Err(invalid(format!(
            "neighbourhood needs an (r-1)-set, got {} vertices for r = {}",
            t.len(),
            h.r()
        )));
    }
    let mut out = Vec::new();
    let mut probe = Vec::with_capacity(h.r());
    for v in 0..h.n() as u32 {
        if t.contains(&v) {
            continue;
        }
        probe.clear();
        probe.extend_from_slice(&t);
        probe.push(v);
        probe.sort_unstable();
        if h.has_edge(&probe) {
            out.push(v);
        }
    }
    Ok(out)
}

/// All `(r-1)`-subsets of edges.
pub fn shadow(h: &Hypergraph) -> Result<Hypergraph> {
    if h.r() < 2 {
        return Err(invalid("shadow needs r >= 2"));
    }
    let mut set = BTreeSet::new();
    for e in h.edges() {
        for skip in 0..e.len() {
            let sub: Vec<u32> = e
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            set.insert(sub);
        }
    }
    Ok(Hypergraph::from_edge_lists(
        h.n(),
        h.r() - 1,
        set.into_iter().collect(),
    ))
}

/// The subgraph induced on `s`, relabelled `0..|s|` in increasing order.
pub fn induced_subgraph(h: &Hypergraph, s: &[u32]) -> Result<Hypergraph> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.last().is_some_and(|&v| v as usize >= h.n()) {
        return Err(invalid("induced set has a vertex out of range"));
    }
    let mut label = vec![u32::MAX; h.n()];
    for (i, &v) in s.iter().enumerate() {
        label[v as usize] = i as u32;
    }
    let list = h
        .edges()
        .filter(|e| e.iter().all(|&v| label[v as usize] != u32::MAX))
        .map(|e| e.iter().map(|&v| label[v as usize]).collect())
        .collect();
    Ok(Hypergraph::from_edge_lists(s.len(), h.r(), list))
}

fn check_cover_size(h: &Hypergraph) -> Result<()> {
    if h.n() > 64 {
        return Err(Error::TooLarge {
            what: "covering numbers",
            n: h.n(),
            limit: 64,
        });
    }
    Ok(())
}

/// A minimum vertex cover, lexicographically first among minimum ones.
pub fn minimum_cover(h: &Hypergraph) -> Result<Vec<u32>> {
    check_cover_size(h)?;
    let masks = h.edge_masks()?;
    for k in 0..=h.n() {
        let found = find_combination(h.n(), k, |c| {
            let m = c.iter().fold(0u64, |m, &v| m | (1u64 << v));
            masks.iter().all(|&e| e & m != 0)
        });
        if let Some(c) = found {
            return Ok(c);
        }
    }
    unreachable!("the full vertex set covers every edge")
}

/// The covering number `τ(H)`; zero for the edgeless hypergraph.
pub fn covering_number(h: &Hypergraph) -> Result<usize> {
    Ok(minimum_cover(h)?.len())
}

/// The `i`-independent covering number: the least cover meeting every edge
/// in at most `i` vertices, or `None` when no such cover exists.
pub fn i_independent_cover(h: &Hypergraph, i: usize) -> Result<Option<usize>> {
    if i == 0 || i + 1 > h.r() {
        return Err(invalid(format!(
            "i = {i} must lie in [1, r-1] for r = {}",
            h.r()
        )));
    }
    check_cover_size(h)?;
    let masks = h.edge_masks()?;
    for k in 0..=h.n() {
        let found = find_combination(h.n(), k, |c| {
            let m = c.iter().fold(0u64, |m, &v| m | (1u64 << v));
            masks.iter().all(|&e| {
                let hit = (e & m).count_ones() as usize;
                hit >= 1 && hit <= i
            })
        });
        if found.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// For every edge, the number of other edges it intersects; the maximum of
/// this is the dependency degree `d(F)`.
pub fn edge_dependency_degree(h: &Hypergraph) -> usize {
    let m = h.edge_count();
    let mut best = 0;
    for a in 0..m {
        let ea = h.edge(a);
        let count = (0..m)
            .filter(|&b| b != a && h.edge(b).iter().any(|v| ea.contains(v)))
            .count();
        best = best.max(count);
    }
    best
}

/// All induced subgraphs on `s` vertices (one per vertex subset, in
/// lexicographic subset order, duplicates included).
pub fn induced_subgraphs(h: &Hypergraph, s: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for_each_combination(h.n(), s, |c| {
        out.push(induced_subgraph(h, c).expect("subset in range"));
    });
    out
}

/// Vertices lying in at least one edge, as a bitset over `0..n`.
pub fn support(h: &Hypergraph) -> BitSet {
    BitSet::from_iter_with_capacity(h.n(), (0..h.n()).filter(|&v| h.degree(v) > 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{b_construction, complete, cycle, generalized_triangle, suspension};

    fn k23() -> Hypergraph {
        Hypergraph::new(5, 2, [[0u32, 2], [0, 3], [0, 4], [1, 2], [1, 3], [1, 4]]).unwrap()
    }

    #[test]
    fn link_examples() {
        let l = link(&complete(4, 3), &[0]).unwrap();
        assert_eq!(l, complete(3, 2));
        let l = link(&complete(5, 3), &[1, 3]).unwrap();
        assert_eq!((l.n(), l.r(), l.edge_count()), (3, 1, 3));
        assert!(link(&complete(4, 3), &[0, 1, 2]).is_err());
    }

    #[test]
    fn common_link_examples() {
        let t3 = generalized_triangle(3).unwrap();
        let l = common_link(&t3, &[0, 1]).unwrap();
        assert_eq!(l.edge_count(), 0);
        let l = common_link(&complete(4, 2), &[0, 1]).unwrap();
        let got: Vec<_> = l.edges().map(|e| e.to_vec()).collect();
        assert_eq!(got, vec![vec![2], vec![3]]);
    }

    #[test]
    fn neighbourhood_and_shadow() {
        assert_eq!(neighborhood(&cycle(4).unwrap(), &[0]).unwrap(), vec![1, 3]);
        assert!(neighborhood(&cycle(4).unwrap(), &[0, 1]).is_err());
        let single = Hypergraph::new(3, 3, [[0u32, 1, 2]]).unwrap();
        assert_eq!(shadow(&single).unwrap().edge_count(), 3);
        assert!(shadow(&Hypergraph::empty(3, 1)).is_err());
    }

    #[test]
    fn shadow_of_suspension_contains_base() {
        let f = cycle(5).unwrap();
        let sh = shadow(&suspension(&f)).unwrap();
        for e in f.edges() {
            assert!(sh.has_edge(e));
        }
    }

    #[test]
    fn covers() {
        assert_eq!(covering_number(&complete(3, 2)).unwrap(), 2);
        assert_eq!(covering_number(&k23()).unwrap(), 2);
        assert_eq!(covering_number(&Hypergraph::new(4, 4, [[0u32, 1, 2, 3]]).unwrap()).unwrap(), 1);
        assert_eq!(covering_number(&Hypergraph::empty(4, 2)).unwrap(), 0);
        assert_eq!(i_independent_cover(&complete(3, 2), 1).unwrap(), None);
        assert_eq!(i_independent_cover(&k23(), 1).unwrap(), Some(2));
        assert!(i_independent_cover(&complete(3, 2), 2).is_err());
        assert!(i_independent_cover(&complete(3, 2), 0).is_err());
    }

    #[test]
    fn b_construction_covers() {
        // the first m vertices cover B(n, m, r, i) with at most i hits per edge
        let b = b_construction(7, 3, 3, 2).unwrap();
        assert!(covering_number(&b).unwrap() <= 3);
        assert!(i_independent_cover(&b, 2).unwrap().unwrap() <= 3);
    }

    #[test]
    fn induced() {
        let c4 = cycle(4).unwrap();
        let subs = induced_subgraphs(&c4, 3);
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|g| g.edge_count() == 2));
        assert_eq!(induced_subgraph(&c4, &[0, 2]).unwrap().edge_count(), 0);
    }

    #[test]
    fn dependency_degree() {
        assert_eq!(edge_dependency_degree(&complete(3, 2)), 2);
        assert_eq!(edge_dependency_degree(&complete(2, 2)), 0);
        assert_eq!(edge_dependency_degree(&cycle(5).unwrap()), 2);
    }
}
