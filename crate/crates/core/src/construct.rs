//! Generators and combinators.
//!
//! Every construction fixes its labelling so generated objects are
//! reproducible: joins and unions place the left operand first, Turán parts
//! are consecutive blocks, and suspensions put the apex last.

use crate::combinatorics::for_each_combination;
use crate::error::{invalid, same_r, Result};
use crate::hypergraph::Hypergraph;

/// The complete r-graph on `n` vertices.
pub fn complete(n: usize, r: usize) -> Hypergraph {
    assert!(r >= 1, "uniformity must be at least 1");
    let mut list = Vec::new();
    for_each_combination(n, r, |c| list.push(c.to_vec()));
    Hypergraph::from_edge_lists(n, r, list)
}

/// Part sizes of the balanced `parts`-partition of `n`, larger parts first.
pub fn balanced_parts(n: usize, parts: usize) -> Vec<usize> {
    (0..parts)
        .map(|i| n / parts + usize::from(i < n % parts))
        .collect()
}

/// The balanced complete `ell`-partite graph `T(n, ell)`.
pub fn turan_graph(n: usize, ell: usize) -> Result<Hypergraph> {
    if ell == 0 {
        if n == 0 {
            return Ok(Hypergraph::empty(0, 2));
        }
        return Err(invalid("turan_graph needs at least one part"));
    }
    let sizes = balanced_parts(n, ell);
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(i).take(s));
    }
    let mut list = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if part[a] != part[b] {
                list.push(vec![a as u32, b as u32]);
            }
        }
    }
    Ok(Hypergraph::from_edge_lists(n, 2, list))
}

/// The join: disjoint union plus every r-set meeting both vertex sets.
pub fn join(g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
    same_r(g.r(), h.r())?;
    let r = g.r();
    let (ng, nh) = (g.n(), h.n());
    let total = ng + nh;
    let mut list: Vec<Vec<u32>> = g.edges().map(|e| e.to_vec()).collect();
    list.extend(
        h.edges()
            .map(|e| e.iter().map(|&v| v + ng as u32).collect::<Vec<_>>()),
    );
    for_each_combination(total, r, |c| {
        let in_g = c.iter().any(|&v| (v as usize) < ng);
        let in_h = c.iter().any(|&v| (v as usize) >= ng);
        if in_g && in_h {
            list.push(c.to_vec());
        }
    });
    Ok(Hypergraph::from_edge_lists(total, r, list))
}

/// Vertex-disjoint union, `g` first.
pub fn disjoint_union(g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
    same_r(g.r(), h.r())?;
    let ng = g.n() as u32;
    let mut list: Vec<Vec<u32>> = g.edges().map(|e| e.to_vec()).collect();
    list.extend(h.edges().map(|e| e.iter().map(|&v| v + ng).collect::<Vec<_>>()));
    Ok(Hypergraph::from_edge_lists(g.n() + h.n(), g.r(), list))
}

/// `k` vertex-disjoint copies of `f`.
pub fn disjoint_copies(f: &Hypergraph, k: usize) -> Hypergraph {
    let mut acc = Hypergraph::empty(0, f.r());
    for _ in 0..k {
        acc = disjoint_union(&acc, f).expect("same uniformity");
    }
    acc
}

/// Adds one apex vertex (labelled `v(F)`) to every edge.
pub fn suspension(f: &Hypergraph) -> Hypergraph {
    let apex = f.n() as u32;
    let list = f
        .edges()
        .map(|e| {
            let mut e = e.to_vec();
            e.push(apex);
            e
        })
        .collect();
    Hypergraph::from_edge_lists(f.n() + 1, f.r() + 1, list)
}

/// The generalized triangle: edges `{1..r-1, r}`, `{1..r-1, r+1}`,
/// `{r, r+1, ..., 2r-1}`, shifted to 0-based labels.
pub fn generalized_triangle(r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(invalid("generalized triangle needs r >= 2"));
    }
    let core: Vec<u32> = (0..r as u32 - 1).collect();
    let mut a = core.clone();
    a.push(r as u32 - 1);
    let mut b = core;
    b.push(r as u32);
    let c: Vec<u32> = (r as u32 - 1..2 * r as u32 - 1).collect();
    Ok(Hypergraph::from_edge_lists(2 * r - 1, r, vec![a, b, c]))
}

/// All r-sets of `[n]` meeting `[m]` in between 1 and `i` vertices.
pub fn b_construction(n: usize, m: usize, r: usize, i: usize) -> Result<Hypergraph> {
    if m > n {
        return Err(invalid(format!("m = {m} exceeds n = {n}")));
    }
    if i == 0 || i > r {
        return Err(invalid(format!("i = {i} must lie in [1, {r}]")));
    }
    let mut list = Vec::new();
    for_each_combination(n, r, |c| {
        let hit = c.iter().filter(|&&v| (v as usize) < m).count();
        if (1..=i).contains(&hit) {
            list.push(c.to_vec());
        }
    });
    Ok(Hypergraph::from_edge_lists(n, r, list))
}

/// The path with `k` vertices (`k - 1` edges).
pub fn path(k: usize) -> Hypergraph {
    let list = (1..k).map(|i| vec![i as u32 - 1, i as u32]).collect();
    Hypergraph::from_edge_lists(k, 2, list)
}

/// The cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(invalid("cycles need at least 3 vertices"));
    }
    let list = (0..k)
        .map(|i| vec![i as u32, ((i + 1) % k) as u32])
        .collect();
    Ok(Hypergraph::from_edge_lists(k, 2, list))
}

/// The star `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Hypergraph {
    let list = (1..=k).map(|i| vec![0, i as u32]).collect();
    Hypergraph::from_edge_lists(k + 1, 2, list)
}
