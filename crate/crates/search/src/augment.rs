//! Vertex-by-vertex extension with isomorph rejection.
//!
//! Level `k` holds one representative of every class of `k`-vertex hosts
//! with the property and at least `L_k` edges. A host at level `k` minus a
//! minimum-degree vertex keeps at least `L_k - floor(r L_k / k)` edges, so
//! with `L_{k-1}` set to that value every level-`k` host arises from some
//! level-`(k-1)` host by adding a vertex of minimum degree.

use std::collections::BTreeMap;

use hyperex_core::canon::{canonical, Certificate};
use hyperex_core::Hypergraph;
use rayon::prelude::*;

use crate::mask::{subsets_of, MaskGraph};
use crate::outcome::Meter;
use crate::property::Property;

/// `L_0, ..., L_n` for a target of `target` edges on `n` vertices.
pub(crate) fn thresholds(n: usize, r: usize, target: u64) -> Vec<u64> {
    let mut l = vec![0u64; n + 1];
    l[n] = target;
    for k in (1..=n).rev() {
        l[k - 1] = if k >= r {
            l[k].saturating_sub(r as u64 * l[k] / k as u64)
        } else {
            0
        };
    }
    l
}

struct Extender<'a, P: ?Sized> {
    prop: &'a P,
    meter: &'a Meter,
    graph: MaskGraph,
    cands: Vec<u64>,
    suffix: Vec<Vec<u32>>,
    need: u64,
    old: usize,
    out: Vec<(Certificate, Hypergraph)>,
}

impl<P: Property + ?Sized> Extender<'_, P> {
    fn min_reachable(&self, i: usize) -> u32 {
        (0..self.old).map(|u| self.graph.degree(u) + self.suffix[i][u]).min().unwrap_or(u32::MAX)
    }

    fn go(&mut self, i: usize, deg: u32) {
        if !self.meter.tick() {
            return;
        }
        if (deg as u64) + ((self.cands.len() - i) as u64) < self.need {
            return;
        }
        // the new vertex must end with minimum degree
        if deg > self.min_reachable(i) {
            return;
        }
        if i == self.cands.len() {
            let h = self.graph.to_hypergraph();
            let c = canonical(&h).expect("levels stay within canonical limits");
            let form = h.relabel(&c.labelling);
            self.out.push((c.certificate, form));
            return;
        }
        let e = self.cands[i];
        self.graph.push(e);
        if self.prop.admits_edge(&self.graph, e) {
            self.go(i + 1, deg + 1);
        }
        self.graph.pop();
        self.go(i + 1, deg);
    }
}

fn extend_one<P: Property + ?Sized>(prop: &P, g: &Hypergraph, threshold: u64, meter: &Meter) -> Vec<(Certificate, Hypergraph)> {
    let old = g.n();
    let r = g.r();
    // a copy avoiding every new edge lives in `g` plus an isolated vertex
    if prop.growth_sensitive() && !prop.admits(&g.with_isolated(1)).unwrap_or(false) {
        return Vec::new();
    }
    let graph = MaskGraph::from_hypergraph_with(g, old + 1).expect("level hosts fit in masks");
    let v = 1u64 << old;
    let cands: Vec<u64> = subsets_of(v - 1, r - 1).into_iter().map(|s| s | v).collect();
    let mut suffix = vec![vec![0u32; old]; cands.len() + 1];
    for i in (0..cands.len()).rev() {
        suffix[i] = suffix[i + 1].clone();
        for u in 0..old {
            if cands[i] >> u & 1 == 1 {
                suffix[i][u] += 1;
            }
        }
    }
    let mut ext = Extender {
        prop,
        meter,
        graph,
        cands,
        suffix,
        need: threshold.saturating_sub(g.edge_count() as u64),
        old,
        out: Vec::new(),
    };
    ext.go(0, 0);
    ext.out
}

/// Representatives, sorted by certificate, of every class of `n`-vertex
/// hosts with the property and at least `l[n]` edges. `None` when the
/// budget runs out.
pub(crate) fn level<P: Property + ?Sized>(prop: &P, n: usize, l: &[u64], meter: &Meter) -> Option<Vec<Hypergraph>> {
    let r = prop.r();
    let mut current = vec![Hypergraph::empty(n.min(1), r)];
    for k in 2..=n {
        let parts: Vec<Vec<(Certificate, Hypergraph)>> =
            current.par_iter().map(|g| extend_one(prop, g, l[k], meter)).collect();
        if meter.stopped() {
            return None;
        }
        let mut merged = BTreeMap::new();
        for (c, h) in parts.into_iter().flatten() {
            merged.entry(c).or_insert(h);
        }
        current = merged.into_values().collect();
        if current.is_empty() {
            break;
        }
    }
    if meter.stopped() {
        return None;
    }
    Some(current.into_iter().filter(|h| h.edge_count() as u64 >= l[n]).collect())
}

/// The densest host above `lower` edges, trying targets from `upper` down.
/// `Some(None)` when nothing beats `lower`; `None` when the budget runs out.
pub(crate) fn maximise<P: Property + ?Sized>(
    prop: &P,
    n: usize,
    lower: u64,
    upper: u64,
    meter: &Meter,
) -> Option<Option<Hypergraph>> {
    let mut target = upper;
    while target > lower {
        let found = level(prop, n, &thresholds(n, prop.r(), target), meter)?;
        let best = found.iter().map(Hypergraph::edge_count).max();
        if let Some(best) = best {
            return Some(found.into_iter().find(|h| h.edge_count() == best));
        }
        target -= 1;
    }
    Some(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::Budget;
    use crate::property::Anything;

    #[test]
    fn threshold_chain() {
        // 20 edges on 9 vertices: 20 - 4 = 16, 16 - 4 = 12, 12 - 3 = 9, ...
        assert_eq!(thresholds(9, 2, 20), vec![0, 0, 1, 2, 4, 6, 9, 12, 16, 20]);
        assert_eq!(thresholds(3, 3, 1), vec![0, 0, 0, 1]);
    }

    #[test]
    fn graph_classes() {
        let meter = Meter::new(Budget::unlimited());
        let counts: Vec<usize> = (1..=6)
            .map(|n| level(&Anything { r: 2 }, n, &vec![0; n + 1], &meter).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }
}
