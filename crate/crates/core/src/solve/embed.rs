//! Subgraph (non-induced) embedding search.

use std::ops::ControlFlow;

use crate::bits::BitSet;
use crate::hypergraph::Hypergraph;

/// Restrictions on where pattern vertices may land.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Per pattern vertex, the host vertices it may map to.
    pub allowed: Option<Vec<BitSet>>,
    /// Host vertices no pattern vertex may use.
    pub blocked: Option<BitSet>,
    /// Pattern vertex forced onto a host vertex.
    pub fixed: Option<(usize, usize)>,
}

/// Host-side data reused across many searches in the same host.
pub struct HostIndex<'a> {
    host: &'a Hypergraph,
    co: Vec<BitSet>,
    all: BitSet,
}

impl<'a> HostIndex<'a> {
    pub fn new(host: &'a Hypergraph) -> Self {
        let co = (0..host.n()).map(|v| host.co_neighbours(v)).collect();
        HostIndex {
            host,
            co,
            all: BitSet::full(host.n()),
        }
    }

    pub fn host(&self) -> &Hypergraph {
        self.host
    }
}

struct Plan {
    order: Vec<usize>,
    /// For each position, earlier-placed co-neighbours (pattern labels).
    back: Vec<Vec<usize>>,
    /// For each position, pattern edges completed by placing it.
    closing: Vec<Vec<usize>>,
}

fn plan(pattern: &Hypergraph, start: Option<usize>) -> Plan {
    let p = pattern.n();
    let co: Vec<BitSet> = (0..p).map(|v| pattern.co_neighbours(v)).collect();
    let mut placed = vec![false; p];
    let mut order = Vec::with_capacity(p);
    let mut links = vec![0usize; p];
    for step in 0..p {
        let next = match (step, start) {
            (0, Some(s)) => s,
            _ => (0..p)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex remains"),
        };
        placed[next] = true;
        order.push(next);
        for u in co[next].iter() {
            links[u] += 1;
        }
    }
    let mut pos = vec![0usize; p];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| co[v].iter().filter(|&u| pos[u] < i).collect())
        .collect();
    let mut closing = vec![Vec::new(); p];
    if pattern.r() != 2 {
        for (idx, e) in pattern.edges().enumerate() {
            let last = e.iter().map(|&v| pos[v as usize]).max().expect("non-empty edge");
            closing[last].push(idx);
        }
    }
    Plan {
        order,
        back,
        closing,
    }
}

struct Run<'a, 'b, F> {
    index: &'a HostIndex<'b>,
    pattern: &'a Hypergraph,
    plan: Plan,
    constraints: &'a Constraints,
    map: Vec<u32>,
    used: BitSet,
    scratch: Vec<BitSet>,
    visit: F,
}

impl<F: FnMut(&[u32]) -> ControlFlow<()>> Run<'_, '_, F> {
    fn go(&mut self, depth: usize) -> ControlFlow<()> {
        if depth == self.plan.order.len() {
            return (self.visit)(&self.map);
        }
        let host = self.index.host;
        let pv = self.plan.order[depth];
        let mut cand = std::mem::take(&mut self.scratch[depth]);
        match self.constraints.fixed {
            Some((fp, fh)) if fp == pv => {
                cand.clear();
                cand.insert(fh);
            }
            _ => {
                let back = &self.plan.back[depth];
                if back.is_empty() {
                    cand.copy_from(&self.index.all);
                } else {
                    cand.copy_from(&self.index.co[self.map[back[0]] as usize]);
                    for &b in &back[1..] {
                        cand.intersect_with(&self.index.co[self.map[b] as usize]);
                    }
                }
            }
        }
        cand.difference_with(&self.used);
        if let Some(blocked) = &self.constraints.blocked {
            cand.difference_with(blocked);
        }
        if let Some(allowed) = &self.constraints.allowed {
            cand.intersect_with(&allowed[pv]);
        }
        let need = self.pattern.degree(pv);
        let mut result = ControlFlow::Continue(());
        let mut image = Vec::with_capacity(self.pattern.r());
        'cands: for hv in cand.iter() {
            if host.degree(hv) < need {
                continue;
            }
            self.map[pv] = hv as u32;
            for &ei in &self.plan.closing[depth] {
                image.clear();
                image.extend(self.pattern.edge(ei).iter().map(|&v| self.map[v as usize]));
                image.sort_unstable();
                if !host.has_edge(&image) {
                    continue 'cands;
                }
            }
            self.used.insert(hv);
            result = self.go(depth + 1);
            self.used.remove(hv);
            if result.is_break() {
                break;
            }
        }
        self.map[pv] = u32::MAX;
        self.scratch[depth] = cand;
        result
    }
}

/// Calls `visit` on every injective homomorphism of `pattern` into the
/// indexed host (as a map pattern vertex -> host vertex) until it breaks.
/// Enumeration order is deterministic.
pub fn for_each_embedding(
    index: &HostIndex<'_>,
    pattern: &Hypergraph,
    constraints: &Constraints,
    visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) {
    let host = index.host;
    if pattern.r() != host.r() || pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return;
    }
    let start = constraints.fixed.map(|(p, _)| p);
    let plan = plan(pattern, start);
    let mut run = Run {
        index,
        pattern,
        scratch: vec![BitSet::new(host.n()); pattern.n()],
        plan,
        constraints,
        map: vec![u32::MAX; pattern.n()],
        used: BitSet::new(host.n()),
        visit,
    };
    let _ = run.go(0);
}

/// The first embedding in enumeration order, if any.
pub fn find_embedding_indexed(
    index: &HostIndex<'_>,
    pattern: &Hypergraph,
    constraints: &Constraints,
) -> Option<Vec<u32>> {
    let mut found = None;
    for_each_embedding(index, pattern, constraints, |m| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found
}

pub fn find_embedding(host: &Hypergraph, pattern: &Hypergraph) -> Option<Vec<u32>> {
    find_embedding_indexed(&HostIndex::new(host), pattern, &Constraints::default())
}

/// True when `map` is injective and sends every pattern edge to a host edge.
pub fn is_embedding(host: &Hypergraph, pattern: &Hypergraph, map: &[u32]) -> bool {
    if map.len() != pattern.n() || pattern.r() != host.r() {
        return false;
    }
    let mut seen = map.to_vec();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) || seen.last().is_some_and(|&v| v as usize >= host.n()) {
        return false;
    }
    pattern.edges().all(|e| {
        let mut img: Vec<u32> = e.iter().map(|&v| map[v as usize]).collect();
        img.sort_unstable();
        host.has_edge(&img)
    })
}
