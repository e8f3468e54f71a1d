//! Bitmask hosts and the incremental copy search shared by the engines.

use std::ops::ControlFlow;

use hyperex_core::bits::mask_bits;
use hyperex_core::Hypergraph;

use crate::error::{Error, Result};

/// Largest host order the engines accept.
pub const MAX_ORDER: usize = 32;
const MAX_R: usize = 8;

const BINOM: [[u64; MAX_R + 1]; MAX_ORDER + 1] = {
    let mut t = [[0u64; MAX_R + 1]; MAX_ORDER + 1];
    let mut n = 0;
    while n <= MAX_ORDER {
        t[n][0] = 1;
        let mut k = 1;
        while k <= MAX_R {
            t[n][k] = if n == 0 { 0 } else { t[n - 1][k - 1] + t[n - 1][k] };
            k += 1;
        }
        n += 1;
    }
    t
};

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Colex rank of an r-set given as a mask.
#[inline]
fn rank(mut mask: u64) -> usize {
    let mut k = 1;
    let mut acc = 0u64;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        acc += BINOM[v][k];
        k += 1;
        mask &= mask - 1;
    }
    acc as usize
}

pub(crate) fn binom(n: usize, k: usize) -> u64 {
    if k > MAX_R {
        return hyperex_core::combinatorics::binom_u128(n as u64, k as u64) as u64;
    }
    BINOM[n][k]
}

/// A mutable r-graph on at most [`MAX_ORDER`] vertices with edges as masks.
/// Edges are removed in stack order.
#[derive(Clone, Debug)]
pub struct MaskGraph {
    n: usize,
    r: usize,
    edges: Vec<u64>,
    co: Vec<u64>,
    degrees: Vec<u32>,
    present: Vec<u64>,
}

impl MaskGraph {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n > MAX_ORDER || r == 0 || r > MAX_R {
            return Err(Error::TooLarge(format!(
                "hosts need n <= {MAX_ORDER} and 1 <= r <= {MAX_R}, got n = {n}, r = {r}"
            )));
        }
        let words = if r == 2 { 0 } else { (binom(n, r) as usize).div_ceil(64) };
        Ok(MaskGraph {
            n,
            r,
            edges: Vec::new(),
            co: vec![0; n],
            degrees: vec![0; n],
            present: vec![0; words],
        })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        Self::from_hypergraph_with(h, h.n())
    }

    /// `h` followed by isolated vertices up to order `n`.
    pub fn from_hypergraph_with(h: &Hypergraph, n: usize) -> Result<Self> {
        let mut g = MaskGraph::new(n.max(h.n()), h.r())?;
        for m in h.edge_masks()? {
            g.push(m);
        }
        Ok(g)
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_masks(self.n, self.r, &self.edges).expect("mask graph edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.degrees[v]
    }

    #[inline]
    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    #[inline]
    pub fn has(&self, mask: u64) -> bool {
        if self.r == 2 {
            let a = mask.trailing_zeros() as usize;
            self.co[a] & (mask & !bit(a)) != 0
        } else {
            let i = rank(mask);
            self.present[i / 64] >> (i % 64) & 1 == 1
        }
    }

    /// Adds an edge that is not yet present.
    pub fn push(&mut self, mask: u64) {
        debug_assert_eq!(mask.count_ones() as usize, self.r);
        debug_assert!(!self.has(mask));
        for v in mask_bits(mask) {
            self.co[v] |= mask & !bit(v);
            self.degrees[v] += 1;
        }
        if self.r != 2 {
            let i = rank(mask);
            self.present[i / 64] |= 1 << (i % 64);
        }
        self.edges.push(mask);
    }

    /// Removes the most recently added edge.
    pub fn pop(&mut self) -> Option<u64> {
        let mask = self.edges.pop()?;
        for v in mask_bits(mask) {
            self.degrees[v] -= 1;
        }
        if self.r == 2 {
            for v in mask_bits(mask) {
                self.co[v] &= !(mask & !bit(v));
            }
        } else {
            let i = rank(mask);
            self.present[i / 64] &= !(1 << (i % 64));
            for v in mask_bits(mask) {
                self.co[v] = self.edges.iter().filter(|&&e| e & bit(v) != 0).fold(0, |a, &e| a | e) & !bit(v);
            }
        }
        Some(mask)
    }
}

struct Plan {
    /// Pattern vertices in placement order; the first `seeded` come from a seed.
    order: Vec<usize>,
    seeded: usize,
    back: Vec<Vec<usize>>,
    closing: Vec<Vec<u64>>,
}

/// A small pattern prepared for repeated copy searches.
#[derive(Debug)]
pub struct CompiledPattern {
    p: usize,
    r: usize,
    edges: Vec<u64>,
    degrees: Vec<u32>,
    co: Vec<u64>,
}

impl CompiledPattern {
    pub fn new(f: &Hypergraph) -> Result<Self> {
        if f.n() > MAX_ORDER {
            return Err(Error::TooLarge(format!("pattern on {} vertices", f.n())));
        }
        if f.edge_count() == 0 {
            return Err(Error::InvalidParameter("forbidden patterns need at least one edge".into()));
        }
        let edges = f.edge_masks()?;
        let mut co = vec![0u64; f.n()];
        for &e in &edges {
            for v in mask_bits(e) {
                co[v] |= e & !bit(v);
            }
        }
        Ok(CompiledPattern {
            p: f.n(),
            r: f.r(),
            degrees: (0..f.n()).map(|v| f.degree(v) as u32).collect(),
            edges,
            co,
        })
    }

    pub fn order(&self) -> usize {
        self.p
    }

    /// Whether some pattern vertex lies in no edge.
    pub fn has_isolated(&self) -> bool {
        self.degrees.contains(&0)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn plan(&self, seed: &[usize]) -> Plan {
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(self.p);
        for &s in seed {
            order.push(s);
            placed |= bit(s);
        }
        while order.len() < self.p {
            let next = (0..self.p)
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| ((self.co[v] & placed).count_ones(), self.degrees[v], std::cmp::Reverse(v)))
                .expect("unplaced vertex remains");
            order.push(next);
            placed |= bit(next);
        }
        let mut pos = vec![0usize; self.p];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| mask_bits(self.co[v]).filter(|&u| pos[u] < i).collect())
            .collect();
        let mut closing = vec![Vec::new(); self.p];
        for &e in &self.edges {
            let last = mask_bits(e).map(|v| pos[v]).max().expect("edges are non-empty");
            if last >= seed.len() {
                closing[last].push(e);
            }
        }
        Plan {
            order,
            seeded: seed.len(),
            back,
            closing,
        }
    }
}

struct Run<'a, F> {
    host: &'a MaskGraph,
    pattern: &'a CompiledPattern,
    plan: &'a Plan,
    allowed: Option<&'a [u64]>,
    map: Vec<u32>,
    visit: F,
}

impl<F: FnMut(&[u32]) -> ControlFlow<()>> Run<'_, F> {
    fn image(&self, e: u64) -> u64 {
        mask_bits(e).fold(0, |m, v| m | bit(self.map[v] as usize))
    }

    fn go(&mut self, depth: usize, used: u64) -> ControlFlow<()> {
        if depth == self.plan.order.len() {
            return (self.visit)(&self.map);
        }
        let pv = self.plan.order[depth];
        let mut cand = self.host.all() & !used;
        for &b in &self.plan.back[depth] {
            cand &= self.host.co[self.map[b] as usize];
        }
        if let Some(allowed) = self.allowed {
            cand &= allowed[pv];
        }
        let need = self.pattern.degrees[pv];
        while cand != 0 {
            let hv = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host.degrees[hv] < need {
                continue;
            }
            self.map[pv] = hv as u32;
            if self.plan.closing[depth].iter().all(|&e| self.host.has(self.image(e))) {
                self.go(depth + 1, used | bit(hv))?;
            }
        }
        self.map[pv] = u32::MAX;
        ControlFlow::Continue(())
    }
}

/// Searches copies (pattern vertex -> host vertex maps) of `pattern` in
/// `host`, optionally restricting each pattern vertex to a host mask.
pub struct CopySearch<'a> {
    pattern: &'a CompiledPattern,
    allowed: Option<&'a [u64]>,
}

impl<'a> CopySearch<'a> {
    pub fn new(pattern: &'a CompiledPattern, allowed: Option<&'a [u64]>) -> Self {
        CopySearch { pattern, allowed }
    }

    fn fits(&self, pv: usize, hv: usize) -> bool {
        self.allowed.map_or(true, |a| a[pv] & bit(hv) != 0)
    }

    /// Every copy, in a deterministic order, until `visit` breaks.
    pub fn each(&self, host: &MaskGraph, visit: impl FnMut(&[u32]) -> ControlFlow<()>) -> ControlFlow<()> {
        if self.pattern.p > host.n || self.pattern.r != host.r || self.pattern.edges.len() > host.edges.len() {
            return ControlFlow::Continue(());
        }
        let plan = self.pattern.plan(&[]);
        let mut run = Run {
            host,
            pattern: self.pattern,
            plan: &plan,
            allowed: self.allowed,
            map: vec![u32::MAX; self.pattern.p],
            visit,
        };
        run.go(0, 0)
    }

    /// Every copy that uses the host edge `edge`, until `visit` breaks. A
    /// copy may be reported once per pattern edge mapped onto `edge`.
    pub fn each_through(
        &self,
        host: &MaskGraph,
        edge: u64,
        mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let pat = self.pattern;
        if pat.p > host.n || pat.r != host.r || pat.edges.len() > host.edges.len() {
            return ControlFlow::Continue(());
        }
        let targets: Vec<usize> = mask_bits(edge).collect();
        let r = targets.len();
        for &f in &pat.edges {
            let seed: Vec<usize> = mask_bits(f).collect();
            let plan = pat.plan(&seed);
            let mut perm: Vec<usize> = (0..r).collect();
            loop {
                let ok = (0..r).all(|i| {
                    let (pv, hv) = (seed[i], targets[perm[i]]);
                    self.fits(pv, hv) && host.degrees[hv] >= pat.degrees[pv]
                });
                if ok {
                    let mut map = vec![u32::MAX; pat.p];
                    for i in 0..r {
                        map[seed[i]] = targets[perm[i]] as u32;
                    }
                    let mut run = Run {
                        host,
                        pattern: pat,
                        plan: &plan,
                        allowed: self.allowed,
                        map,
                        visit: &mut visit,
                    };
                    run.go(plan.seeded, edge)?;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        ControlFlow::Continue(())
    }

    pub fn exists_through(&self, host: &MaskGraph, edge: u64) -> bool {
        self.each_through(host, edge, |_| ControlFlow::Break(())).is_break()
    }

    /// Vertex sets of all copies, sorted and deduplicated.
    pub fn vertex_sets(&self, host: &MaskGraph) -> Vec<u64> {
        let mut out = Vec::new();
        let _ = self.each(host, |m| {
            out.push(m.iter().fold(0u64, |a, &v| a | bit(v as usize)));
            ControlFlow::Continue(())
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Vertex sets of copies through `edge`, sorted and deduplicated.
    pub fn vertex_sets_through(&self, host: &MaskGraph, edge: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let _ = self.each_through(host, edge, |m| {
            out.push(m.iter().fold(0u64, |a, &v| a | bit(v as usize)));
            ControlFlow::Continue(())
        });
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
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

/// Whether `k` pairwise disjoint sets can be chosen from `sets`.
pub(crate) fn has_disjoint(sets: &[u64], k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if sets.len() < k {
        return false;
    }
    for (i, &s) in sets.iter().enumerate() {
        let rest: Vec<u64> = sets[i + 1..].iter().copied().filter(|&o| o & s == 0).collect();
        if has_disjoint(&rest, k - 1) {
            return true;
        }
    }
    false
}

/// Masks of all `(k)`-subsets of the vertices in `within`, in colex order.
pub(crate) fn subsets_of(within: u64, k: usize) -> Vec<u64> {
    let verts: Vec<usize> = mask_bits(within).collect();
    let mut out = Vec::new();
    hyperex_core::combinatorics::for_each_combination(verts.len(), k, |c| {
        out.push(c.iter().fold(0u64, |m, &i| m | bit(verts[i as usize])));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperex_core::construct::{complete, cycle};

    #[test]
    fn rank_is_a_bijection() {
        let sets = subsets_of((1 << 7) - 1, 3);
        let mut ranks: Vec<usize> = sets.iter().map(|&m| rank(m)).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..35).collect::<Vec<_>>());
    }

    #[test]
    fn push_pop_round_trip() {
        let mut g = MaskGraph::new(5, 3).unwrap();
        g.push(0b00111);
        g.push(0b01011);
        assert!(g.has(0b01011));
        assert_eq!(g.co[0], 0b01110);
        g.pop();
        assert!(!g.has(0b01011));
        assert_eq!(g.co[0], 0b00110);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn copies_through_an_edge() {
        let k4 = MaskGraph::from_hypergraph(&complete(4, 2)).unwrap();
        let k3 = CompiledPattern::new(&complete(3, 2)).unwrap();
        let s = CopySearch::new(&k3, None);
        assert_eq!(s.vertex_sets(&k4).len(), 4);
        assert_eq!(s.vertex_sets_through(&k4, 0b0011).len(), 2);
        let c5 = MaskGraph::from_hypergraph(&cycle(5).unwrap()).unwrap();
        assert!(!s.exists_through(&c5, 0b00011));
    }

    #[test]
    fn hypergraph_copies() {
        let k5 = MaskGraph::from_hypergraph(&complete(5, 3)).unwrap();
        let k4 = CompiledPattern::new(&complete(4, 3)).unwrap();
        let s = CopySearch::new(&k4, None);
        assert_eq!(s.vertex_sets(&k5).len(), 5);
        assert_eq!(s.vertex_sets_through(&k5, 0b00111).len(), 2);
    }

    #[test]
    fn disjoint_sets() {
        assert!(has_disjoint(&[0b0011, 0b0110, 0b1100], 2));
        assert!(!has_disjoint(&[0b0011, 0b0110, 0b0101], 2));
    }
}
