//! The immutable r-uniform hypergraph.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::BitSet;
use crate::error::{invalid, Error, Result};

/// An r-uniform hypergraph on the vertex set `0..n`.
///
/// Edges are strictly increasing r-tuples stored flat and sorted
/// lexicographically. Graphs (`r == 2`) additionally carry one adjacency
/// bitset per vertex; every other uniformity carries one incidence bitset
/// per vertex, indexed by edge position.
#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<u32>,
    degrees: Vec<u32>,
    adjacency: Vec<BitSet>,
    incidence: Vec<BitSet>,
}

impl Hypergraph {
    /// Builds a hypergraph, validating every edge. Vertices inside an edge
    /// may be given in any order; duplicate edges are rejected.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if r == 0 {
            return Err(invalid("uniformity must be at least 1"));
        }
        let mut list: Vec<Vec<u32>> = Vec::new();
        for e in edges {
            let mut e = e.as_ref().to_vec();
            if e.len() != r {
                return Err(Error::InvalidEdge {
                    reason: format!("expected {r} vertices"),
                    edge: e,
                });
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    edge: e,
                    reason: "repeated vertex".into(),
                });
            }
            if e.last().is_some_and(|&v| v as usize >= n) {
                return Err(Error::InvalidEdge {
                    edge: e,
                    reason: format!("vertex out of range 0..{n}"),
                });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                edge: w[0].clone(),
                reason: "duplicate edge".into(),
            });
        }
        Ok(Self::from_sorted(n, r, list.concat()))
    }

    /// Builds from edges the caller guarantees are valid and distinct.
    pub(crate) fn from_edge_lists(n: usize, r: usize, mut list: Vec<Vec<u32>>) -> Self {
        for e in list.iter_mut() {
            e.sort_unstable();
        }
        list.sort_unstable();
        debug_assert!(list.windows(2).all(|w| w[0] != w[1]));
        Self::from_sorted(n, r, list.concat())
    }

    fn from_sorted(n: usize, r: usize, edges: Vec<u32>) -> Self {
        let m = if r == 0 { 0 } else { edges.len() / r };
        let mut degrees = vec![0u32; n];
        let mut adjacency = Vec::new();
        let mut incidence = Vec::new();
        if r == 2 {
            adjacency = vec![BitSet::new(n); n];
        } else {
            incidence = vec![BitSet::new(m); n];
        }
        for (idx, e) in edges.chunks_exact(r).enumerate() {
            for &v in e {
                degrees[v as usize] += 1;
            }
            if r == 2 {
                adjacency[e[0] as usize].insert(e[1] as usize);
                adjacency[e[1] as usize].insert(e[0] as usize);
            } else {
                for &v in e {
                    incidence[v as usize].insert(idx);
                }
            }
        }
        Hypergraph {
            n,
            r,
            edges,
            degrees,
            adjacency,
            incidence,
        }
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize, r: usize) -> Self {
        assert!(r >= 1, "uniformity must be at least 1");
        Self::from_sorted(n, r, Vec::new())
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
        self.edges.len() / self.r
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> std::slice::ChunksExact<'_, u32> {
        self.edges.chunks_exact(self.r)
    }

    pub fn edge(&self, idx: usize) -> &[u32] {
        &self.edges[idx * self.r..(idx + 1) * self.r]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Minimum degree; zero for the vertexless hypergraph.
    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0) as usize
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0) as usize
    }

    /// Neighbour bitset of `v` (graphs only).
    pub fn adjacency(&self, v: usize) -> Option<&BitSet> {
        self.adjacency.get(v)
    }

    /// Edge-index bitset of the edges through `v` (non-graph uniformities only).
    pub fn incidence(&self, v: usize) -> Option<&BitSet> {
        self.incidence.get(v)
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        if self.r == 2 {
            self.edges()
                .enumerate()
                .filter(|(_, e)| e[0] as usize == v || e[1] as usize == v)
                .map(|(i, _)| i)
                .collect()
        } else {
            self.incidence[v].iter().collect()
        }
    }

    /// Membership test; `edge` must be sorted.
    pub fn has_edge(&self, edge: &[u32]) -> bool {
        if edge.len() != self.r {
            return false;
        }
        if self.r == 2 {
            let (a, b) = (edge[0] as usize, edge[1] as usize);
            return a < self.n && self.adjacency[a].contains(b);
        }
        let m = self.edge_count();
        let (mut lo, mut hi) = (0usize, m);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(edge) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Vertices sharing at least one edge with `v`.
    pub fn co_neighbours(&self, v: usize) -> BitSet {
        if self.r == 2 {
            return self.adjacency[v].clone();
        }
        let mut out = BitSet::new(self.n);
        for idx in self.incidence[v].iter() {
            for &u in self.edge(idx) {
                out.insert(u as usize);
            }
        }
        out.remove(v);
        out
    }

    /// Edges as vertex bitmasks; requires `n <= 64`.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooLarge {
                what: "edge masks",
                n: self.n,
                limit: 64,
            });
        }
        Ok(self
            .edges()
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect())
    }

    /// Builds from vertex bitmasks of popcount `r`.
    pub fn from_masks(n: usize, r: usize, masks: &[u64]) -> Result<Self> {
        Self::new(
            n,
            r,
            masks
                .iter()
                .map(|&m| crate::bits::mask_bits(m).map(|v| v as u32).collect::<Vec<_>>()),
        )
    }

    /// The image under `perm` (old label -> new label), which must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[u32]) -> Self {
        assert_eq!(perm.len(), self.n);
        let list = self
            .edges()
            .map(|e| e.iter().map(|&v| perm[v as usize]).collect())
            .collect();
        Self::from_edge_lists(self.n, self.r, list)
    }

    /// The same edges on `extra` additional isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Self {
        Self::from_sorted(self.n + extra, self.r, self.edges.clone())
    }

    /// The hypergraph obtained by adding `new_edges` (which must be absent).
    pub fn with_edges<E: AsRef<[u32]>>(&self, new_edges: &[E]) -> Result<Self> {
        let mut list: Vec<Vec<u32>> = self.edges().map(|e| e.to_vec()).collect();
        list.extend(new_edges.iter().map(|e| e.as_ref().to_vec()));
        Self::new(self.n, self.r, list)
    }

    /// Number of vertices with positive degree.
    pub fn non_isolated(&self) -> usize {
        self.degrees.iter().filter(|&&d| d > 0).count()
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hash for Hypergraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.r.hash(state);
        self.edges.hash(state);
    }
}

impl PartialOrd for Hypergraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hypergraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.r, &self.edges).cmp(&(other.n, other.r, &other.edges))
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, r={}, edges=[", self.n, self.r)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::new(3, 2, [[0u32, 3]]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, [[1u32, 1]]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, [[0u32, 1], [1, 0]]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(Hypergraph::new(3, 0, Vec::<Vec<u32>>::new()).is_err());
    }

    #[test]
    fn edges_sorted_and_indexed() {
        let h = Hypergraph::new(5, 3, [[4u32, 0, 2], [0, 1, 2], [1, 3, 4]]).unwrap();
        let edges: Vec<_> = h.edges().map(|e| e.to_vec()).collect();
        assert_eq!(edges, vec![vec![0, 1, 2], vec![0, 2, 4], vec![1, 3, 4]]);
        assert!(h.has_edge(&[0, 2, 4]));
        assert!(!h.has_edge(&[0, 1, 4]));
        assert_eq!(h.degree(0), 2);
        assert_eq!(h.incident_edges(4), vec![1, 2]);
        let co: Vec<_> = h.co_neighbours(3).iter().collect();
        assert_eq!(co, vec![1, 4]);
    }

    #[test]
    fn graph_adjacency() {
        let h = Hypergraph::new(4, 2, [[0u32, 1], [1, 2]]).unwrap();
        assert!(h.adjacency(1).unwrap().contains(2));
        assert!(h.has_edge(&[0, 1]));
        assert!(!h.has_edge(&[0, 2]));
        assert_eq!(h.max_degree(), 2);
        assert_eq!(h.min_degree(), 0);
    }
}
