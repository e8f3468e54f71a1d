//! Canonical labelling by colour refinement and individualisation.
//!
//! Supports hypergraphs on at most 64 vertices. The certificate of a
//! hypergraph is the sorted list of edge masks under the canonical
//! labelling, so two hypergraphs are isomorphic exactly when their
//! certificates agree.

use crate::bits::mask_bits;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Isomorphism-invariant certificate of a (vertex-coloured) hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    pub n: usize,
    pub r: usize,
    pub colours: Vec<u32>,
    pub edges: Vec<u64>,
}

/// Canonical labelling result: the certificate and the relabelling
/// (old label -> canonical label) that produces it.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub certificate: Certificate,
    pub labelling: Vec<u32>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

struct Search {
    n: usize,
    /// Per vertex: masks of the other vertices of each incident edge.
    incident: Vec<Vec<u64>>,
    edges: Vec<u64>,
    first: Option<(Vec<u64>, Vec<u32>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<u32>, Vec<usize>)>,
    automorphisms: Vec<Vec<u32>>,
}

fn dense_rank<T: Ord + Clone>(keys: &[T]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys
        .iter()
        .map(|k| sorted.binary_search(k).expect("present") as u32)
        .collect();
    (ranks, sorted.len())
}

impl Search {
    fn refine(&self, colours: &mut Vec<u32>) {
        let (ranked, mut cells) = dense_rank(colours);
        *colours = ranked;
        loop {
            let sigs: Vec<Vec<u32>> = (0..self.n)
                .map(|v| {
                    let mut tuples: Vec<Vec<u32>> = self.incident[v]
                        .iter()
                        .map(|&m| {
                            let mut t: Vec<u32> = mask_bits(m).map(|u| colours[u]).collect();
                            t.sort_unstable();
                            t
                        })
                        .collect();
                    tuples.sort_unstable();
                    let mut sig = Vec::with_capacity(1 + tuples.len() * 2);
                    sig.push(colours[v]);
                    for t in tuples {
                        sig.extend(t);
                    }
                    sig
                })
                .collect();
            let (next, count) = dense_rank(&sigs);
            *colours = next;
            if count == cells || count == self.n {
                return;
            }
            cells = count;
        }
    }

    fn target_cell(colours: &[u32]) -> Option<Vec<usize>> {
        let k = colours.iter().copied().max().map_or(0, |c| c as usize + 1);
        let mut sizes = vec![0usize; k];
        for &c in colours {
            sizes[c as usize] += 1;
        }
        let (cell, _) = sizes
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 1)
            .min_by_key(|&(c, &s)| (s, c))?;
        Some(
            (0..colours.len())
                .filter(|&v| colours[v] as usize == cell)
                .collect(),
        )
    }

    fn relabelled(&self, perm: &[u32]) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .edges
            .iter()
            .map(|&m| mask_bits(m).fold(0u64, |acc, v| acc | (1u64 << perm[v])))
            .collect();
        out.sort_unstable();
        out
    }

    fn record_automorphism(&mut self, a: &[u32], b: &[u32]) {
        if self.automorphisms.len() >= MAX_STORED_AUTOMORPHISMS {
            return;
        }
        // v -> a(v) -> b^{-1}(a(v))
        let mut inv_b = vec![0u32; self.n];
        for (v, &p) in b.iter().enumerate() {
            inv_b[p as usize] = v as u32;
        }
        let gamma: Vec<u32> = a.iter().map(|&p| inv_b[p as usize]).collect();
        if gamma.iter().enumerate().all(|(v, &g)| v as u32 == g) {
            return;
        }
        self.automorphisms.push(gamma);
    }

    /// Returns the depth to resume at when a whole subtree is known to be
    /// equivalent to one already explored.
    fn leaf(&mut self, colours: &[u32], path: &[usize]) -> Option<usize> {
        let perm = colours.to_vec();
        let cert = self.relabelled(&perm);
        let divergence = |other: &[usize]| {
            path.iter()
                .zip(other)
                .position(|(a, b)| a != b)
                .unwrap_or(path.len())
        };
        if let Some((fc, fp, fpath)) = &self.first {
            if *fc == cert {
                let (fp, d) = (fp.clone(), divergence(fpath));
                self.record_automorphism(&perm, &fp);
                return Some(d);
            }
        } else {
            self.first = Some((cert.clone(), perm.clone(), path.to_vec()));
            self.best = Some((cert, perm, path.to_vec()));
            return None;
        }
        let (bc, bp, bpath) = self.best.as_ref().expect("set with first");
        match cert.cmp(bc) {
            std::cmp::Ordering::Equal => {
                let (bp, d) = (bp.clone(), divergence(bpath));
                self.record_automorphism(&perm, &bp);
                Some(d)
            }
            std::cmp::Ordering::Less => {
                self.best = Some((cert, perm, path.to_vec()));
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn orbit_representatives(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.automorphisms {
            if path.iter().all(|&v| g[v] as usize == v) {
                for (v, &w) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w as usize));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn explore(&mut self, colours: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        let Some(cell) = Self::target_cell(&colours) else {
            return self.leaf(&colours, path);
        };
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() {
                let orbit = self.orbit_representatives(path);
                if explored.iter().any(|&u| orbit[u] == orbit[w]) {
                    continue;
                }
            }
            let mut child: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(v, &c)| c * 2 + u32::from(v != w))
                .collect();
            self.refine(&mut child);
            path.push(w);
            let jump = self.explore(child, path);
            path.pop();
            explored.push(w);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical labelling of a vertex-coloured hypergraph. Colours only need
/// to be comparable; vertices are never mapped across colour classes and
/// lower colours receive lower canonical labels.
pub fn canonical_coloured(h: &Hypergraph, colours: &[u32]) -> Result<Canonical> {
    let n = h.n();
    if n > 64 {
        return Err(Error::TooLarge {
            what: "canonical labelling",
            n,
            limit: 64,
        });
    }
    assert_eq!(colours.len(), n, "one colour per vertex");
    let edges = h.edge_masks()?;
    let mut incident = vec![Vec::new(); n];
    for &m in &edges {
        for v in mask_bits(m) {
            incident[v].push(m & !(1u64 << v));
        }
    }
    let mut search = Search {
        n,
        incident,
        edges,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut start = colours.to_vec();
    search.refine(&mut start);
    search.explore(start, &mut Vec::new());
    let (cert, perm, _) = match search.best {
        Some(b) => b,
        None => (Vec::new(), Vec::new(), Vec::new()),
    };
    let mut sorted_colours = colours.to_vec();
    sorted_colours.sort_unstable();
    Ok(Canonical {
        certificate: Certificate {
            n,
            r: h.r(),
            colours: sorted_colours,
            edges: cert,
        },
        labelling: perm,
    })
}

pub fn canonical(h: &Hypergraph) -> Result<Canonical> {
    canonical_coloured(h, &vec![0; h.n()])
}

/// The isomorphic copy of `h` under its canonical labelling.
pub fn canonical_form(h: &Hypergraph) -> Result<Hypergraph> {
    let c = canonical(h)?;
    Ok(h.relabel(&c.labelling))
}

pub fn certificate(h: &Hypergraph) -> Result<Certificate> {
    Ok(canonical(h)?.certificate)
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n() || a.r() != b.r() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.degrees().iter().copied().max() != b.degrees().iter().copied().max() {
        return Ok(false);
    }
    Ok(certificate(a)? == certificate(b)?)
}
