//! Exact F-matching numbers and (t+1)F-freeness.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::embed::{for_each_embedding, is_embedding, Constraints, HostIndex};
use crate::bits::BitSet;
use crate::error::{invalid, same_r, Result};
use crate::hypergraph::Hypergraph;
use crate::pattern::PatternFamily;

/// Vertex-disjoint copies of a pattern, each given as its vertex map
/// (pattern vertex -> host vertex).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub copies: Vec<Vec<u32>>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    /// Every map is an embedding and the images are pairwise disjoint.
    pub fn is_valid(&self, host: &Hypergraph, pattern: &Hypergraph) -> bool {
        let mut used = BitSet::new(host.n());
        for c in &self.copies {
            if !is_embedding(host, pattern, c) {
                return false;
            }
            for &v in c {
                if used.contains(v as usize) {
                    return false;
                }
                used.insert(v as usize);
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingNumber {
    /// `min(ν, cap)`.
    pub value: usize,
    /// Whether the search stopped because `cap` was reached.
    pub capped: bool,
    pub matching: Matching,
}

/// Every distinct vertex set spanned by a copy of `pattern`, in increasing
/// lexicographic order, paired with the first embedding found onto it.
pub fn copy_sets(host: &Hypergraph, pattern: &Hypergraph) -> Vec<(Vec<u32>, Vec<u32>)> {
    let index = HostIndex::new(host);
    let mut sets: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for_each_embedding(&index, pattern, &Constraints::default(), |m| {
        let mut key = m.to_vec();
        key.sort_unstable();
        sets.entry(key).or_insert_with(|| m.to_vec());
        ControlFlow::Continue(())
    });
    sets.into_iter().collect()
}

struct Packer<'a> {
    k: usize,
    copies: &'a [BitSet],
    by_vertex: Vec<Vec<usize>>,
    cap: usize,
    best: Vec<usize>,
    stack: Vec<usize>,
}

impl Packer<'_> {
    fn go(&mut self, avail: &BitSet) -> bool {
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
            if self.best.len() >= self.cap {
                return true;
            }
        }
        if self.stack.len() + avail.len() / self.k <= self.best.len() {
            return false;
        }
        let Some(v) = avail.first() else {
            return false;
        };
        for i in 0..self.by_vertex[v].len() {
            let c = self.by_vertex[v][i];
            if self.copies[c].is_subset(avail) {
                let mut next = avail.clone();
                next.difference_with(&self.copies[c]);
                self.stack.push(c);
                let stop = self.go(&next);
                self.stack.pop();
                if stop {
                    return true;
                }
            }
        }
        let mut next = avail.clone();
        next.remove(v);
        self.go(&next)
    }
}

/// The F-matching number `ν(F, H)`, optionally stopping once `cap` disjoint
/// copies are found. The witness is the first maximum packing in the
/// search order, which depends only on the inputs.
pub fn matching_number(host: &Hypergraph, pattern: &Hypergraph, cap: Option<usize>) -> Result<MatchingNumber> {
    same_r(host.r(), pattern.r())?;
    if pattern.n() == 0 {
        return Err(invalid("pattern needs at least one vertex"));
    }
    let cap = cap.unwrap_or(usize::MAX);
    if cap == 0 {
        return Ok(MatchingNumber {
            value: 0,
            capped: true,
            matching: Matching::default(),
        });
    }
    let sets = copy_sets(host, pattern);
    let copies: Vec<BitSet> = sets
        .iter()
        .map(|(s, _)| BitSet::from_iter_with_capacity(host.n(), s.iter().map(|&v| v as usize)))
        .collect();
    let mut by_vertex = vec![Vec::new(); host.n()];
    let mut avail = BitSet::new(host.n());
    for (i, (s, _)) in sets.iter().enumerate() {
        for &v in s {
            by_vertex[v as usize].push(i);
            avail.insert(v as usize);
        }
    }
    let mut packer = Packer {
        k: pattern.n(),
        copies: &copies,
        by_vertex,
        cap,
        best: Vec::new(),
        stack: Vec::new(),
    };
    let capped = packer.go(&avail);
    let mut chosen = packer.best;
    chosen.sort_unstable();
    Ok(MatchingNumber {
        value: chosen.len(),
        capped,
        matching: Matching {
            copies: chosen.into_iter().map(|i| sets[i].1.clone()).collect(),
        },
    })
}

/// Whether `host` is `(t+1)F`-free, i.e. `ν(F, host) <= t`.
pub fn is_free(host: &Hypergraph, pattern: &Hypergraph, t: usize) -> Result<bool> {
    same_r(host.r(), pattern.r())?;
    if t == 0 {
        return Ok(!contains(host, pattern)?);
    }
    Ok(matching_number(host, pattern, Some(t + 1))?.value <= t)
}

/// Subgraph containment with a witness map.
pub fn contains_with_witness(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Vec<u32>>> {
    same_r(host.r(), pattern.r())?;
    Ok(super::embed::find_embedding(host, pattern))
}

pub fn contains(host: &Hypergraph, pattern: &Hypergraph) -> Result<bool> {
    Ok(contains_with_witness(host, pattern)?.is_some())
}

/// Whether `host` contains some member of `family`.
pub fn contains_family(host: &Hypergraph, family: &PatternFamily) -> Result<bool> {
    same_r(host.r(), family.r())?;
    let index = HostIndex::new(host);
    Ok(family.members().iter().any(|f| {
        super::embed::find_embedding_indexed(&index, f, &Constraints::default()).is_some()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{b_construction, complete, cycle, disjoint_copies, join, turan_graph};

    #[test]
    fn small_values() {
        let k2 = complete(2, 2);
        let k3 = complete(3, 2);
        assert_eq!(matching_number(&cycle(5).unwrap(), &k2, None).unwrap().value, 2);
        let nu = matching_number(&complete(6, 2), &k3, None).unwrap();
        assert_eq!(nu.value, 2);
        assert!(nu.matching.is_valid(&complete(6, 2), &k3));
        let host = join(&complete(1, 2), &turan_graph(12, 2).unwrap()).unwrap();
        assert_eq!(matching_number(&host, &k3, None).unwrap().value, 1);
    }

    #[test]
    fn caps() {
        let res = matching_number(&complete(9, 2), &complete(2, 2), Some(2)).unwrap();
        assert_eq!((res.value, res.capped), (2, true));
        let res = matching_number(&complete(3, 2), &complete(2, 2), Some(5)).unwrap();
        assert_eq!((res.value, res.capped), (1, false));
    }

    #[test]
    fn freeness() {
        let k3 = complete(3, 2);
        assert!(is_free(&turan_graph(7, 2).unwrap(), &k3, 0).unwrap());
        assert!(!is_free(&disjoint_copies(&k3, 2), &k3, 1).unwrap());
        assert!(is_free(&b_construction(8, 3, 2, 1).unwrap(), &k3, 1).unwrap());
        assert!(is_free(&complete(5, 2), &k3, 1).unwrap());
        assert!(!is_free(&complete(6, 2), &k3, 1).unwrap());
    }

    #[test]
    fn families() {
        let p3 = PatternFamily::single("P3", crate::construct::path(3));
        assert!(contains_family(&crate::construct::star(3), &p3).unwrap());
        assert!(!contains_family(&disjoint_copies(&complete(2, 2), 3), &p3).unwrap());
    }

    #[test]
    fn hypergraph_matchings() {
        let e3 = Hypergraph::new(3, 3, [[0u32, 1, 2]]).unwrap();
        assert_eq!(matching_number(&complete(7, 3), &e3, None).unwrap().value, 2);
        assert!(matching_number(&complete(4, 2), &e3, None).is_err());
    }
}
