//! Ordered copies in semibipartite hosts and the greedy and absorbing
//! matching procedures for complete r-partite patterns.

use serde::{Deserialize, Serialize};

use super::embed::{find_embedding_indexed, Constraints, HostIndex};
use super::matching::Matching;
use crate::bits::BitSet;
use crate::combinatorics::binom_u128;
use crate::error::{invalid, same_r, Result};
use crate::hypergraph::Hypergraph;
use crate::pattern::PartitionedPattern;

/// A host whose every edge has exactly one vertex in `V_1`.
#[derive(Clone, Debug)]
pub struct SemibipartiteHost {
    host: Hypergraph,
    v1: BitSet,
}

impl SemibipartiteHost {
    pub fn new(host: Hypergraph, v1: &[u32]) -> Result<Self> {
        let mut set = BitSet::new(host.n());
        for &v in v1 {
            if v as usize >= host.n() {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            set.insert(v as usize);
        }
        for e in host.edges() {
            let hits = e.iter().filter(|&&v| set.contains(v as usize)).count();
            if hits != 1 {
                return Err(invalid(format!(
                    "edge {e:?} meets V1 in {hits} vertices, expected exactly 1"
                )));
            }
        }
        Ok(SemibipartiteHost { host, v1: set })
    }

    pub fn host(&self) -> &Hypergraph {
        &self.host
    }

    pub fn v1(&self) -> &BitSet {
        &self.v1
    }

    pub fn v2(&self) -> BitSet {
        let mut s = BitSet::full(self.host.n());
        s.difference_with(&self.v1);
        s
    }

    /// `m = |V_1|`.
    pub fn m(&self) -> usize {
        self.v1.len()
    }

    /// `n = |V_2|`.
    pub fn n2(&self) -> usize {
        self.host.n() - self.v1.len()
    }
}

fn ordered_constraints(
    p: &PartitionedPattern,
    v1_allowed: &BitSet,
    v2_allowed: &BitSet,
) -> Constraints {
    let mut allowed = vec![v2_allowed.clone(); p.base().n()];
    for &w in &p.parts()[0] {
        allowed[w as usize] = v1_allowed.clone();
    }
    Constraints {
        allowed: Some(allowed),
        ..Default::default()
    }
}

/// An ordered copy: `W_1` inside `V_1`, the other parts inside `V_2`.
pub fn ordered_copy(s: &SemibipartiteHost, p: &PartitionedPattern) -> Result<Option<Vec<u32>>> {
    same_r(s.host().r(), p.base().r())?;
    let index = HostIndex::new(s.host());
    let c = ordered_constraints(p, s.v1(), &s.v2());
    Ok(find_embedding_indexed(&index, p.base(), &c))
}

pub fn ordered_contains(s: &SemibipartiteHost, p: &PartitionedPattern) -> Result<bool> {
    Ok(ordered_copy(s, p)?.is_some())
}

/// Checks that `m` is a matching of ordered copies.
pub fn is_ordered_matching(s: &SemibipartiteHost, p: &PartitionedPattern, m: &Matching) -> bool {
    if !m.is_valid(s.host(), p.base()) {
        return false;
    }
    let w1 = BitSet::from_iter_with_capacity(p.base().n(), p.parts()[0].iter().map(|&v| v as usize));
    m.copies.iter().all(|c| {
        c.iter()
            .enumerate()
            .all(|(pv, &hv)| w1.contains(pv) == s.v1().contains(hv as usize))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Precondition {
    pub condition: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LemmaMatching {
    pub matching: Matching,
    /// The size the lemma promises under its hypotheses.
    pub promised: i64,
    pub preconditions: Vec<Precondition>,
    /// Hypotheses hold and the host is above the configured size floor.
    pub guaranteed: bool,
}

/// Default host size below which lemma guarantees are advisory only.
pub const DEFAULT_SIZE_FLOOR: usize = 50;

fn alpha_n_pow(alpha: f64, n: usize, r: usize) -> f64 {
    alpha * (n as f64).powi(r as i32 - 1)
}

fn min_v1_degree(s: &SemibipartiteHost) -> usize {
    s.v1().iter().map(|v| s.host().degree(v)).min().unwrap_or(usize::MAX)
}

/// Repeatedly removes the first ordered copy among unused vertices until
/// none is left, yielding a maximal collection.
fn greedy_on(
    p: &PartitionedPattern,
    index: &HostIndex<'_>,
    v1_allowed: &BitSet,
    v2_allowed: &BitSet,
) -> (Matching, BitSet) {
    let mut v1 = v1_allowed.clone();
    let mut v2 = v2_allowed.clone();
    let mut out = Matching::default();
    loop {
        let c = ordered_constraints(p, &v1, &v2);
        let Some(copy) = find_embedding_indexed(index, p.base(), &c) else {
            break;
        };
        for &hv in &copy {
            v1.remove(hv as usize);
            v2.remove(hv as usize);
        }
        out.copies.push(copy);
    }
    (out, v2)
}

/// The greedy maximal ordered matching. Under the hypotheses
/// `d(v) >= α n^{r-1}` on `V_1` and `m <= α n / (s - s_1)`, large hosts
/// contain at least `⌊m/s_1 - 4/α⌋` copies.
pub fn greedy_semibipartite_matching(
    s: &SemibipartiteHost,
    p: &PartitionedPattern,
    alpha: f64,
    size_floor: usize,
) -> Result<LemmaMatching> {
    same_r(s.host().r(), p.base().r())?;
    if alpha <= 0.0 {
        return Err(invalid("alpha must be positive"));
    }
    let (m, n, r) = (s.m(), s.n2(), s.host().r());
    let s1 = p.sizes()[0];
    let total = p.total();
    let index = HostIndex::new(s.host());
    let (matching, _) = greedy_on(p, &index, s.v1(), &s.v2());
    let preconditions = vec![
        Precondition {
            condition: format!("min V1 degree >= alpha*n^(r-1) = {:.3}", alpha_n_pow(alpha, n, r)),
            holds: (min_v1_degree(s) as f64) >= alpha_n_pow(alpha, n, r),
        },
        Precondition {
            condition: format!("m <= alpha*n/(s-s1) = {:.3}", alpha * n as f64 / (total - s1) as f64),
            holds: (m as f64) <= alpha * n as f64 / (total - s1) as f64,
        },
        Precondition {
            condition: "s1 is a smallest part".into(),
            holds: p.sizes().iter().all(|&x| x >= s1),
        },
    ];
    let promised = (m as f64 / s1 as f64 - 4.0 / alpha).floor() as i64;
    let guaranteed = preconditions.iter().all(|c| c.holds) && n >= size_floor;
    Ok(LemmaMatching {
        matching,
        promised,
        preconditions,
        guaranteed,
    })
}

/// The high-degree set `L = {v ∈ V_1 : d(v) >= C(n, r-1) - α n^{r-1} / (2 s_1)}`.
pub fn high_degree_set(s: &SemibipartiteHost, alpha: f64, s1: usize) -> Vec<u32> {
    let (n, r) = (s.n2(), s.host().r());
    let full = binom_u128(n as u64, r as u64 - 1) as f64;
    let threshold = full - alpha_n_pow(alpha, n, r) / (2.0 * s1 as f64);
    s.v1()
        .iter()
        .filter(|&v| s.host().degree(v) as f64 >= threshold)
        .map(|v| v as u32)
        .collect()
}

/// The absorbing construction: a maximal greedy matching on `V_1 \ L`,
/// each leftover vertex paired with `s_1 - 1` fresh vertices of `L`, then a
/// greedy matching on the rest of `L`. Under the hypotheses this yields
/// exactly `⌊m/s_1⌋` copies.
pub fn absorption_matching(
    s: &SemibipartiteHost,
    p: &PartitionedPattern,
    alpha: f64,
    l: &[u32],
    size_floor: usize,
) -> Result<LemmaMatching> {
    same_r(s.host().r(), p.base().r())?;
    if alpha <= 0.0 {
        return Err(invalid("alpha must be positive"));
    }
    let (m, n, r) = (s.m(), s.n2(), s.host().r());
    let s1 = p.sizes()[0];
    let total = p.total();
    let mut l_set = BitSet::new(s.host().n());
    for &v in l {
        if !s.v1().contains(v as usize) {
            return Err(invalid(format!("vertex {v} of L is not in V1")));
        }
        l_set.insert(v as usize);
    }
    let expected_l = high_degree_set(s, alpha, s1);
    let l_floor = (5.0 * (s1 * (s1 - 1)) as f64 / alpha).min((s1 - 1) as f64 / s1 as f64 * m as f64);
    let preconditions = vec![
        Precondition {
            condition: format!("(i) m <= alpha*n/(8(s-s1)) = {:.3}", alpha * n as f64 / (8 * (total - s1)) as f64),
            holds: (m as f64) <= alpha * n as f64 / (8 * (total - s1)) as f64,
        },
        Precondition {
            condition: format!("(ii) min V1 degree >= alpha*n^(r-1) = {:.3}", alpha_n_pow(alpha, n, r)),
            holds: (min_v1_degree(s) as f64) >= alpha_n_pow(alpha, n, r),
        },
        Precondition {
            condition: format!("(iii) |L| >= min(5 s1(s1-1)/alpha, (s1-1)m/s1) = {l_floor:.3}"),
            holds: (l.len() as f64) >= l_floor,
        },
        Precondition {
            condition: "L consists of high-degree vertices".into(),
            holds: l.iter().all(|v| expected_l.contains(v)),
        },
    ];
    let index = HostIndex::new(s.host());
    let mut rest = s.v1().clone();
    rest.difference_with(&l_set);
    // greedy on S = V1 \ L
    let (mut matching, mut v2_free) = greedy_on(p, &index, &rest, &s.v2());
    for c in &matching.copies {
        for &hv in c {
            rest.remove(hv as usize);
        }
    }
    // pair leftovers with (s1 - 1)-subsets of L
    let mut l_free = l_set.clone();
    let w1 = &p.parts()[0];
    for v in rest.iter() {
        let tail: Vec<usize> = l_free.iter().take(s1 - 1).collect();
        if tail.len() < s1 - 1 {
            break;
        }
        let mut allowed = vec![v2_free.clone(); p.base().n()];
        allowed[w1[0] as usize] = BitSet::from_iter_with_capacity(s.host().n(), [v]);
        for (k, &pw) in w1.iter().enumerate().skip(1) {
            allowed[pw as usize] = BitSet::from_iter_with_capacity(s.host().n(), [tail[k - 1]]);
        }
        let c = Constraints {
            allowed: Some(allowed),
            ..Default::default()
        };
        if let Some(copy) = find_embedding_indexed(&index, p.base(), &c) {
            for &hv in &copy {
                v2_free.remove(hv as usize);
                l_free.remove(hv as usize);
            }
            matching.copies.push(copy);
        }
    }
    let (tail, _) = greedy_on(p, &index, &l_free, &v2_free);
    matching.copies.extend(tail.copies);
    let promised = (m / s1) as i64;
    let guaranteed = preconditions.iter().all(|c| c.holds) && n >= size_floor;
    Ok(LemmaMatching {
        matching,
        promised,
        preconditions,
        guaranteed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::complete_multipartite;

    fn complete_semibipartite(m: usize, n: usize) -> SemibipartiteHost {
        let mut edges = Vec::new();
        for a in 0..m as u32 {
            for b in 0..n as u32 {
                edges.push([a, m as u32 + b]);
            }
        }
        let h = Hypergraph::new(m + n, 2, edges).unwrap();
        SemibipartiteHost::new(h, &(0..m as u32).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn validation() {
        let h = crate::construct::complete(3, 2);
        assert!(SemibipartiteHost::new(h, &[0]).is_err());
    }

    #[test]
    fn ordered_examples() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let s = complete_semibipartite(2, 4);
        assert!(ordered_contains(&s, &c4).unwrap());
        let s = complete_semibipartite(1, 4);
        assert!(!ordered_contains(&s, &c4).unwrap());
        // star K1,3 with the centre as W1 needs a V1 centre
        let star = complete_multipartite(&[1, 3]).unwrap();
        assert!(ordered_contains(&complete_semibipartite(1, 3), &star).unwrap());
        let h = Hypergraph::new(4, 2, [[0u32, 1], [0, 2], [0, 3]]).unwrap();
        let s = SemibipartiteHost::new(h, &[1, 2, 3]).unwrap();
        assert!(!ordered_contains(&s, &star).unwrap());
    }

    #[test]
    fn greedy_on_complete_host() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let s = complete_semibipartite(10, 40);
        let res = greedy_semibipartite_matching(&s, &c4, 1.0, 0).unwrap();
        assert_eq!(res.matching.len(), 5);
        assert!(is_ordered_matching(&s, &c4, &res.matching));
        assert!(res.guaranteed);
        assert!(res.matching.len() as i64 >= res.promised);
    }

    #[test]
    fn greedy_flags_violations() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let mut edges = Vec::new();
        for b in 0..10u32 {
            edges.push([0, 2 + b]);
        }
        edges.push([1, 2]);
        let h = Hypergraph::new(12, 2, edges).unwrap();
        let s = SemibipartiteHost::new(h, &[0, 1]).unwrap();
        let res = greedy_semibipartite_matching(&s, &c4, 0.5, 0).unwrap();
        assert!(!res.guaranteed);
        assert!(is_ordered_matching(&s, &c4, &res.matching));
    }

    #[test]
    fn absorption_on_complete_host() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        let s = complete_semibipartite(5, 80);
        let l = high_degree_set(&s, 1.0, 2);
        assert_eq!(l.len(), 5);
        let res = absorption_matching(&s, &c4, 1.0, &l, 0).unwrap();
        assert_eq!(res.matching.len(), 2);
        assert!(is_ordered_matching(&s, &c4, &res.matching));
        // with an empty high-degree set the procedure is plain greedy
        let res = absorption_matching(&s, &c4, 1.0, &[], 0).unwrap();
        assert_eq!(res.matching.len(), 2);
    }
}
