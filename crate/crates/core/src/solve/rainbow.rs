//! Rainbow F-matchings across a list of hosts on a shared vertex set.

use super::matching::copy_sets;
use crate::bits::BitSet;
use crate::error::{invalid, same_r, Result};
use crate::hypergraph::Hypergraph;

/// Finds pairwise disjoint vertex sets `S_1, ..., S_k`, one per host, with a
/// copy of `pattern` inside `hosts[i][S_i]`. Returns the chosen sets in host
/// order, or `None` when no rainbow matching exists.
pub fn rainbow_matching(hosts: &[Hypergraph], pattern: &Hypergraph) -> Result<Option<Vec<Vec<u32>>>> {
    let Some(first) = hosts.first() else {
        return Ok(Some(Vec::new()));
    };
    for h in hosts {
        same_r(h.r(), pattern.r())?;
        if h.n() != first.n() {
            return Err(invalid("hosts must share one vertex set"));
        }
    }
    let n = first.n();
    let options: Vec<Vec<(Vec<u32>, BitSet)>> = hosts
        .iter()
        .map(|h| {
            copy_sets(h, pattern)
                .into_iter()
                .map(|(s, _)| {
                    let bits = BitSet::from_iter_with_capacity(n, s.iter().map(|&v| v as usize));
                    (s, bits)
                })
                .collect()
        })
        .collect();
    // most constrained host first
    let mut order: Vec<usize> = (0..hosts.len()).collect();
    order.sort_by_key(|&i| (options[i].len(), i));
    let mut chosen: Vec<usize> = vec![usize::MAX; hosts.len()];
    fn go(
        depth: usize,
        order: &[usize],
        options: &[Vec<(Vec<u32>, BitSet)>],
        used: &mut BitSet,
        chosen: &mut [usize],
    ) -> bool {
        let Some(&host) = order.get(depth) else {
            return true;
        };
        for (j, (_, bits)) in options[host].iter().enumerate() {
            if bits.intersection_len(used) == 0 {
                used.union_with(bits);
                chosen[host] = j;
                if go(depth + 1, order, options, used, chosen) {
                    return true;
                }
                used.difference_with(bits);
            }
        }
        false
    }
    let mut used = BitSet::new(n);
    if go(0, &order, &options, &mut used, &mut chosen) {
        Ok(Some(
            chosen
                .iter()
                .enumerate()
                .map(|(i, &j)| options[i][j].0.clone())
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::complete;

    #[test]
    fn complete_hosts() {
        let hosts = vec![complete(6, 2), complete(6, 2)];
        let sets = rainbow_matching(&hosts, &complete(3, 2)).unwrap().unwrap();
        assert_eq!(sets.len(), 2);
        assert!(sets[0].iter().all(|v| !sets[1].contains(v)));
    }

    #[test]
    fn empty_host_blocks() {
        let hosts = vec![complete(6, 2), Hypergraph::empty(6, 2)];
        assert!(rainbow_matching(&hosts, &complete(3, 2)).unwrap().is_none());
    }

    #[test]
    fn overlapping_triangles() {
        // both hosts only have triangles through vertex 0
        let a = Hypergraph::new(6, 2, [[0u32, 1], [0, 2], [1, 2], [3, 4]]).unwrap();
        let b = Hypergraph::new(6, 2, [[0u32, 3], [0, 4], [3, 4]]).unwrap();
        assert!(rainbow_matching(&[a.clone(), b], &complete(3, 2)).unwrap().is_none());
        let c = Hypergraph::new(6, 2, [[3u32, 4], [3, 5], [4, 5]]).unwrap();
        assert!(rainbow_matching(&[a, c], &complete(3, 2)).unwrap().is_some());
    }
}
