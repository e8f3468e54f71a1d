//! Forbidden patterns: families, partitioned patterns, and the name syntax
//! used by the command line and the ex-table.

use std::collections::BTreeSet;

use crate::canon::{certificate, Certificate};
use crate::combinatorics::for_each_combination;
use crate::construct::{complete, cycle, disjoint_copies, disjoint_union, generalized_triangle, path, star, suspension};
use crate::error::{invalid, same_r, Result};
use crate::hypergraph::Hypergraph;
use crate::structure::induced_subgraphs;

/// A finite set of pairwise non-isomorphic r-graphs forbidden together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternFamily {
    name: String,
    members: Vec<Hypergraph>,
}

impl PatternFamily {
    /// Builds a family, dropping members isomorphic to an earlier one.
    pub fn new(name: impl Into<String>, members: Vec<Hypergraph>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(invalid("a pattern family needs at least one member"));
        };
        let r = first.r();
        let mut seen: BTreeSet<Certificate> = BTreeSet::new();
        let mut kept = Vec::new();
        for m in members {
            same_r(r, m.r())?;
            if seen.insert(certificate(&m)?) {
                kept.push(m);
            }
        }
        Ok(PatternFamily {
            name: name.into(),
            members: kept,
        })
    }

    pub fn single(name: impl Into<String>, f: Hypergraph) -> Self {
        PatternFamily {
            name: name.into(),
            members: vec![f],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[Hypergraph] {
        &self.members
    }

    pub fn r(&self) -> usize {
        self.members[0].r()
    }

    /// Fewest vertices over the members.
    pub fn min_vertices(&self) -> usize {
        self.members.iter().map(Hypergraph::n).min().unwrap_or(0)
    }
}

/// `F[s]`: the induced subgraphs of `F` on `s` vertices, up to isomorphism.
pub fn induced_family(f: &Hypergraph, s: usize, name: &str) -> Result<PatternFamily> {
    if s > f.n() {
        return Err(invalid(format!("s = {s} exceeds v(F) = {}", f.n())));
    }
    PatternFamily::new(format!("{name}[{s}]"), induced_subgraphs(f, s))
}

/// `k𝓕`: every disjoint union of `k` members (with repetition).
pub fn family_disjoint_union(family: &PatternFamily, k: usize) -> Result<PatternFamily> {
    if k == 0 {
        return Err(invalid("need at least one copy"));
    }
    let members = family.members();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let mut acc = Hypergraph::empty(0, family.r());
        for &c in &choice {
            acc = disjoint_union(&acc, &members[c])?;
        }
        out.push(acc);
        // next non-decreasing index sequence
        let mut i = k;
        loop {
            if i == 0 {
                return PatternFamily::new(format!("{k}x{}", family.name()), out);
            }
            i -= 1;
            if choice[i] + 1 < members.len() {
                choice[i] += 1;
                for j in i + 1..k {
                    choice[j] = choice[i];
                }
                break;
            }
        }
    }
}

/// An r-partite pattern with an ordered vertex partition `W_1, ..., W_r`;
/// every edge has exactly one vertex in each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedPattern {
    base: Hypergraph,
    parts: Vec<Vec<u32>>,
}

impl PartitionedPattern {
    pub fn new(base: Hypergraph, parts: Vec<Vec<u32>>) -> Result<Self> {
        if parts.len() != base.r() {
            return Err(invalid(format!(
                "expected {} parts, got {}",
                base.r(),
                parts.len()
            )));
        }
        let mut owner = vec![usize::MAX; base.n()];
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(invalid("parts must be non-empty"));
            }
            for &v in p {
                let slot = owner
                    .get_mut(v as usize)
                    .ok_or_else(|| invalid(format!("vertex {v} out of range")))?;
                if *slot != usize::MAX {
                    return Err(invalid(format!("vertex {v} in two parts")));
                }
                *slot = i;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(invalid("parts must cover every vertex"));
        }
        for e in base.edges() {
            let mut hit: Vec<usize> = e.iter().map(|&v| owner[v as usize]).collect();
            hit.sort_unstable();
            hit.dedup();
            if hit.len() != base.r() {
                return Err(invalid(format!("edge {e:?} is not a transversal")));
            }
        }
        Ok(PartitionedPattern { base, parts })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    /// Part sizes `s_1, ..., s_r` in part order.
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// `s = s_1 + ... + s_r`.
    pub fn total(&self) -> usize {
        self.base.n()
    }
}

/// The complete r-partite r-graph `K_{s_1, ..., s_r}` with `r = sizes.len()`.
/// Parts are laid out consecutively in nondecreasing size order, so
/// `W_1` is a smallest part.
pub fn complete_multipartite(sizes: &[usize]) -> Result<PartitionedPattern> {
    if sizes.len() < 2 {
        return Err(invalid("need at least two parts"));
    }
    if sizes.contains(&0) {
        return Err(invalid("part sizes must be positive"));
    }
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    let mut parts = Vec::new();
    let mut next = 0u32;
    for &s in &sizes {
        parts.push((next..next + s as u32).collect::<Vec<_>>());
        next += s as u32;
    }
    let mut list: Vec<Vec<u32>> = vec![Vec::new()];
    for p in &parts {
        list = list
            .into_iter()
            .flat_map(|pre| {
                p.iter().map(move |&v| {
                    let mut e = pre.clone();
                    e.push(v);
                    e
                })
            })
            .collect();
    }
    let base = Hypergraph::from_edge_lists(next as usize, sizes.len(), list);
    PartitionedPattern::new(base, parts)
}

/// A named pattern as produced by [`parse_pattern`].
#[derive(Clone, Debug)]
pub struct NamedPattern {
    pub name: String,
    pub graph: Hypergraph,
    pub partition: Option<PartitionedPattern>,
}

fn parse_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Parses pattern names:
///
/// * `K4` (complete graph), `K4^3` (complete 3-graph on 4 vertices)
/// * `K2,3` or `K{2,2,2}` (complete multipartite, uniformity = number of parts)
/// * `C5`, `P3` (path on 3 vertices), `S3` (star with 3 leaves)
/// * `T3` (generalized triangle), `E3` (a single 3-edge)
/// * `hat(X)` (suspension of `X`), `3xX` (three disjoint copies of `X`)
pub fn parse_pattern(name: &str) -> Result<NamedPattern> {
    let s = name.trim();
    let bad = || invalid(format!("unrecognised pattern name {s:?}"));
    if let Some((k, rest)) = s.split_once('x') {
        if let Ok(k) = k.parse::<usize>() {
            if k == 0 {
                return Err(bad());
            }
            let inner = parse_pattern(rest)?;
            return Ok(NamedPattern {
                name: format!("{k}x{}", inner.name),
                graph: disjoint_copies(&inner.graph, k),
                partition: None,
            });
        }
    }
    if let Some(inner) = s.strip_prefix("hat(").and_then(|t| t.strip_suffix(')')) {
        let inner = parse_pattern(inner)?;
        return Ok(NamedPattern {
            name: format!("hat({})", inner.name),
            graph: suspension(&inner.graph),
            partition: None,
        });
    }
    let (head, body) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
    let body = body
        .trim_start_matches('_')
        .trim_start_matches('{')
        .trim_end_matches('}');
    match head {
        "K" => {
            if body.contains(',') {
                let sizes = parse_list(body).ok_or_else(bad)?;
                let p = complete_multipartite(&sizes)?;
                let mut sorted = sizes.clone();
                sorted.sort_unstable();
                let name = format!(
                    "K{}",
                    sorted.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                );
                return Ok(NamedPattern {
                    name,
                    graph: p.base().clone(),
                    partition: Some(p),
                });
            }
            let (n, r) = match body.split_once('^') {
                Some((n, r)) => (n.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?),
                None => (body.parse().map_err(|_| bad())?, 2usize),
            };
            if r == 0 {
                return Err(bad());
            }
            let name = if r == 2 { format!("K{n}") } else { format!("K{n}^{r}") };
            Ok(NamedPattern {
                name,
                graph: complete(n, r),
                partition: None,
            })
        }
        "C" | "P" | "S" | "T" | "E" => {
            let k: usize = body.parse().map_err(|_| bad())?;
            let graph = match head {
                "C" => cycle(k)?,
                "P" if k >= 1 => path(k),
                "S" => star(k),
                "T" => generalized_triangle(k)?,
                "E" if k >= 1 => Hypergraph::from_edge_lists(k, k, vec![(0..k as u32).collect()]),
                _ => return Err(bad()),
            };
            Ok(NamedPattern {
                name: format!("{head}{k}"),
                graph,
                partition: None,
            })
        }
        _ => Err(bad()),
    }
}

/// Resolves a family id as used by the ex-table: a pattern name, `NAME[s]`
/// for the induced family on `s` vertices, or `kxID` for `k` disjoint copies
/// (the `kx` prefix binds loosest, so `2xK2,3[4]` is two copies of `K2,3[4]`).
pub fn parse_family(id: &str) -> Result<PatternFamily> {
    let id = id.trim();
    if let Some((k, rest)) = id.split_once('x') {
        if let Ok(k) = k.parse::<usize>() {
            if rest.ends_with(']') {
                return family_disjoint_union(&parse_family(rest)?, k);
            }
        }
    }
    if let Some(body) = id.strip_suffix(']') {
        let open = body.rfind('[').ok_or_else(|| invalid(format!("unbalanced brackets in {id:?}")))?;
        let s: usize = body[open + 1..]
            .parse()
            .map_err(|_| invalid(format!("bad induced size in {id:?}")))?;
        let base = parse_pattern(&body[..open])?;
        return induced_family(&base.graph, s, &base.name);
    }
    let p = parse_pattern(id)?;
    Ok(PatternFamily::single(p.name, p.graph))
}

/// Every simple r-graph on `n` labelled vertices as edge lists over the
/// lexicographic list of r-subsets; used by small exhaustive oracles.
pub fn all_r_subsets(n: usize, r: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_combination(n, r, |c| out.push(c.to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_ids() {
        let f = parse_family("K2,2[3]").unwrap();
        assert_eq!(f.name(), "K2,2[3]");
        assert_eq!(f.members().len(), 1);
        assert_eq!(f.members()[0].edge_count(), 2);
        let f = parse_family("K2,3[4]").unwrap();
        assert_eq!(f.members().len(), 2);
        let f = parse_family("2xK3[2]").unwrap();
        assert_eq!(f.name(), "2xK3[2]");
        assert_eq!(f.members()[0].edge_count(), 2);
        assert_eq!(parse_family("3xK2").unwrap().members()[0].edge_count(), 3);
        assert!(parse_family("K3[9]").is_err());
    }

    #[test]
    fn multipartite_examples() {
        let c4 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(c4.base().edge_count(), 4);
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!((k222.base().n(), k222.base().r(), k222.base().edge_count()), (6, 3, 8));
        let k112 = complete_multipartite(&[2, 1, 1]).unwrap();
        assert_eq!((k112.base().n(), k112.base().edge_count()), (4, 2));
        assert_eq!(k112.sizes(), vec![1, 1, 2]);
        assert!(complete_multipartite(&[3]).is_err());
    }

    #[test]
    fn induced_families() {
        let c4 = complete_multipartite(&[2, 2]).unwrap().base().clone();
        let fam = induced_family(&c4, 3, "K2,2").unwrap();
        assert_eq!(fam.members().len(), 1);
        assert_eq!(fam.members()[0].edge_count(), 2);
        assert_eq!(fam.name(), "K2,2[3]");
        let k3 = complete(3, 2);
        assert_eq!(induced_family(&k3, 3, "K3").unwrap().members(), &[k3.clone()]);
        let two = induced_family(&k3, 2, "K3").unwrap();
        assert_eq!(two.members(), &[complete(2, 2)]);
        assert!(induced_family(&k3, 4, "K3").is_err());
    }

    #[test]
    fn families() {
        assert!(PatternFamily::new("x", vec![]).is_err());
        assert!(PatternFamily::new("x", vec![complete(3, 2), complete(4, 3)]).is_err());
        let f = PatternFamily::new("pair", vec![path(3), complete(3, 2)]).unwrap();
        let doubled = family_disjoint_union(&f, 2).unwrap();
        assert_eq!(doubled.members().len(), 3);
        assert!(doubled.members().iter().all(|m| m.n() == 6));
    }

    #[test]
    fn partition_validation() {
        let k3 = complete(3, 2);
        assert!(PartitionedPattern::new(k3.clone(), vec![vec![0], vec![1, 2]]).is_err());
        assert!(PartitionedPattern::new(k3, vec![vec![0], vec![1]]).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(parse_pattern("K3").unwrap().graph, complete(3, 2));
        assert_eq!(parse_pattern("K4^3").unwrap().graph.edge_count(), 4);
        let k = parse_pattern("K{3,2}").unwrap();
        assert_eq!(k.name, "K2,3");
        assert_eq!(k.partition.unwrap().sizes(), vec![2, 3]);
        assert_eq!(parse_pattern("K_{2,2,2}").unwrap().graph.r(), 3);
        assert_eq!(parse_pattern("C4").unwrap().graph.edge_count(), 4);
        assert_eq!(parse_pattern("P3").unwrap().graph.edge_count(), 2);
        assert_eq!(parse_pattern("S3").unwrap().graph.degree(0), 3);
        assert_eq!(parse_pattern("T3").unwrap().graph.n(), 5);
        assert_eq!(parse_pattern("E3").unwrap().graph.edge_count(), 1);
        let hat = parse_pattern("hat(K3)").unwrap();
        assert_eq!((hat.graph.r(), hat.graph.n()), (3, 4));
        let m = parse_pattern("3xK2").unwrap();
        assert_eq!((m.name.as_str(), m.graph.edge_count()), ("3xK2", 3));
        for bad in ["", "Q3", "K", "Kx", "0xK2", "C2", "K3^0"] {
            assert!(parse_pattern(bad).is_err(), "{bad}");
        }
    }
}
