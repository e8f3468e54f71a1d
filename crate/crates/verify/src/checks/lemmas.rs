//! Greedy and absorbing ordered matchings on large semibipartite hosts.

use hyperex_core::pattern::complete_multipartite;
use hyperex_core::solve::{
    absorption_matching, greedy_semibipartite_matching, is_ordered_matching, LemmaMatching, SemibipartiteHost,
    DEFAULT_SIZE_FLOOR,
};
use hyperex_core::{Hypergraph, PartitionedPattern};
use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::corpus_rng;
use crate::case::CheckCase;

const SIZES: [[usize; 2]; 4] = [[1, 2], [2, 2], [2, 3], [3, 3]];

/// A bipartite host on `V1 = 0..m`, `V2 = m..m+n` where vertex `i` of `V1`
/// gets a uniformly random neighbourhood of size `degrees[i]`.
fn host(m: usize, n: usize, degrees: &[usize], rng: &mut impl Rng) -> SemibipartiteHost {
    let mut edges = Vec::new();
    for (a, &d) in degrees.iter().enumerate() {
        for b in sample(rng, n, d).into_vec() {
            edges.push([a as u32, (m + b) as u32]);
        }
    }
    let h = Hypergraph::new(m + n, 2, edges).expect("bipartite edges are valid");
    SemibipartiteHost::new(h, &(0..m as u32).collect::<Vec<_>>()).expect("edges meet V1 once")
}

struct Instance {
    index: usize,
    sizes: [usize; 2],
    alpha: f64,
    host: SemibipartiteHost,
    l: Vec<u32>,
}

fn params(inst: &Instance) -> Value {
    json!({"instance": inst.index, "sizes": inst.sizes, "alpha": inst.alpha, "m": inst.host.m(), "n": inst.host.n2()})
}

fn judge(id: &str, inst: &Instance, p: &PartitionedPattern, res: Result<LemmaMatching, String>, exact: bool) -> CheckCase {
    let res = match res {
        Ok(r) => r,
        Err(e) => return CheckCase::unresolved(id, params(inst), e),
    };
    let valid = is_ordered_matching(&inst.host, p, &res.matching);
    let got = res.matching.len() as i64;
    let enough = if exact { got == res.promised } else { got >= res.promised };
    let ok = res.guaranteed && valid && enough;
    let failing: Vec<&str> = res
        .preconditions
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.condition.as_str())
        .collect();
    CheckCase::judge(
        id,
        params(inst),
        ok,
        json!({"copies": got, "promised": res.promised, "valid": valid, "hypotheses_hold": res.guaranteed}),
        || json!({"copies": res.matching.copies, "failing_hypotheses": failing, "host": hyperex_core::io::to_text(inst.host.host())}),
    )
}

/// Instances meeting the greedy lemma's hypotheses: `V1` degrees at least
/// `α n` and `m <= α n / (s − s1)`.
fn greedy_corpus(count: usize, n0: usize, seed: u64) -> Vec<Instance> {
    let mut rng = corpus_rng(seed, "greedy-matching");
    (0..count)
        .map(|index| {
            let sizes = SIZES[index % SIZES.len()];
            let alpha = [0.3, 0.4, 0.5][rng.gen_range(0..3)];
            let n = n0 + rng.gen_range(0..=50);
            let m_max = ((alpha * n as f64) / sizes[1] as f64).floor() as usize;
            let m = rng.gen_range((m_max / 2).max(1)..=m_max.max(1));
            let d_min = (alpha * n as f64).ceil() as usize;
            let degrees: Vec<usize> = (0..m).map(|_| rng.gen_range(d_min..=n)).collect();
            let host = host(m, n, &degrees, &mut rng);
            Instance {
                index,
                sizes,
                alpha,
                host,
                l: Vec::new(),
            }
        })
        .collect()
}

/// Planted instances meeting the absorbing lemma's hypotheses: small `m`,
/// `V1` degrees at least `α n`, and a block `L` of near-complete vertices
/// of the required size.
fn absorption_corpus(count: usize, n0: usize, seed: u64) -> Vec<Instance> {
    let mut rng = corpus_rng(seed, "absorption-matching");
    (0..count)
        .map(|index| {
            let sizes = SIZES[index % SIZES.len()];
            let (s1, s) = (sizes[0], sizes[0] + sizes[1]);
            let alpha = [0.5, 0.8][rng.gen_range(0..2)];
            let n = n0 + rng.gen_range(0..=50);
            let m_max = ((alpha * n as f64) / (8 * (s - s1)) as f64).floor() as usize;
            let m = rng.gen_range((m_max / 2).max(1)..=m_max.max(1));
            let l_floor = (5.0 * (s1 * (s1 - 1)) as f64 / alpha).min((s1 - 1) as f64 / s1 as f64 * m as f64);
            let l_size = rng.gen_range((l_floor.ceil() as usize).min(m)..=m);
            let d_min = (alpha * n as f64).ceil() as usize;
            let d_high = (n - ((alpha * n as f64) / (2 * s1) as f64).floor() as usize).max(d_min);
            let degrees: Vec<usize> = (0..m)
                .map(|v| if v < l_size { rng.gen_range(d_high..=n) } else { rng.gen_range(d_min..=n) })
                .collect();
            let host = host(m, n, &degrees, &mut rng);
            Instance {
                index,
                sizes,
                alpha,
                host,
                l: (0..l_size as u32).collect(),
            }
        })
        .collect()
}

/// Greedy matchings reach `⌊m/s1 − 4/α⌋` copies and absorbing matchings
/// exactly `⌊m/s1⌋`, each copy verified as an ordered copy.
pub fn lemma_cases(greedy: usize, absorption: usize, n: usize, seed: u64) -> Vec<CheckCase> {
    let mut cases: Vec<CheckCase> = greedy_corpus(greedy, n, seed)
        .par_iter()
        .map(|inst| {
            let p = complete_multipartite(&inst.sizes).expect("valid sizes");
            let res = greedy_semibipartite_matching(&inst.host, &p, inst.alpha, DEFAULT_SIZE_FLOOR).map_err(|e| e.to_string());
            judge("greedy-matching-guarantee", inst, &p, res, false)
        })
        .collect();
    let absorbed: Vec<CheckCase> = absorption_corpus(absorption, n, seed)
        .par_iter()
        .map(|inst| {
            let p = complete_multipartite(&inst.sizes).expect("valid sizes");
            let res = absorption_matching(&inst.host, &p, inst.alpha, &inst.l, DEFAULT_SIZE_FLOOR).map_err(|e| e.to_string());
            judge("absorption-matching-guarantee", inst, &p, res, true)
        })
        .collect();
    cases.extend(absorbed);
    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::Verdict;

    #[test]
    fn small_corpus_passes() {
        for c in lemma_cases(8, 8, 200, 3) {
            assert_eq!(c.verdict, Verdict::Pass, "{} {}", c.params, c.evidence["promised"]);
        }
    }
}
