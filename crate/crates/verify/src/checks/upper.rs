//! Upper bounds against exact values, and the windows of the range
//! theorems.

use std::collections::BTreeMap;

use hyperex_bounds::formulas::{
    erdos_kst, interval1_bound, interval1_t_max_suspension, interval2_bound, interval2_graph_bound, interval3_bound,
    interval3_graph_bound, kst, star_turan, trivial_maxdeg, zarankiewicz_graph, zarankiewicz_hypergraph,
};
use hyperex_bounds::{BoundReport, ExKey, ExStatus, PatternParams, ReportStatus};
use hyperex_core::io::to_text;
use hyperex_core::pattern::parse_pattern;
use hyperex_core::solve::{contains, is_free, ordered_contains, SemibipartiteHost};
use hyperex_core::Hypergraph;
use hyperex_search::{ordered_multipartite, packing_family_id, zarankiewicz_family_id};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{corpus_rng, table_value, TableValue};
use crate::case::CheckCase;
use crate::store::{Job, Store};

struct Multipartite {
    name: String,
    graph: Hypergraph,
    sizes: Vec<usize>,
}

fn multipartite(name: &str) -> Result<Multipartite, String> {
    let p = parse_pattern(name).map_err(|e| e.to_string())?;
    let part = p.partition.ok_or_else(|| format!("{name} is not complete multipartite"))?;
    Ok(Multipartite {
        name: p.name,
        graph: p.graph,
        sizes: part.sizes(),
    })
}

/// Compares an upper-bound report with an exact value whose witness has
/// been re-verified.
fn dominance(id: &str, params: Value, rep: &BoundReport, found: TableValue, what: &str) -> CheckCase {
    let TableValue::Found { value, witness_ok } = found else {
        return CheckCase::unresolved(id, params, format!("no exact value for {what}"));
    };
    let Some(v) = rep.value.as_ref() else {
        return CheckCase::unresolved(id, params, format!("bound undefined: {:?}", rep.notes));
    };
    let ok = witness_ok && v.dominates(&BigInt::from(value));
    CheckCase::judge(
        id,
        params,
        ok,
        json!({"exact": value, "bound": v, "witness_verified": witness_ok}),
        || json!({"exact": value, "bound": v}),
    )
}

/// The plain or variant record at `key`, re-verified like [`table_value`].
fn keyed_value(store: &Store, key: &ExKey, order: usize, admissible: impl Fn(&Hypergraph) -> bool) -> TableValue {
    let Some(rec) = store.exact(key) else {
        return TableValue::Missing;
    };
    let witness_ok = match rec.witness_graph() {
        Some(Ok(w)) => w.n() == order && w.edge_count() as u64 == rec.value && admissible(&w),
        _ => false,
    };
    TableValue::Found {
        value: rec.value,
        witness_ok,
    }
}

/// Kővári–Sós–Turán for graphs and Erdős' bound for `r >= 3`.
pub fn kst_cases(store: &mut Store, patterns: &[String], n_max: usize, n_max_hyper: usize) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    let mut pats = Vec::new();
    for name in patterns {
        match multipartite(name) {
            Ok(p) => pats.push(p),
            Err(e) => cases.push(CheckCase::unresolved("kst-upper", json!({"F": name}), e)),
        }
    }
    let cap = |p: &Multipartite| if p.sizes.len() == 2 { n_max } else { n_max_hyper };
    cases.extend(store.run(
        pats.iter()
            .map(|p| Job::Plain {
                family: p.name.clone(),
                n_max: cap(p),
            })
            .collect(),
    ));
    for p in &pats {
        for n in 1..=cap(p) {
            let params = json!({"F": p.name, "n": n});
            let found = table_value(store, &p.name, n, |h| !contains(h, &p.graph).unwrap_or(true));
            let (id, rep) = if p.sizes.len() == 2 {
                ("kst-upper", kst(n, p.sizes[0], p.sizes[1]))
            } else {
                ("erdos-kst-upper", erdos_kst(n, &p.sizes))
            };
            cases.push(dominance(id, params, &rep, found, &format!("{} at n = {n}", p.name)));
        }
    }
    cases
}

/// Zarankiewicz bounds for every `1 <= m, n <= cap`.
pub fn zarankiewicz_cases(store: &mut Store, patterns: &[Vec<usize>], mn_max: usize, mn_max_hyper: usize) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    let mut jobs = Vec::new();
    let mut pats = Vec::new();
    for sizes in patterns {
        let mut sizes = sizes.clone();
        if sizes.len() >= 3 {
            // the hypergraph bound places the smallest part in V1
            sizes.sort_unstable();
        }
        let Ok(p) = ordered_multipartite(&sizes) else {
            cases.push(CheckCase::unresolved("zarankiewicz-upper", json!({"sizes": sizes}), "bad part sizes"));
            continue;
        };
        let cap = if sizes.len() == 2 { mn_max } else { mn_max_hyper };
        for m in 1..=cap {
            for n in 1..=cap {
                jobs.push(Job::Zar { sizes: sizes.clone(), m, n });
            }
        }
        pats.push((sizes, p, cap));
    }
    cases.extend(store.run(jobs));
    for (sizes, p, cap) in &pats {
        let family = zarankiewicz_family_id(p);
        for m in 1..=*cap {
            let v1: Vec<u32> = (0..m as u32).collect();
            for n in 1..=*cap {
                let params = json!({"pattern": family, "m": m, "n": n});
                let free = |h: &Hypergraph| {
                    SemibipartiteHost::new(h.clone(), &v1)
                        .and_then(|s| ordered_contains(&s, p))
                        .is_ok_and(|c| !c)
                };
                let found = keyed_value(store, &ExKey::zar(family.clone(), m, n), m + n, free);
                let (id, rep) = if sizes.len() == 2 {
                    ("zarankiewicz-graph-upper", zarankiewicz_graph(m, n, sizes[0], sizes[1]))
                } else {
                    ("zarankiewicz-hypergraph-upper", zarankiewicz_hypergraph(m, n, sizes))
                };
                cases.push(dominance(id, params, &rep, found, &format!("Z({m}, {n}, {family})")));
            }
        }
    }
    cases
}

/// The star-host bound, `ex_star(m, n) <= ex(n)` and `ex_star(n, n) = ex(n)`.
pub fn star_cases(store: &mut Store, patterns: &[String], n_max: usize, n_max_hyper: usize) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    let mut pats = Vec::new();
    for name in patterns {
        match multipartite(name) {
            Ok(p) => pats.push(p),
            Err(e) => cases.push(CheckCase::unresolved("star-turan-upper", json!({"F": name}), e)),
        }
    }
    let cap = |p: &Multipartite| if p.sizes.len() == 2 { n_max } else { n_max_hyper };
    let mut jobs = Vec::new();
    for p in &pats {
        jobs.push(Job::Plain {
            family: p.name.clone(),
            n_max: cap(p),
        });
        for n in 1..=cap(p) {
            for m in 1..=n {
                jobs.push(Job::Star {
                    family: p.name.clone(),
                    m,
                    n,
                });
            }
        }
    }
    cases.extend(store.run(jobs));
    for p in &pats {
        for n in 1..=cap(p) {
            let plain = store.exact_plain(&p.name, n).map(|r| r.value);
            for m in 1..=n {
                let params = json!({"F": p.name, "m": m, "n": n});
                let star_ok = |h: &Hypergraph| h.edges().all(|e| (e[0] as usize) < m) && !contains(h, &p.graph).unwrap_or(true);
                let found = keyed_value(store, &ExKey::star(p.name.clone(), m, n), n, star_ok);
                let star = match &found {
                    TableValue::Found { value, .. } => Some(*value),
                    TableValue::Missing => None,
                };
                let rep = star_turan(m, n, &p.sizes);
                cases.push(dominance("star-turan-upper", params.clone(), &rep, found, &format!("ex_star({m}, {n}, {})", p.name)));
                let case = match (star, plain) {
                    (Some(s), Some(e)) => {
                        let ok = s <= e && (m < n || s == e);
                        CheckCase::judge("star-ex-consistency", params, ok, json!({"star": s, "plain": e}), || {
                            json!({"star": s, "plain": e})
                        })
                    }
                    _ => CheckCase::unresolved("star-ex-consistency", params, "missing exact values"),
                };
                cases.push(case);
            }
        }
    }
    cases
}

/// A maximal `(t+1)f`-free host on `n` vertices from a random edge order.
fn random_free_host(f: &Hypergraph, t: usize, n: usize, rng: &mut impl Rng) -> Hypergraph {
    let mut all = hyperex_core::pattern::all_r_subsets(n, f.r());
    all.shuffle(rng);
    let mut h = Hypergraph::empty(n, f.r());
    for e in all {
        let Ok(bigger) = h.with_edges(&[e]) else { continue };
        if is_free(&bigger, f, t).unwrap_or(false) {
            h = bigger;
        }
    }
    h
}

/// `m·t·Δ(H) + ex(n − mt, F) >= |H|` over stored packing witnesses and
/// random maximal `(t+1)F`-free hosts.
pub fn maxdeg_cases(store: &mut Store, patterns: &[String], n_max: usize, t_max: usize, random_hosts: usize, seed: u64) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    let mut pats = Vec::new();
    for name in patterns {
        match parse_pattern(name).map_err(|e| e.to_string()).and_then(|p| {
            let params = PatternParams::of(p.name.clone(), &p.graph).map_err(|e| e.to_string())?;
            Ok((params, p.graph))
        }) {
            Ok(x) => pats.push(x),
            Err(e) => cases.push(CheckCase::unresolved("maxdeg-upper", json!({"F": name}), e)),
        }
    }
    cases.extend(store.run(
        pats.iter()
            .map(|(p, _)| Job::Plain {
                family: p.name.clone(),
                n_max,
            })
            .collect(),
    ));
    // hosts: (pattern index, t, source, host)
    let mut hosts: Vec<(usize, usize, String, Hypergraph)> = Vec::new();
    let mut rng = corpus_rng(seed, "maxdeg");
    for (i, (p, f)) in pats.iter().enumerate() {
        for t in 1..=t_max {
            let id = packing_family_id(&p.name, t);
            for n in p.m * t..=n_max {
                if let Some(Some(Ok(w))) = store.table.best(&ExKey::plain(id.clone(), n), ExStatus::Lower).map(|r| r.witness_graph()) {
                    hosts.push((i, t, format!("table {id} n={n}"), w));
                }
            }
            let lo = p.m * t;
            if lo > n_max {
                continue;
            }
            for k in 0..random_hosts {
                let n = rng.gen_range(lo..=n_max);
                let h = random_free_host(f, t, n, &mut rng);
                hosts.push((i, t, format!("random #{k}"), h));
            }
        }
    }
    let store_ref = &*store;
    let judged: Vec<CheckCase> = hosts
        .par_iter()
        .map(|(i, t, source, h)| {
            let (p, _) = &pats[*i];
            let params = json!({"F": p.name, "t": t, "n": h.n(), "host": source});
            let rep = trivial_maxdeg(h.n(), *t, h.max_degree(), p, &store_ref.table);
            match (&rep.value, rep.status) {
                (Some(v), ReportStatus::Exact) => {
                    let ok = v.dominates(&BigInt::from(h.edge_count()));
                    CheckCase::judge(
                        "maxdeg-upper",
                        params,
                        ok,
                        json!({"edges": h.edge_count(), "max_degree": h.max_degree(), "bound": v}),
                        || json!({"host": to_text(h)}),
                    )
                }
                _ => CheckCase::unresolved("maxdeg-upper", params, format!("bound not exact: {:?}", rep.missing)),
            }
        })
        .collect();
    cases.extend(judged);
    cases
}

fn hypotheses_hold(rep: &BoundReport) -> bool {
    rep.preconditions.iter().filter(|p| p.condition != "t in window").all(|p| p.holds)
}

/// Judges one range-theorem report: vacuous outside its window or
/// hypotheses, otherwise the bound must dominate the exact packing number.
fn window_case(id: &str, rep: &BoundReport, store: &Store, name: &str, f: &Hypergraph, n: usize, t: usize) -> CheckCase {
    let window = rep.params.get("window").cloned().unwrap_or(Value::Null);
    let params = json!({"F": name, "n": n, "t": t});
    let failing: Vec<&str> = rep
        .preconditions
        .iter()
        .filter(|p| !p.holds)
        .map(|p| p.condition.as_str())
        .collect();
    if !hypotheses_hold(rep) || window["contains_t"] != json!(true) {
        return CheckCase::vacuous(id, params, json!({"window": window, "failing": failing}));
    }
    let found = table_value(store, &packing_family_id(name, t), n, |h| is_free(h, f, t).unwrap_or(false));
    dominance(id, params, rep, found, &format!("{} at n = {n}", packing_family_id(name, t)))
}

fn is_bipartite_graph(g: &Hypergraph) -> bool {
    if g.r() != 2 {
        return false;
    }
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    for s in 0..g.n() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = colour[v].expect("coloured on push");
            for u in g.co_neighbours(v).iter() {
                match colour[u] {
                    None => {
                        colour[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(d) if d == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Window bookkeeping for the range theorems. Multipartite `patterns` go
/// through the second and third ranges; `suspensions` (`hat(F)` with `F` a
/// bipartite graph, so of density zero) through the first.
pub fn window_cases(
    store: &mut Store,
    patterns: &[String],
    suspensions: &[String],
    n_max: usize,
    n_max_hyper: usize,
    t_max: usize,
) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    let mut pats = Vec::new();
    for name in patterns {
        match multipartite(name).and_then(|p| Ok((PatternParams::of(p.name.clone(), &p.graph).map_err(|e| e.to_string())?, p))) {
            Ok(x) => pats.push(x),
            Err(e) => cases.push(CheckCase::unresolved("interval-window", json!({"F": name}), e)),
        }
    }
    let mut hats = Vec::new();
    for name in suspensions {
        let parsed = name
            .strip_prefix("hat(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| format!("{name} is not a suspension"))
            .and_then(|inner| parse_pattern(inner).map_err(|e| e.to_string()))
            .and_then(|base| {
                if !is_bipartite_graph(&base.graph) {
                    return Err(format!("density of {} is not known to be zero", base.name));
                }
                let hat = parse_pattern(name).map_err(|e| e.to_string())?;
                let params = PatternParams::of(hat.name.clone(), &hat.graph).map_err(|e| e.to_string())?;
                Ok((params, hat.graph))
            });
        match parsed {
            Ok(x) => hats.push(x),
            Err(e) => cases.push(CheckCase::unresolved("interval1-upper", json!({"F": name}), e)),
        }
    }
    let cap = |r: usize| if r == 2 { n_max } else { n_max_hyper };
    let mut jobs = Vec::new();
    for (params, p) in &pats {
        let c = cap(params.r);
        jobs.push(Job::Plain {
            family: p.name.clone(),
            n_max: c,
        });
        if params.r == 2 {
            jobs.push(Job::Plain {
                family: format!("{}[{}]", p.name, p.sizes[1] + 1),
                n_max: c,
            });
        }
    }
    for (params, _) in &hats {
        jobs.push(Job::Plain {
            family: params.name.clone(),
            n_max: cap(params.r),
        });
    }
    cases.extend(store.run(jobs));

    // evaluate every report, then search the packing numbers that some
    // nonempty window needs
    let mut reports: Vec<(String, BoundReport, usize, usize, usize)> = Vec::new();
    for (k, (params, p)) in pats.iter().enumerate() {
        for n in 1..=cap(params.r) {
            for t in 1..=t_max {
                let mut reps = vec![
                    ("interval2-upper", interval2_bound(n, t, params, &p.sizes, &store.table)),
                    ("interval3-upper", interval3_bound(n, t, params, &p.sizes, &store.table)),
                ];
                if params.r == 2 {
                    reps.push(("interval2-graph-upper", interval2_graph_bound(n, t, params, &p.sizes, &store.table)));
                    reps.push(("interval3-graph-upper", interval3_graph_bound(n, t, params, &p.sizes, &store.table)));
                }
                for (id, rep) in reps {
                    reports.push((id.to_string(), rep, k, n, t));
                }
            }
        }
    }
    let zero = BigRational::from_integer(0.into());
    let mut hat_reports: Vec<(BoundReport, BoundReport, usize, usize, usize)> = Vec::new();
    for (k, (params, _)) in hats.iter().enumerate() {
        for n in 2..=cap(params.r) {
            let Ok(tmax) = interval1_t_max_suspension(params, &zero, n, &store.table) else {
                continue;
            };
            for t in 0..=t_max {
                hat_reports.push((tmax.clone(), interval1_bound(n, t, params, &store.table), k, n, t));
            }
        }
    }
    let mut need: BTreeMap<(String, usize), usize> = BTreeMap::new();
    for (_, rep, k, n, t) in &reports {
        if hypotheses_hold(rep) && rep.params.get("window").is_some_and(|w| w["contains_t"] == json!(true)) {
            let e = need.entry((pats[*k].1.name.clone(), *t)).or_default();
            *e = (*e).max(*n);
        }
    }
    for (tmax, _, k, n, t) in &hat_reports {
        if tmax.value.as_ref().is_some_and(|v| v.approx() >= *t as f64) {
            let e = need.entry((hats[*k].0.name.clone(), *t)).or_default();
            *e = (*e).max(*n);
        }
    }
    cases.extend(store.run(
        need.into_iter()
            .map(|((pattern, t), n_max)| Job::Packing { pattern, t, n_max })
            .collect(),
    ));
    for (id, rep, k, n, t) in &reports {
        let (_, p) = &pats[*k];
        cases.push(window_case(id, rep, store, &p.name, &p.graph, *n, *t));
    }
    for (tmax, bound, k, n, t) in &hat_reports {
        let (params, f) = &hats[*k];
        let case_params = json!({"F": params.name, "n": n, "t": t});
        let t_hi = tmax.value.as_ref().map(|v| v.approx());
        let closed_form_ok = tmax
            .preconditions
            .iter()
            .filter(|p| p.condition == "substitution reproduces the closed form")
            .all(|p| p.holds);
        let evidence = json!({"t_max": t_hi, "closed_form_agrees": closed_form_ok});
        let inside = t_hi.is_some_and(|h| h >= *t as f64);
        let case = if !closed_form_ok {
            CheckCase::fail("interval1-upper", case_params, evidence, json!({"report": tmax}))
        } else if !inside {
            CheckCase::vacuous("interval1-upper", case_params, evidence)
        } else {
            let found = table_value(store, &packing_family_id(&params.name, *t), *n, |h| is_free(h, f, *t).unwrap_or(false));
            dominance("interval1-upper", case_params, bound, found, &format!("{} at n = {n}", packing_family_id(&params.name, *t)))
        };
        cases.push(case);
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_test() {
        assert!(is_bipartite_graph(&hyperex_core::construct::cycle(4).unwrap()));
        assert!(!is_bipartite_graph(&hyperex_core::construct::cycle(5).unwrap()));
        assert!(is_bipartite_graph(&hyperex_core::construct::path(3)));
    }
}
