//! The working ex-table: a loaded table extended by deterministic searches.

use std::collections::BTreeMap;

use hyperex_bounds::{ExKey, ExRecord, ExTable, Variant};
use hyperex_core::pattern::{parse_family, parse_pattern};
use hyperex_search::{
    ex_column, ex_table_update, exact_star_ex, exact_zarankiewicz, ordered_multipartite, packing_column,
    packing_family_id, zarankiewicz_family_id, SearchOptions, SearchOutcome, SearchStatus,
};
use rayon::prelude::*;
use serde_json::json;

use crate::case::CheckCase;

/// One search producing table records.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Job {
    /// `ex(k, family)` for `k <= n_max`.
    Plain { family: String, n_max: usize },
    /// `ex(k, (t+1)F)` for `k <= n_max`.
    Packing { pattern: String, t: usize, n_max: usize },
    /// `ex_star(m, n, family)`.
    Star { family: String, m: usize, n: usize },
    /// `Z(m, n, P)` with parts in the given order.
    Zar { sizes: Vec<usize>, m: usize, n: usize },
}

type Found = Vec<(ExKey, SearchOutcome)>;

impl Job {
    fn run(&self, opts: &SearchOptions) -> Result<Found, String> {
        let err = |e: &dyn std::fmt::Display| e.to_string();
        match self {
            Job::Plain { family, n_max } => {
                let fam = parse_family(family).map_err(|e| err(&e))?;
                let col = ex_column(*n_max, &fam, opts).map_err(|e| err(&e))?;
                Ok(col.into_iter().enumerate().map(|(k, o)| (ExKey::plain(family.clone(), k), o)).collect())
            }
            Job::Packing { pattern, t, n_max } => {
                let p = parse_pattern(pattern).map_err(|e| err(&e))?;
                let id = packing_family_id(&p.name, *t);
                let col = packing_column(*n_max, &p.graph, *t, opts).map_err(|e| err(&e))?;
                Ok(col.into_iter().enumerate().map(|(k, o)| (ExKey::plain(id.clone(), k), o)).collect())
            }
            Job::Star { family, m, n } => {
                let fam = parse_family(family).map_err(|e| err(&e))?;
                let o = exact_star_ex(*m, *n, &fam, opts).map_err(|e| err(&e))?;
                Ok(vec![(ExKey::star(family.clone(), *m, *n), o)])
            }
            Job::Zar { sizes, m, n } => {
                let p = ordered_multipartite(sizes).map_err(|e| err(&e))?;
                let o = exact_zarankiewicz(*m, *n, &p, opts).map_err(|e| err(&e))?;
                Ok(vec![(ExKey::zar(zarankiewicz_family_id(&p), *m, *n), o)])
            }
        }
    }

    fn describe(&self) -> serde_json::Value {
        match self {
            Job::Plain { family, n_max } => json!({"family": family, "n_max": n_max}),
            Job::Packing { pattern, t, n_max } => json!({"pattern": pattern, "t": t, "n_max": n_max}),
            Job::Star { family, m, n } => json!({"family": family, "m": m, "n": n}),
            Job::Zar { sizes, m, n } => json!({"sizes": sizes, "m": m, "n": n}),
        }
    }
}

/// The table plus the searches already merged into it.
pub struct Store {
    pub table: ExTable,
    loaded: ExTable,
    opts: SearchOptions,
    plain_done: BTreeMap<String, usize>,
    packing_done: BTreeMap<(String, usize), usize>,
    single_done: Vec<Job>,
}

impl Store {
    pub fn new(table: ExTable, opts: SearchOptions) -> Self {
        Store {
            loaded: table.clone(),
            table,
            opts,
            plain_done: BTreeMap::new(),
            packing_done: BTreeMap::new(),
            single_done: Vec::new(),
        }
    }

    pub fn opts(&self) -> &SearchOptions {
        &self.opts
    }

    fn is_done(&self, job: &Job) -> bool {
        match job {
            Job::Plain { family, n_max } => self.plain_done.get(family).is_some_and(|d| d >= n_max),
            Job::Packing { pattern, t, n_max } => self.packing_done.get(&(pattern.clone(), *t)).is_some_and(|d| d >= n_max),
            _ => self.single_done.contains(job),
        }
    }

    fn mark(&mut self, job: &Job) {
        match job {
            Job::Plain { family, n_max } => {
                let d = self.plain_done.entry(family.clone()).or_default();
                *d = (*d).max(*n_max);
            }
            Job::Packing { pattern, t, n_max } => {
                let d = self.packing_done.entry((pattern.clone(), *t)).or_default();
                *d = (*d).max(*n_max);
            }
            _ => self.single_done.push(job.clone()),
        }
    }

    /// Runs the jobs not yet done in parallel and merges the results in job
    /// order. Returns a `table-agreement` case for every job whose exact
    /// results overlap the loaded table, and an unresolved `search` case for
    /// every job that errors.
    pub fn run(&mut self, mut jobs: Vec<Job>) -> Vec<CheckCase> {
        jobs.sort();
        jobs.dedup();
        jobs.retain(|j| !self.is_done(j));
        let opts = self.opts;
        let results: Vec<Result<Found, String>> = jobs.par_iter().map(|j| j.run(&opts)).collect();
        let mut cases = Vec::new();
        for (job, res) in jobs.iter().zip(results) {
            self.mark(job);
            let found = match res {
                Ok(f) => f,
                Err(e) => {
                    cases.push(CheckCase::unresolved("search", job.describe(), e));
                    continue;
                }
            };
            let mut compared = 0usize;
            let mut mismatch = None;
            for (key, outcome) in &found {
                if outcome.status != SearchStatus::Exact {
                    continue;
                }
                if let Some(prior) = self.loaded.exact(key) {
                    compared += 1;
                    if prior.value != outcome.optimum && mismatch.is_none() {
                        mismatch = Some(json!({
                            "key": key.to_string(),
                            "table": prior.value,
                            "search": outcome.optimum,
                            "search_witness": hyperex_core::io::to_text(&outcome.witness),
                        }));
                    }
                }
            }
            if compared > 0 {
                let ok = mismatch.is_none();
                cases.push(CheckCase::judge(
                    "table-agreement",
                    job.describe(),
                    ok,
                    json!({"compared": compared}),
                    || mismatch.clone().unwrap_or_default(),
                ));
            }
            if mismatch.is_some() {
                continue;
            }
            for (key, outcome) in &found {
                if let Err(e) = ex_table_update(&mut self.table, &key.family, key.variant, key.n, outcome) {
                    cases.push(CheckCase::unresolved("search", job.describe(), e.to_string()));
                }
            }
        }
        cases
    }

    pub fn exact(&self, key: &ExKey) -> Option<&ExRecord> {
        self.table.exact(key)
    }

    pub fn exact_plain(&self, family: &str, n: usize) -> Option<&ExRecord> {
        self.table.exact(&ExKey::plain(family, n))
    }

    pub fn exact_star(&self, family: &str, m: usize, n: usize) -> Option<&ExRecord> {
        self.table.exact(&ExKey {
            family: family.to_string(),
            variant: Variant::Star(m),
            n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_and_skips_repeats() {
        let mut s = Store::new(ExTable::new(), SearchOptions::default());
        let cases = s.run(vec![Job::Plain {
            family: "K3".into(),
            n_max: 5,
        }]);
        assert!(cases.is_empty());
        assert_eq!(s.exact_plain("K3", 5).unwrap().value, 6);
        assert!(s.is_done(&Job::Plain {
            family: "K3".into(),
            n_max: 4
        }));
        s.run(vec![Job::Packing {
            pattern: "K2".into(),
            t: 1,
            n_max: 5,
        }]);
        assert_eq!(s.exact_plain("2xK2", 5).unwrap().value, 4);
    }

    #[test]
    fn reports_disagreement_with_loaded_table() {
        let mut t = ExTable::new();
        t.upsert(ExRecord {
            family: "K3".into(),
            variant: Variant::Plain,
            n: 4,
            value: 5,
            status: hyperex_bounds::ExStatus::Exact,
            witness: None,
        })
        .unwrap();
        let mut s = Store::new(t, SearchOptions::default());
        let cases = s.run(vec![Job::Plain {
            family: "K3".into(),
            n_max: 4,
        }]);
        assert_eq!(cases.len(), 1);
        assert!(cases[0].is_fail());
        assert_eq!(cases[0].evidence["counterexample"]["search"], 4);
        // the bad record is kept rather than overwritten
        assert_eq!(s.exact_plain("K3", 4).unwrap().value, 5);
    }
}
