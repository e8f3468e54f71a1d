//! Mechanical verification of the bounds and constructions against exact
//! search, with deterministic JSON and CSV reports.
//!
//! A suite is a list of [`config::Group`]s run in order against a working
//! [`store::Store`]: the loaded ex-table extended by whatever searches the
//! groups need. Every check yields [`case::CheckCase`]s with a verdict of
//! pass, fail, vacuous or unresolved. Random corpora are seeded per corpus,
//! and parallel work is merged in a fixed order, so the report does not
//! depend on the thread count.

pub mod case;
pub mod checks;
pub mod config;
pub mod report;
pub mod scan;
pub mod store;

use std::time::Duration;

use hyperex_bounds::ExTable;
use hyperex_search::{Budget, SearchOptions};

pub use case::{CheckCase, Verdict};
pub use config::{Group, PackingLimit, SuiteConfig};
pub use report::{Summary, SuiteReport};
use store::Store;

/// Execution settings that do not affect the report.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub threads: usize,
    /// A wall-clock cap per search. Results under a wall cap depend on the
    /// machine, so reports are only reproducible without one.
    pub wall_cap: Option<Duration>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            threads: 1,
            wall_cap: None,
        }
    }
}

#[derive(Debug)]
pub enum Error {
    ThreadPool(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::ThreadPool(e) => write!(f, "cannot build thread pool: {e}"),
        }
    }
}

impl std::error::Error for Error {}

pub(crate) fn search_options(node_cap: Option<u64>, wall_cap: Option<Duration>) -> SearchOptions {
    SearchOptions::with_budget(Budget { node_cap, wall_cap })
}

fn run_group(store: &mut Store, group: &Group, seed: u64) -> Vec<CheckCase> {
    use checks::*;
    match group {
        Group::ErdosGallai { n_min, n_max, t_max } => reproduce::erdos_gallai_cases(store, *n_min, *n_max, *t_max),
        Group::Turan { n_min, n_max } => reproduce::turan_cases(store, *n_min, *n_max),
        Group::Constructions {
            patterns,
            n_max,
            n_max_hyper,
            t_max,
            limits,
        } => constructions::construction_cases(store, patterns, *n_max, *n_max_hyper, *t_max, limits),
        Group::Kst {
            patterns,
            n_max,
            n_max_hyper,
        } => upper::kst_cases(store, patterns, *n_max, *n_max_hyper),
        Group::Zarankiewicz {
            patterns,
            mn_max,
            mn_max_hyper,
        } => upper::zarankiewicz_cases(store, patterns, *mn_max, *mn_max_hyper),
        Group::StarTuran {
            patterns,
            n_max,
            n_max_hyper,
        } => upper::star_cases(store, patterns, *n_max, *n_max_hyper),
        Group::MaxDegree {
            patterns,
            n_max,
            t_max,
            random_hosts,
        } => upper::maxdeg_cases(store, patterns, *n_max, *t_max, *random_hosts, seed),
        Group::Windows {
            patterns,
            suspensions,
            n_max,
            n_max_hyper,
            t_max,
        } => upper::window_cases(store, patterns, suspensions, *n_max, *n_max_hyper, *t_max),
        Group::OracleEx {
            instances,
            n_max_graph,
            n_max_3graph,
        } => oracle::oracle_ex_cases(*instances, *n_max_graph, *n_max_3graph, seed),
        Group::OracleMatching { hosts, n_max } => oracle::oracle_matching_cases(*hosts, *n_max, seed),
        Group::Facts { n_max, r_max, steps } => facts::inequality_cases(*n_max, *r_max, *steps),
        Group::Monotone => facts::monotone_cases(&store.table),
        Group::Lemmas { greedy, absorption, n } => lemmas::lemma_cases(*greedy, *absorption, *n, seed),
    }
}

/// Runs every group of `config` against `table` on a pool of
/// `run.threads` workers. Returns the report and the working table.
pub fn run_suite(config: &SuiteConfig, table: ExTable, run: &RunOptions) -> Result<(SuiteReport, ExTable), Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(run.threads.max(1))
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let mut store = Store::new(table, search_options(config.node_cap, run.wall_cap));
    let cases = pool.install(|| {
        let mut cases = Vec::new();
        for group in &config.groups {
            cases.extend(run_group(&mut store, group, config.seed));
        }
        cases
    });
    Ok((SuiteReport::new(config.clone(), cases), store.table))
}
