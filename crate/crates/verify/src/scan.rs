//! The construction picture at one order: for each `t`, the best of the
//! three construction sizes against the exact packing number.

use hyperex_bounds::formulas::{g1, g2, g3};
use hyperex_bounds::{ExTable, PatternParams, ReportStatus};
use hyperex_core::pattern::parse_pattern;
use hyperex_search::packing_family_id;
use num_bigint::BigInt;
use serde::Serialize;

use crate::store::{Job, Store};
use crate::{search_options, CheckCase, RunOptions};

fn decimal<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub t: usize,
    /// The largest construction size whose formula could be evaluated.
    #[serde(serialize_with = "decimal")]
    pub bound: Option<BigInt>,
    pub exact: Option<u64>,
    /// Which construction attains `bound`; ties list every attaining one.
    pub construction: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Scan {
    pub pattern: String,
    pub n: usize,
    pub rows: Vec<ScanRow>,
    /// Search failures, if any.
    pub issues: Vec<CheckCase>,
}

impl Scan {
    /// Columns `t,bound,exact,construction`; unknown values are empty.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["t", "bound", "exact", "construction"]).expect("in-memory write");
        for r in &self.rows {
            let bound = r.bound.as_ref().map(ToString::to_string).unwrap_or_default();
            let exact = r.exact.map(|v| v.to_string()).unwrap_or_default();
            w.write_record([r.t.to_string(), bound, exact, r.construction.clone()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
    }
}

#[derive(Debug)]
pub enum ScanError {
    Pattern(String),
    ThreadPool(String),
}

impl std::fmt::Display for ScanError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScanError::Pattern(e) => write!(f, "bad pattern: {e}"),
            ScanError::ThreadPool(e) => write!(f, "cannot build thread pool: {e}"),
        }
    }
}

impl std::error::Error for ScanError {}

/// Rows for `t` in `0..=t_max` at order `n`. Exact values come from the
/// table or, when `search` is set, from fresh packing searches.
pub fn scan(
    pattern: &str,
    n: usize,
    t_max: usize,
    table: ExTable,
    search: bool,
    node_cap: Option<u64>,
    run: &RunOptions,
) -> Result<(Scan, ExTable), ScanError> {
    let p = parse_pattern(pattern).map_err(|e| ScanError::Pattern(e.to_string()))?;
    let params = PatternParams::of(p.name.clone(), &p.graph).map_err(|e| ScanError::Pattern(e.to_string()))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(run.threads.max(1))
        .build()
        .map_err(|e| ScanError::ThreadPool(e.to_string()))?;
    let mut store = Store::new(table, search_options(node_cap, run.wall_cap));
    let mut issues = Vec::new();
    if search {
        let mut jobs = vec![Job::Plain {
            family: params.name.clone(),
            n_max: n,
        }];
        if params.reduced_family() != params.name {
            jobs.push(Job::Plain {
                family: params.reduced_family(),
                n_max: n,
            });
        }
        jobs.extend((0..=t_max).map(|t| Job::Packing {
            pattern: params.name.clone(),
            t,
            n_max: n,
        }));
        issues = pool.install(|| store.run(jobs));
    }
    let rows = (0..=t_max)
        .map(|t| {
            let gs: Vec<(&str, BigInt)> = [
                ("g1", g1(n, t, &params, &store.table)),
                ("g2", g2(n, t, &params, &store.table)),
                ("g3", g3(n, t, &params, &store.table)),
            ]
            .into_iter()
            .filter(|(_, rep)| rep.status == ReportStatus::Exact)
            .filter_map(|(name, rep)| Some((name, rep.floor?)))
            .collect();
            let bound = gs.iter().map(|(_, v)| v.clone()).max();
            let construction = gs
                .iter()
                .filter(|(_, v)| Some(v) == bound.as_ref())
                .map(|(name, _)| *name)
                .collect::<Vec<_>>()
                .join("+");
            let exact = store.exact_plain(&packing_family_id(&params.name, t), n).map(|r| r.value);
            ScanRow {
                t,
                bound,
                exact,
                construction,
            }
        })
        .collect();
    Ok((
        Scan {
            pattern: params.name,
            n,
            rows,
            issues,
        },
        store.table,
    ))
}
