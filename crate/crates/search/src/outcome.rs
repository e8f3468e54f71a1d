//! Search results, budgets and node metering.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use hyperex_core::io::to_text;
use hyperex_core::Hypergraph;
use serde::{Serialize, Serializer};

/// Which engine produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Nothing to search: the complete host is admissible.
    Trivial,
    /// Vertex-by-vertex extension with isomorph rejection.
    VertexExtension,
    /// Edge include/exclude branch-and-bound.
    BranchBound,
    /// Interchangeable rows with nonincreasing neighbourhoods.
    RowSearch,
    /// Every edge subset.
    Enumerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Exact,
    /// A budget ran out; `optimum` is attained by the witness but may not be
    /// maximum.
    Lower,
}

/// Node and wall-clock caps. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub node_cap: Option<u64>,
    pub wall_cap: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(cap: u64) -> Self {
        Budget {
            node_cap: Some(cap),
            wall_cap: None,
        }
    }
}

fn witness_text<S: Serializer>(h: &Hypergraph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_text(h))
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub optimum: u64,
    #[serde(serialize_with = "witness_text")]
    pub witness: Hypergraph,
    pub nodes: u64,
    /// Wall time; left out of serialized reports so they stay reproducible.
    #[serde(skip)]
    pub duration: Duration,
    pub method: Method,
    pub status: SearchStatus,
}

/// Shared node counter and budget check.
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    stopped: AtomicBool,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            stopped: AtomicBool::new(budget.node_cap == Some(0)),
        }
    }

    /// Counts one node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.node_cap.is_some_and(|cap| n > cap)
            || (n % 4096 == 0 && self.budget.wall_cap.is_some_and(|w| self.start.elapsed() > w))
        {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}
