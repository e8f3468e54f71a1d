//! Closed-form bounds. Every function returns a [`BoundReport`](crate::BoundReport) echoing its
//! parameters and listing the hypotheses of the statement it comes from.
//!
//! `C(a, b)` is zero for `a < b` or `a < 0`, and `ex(k, ·)` is zero for
//! `k < 0`, so formulas stay defined at the edges of their ranges.

mod construction;
mod interval;
mod turan;

pub use construction::{
    erdos_gallai, erdos_triangle_t_max, g1, g2, g3, i_independent_lower, moon_first_n, moon_t_max, turan_ratio_lower,
};
pub use interval::{
    interval1_bound, interval1_t_max, interval1_t_max_suspension, interval2_bound, interval2_graph_bound,
    interval3_bound, interval3_graph_bound, suspended_triangle_t_max, Window,
};
pub use turan::{
    erdos_kst, kst, lu_szekely, lu_szekely_complete, star_turan, star_turan_as_stated, trivial_maxdeg, zarankiewicz_graph,
    zarankiewicz_hypergraph,
};

use hyperex_core::pattern::parse_pattern;
use hyperex_core::structure::covering_number;
use hyperex_core::Hypergraph;
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::exact::binom;

/// The numbers of a forbidden pattern that the formulas use.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternParams {
    pub name: String,
    pub r: usize,
    /// `v(F)`.
    pub m: usize,
    /// Covering number `τ(F)`.
    pub tau: usize,
    /// `|F|`.
    pub edges: usize,
    /// Whether the vertex set is connected through edges.
    pub connected: bool,
}

impl PatternParams {
    pub fn of(name: impl Into<String>, f: &Hypergraph) -> Result<Self> {
        Ok(PatternParams {
            name: name.into(),
            r: f.r(),
            m: f.n(),
            tau: covering_number(f)?,
            edges: f.edge_count(),
            connected: is_connected(f),
        })
    }

    pub fn parse(name: &str) -> Result<Self> {
        let p = parse_pattern(name)?;
        Self::of(p.name, &p.graph)
    }

    /// Family id of `F[m − τ + 1]`.
    pub fn reduced_family(&self) -> String {
        format!("{}[{}]", self.name, self.m - self.tau + 1)
    }
}

fn is_connected(f: &Hypergraph) -> bool {
    let n = f.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in f.co_neighbours(v).iter() {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `ex(k, 𝓕)` when it needs no search: zero for `k < 0`, and `C(k, r)`
/// when `k` is below the smallest member's order.
pub(crate) fn trivial_ex(k: i64, r: usize, min_vertices: usize) -> Option<BigInt> {
    if k < 0 {
        Some(BigInt::from(0))
    } else if (k as usize) < min_vertices {
        Some(binom(k, r as i64))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params() {
        let p = PatternParams::parse("K2,2").unwrap();
        assert_eq!((p.r, p.m, p.tau, p.edges, p.connected), (2, 4, 2, 4, true));
        assert_eq!(p.reduced_family(), "K2,2[3]");
        let p = PatternParams::parse("2xK2").unwrap();
        assert!(!p.connected);
        assert_eq!(PatternParams::parse("K3").unwrap().reduced_family(), "K3[2]");
    }

    #[test]
    fn trivial_values() {
        assert_eq!(trivial_ex(-3, 2, 3), Some(BigInt::from(0)));
        assert_eq!(trivial_ex(2, 2, 3), Some(BigInt::from(1)));
        assert_eq!(trivial_ex(3, 2, 3), None);
    }
}
