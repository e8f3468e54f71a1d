//! Search over interchangeable row vertices.
//!
//! Rows are extra vertices attached to a fixed base host. Each row picks a
//! subset of `choices` (masks of `(r-1)`-sets of base vertices) and gains
//! one edge per chosen set; rows share no edges. Rows are interchangeable,
//! so their subsets are taken in nonincreasing order. A subset rejected for
//! one row stays rejected for every later row, which bounds what the
//! remaining rows can add.

use hyperex_core::Hypergraph;
use rayon::prelude::*;

use crate::mask::MaskGraph;
use crate::outcome::Meter;
use crate::property::Property;

pub(crate) struct RowProblem<'a, P: ?Sized> {
    pub prop: &'a P,
    pub base: &'a Hypergraph,
    pub rows: usize,
    pub choices: Vec<u64>,
}

struct Search<'a, 'b, P: ?Sized> {
    problem: &'a RowProblem<'b, P>,
    meter: &'a Meter,
    best: u64,
    witness: Option<Vec<u64>>,
}

impl<P: Property + ?Sized> RowProblem<'_, P> {
    fn row_edges(&self, row: usize, s: u64) -> impl Iterator<Item = u64> + '_ {
        let v = 1u64 << (self.base.n() + row);
        (0..self.choices.len()).filter(move |j| s >> j & 1 == 1).map(move |j| self.choices[j] | v)
    }

    /// Adds the row's edges; on rejection everything added is removed again.
    fn try_row(&self, g: &mut MaskGraph, row: usize, s: u64) -> bool {
        let mut added = 0;
        for e in self.row_edges(row, s) {
            g.push(e);
            added += 1;
            if !self.prop.admits_edge(g, e) {
                for _ in 0..added {
                    g.pop();
                }
                return false;
            }
        }
        true
    }

    fn drop_row(&self, g: &mut MaskGraph, s: u64) {
        for _ in 0..s.count_ones() {
            g.pop();
        }
    }

    /// Subsets `<= prev` accepted for `row`, in decreasing order.
    fn admissible(&self, g: &mut MaskGraph, row: usize, prev: u64) -> Vec<u64> {
        let mut ok = Vec::new();
        let mut bad: Vec<u64> = Vec::new();
        for s in (0..=prev).rev() {
            if bad.iter().any(|&b| s & b == b) {
                continue;
            }
            if self.try_row(g, row, s) {
                self.drop_row(g, s);
                ok.push(s);
            } else {
                bad.push(s);
            }
        }
        ok
    }
}

impl<P: Property + ?Sized> Search<'_, '_, P> {
    fn go(&mut self, g: &mut MaskGraph, row: usize, prev: u64) {
        if !self.meter.tick() {
            return;
        }
        let p = self.problem;
        if row == p.rows {
            if g.edge_count() as u64 > self.best {
                self.best = g.edge_count() as u64;
                self.witness = Some(g.edges().to_vec());
            }
            return;
        }
        let list = p.admissible(g, row, prev);
        // suffix[j] = largest subset size among list[j..]
        let mut suffix = vec![0u64; list.len() + 1];
        for j in (0..list.len()).rev() {
            suffix[j] = suffix[j + 1].max(list[j].count_ones() as u64);
        }
        let left = (p.rows - row) as u64;
        let cur = g.edge_count() as u64;
        if cur + left * suffix[0] <= self.best {
            return;
        }
        for (j, &s) in list.iter().enumerate() {
            if cur + s.count_ones() as u64 + (left - 1) * suffix[j] <= self.best {
                continue;
            }
            p.try_row(g, row, s);
            self.go(g, row + 1, s);
            p.drop_row(g, s);
            if self.meter.stopped() {
                return;
            }
        }
    }
}

/// The densest host above `lower` edges: base vertices first, then rows.
pub(crate) fn row_search<P: Property + ?Sized>(problem: &RowProblem<'_, P>, lower: u64, meter: &Meter) -> Option<(u64, Vec<u64>)> {
    let n = problem.base.n() + problem.rows;
    let mut g = MaskGraph::from_hypergraph_with(problem.base, n).expect("caller validated the order");
    // patterns with isolated vertices can already embed in the padded base
    if problem.prop.growth_sensitive() && !problem.prop.admits(&problem.base.with_isolated(problem.rows)).unwrap_or(false) {
        return None;
    }
    if problem.rows == 0 {
        let e = g.edge_count() as u64;
        return (e > lower).then(|| (e, g.edges().to_vec()));
    }
    let full = if problem.choices.len() == 64 {
        u64::MAX
    } else {
        (1u64 << problem.choices.len()) - 1
    };
    let firsts = problem.admissible(&mut g, 0, full);
    let results: Vec<(u64, Option<Vec<u64>>)> = firsts
        .into_par_iter()
        .map(|s| {
            let mut g = g.clone();
            problem.try_row(&mut g, 0, s);
            let mut search = Search {
                problem,
                meter,
                best: lower,
                witness: None,
            };
            search.go(&mut g, 1, s);
            (search.best, search.witness)
        })
        .collect();
    let mut best: Option<(u64, Vec<u64>)> = None;
    for (v, w) in results {
        if let Some(w) = w {
            if best.as_ref().map_or(true, |(b, _)| v > *b) {
                best = Some((v, w));
            }
        }
    }
    best
}
