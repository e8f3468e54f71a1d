//! Edge include/exclude branch-and-bound over a fixed list of allowed edges.

use rayon::prelude::*;

use crate::mask::MaskGraph;
use crate::outcome::Meter;
use crate::property::Property;

struct Task {
    graph: MaskGraph,
    start: usize,
}

struct Search<'a, P: ?Sized> {
    prop: &'a P,
    allowed: &'a [u64],
    meter: &'a Meter,
    best: u64,
    witness: Option<Vec<u64>>,
}

impl<P: Property + ?Sized> Search<'_, P> {
    fn go(&mut self, g: &mut MaskGraph, i: usize) {
        if !self.meter.tick() {
            return;
        }
        if (g.edge_count() + self.allowed.len() - i) as u64 <= self.best {
            return;
        }
        if i == self.allowed.len() {
            self.best = g.edge_count() as u64;
            self.witness = Some(g.edges().to_vec());
            return;
        }
        let e = self.allowed[i];
        g.push(e);
        if self.prop.admits_edge(g, e) {
            self.go(g, i + 1);
        }
        g.pop();
        self.go(g, i + 1);
    }
}

fn split<P: Property + ?Sized>(prop: &P, allowed: &[u64], g: &mut MaskGraph, i: usize, depth: usize, out: &mut Vec<Task>) {
    if depth == 0 || i == allowed.len() {
        out.push(Task {
            graph: g.clone(),
            start: i,
        });
        return;
    }
    let e = allowed[i];
    g.push(e);
    if prop.admits_edge(g, e) {
        split(prop, allowed, g, i + 1, depth - 1, out);
    }
    g.pop();
    split(prop, allowed, g, i + 1, depth - 1, out);
}

/// The densest admissible host using only `allowed` edges, if it beats
/// `lower`. The first `split_depth` decisions are expanded up front and the
/// subtrees searched in parallel, each from `lower`, so the node count and
/// the witness do not depend on the thread count.
pub(crate) fn branch_bound<P: Property + ?Sized>(
    prop: &P,
    n: usize,
    allowed: &[u64],
    lower: u64,
    split_depth: usize,
    meter: &Meter,
) -> Option<(u64, Vec<u64>)> {
    let mut root = MaskGraph::new(n, prop.r()).expect("caller validated the order");
    let mut tasks = Vec::new();
    split(prop, allowed, &mut root, 0, split_depth, &mut tasks);
    let results: Vec<(u64, Option<Vec<u64>>)> = tasks
        .into_par_iter()
        .map(|mut t| {
            let mut s = Search {
                prop,
                allowed,
                meter,
                best: lower,
                witness: None,
            };
            s.go(&mut t.graph, t.start);
            (s.best, s.witness)
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
