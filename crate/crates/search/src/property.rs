//! Hereditary host properties with incremental edge checks.

use hyperex_core::{Hypergraph, PartitionedPattern, PatternFamily};

use crate::error::{invalid, Result};
use crate::mask::{has_disjoint, CompiledPattern, CopySearch, MaskGraph};

/// A property closed under deleting edges and vertices and under
/// relabelling (relabellings fixing the designated classes, for
/// [`OrderedFree`]).
pub trait Property: Sync {
    fn r(&self) -> usize;

    /// `host` has the property once its most recent edge `edge` is removed;
    /// whether it still has it with the edge.
    fn admits_edge(&self, host: &MaskGraph, edge: u64) -> bool;

    /// Whether some host on `n` vertices fails the property. When false,
    /// the complete host is optimal.
    fn can_fail(&self, n: usize) -> bool;

    /// Whether adding an isolated vertex can break the property, which
    /// happens when a pattern has isolated vertices. Vertex extension then
    /// has to check each grown host in full, not only the new edges.
    fn growth_sensitive(&self) -> bool {
        false
    }

    /// Full check, adding edges one at a time.
    fn admits(&self, host: &Hypergraph) -> Result<bool> {
        let mut g = MaskGraph::new(host.n(), host.r())?;
        for e in host.edge_masks()? {
            g.push(e);
            if !self.admits_edge(&g, e) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// No copy of any member of a family.
#[derive(Debug)]
pub struct FamilyFree {
    r: usize,
    members: Vec<CompiledPattern>,
}

impl FamilyFree {
    pub fn new(family: &PatternFamily) -> Result<Self> {
        Ok(FamilyFree {
            r: family.r(),
            members: family.members().iter().map(CompiledPattern::new).collect::<Result<_>>()?,
        })
    }
}

impl Property for FamilyFree {
    fn r(&self) -> usize {
        self.r
    }

    fn admits_edge(&self, host: &MaskGraph, edge: u64) -> bool {
        self.members.iter().all(|f| !CopySearch::new(f, None).exists_through(host, edge))
    }

    fn can_fail(&self, n: usize) -> bool {
        self.members.iter().any(|f| f.order() <= n)
    }

    fn growth_sensitive(&self) -> bool {
        self.members.iter().any(CompiledPattern::has_isolated)
    }
}

/// At most `t` vertex-disjoint copies of a pattern, i.e. `(t+1)F`-free.
#[derive(Debug)]
pub struct PackingFree {
    pattern: CompiledPattern,
    t: usize,
}

impl PackingFree {
    pub fn new(f: &Hypergraph, t: usize) -> Result<Self> {
        Ok(PackingFree {
            pattern: CompiledPattern::new(f)?,
            t,
        })
    }
}

impl Property for PackingFree {
    fn r(&self) -> usize {
        self.pattern.r()
    }

    fn admits_edge(&self, host: &MaskGraph, edge: u64) -> bool {
        let search = CopySearch::new(&self.pattern, None);
        if self.t == 0 {
            return !search.exists_through(host, edge);
        }
        let through = search.vertex_sets_through(host, edge);
        if through.is_empty() {
            return true;
        }
        let all = search.vertex_sets(host);
        // t + 1 disjoint copies must include one through the new edge
        through.iter().all(|&c| {
            let rest: Vec<u64> = all.iter().copied().filter(|&o| o & c == 0).collect();
            !has_disjoint(&rest, self.t)
        })
    }

    fn can_fail(&self, n: usize) -> bool {
        self.pattern.order() * (self.t + 1) <= n
    }

    fn growth_sensitive(&self) -> bool {
        self.pattern.has_isolated()
    }
}

/// No ordered copy of a partitioned pattern: the first part lands in the
/// host class `v1`, the other parts outside it.
#[derive(Debug)]
pub struct OrderedFree {
    pattern: CompiledPattern,
    allowed: Vec<u64>,
    w1: usize,
    v1_size: usize,
    v2_size: usize,
}

impl OrderedFree {
    pub fn new(p: &PartitionedPattern, n: usize, v1: u64) -> Result<Self> {
        if n > 64 {
            return Err(invalid("ordered hosts need at most 64 vertices"));
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut allowed = vec![all & !v1; p.total()];
        for &w in &p.parts()[0] {
            allowed[w as usize] = v1;
        }
        Ok(OrderedFree {
            pattern: CompiledPattern::new(p.base())?,
            allowed,
            w1: p.parts()[0].len(),
            v1_size: v1.count_ones() as usize,
            v2_size: n - v1.count_ones() as usize,
        })
    }
}

impl Property for OrderedFree {
    fn r(&self) -> usize {
        self.pattern.r()
    }

    fn admits_edge(&self, host: &MaskGraph, edge: u64) -> bool {
        !CopySearch::new(&self.pattern, Some(&self.allowed)).exists_through(host, edge)
    }

    fn can_fail(&self, _n: usize) -> bool {
        self.w1 <= self.v1_size && self.pattern.order() - self.w1 <= self.v2_size
    }
}

/// The property every host has; drives plain isomorph-free generation.
#[derive(Debug)]
pub struct Anything {
    pub r: usize,
}

impl Property for Anything {
    fn r(&self) -> usize {
        self.r
    }

    fn admits_edge(&self, _host: &MaskGraph, _edge: u64) -> bool {
        true
    }

    fn can_fail(&self, _n: usize) -> bool {
        false
    }
}
