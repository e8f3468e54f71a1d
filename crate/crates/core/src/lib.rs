//! Uniform hypergraphs with the constructions, structural statistics,
//! canonical forms and exact pattern solvers used by the extremal toolkit.

pub mod bits;
pub mod canon;
pub mod combinatorics;
pub mod construct;
mod error;
pub mod hypergraph;
pub mod io;
pub mod pattern;
pub mod solve;
pub mod structure;

pub use bits::BitSet;
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use pattern::{NamedPattern, PartitionedPattern, PatternFamily};
