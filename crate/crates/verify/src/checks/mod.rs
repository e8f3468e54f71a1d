//! The check groups.

pub mod constructions;
pub mod facts;
pub mod lemmas;
pub mod oracle;
pub mod reproduce;
pub mod upper;

use hyperex_core::Hypergraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::store::Store;

pub(crate) enum TableValue {
    Found { value: u64, witness_ok: bool },
    Missing,
}

/// The exact plain value of `family` at `n` with its witness re-verified:
/// right order, right size and `admissible`.
pub(crate) fn table_value(store: &Store, family: &str, n: usize, admissible: impl Fn(&Hypergraph) -> bool) -> TableValue {
    let Some(rec) = store.exact_plain(family, n) else {
        return TableValue::Missing;
    };
    let witness_ok = match rec.witness_graph() {
        Some(Ok(w)) => w.n() == n && w.edge_count() as u64 == rec.value && admissible(&w),
        _ => false,
    };
    TableValue::Found {
        value: rec.value,
        witness_ok,
    }
}

/// A generator for one named corpus, independent of every other corpus
/// drawn from the same seed.
pub(crate) fn corpus_rng(seed: u64, corpus: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in corpus.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}
