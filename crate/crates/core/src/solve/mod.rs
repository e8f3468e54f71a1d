//! Exact pattern solvers: containment, matching numbers, ordered copies
//! and rainbow matchings.

pub mod embed;
pub mod matching;
pub mod ordered;
pub mod rainbow;

pub use embed::{find_embedding, for_each_embedding, is_embedding, Constraints, HostIndex};
pub use matching::{contains, contains_family, contains_with_witness, copy_sets, is_free, matching_number, Matching, MatchingNumber};
pub use ordered::{
    absorption_matching, greedy_semibipartite_matching, high_degree_set, is_ordered_matching, ordered_contains,
    ordered_copy, LemmaMatching, Precondition, SemibipartiteHost, DEFAULT_SIZE_FLOOR,
};
pub use rainbow::rainbow_matching;
