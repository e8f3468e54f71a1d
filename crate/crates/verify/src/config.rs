//! Suite configuration: which check groups run, over which parameters.

use serde::{Deserialize, Serialize};

/// A packing search limit: `ex(k, (t+1)F)` is searched for `k <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingLimit {
    pub pattern: String,
    pub t: usize,
    pub n_max: usize,
}

/// A group of related checks. Groups run in the listed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "kebab-case")]
pub enum Group {
    /// `ex(n, (t+1)K2)` against the closed form.
    ErdosGallai { n_min: usize, n_max: usize, t_max: usize },
    /// `ex(n, K3) = ⌊n²/4⌋` and `ex(n, K4) = |T(n, 3)|`.
    Turan { n_min: usize, n_max: usize },
    /// Construction sizes and freeness, lower-bound dominance and the
    /// `B`-construction, for each pattern, `n <= n_max` (`n_max_hyper` for
    /// `r >= 3`), `t <= t_max`.
    /// Packing numbers are searched up to the listed limits and read from
    /// the table beyond them.
    Constructions {
        patterns: Vec<String>,
        n_max: usize,
        n_max_hyper: usize,
        t_max: usize,
        limits: Vec<PackingLimit>,
    },
    /// Kővári–Sós–Turán type bounds against exact Turán numbers.
    Kst {
        patterns: Vec<String>,
        n_max: usize,
        n_max_hyper: usize,
    },
    /// Zarankiewicz bounds; `patterns` are part sizes in order, the first
    /// part sitting in the class of size `m`.
    Zarankiewicz {
        patterns: Vec<Vec<usize>>,
        mn_max: usize,
        mn_max_hyper: usize,
    },
    /// The star-host bound, plus `ex_star <= ex` and `ex_star(n, n) = ex`.
    StarTuran {
        patterns: Vec<String>,
        n_max: usize,
        n_max_hyper: usize,
    },
    /// `m·t·Δ + ex(n − mt, F)` against search witnesses and random
    /// `(t+1)F`-free hosts.
    MaxDegree {
        patterns: Vec<String>,
        n_max: usize,
        t_max: usize,
        random_hosts: usize,
    },
    /// The windows of the range theorems; the bound is compared with the
    /// exact value wherever the window contains `t`.
    Windows {
        patterns: Vec<String>,
        suspensions: Vec<String>,
        n_max: usize,
        n_max_hyper: usize,
        t_max: usize,
    },
    /// Branch-and-bound and vertex extension against all-subsets
    /// enumeration on random families.
    OracleEx { instances: usize, n_max_graph: usize, n_max_3graph: usize },
    /// The matching solver against a copy-enumeration oracle.
    OracleMatching { hosts: usize, n_max: usize },
    /// The binomial inequality suites.
    Facts { n_max: i64, r_max: i64, steps: i64 },
    /// Monotonicity of the join profile on every exact plain column.
    Monotone,
    /// Greedy and absorbing ordered matchings on large random hosts.
    Lemmas { greedy: usize, absorption: usize, n: usize },
}

/// A verification run: search budget, seed for random corpora and the
/// groups to run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub node_cap: Option<u64>,
    #[serde(default)]
    pub groups: Vec<Group>,
}

impl SuiteConfig {
    pub fn empty() -> Self {
        SuiteConfig {
            seed: 0,
            node_cap: None,
            groups: Vec::new(),
        }
    }

    /// Limits chosen so that the whole matrix runs in well under a minute
    /// on one core.
    pub fn default_limits() -> Vec<PackingLimit> {
        let lim = |p: &str, t, n_max| PackingLimit {
            pattern: p.to_string(),
            t,
            n_max,
        };
        vec![
            lim("K2", 1, 13),
            lim("K2", 2, 13),
            lim("K3", 1, 13),
            lim("K3", 2, 11),
            lim("P3", 1, 13),
            lim("P3", 2, 9),
            lim("K2,2", 1, 11),
            lim("K2,2", 2, 11),
            lim("E3", 1, 7),
            lim("T3", 1, 6),
        ]
    }
}

impl Default for SuiteConfig {
    /// The full matrix.
    fn default() -> Self {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        SuiteConfig {
            seed: 0,
            node_cap: None,
            groups: vec![
                Group::ErdosGallai {
                    n_min: 4,
                    n_max: 9,
                    t_max: 3,
                },
                Group::Turan { n_min: 3, n_max: 9 },
                Group::Constructions {
                    patterns: s(&["K2", "K3", "P3", "K2,2", "E3", "T3"]),
                    n_max: 13,
                    n_max_hyper: 7,
                    t_max: 2,
                    limits: Self::default_limits(),
                },
                Group::Kst {
                    patterns: s(&["K1,2", "K2,2", "K2,3", "K3,3", "K1,1,2", "K1,2,2", "K2,2,2"]),
                    n_max: 10,
                    n_max_hyper: 6,
                },
                Group::Zarankiewicz {
                    patterns: vec![vec![1, 2], vec![2, 2], vec![2, 3], vec![3, 2], vec![1, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
                    mn_max: 6,
                    mn_max_hyper: 4,
                },
                Group::StarTuran {
                    patterns: s(&["K1,2", "K2,2", "K2,3", "K1,1,2", "K1,2,2"]),
                    n_max: 10,
                    n_max_hyper: 6,
                },
                Group::MaxDegree {
                    patterns: s(&["K2", "K3", "P3", "K2,2"]),
                    n_max: 10,
                    t_max: 2,
                    random_hosts: 8,
                },
                Group::Windows {
                    patterns: s(&["K2,2", "K2,3", "K1,2,2"]),
                    suspensions: s(&["hat(P3)", "hat(K2)"]),
                    n_max: 10,
                    n_max_hyper: 6,
                    t_max: 2,
                },
                Group::OracleEx {
                    instances: 60,
                    n_max_graph: 6,
                    n_max_3graph: 5,
                },
                Group::OracleMatching { hosts: 240, n_max: 10 },
                Group::Facts {
                    n_max: 60,
                    r_max: 5,
                    steps: 60,
                },
                Group::Monotone,
                Group::Lemmas {
                    greedy: 120,
                    absorption: 100,
                    n: 200,
                },
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = SuiteConfig::default();
        let text = serde_json::to_string_pretty(&c).unwrap();
        let back: SuiteConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        let empty: SuiteConfig = serde_json::from_str("{}").unwrap();
        assert_eq!(empty, SuiteConfig::empty());
    }
}
