//! Classical values reproduced by search.

use hyperex_bounds::formulas::erdos_gallai;
use hyperex_core::construct::{complete, turan_graph};
use hyperex_core::solve::{contains, is_free};
use hyperex_search::packing_family_id;
use num_bigint::BigInt;
use serde_json::json;

use super::{table_value, TableValue};
use crate::case::CheckCase;
use crate::store::{Job, Store};

/// `ex(n, (t+1)K2) = max{C(2t+1, 2), C(n,2) − C(n−t, 2)}` for
/// `2(t+1) <= n`.
pub fn erdos_gallai_cases(store: &mut Store, n_min: usize, n_max: usize, t_max: usize) -> Vec<CheckCase> {
    let jobs = (0..=t_max)
        .map(|t| Job::Packing {
            pattern: "K2".into(),
            t,
            n_max,
        })
        .collect();
    let mut cases = store.run(jobs);
    let k2 = complete(2, 2);
    for t in 0..=t_max {
        let id = packing_family_id("K2", t);
        for n in n_min..=n_max {
            if 2 * (t + 1) > n {
                continue;
            }
            let params = json!({"n": n, "t": t});
            let expected = erdos_gallai(n, t).floor.expect("closed form is an integer");
            let case = match table_value(store, &id, n, |h| is_free(h, &k2, t).unwrap_or(false)) {
                TableValue::Found { value, witness_ok } => CheckCase::judge(
                    "erdos-gallai",
                    params,
                    witness_ok && expected == BigInt::from(value),
                    json!({"exact": value, "formula": expected.to_string(), "witness_verified": witness_ok}),
                    || json!({"n": n, "t": t, "exact": value, "formula": expected.to_string()}),
                ),
                TableValue::Missing => CheckCase::unresolved("erdos-gallai", params, format!("no exact value for {id} at n = {n}")),
            };
            cases.push(case);
        }
    }
    cases
}

/// `ex(n, K3) = ⌊n²/4⌋` and `ex(n, K4) = |T(n, 3)|`.
pub fn turan_cases(store: &mut Store, n_min: usize, n_max: usize) -> Vec<CheckCase> {
    let jobs = ["K3", "K4"]
        .iter()
        .map(|f| Job::Plain {
            family: f.to_string(),
            n_max,
        })
        .collect();
    let mut cases = store.run(jobs);
    for (id, check, k) in [("K3", "turan-k3", 3usize), ("K4", "turan-k4", 4)] {
        let clique = complete(k, 2);
        for n in n_min..=n_max {
            let expected = if k == 3 {
                (n * n / 4) as u64
            } else {
                turan_graph(n, 3).expect("three parts").edge_count() as u64
            };
            let params = json!({"n": n});
            let case = match table_value(store, id, n, |h| !contains(h, &clique).unwrap_or(true)) {
                TableValue::Found { value, witness_ok } => CheckCase::judge(
                    check,
                    params,
                    witness_ok && value == expected,
                    json!({"exact": value, "formula": expected, "witness_verified": witness_ok}),
                    || json!({"n": n, "exact": value, "formula": expected}),
                ),
                TableValue::Missing => CheckCase::unresolved(check, params, format!("no exact value for {id} at n = {n}")),
            };
            cases.push(case);
        }
    }
    cases
}
