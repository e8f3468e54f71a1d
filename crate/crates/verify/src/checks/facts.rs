//! Binomial inequality suites and table audits.

use std::collections::BTreeMap;

use hyperex_bounds::facts::{
    binomial_ratio, falling_power, join_profile_monotone, pair_shift, reciprocal_power, root_bernoulli, FactRanges,
    FactReport,
};
use hyperex_bounds::{ExTable, Variant};
use hyperex_core::pattern::parse_family;
use serde_json::{json, Value};

use crate::case::CheckCase;

fn fact_case(rep: FactReport, params: Value) -> CheckCase {
    let evidence = json!({"statement": rep.statement, "checked": rep.checked, "undecided": rep.undecided});
    let cex = json!({"failures": rep.failures, "tuples": rep.counterexamples});
    CheckCase::judge(&rep.id, params, rep.passed() && rep.checked > 0, evidence, || cex)
}

/// The integer and real inequality suites over `n <= n_max`, `r <= r_max`.
pub fn inequality_cases(n_max: i64, r_max: i64, steps: i64) -> Vec<CheckCase> {
    let ranges = FactRanges { max_n: n_max, max_r: r_max };
    let params = json!({"n_max": n_max, "r_max": r_max});
    let stepped = json!({"n_max": n_max, "r_max": r_max, "steps": steps});
    vec![
        fact_case(binomial_ratio(ranges), params.clone()),
        fact_case(falling_power(ranges), params.clone()),
        fact_case(pair_shift(ranges), params),
        fact_case(reciprocal_power(ranges, steps), stepped.clone()),
        fact_case(root_bernoulli(ranges, steps), stepped),
    ]
}

/// Per exact plain column: the join profile is monotone, and `ex` itself is
/// nondecreasing in `n` once `n` reaches the largest member order. Below
/// that, members with isolated vertices can make `ex` drop: the family
/// `T3[4]` contains a 3-edge plus an isolated vertex, so one edge is allowed
/// on three vertices and none on four.
pub fn monotone_cases(table: &ExTable) -> Vec<CheckCase> {
    let mut cases = Vec::new();
    for (family, variant) in table.columns() {
        if variant != Variant::Plain {
            continue;
        }
        let col: BTreeMap<usize, u64> = table.column(&family, Variant::Plain);
        let mut single = ExTable::new();
        for rec in table.records().filter(|r| r.family == family && r.variant == Variant::Plain) {
            if single.upsert(rec.clone()).is_err() {
                continue;
            }
        }
        let params = json!({"family": family, "n_max": col.keys().next_back()});
        cases.push(fact_case(join_profile_monotone(&single), params.clone()));
        let from = parse_family(&family).map_or(0, |f| f.members().iter().map(|m| m.n()).max().unwrap_or(0));
        let drop = col
            .iter()
            .zip(col.iter().skip(1))
            .find(|((a, va), (b, vb))| **a >= from && *b == &(**a + 1) && vb < va)
            .map(|((a, va), (b, vb))| json!({"n": a, "ex": va, "next_n": b, "next_ex": vb}));
        cases.push(CheckCase::judge(
            "ex-monotone-n",
            params,
            drop.is_none(),
            json!({"values": col.values().collect::<Vec<_>>()}),
            || drop.clone().unwrap_or_default(),
        ));
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperex_bounds::{ExRecord, ExStatus};

    #[test]
    fn small_suites_pass() {
        let cases = inequality_cases(12, 3, 8);
        assert_eq!(cases.len(), 5);
        assert!(cases.iter().all(|c| c.verdict == crate::case::Verdict::Pass), "{cases:?}");
    }

    #[test]
    fn monotone_flags_a_drop() {
        let mut t = ExTable::new();
        for (n, v) in [(3usize, 0u64), (4, 5), (5, 3)] {
            t.upsert(ExRecord {
                family: "K3".into(),
                variant: Variant::Plain,
                n,
                value: v,
                status: ExStatus::Exact,
                witness: None,
            })
            .unwrap();
        }
        let cases = monotone_cases(&t);
        assert_eq!(cases.len(), 2);
        assert!(cases.iter().all(|c| c.is_fail()));
    }

    #[test]
    fn drops_below_member_order_are_allowed() {
        let mut t = ExTable::new();
        for (n, v) in [(3usize, 1u64), (4, 0), (5, 0)] {
            t.upsert(ExRecord {
                family: "T3[4]".into(),
                variant: Variant::Plain,
                n,
                value: v,
                status: ExStatus::Exact,
                witness: None,
            })
            .unwrap();
        }
        let cases = monotone_cases(&t);
        let mono = cases.iter().find(|c| c.check_id == "ex-monotone-n").unwrap();
        assert_eq!(mono.verdict, crate::case::Verdict::Pass);
    }
}
