//! Suite runs on small configurations: exit codes, report files, seeded
//! determinism and table cross-checks.

use hyperex_bounds::{ExRecord, ExStatus, ExTable, Variant};
use hyperex_verify::scan::scan;
use hyperex_verify::{run_suite, Group, RunOptions, SuiteConfig, SuiteReport, Verdict};

fn config(groups: Vec<Group>) -> SuiteConfig {
    let mut c = SuiteConfig::empty();
    c.groups = groups;
    c
}

fn run(c: &SuiteConfig, table: ExTable, threads: usize) -> SuiteReport {
    let opts = RunOptions {
        threads,
        ..Default::default()
    };
    run_suite(c, table, &opts).unwrap().0
}

fn record(family: &str, n: usize, value: u64) -> ExRecord {
    ExRecord {
        family: family.into(),
        variant: Variant::Plain,
        n,
        value,
        status: ExStatus::Exact,
        witness: None,
    }
}

#[test]
fn empty_matrix_exits_zero() {
    let report = run(&config(Vec::new()), ExTable::new(), 1);
    assert_eq!(report.summary.total, 0);
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.to_csv().lines().count(), 1);
}

#[test]
fn a_failing_check_exits_one() {
    // a column that drops from 5 to 3 between consecutive orders
    let mut table = ExTable::new();
    for (n, v) in [(3, 1), (4, 5), (5, 3)] {
        table.upsert(record("K3", n, v)).unwrap();
    }
    let report = run(&config(vec![Group::Monotone]), table, 1);
    assert_eq!(report.exit_code(), 1);
    let failing: Vec<_> = report.cases.iter().filter(|c| c.verdict == Verdict::Fail).collect();
    assert!(failing.iter().any(|c| c.check_id == "ex-monotone-n"));
    assert!(failing.iter().all(|c| c.evidence.get("counterexample").is_some()));
}

#[test]
fn wrong_table_values_are_reported() {
    let mut table = ExTable::new();
    table.upsert(record("K3", 6, 10)).unwrap();
    let report = run(&config(vec![Group::Turan { n_min: 3, n_max: 7 }]), table, 1);
    let agreement: Vec<_> = report.cases_for("table-agreement").collect();
    assert!(!agreement.is_empty());
    assert!(agreement.iter().any(|c| c.verdict == Verdict::Fail));
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn reproductions_pass_on_a_small_matrix() {
    let c = config(vec![
        Group::ErdosGallai {
            n_min: 4,
            n_max: 8,
            t_max: 2,
        },
        Group::Turan { n_min: 3, n_max: 7 },
    ]);
    let report = run(&c, ExTable::new(), 1);
    assert_eq!(report.exit_code(), 0);
    assert!(report.cases_for("erdos-gallai").count() > 0);
    assert!(report.cases_for("turan-k4").all(|c| c.verdict == Verdict::Pass));
}

#[test]
fn reports_do_not_depend_on_threads() {
    let c = config(vec![
        Group::OracleEx {
            instances: 12,
            n_max_graph: 5,
            n_max_3graph: 4,
        },
        Group::OracleMatching { hosts: 30, n_max: 8 },
        Group::Lemmas {
            greedy: 8,
            absorption: 8,
            n: 200,
        },
        Group::Turan { n_min: 3, n_max: 7 },
    ]);
    let a = run(&c, ExTable::new(), 1);
    let b = run(&c, ExTable::new(), 4);
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.exit_code(), 0);
}

#[test]
fn seeds_change_the_random_corpora() {
    let mut c = config(vec![Group::OracleMatching { hosts: 20, n_max: 8 }]);
    let a = run(&c, ExTable::new(), 1);
    c.seed = 7;
    let b = run(&c, ExTable::new(), 1);
    assert_ne!(a.to_json(), b.to_json());
}

#[test]
fn report_files_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let report = run(&config(vec![Group::Turan { n_min: 3, n_max: 5 }]), ExTable::new(), 1);
    report.write(dir.path()).unwrap();
    let json = std::fs::read_to_string(dir.path().join("report.json")).unwrap();
    let csv = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert_eq!(json, report.to_json());
    assert!(csv.starts_with("check-id,verdict,params,evidence"));
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["summary"]["total"], report.summary.total);
}

#[test]
fn scan_rows_cover_every_t() {
    let opts = RunOptions::default();
    let (s, _) = scan("K2,2", 10, 2, ExTable::new(), true, None, &opts).unwrap();
    assert_eq!(s.rows.len(), 3);
    let csv = s.to_csv();
    assert!(csv.starts_with("t,bound,exact,construction"));
    // ex(10, C4) = 16
    assert_eq!(s.rows[0].exact, Some(16));
    for row in &s.rows {
        let bound = row.bound.as_ref().map(|b| b.to_string().parse::<u64>().unwrap());
        if let (Some(b), Some(e)) = (bound, row.exact) {
            assert!(b <= e, "construction {b} above the exact value {e} at t = {}", row.t);
        }
    }
}
