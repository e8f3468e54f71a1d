//! Suite reports: JSON with a summary, CSV with one row per case.

use std::collections::BTreeMap;
use std::io;
use std::path::Path;

use serde::Serialize;

use crate::case::{CheckCase, Verdict};
use crate::config::SuiteConfig;

/// Verdict counts, overall and per check id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub unresolved: usize,
    pub by_check: BTreeMap<String, BTreeMap<String, usize>>,
}

impl Summary {
    pub fn of(cases: &[CheckCase]) -> Self {
        let mut s = Summary::default();
        for c in cases {
            s.total += 1;
            match c.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Vacuous => s.vacuous += 1,
                Verdict::Unresolved => s.unresolved += 1,
            }
            *s.by_check
                .entry(c.check_id.clone())
                .or_default()
                .entry(c.verdict.as_str().to_string())
                .or_default() += 1;
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub summary: Summary,
    pub cases: Vec<CheckCase>,
}

impl SuiteReport {
    pub fn new(config: SuiteConfig, cases: Vec<CheckCase>) -> Self {
        SuiteReport {
            config,
            summary: Summary::of(&cases),
            cases,
        }
    }

    /// 0 when no case failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    pub fn cases_for<'a>(&'a self, check_id: &'a str) -> impl Iterator<Item = &'a CheckCase> + 'a {
        self.cases.iter().filter(move |c| c.check_id == check_id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// Columns `check-id,verdict,params,evidence`, the last two as compact
    /// JSON.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["check-id", "verdict", "params", "evidence"]).expect("in-memory write");
        for c in &self.cases {
            w.write_record([&c.check_id, c.verdict.as_str(), &c.params.to_string(), &c.evidence.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
    }

    /// Writes `report.json` and `report.csv` into `dir`.
    pub fn write(&self, dir: &Path) -> io::Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.json"), self.to_json())?;
        std::fs::write(dir.join("report.csv"), self.to_csv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_and_exit_code() {
        let cases = vec![
            CheckCase::pass("a", json!({}), json!({})),
            CheckCase::vacuous("a", json!({}), json!({})),
            CheckCase::fail("b", json!({"n": 1}), json!({}), json!({"x": 1})),
        ];
        let r = SuiteReport::new(SuiteConfig::empty(), cases);
        assert_eq!((r.summary.total, r.summary.pass, r.summary.fail, r.summary.vacuous), (3, 1, 1, 1));
        assert_eq!(r.summary.by_check["a"]["vacuous"], 1);
        assert_eq!(r.exit_code(), 1);
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().nth(3).unwrap().starts_with("b,fail,\"{\"\"n\"\":1}\""));
    }

    #[test]
    fn clean_report_exits_zero() {
        let r = SuiteReport::new(SuiteConfig::empty(), vec![CheckCase::pass("a", json!({}), json!({}))]);
        assert_eq!(r.exit_code(), 0);
    }
}
