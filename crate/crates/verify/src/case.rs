//! Check cases and verdicts.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The statement says nothing at these parameters, e.g. an empty
    /// window of admissible `t`.
    Vacuous,
    /// A needed input is missing or a search ran out of budget.
    Unresolved,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
            Verdict::Unresolved => "unresolved",
        }
    }
}

/// One checked statement at one parameter point. A failing case always
/// carries a `counterexample` entry in its evidence.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckCase {
    #[serde(rename = "check-id")]
    pub check_id: String,
    pub params: Value,
    pub verdict: Verdict,
    pub evidence: Value,
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        Value::Null => Map::new(),
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

impl CheckCase {
    fn new(id: &str, params: Value, verdict: Verdict, evidence: Map<String, Value>) -> Self {
        CheckCase {
            check_id: id.to_string(),
            params: Value::Object(object(params)),
            verdict,
            evidence: Value::Object(evidence),
        }
    }

    pub fn pass(id: &str, params: Value, evidence: Value) -> Self {
        Self::new(id, params, Verdict::Pass, object(evidence))
    }

    pub fn fail(id: &str, params: Value, evidence: Value, counterexample: Value) -> Self {
        let mut ev = object(evidence);
        ev.insert("counterexample".into(), counterexample);
        Self::new(id, params, Verdict::Fail, ev)
    }

    pub fn vacuous(id: &str, params: Value, evidence: Value) -> Self {
        Self::new(id, params, Verdict::Vacuous, object(evidence))
    }

    pub fn unresolved(id: &str, params: Value, reason: impl Into<String>) -> Self {
        Self::new(id, params, Verdict::Unresolved, object(json!({ "reason": reason.into() })))
    }

    /// Pass when `ok`, otherwise fail with the counterexample built by `cex`.
    pub fn judge(id: &str, params: Value, ok: bool, evidence: Value, cex: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(id, params, evidence)
        } else {
            Self::fail(id, params, evidence, cex())
        }
    }

    /// Adds a note to the evidence.
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        if let Value::Object(m) = &mut self.evidence {
            m.insert("note".into(), Value::String(note.into()));
        }
        self
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_carries_counterexample() {
        let c = CheckCase::judge("x", json!({"n": 3}), false, json!({"value": 1}), || json!({"witness": "3 2\n"}));
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.evidence["counterexample"]["witness"], "3 2\n");
        assert_eq!(c.evidence["value"], 1);
        let p = CheckCase::judge("x", json!({}), true, Value::Null, || unreachable!());
        assert_eq!(p.verdict, Verdict::Pass);
        assert!(p.evidence.as_object().unwrap().is_empty());
    }

    #[test]
    fn serializes_lowercase() {
        let c = CheckCase::unresolved("y", json!({}), "missing");
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"verdict\":\"unresolved\""));
        let back: CheckCase = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
