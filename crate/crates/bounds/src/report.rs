//! Self-describing formula evaluations.

use std::collections::BTreeMap;

use hyperex_core::solve::Precondition;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::table::{ExKey, ExStatus, ExTable};
use crate::value::BoundValue;

/// How far the reported value can be trusted given its ex inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    /// Every ex input is exact (or none is needed).
    Exact,
    /// Some ex input is a lower bound, so the value may be too small.
    Lower,
    /// Some ex input is an upper bound, so the value may be too large.
    Upper,
    /// A needed ex value is missing, or inputs mix lower and upper bounds.
    Unresolved,
    /// The formula is not defined at these parameters.
    Undefined,
}

fn big_as_number<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v.as_ref().map(|b| (b.to_i64(), b)) {
        Some((Some(i), _)) => s.serialize_i64(i),
        Some((None, b)) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub formula: String,
    pub params: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<BoundValue>,
    /// Integer floor, present when the quantity is an integer count.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_as_number")]
    pub floor: Option<BigInt>,
    pub preconditions: Vec<Precondition>,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub missing: Vec<ExKey>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(formula: impl Into<String>) -> Self {
        BoundReport {
            formula: formula.into(),
            params: BTreeMap::new(),
            value: None,
            floor: None,
            preconditions: Vec::new(),
            status: ReportStatus::Exact,
            missing: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, v: impl Serialize) -> &mut Self {
        self.params
            .insert(name.to_string(), serde_json::to_value(v).expect("parameters serialize"));
        self
    }

    pub fn require(&mut self, condition: impl Into<String>, holds: bool) -> &mut Self {
        self.preconditions.push(Precondition {
            condition: condition.into(),
            holds,
        });
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    /// Records the value; `integral` adds its floor.
    pub fn set_value(&mut self, v: BoundValue, integral: bool) -> &mut Self {
        if integral {
            self.floor = Some(v.floor());
        }
        self.value = Some(v);
        self
    }

    pub fn undefined(&mut self, why: impl Into<String>) -> &mut Self {
        self.status = ReportStatus::Undefined;
        self.value = None;
        self.floor = None;
        self.note(why)
    }

    pub fn preconditions_hold(&self) -> bool {
        self.preconditions.iter().all(|p| p.holds)
    }

    /// The value when it is an exact rational.
    pub fn exact(&self) -> Option<&num_rational::BigRational> {
        self.value.as_ref().and_then(BoundValue::exact)
    }

    fn degrade(&mut self, s: ExStatus) {
        let s = match s {
            ExStatus::Exact => return,
            ExStatus::Lower => ReportStatus::Lower,
            ExStatus::Upper => ReportStatus::Upper,
        };
        self.status = match self.status {
            ReportStatus::Exact => s,
            cur if cur == s => cur,
            ReportStatus::Undefined => ReportStatus::Undefined,
            _ => ReportStatus::Unresolved,
        };
    }

    /// Looks up an ex value and folds its status into the report. `trivial`
    /// is a closed-form value valid for this key (used when the table has no
    /// exact record); `fallback` is the bound direction that keeps the
    /// formula valid.
    pub fn ex_input(&mut self, table: &ExTable, key: ExKey, fallback: ExStatus, trivial: Option<BigInt>) -> Option<BigInt> {
        if let Some(rec) = table.exact(&key) {
            return Some(BigInt::from(rec.value));
        }
        if let Some(v) = trivial {
            self.note(format!("{key} = {v} in closed form"));
            return Some(v);
        }
        if let Some(rec) = table.get(&key, fallback) {
            self.degrade(fallback);
            self.note(format!("{key} is only a {fallback} bound"));
            return Some(BigInt::from(rec.value));
        }
        if self.status != ReportStatus::Undefined {
            self.status = ReportStatus::Unresolved;
        }
        self.missing.push(key);
        None
    }
}
