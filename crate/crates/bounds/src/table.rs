//! The ex-table: cached extremal numbers with status and optional witness,
//! persisted as JSON lines.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use hyperex_core::io::from_text;
use hyperex_core::Hypergraph;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExStatus {
    Exact,
    Lower,
    Upper,
}

impl fmt::Display for ExStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExStatus::Exact => "exact",
            ExStatus::Lower => "lower",
            ExStatus::Upper => "upper",
        })
    }
}

/// Which extremal quantity a record holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Variant {
    /// `ex(n, 𝓕)`.
    Plain,
    /// `ex_star(m, n, 𝓕)`: hosts in which some `m`-set meets every edge.
    Star(usize),
    /// `Z(m, n, 𝔹)`: semibipartite hosts with classes of sizes `m` and `n`.
    Zar(usize),
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Plain => f.write_str("plain"),
            Variant::Star(m) => write!(f, "star:{m}"),
            Variant::Zar(m) => write!(f, "zar:{m}"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(format!("unknown variant {s:?}"));
        if s == "plain" {
            return Ok(Variant::Plain);
        }
        let (kind, m) = s.split_once(':').ok_or_else(bad)?;
        let m: usize = m.parse().map_err(|_| bad())?;
        match kind {
            "star" => Ok(Variant::Star(m)),
            "zar" => Ok(Variant::Zar(m)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Variant {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Variant> for String {
    fn from(v: Variant) -> String {
        v.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExKey {
    pub family: String,
    pub variant: Variant,
    pub n: usize,
}

impl ExKey {
    pub fn plain(family: impl Into<String>, n: usize) -> Self {
        ExKey {
            family: family.into(),
            variant: Variant::Plain,
            n,
        }
    }

    pub fn star(family: impl Into<String>, m: usize, n: usize) -> Self {
        ExKey {
            family: family.into(),
            variant: Variant::Star(m),
            n,
        }
    }

    pub fn zar(family: impl Into<String>, m: usize, n: usize) -> Self {
        ExKey {
            family: family.into(),
            variant: Variant::Zar(m),
            n,
        }
    }
}

impl fmt::Display for ExKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={}", self.family, self.variant, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExRecord {
    pub family: String,
    pub variant: Variant,
    pub n: usize,
    pub value: u64,
    pub status: ExStatus,
    /// A host attaining `value`, in the hypergraph text format.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ExRecord {
    pub fn key(&self) -> ExKey {
        ExKey {
            family: self.family.clone(),
            variant: self.variant,
            n: self.n,
        }
    }

    pub fn witness_graph(&self) -> Option<Result<Hypergraph>> {
        self.witness.as_deref().map(|w| from_text(w).map_err(Error::from))
    }

    fn validate(&self) -> Result<()> {
        let Some(w) = self.witness_graph() else {
            return Ok(());
        };
        let w = w?;
        let expect_n = match self.variant {
            Variant::Zar(m) => m + self.n,
            _ => self.n,
        };
        if w.n() != expect_n {
            return Err(invalid(format!("witness has {} vertices, expected {expect_n}", w.n())));
        }
        if self.status != ExStatus::Upper && w.edge_count() as u64 != self.value {
            return Err(invalid(format!("witness has {} edges, record says {}", w.edge_count(), self.value)));
        }
        Ok(())
    }
}

/// What an [`ExTable::upsert`] did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Upsert {
    Inserted,
    Replaced,
    Unchanged,
}

/// Records keyed by `(family, variant, n, status)`. Once an exact record
/// exists for a key, lower and upper records for it are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExTable {
    records: BTreeMap<(ExKey, ExStatus), ExRecord>,
}

impl ExTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &ExRecord> {
        self.records.values()
    }

    pub fn get(&self, key: &ExKey, status: ExStatus) -> Option<&ExRecord> {
        self.records.get(&(key.clone(), status))
    }

    pub fn exact(&self, key: &ExKey) -> Option<&ExRecord> {
        self.get(key, ExStatus::Exact)
    }

    /// The exact record, else the record with status `fallback`.
    pub fn best(&self, key: &ExKey, fallback: ExStatus) -> Option<&ExRecord> {
        self.exact(key).or_else(|| self.get(key, fallback))
    }

    /// Exact values of one `(family, variant)` column, keyed by `n`.
    pub fn column(&self, family: &str, variant: Variant) -> BTreeMap<usize, u64> {
        self.records
            .values()
            .filter(|r| r.status == ExStatus::Exact && r.family == family && r.variant == variant)
            .map(|r| (r.n, r.value))
            .collect()
    }

    /// Every `(family, variant)` pair holding at least one exact record.
    pub fn columns(&self) -> Vec<(String, Variant)> {
        let mut out: Vec<(String, Variant)> = self
            .records
            .values()
            .filter(|r| r.status == ExStatus::Exact)
            .map(|r| (r.family.clone(), r.variant))
            .collect();
        out.dedup();
        out.sort();
        out.dedup();
        out
    }

    /// Inserts `rec`, keeping the strongest consistent information: exact
    /// beats bounds, larger lower bounds and smaller upper bounds win, and a
    /// witness is adopted when the value is unchanged and none was stored.
    pub fn upsert(&mut self, rec: ExRecord) -> Result<Upsert> {
        rec.validate()?;
        let key = rec.key();
        let conflict = |message: String| Error::Conflict {
            key: key.to_string(),
            message,
        };
        if let Some(ex) = self.exact(&key) {
            let ok = match rec.status {
                ExStatus::Exact => rec.value == ex.value,
                ExStatus::Lower => rec.value <= ex.value,
                ExStatus::Upper => rec.value >= ex.value,
            };
            if !ok {
                return Err(conflict(format!("{} {} against exact {}", rec.status, rec.value, ex.value)));
            }
            if rec.status == ExStatus::Exact && ex.witness.is_none() && rec.witness.is_some() {
                self.records.insert((key, ExStatus::Exact), rec);
                return Ok(Upsert::Replaced);
            }
            return Ok(Upsert::Unchanged);
        }
        let lower = self.get(&key, ExStatus::Lower).map(|r| r.value);
        let upper = self.get(&key, ExStatus::Upper).map(|r| r.value);
        let consistent = match rec.status {
            ExStatus::Exact => lower.map_or(true, |l| l <= rec.value) && upper.map_or(true, |u| rec.value <= u),
            ExStatus::Lower => upper.map_or(true, |u| rec.value <= u),
            ExStatus::Upper => lower.map_or(true, |l| l <= rec.value),
        };
        if !consistent {
            return Err(conflict(format!(
                "{} {} against bounds [{lower:?}, {upper:?}]",
                rec.status, rec.value
            )));
        }
        if rec.status == ExStatus::Exact {
            self.records.remove(&(key.clone(), ExStatus::Lower));
            self.records.remove(&(key.clone(), ExStatus::Upper));
            self.records.insert((key, ExStatus::Exact), rec);
            return Ok(Upsert::Inserted);
        }
        let slot = (key, rec.status);
        match self.records.get(&slot) {
            None => {
                self.records.insert(slot, rec);
                Ok(Upsert::Inserted)
            }
            Some(old) => {
                let better = match rec.status {
                    ExStatus::Lower => rec.value > old.value,
                    _ => rec.value < old.value,
                };
                let adopt_witness = rec.value == old.value && old.witness.is_none() && rec.witness.is_some();
                if better || adopt_witness {
                    self.records.insert(slot, rec);
                    Ok(Upsert::Replaced)
                } else {
                    Ok(Upsert::Unchanged)
                }
            }
        }
    }

    /// Parses JSON lines; blank lines are skipped. Errors carry 1-based
    /// line numbers.
    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut table = ExTable::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let at = |message: String| Error::Parse { line: i + 1, message };
            let rec: ExRecord = serde_json::from_str(line).map_err(|e| at(e.to_string()))?;
            table.upsert(rec).map_err(|e| at(e.to_string()))?;
        }
        Ok(table)
    }

    /// One record per line in key order, so equal tables give equal bytes.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for rec in self.records.values() {
            out.push_str(&serde_json::to_string(rec).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_jsonl(&std::fs::read_to_string(path)?)
    }

    /// Loads `path`, or returns an empty table when it does not exist.
    pub fn load_or_empty(path: &Path) -> Result<Self> {
        if path.exists() {
            Self::load(path)
        } else {
            Ok(Self::new())
        }
    }

    /// Writes through a temporary file in the same directory, then renames.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("jsonl.tmp");
        std::fs::write(&tmp, self.to_jsonl())?;
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}
