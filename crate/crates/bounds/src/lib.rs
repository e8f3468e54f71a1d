//! Closed-form extremal bounds evaluated exactly, the persisted ex-table,
//! and exhaustive checks of the binomial inequalities they rely on.
//!
//! Edge counts are exact integers; bounds with irrational exponents are
//! reported as a float together with an upward-rounded upper value.

mod error;
pub mod exact;
pub mod facts;
pub mod formulas;
pub mod report;
pub mod table;
pub mod value;

pub use error::{Error, Result};
pub use formulas::PatternParams;
pub use report::{BoundReport, ReportStatus};
pub use table::{ExKey, ExRecord, ExStatus, ExTable, Upsert, Variant};
pub use value::{BoundValue, Expr};
