//! Bound values: exact rationals, or sums with irrational roots evaluated in
//! floating point together with an upward-rounded upper value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exact::{exact_root, floor, int, root_f64, to_f64};

/// Relative margin added to floating-point evaluations to make them upper
/// bounds of the true real value.
pub const REAL_MARGIN: f64 = 1e-12;

/// Relative slack used when comparing a real-valued bound to an exact count.
pub const COMPARE_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(BigRational),
    /// `approx` is the rounded value; `upper` is at least the true value.
    Real { approx: f64, upper: f64 },
}

impl BoundValue {
    pub fn approx(&self) -> f64 {
        match self {
            BoundValue::Exact(q) => to_f64(q),
            BoundValue::Real { approx, .. } => *approx,
        }
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            BoundValue::Exact(q) => Some(q),
            BoundValue::Real { .. } => None,
        }
    }

    /// Largest integer not above the value; for real values the floor of
    /// the upper value, which is still a valid bound on an integer quantity.
    pub fn floor(&self) -> BigInt {
        match self {
            BoundValue::Exact(q) => floor(q),
            BoundValue::Real { upper, .. } => BigInt::from_f64(upper.floor()).unwrap_or_default(),
        }
    }

    /// Whether this upper bound is at least `count` (real values get
    /// [`COMPARE_SLACK`] relative slack).
    pub fn dominates(&self, count: &BigInt) -> bool {
        match self {
            BoundValue::Exact(q) => *q >= int(count.clone()),
            BoundValue::Real { upper, .. } => {
                let c = count.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
                *upper * (1.0 + COMPARE_SLACK) + COMPARE_SLACK >= c
            }
        }
    }

    /// Whether this lower bound is at most `count`.
    pub fn below(&self, count: &BigInt) -> bool {
        match self {
            BoundValue::Exact(q) => *q <= int(count.clone()),
            BoundValue::Real { approx, .. } => {
                let c = count.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
                *approx * (1.0 - COMPARE_SLACK) - COMPARE_SLACK <= c
            }
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BoundValue::Exact(q) => {
                let mut st = s.serialize_struct("BoundValue", 2)?;
                st.serialize_field("exact", &q.to_string())?;
                st.serialize_field("approx", &to_f64(q))?;
                st.end()
            }
            BoundValue::Real { approx, upper } => {
                let mut st = s.serialize_struct("BoundValue", 2)?;
                st.serialize_field("approx", approx)?;
                st.serialize_field("upper", upper)?;
                st.end()
            }
        }
    }
}

/// A sum `q + Σ cᵢ·xᵢ^(1/kᵢ)` with rational `q`, non-negative rational
/// `cᵢ` and non-negative integers `xᵢ`.
#[derive(Clone, Debug)]
pub struct Expr {
    rational: BigRational,
    roots: Vec<(BigRational, BigInt, u32)>,
}

impl Expr {
    pub fn new(q: BigRational) -> Self {
        Expr {
            rational: q,
            roots: Vec::new(),
        }
    }

    pub fn plus(mut self, q: BigRational) -> Self {
        self.rational += q;
        self
    }

    /// Adds `coeff · radicand^(1/index)`.
    pub fn plus_root(mut self, coeff: BigRational, radicand: BigInt, index: u32) -> Self {
        debug_assert!(!coeff.is_negative() && !radicand.is_negative() && index > 0);
        self.roots.push((coeff, radicand, index));
        self
    }

    /// Evaluates exactly when every root is a perfect power.
    pub fn eval(&self) -> BoundValue {
        let mut q = self.rational.clone();
        let mut real = 0.0f64;
        let mut inexact = false;
        for (c, x, k) in &self.roots {
            if c.is_zero() || x.is_zero() {
                continue;
            }
            match exact_root(x, *k) {
                Some(root) => q += c * int(root),
                None => {
                    inexact = true;
                    real += to_f64(c) * root_f64(x, *k);
                }
            }
        }
        if !inexact {
            return BoundValue::Exact(q);
        }
        let base = to_f64(&q);
        let approx = base + real;
        let upper = approx + (base.abs() + real) * REAL_MARGIN;
        BoundValue::Real { approx, upper }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn perfect_powers_stay_exact() {
        let v = Expr::new(int(8)).plus_root(ratio(1, 2), BigInt::from(4096), 2).eval();
        assert_eq!(v, BoundValue::Exact(int(40)));
        assert!(v.dominates(&BigInt::from(40)));
        assert!(!v.dominates(&BigInt::from(41)));
    }

    #[test]
    fn irrational_roots_round_up() {
        let v = Expr::new(int(0)).plus_root(int(1), BigInt::from(2), 2).eval();
        let BoundValue::Real { approx, upper } = v else {
            panic!("expected a real value")
        };
        assert!(upper > approx && (approx - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(v.floor(), BigInt::from(1));
        assert!(v.dominates(&BigInt::from(1)));
        assert!(!v.dominates(&BigInt::from(2)));
    }

    #[test]
    fn serializes_both_forms() {
        let e = serde_json::to_string(&BoundValue::Exact(ratio(3, 2))).unwrap();
        assert_eq!(e, r#"{"exact":"3/2","approx":1.5}"#);
        let r = serde_json::to_string(&BoundValue::Real { approx: 1.0, upper: 2.0 }).unwrap();
        assert_eq!(r, r#"{"approx":1.0,"upper":2.0}"#);
    }
}
