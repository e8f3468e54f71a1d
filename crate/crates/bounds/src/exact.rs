//! Exact integer and rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// `C(a, b)`, taken to be zero whenever `a < 0`, `b < 0` or `a < b`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Parses `3`, `-2`, `1/3` or a terminating decimal such as `0.125`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || invalid(format!("not a rational number: {text:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{whole}{frac}").parse().map_err(|_| bad())?;
    let q = BigRational::new(digits, pow(10, frac.len() as u32));
    Ok(if neg { -q } else { q })
}

pub fn floor(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

pub fn ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Natural logarithm of a positive big integer, without overflowing `f64`.
pub fn ln(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().map_or(f64::NAN, f64::ln);
    }
    let shift = bits - 900;
    let top: BigInt = x >> shift;
    top.to_f64().map_or(f64::NAN, f64::ln) + shift as f64 * std::f64::consts::LN_2
}

/// The `k`-th root of a non-negative integer when it is itself an integer.
pub fn exact_root(x: &BigInt, k: u32) -> Option<BigInt> {
    if x.is_negative() || k == 0 {
        return None;
    }
    let r = x.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *x).then_some(r)
}

/// Floating-point `k`-th root of a non-negative integer.
pub fn root_f64(x: &BigInt, k: u32) -> f64 {
    if x.is_zero() {
        0.0
    } else {
        (ln(x) / f64::from(k)).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("0.125").unwrap(), ratio(1, 8));
        assert_eq!(parse_rational("-1/3").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1e3").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&BigInt::from(4096), 2), Some(BigInt::from(64)));
        assert_eq!(exact_root(&BigInt::from(2), 2), None);
        assert!((root_f64(&BigInt::from(2), 2) - 2f64.sqrt()).abs() < 1e-15);
        let huge = pow(3, 2000);
        assert!((ln(&huge) - 2000.0 * 3f64.ln()).abs() < 1e-9);
    }
}
