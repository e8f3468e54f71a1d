//! Exhaustive checks of the elementary inequalities used by the bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::exact::{binom, factorial, int, pow, ratio};
use crate::formulas::trivial_ex;
use crate::table::{ExTable, Variant};

const MAX_SAMPLES: usize = 10;

/// Outcome of one inequality suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactReport {
    pub id: String,
    pub statement: String,
    /// Number of parameter tuples evaluated.
    pub checked: u64,
    pub failures: u64,
    /// Up to ten failing parameter tuples.
    pub counterexamples: Vec<String>,
    /// Tuples whose verdict depends on digits of `e` beyond the bracket used.
    pub undecided: u64,
}

impl FactReport {
    fn new(id: &str, statement: &str) -> Self {
        FactReport {
            id: id.into(),
            statement: statement.into(),
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
            undecided: 0,
        }
    }

    fn record(&mut self, ok: bool, tuple: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_SAMPLES {
                self.counterexamples.push(tuple());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Ranges for the integer sweeps.
#[derive(Clone, Copy, Debug)]
pub struct FactRanges {
    pub max_n: i64,
    pub max_r: i64,
}

impl Default for FactRanges {
    fn default() -> Self {
        FactRanges { max_n: 60, max_r: 5 }
    }
}

/// `C(n−t, r)·n^r ≤ (n−t)^r·C(n, r)` for `n ≥ r ≥ 1`, `t ∈ [n]`, and
/// `C(n, r)·(n−t−r)^r ≤ n^r·C(n−t, r)` where `n > t + r`.
pub fn binomial_ratio(ranges: FactRanges) -> FactReport {
    let mut rep = FactReport::new(
        "binomial-ratio",
        "C(n-t,r) <= (1-t/n)^r C(n,r) and C(n,r) <= (n/(n-t-r))^r C(n-t,r)",
    );
    for r in 1..=ranges.max_r {
        for n in r..=ranges.max_n {
            let nr = pow(n, r as u32);
            let cn = binom(n, r);
            for t in 1..=n {
                let cnt = binom(n - t, r);
                rep.record(&cnt * &nr <= pow(n - t, r as u32) * &cn, || format!("first n={n} r={r} t={t}"));
                if n > t + r {
                    rep.record(&cn * pow(n - t - r, r as u32) <= &nr * &cnt, || format!("second n={n} r={r} t={t}"));
                }
            }
        }
    }
    rep
}

/// `C(n, r) ≤ n^r/r! ≤ e·C(n−b, r)` for `b ≥ 1` and `(r+1)b ≤ n − r² + 1`.
///
/// `e` is bracketed by `2.718281828 < e < 2.718281829`; a tuple that passes
/// only with the upper end counts as undecided rather than failed.
pub fn falling_power(ranges: FactRanges) -> FactReport {
    let mut rep = FactReport::new("falling-power", "C(n,r) <= n^r/r! <= e C(n-b,r)");
    let e_low = ratio(2_718_281_828i64, 1_000_000_000i64);
    let e_up = ratio(2_718_281_829i64, 1_000_000_000i64);
    for r in 1..=ranges.max_r {
        let rf = factorial(r as u64);
        for n in 1..=ranges.max_n {
            let nr = pow(n, r as u32);
            let lhs_ok = &rf * binom(n, r) <= nr;
            let mut b = 1;
            while (r + 1) * b <= n - r * r + 1 {
                let rhs = int(&rf * binom(n - b, r));
                let second = if int(nr.clone()) <= &e_low * &rhs {
                    true
                } else if int(nr.clone()) <= &e_up * &rhs {
                    rep.undecided += 1;
                    true
                } else {
                    false
                };
                rep.record(lhs_ok && second, || format!("n={n} r={r} b={b}"));
                b += 1;
            }
        }
    }
    rep
}

/// `C(n,2) − C(n−ℓ−x, 2) ≥ C(n,2) − C(n−ℓ, 2) + x(n−ℓ−x)` for
/// `ℓ, x ≥ 0` with `ℓ + x ≤ n`.
pub fn pair_shift(ranges: FactRanges) -> FactReport {
    let mut rep = FactReport::new("pair-shift", "C(n,2)-C(n-l-x,2) >= C(n,2)-C(n-l,2)+x(n-l-x)");
    for n in 0..=ranges.max_n {
        for l in 0..=n {
            for x in 0..=n - l {
                let lhs = binom(n, 2) - binom(n - l - x, 2);
                let rhs = binom(n, 2) - binom(n - l, 2) + BigInt::from(x * (n - l - x));
                rep.record(lhs >= rhs, || format!("n={n} l={l} x={x}"));
            }
        }
    }
    rep
}

fn rpow(q: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

/// `(1/(1−x))^r ≤ 1 + 4rx` for `0 ≤ x ≤ 1/(4r)`, checked as
/// `(1 + 4rx)(1 − x)^r ≥ 1` on the grid `x = k/(4r·steps)`.
pub fn reciprocal_power(ranges: FactRanges, steps: i64) -> FactReport {
    let mut rep = FactReport::new("reciprocal-power", "(1/(1-x))^r <= 1 + 4rx for 0 <= x <= 1/(4r)");
    for r in 1..=ranges.max_r {
        for k in 0..=steps {
            let x = ratio(k, 4 * r * steps);
            let lhs = (int(1) + int(4 * r) * &x) * rpow(&(int(1) - &x), r as u32);
            rep.record(lhs >= BigRational::one(), || format!("r={r} x={x}"));
        }
    }
    rep
}

/// `(1−x)^(1/r) ≤ 1 − x/r` for `x ≤ 1` and real `r ≥ 1`. With `r = p/q`
/// (`p ≥ q`) both sides are non-negative, so this is checked as
/// `(1−x)^q ≤ (1 − xq/p)^p` for `x = k/steps`, `k ∈ [−2·steps, steps]`.
pub fn root_bernoulli(ranges: FactRanges, steps: i64) -> FactReport {
    let mut rep = FactReport::new("root-bernoulli", "(1-x)^(1/r) <= 1 - x/r for x <= 1, r >= 1");
    let mut exponents: Vec<(i64, i64)> = (1..=ranges.max_r).map(|p| (p, 1)).collect();
    for q in [2, 3] {
        for p in q + 1..=q * ranges.max_r {
            if num_integer::gcd(p, q) == 1 {
                exponents.push((p, q));
            }
        }
    }
    for (p, q) in exponents {
        for k in -2 * steps..=steps {
            let x = ratio(k, steps);
            let lhs = rpow(&(int(1) - &x), q as u32);
            let rhs = rpow(&(int(1) - &x * ratio(q, p)), p as u32);
            rep.record(lhs <= rhs, || format!("r={p}/{q} x={x}"));
        }
    }
    rep
}

/// For every exact plain column of `table`, with
/// `f(x) = C(n,r) − C(n−x,r) + ex(n−x, F)`, checks `f(ℓ) ≤ f(ℓ+1)` for
/// `ℓ ∈ [n−1]`. Values below the family's order come from the trivial rule;
/// tuples with other gaps are skipped.
pub fn join_profile_monotone(table: &ExTable) -> FactReport {
    let mut rep = FactReport::new("join-profile-monotone", "f(l) <= f(l+1) for f(x) = C(n,r)-C(n-x,r)+ex(n-x,F)");
    for (family, variant) in table.columns() {
        if variant != Variant::Plain {
            continue;
        }
        let Ok(fam) = hyperex_core::pattern::parse_family(&family) else {
            continue;
        };
        let r = fam.r();
        let order = fam.members().iter().map(|m| m.n()).min().unwrap_or(0);
        let col = table.column(&family, Variant::Plain);
        let ex = |k: i64| -> Option<BigInt> {
            col.get(&(k as usize)).map(|&v| BigInt::from(v)).or_else(|| trivial_ex(k, r, order))
        };
        let Some(&top) = col.keys().next_back() else {
            continue;
        };
        // f at n only reads ex below n, so the column reaches one step further
        for n in 1..=top as i64 + 1 {
            let f = |x: i64| ex(n - x).map(|e| binom(n, r as i64) - binom(n - x, r as i64) + e);
            for l in 1..n {
                if let (Some(a), Some(b)) = (f(l), f(l + 1)) {
                    rep.record(a <= b, || format!("{family} n={n} l={l}"));
                }
            }
        }
    }
    rep
}

/// All integer and real suites over `ranges`.
pub fn inequality_suites(ranges: FactRanges) -> Vec<FactReport> {
    vec![
        binomial_ratio(ranges),
        falling_power(ranges),
        pair_shift(ranges),
        reciprocal_power(ranges, 60),
        root_bernoulli(ranges, 60),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{ExRecord, ExStatus};

    #[test]
    fn suites_pass_on_small_ranges() {
        let ranges = FactRanges { max_n: 20, max_r: 3 };
        for rep in inequality_suites(ranges) {
            assert!(rep.passed(), "{rep:?}");
            assert!(rep.checked > 0, "{}", rep.id);
        }
    }

    #[test]
    fn falling_power_boundary_case_is_checked() {
        // r = 2, n = 6: b ≤ (6 − 4 + 1)/3 = 1 is the boundary
        let rep = falling_power(FactRanges { max_n: 6, max_r: 2 });
        assert!(rep.passed());
        assert!(rep.checked >= 1);
    }

    #[test]
    fn monotone_detects_a_bad_column() {
        let mut t = ExTable::new();
        for (n, v) in [(3, 2), (4, 4), (5, 6)] {
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
        assert!(join_profile_monotone(&t).passed());
        let mut bad = ExTable::new();
        // ex(4) = 6 pretends K4 is K3-free
        for (n, v) in [(3, 2), (4, 6)] {
            bad.upsert(ExRecord {
                family: "K3".into(),
                variant: Variant::Plain,
                n,
                value: v,
                status: ExStatus::Exact,
                witness: None,
            })
            .unwrap();
        }
        let rep = join_profile_monotone(&bad);
        assert!(!rep.passed());
        assert!(!rep.counterexamples.is_empty());
    }
}
