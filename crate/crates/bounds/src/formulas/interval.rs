//! Bounds for the three ranges of `t` and their windows of validity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::turan::r_factorial;
use super::{g1, trivial_ex, PatternParams};
use crate::error::{invalid, Result};
use crate::exact::{binom, int, ratio, to_f64};
use crate::report::BoundReport;
use crate::table::{ExKey, ExStatus, ExTable};
use crate::value::BoundValue;

const E: f64 = std::f64::consts::E;

/// A range `lo ≤ t ≤ hi` of admissible `t`, evaluated in floating point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Window {
    pub lo: f64,
    pub hi: f64,
    /// Some integer `t ≥ 0` lies in the range.
    pub nonempty: bool,
    pub contains_t: bool,
}

impl Window {
    pub fn new(lo: f64, hi: f64, t: usize) -> Self {
        let first = lo.max(0.0).ceil();
        Window {
            lo,
            hi,
            nonempty: first <= hi,
            contains_t: lo <= t as f64 && t as f64 <= hi,
        }
    }
}

fn min_rat(a: BigRational, b: BigRational) -> BigRational {
    if a <= b {
        a
    } else {
        b
    }
}

/// Upper end of the first range,
/// `min{δ·ex(n,F)/(m·C(n−1,r−1)), δ(n−1)/(8m(r−1))}` with
/// `δ = min{(1/m − c₁)/4, c₂/4}`, for `(c₁, c₂)`-bounded `F`.
pub fn interval1_t_max(
    f: &PatternParams,
    c1: &BigRational,
    c2: &BigRational,
    n: usize,
    table: &ExTable,
) -> Result<BoundReport> {
    let m = f.m as i64;
    if *c1 >= ratio(1, m) {
        return Err(invalid(format!("c1 = {c1} must be below 1/m = 1/{m}")));
    }
    if c2.is_negative() {
        return Err(invalid(format!("c2 = {c2} must be non-negative")));
    }
    let mut rep = BoundReport::new("interval1-t-max");
    rep.param("F", &f.name)
        .param("m", f.m)
        .param("r", f.r)
        .param("n", n)
        .param("c1", c1.to_string())
        .param("c2", c2.to_string());
    rep.require("m >= r >= 2", f.m >= f.r && f.r >= 2)
        .require("c2 > 0", c2.is_positive())
        .require("n >= max(r, 2)", n >= f.r.max(2));
    if f.r < 2 || n < f.r.max(2) {
        rep.undefined("needs r >= 2 and n >= max(r, 2)");
        return Ok(rep);
    }
    let delta = min_rat((ratio(1, m) - c1) / int(4), c2 / int(4));
    rep.param("delta", delta.to_string());
    let Some(ex) = rep.ex_input(table, ExKey::plain(f.name.clone(), n), ExStatus::Lower, trivial_ex(n as i64, f.r, f.m)) else {
        return Ok(rep);
    };
    let r = f.r as i64;
    let a = &delta * int(ex) / int(binom(n as i64 - 1, r - 1) * BigInt::from(m));
    let b = &delta * int(n as i64 - 1) / int(8 * m * (r - 1));
    rep.set_value(BoundValue::Exact(min_rat(a, b)), true);
    Ok(rep)
}

/// The first range for a suspension `F̂` on `m` vertices, through the
/// substitution `c₁ = π + (1 − mπ)/(5m)`, `c₂ = 1` where `π` is the Turán
/// density of the base. Also records the closed form
/// `min{(1−mπ)/(5m²)·ex/C(n−1,r−1), (1−mπ)/(40m²)·(n−1)/(r−1)}` and whether
/// both agree. The ex value used is `ex(n, F̂)`.
pub fn interval1_t_max_suspension(f_hat: &PatternParams, pi: &BigRational, n: usize, table: &ExTable) -> Result<BoundReport> {
    let m = f_hat.m as i64;
    if *pi >= ratio(1, m) || pi.is_negative() {
        return Err(invalid(format!("density {pi} must lie in [0, 1/{m})")));
    }
    let slack = int(1) - int(m) * pi;
    let c1 = pi + &slack / int(5 * m);
    let mut rep = interval1_t_max(f_hat, &c1, &int(1), n, table)?;
    rep.formula = "interval1-suspension".into();
    rep.param("pi", pi.to_string());
    if let (Some(v), Some(ex)) = (rep.exact().cloned(), table.best(&ExKey::plain(f_hat.name.clone(), n), ExStatus::Lower)) {
        let r = f_hat.r as i64;
        let a = &slack / int(5 * m * m) * int(ex.value as i64) / int(binom(n as i64 - 1, r - 1));
        let b = &slack / int(40 * m * m) * ratio(n as i64 - 1, r - 1);
        let display = min_rat(a, b);
        rep.param("closed_form", display.to_string());
        rep.require("substitution reproduces the closed form", display == v);
    }
    Ok(rep)
}

/// `(1 − (2r−1)π)·π/(5r(2r−1)²) · n`, the first range for the suspended
/// generalized triangle with density `π`.
pub fn suspended_triangle_t_max(r: usize, pi: &BigRational, n: usize) -> BoundReport {
    let mut rep = BoundReport::new("suspended-triangle-t-max");
    rep.param("r", r).param("pi", pi.to_string()).param("n", n);
    rep.require("r >= 4", r >= 4).require("pi >= 0", !pi.is_negative());
    let k = 2 * r as i64 - 1;
    let v = (int(1) - int(k) * pi) * pi / int(5 * r as i64 * k * k) * int(n as i64);
    rep.set_value(BoundValue::Exact(v), true);
    rep
}

/// The first-range bound itself: `g₁(n, t, F)`.
pub fn interval1_bound(n: usize, t: usize, f: &PatternParams, table: &ExTable) -> BoundReport {
    let mut rep = g1(n, t, f, table);
    rep.formula = "interval1".into();
    rep
}

struct Parts {
    s1: usize,
    s2: usize,
    s: usize,
    prod: f64,
}

fn parts(rep: &mut BoundReport, sizes: &[usize]) -> Parts {
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    rep.param("sizes", &sorted);
    Parts {
        s1: sorted.first().copied().unwrap_or(0),
        s2: sorted.get(1).copied().unwrap_or(0),
        s: sorted.iter().sum(),
        prod: sorted.iter().map(|&x| x as f64).product(),
    }
}

/// `C(n,r) − C(n−s₁(t+1)+1, r) + ex(n−s₁(t+1)+1, rest)`, shared by both
/// second-range bounds.
fn interval2_value(rep: &mut BoundReport, n: usize, t: usize, r: usize, s1: usize, rest: (&str, usize), table: &ExTable) {
    let k = n as i64 - (s1 * (t + 1)) as i64 + 1;
    let key = ExKey::plain(rest.0, k.max(0) as usize);
    if let Some(ex) = rep.ex_input(table, key, ExStatus::Upper, trivial_ex(k, r, rest.1)) {
        let v = binom(n as i64, r as i64) - binom(k, r as i64) + ex;
        rep.set_value(BoundValue::Exact(int(v)), true);
    }
}

fn ex_at_n(rep: &mut BoundReport, b: &PatternParams, n: usize, table: &ExTable) -> Option<f64> {
    let key = ExKey::plain(b.name.clone(), n);
    let trivial = trivial_ex(n as i64, b.r, b.m);
    // a smaller ex only lowers the window's left end
    let v = match table.exact(&key) {
        Some(rec) => rec.value as f64,
        None => match (trivial, table.get(&key, ExStatus::Lower)) {
            (Some(v), _) => to_f64(&int(v)),
            (None, Some(rec)) => {
                rep.note(format!("window uses the lower bound for {key}"));
                rec.value as f64
            }
            (None, None) => {
                rep.note(format!("window needs {key}"));
                return None;
            }
        },
    };
    Some(v)
}

/// Second range, hypergraph form:
/// `ex(n,(t+1)𝔹) ≤ C(n,r) − C(n−s₁(t+1)+1, r) + ex(n−s₁(t+1)+1, 𝔹)` for
/// `320e·s₁s(ex(n,𝔹)/C(n−1,r−1) + 320e·s₁s²r!) ≤ t ≤ n/(512e·s₁s³r!)`.
pub fn interval2_bound(n: usize, t: usize, b: &PatternParams, sizes: &[usize], table: &ExTable) -> BoundReport {
    let mut rep = BoundReport::new("interval2");
    rep.param("n", n).param("t", t).param("B", &b.name);
    let p = parts(&mut rep, sizes);
    let r = b.r;
    rep.require("r >= 2", r >= 2)
        .require("s1 >= 2", p.s1 >= 2)
        .require("sizes match B", sizes.len() == r && p.s == b.m);
    interval2_value(&mut rep, n, t, r, p.s1, (&b.name, b.m), table);
    if let Some(ex_n) = ex_at_n(&mut rep, b, n, table) {
        let (s1, s) = (p.s1 as f64, p.s as f64);
        let c = to_f64(&int(binom(n as i64 - 1, r as i64 - 1)));
        let lo = 320.0 * E * s1 * s * (ex_n / c + 320.0 * E * s1 * s * s * r_factorial(r));
        let hi = n as f64 / (512.0 * E * s1 * s.powi(3) * r_factorial(r));
        let w = Window::new(lo, hi, t);
        rep.require("t in window", w.contains_t);
        rep.param("window", w);
    }
    rep
}

/// Second range, graph form:
/// `ex(n,(t+1)𝔹) = C(n,2) − C(n−s₁(t+1)+1, 2) + ex(n−s₁(t+1)+1, 𝔹[s₂+1])`
/// for `max{√(32s₁sn), 12800e·s⁵/s₁·(ex(n,𝔹)/(n−1) + 288e·s₁s²·r!)} ≤ t ≤
/// n/(1024e·s₁s³)` with `r = 2`. The report also carries the window of the
/// complete bipartite corollary, `12801e·s⁵·ex(n,𝔹)/(s₁(n−1)) ≤ t`.
pub fn interval2_graph_bound(n: usize, t: usize, b: &PatternParams, sizes: &[usize], table: &ExTable) -> BoundReport {
    let mut rep = BoundReport::new("interval2-graph");
    rep.param("n", n).param("t", t).param("B", &b.name);
    let p = parts(&mut rep, sizes);
    let family = format!("{}[{}]", b.name, p.s2 + 1);
    rep.param("rest_family", &family);
    rep.require("r = 2", b.r == 2)
        .require("s2 >= s1 >= 2", p.s1 >= 2 && sizes.len() == 2)
        .require("sizes match B", p.s == b.m)
        .require("B connected", b.connected)
        .require("tau(B) = s1", b.tau == p.s1);
    interval2_value(&mut rep, n, t, 2, p.s1, (&family, p.s2 + 1), table);
    if let Some(ex_n) = ex_at_n(&mut rep, b, n, table) {
        let (s1, s, nf) = (p.s1 as f64, p.s as f64, n as f64);
        let hi = nf / (1024.0 * E * s1 * s.powi(3));
        let lo = (32.0 * s1 * s * nf)
            .sqrt()
            .max(12800.0 * E * s.powi(5) / s1 * (ex_n / (nf - 1.0) + 288.0 * E * s1 * s * s * r_factorial(2)));
        let w = Window::new(lo, hi, t);
        rep.require("t in window", w.contains_t);
        rep.param("window", w);
        let lo_cor = 12801.0 * E * s.powi(5) * ex_n / (s1 * (nf - 1.0));
        rep.param("corollary_window", Window::new(lo_cor, hi, t));
    }
    rep
}

/// Third range, hypergraph form:
/// `ex(n,(t+1)𝔹) ≤ C(s(t+1)−1, r) + ex_star(n−st, n, s𝔹)` for
/// `n/s − n/(16e²r⁴s²∏sᵢ) ≤ t ≤ n/s`.
pub fn interval3_bound(n: usize, t: usize, b: &PatternParams, sizes: &[usize], table: &ExTable) -> BoundReport {
    let mut rep = BoundReport::new("interval3");
    rep.param("n", n).param("t", t).param("B", &b.name);
    let p = parts(&mut rep, sizes);
    let r = b.r;
    rep.require("r >= 2", r >= 2)
        .require("s1 >= 1", p.s1 >= 1)
        .require("sizes match B", sizes.len() == r && p.s == b.m);
    let family = format!("{}x{}", p.s, b.name);
    rep.param("star_family", &family);
    let centre = n as i64 - (p.s * t) as i64;
    if centre < 0 {
        rep.undefined(format!("n - s*t = {centre} is negative"));
    } else {
        let key = ExKey::star(family, centre as usize, n);
        // below the order of s𝔹 every edge through the centre is allowed
        let trivial = (n < p.s * b.m).then(|| binom(n as i64, r as i64) - binom(n as i64 - centre, r as i64));
        if let Some(ex) = rep.ex_input(table, key, ExStatus::Upper, trivial) {
            let v = binom((p.s * (t + 1)) as i64 - 1, r as i64) + ex;
            rep.set_value(BoundValue::Exact(int(v)), true);
        }
    }
    let (nf, s, rf) = (n as f64, p.s as f64, r as f64);
    let w = Window::new(nf / s - nf / (16.0 * E * E * rf.powi(4) * s * s * p.prod), nf / s, t);
    rep.require("t in window", w.contains_t);
    rep.param("window", w);
    rep
}

/// Third range, graph form:
/// `ex(n,(t+1)𝔹) ≤ C(s(t+1)−1, 2) + ex(n−s(t+1)+1, 𝔹) + s₁·s·n` for
/// `n/s − n/(65s₁s²) ≤ t ≤ n/s`.
pub fn interval3_graph_bound(n: usize, t: usize, b: &PatternParams, sizes: &[usize], table: &ExTable) -> BoundReport {
    let mut rep = BoundReport::new("interval3-graph");
    rep.param("n", n).param("t", t).param("B", &b.name);
    let p = parts(&mut rep, sizes);
    rep.require("r = 2", b.r == 2)
        .require("s2 >= s1 >= 2", p.s1 >= 2 && sizes.len() == 2)
        .require("sizes match B", p.s == b.m);
    let clique = (p.s * (t + 1)) as i64 - 1;
    let k = n as i64 - clique;
    let key = ExKey::plain(b.name.clone(), k.max(0) as usize);
    if let Some(ex) = rep.ex_input(table, key, ExStatus::Upper, trivial_ex(k, 2, b.m)) {
        let v = binom(clique, 2) + ex + BigInt::from(p.s1 * p.s * n);
        rep.set_value(BoundValue::Exact(int(v)), true);
    }
    let (nf, s, s1) = (n as f64, p.s as f64, p.s1 as f64);
    let w = Window::new(nf / s - nf / (65.0 * s1 * s * s), nf / s, t);
    rep.require("t in window", w.contains_t);
    rep.param("window", w);
    rep
}
