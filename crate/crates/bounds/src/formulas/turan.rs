//! Upper bounds of Kővári–Sós–Turán type, the star and maximum-degree
//! bounds, and the Lu–Székely packing threshold.

use hyperex_core::structure::edge_dependency_degree;
use hyperex_core::Hypergraph;
use num_bigint::BigInt;

use super::{trivial_ex, PatternParams};
use crate::exact::{binom, factorial, int, pow, ratio};
use crate::report::BoundReport;
use crate::table::{ExKey, ExStatus, ExTable};
use crate::value::{BoundValue, Expr, REAL_MARGIN};

/// `S^{1/s₁} · n^{power − 1/P}` written as a single root
/// `(S^{P/s₁} · n^{power·P − 1})^{1/P}`, where `S = s₂+⋯+s_r − r + 1` and
/// `P = s₁⋯s_{r−1}`.
fn kst_root(sizes: &[usize], n: usize, power: usize) -> (BigInt, u32) {
    let r = sizes.len();
    let s_sum: usize = sizes[1..].iter().sum::<usize>() + 1 - r;
    let p: usize = sizes[..r - 1].iter().product();
    let radicand = pow(s_sum as i64, (p / sizes[0]) as u32) * pow(n as i64, (power * p - 1) as u32);
    (radicand, p as u32)
}

fn sorted(sizes: &[usize]) -> Vec<usize> {
    let mut s = sizes.to_vec();
    s.sort_unstable();
    s
}

fn real_note(rep: &mut BoundReport) {
    if matches!(rep.value, Some(BoundValue::Real { .. })) {
        rep.note(format!("irrational root evaluated in floating point, upper value has {REAL_MARGIN:e} relative margin"));
    }
}

/// `(s₂−1)^{1/s₁}/2 · n^{2−1/s₁} + (s₁−1)/2 · n ≥ ex(n, K_{s₁,s₂})`.
pub fn kst(n: usize, s1: usize, s2: usize) -> BoundReport {
    let mut rep = BoundReport::new("kst");
    rep.param("n", n).param("s1", s1).param("s2", s2);
    rep.require("s2 >= s1 >= 1", s2 >= s1 && s1 >= 1);
    if s1 == 0 || s2 == 0 {
        rep.undefined("part sizes must be positive");
        return rep;
    }
    let (x, k) = kst_root(&[s1, s2], n, 2);
    let v = Expr::new(ratio((s1 as i64 - 1) * n as i64, 2)).plus_root(ratio(1, 2), x, k).eval();
    rep.set_value(v, true);
    real_note(&mut rep);
    rep
}

/// `(s₂−1)^{1/s₁} · m · n^{1−1/s₁} + (s₁−1)·n ≥ Z(m, n, s₁, s₂)`, where the
/// `s₁`-part of `K_{s₁,s₂}` lies in the class of size `m`.
pub fn zarankiewicz_graph(m: usize, n: usize, s1: usize, s2: usize) -> BoundReport {
    let mut rep = BoundReport::new("zarankiewicz-graph");
    rep.param("m", m).param("n", n).param("s1", s1).param("s2", s2);
    rep.require("m, n, s1, s2 >= 1", m >= 1 && n >= 1 && s1 >= 1 && s2 >= 1);
    if s1 == 0 || s2 == 0 {
        rep.undefined("part sizes must be positive");
        return rep;
    }
    let (x, k) = kst_root(&[s1, s2], n, 1);
    let v = Expr::new(int((s1 as i64 - 1) * n as i64))
        .plus_root(int(m as i64), x, k)
        .eval();
    rep.set_value(v, true);
    real_note(&mut rep);
    rep
}

/// `(s₂+⋯+s_r−r+1)^{1/s₁}/r · n^{r−1/(s₁⋯s_{r−1})} + (s₁−1)/r · C(n, r−1)
/// ≥ ex(n, K^r_{s₁,…,s_r})`; two parts delegate to [`kst`].
pub fn erdos_kst(n: usize, sizes: &[usize]) -> BoundReport {
    let s = sorted(sizes);
    let r = s.len();
    if r == 2 {
        let mut rep = kst(n, s[0], s[1]);
        rep.formula = "erdos-kst".into();
        rep.note("two parts: same as the graph bound");
        return rep;
    }
    let mut rep = BoundReport::new("erdos-kst");
    rep.param("n", n).param("sizes", &s);
    rep.require("r >= 3", r >= 3).require("n >= r", n >= r);
    if r < 2 || s[0] == 0 {
        rep.undefined("need at least two parts of positive size");
        return rep;
    }
    let (x, k) = kst_root(&s, n, r);
    let v = Expr::new(int(binom(n as i64, r as i64 - 1) * BigInt::from(s[0] - 1)) / int(r as i64))
        .plus_root(ratio(1, r as i64), x, k)
        .eval();
    rep.set_value(v, true);
    real_note(&mut rep);
    rep
}

/// `(s₂+⋯+s_r−r+1)^{1/s₁}/(r−1) · m · n^{r−1−1/(s₁⋯s_{r−1})} + (s₁−1)·C(n, r−1)
/// ≥ Z(m, n, s₁, …, s_r)`.
pub fn zarankiewicz_hypergraph(m: usize, n: usize, sizes: &[usize]) -> BoundReport {
    let s = sorted(sizes);
    let r = s.len();
    let mut rep = BoundReport::new("zarankiewicz-hypergraph");
    rep.param("m", m).param("n", n).param("sizes", &s);
    rep.require("r >= 3", r >= 3).require("m, n >= 1", m >= 1 && n >= 1);
    if r < 2 || s[0] == 0 {
        rep.undefined("need at least two parts of positive size");
        return rep;
    }
    let (x, k) = kst_root(&s, n, r - 1);
    let v = Expr::new(int(binom(n as i64, r as i64 - 1) * BigInt::from(s[0] - 1)))
        .plus_root(ratio(m as i64, r as i64 - 1), x, k)
        .eval();
    rep.set_value(v, true);
    real_note(&mut rep);
    rep
}

/// `(s₂+⋯+s_r−r+1)^{1/s₁} · m · n^{r−1−1/(s₁⋯s_{r−1})} + (s₁−1) · C(n, r−1)
/// ≥ ex_star(m, n, K^r_{s₁,…,s_r})`.
///
/// Erdős' double count restricted to the `m`-set sees every edge at least
/// once rather than `r` times, so there is no `1/r` factor; see
/// [`star_turan_as_stated`] for the form with it.
pub fn star_turan(m: usize, n: usize, sizes: &[usize]) -> BoundReport {
    star_turan_scaled("star-turan", m, n, sizes, 1)
}

/// The star bound with both terms divided by `r`. It fails already for
/// `K_{1,2}` at `m = 1, n = 2`, where one edge beats the value `1/2`.
pub fn star_turan_as_stated(m: usize, n: usize, sizes: &[usize]) -> BoundReport {
    star_turan_scaled("star-turan-as-stated", m, n, sizes, sizes.len().max(1))
}

fn star_turan_scaled(id: &str, m: usize, n: usize, sizes: &[usize], divisor: usize) -> BoundReport {
    let s = sorted(sizes);
    let r = s.len();
    let mut rep = BoundReport::new(id);
    rep.param("m", m).param("n", n).param("sizes", &s);
    rep.require("r >= 2", r >= 2).require("m <= n", m <= n);
    if r < 2 || s[0] == 0 {
        rep.undefined("need at least two parts of positive size");
        return rep;
    }
    let (x, k) = kst_root(&s, n, r - 1);
    let v = Expr::new(int(binom(n as i64, r as i64 - 1) * BigInt::from(s[0] - 1)) / int(divisor as i64))
        .plus_root(ratio(m as i64, divisor as i64), x, k)
        .eval();
    rep.set_value(v, true);
    real_note(&mut rep);
    rep
}

/// `m·t·Δ + ex(n − m·t, F)`, an upper bound on the size of any
/// `(t+1)F`-free host with maximum degree `Δ`.
pub fn trivial_maxdeg(n: usize, t: usize, max_degree: usize, f: &PatternParams, table: &ExTable) -> BoundReport {
    let mut rep = BoundReport::new("maxdeg");
    rep.param("n", n).param("t", t).param("max_degree", max_degree).param("F", &f.name);
    rep.require("m >= r >= 2", f.m >= f.r && f.r >= 2);
    let rest = n as i64 - (f.m * t) as i64;
    rep.require("n >= m*t", rest >= 0);
    let key = ExKey::plain(f.name.clone(), rest.max(0) as usize);
    let Some(ex) = rep.ex_input(table, key, ExStatus::Upper, trivial_ex(rest, f.r, f.m)) else {
        return rep;
    };
    let v = BigInt::from(f.m * t) * BigInt::from(max_degree) + ex;
    rep.set_value(BoundValue::Exact(int(v)), true);
    rep
}

/// `1 − 1/(e(d + 1 + r²|F|/v(F)))`, where every edge of `F` meets at most
/// `d` others: the minimum-degree ratio forcing a perfect `F`-packing.
pub fn lu_szekely(f: &Hypergraph) -> BoundReport {
    let mut rep = BoundReport::new("lu-szekely");
    let d = edge_dependency_degree(f);
    rep.param("r", f.r()).param("v", f.n()).param("edges", f.edge_count()).param("d", d);
    rep.require("F non-empty", f.edge_count() > 0);
    if f.n() == 0 {
        rep.undefined("F has no vertices");
        return rep;
    }
    let r = f.r() as f64;
    let inner = d as f64 + 1.0 + r * r * f.edge_count() as f64 / f.n() as f64;
    let v = 1.0 - 1.0 / (std::f64::consts::E * inner);
    rep.set_value(BoundValue::Real { approx: v, upper: v }, false);
    rep
}

/// `1 − 1/(2e·r²·∏sᵢ)`, the complete r-partite specialization of
/// [`lu_szekely`].
pub fn lu_szekely_complete(sizes: &[usize]) -> BoundReport {
    let s = sorted(sizes);
    let mut rep = BoundReport::new("lu-szekely-complete");
    rep.param("sizes", &s);
    let r = s.len() as f64;
    let prod: f64 = s.iter().map(|&x| x as f64).product();
    let v = 1.0 - 1.0 / (2.0 * std::f64::consts::E * r * r * prod);
    rep.set_value(BoundValue::Real { approx: v, upper: v }, false);
    rep
}

/// `r!` as used in window constants.
pub(crate) fn r_factorial(r: usize) -> f64 {
    crate::exact::to_f64(&int(factorial(r as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperex_core::construct::complete;
    use hyperex_core::pattern::complete_multipartite;

    fn approx(rep: &BoundReport) -> f64 {
        rep.value.as_ref().unwrap().approx()
    }

    #[test]
    fn kst_perfect_square() {
        let rep = kst(16, 2, 2);
        assert_eq!(rep.value, Some(BoundValue::Exact(int(40))));
        assert_eq!(rep.floor, Some(BigInt::from(40)));
    }

    #[test]
    fn kst_with_star() {
        // s₁ = 1: (s₂−1)/2 · n
        assert_eq!(kst(10, 1, 3).value, Some(BoundValue::Exact(int(10))));
    }

    #[test]
    fn zarankiewicz_square() {
        assert_eq!(zarankiewicz_graph(4, 4, 2, 2).value, Some(BoundValue::Exact(int(12))));
        let rep = zarankiewicz_graph(5, 5, 2, 2);
        assert!((approx(&rep) - (5.0 * 5f64.sqrt() + 5.0)).abs() < 1e-9);
    }

    #[test]
    fn erdos_kst_three_parts() {
        // 2^{1/2}/3 · 6^{3−1/4} + 1/3 · C(6,2)
        let rep = erdos_kst(6, &[2, 2, 2]);
        let expect = 2f64.sqrt() / 3.0 * 6f64.powf(2.75) + 5.0;
        assert!((approx(&rep) - expect).abs() < 1e-9 * expect);
        let BoundValue::Real { upper, approx: a } = rep.value.clone().unwrap() else { panic!() };
        assert!(upper > a);
        // s₁ = 1 kills the binomial term
        let rep = erdos_kst(6, &[1, 1, 2]);
        let expect = 1f64.powf(1.0) / 3.0 * 6f64.powf(2.0);
        assert!((approx(&rep) - expect).abs() < 1e-9);
    }

    #[test]
    fn erdos_kst_two_parts_delegates() {
        assert_eq!(erdos_kst(16, &[2, 2]).value, kst(16, 2, 2).value);
    }

    #[test]
    fn hypergraph_zarankiewicz_and_star() {
        let rep = zarankiewicz_hypergraph(3, 4, &[2, 2, 2]);
        let expect = 2f64.sqrt() / 2.0 * 3.0 * 4f64.powf(1.75) + 6.0;
        assert!((approx(&rep) - expect).abs() < 1e-9 * expect);
        // graph star bound at (m, n) = (3, 8), sizes (1, 2): 3·8^0 + 0
        assert_eq!(star_turan(3, 8, &[1, 2]).value, Some(BoundValue::Exact(int(3))));
        assert_eq!(star_turan_as_stated(3, 8, &[1, 2]).value, Some(BoundValue::Exact(ratio(3, 2))));
        // m = n: the stated form has the Erdős shape, the star form r times it
        let a = approx(&star_turan_as_stated(9, 9, &[2, 2]));
        let b = approx(&kst(9, 2, 2));
        assert!((a - b).abs() < 1e-9);
        assert!((approx(&star_turan(9, 9, &[2, 2])) - 2.0 * b).abs() < 1e-9);
    }

    #[test]
    fn stated_star_bound_is_beaten_by_one_edge() {
        // a single edge is a K_{1,2}-free 1-star on two vertices
        let stated = star_turan_as_stated(1, 2, &[1, 2]).value.unwrap();
        assert!(stated.approx() < 1.0);
        assert!(star_turan(1, 2, &[1, 2]).value.unwrap().approx() >= 1.0);
    }

    #[test]
    fn lu_szekely_thresholds() {
        // K3: each edge meets the other two
        let rep = lu_szekely(&complete(3, 2));
        assert_eq!(rep.params["d"], 2);
        let expect = 1.0 - 1.0 / (std::f64::consts::E * (3.0 + 4.0));
        assert!((approx(&rep) - expect).abs() < 1e-15);
        // single edge: d = 0
        assert_eq!(lu_szekely(&complete(2, 2)).params["d"], 0);
        // the specialization is a separate, weaker-or-equal form for K^3_{1,1,2}
        let p = complete_multipartite(&[1, 1, 2]).unwrap();
        let general = approx(&lu_szekely(p.base()));
        let special = approx(&lu_szekely_complete(&[1, 1, 2]));
        assert!(special >= general);
        assert!((special - (1.0 - 1.0 / (2.0 * std::f64::consts::E * 9.0 * 2.0))).abs() < 1e-15);
    }

    #[test]
    fn maxdeg_at_t_zero_is_ex() {
        let k3 = PatternParams::parse("K3").unwrap();
        let mut t = ExTable::new();
        t.upsert(crate::table::ExRecord {
            family: "K3".into(),
            variant: crate::table::Variant::Plain,
            n: 7,
            value: 12,
            status: ExStatus::Exact,
            witness: None,
        })
        .unwrap();
        assert_eq!(trivial_maxdeg(7, 0, 6, &k3, &t).floor, Some(BigInt::from(12)));
        // ex(1, K3) = 0 in closed form
        assert_eq!(trivial_maxdeg(7, 2, 4, &k3, &t).floor, Some(BigInt::from(24)));
    }
}
