//! Sizes of the lower-bound constructions and classical thresholds.

use num_bigint::BigInt;
use num_integer::Roots;

use super::{trivial_ex, PatternParams};
use crate::exact::{binom, int, ratio};
use crate::report::BoundReport;
use crate::table::{ExKey, ExStatus, ExTable};
use crate::value::BoundValue;

struct Shape<'a> {
    id: &'a str,
    /// Clique order.
    clique: i64,
    /// Whether the clique is joined to the rest (otherwise disjoint).
    join: bool,
    rest_family: String,
    rest_min_vertices: usize,
}

fn construction_size(n: usize, t: usize, f: &PatternParams, table: &ExTable, shape: Shape<'_>) -> BoundReport {
    let mut rep = BoundReport::new(shape.id);
    let r = f.r as i64;
    rep.param("n", n)
        .param("t", t)
        .param("F", &f.name)
        .param("r", f.r)
        .param("m", f.m)
        .param("tau", f.tau)
        .param("clique", shape.clique)
        .param("rest_family", &shape.rest_family);
    rep.require("t >= 1", t >= 1).require("n >= m*t", n >= f.m * t);
    let rest = n as i64 - shape.clique;
    if rest < 0 {
        rep.undefined(format!("the construction needs {} vertices but n = {n}", shape.clique));
        return rep;
    }
    let key = ExKey::plain(shape.rest_family.clone(), rest as usize);
    let trivial = trivial_ex(rest, f.r, shape.rest_min_vertices);
    let Some(ex) = rep.ex_input(table, key, ExStatus::Lower, trivial) else {
        return rep;
    };
    let n = n as i64;
    let value: BigInt = if shape.join {
        binom(n, r) - binom(rest, r) + ex
    } else {
        binom(shape.clique, r) + ex
    };
    rep.set_value(BoundValue::Exact(int(value)), true);
    rep
}

/// `g₁ = C(n,r) − C(n−t,r) + ex(n−t, F)`, the size of `K_t ⋈ EX(n−t, F)`.
pub fn g1(n: usize, t: usize, f: &PatternParams, table: &ExTable) -> BoundReport {
    let shape = Shape {
        id: "g1",
        clique: t as i64,
        join: true,
        rest_family: f.name.clone(),
        rest_min_vertices: f.m,
    };
    construction_size(n, t, f, table, shape)
}

/// `g₂ = C(n,r) − C(n−τ(t+1)+1,r) + ex(n−τ(t+1)+1, F[m−τ+1])`.
pub fn g2(n: usize, t: usize, f: &PatternParams, table: &ExTable) -> BoundReport {
    let shape = Shape {
        id: "g2",
        clique: (f.tau * (t + 1)) as i64 - 1,
        join: true,
        rest_family: f.reduced_family(),
        rest_min_vertices: f.m - f.tau + 1,
    };
    construction_size(n, t, f, table, shape)
}

/// `g₃ = C(m(t+1)−1, r) + ex(n−m(t+1)+1, F)`, the size of
/// `K_{m(t+1)−1} ⊔ EX(n−m(t+1)+1, F)`.
pub fn g3(n: usize, t: usize, f: &PatternParams, table: &ExTable) -> BoundReport {
    let shape = Shape {
        id: "g3",
        clique: (f.m * (t + 1)) as i64 - 1,
        join: false,
        rest_family: f.name.clone(),
        rest_min_vertices: f.m,
    };
    construction_size(n, t, f, table, shape)
}

/// `max{C(2t+1, 2), C(n,2) − C(n−t, 2)}`, the largest graph on `n` vertices
/// without `t+1` disjoint edges.
pub fn erdos_gallai(n: usize, t: usize) -> BoundReport {
    let mut rep = BoundReport::new("erdos-gallai");
    rep.param("n", n).param("t", t);
    rep.require("t + 1 <= n/2", 2 * (t + 1) <= n);
    let (n, t) = (n as i64, t as i64);
    let a = binom(2 * t + 1, 2);
    let b = binom(n, 2) - binom(n - t, 2);
    rep.set_value(BoundValue::Exact(int(a.max(b))), true);
    rep
}

/// `Σ_{j∈[i]} C((t+1)τᵢ−1, j)·C(n−(t+1)τᵢ+1, r−j)`, the size of
/// `B(n, (t+1)τᵢ−1, r, i)`.
pub fn i_independent_lower(n: usize, t: usize, tau_i: usize, r: usize, i: usize) -> BoundReport {
    let mut rep = BoundReport::new("i-independent-lower");
    rep.param("n", n).param("t", t).param("tau_i", tau_i).param("r", r).param("i", i);
    rep.require("1 <= i <= r-1", i >= 1 && i < r);
    let m = ((t + 1) * tau_i) as i64 - 1;
    if m < 0 || m > n as i64 {
        rep.undefined(format!("the construction needs a core of {m} vertices out of {n}"));
        return rep;
    }
    let total = (1..=i as i64).fold(BigInt::from(0), |acc, j| {
        acc + binom(m, j) * binom(n as i64 - m, r as i64 - j)
    });
    rep.set_value(BoundValue::Exact(int(total)), true);
    rep
}

/// `(1 − m/n)·ex(m, F)/m`, a lower bound on `ex(n, F)/n` for connected `F`.
pub fn turan_ratio_lower(n: usize, m: usize, ex_m: u64) -> BoundReport {
    let mut rep = BoundReport::new("turan-ratio-lower");
    rep.param("n", n).param("m", m).param("ex_m", ex_m);
    rep.require("n >= m >= 1", n >= m && m >= 1).require("F connected (caller's responsibility)", true);
    if n == 0 || m == 0 {
        rep.undefined("n and m must be positive");
        return rep;
    }
    let v = (int(1) - ratio(m as i64, n as i64)) * ratio(ex_m as i64, m as i64);
    rep.set_value(BoundValue::Exact(v), false);
    rep
}

/// Largest `t` with `t ≤ √(n/400)`, the range of the classical disjoint
/// triangles theorem.
pub fn erdos_triangle_t_max(n: usize) -> BoundReport {
    let mut rep = BoundReport::new("erdos-triangle-t-max");
    rep.param("n", n);
    let t = (n / 400).sqrt();
    // the integer square root of ⌊n/400⌋ is the largest t with 400t² ≤ n
    rep.set_value(BoundValue::Exact(int(t as i64)), true);
    rep
}

/// `(2n − 3ℓ² + 2ℓ)/(ℓ³ + 2ℓ² + ℓ + 1)`, the range of the classical disjoint
/// cliques theorem for `K_{ℓ+1}`.
pub fn moon_t_max(n: usize, ell: usize) -> BoundReport {
    let mut rep = BoundReport::new("moon-t-max");
    rep.param("n", n).param("ell", ell);
    rep.require("ell >= 2", ell >= 2);
    let (n, l) = (n as i64, ell as i64);
    let v = ratio(2 * n - 3 * l * l + 2 * l, l * l * l + 2 * l * l + l + 1);
    rep.set_value(BoundValue::Exact(v), true);
    rep
}

/// Smallest `n` at which [`moon_t_max`] reaches 1.
pub fn moon_first_n(ell: usize) -> usize {
    let l = ell as i64;
    // 2n − 3ℓ² + 2ℓ ≥ ℓ³ + 2ℓ² + ℓ + 1
    let need = l * l * l + 5 * l * l - l + 1;
    ((need + 1) / 2).max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::ReportStatus;
    use crate::table::{ExRecord, Variant};

    fn table(entries: &[(&str, usize, u64)]) -> ExTable {
        let mut t = ExTable::new();
        for &(f, n, v) in entries {
            t.upsert(ExRecord {
                family: f.into(),
                variant: Variant::Plain,
                n,
                value: v,
                status: ExStatus::Exact,
                witness: None,
            })
            .unwrap();
        }
        t
    }

    #[test]
    fn g1_for_triangles() {
        let k3 = PatternParams::parse("K3").unwrap();
        let rep = g1(13, 1, &k3, &table(&[("K3", 12, 36)]));
        assert_eq!(rep.floor, Some(BigInt::from(48)));
        assert_eq!(rep.status, ReportStatus::Exact);
        assert!(rep.preconditions_hold());
    }

    #[test]
    fn g1_at_t_zero_is_ex() {
        let c4 = PatternParams::parse("K2,2").unwrap();
        let rep = g1(9, 0, &c4, &table(&[("K2,2", 9, 13)]));
        assert_eq!(rep.floor, Some(BigInt::from(13)));
        assert!(!rep.preconditions_hold());
    }

    #[test]
    fn g3_with_empty_clique_term() {
        // m(t+1) − 1 = 2 < r = 3 for a single 3-edge at t = 0
        let e3 = PatternParams::parse("E3").unwrap();
        let rep = g3(6, 0, &e3, &table(&[("E3", 4, 0)]));
        assert_eq!(rep.floor, Some(BigInt::from(0)));
    }

    #[test]
    fn missing_entries_are_listed() {
        let k3 = PatternParams::parse("K3").unwrap();
        let rep = g2(20, 1, &k3, &ExTable::new());
        // K3[2] has two vertices, so ex(17, K3[2]) is not trivial
        assert_eq!(rep.status, ReportStatus::Unresolved);
        assert_eq!(rep.missing, vec![ExKey::plain("K3[2]", 17)]);
        assert!(rep.value.is_none());
    }

    #[test]
    fn lower_status_propagates() {
        let k3 = PatternParams::parse("K3").unwrap();
        let mut t = ExTable::new();
        t.upsert(ExRecord {
            family: "K3".into(),
            variant: Variant::Plain,
            n: 12,
            value: 30,
            status: ExStatus::Lower,
            witness: None,
        })
        .unwrap();
        let rep = g1(13, 1, &k3, &t);
        assert_eq!(rep.status, ReportStatus::Lower);
        assert_eq!(rep.floor, Some(BigInt::from(42)));
    }

    #[test]
    fn constructions_too_big_for_n() {
        let k3 = PatternParams::parse("K3").unwrap();
        let rep = g3(4, 1, &k3, &ExTable::new());
        assert_eq!(rep.status, ReportStatus::Undefined);
    }

    #[test]
    fn erdos_gallai_values() {
        assert_eq!(erdos_gallai(6, 1).floor, Some(BigInt::from(5)));
        assert_eq!(erdos_gallai(7, 2).floor, Some(BigInt::from(11)));
        assert_eq!(erdos_gallai(5, 0).floor, Some(BigInt::from(0)));
        assert!(!erdos_gallai(5, 2).preconditions_hold());
    }

    #[test]
    fn i_independent_counts() {
        // r = 2, i = 1: edges meeting a core of (t+1)τ₁ − 1 vertices exactly once
        let rep = i_independent_lower(8, 1, 2, 2, 1);
        assert_eq!(rep.floor, Some(BigInt::from(3 * 5)));
        assert!(!i_independent_lower(8, 1, 2, 2, 2).preconditions_hold());
    }

    #[test]
    fn ratio_and_thresholds() {
        assert_eq!(turan_ratio_lower(5, 5, 6).exact().unwrap(), &int(0));
        assert_eq!(turan_ratio_lower(10, 5, 6).exact().unwrap(), &ratio(3, 5));
        assert_eq!(erdos_triangle_t_max(399).floor, Some(BigInt::from(0)));
        assert_eq!(erdos_triangle_t_max(400).floor, Some(BigInt::from(1)));
        assert_eq!(erdos_triangle_t_max(1599).floor, Some(BigInt::from(1)));
        assert_eq!(erdos_triangle_t_max(1600).floor, Some(BigInt::from(2)));
        assert_eq!(moon_t_max(5, 2).floor, Some(BigInt::from(0)));
    }

    #[test]
    fn moon_window_opens_at_first_n() {
        for ell in 2..8 {
            let first = (0..10_000)
                .find(|&n| moon_t_max(n, ell).exact().unwrap() >= &int(1))
                .unwrap();
            assert_eq!(moon_first_n(ell), first, "ell = {ell}");
        }
    }
}
