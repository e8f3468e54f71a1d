//! Small combinatorial helpers shared across the crate.

/// Calls `f` on every k-subset of `0..n` in lexicographic order.
pub fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[u32])) {
    if k > n {
        return;
    }
    let mut c: Vec<u32> = (0..k as u32).collect();
    loop {
        f(&c);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (c[i] as usize) < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The first k-subset of `0..n` in lexicographic order satisfying `pred`.
pub fn find_combination(n: usize, k: usize, mut pred: impl FnMut(&[u32]) -> bool) -> Option<Vec<u32>> {
    if k > n {
        return None;
    }
    let mut c: Vec<u32> = (0..k as u32).collect();
    loop {
        if pred(&c) {
            return Some(c);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if (c[i] as usize) < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All k-subsets of `items`, in lexicographic order of positions.
pub fn combinations_of(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_combination(items.len(), k, |c| {
        out.push(c.iter().map(|&i| items[i as usize]).collect());
    });
    out
}

/// Binomial coefficient with `C(a, b) = 0` whenever `b > a`.
pub fn binom_u128(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_counts() {
        for n in 0..8 {
            for k in 0..=n + 1 {
                let mut count = 0u128;
                let mut prev: Option<Vec<u32>> = None;
                for_each_combination(n, k, |c| {
                    if let Some(p) = &prev {
                        assert!(p.as_slice() < c);
                    }
                    prev = Some(c.to_vec());
                    count += 1;
                });
                assert_eq!(count, binom_u128(n as u64, k as u64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn find_first_match() {
        assert_eq!(find_combination(5, 2, |c| c[0] + c[1] == 5), Some(vec![1, 4]));
        assert_eq!(find_combination(3, 4, |_| true), None);
        assert_eq!(find_combination(4, 2, |_| false), None);
    }

    #[test]
    fn zero_subset() {
        let mut seen = 0;
        for_each_combination(3, 0, |c| {
            assert!(c.is_empty());
            seen += 1;
        });
        assert_eq!(seen, 1);
    }
}
