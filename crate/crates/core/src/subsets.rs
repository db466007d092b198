//! Colexicographic enumeration of k-subsets of `0..n`.
//!
//! Subsets are visited in colex order (ordered by largest element first,
//! then the next largest, …). [`find_first`] returns the first hit in that
//! order regardless of how the scan is split across threads.

use alloc::vec::Vec;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The `rank`-th k-subset of `0..n` in colex order.
pub fn unrank(mut rank: u128, n: usize, k: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; k];
    let mut hi = n;
    for i in (1..=k).rev() {
        let mut c = i - 1;
        while c + 1 < hi && binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        out[i - 1] = c;
        hi = c;
    }
    out
}

/// Advances `subset` to its colex successor within `0..n`. Returns `false`
/// when `subset` was the last one.
pub fn next_colex(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    for i in 0..k {
        let limit = if i + 1 < k { subset[i + 1] } else { n };
        if subset[i] + 1 < limit {
            subset[i] += 1;
            for (j, s) in subset.iter_mut().enumerate().take(i) {
                *s = j;
            }
            return true;
        }
    }
    false
}

/// Visits every k-subset of `0..n` in colex order.
pub fn for_each(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut s: Vec<usize> = (0..k).collect();
    loop {
        f(&s);
        if !next_colex(&mut s, n) {
            break;
        }
    }
}

fn scan_range<T>(n: usize, k: usize, start: u128, end: u128, f: &(impl Fn(&[usize]) -> Option<T> + Sync)) -> Option<T> {
    let mut s = unrank(start, n, k);
    let mut r = start;
    while r < end {
        if let Some(hit) = f(&s) {
            return Some(hit);
        }
        r += 1;
        if !next_colex(&mut s, n) {
            break;
        }
    }
    None
}

const CHUNK: u128 = 256;

/// First k-subset (colex order) for which `f` returns `Some`.
pub fn find_first<T: Send>(n: usize, k: usize, f: impl Fn(&[usize]) -> Option<T> + Sync + Send) -> Option<T> {
    let total = binomial(n, k);
    if total == 0 {
        return None;
    }
    let chunks = total.div_ceil(CHUNK);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if chunks > 1 && chunks <= u64::MAX as u128 {
            return (0..chunks as u64).into_par_iter().find_map_first(|c| {
                let start = c as u128 * CHUNK;
                scan_range(n, k, start, (start + CHUNK).min(total), &f)
            });
        }
    }
    let _ = chunks;
    scan_range(n, k, 0, total, &f)
}

/// Maps every k-subset through `f` and returns the results in colex order.
pub fn map_all<T: Send>(n: usize, k: usize, f: impl Fn(&[usize]) -> T + Sync + Send) -> Vec<T> {
    let total = binomial(n, k);
    if total == 0 {
        return Vec::new();
    }
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let chunks = total.div_ceil(CHUNK) as u64;
        if chunks > 1 {
            let parts: Vec<Vec<T>> = (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let start = c as u128 * CHUNK;
                    let end = (start + CHUNK).min(total);
                    let mut s = unrank(start, n, k);
                    let mut out = Vec::with_capacity((end - start) as usize);
                    for r in start..end {
                        out.push(f(&s));
                        if r + 1 < end {
                            next_colex(&mut s, n);
                        }
                    }
                    out
                })
                .collect();
            return parts.into_iter().flatten().collect();
        }
    }
    let mut out = Vec::new();
    for_each(n, k, |s| out.push(f(s)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 4), 495);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
    }

    #[test]
    fn colex_order_small() {
        let mut seen = Vec::new();
        for_each(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn unrank_matches_iteration() {
        let mut r = 0u128;
        for_each(9, 4, |s| {
            assert_eq!(unrank(r, 9, 4), s);
            r += 1;
        });
        assert_eq!(r, binomial(9, 4));
    }

    #[test]
    fn find_first_is_colex_minimum() {
        // The first 3-subset of 0..20 whose sum is 30.
        let hit = find_first(20, 3, |s| (s.iter().sum::<usize>() == 30).then(|| s.to_vec()));
        let mut expected = None;
        for_each(20, 3, |s| {
            if expected.is_none() && s.iter().sum::<usize>() == 30 {
                expected = Some(s.to_vec());
            }
        });
        assert_eq!(hit, expected);
    }

    #[test]
    fn map_all_keeps_order() {
        let sums = map_all(12, 5, |s| s.iter().sum::<usize>());
        let mut expected = Vec::new();
        for_each(12, 5, |s| expected.push(s.iter().sum::<usize>()));
        assert_eq!(sums, expected);
    }
}
