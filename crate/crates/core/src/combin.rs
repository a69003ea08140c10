//! Lexicographic k-subset enumeration with ranking and unranking, so
//! that seed-space and graph-space scans can be split into contiguous
//! rank ranges across workers and still merge to bit-identical results.

/// Exact binomial coefficient, or `None` once the value exceeds `cap`
/// (also on intermediate overflow). Callers treat `None` as "over
/// budget".
pub fn binomial_capped(n: usize, k: usize, cap: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // exact at every step: acc * (n-k+i) is divisible by i
        acc = acc.checked_mul((n - k + i) as u128)? / i as u128;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}

/// Binomial coefficient that must fit comfortably (panics past u64); for
/// values already known to be under an enumeration budget.
pub fn binomial(n: usize, k: usize) -> u64 {
    binomial_capped(n, k, u64::MAX as u128).expect("binomial out of u64 range") as u64
}

/// The rank-`rank` k-subset of `0..n` in lexicographic order.
pub fn combination_at_rank(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut value = 0usize;
    for slot in 0..k {
        loop {
            let with_value = binomial(n - value - 1, k - slot - 1);
            if rank < with_value {
                out.push(value);
                value += 1;
                break;
            }
            rank -= with_value;
            value += 1;
        }
    }
    out
}

/// Rank of a sorted k-subset of `0..n` in lexicographic order.
pub fn combination_rank(n: usize, comb: &[usize]) -> u64 {
    let k = comb.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (slot, &value) in comb.iter().enumerate() {
        for skipped in prev..value {
            rank += binomial(n - skipped - 1, k - slot - 1);
        }
        prev = value + 1;
    }
    rank
}

/// Advances `comb` to its lexicographic successor among k-subsets of
/// `0..n`; returns false when `comb` was the last one.
pub fn next_combination(n: usize, comb: &mut [usize]) -> bool {
    let k = comb.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - (k - i) {
            comb[i] += 1;
            for j in (i + 1)..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(15, 11), 1365);
        assert_eq!(binomial(21, 16), 20349);
        assert_eq!(binomial(10, 8), 45);
        assert_eq!(binomial_capped(100, 50, 1_000), None);
        assert_eq!(binomial_capped(6, 3, 1_000), Some(20));
        assert_eq!(binomial_capped(3, 5, 10), Some(0));
    }

    #[test]
    fn enumeration_matches_rank_round_trip() {
        let (n, k) = (7, 3);
        let total = binomial(n, k);
        let mut comb: Vec<usize> = (0..k).collect();
        for rank in 0..total {
            assert_eq!(combination_at_rank(n, k, rank), comb);
            assert_eq!(combination_rank(n, &comb), rank);
            let has_next = next_combination(n, &mut comb);
            assert_eq!(has_next, rank + 1 < total);
        }
    }

    #[test]
    fn empty_subset() {
        assert_eq!(combination_at_rank(5, 0, 0), Vec::<usize>::new());
        assert_eq!(combination_rank(5, &[]), 0);
        let mut empty: [usize; 0] = [];
        assert!(!next_combination(5, &mut empty));
    }
}
