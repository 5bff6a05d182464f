use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::barnes::AVec;
use crate::exact::rational::rat;

/// Entries random parameter vectors are drawn from, as `(numerator, denominator)`.
pub const AVEC_POOL: [(i64, i64); 6] = [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (5, 1)];

/// A length-`n` vector of pool entries; depends only on `(seed, n, draw)`.
pub fn draw_avec(seed: u64, n: usize, draw: u64) -> AVec {
    let stream = seed ^ ((n as u64) << 40) ^ draw.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(stream);
    let entries = (0..n)
        .map(|_| {
            let (p, q) = AVEC_POOL[rng.gen_range(0..AVEC_POOL.len())];
            rat(p, q)
        })
        .collect();
    AVec::new(entries).expect("pool entries are positive")
}

/// Non-decreasing, pairwise coprime tuples of length `n` with entries in `1..=max_part`.
pub fn coprime_multisets(n: usize, max_part: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, n: usize, max_part: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let start = prefix.last().copied().unwrap_or(1);
        for p in start..=max_part {
            if prefix.iter().all(|q| q.gcd(&p) == 1) {
                prefix.push(p);
                extend(prefix, n, max_part, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, max_part, &mut out);
    out
}

/// All index subsets of `0..n` with exactly `size` elements, ordered by bitmask.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|mask| mask.count_ones() as usize == size)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        assert_eq!(draw_avec(1, 4, 2), draw_avec(1, 4, 2));
        assert_eq!(draw_avec(1, 4, 2).len(), 4);
        let distinct: std::collections::HashSet<String> =
            (0..20).map(|d| draw_avec(1, 4, d).to_string()).collect();
        assert!(distinct.len() > 10);
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_of_size(5, 2).len(), 10);
        assert_eq!(subsets_of_size(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets_of_size(3, 3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn multisets() {
        assert_eq!(coprime_multisets(1, 3), vec![vec![1], vec![2], vec![3]]);
        let two = coprime_multisets(2, 4);
        assert!(two.contains(&vec![1, 1]));
        assert!(two.contains(&vec![3, 4]));
        assert!(!two.contains(&vec![2, 4]));
        assert!(!two.contains(&vec![2, 2]));
    }
}
