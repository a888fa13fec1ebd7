//! Small counting helpers shared across modules.

use num_bigint::BigInt;
use num_traits::One;

/// Binomial coefficient as `u128`; saturates only far beyond the sizes used here.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial n (n-1) ... (n-k+1).
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * (BigInt::from(n) - BigInt::from(i))
    })
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Iterates all `k`-element subsets of `{0, .., n-1}` as bitmasks, in increasing order
/// (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 64);
    let limit: u128 = 1u128 << n;
    let first: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else if k == 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = (x as u128) + (c as u128);
        if r >= limit {
            return None;
        }
        let r = r as u64;
        let next = (((r ^ x) >> 2) / c) | r;
        Some(next)
    })
}

/// The `rank`-th `k`-subset of `{0..n-1}` in colexicographic order.
pub fn unrank_colex(mut rank: u128, k: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i as u64 - 1;
        while binomial(c + 1, i as u64) <= rank {
            c += 1;
        }
        rank -= binomial(c, i as u64);
        mask |= 1u64 << c;
    }
    mask
}

/// Binary reflected Gray code: index of the bit flipped between step `i` and `i + 1`.
#[inline]
pub fn gray_flip_bit(i: u64) -> u32 {
    (i + 1).trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial_big(64, 32).to_string(), "1832624140942590534");
        assert_eq!(falling_factorial(7, 3), BigInt::from(210));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn subset_counts() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let subs: Vec<u64> = k_subsets(n, k).collect();
                assert_eq!(subs.len() as u128, binomial(n as u64, k as u64));
                assert!(subs.iter().all(|s| s.count_ones() as usize == k));
                assert!(subs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn unrank_matches_enumeration() {
        let all: Vec<u64> = k_subsets(7, 3).collect();
        for (i, &s) in all.iter().enumerate() {
            assert_eq!(unrank_colex(i as u128, 3), s);
        }
    }

    #[test]
    fn gray_code_visits_every_subset_once() {
        let n = 6;
        let mut seen = std::collections::HashSet::new();
        let mut w = 0u64;
        seen.insert(w);
        for i in 0..(1u64 << n) - 1 {
            w ^= 1 << gray_flip_bit(i);
            assert!(seen.insert(w));
        }
        assert_eq!(seen.len(), 1 << n);
    }
}
