//! Exact rank computations: bit-packed GF(2), modular GF(p), and fraction-free
//! elimination over the integers for characteristic zero.

use num_bigint::BigInt;
use num_traits::Zero;

/// Incremental GF(2) row basis. Rows are packed into `u64` words; each stored pivot
/// row is reduced against earlier pivots on insertion, so rank is the number of
/// stored rows.
pub struct Gf2Basis {
    words: usize,
    /// `pivot_of[col]` is the index into `rows` whose leading bit is `col`.
    pivot_of: Vec<u32>,
    rows: Vec<u64>,
    rank: usize,
}

const NO_PIVOT: u32 = u32::MAX;

impl Gf2Basis {
    pub fn new(ncols: usize) -> Self {
        let words = ncols.div_ceil(64).max(1);
        Gf2Basis {
            words,
            pivot_of: vec![NO_PIVOT; ncols.max(1)],
            rows: Vec::new(),
            rank: 0,
        }
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// Reduces `row` (length `words`) against the basis and stores it if independent.
    pub fn insert(&mut self, row: &mut [u64]) -> bool {
        debug_assert_eq!(row.len(), self.words);
        let mut w = 0;
        while w < self.words {
            let word = row[w];
            if word == 0 {
                w += 1;
                continue;
            }
            let col = w * 64 + word.trailing_zeros() as usize;
            let p = self.pivot_of[col];
            if p == NO_PIVOT {
                self.pivot_of[col] = self.rank as u32;
                self.rows.extend_from_slice(row);
                self.rank += 1;
                return true;
            }
            let start = p as usize * self.words;
            let pivot = &self.rows[start..start + self.words];
            for (dst, src) in row[w..].iter_mut().zip(&pivot[w..]) {
                *dst ^= *src;
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Rank over GF(2) of a matrix given as rows of set-bit column indices.
pub fn rank_gf2(ncols: usize, rows: &[Vec<usize>]) -> usize {
    let mut basis = Gf2Basis::new(ncols);
    let mut buf = vec![0u64; basis.words()];
    for r in rows {
        buf.iter_mut().for_each(|w| *w = 0);
        for &c in r {
            buf[c / 64] ^= 1 << (c % 64);
        }
        basis.insert(&mut buf);
    }
    basis.rank()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a != 0
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank over GF(p) of a dense integer matrix.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    debug_assert!((2..(1 << 31)).contains(&p));
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x %= p;
        }
    }
    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_inverse(rows[rank][col], p);
        for x in rows[rank][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for r in bottom.iter_mut() {
            let factor = r[col];
            if factor == 0 {
                continue;
            }
            for (x, &y) in r[col..].iter_mut().zip(&prow[col..]) {
                *x = (*x + (p - factor) * y) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals of a dense integer matrix, by fraction-free (Bareiss)
/// elimination. Runs in `i128` and restarts with big integers on overflow.
pub fn rank_rational(rows: &[Vec<i64>], ncols: usize) -> usize {
    match unit_pivot_reduce(rows.to_vec(), ncols) {
        Some((eliminated, rest)) => eliminated + bareiss_rank(&rest, ncols),
        None => bareiss_rank(rows, ncols),
    }
}

/// Integer elimination on `±1` pivots only, so no division is needed and the
/// row space over Q is unchanged. Returns the number of pivots taken and the
/// rows left over, or `None` on `i64` overflow.
fn unit_pivot_reduce(mut m: Vec<Vec<i64>>, ncols: usize) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut eliminated = 0;
    loop {
        let found =
            (0..m.len()).find_map(|r| m[r].iter().position(|x| x.abs() == 1).map(|c| (r, c)));
        let Some((r, col)) = found else { break };
        let prow = m.swap_remove(r);
        let sign = prow[col];
        for row in m.iter_mut() {
            let factor = row[col] * sign;
            if factor == 0 {
                continue;
            }
            for c in 0..ncols {
                row[c] = row[c].checked_sub(factor.checked_mul(prow[c])?)?;
            }
        }
        m.retain(|row| row.iter().any(|&x| x != 0));
        eliminated += 1;
    }
    Some((eliminated, m))
}

fn bareiss_rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(small, ncols) {
        Some(r) => r,
        None => {
            let big: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_big(big, ncols)
        }
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>, ncols: usize) -> Option<usize> {
    let nrows = m.len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col];
        for r in bottom.iter_mut() {
            let factor = r[col];
            for c in col..ncols {
                let a = r[c].checked_mul(pv)?;
                let b = factor.checked_mul(prow[c])?;
                r[c] = a.checked_sub(b)? / prev;
            }
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let pv = prow[col].clone();
        for r in bottom.iter_mut() {
            let factor = r[col].clone();
            for c in col..ncols {
                let v = (&r[c] * &pv - &factor * &prow[c]) / &prev;
                r[c] = v;
            }
        }
        prev = pv;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_gf2_rank(m: &[Vec<i64>]) -> usize {
        let rows: Vec<Vec<u64>> = m
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(2) as u64).collect())
            .collect();
        let ncols = m.first().map_or(0, |r| r.len());
        rank_mod_p(rows, ncols, 2)
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]];
        assert_eq!(rank_rational(&m, 3), 2);
        assert_eq!(dense_gf2_rank(&m), 2);
        let id = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_rational(&id, 2), 2);
        let rows: Vec<Vec<u64>> = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_mod_p(rows, 2, 2), 0);
        assert_eq!(rank_gf2(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]), 2);
    }

    #[test]
    fn bareiss_falls_back_on_overflow() {
        // Large entries force the BigInt path; matrix has full rank 3.
        let big = i64::MAX / 3;
        let m = vec![vec![big, 1, 7], vec![3, big, 11], vec![5, 13, big]];
        assert_eq!(rank_rational(&m, 3), 3);
        let singular = vec![vec![big, big - 1], vec![big, big - 1]];
        assert_eq!(rank_rational(&singular, 2), 1);
    }

    #[test]
    fn gf2_basis_across_word_boundary() {
        let n = 130;
        let rows: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        assert_eq!(rank_gf2(n, &rows), n - 1);
        let mut closed = rows.clone();
        closed.push(vec![0, n - 1]);
        assert_eq!(rank_gf2(n, &closed), n - 1);
    }

    proptest! {
        #[test]
        fn gf2_packed_agrees_with_dense(m in proptest::collection::vec(
            proptest::collection::vec(0i64..2, 70), 1..40)) {
            let rows: Vec<Vec<usize>> = m.iter()
                .map(|r| r.iter().enumerate().filter(|(_, &x)| x == 1).map(|(i, _)| i).collect())
                .collect();
            prop_assert_eq!(rank_gf2(70, &rows), dense_gf2_rank(&m));
        }

        #[test]
        fn unit_pivot_prepass_preserves_rank(m in proptest::collection::vec(
            proptest::collection::vec(-3i64..4, 8), 1..10)) {
            prop_assert_eq!(rank_rational(&m, 8), bareiss_rank(&m, 8));
        }

        #[test]
        fn rational_rank_bounds_prime_ranks(m in proptest::collection::vec(
            proptest::collection::vec(-2i64..3, 6), 1..7)) {
            let q = rank_rational(&m, 6);
            for p in [2u64, 3, 5] {
                let rows = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
                prop_assert!(rank_mod_p(rows, 6, p) <= q);
            }
        }
    }
}
