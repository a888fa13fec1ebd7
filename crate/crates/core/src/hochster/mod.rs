//! Graded Betti numbers of `S/I_Γ` through Hochster's formula
//! `β_{i,j} = Σ_{|W| = j} β̃_{j-i-1}(Γ[W])`, and the shift data derived from them.

pub(crate) mod sweep;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::binomial_big;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;

pub use sweep::SweepBudget;

/// Graded Betti table of `S/I_Γ`, including `β_{0,0} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    d: usize,
    field: FieldSpec,
    /// `entries[i][j] = β_{i,j}` for `0 <= i, j <= n`.
    entries: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn codim(&self) -> usize {
        self.n - self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(0)
    }

    /// Rows `0..=length`, each indexed by `j = 0..=n`.
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.entries[..=self.length()]
    }

    /// Projective dimension `l`: the largest `i` with a nonzero `β_{i,j}`.
    pub fn length(&self) -> usize {
        self.entries
            .iter()
            .rposition(|row| row.iter().any(|&b| b != 0))
            .unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.get(i).map_or(0, |r| r.iter().sum())
    }

    /// `A(p, m) = β_{m-p-1, m} / C(n, m)`.
    pub fn average(&self, p: usize, m: usize) -> BigRational {
        if m == 0 || m > self.n || m < p + 1 {
            return BigRational::zero();
        }
        let count = self.get(m - p - 1, m);
        BigRational::new(BigInt::from(count), binomial_big(self.n as u64, m as u64))
    }

    pub fn min_shift(&self, i: usize) -> Option<usize> {
        self.entries.get(i)?.iter().position(|&b| b != 0)
    }

    pub fn max_shift(&self, i: usize) -> Option<usize> {
        self.entries.get(i)?.iter().rposition(|&b| b != 0)
    }

    pub fn shift_profile(&self) -> Result<ShiftProfile> {
        let length = self.length();
        if length == 0 || self.codim() == 0 {
            return Err(Error::ZeroIdeal);
        }
        let min_shifts: Vec<usize> = (1..=length)
            .map(|i| self.min_shift(i).expect("no gaps in a minimal resolution"))
            .collect();
        let max_shifts: Vec<usize> = (1..=length)
            .map(|i| self.max_shift(i).expect("no gaps in a minimal resolution"))
            .collect();
        let c = self.codim();
        let upper_skips = (1..=self.n)
            .filter(|j| !max_shifts[..c].contains(j))
            .collect();
        let lower_skips = (1..=self.n).filter(|j| !min_shifts.contains(j)).collect();
        let regularity = max_shifts
            .iter()
            .enumerate()
            .map(|(k, &m)| m - (k + 1))
            .max()
            .unwrap_or(0);
        Ok(ShiftProfile {
            n: self.n,
            min_shifts,
            max_shifts,
            length,
            codim: c,
            upper_skips,
            lower_skips,
            regularity,
        })
    }

    /// `m_i = M_i` for every `1 <= i <= l`.
    pub fn is_pure(&self) -> Result<bool> {
        Ok(self.shift_profile()?.is_pure())
    }
}

/// Minimal and maximal shifts of `S/I_Γ` with the skip sequences derived from them.
/// Shift vectors are stored 0-based: `min_shifts[0]` is `m_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftProfile {
    pub n: usize,
    pub min_shifts: Vec<usize>,
    pub max_shifts: Vec<usize>,
    pub length: usize,
    pub codim: usize,
    /// `Q_0 = 1 < Q_1 < .. < Q_{d-1}`: integers of `[n]` outside `{M_1, .., M_c}`.
    pub upper_skips: Vec<usize>,
    /// Integers of `[n]` that are not minimal shifts.
    pub lower_skips: Vec<usize>,
    pub regularity: usize,
}

impl ShiftProfile {
    /// `m_i` for 1-based `i`.
    pub fn m(&self, i: usize) -> usize {
        self.min_shifts[i - 1]
    }

    /// `M_i` for 1-based `i`.
    pub fn big_m(&self, i: usize) -> usize {
        self.max_shifts[i - 1]
    }

    pub fn is_pure(&self) -> bool {
        self.min_shifts == self.max_shifts
    }

    /// `m_{i+1} >= M_i` for all `i`.
    pub fn is_quasi_pure(&self) -> bool {
        (1..self.length).all(|i| self.min_shifts[i] >= self.max_shifts[i - 1])
    }

    pub fn is_t_leray(&self, t: usize) -> bool {
        self.regularity <= t
    }
}

/// Betti table under the default sweep budget.
pub fn betti_table(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with_budget(complex, field, &SweepBudget::default())
}

pub fn betti_table_with_budget(
    complex: &SimplicialComplex,
    field: FieldSpec,
    budget: &SweepBudget,
) -> Result<BettiTable> {
    let n = complex.n();
    let totals = sweep::induced_totals(complex, field, budget)?;
    let mut entries = vec![vec![0u64; n + 1]; n + 1];
    for (j, row) in totals.iter().enumerate() {
        for (p_idx, &sum) in row.iter().enumerate() {
            // p = p_idx - 1, i = j - p - 1 = j - p_idx
            if sum != 0 {
                let i = j
                    .checked_sub(p_idx)
                    .expect("β̃_p vanishes below p+1 vertices");
                entries[i][j] += sum;
            }
        }
    }
    Ok(BettiTable {
        n,
        d: complex.d(),
        field,
        entries,
    })
}

pub fn shift_profile(complex: &SimplicialComplex, field: FieldSpec) -> Result<ShiftProfile> {
    betti_table(complex, field)?.shift_profile()
}

/// `A(p, m)`: average of `β̃_p(Γ[W])` over all `m`-subsets `W`, by direct enumeration.
pub fn averaged_betti(
    complex: &SimplicialComplex,
    p: usize,
    m: usize,
    field: FieldSpec,
) -> BigRational {
    if m == 0 || m > complex.n() {
        return BigRational::zero();
    }
    let sum = sweep::sum_over_size(complex, p as isize, m, field);
    BigRational::new(
        BigInt::from(sum),
        binomial_big(complex.n() as u64, m as u64),
    )
}

pub fn is_pure_resolution(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(shift_profile(complex, field)?.is_pure())
}

pub fn is_quasi_pure(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(shift_profile(complex, field)?.is_quasi_pure())
}

pub fn is_t_leray(complex: &SimplicialComplex, t: usize, field: FieldSpec) -> Result<bool> {
    Ok(shift_profile(complex, field)?.is_t_leray(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::generators::*;

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(4, [[0, 1], [2, 3]]).unwrap()
    }

    fn nonzero(t: &BettiTable) -> Vec<(usize, usize, u64)> {
        let mut v = Vec::new();
        for i in 1..=t.n() {
            for j in 0..=t.n() {
                if t.get(i, j) != 0 {
                    v.push((i, j, t.get(i, j)));
                }
            }
        }
        v
    }

    #[test]
    fn four_cycle_table() {
        let t = betti_table(&cycle(4).unwrap(), FieldSpec::GF2).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(nonzero(&t), vec![(1, 2, 2), (2, 4, 1)]);
        let s = t.shift_profile().unwrap();
        assert_eq!(s.min_shifts, vec![2, 4]);
        assert_eq!(s.max_shifts, vec![2, 4]);
        assert_eq!(s.upper_skips, vec![1, 3]);
        assert_eq!(s.lower_skips, vec![1, 3]);
    }

    #[test]
    fn two_edges_table() {
        let t = betti_table(&two_edges(), FieldSpec::GF2).unwrap();
        assert_eq!(nonzero(&t), vec![(1, 2, 4), (2, 3, 4), (3, 4, 1)]);
        let s = t.shift_profile().unwrap();
        assert!(s.is_pure());
        assert_eq!(s.length, 3);
        assert_eq!(s.codim, 2);
    }

    #[test]
    fn simplex_has_zero_ideal() {
        let t = betti_table(&simplex(3).unwrap(), FieldSpec::GF2).unwrap();
        assert_eq!(t.get(0, 0), 1);
        assert!(nonzero(&t).is_empty());
        assert_eq!(t.shift_profile(), Err(Error::ZeroIdeal));
        assert_eq!(
            is_pure_resolution(&simplex(2).unwrap(), FieldSpec::GF2),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn triangle_plus_vertex_max_shifts() {
        let g =
            SimplicialComplex::from_vertex_lists(4, [vec![0, 1], vec![1, 2], vec![0, 2], vec![3]])
                .unwrap();
        let s = shift_profile(&g, FieldSpec::GF2).unwrap();
        assert_eq!(s.max_shifts, vec![3, 4, 4]);
    }

    #[test]
    fn example_seven_is_pure() {
        let s = shift_profile(&example_seven(), FieldSpec::GF2).unwrap();
        assert_eq!(s.min_shifts, vec![3, 4, 6, 7]);
        assert_eq!(s.max_shifts, vec![3, 4, 6, 7]);
        assert!(s.is_pure());
    }

    #[test]
    fn octahedron_is_pure() {
        let s = shift_profile(&cross_polytope_boundary(3).unwrap(), FieldSpec::GF2).unwrap();
        assert_eq!(s.min_shifts, vec![2, 4, 6]);
        assert!(s.is_pure());
        assert!(s.is_quasi_pure());
        assert_eq!(s.regularity, 3);
        assert!(s.is_t_leray(3) && !s.is_t_leray(2));
    }

    #[test]
    fn averages() {
        let g = two_edges();
        assert_eq!(
            averaged_betti(&g, 0, 2, FieldSpec::GF2),
            BigRational::new(2.into(), 3.into())
        );
        let sq = cycle(4).unwrap();
        assert_eq!(
            averaged_betti(&sq, 1, 4, FieldSpec::GF2),
            BigRational::from_integer(1.into())
        );
        for p in 0..2 {
            for m in 1..=p + 1 {
                assert!(averaged_betti(&sq, p, m, FieldSpec::GF2).is_zero());
            }
        }
    }

    #[test]
    fn table_average_matches_direct() {
        for c in [example_seven(), two_edges(), real_projective_plane()] {
            let t = betti_table(&c, FieldSpec::GF2).unwrap();
            for p in 0..c.d() {
                for m in 1..=c.n() {
                    let direct = averaged_betti(&c, p, m, FieldSpec::GF2);
                    assert_eq!(t.average(p, m), direct);
                    if m > p {
                        let scaled = direct
                            * BigRational::from_integer(
                                (binomial(c.n() as u64, m as u64) as u64).into(),
                            );
                        assert_eq!(
                            scaled,
                            BigRational::from_integer(t.get(m - p - 1, m).into())
                        );
                    }
                }
            }
        }
    }
}
