//! Reduced simplicial homology over a prime field or the rationals.
//!
//! The chain complex is augmented: `C_{-1}` is spanned by the empty face and
//! `∂_0` sends every vertex to it. Faces are oriented by increasing vertex index and
//! removing the vertex at position `t` carries the sign `(-1)^t`.

pub mod rank;

use std::fmt;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// `GF(p)`; construct through [`FieldSpec::prime`] to validate `p`.
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);

    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => 0,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= p {
        if p.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, .., β̃_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(Vec<u64>);

impl BettiVector {
    /// `β̃_p`; zero outside the stored range.
    pub fn get(&self, p: isize) -> u64 {
        if p < -1 {
            return 0;
        }
        self.0.get((p + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries starting at `β̃_{-1}`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    /// `Σ_{p>=-1} (-1)^p β̃_p`.
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// A boundary matrix with integer entries `±1`, interpreted in any field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Column-major sparse entries: `columns[j]` lists `(row, sign)`.
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m[i][j] = s as i64;
            }
        }
        m
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        // rank of the transpose: one row per column
        match field {
            FieldSpec::Prime(2) => {
                let rows: Vec<Vec<usize>> = self
                    .columns
                    .iter()
                    .map(|c| c.iter().map(|&(i, _)| i).collect())
                    .collect();
                rank::rank_gf2(self.rows, &rows)
            }
            FieldSpec::Prime(p) => {
                let p = p as u64;
                let rows: Vec<Vec<u64>> = self
                    .columns
                    .iter()
                    .map(|c| {
                        let mut r = vec![0u64; self.rows];
                        for &(i, s) in c {
                            r[i] = if s > 0 { 1 } else { p - 1 };
                        }
                        r
                    })
                    .collect();
                rank::rank_mod_p(rows, self.rows, p)
            }
            FieldSpec::Rationals => {
                let rows: Vec<Vec<i64>> = self
                    .columns
                    .iter()
                    .map(|c| {
                        let mut r = vec![0i64; self.rows];
                        for &(i, s) in c {
                            r[i] = s as i64;
                        }
                        r
                    })
                    .collect();
                rank::rank_rational(&rows, self.rows)
            }
        }
    }
}

/// `∂_k` with rows indexed by the sorted `(k-1)`-faces and columns by the sorted
/// `k`-faces.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> BoundaryMatrix {
    let lower = complex.faces_of_dim(k as isize - 1);
    let upper = complex.faces_of_dim(k as isize);
    let lower: Vec<u64> = lower.iter().map(|f| f.bits()).collect();
    let upper: Vec<u64> = upper.iter().map(|f| f.bits()).collect();
    boundary_from_masks(&lower, &upper)
}

fn boundary_from_masks(lower: &[u64], upper: &[u64]) -> BoundaryMatrix {
    let columns = upper
        .iter()
        .map(|&face| {
            Face::from_bits(face)
                .vertices()
                .enumerate()
                .map(|(pos, v)| {
                    let row = lower
                        .binary_search(&(face & !(1u64 << v)))
                        .expect("boundary face is present");
                    (row, if pos % 2 == 0 { 1i8 } else { -1 })
                })
                .collect()
        })
        .collect();
    BoundaryMatrix {
        rows: lower.len(),
        cols: upper.len(),
        columns,
    }
}

/// Reduced Betti numbers of `complex` over `field`.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let faces: Vec<Vec<u64>> = complex
        .faces_by_dim()
        .into_iter()
        .map(|v| v.into_iter().map(|f| f.bits()).collect())
        .collect();
    betti_from_faces(&faces, field)
}

/// Rank of `∂_k` for `k >= 1`, reading faces from sorted bitmask lists.
fn boundary_rank(lower: &[u64], upper: &[u64], field: FieldSpec) -> usize {
    if lower.is_empty() || upper.is_empty() {
        return 0;
    }
    if field == FieldSpec::GF2 {
        // fast path: pack each k-face's boundary straight into a bit row
        let mut basis = rank::Gf2Basis::new(lower.len());
        let mut buf = vec![0u64; basis.words()];
        for &face in upper {
            buf.iter_mut().for_each(|w| *w = 0);
            let mut bits = face;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let row = lower
                    .binary_search(&(face & !(1u64 << v)))
                    .expect("boundary face is present");
                buf[row / 64] |= 1 << (row % 64);
            }
            basis.insert(&mut buf);
            if basis.rank() == lower.len() {
                break;
            }
        }
        return basis.rank();
    }
    boundary_from_masks(lower, upper).rank(field)
}

/// Reduced Betti numbers from faces grouped by dimension (`faces[k+1]` holds the
/// sorted `k`-faces as bitmasks). Trailing empty groups are allowed.
pub(crate) fn betti_from_faces(faces: &[Vec<u64>], field: FieldSpec) -> BettiVector {
    let top = faces.iter().rposition(|g| !g.is_empty()).unwrap_or(0);
    let groups = &faces[..=top];
    // ranks[k] = rank ∂_k for k = 0..=dim, where groups[k] are the (k-1)-faces
    let mut ranks = vec![0usize; groups.len() + 1];
    if groups.len() > 1 {
        ranks[0] = usize::from(!groups[1].is_empty());
    }
    for k in 1..groups.len().saturating_sub(1) {
        ranks[k] = boundary_rank(&groups[k], &groups[k + 1], field);
    }
    let betti = (0..groups.len())
        .map(|i| {
            // i indexes dimension p = i - 1; ∂_p has index i - 1 in `ranks`
            let dim_c = groups[i].len();
            let rank_out = if i == 0 { 0 } else { ranks[i - 1] };
            let rank_in = ranks[i];
            (dim_c - rank_out - rank_in) as u64
        })
        .collect();
    BettiVector(betti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn field_validation() {
        assert!(FieldSpec::prime(7).is_ok());
        assert_eq!(FieldSpec::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::default(), FieldSpec::GF2);
    }

    #[test]
    fn edge_boundary() {
        let e = simplex(1).unwrap();
        let d1 = boundary_matrix(&e, 1);
        assert_eq!(d1.to_dense(), vec![vec![-1], vec![1]]);
        let d0 = boundary_matrix(&e, 0);
        assert_eq!(d0.to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn triangle_boundary_rank() {
        let t = boundary_of_simplex(2).unwrap();
        let d1 = boundary_matrix(&t, 1);
        assert_eq!((d1.rows, d1.cols), (3, 3));
        for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals] {
            assert_eq!(d1.rank(f), 2);
        }
    }

    #[test]
    fn boundary_squares_to_zero() {
        for c in [
            example_seven(),
            cross_polytope_boundary(3).unwrap(),
            torus_seven(),
        ] {
            for k in 1..=c.dim() as usize {
                let a = boundary_matrix(&c, k - 1).to_dense();
                let b = boundary_matrix(&c, k).to_dense();
                for row in &a {
                    for j in 0..b[0].len() {
                        let s: i64 = row.iter().zip(&b).map(|(x, r)| x * r[j]).sum();
                        assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn example_seven_top_boundary() {
        let g = example_seven();
        let d2 = boundary_matrix(&g, 2);
        assert_eq!(d2.cols, 21);
        // rank over Q equals that of the dense oracle elimination
        let dense = d2.to_dense();
        let rows: Vec<Vec<u64>> = dense
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(3) as u64).collect())
            .collect();
        assert_eq!(d2.rank(FieldSpec::GF3), rank::rank_mod_p(rows, 21, 3));
    }

    #[test]
    fn betti_of_basic_spaces() {
        let sq = cycle(4).unwrap();
        assert_eq!(reduced_betti(&sq, FieldSpec::GF2).entries(), &[0, 0, 1]);
        let two = SimplicialComplex::from_vertex_lists(4, [[0, 1], [2, 3]]).unwrap();
        for f in [FieldSpec::GF2, FieldSpec::Rationals] {
            assert_eq!(reduced_betti(&two, f).get(0), 1);
        }
        assert_eq!(
            reduced_betti(&SimplicialComplex::empty(), FieldSpec::GF2).entries(),
            &[1]
        );
        assert_eq!(
            reduced_betti(&simplex(0).unwrap(), FieldSpec::GF2).entries(),
            &[0, 0]
        );
    }

    #[test]
    fn projective_plane_is_field_sensitive() {
        let rp2 = real_projective_plane();
        let gf2 = reduced_betti(&rp2, FieldSpec::GF2);
        let q = reduced_betti(&rp2, FieldSpec::Rationals);
        let gf3 = reduced_betti(&rp2, FieldSpec::GF3);
        assert_eq!(gf2.entries(), &[0, 0, 1, 1]);
        assert_eq!(q.entries(), &[0, 0, 0, 0]);
        assert_eq!(gf3.entries(), &[0, 0, 0, 0]);
        assert_eq!(gf2.alternating_sum(), q.alternating_sum());
    }

    #[test]
    fn spheres_and_torus() {
        for d in 1..6 {
            let s = boundary_of_simplex(d).unwrap();
            for f in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals] {
                let b = reduced_betti(&s, f);
                for p in -1..d as isize {
                    assert_eq!(b.get(p), u64::from(p == d as isize - 1));
                }
            }
        }
        let t = reduced_betti(&torus_seven(), FieldSpec::Rationals);
        assert_eq!(t.entries(), &[0, 0, 2, 1]);
    }
}
