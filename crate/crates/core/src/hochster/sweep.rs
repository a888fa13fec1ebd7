//! Enumeration of all induced subcomplexes `Γ[W]`.
//!
//! The `2^n` subsets are split into chunks by their high vertices; inside a chunk
//! the low vertices are visited in Gray-code order so consecutive subsets differ by
//! one vertex and the face lists of `Γ[W]` are updated incrementally. Chunk totals
//! are combined by integer addition, so results do not depend on scheduling.

use rayon::prelude::*;

use crate::combinatorics::{gray_flip_bit, k_subsets};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{betti_from_faces, BettiVector, FieldSpec};

/// Largest `n` for which a full subset sweep is attempted, per field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBudget {
    pub gf2: usize,
    pub odd_prime: usize,
    pub rationals: usize,
}

impl Default for SweepBudget {
    fn default() -> Self {
        SweepBudget {
            gf2: 20,
            odd_prime: 16,
            rationals: 14,
        }
    }
}

impl SweepBudget {
    pub fn unlimited() -> Self {
        SweepBudget {
            gf2: 64,
            odd_prime: 64,
            rationals: 64,
        }
    }

    pub fn limit(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(2) => self.gf2,
            FieldSpec::Prime(_) => self.odd_prime,
            FieldSpec::Rationals => self.rationals,
        }
    }

    pub fn check(&self, n: usize, field: FieldSpec) -> Result<()> {
        let limit = self.limit(field);
        if n > limit {
            return Err(Error::ResourceLimit {
                n,
                limit,
                field: field.to_string(),
            });
        }
        Ok(())
    }
}

/// Faces of a complex as bitmasks, grouped by dimension, plus per-vertex lists.
pub(crate) struct FaceIndex {
    n: usize,
    /// `by_dim[k + 1]`: sorted `k`-faces.
    by_dim: Vec<Vec<u64>>,
    /// `with_vertex[v][k + 1]`: sorted `k`-faces containing `v`.
    with_vertex: Vec<Vec<Vec<u64>>>,
}

impl FaceIndex {
    pub(crate) fn new(complex: &SimplicialComplex) -> Self {
        let by_dim: Vec<Vec<u64>> = complex
            .faces_by_dim()
            .into_iter()
            .map(|g| g.into_iter().map(|f| f.bits()).collect())
            .collect();
        let n = complex.n();
        let with_vertex = (0..n)
            .map(|v| {
                by_dim
                    .iter()
                    .map(|g| g.iter().copied().filter(|f| f & (1 << v) != 0).collect())
                    .collect()
            })
            .collect();
        FaceIndex {
            n,
            by_dim,
            with_vertex,
        }
    }

    pub(crate) fn groups(&self) -> usize {
        self.by_dim.len()
    }

    fn filtered(&self, w: u64) -> Vec<Vec<u64>> {
        self.by_dim
            .iter()
            .map(|g| g.iter().copied().filter(|f| f & !w == 0).collect())
            .collect()
    }

    /// Reduced Betti numbers of `Γ[W]` (with `W` given as a bitmask; no re-indexing
    /// needed since homology ignores labels).
    pub(crate) fn induced_betti(&self, w: u64, field: FieldSpec) -> BettiVector {
        betti_from_faces(&self.filtered(w), field)
    }
}

/// `totals[j][p + 1] = Σ_{|W| = j} β̃_p(Γ[W])`, including `W = ∅`.
pub(crate) type Totals = Vec<Vec<u64>>;

fn zero_totals(n: usize, groups: usize) -> Totals {
    vec![vec![0; groups]; n + 1]
}

fn add_into(acc: &mut Totals, w: u64, betti: &BettiVector) {
    let row = &mut acc[w.count_ones() as usize];
    for (slot, &b) in row.iter_mut().zip(betti.entries()) {
        *slot += b;
    }
}

fn merge(mut a: Totals, b: Totals) -> Totals {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
    a
}

fn merge_into_sorted(dst: &mut Vec<u64>, add: impl Iterator<Item = u64>) {
    let add: Vec<u64> = add.collect();
    if add.is_empty() {
        return;
    }
    let mut out = Vec::with_capacity(dst.len() + add.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() && j < add.len() {
        if dst[i] < add[j] {
            out.push(dst[i]);
            i += 1;
        } else {
            out.push(add[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&dst[i..]);
    out.extend_from_slice(&add[j..]);
    *dst = out;
}

fn chunk_totals(index: &FaceIndex, field: FieldSpec, low: usize, high_mask: u64) -> Totals {
    let mut totals = zero_totals(index.n, index.groups());
    let mut w = high_mask;
    let mut active = index.filtered(w);
    add_into(&mut totals, w, &betti_from_faces(&active, field));
    let steps = (1u64 << low) - 1;
    for i in 0..steps {
        let v = gray_flip_bit(i) as usize;
        let bit = 1u64 << v;
        if w & bit != 0 {
            w ^= bit;
            for group in active.iter_mut().skip(1) {
                group.retain(|f| f & bit == 0);
            }
        } else {
            w |= bit;
            for (group, extra) in active.iter_mut().zip(&index.with_vertex[v]) {
                merge_into_sorted(group, extra.iter().copied().filter(|f| f & !w == 0));
            }
        }
        add_into(&mut totals, w, &betti_from_faces(&active, field));
    }
    totals
}

/// Sums reduced Betti numbers of all induced subcomplexes, grouped by `|W|`.
pub(crate) fn induced_totals(
    complex: &SimplicialComplex,
    field: FieldSpec,
    budget: &SweepBudget,
) -> Result<Totals> {
    let n = complex.n();
    budget.check(n, field)?;
    let index = FaceIndex::new(complex);
    let high = n.saturating_sub(8).min(12);
    let low = n - high;
    let totals = (0..1u64 << high)
        .into_par_iter()
        .map(|h| chunk_totals(&index, field, low, h << low))
        .reduce(|| zero_totals(n, index.groups()), merge);
    Ok(totals)
}

/// Sums `β̃_p(Γ[W])` over `|W| = m` by direct enumeration of the `m`-subsets.
pub(crate) fn sum_over_size(
    complex: &SimplicialComplex,
    p: isize,
    m: usize,
    field: FieldSpec,
) -> u64 {
    let index = FaceIndex::new(complex);
    k_subsets(complex.n(), m)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| index.induced_betti(w, field).get(p))
        .sum()
}
