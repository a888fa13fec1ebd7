//! Cohen-Macaulay and related structural predicates, all evaluated through link and
//! induced-subcomplex homology over an explicit field.

use crate::combinatorics::{binomial, k_subsets};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hochster::BettiTable;
use crate::homology::{betti_from_faces, BettiVector, FieldSpec};

/// All faces as bitmasks grouped by dimension, used to read off links without
/// rebuilding complexes.
struct Faces(Vec<Vec<u64>>);

impl Faces {
    fn of(complex: &SimplicialComplex) -> Self {
        Faces(
            complex
                .faces_by_dim()
                .into_iter()
                .map(|g| g.into_iter().map(|f| f.bits()).collect())
                .collect(),
        )
    }

    fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().flatten().copied()
    }

    /// Reduced homology of `lk(F)`; vertex labels are irrelevant for Betti numbers.
    fn link_betti(&self, face: u64, field: FieldSpec) -> BettiVector {
        let k = face.count_ones() as usize;
        let groups: Vec<Vec<u64>> = self.0[k.min(self.0.len())..]
            .iter()
            .map(|g| {
                let mut v: Vec<u64> = g
                    .iter()
                    .filter(|&&f| f & face == face)
                    .map(|&f| f & !face)
                    .collect();
                v.sort_unstable();
                v
            })
            .collect();
        betti_from_faces(&groups, field)
    }
}

/// Reisner's criterion: `β̃_p(lk F) = 0` for every face `F` (including `∅`) and
/// `-1 <= p < d - 1 - |F|`.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    let d = complex.d() as isize;
    let faces = Faces::of(complex);
    let ok = faces.iter().all(|f| {
        let top = d - 1 - f.count_ones() as isize;
        let b = faces.link_betti(f, field);
        (-1..top).all(|p| b.get(p) == 0)
    });
    ok
}

/// Hochster's subset criterion read off the Betti table: `β̃_p(Γ[W]) = 0` whenever
/// `|W| > n - d + 1 + p`, i.e. no nonzero `β_{i,j}` with `i > n - d`.
pub fn is_cohen_macaulay_by_subsets(table: &BettiTable) -> bool {
    table.length() <= table.codim()
}

fn induced_or_empty(complex: &SimplicialComplex, w: u64) -> SimplicialComplex {
    if w == 0 {
        SimplicialComplex::empty()
    } else {
        complex
            .induced(Face::from_bits(w))
            .expect("subset of the vertex set")
    }
}

fn all_of_size_cm(complex: &SimplicialComplex, size: usize, d: usize, field: FieldSpec) -> bool {
    k_subsets(complex.n(), size).all(|w| {
        let sub = induced_or_empty(complex, w);
        sub.d() == d && is_cohen_macaulay(&sub, field)
    })
}

/// `i`-Cohen-Macaulay: `Γ[W]` is Cohen-Macaulay of dimension `d - 1` whenever
/// `|W| > n - i`. Evaluated by enumerating every such `W`.
pub fn is_i_cm(complex: &SimplicialComplex, i: usize, field: FieldSpec) -> bool {
    let n = complex.n();
    let d = complex.d();
    let smallest = (n + 1).saturating_sub(i);
    (smallest..=n).all(|size| all_of_size_cm(complex, size, d, field))
}

/// `(q_0, .., q_{d-1})` where `q_i` is the largest `j` with `Skel_i(Γ)` `j`-CM.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivitySequence(pub Vec<usize>);

impl ConnectivitySequence {
    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `{n - q_i + 1}`, sorted ascending. Entries with `q_i = 0` are skipped.
    pub fn predicted_lower_skips(&self, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .0
            .iter()
            .filter(|&&q| q > 0)
            .map(|&q| n - q + 1)
            .collect();
        v.sort_unstable();
        v
    }
}

pub fn connectivity_sequence(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> ConnectivitySequence {
    let n = complex.n();
    let seq = (0..complex.d())
        .map(|i| {
            let skel = complex.skeleton(i).expect("i within dimension");
            let mut q = 0;
            for j in 1..=n {
                if all_of_size_cm(&skel, n - j + 1, i + 1, field) {
                    q = j;
                } else {
                    break;
                }
            }
            q
        })
        .collect();
    ConnectivitySequence(seq)
}

/// The link of `F` is a homology sphere of dimension `d - 1 - |F|`.
fn sphere_link(faces: &Faces, face: u64, d: isize, field: FieldSpec) -> bool {
    let top = d - 1 - face.count_ones() as isize;
    let b = faces.link_betti(face, field);
    b.get(top) == 1 && (-1..top).all(|p| b.get(p) == 0)
}

/// Gorenstein* (homology sphere): every link, including that of `∅`, is a homology
/// sphere of the right dimension.
pub fn is_gorenstein_star(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    let d = complex.d() as isize;
    let faces = Faces::of(complex);
    let ok = faces.iter().all(|f| sphere_link(&faces, f, d, field));
    ok
}

/// Pure, and the link of every nonempty face is a homology sphere.
pub fn is_homology_manifold(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    if !complex.is_pure() {
        return false;
    }
    let d = complex.d() as isize;
    let faces = Faces::of(complex);
    let ok = faces
        .iter()
        .filter(|&f| f != 0)
        .all(|f| sphere_link(&faces, f, d, field));
    ok
}

/// Connected homology manifold with `β̃_{d-1} = 1`.
pub fn is_orientable(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    if !is_homology_manifold(complex, field) {
        return false;
    }
    let b = crate::homology::reduced_betti(complex, field);
    b.get(0) == 0 && b.get(complex.dim()) == 1
}

/// Vertices contained in every facet.
pub fn cone_points(complex: &SimplicialComplex) -> Face {
    complex
        .facets()
        .iter()
        .fold(complex.vertex_set(), |acc, f| acc.intersection(*f))
}

/// Gorenstein: after removing cone points the remaining complex is Gorenstein*.
pub fn is_gorenstein(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    let apex = cone_points(complex);
    let core = complex.link(apex).expect("cone points span a face");
    is_gorenstein_star(&core, field)
}

/// Non-reduced Euler characteristic `Σ_{i>=0} (-1)^i f_i`.
pub fn euler_characteristic(complex: &SimplicialComplex) -> i64 {
    let f = complex.f_vector();
    (0..complex.d())
        .map(|i| {
            let fi = f.get(i as isize) as i64;
            if i % 2 == 0 {
                fi
            } else {
                -fi
            }
        })
        .sum()
}

/// `h_{d-k} - h_k - (-1)^k C(d,k) (χ - (1 + (-1)^{d-1}))`; zero on homology manifolds.
pub fn dehn_sommerville_defect(complex: &SimplicialComplex, k: usize) -> Result<i64> {
    let d = complex.d();
    if k > d {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds d = {d}")));
    }
    let h = complex.h_vector();
    let chi = euler_characteristic(complex);
    let sphere_chi = if (d + 1).is_multiple_of(2) { 2 } else { 0 }; // 1 + (-1)^{d-1}
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let binom = binomial(d as u64, k as u64) as i64;
    Ok(h.get(d - k) - h.get(k) - sign * binom * (chi - sphere_chi))
}
