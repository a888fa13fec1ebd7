//! Simplicial complexes on the vertex set `{0, .., n-1}`.
//!
//! Faces are bit sets packed into a single `u64`, so `n <= 64`. A complex is stored
//! through its facets; every other face is derived on demand. All vertices are faces,
//! which makes the void complex unrepresentable; the complex `{∅}` exists only for
//! `n = 0`.

use std::collections::HashSet;
use std::fmt;

use crate::combinatorics::{binomial, k_subsets};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A face, stored as a bit set of vertex indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    /// Builds a face from vertex indices. Panics on an index `>= 64`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Face {
        Face(vertices.into_iter().fold(0u64, |acc, v| {
            assert!(v < MAX_VERTICES, "vertex {v} exceeds the 64-vertex limit");
            acc | (1u64 << v)
        }))
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Face {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension `-1`.
    #[inline]
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    #[inline]
    pub const fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of this face (including the empty face and the face itself).
    pub fn subfaces(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Face(sub);
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Face::from_vertices(iter)
    }
}

/// Face counts `f_{-1}, f_0, .., f_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// `f_k` for `-1 <= k`; zero beyond the top dimension.
    pub fn get(&self, k: isize) -> u64 {
        if k < -1 {
            return 0;
        }
        self.0.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries starting at `f_{-1}`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `d = dim + 1`.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }
}

/// `h_0, .., h_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// An immutable simplicial complex on `{0, .., n-1}`, stored by its facets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n", &self.n)
            .field("facets", &self.facets)
            .finish()
    }
}

/// Keeps only the inclusion-maximal faces, sorted and deduplicated.
fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset_of(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// Builds a complex from a list of faces. Non-maximal faces are dropped.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n: usize, facets: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let full = Face::full(n);
        let faces: Vec<Face> = facets.into_iter().collect();
        for f in &faces {
            if !f.is_subset_of(full) {
                let vertex = f.difference(full).vertices().next().unwrap_or(n);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        let covered = faces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        if let Some(vertex) = full.difference(covered).vertices().next() {
            return Err(Error::GhostVertex { vertex });
        }
        let facets = if n == 0 {
            vec![Face::EMPTY]
        } else {
            maximal_faces(faces)
        };
        Ok(SimplicialComplex { n, facets })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_vertex_lists<L, I>(n: usize, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut faces = Vec::new();
        for list in lists {
            let mut bits = 0u64;
            for v in list {
                if v >= n || v >= MAX_VERTICES {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                bits |= 1 << v;
            }
            faces.push(Face(bits));
        }
        Self::from_facets(n, faces)
    }

    /// The complex `{∅}` on zero vertices.
    pub fn empty() -> Self {
        SimplicialComplex {
            n: 0,
            facets: vec![Face::EMPTY],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n)
    }

    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// `d = dim + 1`, the Krull dimension of the face ring.
    pub fn d(&self) -> usize {
        (self.dim() + 1) as usize
    }

    /// Codimension `n - d` of the Stanley-Reisner ideal.
    pub fn codim(&self) -> usize {
        self.n - self.d()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.d();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// True when the complex is the full simplex on its vertex set.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertex_set()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces of dimension `k`, sorted. `k = -1` gives `{∅}`.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        if k < -1 || k > self.dim() {
            return Vec::new();
        }
        if k == -1 {
            return vec![Face::EMPTY];
        }
        let size = (k + 1) as usize;
        let mut out: HashSet<Face> = HashSet::new();
        for facet in &self.facets {
            if facet.len() < size {
                continue;
            }
            if facet.len() == size {
                out.insert(*facet);
                continue;
            }
            let verts: Vec<usize> = facet.vertices().collect();
            for sub in k_subsets(verts.len(), size) {
                let face: Face = Face(sub).vertices().map(|i| verts[i]).collect();
                out.insert(face);
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Faces grouped by dimension: entry `k + 1` holds the sorted `k`-faces.
    pub fn faces_by_dim(&self) -> Vec<Vec<Face>> {
        let d = self.d();
        let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); d + 1];
        for facet in &self.facets {
            for sub in facet.subfaces() {
                sets[sub.len()].insert(sub);
            }
        }
        sets.into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(
            self.faces_by_dim()
                .iter()
                .map(|faces| faces.len() as u64)
                .collect(),
        )
    }

    /// `h_i = Σ_{j<=i} (-1)^{i-j} C(d-j, d-i) f_{j-1}`.
    pub fn h_vector(&self) -> HVector {
        h_from_f(&self.f_vector())
    }

    /// The link `{G - F : F ⊆ G ∈ Γ}`, re-indexed to a dense vertex range.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex> {
        self.link_with_map(face).map(|(c, _)| c)
    }

    /// The link together with the original label of each new vertex.
    pub fn link_with_map(&self, face: Face) -> Result<(SimplicialComplex, Vec<usize>)> {
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex);
        }
        let pieces: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| face.is_subset_of(**g))
            .map(|g| g.difference(face))
            .collect();
        let support = pieces.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        Ok(relabel(support, &pieces))
    }

    /// The induced subcomplex `Γ[W]`, re-indexed to `{0, .., |W|-1}`.
    pub fn induced(&self, w: Face) -> Result<SimplicialComplex> {
        self.induced_with_map(w).map(|(c, _)| c)
    }

    /// The induced subcomplex with the original label of each new vertex.
    pub fn induced_with_map(&self, w: Face) -> Result<(SimplicialComplex, Vec<usize>)> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if !w.is_subset_of(self.vertex_set()) {
            let vertex = w
                .difference(self.vertex_set())
                .vertices()
                .next()
                .unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let pieces: Vec<Face> = self.facets.iter().map(|g| g.intersection(w)).collect();
        Ok(relabel(w, &pieces))
    }

    /// `Γ - v`.
    pub fn deletion(&self, v: usize) -> Result<SimplicialComplex> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.induced(self.vertex_set().without(v))
    }

    /// Join on the disjoint union of vertex sets; `other`'s vertices are shifted by `n`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let shift = self.n;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                let shifted = if shift >= 64 { 0 } else { b.bits() << shift };
                facets.push(a.union(Face(shifted)));
            }
        }
        SimplicialComplex::from_facets(n, facets)
    }

    /// Faces of dimension at most `i`.
    pub fn skeleton(&self, i: usize) -> Result<SimplicialComplex> {
        if self.n == 0 || i as isize > self.dim() {
            return Err(Error::InvalidParameter(format!(
                "skeleton dimension {i} exceeds complex dimension {}",
                self.dim()
            )));
        }
        let mut faces = Vec::new();
        for facet in &self.facets {
            if facet.len() <= i + 1 {
                faces.push(*facet);
            } else {
                let verts: Vec<usize> = facet.vertices().collect();
                for sub in k_subsets(verts.len(), i + 1) {
                    faces.push(Face(sub).vertices().map(|t| verts[t]).collect());
                }
            }
        }
        SimplicialComplex::from_facets(self.n, faces)
    }

    /// Cone with apex `n`.
    pub fn cone(&self) -> Result<SimplicialComplex> {
        self.join(&crate::generators::simplex(0)?)
    }

    /// Minimal non-faces, i.e. the supports of the minimal generators of the
    /// Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        let by_dim = self.faces_by_dim();
        for faces in &by_dim {
            for &g in faces {
                let start = g.max_vertex().map_or(0, |m| m + 1);
                for v in start..self.n {
                    let cand = g.with(v);
                    if self.contains(cand) {
                        continue;
                    }
                    if cand.vertices().all(|u| self.contains(cand.without(u))) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Flag: every minimal non-face is an edge.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|f| f.len() == 2)
    }

    /// Every `r` vertices span a face.
    pub fn is_r_neighborly(&self, r: usize) -> bool {
        if r > self.n {
            return true;
        }
        self.f_vector().get(r as isize - 1) as u128 == binomial(self.n as u64, r as u64)
    }

    /// Graph edges (1-faces).
    pub fn edges(&self) -> Vec<Face> {
        self.faces_of_dim(1)
    }

    /// Facets as 1-based vertex lists, the convention of the facet file format.
    pub fn facets_one_based(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self
            .facets
            .iter()
            .map(|f| f.vertices().map(|x| x + 1).collect())
            .collect();
        v.sort();
        v
    }
}

/// Maps the vertices of `support` onto `0..|support|` and builds the complex spanned
/// by `pieces` (which must cover `support`).
fn relabel(support: Face, pieces: &[Face]) -> (SimplicialComplex, Vec<usize>) {
    let map: Vec<usize> = support.vertices().collect();
    let mut index = [usize::MAX; 64];
    for (new, &old) in map.iter().enumerate() {
        index[old] = new;
    }
    let faces: Vec<Face> = pieces
        .iter()
        .map(|p| p.vertices().map(|v| index[v]).collect())
        .collect();
    let n = map.len();
    let complex =
        SimplicialComplex::from_facets(n, faces).expect("relabelled pieces cover the support");
    (complex, map)
}

pub(crate) fn h_from_f(f: &FVector) -> HVector {
    let d = f.d();
    let h = (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i - j) % 2 == 0 { 1i128 } else { -1 };
                    sign * binomial((d - j) as u64, (d - i) as u64) as i128
                        * f.get(j as isize - 1) as i128
                })
                .sum::<i128>() as i64
        })
        .collect();
    HVector(h)
}
