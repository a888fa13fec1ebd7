//! Catalogue of standard complexes plus the random pure-facet model used by sweeps.

use rand::seq::index::sample;
use rand::Rng;

use crate::combinatorics::{binomial, k_subsets, unrank_colex};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// The full `d`-simplex on `d + 1` vertices.
pub fn simplex(d: usize) -> Result<SimplicialComplex> {
    let n = d + 1;
    SimplicialComplex::from_facets(n, [Face::full(n)])
}

/// Boundary of the `d`-simplex: a `(d-1)`-sphere on `d + 1` vertices.
pub fn boundary_of_simplex(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(invalid("boundary of a 0-simplex has no vertices"));
    }
    let n = d + 1;
    let full = Face::full(n);
    SimplicialComplex::from_facets(n, (0..n).map(|v| full.without(v)))
}

/// Boundary of the `s`-dimensional cross polytope on `2s` vertices; vertices `2i`
/// and `2i + 1` form the `i`-th antipodal pair.
pub fn cross_polytope_boundary(s: usize) -> Result<SimplicialComplex> {
    if s == 0 || 2 * s > 64 {
        return Err(invalid(format!(
            "cross polytope dimension {s} out of range"
        )));
    }
    let facets = (0..1u64 << s)
        .map(|choice| Face::from_vertices((0..s).map(|i| 2 * i + ((choice >> i) & 1) as usize)));
    SimplicialComplex::from_facets(2 * s, facets)
}

/// The `k`-cycle.
pub fn cycle(k: usize) -> Result<SimplicialComplex> {
    if !(3..=64).contains(&k) {
        return Err(invalid(format!("cycle length {k} out of range")));
    }
    SimplicialComplex::from_facets(k, (0..k).map(|i| Face::from_vertices([i, (i + 1) % k])))
}

/// Boundary of the cyclic `d`-polytope with `n` vertices, via Gale's evenness
/// condition.
pub fn cyclic_polytope_boundary(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 2 || n <= d || n > 64 {
        return Err(invalid(format!("cyclic polytope C({d},{n}) out of range")));
    }
    let facets = k_subsets(n, d)
        .filter(|&s| gale_even(s, n))
        .map(Face::from_bits);
    SimplicialComplex::from_facets(n, facets)
}

fn gale_even(set: u64, n: usize) -> bool {
    let outside: Vec<usize> = (0..n).filter(|&v| set & (1 << v) == 0).collect();
    outside.windows(2).all(|w| {
        let between = (w[0] + 1..w[1]).filter(|&v| set & (1 << v) != 0).count();
        between % 2 == 0
    })
}

/// Facets of the seven-vertex, two-dimensional Cohen-Macaulay complex with pure
/// resolution `m = M = (3,4,6,7)` that fits none of the standard pure families.
/// Labels are 1-based as usually printed.
pub const EXAMPLE_SEVEN_FACETS: [[usize; 3]; 21] = [
    [1, 2, 4],
    [1, 2, 6],
    [1, 2, 7],
    [1, 3, 5],
    [1, 3, 6],
    [1, 3, 7],
    [1, 4, 5],
    [1, 4, 7],
    [1, 5, 6],
    [2, 3, 4],
    [2, 3, 5],
    [2, 3, 6],
    [2, 4, 5],
    [2, 5, 7],
    [2, 6, 7],
    [3, 4, 6],
    [3, 4, 7],
    [3, 5, 7],
    [4, 5, 6],
    [4, 6, 7],
    [5, 6, 7],
];

/// The facet count printed alongside [`EXAMPLE_SEVEN_FACETS`] in its original
/// publication. It disagrees with the list itself (21 facets).
pub const EXAMPLE_SEVEN_PUBLISHED_F2: u64 = 12;

pub fn example_seven() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(
        7,
        EXAMPLE_SEVEN_FACETS.iter().map(|f| f.iter().map(|v| v - 1)),
    )
    .expect("fixed facet list is valid")
}

/// Six-vertex triangulation of the real projective plane.
pub fn real_projective_plane() -> SimplicialComplex {
    const FACETS: [[usize; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    SimplicialComplex::from_vertex_lists(6, FACETS.iter().map(|f| f.iter().copied()))
        .expect("fixed facet list is valid")
}

/// Seven-vertex (Möbius) torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus_seven() -> SimplicialComplex {
    let facets = (0..7).flat_map(|i| {
        [
            Face::from_vertices([i, (i + 1) % 7, (i + 3) % 7]),
            Face::from_vertices([i, (i + 2) % 7, (i + 3) % 7]),
        ]
    });
    SimplicialComplex::from_facets(7, facets).expect("fixed facet list is valid")
}

/// Clique (flag) complex of a graph on `n` vertices.
pub fn clique_complex(n: usize, edges: &[(usize, usize)]) -> Result<SimplicialComplex> {
    if n == 0 || n > 64 {
        return Err(invalid(format!("clique complex on {n} vertices")));
    }
    let mut adj = vec![0u64; n];
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::VertexOutOfRange {
                vertex: a.max(b),
                n,
            });
        }
        if a != b {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    let mut cliques = Vec::new();
    bron_kerbosch(&adj, 0, Face::full(n).bits(), 0, &mut cliques);
    SimplicialComplex::from_facets(n, cliques.into_iter().map(Face::from_bits))
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | (1 << v), p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Random pure-facet model: `facet_count` distinct `d`-subsets of `{0..n-1}`
/// chosen uniformly, plus a singleton facet for every uncovered vertex.
pub fn random_pure<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    d: usize,
    facet_count: usize,
) -> Result<SimplicialComplex> {
    if d == 0 || d > n || n > 64 {
        return Err(invalid(format!("random complex with n={n}, d={d}")));
    }
    let total = binomial(n as u64, d as u64);
    if facet_count == 0 || facet_count as u128 > total {
        return Err(invalid(format!(
            "facet count {facet_count} not in [1, {total}]"
        )));
    }
    let total = usize::try_from(total).map_err(|_| invalid("too many candidate facets"))?;
    let mut faces: Vec<Face> = sample(rng, total, facet_count)
        .into_iter()
        .map(|r| Face::from_bits(unrank_colex(r as u128, d)))
        .collect();
    let covered = faces.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    faces.extend(
        Face::full(n)
            .difference(covered)
            .vertices()
            .map(|v| Face::from_vertices([v])),
    );
    SimplicialComplex::from_facets(n, faces)
}
