//! Flag complexes with a pure resolution: 1-Leray, a cycle joined with a simplex, or a
//! cross-polytope boundary joined with a simplex.

use rayon::prelude::*;

use crate::cm_props::cone_points;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::generators::clique_complex;
use crate::hochster::{betti_table, BettiTable};
use crate::homology::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlagClassification {
    OneLeray,
    /// `cycle` lists the non-cone vertices in cyclic order; `apex` the cone points.
    CycleJoinSimplex {
        cycle: Vec<usize>,
        apex: Vec<usize>,
    },
    /// `pairs` are the antipodal (non-adjacent) vertex pairs of the cross polytope.
    CrossPolytopeJoinSimplex {
        pairs: Vec<(usize, usize)>,
        apex: Vec<usize>,
    },
    NotPure,
    /// Pure resolution but none of the three shapes. Never expected.
    Unclassified {
        core: Vec<usize>,
        apex: Vec<usize>,
    },
}

impl FlagClassification {
    /// Dimension of the simplex factor (`-1` for none).
    pub fn simplex_dim(&self) -> Option<isize> {
        match self {
            Self::CycleJoinSimplex { apex, .. } | Self::CrossPolytopeJoinSimplex { apex, .. } => {
                Some(apex.len() as isize - 1)
            }
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::OneLeray => "one-leray",
            Self::CycleJoinSimplex { .. } => "cycle-join-simplex",
            Self::CrossPolytopeJoinSimplex { .. } => "cross-polytope-join-simplex",
            Self::NotPure => "not-pure",
            Self::Unclassified { .. } => "unclassified",
        }
    }

    /// Short form `name(size, simplex_dim)` used in reports.
    pub fn summary(&self) -> String {
        match self {
            Self::CycleJoinSimplex { cycle, .. } => {
                format!(
                    "cycle({}) * simplex({})",
                    cycle.len(),
                    self.simplex_dim().unwrap()
                )
            }
            Self::CrossPolytopeJoinSimplex { pairs, .. } => {
                let alias = if pairs.len() == 2 {
                    " [also cycle(4)]"
                } else {
                    ""
                };
                format!(
                    "cross({}) * simplex({}){alias}",
                    pairs.len(),
                    self.simplex_dim().unwrap()
                )
            }
            other => other.label().to_string(),
        }
    }
}

fn adjacency(complex: &SimplicialComplex) -> Vec<u64> {
    let mut adj = vec![0u64; complex.n()];
    for e in complex.edges() {
        let v: Vec<usize> = e.vertices().collect();
        adj[v[0]] |= 1 << v[1];
        adj[v[1]] |= 1 << v[0];
    }
    adj
}

/// Antipodal pairs if the graph on `core` is a complete graph minus a perfect matching.
fn cross_polytope_pairs(adj: &[u64], core: Face) -> Option<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    for v in core.vertices() {
        let missing: Vec<usize> = core
            .without(v)
            .difference(Face::from_bits(adj[v]))
            .vertices()
            .collect();
        match missing.as_slice() {
            [u] if v < *u => pairs.push((v, *u)),
            [u] if v > *u => {}
            _ => return None,
        }
    }
    (pairs.len() >= 2).then_some(pairs)
}

/// Cyclic vertex order if the graph on `core` is a single cycle.
fn cycle_order(adj: &[u64], core: Face) -> Option<Vec<usize>> {
    let nbrs = |v: usize| Face::from_bits(adj[v]).intersection(core);
    if core.len() < 4 || core.vertices().any(|v| nbrs(v).len() != 2) {
        return None;
    }
    let start = core.vertices().next()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = nbrs(start).vertices().next()?;
    while cur != start {
        order.push(cur);
        let next = nbrs(cur).without(prev).vertices().next()?;
        prev = cur;
        cur = next;
    }
    (order.len() == core.len()).then_some(order)
}

/// Classification from a precomputed Betti table; the caller guarantees flagness.
pub fn classify_flag_from_table(
    complex: &SimplicialComplex,
    table: &BettiTable,
) -> FlagClassification {
    let profile = match table.shift_profile() {
        Ok(p) => p,
        // simplex: the zero ideal has a trivially pure (empty) resolution
        Err(_) => return FlagClassification::OneLeray,
    };
    if !profile.is_pure() {
        return FlagClassification::NotPure;
    }
    if profile.is_t_leray(1) {
        return FlagClassification::OneLeray;
    }
    let apex_face = cone_points(complex);
    let core = complex.vertex_set().difference(apex_face);
    let apex: Vec<usize> = apex_face.vertices().collect();
    let adj = adjacency(complex);
    if let Some(pairs) = cross_polytope_pairs(&adj, core) {
        return FlagClassification::CrossPolytopeJoinSimplex { pairs, apex };
    }
    if let Some(cycle) = cycle_order(&adj, core) {
        return FlagClassification::CycleJoinSimplex { cycle, apex };
    }
    FlagClassification::Unclassified {
        core: core.vertices().collect(),
        apex,
    }
}

pub fn classify_flag(complex: &SimplicialComplex, field: FieldSpec) -> Result<FlagClassification> {
    if !complex.is_flag() {
        return Err(Error::NotFlag);
    }
    let table = betti_table(complex, field)?;
    Ok(classify_flag_from_table(complex, &table))
}

/// Largest `n_max` accepted by [`pure_flag_exhaustive`] without `force`.
pub const EXHAUSTIVE_FLAG_LIMIT: usize = 7;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlagCensus {
    pub n: usize,
    /// Labeled graphs on `n` vertices.
    pub graphs: u64,
    pub pure: u64,
    pub one_leray: u64,
    pub cycle_join_simplex: u64,
    pub cross_join_simplex: u64,
    /// Non-1-Leray pure instances on which the size `Q_1 + 1` witness was checked.
    pub witnesses_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagViolation {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCertificate {
    pub n_max: usize,
    pub field: FieldSpec,
    pub census: Vec<FlagCensus>,
    pub violations: Vec<FlagViolation>,
}

impl FlagCertificate {
    pub fn certified(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A subset of size `Q_1 + 1` with `β̃_1 ≠ 0`, read as `β_{Q_1-1, Q_1+1} ≠ 0`.
fn has_skip_witness(table: &BettiTable) -> bool {
    let Ok(profile) = table.shift_profile() else {
        return false;
    };
    let Some(&q1) = profile.upper_skips.get(1) else {
        return false;
    };
    q1 < table.n() && table.get(q1 - 1, q1 + 1) != 0
}

fn graph_edges(n: usize, mask: u64) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

struct Outcome {
    class: FlagClassification,
    witness: Option<bool>,
}

/// Classifies every labeled flag complex (clique complex of a graph) on `1..=n_max`
/// vertices and checks that each pure one lands in a category.
pub fn pure_flag_exhaustive(
    n_max: usize,
    field: FieldSpec,
    force: bool,
) -> Result<FlagCertificate> {
    if n_max > EXHAUSTIVE_FLAG_LIMIT && !force {
        return Err(Error::ResourceLimit {
            n: n_max,
            limit: EXHAUSTIVE_FLAG_LIMIT,
            field: field.to_string(),
        });
    }
    let mut census = Vec::new();
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let slots = n * (n - 1) / 2;
        let outcomes: Vec<Result<Outcome>> = (0..1u64 << slots)
            .into_par_iter()
            .map(|mask| {
                let complex = clique_complex(n, &graph_edges(n, mask))?;
                let table = betti_table(&complex, field)?;
                let class = classify_flag_from_table(&complex, &table);
                let witness = match class {
                    FlagClassification::NotPure | FlagClassification::OneLeray => None,
                    _ => Some(has_skip_witness(&table)),
                };
                Ok(Outcome { class, witness })
            })
            .collect();
        let mut c = FlagCensus {
            n,
            graphs: 1 << slots,
            ..Default::default()
        };
        for (mask, outcome) in outcomes.into_iter().enumerate() {
            let outcome = outcome?;
            let mut flag = |reason: &str| {
                violations.push(FlagViolation {
                    n,
                    edges: graph_edges(n, mask as u64),
                    reason: reason.to_string(),
                })
            };
            match outcome.class {
                FlagClassification::NotPure => {}
                FlagClassification::OneLeray => c.one_leray += 1,
                FlagClassification::CycleJoinSimplex { .. } => c.cycle_join_simplex += 1,
                FlagClassification::CrossPolytopeJoinSimplex { .. } => c.cross_join_simplex += 1,
                FlagClassification::Unclassified { .. } => flag("pure but unclassified"),
            }
            if outcome.class != FlagClassification::NotPure {
                c.pure += 1;
            }
            if let Some(found) = outcome.witness {
                c.witnesses_checked += 1;
                if !found {
                    flag("no induced subcomplex of size Q_1 + 1 with nonzero first homology");
                }
            }
        }
        census.push(c);
    }
    Ok(FlagCertificate {
        n_max,
        field,
        census,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    const F2: FieldSpec = FieldSpec::GF2;

    #[test]
    fn small_cases() {
        let sq = classify_flag(&cycle(4).unwrap(), F2).unwrap();
        assert!(
            matches!(sq, FlagClassification::CrossPolytopeJoinSimplex { ref pairs, ref apex }
            if pairs.len() == 2 && apex.is_empty())
        );
        assert_eq!(sq.simplex_dim(), Some(-1));
        let hex = classify_flag(&cycle(6).unwrap(), F2).unwrap();
        assert!(
            matches!(hex, FlagClassification::CycleJoinSimplex { ref cycle, .. } if cycle.len() == 6)
        );
        let path = SimplicialComplex::from_vertex_lists(3, [[0, 1], [1, 2]]).unwrap();
        assert_eq!(
            classify_flag(&path, F2).unwrap(),
            FlagClassification::OneLeray
        );
        assert_eq!(
            classify_flag(&simplex(2).unwrap(), F2).unwrap(),
            FlagClassification::OneLeray
        );
        assert_eq!(
            classify_flag(&boundary_of_simplex(2).unwrap(), F2),
            Err(Error::NotFlag)
        );
    }

    #[test]
    fn joins_shift_simplex_dimension() {
        for base in [cycle(5).unwrap(), cross_polytope_boundary(3).unwrap()] {
            let before = classify_flag(&base, F2).unwrap();
            for k in 0..2 {
                let joined = base.join(&simplex(k).unwrap()).unwrap();
                let after = classify_flag(&joined, F2).unwrap();
                assert_eq!(after.label(), before.label());
                assert_eq!(after.simplex_dim(), Some(k as isize));
            }
        }
    }

    #[test]
    fn octahedron_and_pentagon() {
        let oct = classify_flag(&cross_polytope_boundary(3).unwrap(), F2).unwrap();
        assert_eq!(oct.summary(), "cross(3) * simplex(-1)");
        let pent = classify_flag(&cycle(5).unwrap(), F2).unwrap();
        assert_eq!(pent.summary(), "cycle(5) * simplex(-1)");
    }

    #[test]
    fn exhaustive_small() {
        let cert = pure_flag_exhaustive(4, F2, false).unwrap();
        assert!(cert.certified());
        assert_eq!(cert.census[3].graphs, 64);
        // only the three labeled 4-cycles are pure and not 1-Leray on 4 vertices
        assert_eq!(cert.census[3].cross_join_simplex, 3);
        assert!(matches!(
            pure_flag_exhaustive(8, F2, false),
            Err(Error::ResourceLimit { n: 8, limit: 7, .. })
        ));
    }
}
