use num_rational::BigRational;

use srmult_core::bounds::{bound_report, connectivity_bound, skip_sum};
use srmult_core::classify::classify_flag;
use srmult_core::cm_props::{connectivity_sequence, is_gorenstein, is_gorenstein_star};
use srmult_core::generators::*;
use srmult_core::hochster::{betti_table, shift_profile};
use srmult_core::{Error, FieldSpec, SimplicialComplex, SweepBudget};

const F2: FieldSpec = FieldSpec::GF2;

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

#[test]
fn example_seven_facets_and_shifts() {
    let g = example_seven();
    assert_eq!(g.facets().len(), 21);
    assert_eq!(g.f_vector().entries(), &[1, 7, 21, 21]);
    assert_ne!(EXAMPLE_SEVEN_PUBLISHED_F2, 21);
    let s = shift_profile(&g, F2).unwrap();
    assert_eq!(s.upper_skips, vec![1, 2, 5]);
    assert_eq!(s.lower_skips, vec![1, 2, 5]);
}

#[test]
fn cycles_have_expected_shifts() {
    for k in 4..=8 {
        let s = shift_profile(&cycle(k).unwrap(), F2).unwrap();
        // m = M = (2, 3, .., k-2, k)
        let mut want: Vec<usize> = (2..=k - 2).collect();
        want.push(k);
        assert_eq!(s.min_shifts, want, "k = {k}");
        assert!(s.is_pure());
    }
}

#[test]
fn cross_polytopes_are_complete_intersections() {
    for s in 2..=4 {
        let c = cross_polytope_boundary(s).unwrap();
        let p = shift_profile(&c, F2).unwrap();
        let want: Vec<usize> = (1..=s).map(|i| 2 * i).collect();
        assert_eq!(p.min_shifts, want);
        assert_eq!(p.max_shifts, want);
        let r = bound_report(&c, F2).unwrap();
        assert_eq!(r.e, 1 << s);
        assert!(r.upper_equality && r.lower_equality == Some(true));
    }
}

#[test]
fn neighborly_cyclic_polytope() {
    let c = cyclic_polytope_boundary(4, 8).unwrap();
    let s = shift_profile(&c, F2).unwrap();
    assert_eq!(s.min_shifts, vec![3, 4, 5, 8]);
    assert_eq!(s.max_shifts, vec![3, 4, 5, 8]);
    assert!(is_gorenstein_star(&c, F2));
    let r = bound_report(&c, F2).unwrap();
    assert_eq!(r.e, 20);
    assert_eq!(r.upper, int(20));
}

#[test]
fn connectivity_of_simplex_boundaries() {
    // q_i = d + 1 - i on the boundary of the d-simplex
    for d in 2..=5 {
        let q = connectivity_sequence(&boundary_of_simplex(d).unwrap(), F2);
        let want: Vec<usize> = (0..d).map(|i| d + 1 - i).collect();
        assert_eq!(q.0, want);
        let r = connectivity_bound(&boundary_of_simplex(d).unwrap(), F2).unwrap();
        assert!(r.gap == int(0));
    }
}

#[test]
fn octahedron_lower_bound_equality() {
    let r = connectivity_bound(&cross_polytope_boundary(3).unwrap(), F2).unwrap();
    assert_eq!(r.q, vec![6, 4, 2]);
    assert_eq!(r.bound, int(8));
    assert!(r.agrees_with_lower);
}

#[test]
fn skip_sum_vanishes_on_pure_cm() {
    for c in [
        cross_polytope_boundary(3).unwrap(),
        boundary_of_simplex(3).unwrap(),
        example_seven(),
    ] {
        assert_eq!(skip_sum(&c, F2).unwrap(), int(0));
    }
    assert_eq!(skip_sum(&simplex(2).unwrap(), F2), Err(Error::ZeroIdeal));
}

#[test]
fn gorenstein_via_cone_points() {
    let c = cycle(5).unwrap().join(&simplex(1).unwrap()).unwrap();
    assert!(is_gorenstein(&c, F2));
    assert!(!is_gorenstein_star(&c, F2));
    let class = classify_flag(&c, F2).unwrap();
    assert_eq!(class.summary(), "cycle(5) * simplex(1)");
}

#[test]
fn budget_limits_are_reported() {
    let c = cycle(15).unwrap();
    let err = srmult_core::hochster::betti_table_with_budget(
        &c,
        FieldSpec::Rationals,
        &SweepBudget::default(),
    )
    .unwrap_err();
    assert!(matches!(
        err,
        Error::ResourceLimit {
            n: 15,
            limit: 14,
            ..
        }
    ));
    assert!(betti_table(&c, F2).is_ok());
}

#[test]
fn multiplicity_on_mixed_dimensions() {
    // an edge with a loose vertex: e counts only top faces
    let c = SimplicialComplex::from_vertex_lists(3, [vec![0, 1], vec![2]]).unwrap();
    let r = bound_report(&c, F2).unwrap();
    assert_eq!(r.e, 1);
    assert!(r.upper_holds);
    assert!(!r.is_cm);
    assert_eq!(r.lower_holds, None);
}
