use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use srmult_core::bounds::{bound_report, cramer_facet_count, upper_bound_from_skips};
use srmult_core::cm_props::{
    connectivity_sequence, is_cohen_macaulay, is_cohen_macaulay_by_subsets, is_gorenstein_star,
};
use srmult_core::combinatorics::binomial;
use srmult_core::hochster::betti_table;
use srmult_core::homology::reduced_betti;
use srmult_core::{Face, FieldSpec, SimplicialComplex};

const F2: FieldSpec = FieldSpec::GF2;

/// Random complex on `n` vertices: some facets of one size plus optional smaller
/// faces, with every vertex present.
fn complex_strategy(n_max: usize) -> impl Strategy<Value = SimplicialComplex> {
    (3..=n_max)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, d)| {
            let facet = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), d);
            let small = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=d.max(1));
            (
                Just(n),
                proptest::collection::vec(facet, 1..8),
                proptest::collection::vec(small, 0..3),
            )
        })
        .prop_map(|(n, big, small)| {
            let mut faces: Vec<Face> = big.into_iter().chain(small).map(Face::from_iter).collect();
            faces.extend((0..n).map(|v| Face::from_vertices([v])));
            SimplicialComplex::from_facets(n, faces).unwrap()
        })
}

/// `Σ_i (-1)^i β_{i,j}` from the f-vector: the K-polynomial of `S/I_Γ` is
/// `Σ_F t^{|F|} (1-t)^{n-|F|}`.
fn k_polynomial(c: &SimplicialComplex) -> Vec<i128> {
    let n = c.n();
    let f = c.f_vector();
    (0..=n)
        .map(|j| {
            (0..=j)
                .map(|k| {
                    let fk = f.get(k as isize - 1) as i128;
                    let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                    sign * fk * binomial((n - k) as u64, (j - k) as u64) as i128
                })
                .sum()
        })
        .collect()
}

fn rational(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn betti_table_matches_k_polynomial(c in complex_strategy(8)) {
        for field in [F2, FieldSpec::Rationals] {
            let t = betti_table(&c, field).unwrap();
            let expected = k_polynomial(&c);
            for (j, want) in expected.iter().enumerate() {
                let got: i128 = (0..=c.n())
                    .map(|i| if i % 2 == 0 { t.get(i, j) as i128 } else { -(t.get(i, j) as i128) })
                    .sum();
                prop_assert_eq!(got, *want, "degree {}", j);
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_homology(c in complex_strategy(8)) {
        let f = c.f_vector();
        let reduced_chi: i64 = (-1..=c.dim())
            .map(|k| if k.rem_euclid(2) == 0 { f.get(k) as i64 } else { -(f.get(k) as i64) })
            .sum();
        for field in [F2, FieldSpec::GF3, FieldSpec::Rationals] {
            prop_assert_eq!(reduced_betti(&c, field).alternating_sum(), reduced_chi);
        }
    }

    #[test]
    fn rational_betti_bounded_by_gf2(c in complex_strategy(7)) {
        let q = reduced_betti(&c, FieldSpec::Rationals);
        let two = reduced_betti(&c, F2);
        for p in -1..=c.dim() {
            prop_assert!(q.get(p) <= two.get(p));
        }
    }

    #[test]
    fn reisner_agrees_with_subsets(c in complex_strategy(7)) {
        let t = betti_table(&c, F2).unwrap();
        prop_assert_eq!(is_cohen_macaulay(&c, F2), is_cohen_macaulay_by_subsets(&t));
    }

    #[test]
    fn skip_sum_sign_matches_upper_bound(c in complex_strategy(8)) {
        let r = bound_report(&c, F2).unwrap();
        prop_assert_eq!(!r.skip_sum.is_negative(), r.upper_holds);
        if r.skip_sum.is_zero() {
            prop_assert!(r.upper_equality);
        }
        if let Some(p) = &r.profile {
            prop_assert_eq!(upper_bound_from_skips(c.n(), c.d(), &p.upper_skips), r.upper.clone());
        }
    }

    #[test]
    fn facet_count_recovered_at_own_skips(c in complex_strategy(8)) {
        let r = bound_report(&c, F2).unwrap();
        if let Some(p) = &r.profile {
            let f = cramer_facet_count(&c, &p.upper_skips[1..], F2).unwrap();
            prop_assert_eq!(f, rational(r.e));
        }
    }

    #[test]
    fn cohen_macaulay_consequences(c in complex_strategy(7)) {
        if is_gorenstein_star(&c, F2) {
            prop_assert!(is_cohen_macaulay(&c, F2));
        }
        if is_cohen_macaulay(&c, F2) {
            prop_assert!(c.h_vector().entries().iter().all(|&h| h >= 0));
            let q = connectivity_sequence(&c, F2);
            prop_assert_eq!(q.get(0), c.n());
            prop_assert!(q.is_strictly_decreasing());
            let r = bound_report(&c, F2).unwrap();
            prop_assert_eq!(r.lower_holds, Some(true));
        }
    }

    #[test]
    fn h_vector_sums_to_facet_count(c in complex_strategy(8)) {
        let h = c.h_vector();
        prop_assert_eq!(h.sum(), c.f_vector().get(c.dim()) as i64);
    }

    #[test]
    fn join_f_polynomial_multiplies(a in complex_strategy(5), b in complex_strategy(5)) {
        let j = a.join(&b).unwrap();
        let (fa, fb, fj) = (a.f_vector(), b.f_vector(), j.f_vector());
        for k in -1..=j.dim() {
            // faces of size k + 1 split as sizes s + (k + 1 - s)
            let want: u64 = (0..=(k + 1))
                .map(|s| fa.get(s - 1) * fb.get(k - s))
                .sum();
            prop_assert_eq!(fj.get(k), want);
        }
    }

    #[test]
    fn table_independent_of_thread_count(c in complex_strategy(9)) {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let serial = pool.install(|| betti_table(&c, F2).unwrap());
        let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
        let parallel = pool.install(|| betti_table(&c, F2).unwrap());
        prop_assert_eq!(serial, parallel);
    }
}
