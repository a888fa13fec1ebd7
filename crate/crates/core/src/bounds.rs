//! Multiplicity bounds `L <= e <= U`, the skip-sequence reformulation of the upper
//! bound, the averaged Euler-Poincare facet-count identity and the lower-bound check
//! through the connectivity sequence. Everything is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cm_props::{connectivity_sequence, is_cohen_macaulay, is_cohen_macaulay_by_subsets};
use crate::combinatorics::{binomial_big, factorial, falling_factorial};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::{betti_table, BettiTable, ShiftProfile};
use crate::homology::FieldSpec;

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub field: FieldSpec,
    /// `f_{d-1}`.
    pub e: u64,
    pub upper: BigRational,
    pub lower: BigRational,
    pub upper_holds: bool,
    pub upper_equality: bool,
    /// `None` when the complex is not Cohen-Macaulay.
    pub lower_holds: Option<bool>,
    pub lower_equality: Option<bool>,
    pub skip_sum: BigRational,
    pub is_cm: bool,
    pub is_pure: bool,
    /// `None` for a simplex, whose ideal is zero.
    pub profile: Option<ShiftProfile>,
}

/// `Π_{i<=c} s_i / c!`.
fn shift_product(shifts: &[usize], c: usize) -> BigRational {
    let num: BigInt = shifts[..c].iter().map(|&s| BigInt::from(s)).product();
    BigRational::new(num, factorial(c as u64))
}

pub fn bound_report(complex: &SimplicialComplex, field: FieldSpec) -> Result<BoundReport> {
    let table = betti_table(complex, field)?;
    Ok(bound_report_from_table(complex, &table))
}

pub fn bound_report_from_table(complex: &SimplicialComplex, table: &BettiTable) -> BoundReport {
    let e = complex.f_vector().get(complex.dim());
    let mut report = BoundReport {
        n: complex.n(),
        d: complex.d(),
        field: table.field(),
        e,
        upper: BigRational::one(),
        lower: BigRational::one(),
        upper_holds: true,
        upper_equality: true,
        lower_holds: Some(true),
        lower_equality: Some(true),
        skip_sum: BigRational::zero(),
        is_cm: true,
        is_pure: true,
        profile: None,
    };
    let Ok(profile) = table.shift_profile() else {
        // simplex: c = 0, empty products
        return report;
    };
    let c = profile.codim;
    let e_q = int(e);
    report.upper = shift_product(&profile.max_shifts, c);
    report.lower = shift_product(&profile.min_shifts, c);
    report.upper_holds = e_q <= report.upper;
    report.upper_equality = e_q == report.upper;
    report.is_cm = is_cohen_macaulay_by_subsets(table);
    report.is_pure = profile.is_pure();
    report.lower_holds = report.is_cm.then(|| e_q >= report.lower);
    report.lower_equality = report.is_cm.then(|| e_q == report.lower);
    report.skip_sum = skip_sum_from_table(table, &profile);
    report.profile = Some(profile);
    report
}

/// `c_1, .., c_{k}` for skips `Q_1 < .. < Q_k` (without `Q_0`):
/// `c_i = Π_{u≠i} Q_u(Q_u-1) · Π_{u<v; u,v≠i} (Q_v - Q_u)`.
pub fn skip_coefficients(q: &[usize]) -> Vec<BigInt> {
    let k = q.len();
    (0..k)
        .map(|i| {
            let mut c = BigInt::one();
            for u in (0..k).filter(|&u| u != i) {
                c *= BigInt::from(q[u]) * BigInt::from(q[u] - 1);
                for v in (u + 1..k).filter(|&v| v != i) {
                    c *= BigInt::from(q[v]) - BigInt::from(q[u]);
                }
            }
            c
        })
        .collect()
}

/// Coefficients for the upper skips `1 = Q_0 < Q_1 < .. < Q_{d-1}`; returns
/// `c_1, .., c_{d-1}`.
pub fn upper_skip_coefficients(q: &[usize]) -> Result<Vec<BigInt>> {
    if q.first() != Some(&1) || q.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingSkips);
    }
    Ok(skip_coefficients(&q[1..]))
}

fn skip_sum_from_table(table: &BettiTable, profile: &ShiftProfile) -> BigRational {
    let q = &profile.upper_skips;
    let coeffs = skip_coefficients(&q[1..]);
    let mut total = BigRational::zero();
    for (idx, c) in coeffs.iter().enumerate() {
        let i = idx + 1;
        let mut inner = BigRational::zero();
        for j in 0..i {
            let a = table.average(j, q[i]);
            if (i - j - 1) % 2 == 0 {
                inner += a;
            } else {
                inner -= a;
            }
        }
        total += int(c.clone()) * inner;
    }
    total
}

/// `Σ_{i=1}^{d-1} c_i Σ_{j<i} (-1)^{i-j-1} A(j, Q_i)` at the complex's own upper skips.
pub fn skip_sum(complex: &SimplicialComplex, field: FieldSpec) -> Result<BigRational> {
    let table = betti_table(complex, field)?;
    let profile = table.shift_profile()?;
    Ok(skip_sum_from_table(&table, &profile))
}

/// `n(n-1)..(n-d+1) / (Q_1 .. Q_{d-1})`.
pub fn upper_bound_from_skips(n: usize, d: usize, q: &[usize]) -> BigRational {
    let den: BigInt = q.iter().skip(1).map(|&x| BigInt::from(x)).product();
    BigRational::new(falling_factorial(n as u64, d as u64), den)
}

/// `A(j, Q_i) = 0` for all `0 <= j < i <= d-1`: the hypothesis under which a complex
/// is forced to be Cohen-Macaulay with a pure resolution.
pub fn skip_averages_vanish(table: &BettiTable, profile: &ShiftProfile) -> bool {
    let q = &profile.upper_skips;
    (1..q.len()).all(|i| (0..i).all(|j| table.average(j, q[i]).is_zero()))
}

/// Solves a square system exactly; `None` if singular.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let k = b.len();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let prow = a[col].clone();
        let pb = b[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &prow[col];
            for (x, y) in row[col..].iter_mut().zip(&prow[col..]) {
                *x -= &factor * y;
            }
            b[r] -= &factor * &pb;
        }
    }
    Some((0..k).map(|i| &b[i] / &a[i][i]).collect())
}

fn sign(k: usize) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Recovers `f_{d-1}` from averaged reduced Betti numbers at sizes `R_1 < .. < R_{d-1}`.
///
/// Each size gives `Σ_{i=1}^{d-1} (-1)^{d-i-1} C(R,i+1)/C(n,i+1) f_i
/// = (-1)^d (R-1) + Σ_{i=0}^{d-1} (-1)^{d-i-1} A(i,R)`, and the system is solved exactly.
pub fn cramer_facet_count(
    complex: &SimplicialComplex,
    r: &[usize],
    field: FieldSpec,
) -> Result<BigRational> {
    let table = betti_table(complex, field)?;
    cramer_from_table(&table, r)
}

pub fn cramer_from_table(table: &BettiTable, r: &[usize]) -> Result<BigRational> {
    let (n, d) = (table.n(), table.d());
    if d == 0 {
        return Ok(BigRational::one());
    }
    if r.len() != d - 1 {
        return Err(Error::DimensionMismatch {
            expected: d - 1,
            found: r.len(),
        });
    }
    if d == 1 {
        return Ok(int(n));
    }
    if let Some(&bad) = r.iter().find(|&&x| x < 2 || x > n) {
        return Err(Error::InvalidParameter(format!(
            "size {bad} outside [2, {n}]"
        )));
    }
    let a: Vec<Vec<BigRational>> = r
        .iter()
        .map(|&rj| {
            (1..d)
                .map(|i| {
                    sign(d - i - 1)
                        * BigRational::new(
                            binomial_big(rj as u64, i as u64 + 1),
                            binomial_big(n as u64, i as u64 + 1),
                        )
                })
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = r
        .iter()
        .map(|&rj| {
            let mut rhs = sign(d) * int(rj as i64 - 1);
            for i in 0..d {
                rhs += sign(d - i - 1) * table.average(i, rj);
            }
            rhs
        })
        .collect();
    let f = solve(a, b).ok_or(Error::SingularSystem)?;
    Ok(f[d - 2].clone())
}

/// Outcome of the three-dimensional ratio check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatioOutcome {
    Ratio(BigRational),
    /// Numerator and denominator both vanish.
    BothZero,
    /// Denominator vanishes but the numerator does not.
    Undefined {
        numerator: BigRational,
    },
}

/// `(n(n-1)(n-2)(n-3)/(R_1R_2R_3) - f_3) / Σ_{1<=i<=3, 0<=j<=3} c_i (-1)^{i+j} A(j,R_i)`
/// with the coefficients `c_i` built from `R`.
pub fn dim_three_ratio(
    complex: &SimplicialComplex,
    r: [usize; 3],
    field: FieldSpec,
) -> Result<RatioOutcome> {
    if complex.d() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: complex.d(),
        });
    }
    let table = betti_table(complex, field)?;
    dim_three_ratio_from_table(complex, &table, r)
}

pub fn dim_three_ratio_from_table(
    complex: &SimplicialComplex,
    table: &BettiTable,
    r: [usize; 3],
) -> Result<RatioOutcome> {
    let n = complex.n();
    if !(2 <= r[0] && r[0] < r[1] && r[1] < r[2] && r[2] <= n) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= R1 < R2 < R3 <= {n}, got {r:?}"
        )));
    }
    let f3 = complex.f_vector().get(3);
    let numerator = upper_bound_from_skips(n, 4, &[1, r[0], r[1], r[2]]) - int(f3);
    let coeffs = skip_coefficients(&r);
    let mut denominator = BigRational::zero();
    for (idx, c) in coeffs.iter().enumerate() {
        let i = idx + 1;
        for j in 0..=3 {
            denominator += int(c.clone()) * sign(i + j) * table.average(j, r[idx]);
        }
    }
    Ok(match (numerator.is_zero(), denominator.is_zero()) {
        (true, true) => RatioOutcome::BothZero,
        (false, true) => RatioOutcome::Undefined { numerator },
        _ => RatioOutcome::Ratio(numerator / denominator),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityBound {
    pub q: Vec<usize>,
    /// `n(n-1)..(n-d+1) / Π (n - q_i + 1)`.
    pub bound: BigRational,
    /// `f_{d-1} - bound`.
    pub gap: BigRational,
    pub holds: bool,
    /// `holds` coincides with `e >= L`.
    pub agrees_with_lower: bool,
}

/// Lower bound through the connectivity sequence; requires Cohen-Macaulay.
pub fn connectivity_bound(complex: &SimplicialComplex, field: FieldSpec) -> Result<ConnectivityBound> {
    if !is_cohen_macaulay(complex, field) {
        return Err(Error::NotCohenMacaulay);
    }
    let (n, d) = (complex.n(), complex.d());
    let q = connectivity_sequence(complex, field).0;
    let den: BigInt = q.iter().map(|&qi| BigInt::from(n - qi + 1)).product();
    let bound = BigRational::new(falling_factorial(n as u64, d as u64), den);
    let e = int(complex.f_vector().get(complex.dim()));
    let gap = &e - &bound;
    let holds = !gap.is_negative();
    let report = bound_report(complex, field)?;
    Ok(ConnectivityBound {
        q,
        bound,
        gap,
        holds,
        agrees_with_lower: report.lower_holds == Some(holds),
    })
}

/// For Cohen-Macaulay complexes with a pure resolution, `e = Π m_i / c!`.
pub fn huneke_miller_check(complex: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let table = betti_table(complex, field)?;
    let report = bound_report_from_table(complex, &table);
    if !report.is_cm || !report.is_pure {
        return Err(Error::PreconditionNotMet(
            "requires a Cohen-Macaulay complex with pure resolution".into(),
        ));
    }
    Ok(int(report.e) == report.lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    const F2: FieldSpec = FieldSpec::GF2;

    fn q(x: i64, y: i64) -> BigRational {
        BigRational::new(x.into(), y.into())
    }

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(4, [[0, 1], [2, 3]]).unwrap()
    }

    #[test]
    fn example_seven_bounds() {
        let r = bound_report(&example_seven(), F2).unwrap();
        assert_eq!(r.e, 21);
        assert_eq!(r.upper, q(21, 1));
        assert_eq!(r.lower, q(21, 1));
        assert!(r.upper_equality && r.lower_equality == Some(true));
        assert!(r.is_cm && r.is_pure);
    }

    #[test]
    fn cross_polytopes_attain_both_bounds() {
        for s in 2..=3 {
            let r = bound_report(&cross_polytope_boundary(s).unwrap(), F2).unwrap();
            assert_eq!(r.e, 1 << s);
            assert_eq!(r.upper, int(1u64 << s));
            assert_eq!(r.lower, int(1u64 << s));
            assert!(r.skip_sum.is_zero());
        }
    }

    #[test]
    fn two_edges_strict_upper() {
        let r = bound_report(&two_edges(), F2).unwrap();
        assert_eq!(r.e, 2);
        assert_eq!(r.upper, q(3, 1));
        assert!(r.upper_holds && !r.upper_equality);
        assert_eq!(r.lower_holds, None);
        assert_eq!(r.skip_sum, q(1, 1));
    }

    #[test]
    fn simplex_convention() {
        let r = bound_report(&simplex(3).unwrap(), F2).unwrap();
        assert_eq!(
            (r.e, r.upper.clone(), r.lower.clone()),
            (1, q(1, 1), q(1, 1))
        );
        assert!(r.skip_sum.is_zero() && r.profile.is_none());
    }

    #[test]
    fn coefficients() {
        assert_eq!(upper_skip_coefficients(&[1, 3]).unwrap(), vec![BigInt::from(1)]);
        assert_eq!(
            upper_skip_coefficients(&[1, 2, 4]).unwrap(),
            vec![BigInt::from(12), BigInt::from(2)]
        );
        assert_eq!(
            upper_skip_coefficients(&[1, 2, 3, 5]).unwrap(),
            vec![BigInt::from(240), BigInt::from(120), BigInt::from(12)]
        );
        assert_eq!(upper_skip_coefficients(&[1, 3, 3]), Err(Error::NonIncreasingSkips));
        assert_eq!(upper_skip_coefficients(&[2, 3]), Err(Error::NonIncreasingSkips));
    }

    #[test]
    fn facet_count_identity() {
        assert_eq!(
            cramer_facet_count(&cycle(4).unwrap(), &[3], F2).unwrap(),
            q(4, 1)
        );
        assert_eq!(
            cramer_facet_count(&example_seven(), &[3, 5], F2).unwrap(),
            q(21, 1)
        );
        assert_eq!(
            cramer_facet_count(&example_seven(), &[3, 3], F2),
            Err(Error::SingularSystem)
        );
        assert!(matches!(
            cramer_facet_count(&example_seven(), &[3], F2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn skip_identity_matches_shift_product() {
        for c in [
            example_seven(),
            two_edges(),
            cycle(6).unwrap(),
            real_projective_plane(),
        ] {
            let r = bound_report(&c, F2).unwrap();
            let p = r.profile.unwrap();
            assert_eq!(
                upper_bound_from_skips(c.n(), c.d(), &p.upper_skips),
                r.upper
            );
        }
    }

    #[test]
    fn lower_bound_via_connectivity() {
        let r = connectivity_bound(&cycle(4).unwrap(), F2).unwrap();
        assert_eq!(r.q, vec![4, 2]);
        assert_eq!(r.bound, q(4, 1));
        assert!(r.gap.is_zero() && r.holds && r.agrees_with_lower);
        let oct = connectivity_bound(&cross_polytope_boundary(3).unwrap(), F2).unwrap();
        assert_eq!(oct.bound, q(8, 1));
        assert_eq!(connectivity_bound(&two_edges(), F2), Err(Error::NotCohenMacaulay));
    }

    #[test]
    fn huneke_miller() {
        assert!(huneke_miller_check(&example_seven(), F2).unwrap());
        assert!(huneke_miller_check(&cross_polytope_boundary(3).unwrap(), F2).unwrap());
        for k in 5..=8 {
            assert!(huneke_miller_check(&cycle(k).unwrap(), F2).unwrap());
        }
        assert!(matches!(
            huneke_miller_check(&two_edges(), F2),
            Err(Error::PreconditionNotMet(_))
        ));
    }

    #[test]
    fn dim_three_ratio_requires_dimension_three() {
        assert!(matches!(
            dim_three_ratio(&example_seven(), [3, 4, 5], F2),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 3
            })
        ));
    }
}
