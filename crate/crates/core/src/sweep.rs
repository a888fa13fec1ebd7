//! Seeded random complexes run through a battery of exact invariant checks.
//!
//! Instances come from the random pure-facet model: `n` and `d` uniform in the
//! configured ranges (with `d <= n - 1`, so no instance is a simplex), `f` uniform
//! in `[1, C(n, d)]`, then `f` distinct `(d-1)`-faces
//! chosen uniformly and every uncovered vertex added as a singleton. Parameters and
//! complexes are generated sequentially from one ChaCha8 stream, then evaluated in
//! parallel; results are collected in instance order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{
    bound_report_from_table, connectivity_bound, cramer_from_table, skip_averages_vanish,
    upper_bound_from_skips, BoundReport,
};
use crate::cm_props::{
    connectivity_sequence, dehn_sommerville_defect, is_cohen_macaulay, is_gorenstein_star,
    is_homology_manifold,
};
use crate::combinatorics::binomial;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::generators::random_pure;
use crate::hochster::{betti_table, BettiTable};
use crate::homology::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Range for the dimension `d - 1` of the random facets.
    pub dim_min: usize,
    pub dim_max: usize,
    pub field: FieldSpec,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 1,
            count: 500,
            n_min: 3,
            n_max: 8,
            dim_min: 1,
            dim_max: 3,
            field: FieldSpec::GF2,
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max || self.dim_min > self.dim_max {
            return Err(Error::InvalidParameter(format!(
                "empty range: n in [{}, {}], dim in [{}, {}]",
                self.n_min, self.n_max, self.dim_min, self.dim_max
            )));
        }
        if self.dim_min + 2 > self.n_max {
            return Err(Error::InvalidParameter(format!(
                "dimension {} needs more than {} vertices",
                self.dim_min, self.n_max
            )));
        }
        Ok(())
    }
}

/// The complexes a configuration produces, in order.
pub fn generate_instances(config: &SweepConfig) -> Result<Vec<SimplicialComplex>> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.count);
    while out.len() < config.count {
        let n = rng.gen_range(config.n_min..=config.n_max);
        let d_max = (config.dim_max + 1).min(n - 1);
        if config.dim_min + 1 > d_max {
            continue;
        }
        let d = rng.gen_range(config.dim_min + 1..=d_max);
        let total = binomial(n as u64, d as u64) as usize;
        let f = rng.gen_range(1..=total);
        out.push(random_pure(&mut rng, n, d, f)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(String),
    NotApplicable,
}

impl Check {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(detail())
        }
    }

    fn when(applies: bool, check: impl FnOnce() -> Check) -> Check {
        if applies {
            check()
        } else {
            Check::NotApplicable
        }
    }
}

/// Names of the checks in the battery, in evaluation order.
pub const CHECKS: &[&str] = &[
    "upper-bound",
    "cm-lower-bound",
    "skip-sum-sign",
    "skip-identity",
    "facet-count-identity",
    "skip-averages-force-pure-cm",
    "dim-three",
    "low-skips",
    "max-shifts-increase-to-codim",
    "link-max-shifts",
    "reisner-vs-subsets",
    "cm-lower-skips",
    "cm-h-nonnegative",
    "cm-connectivity-decreasing",
    "cm-lower-bound-reformulation",
    "huneke-miller",
    "gorenstein-star-implies-cm",
    "manifold-dehn-sommerville",
];

/// Bound violations are the two conjectured inequalities; everything else is a
/// theorem or identity.
pub const BOUND_CHECKS: &[&str] = &["upper-bound", "cm-lower-bound"];

#[derive(Clone, Debug)]
pub struct InstanceResult {
    pub index: usize,
    pub complex: SimplicialComplex,
    pub checks: Vec<(&'static str, Check)>,
}

fn rational(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Extra valid size vectors for the facet-count identity, drawn deterministically
/// from the complex itself.
fn extra_size_vectors(complex: &SimplicialComplex, count: usize) -> Vec<Vec<usize>> {
    let (n, d) = (complex.n(), complex.d());
    if d < 2 || n < d {
        return Vec::new();
    }
    let seed = complex.facets().iter().fold(n as u64, |h, f| {
        h.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ f.bits()
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            // d - 1 distinct sizes from [2, n]
            let mut r: Vec<usize> = sample(&mut rng, n - 1, d - 1)
                .into_iter()
                .map(|x| x + 2)
                .collect();
            r.sort_unstable();
            r
        })
        .collect()
}

fn link_max_shifts(complex: &SimplicialComplex, table: &BettiTable, field: FieldSpec) -> Check {
    let max_shift = |t: &BettiTable, i: usize| t.max_shift(i).filter(|_| i >= 1);
    for g in complex.faces_by_dim().into_iter().skip(1).flatten() {
        let Ok(link) = complex.link(g) else {
            return Check::Fail(format!("link of {g:?} failed"));
        };
        let Ok(lt) = betti_table(&link, field) else {
            return Check::Fail(format!("table of link of {g:?} failed"));
        };
        let limit = (link.n() as isize - link.dim()).max(0) as usize;
        for i in 1..=limit.min(lt.length()) {
            let Some(ml) = max_shift(&lt, i) else {
                continue;
            };
            match max_shift(table, i) {
                Some(mg) if ml <= mg => {}
                other => {
                    return Check::Fail(format!("face {g:?}: M_{i}(lk) = {ml}, M_{i} = {other:?}"))
                }
            }
        }
    }
    Check::Pass
}

/// Runs the invariant battery on one complex.
pub fn check_instance(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Result<Vec<(&'static str, Check)>> {
    let table = betti_table(complex, field)?;
    let report: BoundReport = bound_report_from_table(complex, &table);
    let profile = report.profile.clone();
    let (n, d) = (complex.n(), complex.d());
    let e = rational(report.e);
    let reisner = is_cohen_macaulay(complex, field);
    let cm = report.is_cm;
    let mut out: Vec<(&'static str, Check)> = Vec::new();

    out.push((
        "upper-bound",
        Check::from_bool(report.upper_holds, || {
            format!("e = {} > U = {}", report.e, report.upper)
        }),
    ));
    out.push((
        "cm-lower-bound",
        Check::when(cm, || {
            Check::from_bool(report.lower_holds == Some(true), || {
                format!("e = {} < L = {}", report.e, report.lower)
            })
        }),
    ));

    let Some(profile) = profile else {
        // simplex: every remaining check is about a nonzero ideal
        for name in &CHECKS[out.len()..] {
            out.push((name, Check::NotApplicable));
        }
        return Ok(out);
    };

    let sum = &report.skip_sum;
    out.push((
        "skip-sum-sign",
        Check::from_bool(
            (!sum.is_negative()) == report.upper_holds && (!sum.is_zero() || report.upper_equality),
            || format!("skip sum = {sum}, e = {}, U = {}", report.e, report.upper),
        ),
    ));
    out.push((
        "skip-identity",
        Check::from_bool(
            upper_bound_from_skips(n, d, &profile.upper_skips) == report.upper,
            || format!("skips {:?} vs U = {}", profile.upper_skips, report.upper),
        ),
    ));

    let mut sizes = vec![profile.upper_skips[1..].to_vec()];
    sizes.extend(extra_size_vectors(complex, 3));
    out.push(("facet-count-identity", {
        let mut check = Check::Pass;
        for r in &sizes {
            match cramer_from_table(&table, r) {
                Ok(f) if f == e => {}
                other => {
                    check = Check::Fail(format!("R = {r:?}: {other:?}, e = {}", report.e));
                    break;
                }
            }
        }
        check
    }));

    out.push((
        "skip-averages-force-pure-cm",
        Check::when(skip_averages_vanish(&table, &profile), || {
            Check::from_bool(cm && profile.is_pure(), || {
                "hypothesis holds but not pure CM".into()
            })
        }),
    ));
    out.push((
        "dim-three",
        Check::when(d == 4, || {
            Check::from_bool(
                report.upper_holds && (!report.upper_equality || (cm && profile.is_pure())),
                || {
                    format!(
                        "e = {}, U = {}, cm = {cm}, pure = {}",
                        report.e,
                        report.upper,
                        profile.is_pure()
                    )
                },
            )
        }),
    ));
    out.push((
        "low-skips",
        Check::when(profile.big_m(1) + 1 >= d, || {
            Check::from_bool(report.upper_holds, || {
                format!("M_1 = {}, e > U", profile.big_m(1))
            })
        }),
    ));
    out.push((
        "max-shifts-increase-to-codim",
        Check::from_bool(
            profile.max_shifts[..profile.codim]
                .windows(2)
                .all(|w| w[0] < w[1]),
            || format!("M = {:?}", profile.max_shifts),
        ),
    ));
    out.push(("link-max-shifts", link_max_shifts(complex, &table, field)));
    out.push((
        "reisner-vs-subsets",
        Check::from_bool(reisner == cm, || format!("Reisner {reisner}, subsets {cm}")),
    ));

    let q = cm.then(|| connectivity_sequence(complex, field));
    out.push((
        "cm-lower-skips",
        Check::when(cm, || {
            let predicted = q.as_ref().unwrap().predicted_lower_skips(n);
            Check::from_bool(predicted == profile.lower_skips, || {
                format!(
                    "lower skips {:?}, from q {:?}",
                    profile.lower_skips, predicted
                )
            })
        }),
    ));
    out.push((
        "cm-h-nonnegative",
        Check::when(cm, || {
            let h = complex.h_vector();
            Check::from_bool(h.entries().iter().all(|&x| x >= 0), || {
                format!("h = {:?}", h.entries())
            })
        }),
    ));
    out.push((
        "cm-connectivity-decreasing",
        Check::when(cm, || {
            let q = q.as_ref().unwrap();
            Check::from_bool(
                q.is_strictly_decreasing() && q.0.first() == Some(&n),
                || format!("q = {:?}", q.0),
            )
        }),
    ));
    out.push((
        "cm-lower-bound-reformulation",
        Check::when(cm, || match connectivity_bound(complex, field) {
            Ok(r) => Check::from_bool(r.agrees_with_lower, || {
                format!("gap {} vs e >= L {:?}", r.gap, report.lower_holds)
            }),
            Err(err) => Check::Fail(err.to_string()),
        }),
    ));
    out.push((
        "huneke-miller",
        Check::when(cm && profile.is_pure(), || {
            Check::from_bool(e == report.lower, || {
                format!("e = {}, L = {}", report.e, report.lower)
            })
        }),
    ));
    let gorenstein_star = is_gorenstein_star(complex, field);
    out.push((
        "gorenstein-star-implies-cm",
        Check::when(gorenstein_star, || {
            Check::from_bool(reisner, || "Gorenstein* but not CM".into())
        }),
    ));
    out.push((
        "manifold-dehn-sommerville",
        Check::when(is_homology_manifold(complex, field), || {
            let defects: Vec<i64> = (0..=d)
                .map(|k| dehn_sommerville_defect(complex, k).unwrap())
                .collect();
            Check::from_bool(defects.iter().all(|&x| x == 0), || {
                format!("defects {defects:?}")
            })
        }),
    ));
    debug_assert_eq!(out.iter().map(|(n, _)| *n).collect::<Vec<_>>(), CHECKS);
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub index: usize,
    pub check: &'static str,
    pub detail: String,
    /// 1-based facet list.
    pub facets: Vec<Vec<usize>>,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub instances: usize,
    /// Instances by `d - 1`.
    pub by_dim: BTreeMap<usize, usize>,
    pub tallies: BTreeMap<&'static str, CheckTally>,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepSummary {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn bound_violations(&self) -> usize {
        self.counterexamples
            .iter()
            .filter(|c| BOUND_CHECKS.contains(&c.check))
            .count()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "sweep seed={} count={} n=[{},{}] dim=[{},{}] field={}",
            c.seed, c.count, c.n_min, c.n_max, c.dim_min, c.dim_max, c.field
        )?;
        let dims: Vec<String> = self
            .by_dim
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        writeln!(f, "instances by dimension: {}", dims.join(" "))?;
        for name in CHECKS {
            let t = &self.tallies[name];
            writeln!(
                f,
                "  {name:<30} pass {:>5}  fail {:>3}  n/a {:>5}",
                t.pass, t.fail, t.not_applicable
            )?;
        }
        writeln!(f, "bound violations: {}", self.bound_violations())?;
        for ce in &self.counterexamples {
            writeln!(
                f,
                "counterexample #{} [{}]: {}",
                ce.index, ce.check, ce.detail
            )?;
            writeln!(f, "  n = {} facets = {:?}", ce.n, ce.facets)?;
        }
        Ok(())
    }
}

pub fn summarize(config: &SweepConfig, results: Vec<InstanceResult>) -> SweepSummary {
    let mut tallies: BTreeMap<&'static str, CheckTally> =
        CHECKS.iter().map(|&n| (n, CheckTally::default())).collect();
    let mut by_dim = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for r in &results {
        *by_dim.entry(r.complex.d().saturating_sub(1)).or_insert(0) += 1;
        for (name, check) in &r.checks {
            let t = tallies.get_mut(name).expect("known check");
            match check {
                Check::Pass => t.pass += 1,
                Check::NotApplicable => t.not_applicable += 1,
                Check::Fail(detail) => {
                    t.fail += 1;
                    counterexamples.push(Counterexample {
                        index: r.index,
                        check: name,
                        detail: detail.clone(),
                        facets: r.complex.facets_one_based(),
                        n: r.complex.n(),
                    });
                }
            }
        }
    }
    SweepSummary {
        config: config.clone(),
        instances: results.len(),
        by_dim,
        tallies,
        counterexamples,
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    let instances = generate_instances(config)?;
    let results: Vec<InstanceResult> = instances
        .into_par_iter()
        .enumerate()
        .map(|(index, complex)| {
            let checks = check_instance(&complex, config.field)?;
            Ok(InstanceResult {
                index,
                complex,
                checks,
            })
        })
        .collect::<Result<_>>()?;
    Ok(summarize(config, results))
}
