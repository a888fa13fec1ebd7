//! The per-complex report and its JSON form (schema 1).

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use srmult_core::bounds::{bound_report_from_table, connectivity_bound};
use srmult_core::classify::{classify_flag_from_table, FlagClassification};
use srmult_core::cm_props::{
    connectivity_sequence, dehn_sommerville_defect, is_cohen_macaulay, is_gorenstein,
    is_gorenstein_star, is_homology_manifold, is_orientable,
};
use srmult_core::generators::{example_seven, EXAMPLE_SEVEN_PUBLISHED_F2};
use srmult_core::hochster::betti_table_with_budget;
use srmult_core::num_rational::BigRational;
use srmult_core::{FieldSpec, SimplicialComplex, SweepBudget};

pub const SCHEMA: u32 = 1;

/// Largest `n` for which the connectivity sequence and the lower-bound
/// reformulation are included (both enumerate subsets per skeleton).
pub const CONNECTIVITY_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub numerator: String,
    pub denominator: String,
}

impl From<&BigRational> for Rational {
    fn from(x: &BigRational) -> Self {
        Rational {
            numerator: x.numer().to_string(),
            denominator: x.denom().to_string(),
        }
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator == "1" {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSummary {
    pub n: usize,
    pub d: usize,
    pub dim: isize,
    /// 1-based.
    pub facets: Vec<Vec<usize>>,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub pure: bool,
    pub flag: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftsDoc {
    pub min_shifts: Vec<usize>,
    pub max_shifts: Vec<usize>,
    pub length: usize,
    pub codim: usize,
    pub upper_skips: Vec<usize>,
    pub lower_skips: Vec<usize>,
    pub regularity: usize,
    pub pure: bool,
    pub quasi_pure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmLowerDoc {
    pub connectivity: Vec<usize>,
    pub bound: Rational,
    pub gap: Rational,
    pub holds: bool,
    pub agrees_with_lower: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub e: u64,
    pub upper: Rational,
    pub lower: Rational,
    pub upper_holds: bool,
    pub upper_equality: bool,
    pub lower_holds: Option<bool>,
    pub lower_equality: Option<bool>,
    pub skip_sum: Rational,
    pub cm_lower: Option<CmLowerDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicatesDoc {
    pub cohen_macaulay: bool,
    pub gorenstein_star: bool,
    pub gorenstein: bool,
    pub homology_manifold: bool,
    pub orientable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub field: String,
    /// `betti[i][j] = β_{i,j}` for rows `0..=length`.
    pub betti: Vec<Vec<u64>>,
    pub shifts: Option<ShiftsDoc>,
    pub bounds: BoundsDoc,
    pub predicates: PredicatesDoc,
    /// `h_{d-k} - h_k - (-1)^k C(d,k)(χ - (1 + (-1)^{d-1}))` for `k = 0..=d`.
    pub dehn_sommerville: Vec<i64>,
    pub classification: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool: ToolInfo,
    pub source: String,
    pub complex: ComplexSummary,
    pub fields: Vec<FieldReport>,
    pub divergences: Vec<String>,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_us: u64,
}

fn field_report(
    complex: &SimplicialComplex,
    field: FieldSpec,
    budget: &SweepBudget,
) -> srmult_core::Result<(FieldReport, Vec<String>)> {
    let table = betti_table_with_budget(complex, field, budget)?;
    let report = bound_report_from_table(complex, &table);
    let mut violations = Vec::new();
    if !report.upper_holds {
        violations.push(format!(
            "{field}: e = {} exceeds U = {}",
            report.e, report.upper
        ));
    }
    if report.lower_holds == Some(false) {
        violations.push(format!(
            "{field}: e = {} below L = {} on a CM complex",
            report.e, report.lower
        ));
    }
    let reisner = is_cohen_macaulay(complex, field);
    if reisner != report.is_cm {
        violations.push(format!("{field}: Reisner and subset criteria disagree"));
    }
    let cm_lower = if report.is_cm && report.profile.is_some() && complex.n() <= CONNECTIVITY_LIMIT
    {
        let r = connectivity_bound(complex, field)?;
        if !r.agrees_with_lower {
            violations.push(format!(
                "{field}: lower-bound reformulation disagrees with e >= L"
            ));
        }
        Some(CmLowerDoc {
            connectivity: connectivity_sequence(complex, field).0,
            bound: (&r.bound).into(),
            gap: (&r.gap).into(),
            holds: r.holds,
            agrees_with_lower: r.agrees_with_lower,
        })
    } else {
        None
    };
    let classification = complex.is_flag().then(|| {
        let c = classify_flag_from_table(complex, &table);
        if matches!(c, FlagClassification::Unclassified { .. }) {
            violations.push(format!(
                "{field}: flag complex with pure resolution outside the three categories"
            ));
        }
        c.summary()
    });
    let shifts = report.profile.as_ref().map(|p| ShiftsDoc {
        min_shifts: p.min_shifts.clone(),
        max_shifts: p.max_shifts.clone(),
        length: p.length,
        codim: p.codim,
        upper_skips: p.upper_skips.clone(),
        lower_skips: p.lower_skips.clone(),
        regularity: p.regularity,
        pure: p.is_pure(),
        quasi_pure: p.is_quasi_pure(),
    });
    let doc = FieldReport {
        field: field.to_string(),
        betti: table.rows().to_vec(),
        shifts,
        bounds: BoundsDoc {
            e: report.e,
            upper: (&report.upper).into(),
            lower: (&report.lower).into(),
            upper_holds: report.upper_holds,
            upper_equality: report.upper_equality,
            lower_holds: report.lower_holds,
            lower_equality: report.lower_equality,
            skip_sum: (&report.skip_sum).into(),
            cm_lower,
        },
        predicates: PredicatesDoc {
            cohen_macaulay: reisner,
            gorenstein_star: is_gorenstein_star(complex, field),
            gorenstein: is_gorenstein(complex, field),
            homology_manifold: is_homology_manifold(complex, field),
            orientable: is_orientable(complex, field),
        },
        dehn_sommerville: (0..=complex.d())
            .map(|k| dehn_sommerville_defect(complex, k).expect("k <= d"))
            .collect(),
        classification,
    };
    Ok((doc, violations))
}

fn divergences(fields: &[FieldReport]) -> Vec<String> {
    let mut out = Vec::new();
    let Some(first) = fields.first() else {
        return out;
    };
    let named = |f: &FieldReport| -> Vec<(&'static str, String)> {
        let p = &f.predicates;
        vec![
            ("cohen_macaulay", p.cohen_macaulay.to_string()),
            ("gorenstein_star", p.gorenstein_star.to_string()),
            ("homology_manifold", p.homology_manifold.to_string()),
            ("orientable", p.orientable.to_string()),
            ("betti", format!("{:?}", f.betti)),
        ]
    };
    let base = named(first);
    for (i, (name, _)) in base.iter().enumerate() {
        let values: Vec<String> = fields.iter().map(|f| named(f)[i].1.clone()).collect();
        if values.iter().all(|v| *v == values[0]) {
            continue;
        }
        if *name == "betti" {
            let mut groups: Vec<(&String, Vec<String>)> = Vec::new();
            for (f, v) in fields.iter().zip(&values) {
                match groups.iter_mut().find(|(g, _)| *g == v) {
                    Some((_, names)) => names.push(f.field.clone()),
                    None => groups.push((v, vec![f.field.clone()])),
                }
            }
            let listed: Vec<String> = groups
                .iter()
                .map(|(_, names)| format!("{{{}}}", names.join(", ")))
                .collect();
            out.push(format!(
                "betti table depends on the field: equal within {}",
                listed.join(" and ")
            ));
        } else {
            let listed: Vec<String> = fields
                .iter()
                .zip(&values)
                .map(|(f, v)| format!("{}={}", f.field, v))
                .collect();
            out.push(format!(
                "{name} depends on the field: {}",
                listed.join(", ")
            ));
        }
    }
    out
}

pub fn build_report(
    complex: &SimplicialComplex,
    source: &str,
    fields: &[FieldSpec],
    budget: &SweepBudget,
) -> srmult_core::Result<ReportDocument> {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut violations = Vec::new();
    for &field in fields {
        let (r, v) = field_report(complex, field, budget)?;
        reports.push(r);
        violations.extend(v);
    }
    let mut notes = Vec::new();
    if *complex == example_seven() {
        notes.push(format!(
            "published value f_2 = {EXAMPLE_SEVEN_PUBLISHED_F2} for this complex conflicts with \
             its {} listed facets; e = {} is computed from the facet list",
            complex.facets().len(),
            complex.f_vector().get(complex.dim())
        ));
    }
    if complex.n() > CONNECTIVITY_LIMIT {
        notes.push(format!(
            "connectivity sequence omitted for n > {CONNECTIVITY_LIMIT}"
        ));
    }
    let f = complex.f_vector();
    Ok(ReportDocument {
        schema: SCHEMA,
        tool: ToolInfo {
            name: "srmult".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        },
        source: source.into(),
        complex: ComplexSummary {
            n: complex.n(),
            d: complex.d(),
            dim: complex.dim(),
            facets: complex.facets_one_based(),
            f_vector: f.entries().to_vec(),
            h_vector: complex.h_vector().entries().to_vec(),
            pure: complex.is_pure(),
            flag: complex.is_flag(),
        },
        divergences: divergences(&reports),
        fields: reports,
        violations,
        notes,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn opt(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    let c = &doc.complex;
    let _ = writeln!(s, "source: {}", doc.source);
    let _ = writeln!(
        s,
        "complex: n = {}, dim = {}, {} facets, {}{}",
        c.n,
        c.dim,
        c.facets.len(),
        if c.pure { "pure" } else { "not pure" },
        if c.flag { ", flag" } else { "" }
    );
    let _ = writeln!(s, "f = {}  h = {}", tuple(&c.f_vector), tuple(&c.h_vector));
    for fr in &doc.fields {
        let _ = writeln!(s, "\n[{}]", fr.field);
        let _ = writeln!(s, "betti table (nonzero β_i,j):");
        for (i, row) in fr.betti.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, &b)| b != 0)
                .map(|(j, b)| format!("β_{i},{j} = {b}"))
                .collect();
            let _ = writeln!(s, "  i = {i}: {}", cells.join(", "));
        }
        match &fr.shifts {
            Some(sh) => {
                let _ = writeln!(
                    s,
                    "m = {}  M = {}",
                    tuple(&sh.min_shifts),
                    tuple(&sh.max_shifts)
                );
                let _ = writeln!(
                    s,
                    "upper skips = {}  lower skips = {}  regularity = {}  length = {}  codim = {}",
                    tuple(&sh.upper_skips),
                    tuple(&sh.lower_skips),
                    sh.regularity,
                    sh.length,
                    sh.codim
                );
                let _ = writeln!(
                    s,
                    "pure resolution = {}  quasi-pure = {}",
                    sh.pure, sh.quasi_pure
                );
                if sh.pure {
                    let _ = writeln!(s, "m = M = {}", tuple(&sh.min_shifts));
                }
            }
            None => {
                let _ = writeln!(s, "ideal is zero (simplex)");
            }
        }
        let b = &fr.bounds;
        let _ = writeln!(s, "e = {}  U = {}  L = {}", b.e, b.upper, b.lower);
        let _ = writeln!(
            s,
            "upper holds = {} (equality {})  lower holds = {} (equality {})",
            b.upper_holds,
            b.upper_equality,
            opt(b.lower_holds),
            opt(b.lower_equality)
        );
        let _ = writeln!(s, "skip-sum reformulation = {}", b.skip_sum);
        if let Some(cm) = &b.cm_lower {
            let _ = writeln!(
                s,
                "connectivity q = {}  lower bound via q = {}  gap = {}",
                tuple(&cm.connectivity),
                cm.bound,
                cm.gap
            );
        }
        let p = &fr.predicates;
        let _ = writeln!(
            s,
            "CM = {}  Gorenstein* = {}  Gorenstein = {}  manifold = {}  orientable = {}",
            p.cohen_macaulay, p.gorenstein_star, p.gorenstein, p.homology_manifold, p.orientable
        );
        let _ = writeln!(
            s,
            "Dehn-Sommerville defects = {}",
            tuple(&fr.dehn_sommerville)
        );
        if let Some(class) = &fr.classification {
            let _ = writeln!(s, "flag classification: {class}");
        }
    }
    if !doc.divergences.is_empty() {
        s.push('\n');
    }
    for d in &doc.divergences {
        let _ = writeln!(s, "field divergence: {d}");
    }
    for n in &doc.notes {
        let _ = writeln!(s, "note: {n}");
    }
    for v in &doc.violations {
        let _ = writeln!(s, "VIOLATION: {v}");
    }
    s
}
