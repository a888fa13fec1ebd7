//! Command implementations for the `srmult` binary.

pub mod input;
pub mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use srmult_core::classify::pure_flag_exhaustive;
use srmult_core::sweep::{run_sweep, CHECKS};
use srmult_core::{Error, FieldSpec, SweepBudget, SweepConfig};

use input::InputError;

/// `--field` argument: one field or the GF(2)/GF(3)/Q trio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Single(FieldSpec),
    Multi,
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<FieldChoice, String> {
        match s {
            "multi" => Ok(FieldChoice::Multi),
            "Q" | "q" | "rationals" => Ok(FieldChoice::Single(FieldSpec::Rationals)),
            _ => {
                let p: u64 = s
                    .parse()
                    .map_err(|_| format!("{s:?}: expected 2, an odd prime, Q or multi"))?;
                FieldSpec::prime(p)
                    .map(FieldChoice::Single)
                    .map_err(|e| e.to_string())
            }
        }
    }

    pub fn fields(&self) -> Vec<FieldSpec> {
        match self {
            FieldChoice::Single(f) => vec![*f],
            FieldChoice::Multi => vec![FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals],
        }
    }

    fn single(&self, command: &str) -> Result<FieldSpec, CliError> {
        match self {
            FieldChoice::Single(f) => Ok(*f),
            FieldChoice::Multi => Err(CliError::Input(format!("{command} takes a single field"))),
        }
    }
}

/// Exit status of a completed command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A bound or theorem check failed.
    Violation,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 2,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { n, ref field, .. } => CliError::Input(format!(
                "{e}; rerun with --budget {n} to allow it (time grows as 2^n){}",
                if field == "GF(2)" {
                    ""
                } else {
                    ", or use --field 2, the fastest field"
                }
            )),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// `--budget n`: the largest vertex count swept for any field.
pub fn budget_from(n: Option<usize>) -> SweepBudget {
    match n {
        Some(n) => SweepBudget {
            gf2: n,
            odd_prime: n,
            rationals: n,
        },
        None => SweepBudget::default(),
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    std::fs::write(path, text + "\n")
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub struct ReportArgs {
    pub path: Option<PathBuf>,
    pub generator: Option<String>,
    pub field: FieldChoice,
    pub budget: Option<usize>,
    pub json: Option<PathBuf>,
}

pub fn cmd_report(args: &ReportArgs, out: &mut String) -> Result<Status, CliError> {
    let (complex, source) = match (&args.path, &args.generator) {
        (Some(p), None) => (input::read_facet_file(p)?, p.display().to_string()),
        (None, Some(g)) => (input::generate(g)?, format!("gen:{g}")),
        _ => {
            return Err(CliError::Input(
                "give exactly one of a facet file or --gen <name[:params]>".into(),
            ))
        }
    };
    let doc = report::build_report(
        &complex,
        &source,
        &args.field.fields(),
        &budget_from(args.budget),
    )?;
    out.push_str(&report::render_text(&doc));
    if let Some(path) = &args.json {
        write_json(path, &doc)?;
    }
    Ok(if doc.violations.is_empty() {
        Status::Ok
    } else {
        Status::Violation
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyDoc {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub index: usize,
    pub check: String,
    pub detail: String,
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub schema: u32,
    pub seed: u64,
    pub count: usize,
    pub n_range: (usize, usize),
    pub dim_range: (usize, usize),
    pub field: String,
    pub model: String,
    pub instances_by_dim: BTreeMap<usize, usize>,
    pub checks: BTreeMap<String, TallyDoc>,
    pub bound_violations: usize,
    pub counterexamples: Vec<CounterexampleDoc>,
}

pub const RANDOM_MODEL: &str = "uniform n and d-1 in range (d <= n-1), f uniform in [1, C(n,d)], \
f distinct (d-1)-faces chosen uniformly, uncovered vertices added as singletons";

pub struct SweepArgs {
    pub seed: u64,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub dim_min: usize,
    pub dim_max: usize,
    pub field: FieldChoice,
    pub json: Option<PathBuf>,
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut String) -> Result<Status, CliError> {
    let config = SweepConfig {
        seed: args.seed,
        count: args.count,
        n_min: args.n_min,
        n_max: args.n_max,
        dim_min: args.dim_min,
        dim_max: args.dim_max,
        field: args.field.single("sweep")?,
    };
    let summary = run_sweep(&config)?;
    out.push_str(&summary.to_string());
    if let Some(path) = &args.json {
        let doc = SweepDocument {
            schema: report::SCHEMA,
            seed: config.seed,
            count: config.count,
            n_range: (config.n_min, config.n_max),
            dim_range: (config.dim_min, config.dim_max),
            field: config.field.to_string(),
            model: RANDOM_MODEL.into(),
            instances_by_dim: summary.by_dim.clone(),
            checks: CHECKS
                .iter()
                .map(|&c| {
                    let t = &summary.tallies[c];
                    (
                        c.to_string(),
                        TallyDoc {
                            pass: t.pass,
                            fail: t.fail,
                            not_applicable: t.not_applicable,
                        },
                    )
                })
                .collect(),
            bound_violations: summary.bound_violations(),
            counterexamples: summary
                .counterexamples
                .iter()
                .map(|c| CounterexampleDoc {
                    index: c.index,
                    check: c.check.to_string(),
                    detail: c.detail.clone(),
                    n: c.n,
                    facets: c.facets.clone(),
                })
                .collect(),
        };
        write_json(path, &doc)?;
    }
    Ok(if summary.all_passed() {
        Status::Ok
    } else {
        Status::Violation
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub n: usize,
    pub graphs: u64,
    pub pure: u64,
    pub one_leray: u64,
    pub cycle_join_simplex: u64,
    pub cross_join_simplex: u64,
    pub witnesses_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagViolationDoc {
    pub n: usize,
    /// 1-based.
    pub edges: Vec<(usize, usize)>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema: u32,
    pub n_max: usize,
    pub field: String,
    pub certified: bool,
    pub census: Vec<CensusDoc>,
    pub violations: Vec<FlagViolationDoc>,
}

pub struct CertifyArgs {
    pub n_max: usize,
    pub force: bool,
    pub field: FieldChoice,
    pub json: Option<PathBuf>,
}

pub fn cmd_certify_flag(args: &CertifyArgs, out: &mut String) -> Result<Status, CliError> {
    let field = args.field.single("certify-flag")?;
    let cert = pure_flag_exhaustive(args.n_max, field, args.force).map_err(|e| match e {
        Error::ResourceLimit { n, limit, .. } => CliError::Input(format!(
            "exhaustive enumeration on {n} vertices exceeds the limit of {limit}; pass --force to run it anyway"
        )),
        other => other.into(),
    })?;
    let doc = CertificateDocument {
        schema: report::SCHEMA,
        n_max: cert.n_max,
        field: field.to_string(),
        certified: cert.certified(),
        census: cert
            .census
            .iter()
            .map(|c| CensusDoc {
                n: c.n,
                graphs: c.graphs,
                pure: c.pure,
                one_leray: c.one_leray,
                cycle_join_simplex: c.cycle_join_simplex,
                cross_join_simplex: c.cross_join_simplex,
                witnesses_checked: c.witnesses_checked,
            })
            .collect(),
        violations: cert
            .violations
            .iter()
            .map(|v| FlagViolationDoc {
                n: v.n,
                edges: v.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
                reason: v.reason.clone(),
            })
            .collect(),
    };
    out.push_str(&format!(
        "flag complexes on <= {} vertices over {}\n",
        doc.n_max, doc.field
    ));
    for c in &doc.census {
        out.push_str(&format!(
            "  n = {}: {} graphs, {} with pure resolution ({} 1-Leray, {} cycle*simplex, {} cross*simplex), {} witnesses\n",
            c.n, c.graphs, c.pure, c.one_leray, c.cycle_join_simplex, c.cross_join_simplex, c.witnesses_checked
        ));
    }
    for v in &doc.violations {
        out.push_str(&format!(
            "VIOLATION n = {} edges = {:?}: {}\n",
            v.n, v.edges, v.reason
        ));
    }
    out.push_str(if doc.certified {
        "certified\n"
    } else {
        "NOT certified\n"
    });
    if let Some(path) = &args.json {
        write_json(path, &doc)?;
    }
    Ok(if doc.certified {
        Status::Ok
    } else {
        Status::Violation
    })
}
