//! Stanley-Reisner rings of simplicial complexes: graded Betti numbers through
//! Hochster's formula, shift data, Cohen-Macaulay predicates and multiplicity bounds.

pub mod bounds;
pub mod classify;
pub mod cm_props;
pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod generators;
pub mod hochster;
pub mod homology;
pub mod sweep;

pub use bounds::{BoundReport, ConnectivityBound, RatioOutcome};
pub use classify::{FlagCertificate, FlagClassification};
pub use cm_props::ConnectivitySequence;
pub use complex::{FVector, Face, HVector, SimplicialComplex};
pub use error::{Error, Result};
pub use hochster::{BettiTable, ShiftProfile, SweepBudget};
pub use homology::{BettiVector, FieldSpec};
pub use sweep::{SweepConfig, SweepSummary};

pub use num_bigint;
pub use num_rational;
