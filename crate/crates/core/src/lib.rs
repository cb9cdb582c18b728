//! Exact intersection theory, nef and pseudo-effective cones, nefvalues and
//! Δ-genera for a small universe of polarized varieties (projective spaces,
//! split projective bundles over `P^1`, quadrics by rank and generalized
//! cones), together with decision procedures that classify polarized
//! varieties, log pairs and slc gluings with `K_X + (n − 1) L` not
//! pseudo-effective.
//!
//! All arithmetic is over [`Rational`]; nothing here touches floating point.

pub mod chow;
pub mod classifier;
pub mod cohomology;
pub mod cones;
pub mod harness;
pub mod model;
pub mod rational;
pub mod resolution;

pub use classifier::{
    classify_pair, classify_polarized, hirzebruch_case_table, kobayashi_ochiai, slc_classify,
    slc_exclusions, BoundaryComponent, BoundarySpec, CaseLabel, CaseReport, DownstairsComponent,
    ExclusionRow, GluedModel, HirzebruchCase, HirzebruchRow, KoLabel, NodalCurve, Normalization,
    PairCaseReport, PairLabel, RejectReason, SlcLabel, SlcReport,
};
pub use cohomology::{delta_genus, h0, DeltaGenusReport};
pub use cones::{
    hypothesis_high_nefvalue, is_ample, is_nef, is_pseff, nef_cone, nefvalue, oracle_grid,
    oracle_nef_curves, oracle_pseff_sections, pseff_cone, ConeDescription, GridRow, NefvalueResult,
    SectionOracle, DEFAULT_K_MAX,
};
pub use harness::{
    degree_sequences, enumerate_universe, verify_theorems, Failure, UniverseBounds,
    VerificationReport,
};
pub use model::{
    canonical_class, class_group, intersection_top, make_model, BasisTag, ClassGroup, CurveClass,
    DivisorClass, ModelDescriptor, VarietyModel,
};
pub use rational::Rational;
pub use resolution::{cone_pushforward, ConeResolution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: BasisTag, found: BasisTag },
    #[error("wrong arity: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("class is not ample: {0}")]
    NotAmple(String),
    #[error("class is not integral: {0}")]
    NotIntegral(String),
    #[error("rational-only class group: {0}")]
    RationalOnly(String),
    #[error("negative fiber degree: {0}")]
    NegativeFiberDegree(String),
    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
