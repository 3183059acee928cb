//! Brute-force engine for bound quiver algebras over prime fields.
//!
//! Nothing here depends on the Nakayama formulas, so it can serve as an
//! independent check on them.

pub mod algebra;
pub mod homological;
pub mod module;
pub mod presentation;
pub mod realize;

pub use algebra::{build_algebra, Algebra, Element};
pub use homological::{
    find_injective_hom, indecomposability, is_top_good, iso_test, Decomposition, IsoResult, Oracle, PeriodResult,
    ProjectiveCover, Resolution,
};
pub use module::{hom_dim, hom_space, Hom, QuiverModule, Submodule};
pub use presentation::{
    Arrow, BoundQuiverPresentation, Combination, ModuleDefinition, Path, PresentationBuilder, Quiver,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("empty path without a starting vertex")]
    EmptyPath,
    #[error("arrows do not compose: {0}")]
    NotComposable(String),
    #[error("characteristic {0} is not prime")]
    InvalidCharacteristic(u32),
    #[error("Loewy bound must be at least 1")]
    InvalidLoewyBound,
    #[error("relation {index} is not admissible: {reason}")]
    NonAdmissibleRelation { index: usize, reason: String },
    #[error("module definition `{0}` is inconsistent")]
    BadModuleDefinition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("J^{bound} is not zero: dimension {dimension} at bound {bound}, {dimension_next} at the next bound")]
    UnstableLoewyBound {
        bound: usize,
        dimension: usize,
        dimension_next: usize,
    },
    #[error("module is projective")]
    ProjectiveInput,
    #[error("unknown module `{0}`")]
    UnknownModule(String),
}
