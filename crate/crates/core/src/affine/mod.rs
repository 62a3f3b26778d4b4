//! Arithmetic in GL(n, Z), Aff(R^n) and Aff(T^n), finitely presented groups
//! and their integral representations.

mod conjugacy;
mod element;
mod gl;
mod presentation;
mod representation;

pub use conjugacy::{
    characteristic_polynomial, conjugacy_check, ConjugacyVerdict, DistinguishingInvariant,
    InvariantKind, INVARIANT_WORD_LENGTH,
};
pub use element::{
    apply_matrix, as_integer_vector, frac, integer_vector, AffReal, AffToral, Affine, Real, Toral,
    TranslationKind,
};
pub use gl::GlnZ;
pub use presentation::{GroupPresentation, Letter, Word, WordDisplay};
pub use representation::Representation;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{what} is not unimodular{}", det.as_ref().map(|d| format!(" (det {d})")).unwrap_or_default())]
    NotUnimodular { what: String, det: Option<BigInt> },
    #[error("relator {relator} does not evaluate to the identity")]
    RelatorViolated { relator: String },
    #[error("representations are over different presentations or dimensions")]
    PresentationMismatch,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("expected {expected} generator images, found {found}")]
    GeneratorCountMismatch { expected: usize, found: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl AffineError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DimensionMismatch { .. } => "DimensionMismatch",
            Self::NotUnimodular { .. } => "NotUnimodular",
            Self::RelatorViolated { .. } => "RelatorViolated",
            Self::PresentationMismatch => "PresentationMismatch",
            Self::UnknownGenerator(_) => "UnknownGenerator",
            Self::GeneratorCountMismatch { .. } => "GeneratorCountMismatch",
            Self::Malformed(_) => "Malformed",
        }
    }
}
