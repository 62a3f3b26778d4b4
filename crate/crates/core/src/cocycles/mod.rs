//! Torus-bundle transition data over the nerve of a good cover.
//!
//! Conventions used throughout:
//!
//! * Edge `(a, b)` with `a < b` carries `ψ_{b←a}`, the map from chart `a`
//!   coordinates to chart `b` coordinates. Its linear part `L_e` transports
//!   coefficients from `a` to `b`.
//! * A `k`-cochain value on a simplex lives in the chart of its last vertex.
//! * Twisted coboundaries:
//!   `(δv)_{ab} = v_b − L_{ab} v_a`,
//!   `(δw)_{abc} = w_{bc} + L_{bc} w_{ab} − w_{ac}`,
//!   `(δz)_{abcd} = z_{bcd} − z_{acd} + z_{abd} − L_{cd} z_{abc}`.
//! * A loop word `u v` denotes the loop running through `v` first, so that
//!   monodromy composes like the left-to-right matrix product.

mod chern;
mod local;
mod nerve;
mod transition;

pub use chern::{chern_cocycle, chern_cocycle_with_lift_offsets, cohomologous, ChernCocycle, Cohomologous};
pub use local::LocalSystem;
pub use nerve::{CoverNerve, NerveSpec};
pub use transition::{
    monodromy_of, realize_class, trivial_fstar_fibration, twist_by_class, verify_cocycle,
    AffineAtlas, CocycleReport, EdgeLabel, EdgeViolation, TransitionData, TriangleViolation,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("invalid nerve: {0}")]
    InvalidNerve(String),
    #[error("loop words inconsistent with the presentation: {0}")]
    RelatorViolated(String),
    #[error("cocycles live on different nerves")]
    NerveMismatch,
    #[error("cocycles have different twisting")]
    TwistingMismatch,
    #[error("unrealizable shift: {0}")]
    Unrealizable(String),
    #[error("cocycle condition fails: {0}")]
    CocycleViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
}

impl CocycleError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::InvalidNerve(_) => "InvalidNerve",
            Self::RelatorViolated(_) => "RelatorViolated",
            Self::NerveMismatch => "NerveMismatch",
            Self::TwistingMismatch => "TwistingMismatch",
            Self::Unrealizable(_) => "Unrealizable",
            Self::CocycleViolation(_) => "CocycleViolation",
            Self::DimensionMismatch(_) => "DimensionMismatch",
            Self::NotACocycle(_) => "NotACocycle",
        }
    }
}
