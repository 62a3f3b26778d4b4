//! Floating-point checks of the explicit attaching maps on
//! `(R³ ∖ {x¹ = x² = 0}) × T³`.
//!
//! The torus here is `T³ = R³ / 2πZ³`; [`TorusPoint2Pi::to_unit`] and
//! [`TorusPoint2Pi::from_unit`] convert to and from `R³ / Z³`. `arg` is the
//! principal branch with its cut on the negative `x¹`-axis.

use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use thiserror::Error;

use crate::affine::GlnZ;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("point {0:?} lies on the locus x1 = x2 = 0")]
    DegenerateLocus([f64; 3]),
    #[error("difference stencil at {0:?} crosses the branch cut of arg")]
    BranchCutProximity([f64; 3]),
    #[error("step must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("expected a 3x3 matrix, got {0}x{0}")]
    DimensionMismatch(usize),
}

impl ConstructionError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DegenerateLocus(_) => "DegenerateLocus",
            Self::BranchCutProximity(_) => "BranchCutProximity",
            Self::InvalidStep(_) => "InvalidStep",
            Self::DimensionMismatch(_) => "DimensionMismatch",
        }
    }
}

/// Point of `R³ / 2πZ³` with coordinates in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusPoint2Pi {
    coords: [f64; 3],
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU.
    if y >= TAU {
        0.0
    } else {
        y
    }
}

impl TorusPoint2Pi {
    pub fn new(coords: [f64; 3]) -> Self {
        Self {
            coords: coords.map(wrap),
        }
    }

    pub fn zero() -> Self {
        Self { coords: [0.0; 3] }
    }

    pub fn coords(&self) -> [f64; 3] {
        self.coords
    }

    /// Coordinates in `R³ / Z³`.
    pub fn to_unit(&self) -> [f64; 3] {
        self.coords.map(|c| c / TAU)
    }

    pub fn from_unit(u: [f64; 3]) -> Self {
        Self::new(u.map(|c| c * TAU))
    }

    pub fn shifted(&self, v: [f64; 3]) -> Self {
        Self::new([0, 1, 2].map(|i| self.coords[i] + v[i]))
    }

    pub fn negated(&self) -> Self {
        Self::new(self.coords.map(|c| -c))
    }

    /// Largest componentwise distance on the circle `R / 2πZ`.
    pub fn distance(&self, other: &Self) -> f64 {
        (0..3)
            .map(|i| {
                let d = wrap(self.coords[i] - other.coords[i]);
                d.min(TAU - d)
            })
            .fold(0.0, f64::max)
    }
}

/// Point of `R³` off the locus `x¹ = x² = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasePoint {
    x: [f64; 3],
}

impl BasePoint {
    pub fn new(x: [f64; 3]) -> Result<Self, ConstructionError> {
        if x[0] * x[0] + x[1] * x[1] > 0.0 && x.iter().all(|c| c.is_finite()) {
            Ok(Self { x })
        } else {
            Err(ConstructionError::DegenerateLocus(x))
        }
    }

    pub fn coords(&self) -> [f64; 3] {
        self.x
    }

    pub fn negated(&self) -> Self {
        Self { x: self.x.map(|c| -c) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }
}

fn arg(x: &[f64; 3]) -> f64 {
    x[1].atan2(x[0])
}

fn log_term(x: &[f64; 3]) -> f64 {
    0.5 * ((x[0] * x[0] + x[1] * x[1]) / (1.0 + x[1] * x[1])).ln()
}

/// `φ₊(x) = (arg(x¹ + ix²), ½ log(((x¹)² + (x²)²) / (1 + (x²)²)), 0)`
pub fn phi_plus(x: &BasePoint) -> [f64; 3] {
    [arg(&x.x), log_term(&x.x), 0.0]
}

/// `φ₋(x) = (−arg(x¹ + ix²) + π, −½ log(((x¹)² + (x²)²) / (1 + (x²)²)), 0)`
pub fn phi_minus(x: &BasePoint) -> [f64; 3] {
    [-arg(&x.x) + PI, -log_term(&x.x), 0.0]
}

pub fn phi(sign: Sign, x: &BasePoint) -> [f64; 3] {
    match sign {
        Sign::Plus => phi_plus(x),
        Sign::Minus => phi_minus(x),
    }
}

/// `h_±(x, t) = (x, t + φ_±(x))`
pub fn attach_h(sign: Sign, x: &BasePoint, t: &TorusPoint2Pi) -> (BasePoint, TorusPoint2Pi) {
    (*x, t.shifted(phi(sign, x)))
}

/// Inverse of [`attach_h`] on the torus factor.
pub fn detach_h(sign: Sign, x: &BasePoint, t: &TorusPoint2Pi) -> (BasePoint, TorusPoint2Pi) {
    (*x, t.shifted(phi(sign, x).map(|c| -c)))
}

fn check_three(g: &GlnZ) -> Result<(), ConstructionError> {
    if g.dim() == 3 {
        Ok(())
    } else {
        Err(ConstructionError::DimensionMismatch(g.dim()))
    }
}

fn to_f64(m: &IntMatrix) -> [[f64; 3]; 3] {
    use num_traits::ToPrimitive;
    let mut out = [[0.0; 3]; 3];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = m.get(r, c).to_f64().unwrap_or(f64::NAN);
        }
    }
    out
}

fn mat_vec(m: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    m.map(|row| row[0] * v[0] + row[1] * v[1] + row[2] * v[2])
}

/// `h^G_±(x, t) = (x, t + (G⁻¹)ᵀ·φ_±(G·x))`
pub fn attach_h_g(
    g: &GlnZ,
    sign: Sign,
    x: &BasePoint,
    t: &TorusPoint2Pi,
) -> Result<(BasePoint, TorusPoint2Pi), ConstructionError> {
    check_three(g)?;
    let gx = BasePoint::new(mat_vec(&to_f64(g.matrix()), x.x))?;
    let shift = mat_vec(&to_f64(g.contragredient().matrix()), phi(sign, &gx));
    Ok((*x, t.shifted(shift)))
}

/// `(G⁻¹)ᵀ·(1, 0, 0)`, the class produced by gluing with `h^G`.
pub fn chern_vector(g: &GlnZ) -> Result<Vec<BigInt>, ConstructionError> {
    check_three(g)?;
    Ok(g.contragredient().matrix().col(0))
}

/// Toral distance between `a·h_sign(x, t)` and `h_{−sign}(a·(x, t))`, where
/// `a·(x, t) = (−x, −t)`.
pub fn check_equivariance(sign: Sign, x: &BasePoint, t: &TorusPoint2Pi) -> Result<f64, ConstructionError> {
    let (_, lhs) = attach_h(sign, x, t);
    let (_, rhs) = attach_h(sign.opposite(), &x.negated(), &t.negated());
    Ok(lhs.negated().distance(&rhs))
}

/// As [`check_equivariance`] for the maps `h^G_±`.
pub fn check_equivariance_g(
    g: &GlnZ,
    sign: Sign,
    x: &BasePoint,
    t: &TorusPoint2Pi,
) -> Result<f64, ConstructionError> {
    let (_, lhs) = attach_h_g(g, sign, x, t)?;
    let (_, rhs) = attach_h_g(g, sign.opposite(), &x.negated(), &t.negated())?;
    Ok(lhs.negated().distance(&rhs))
}

/// `|∂₂ arg(x¹ + ix²) − ∂₁ ½ log(((x¹)² + (x²)²) / (1 + (x²)²))|` by central
/// differences with step `h`.
pub fn check_closedness(x: &BasePoint, h: f64) -> Result<f64, ConstructionError> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(ConstructionError::InvalidStep(h));
    }
    let p = x.x;
    let shift = |i: usize, d: f64| -> Result<[f64; 3], ConstructionError> {
        let mut q = p;
        q[i] += d;
        BasePoint::new(q).map(|b| b.x)
    };
    let arg_jump = arg(&shift(1, h)?) - arg(&shift(1, -h)?);
    if arg_jump.abs() > PI {
        return Err(ConstructionError::BranchCutProximity(p));
    }
    let d2_arg = arg_jump / (2.0 * h);
    let d1_log = (log_term(&shift(0, h)?) - log_term(&shift(0, -h)?)) / (2.0 * h);
    Ok((d2_arg - d1_log).abs())
}
