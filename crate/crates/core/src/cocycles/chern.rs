use num_bigint::BigInt;
use num_traits::Zero;

use super::{CocycleError, CoverNerve, LocalSystem, TransitionData};
use crate::affine::{as_integer_vector, Representation};
use crate::linalg::{solve_diophantine, LinalgError};
use crate::twisted::ClassCoordinates;

/// Integral twisted 2-cocycle on a nerve: one `Z^n` vector per triangle,
/// expressed in the chart of the triangle's last vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernCocycle {
    local: LocalSystem,
    values: Vec<Vec<BigInt>>,
    twisting: Representation,
}

impl ChernCocycle {
    pub fn new(local: LocalSystem, values: Vec<Vec<BigInt>>) -> Result<Self, CocycleError> {
        let nerve = local.nerve();
        if values.len() != nerve.triangles().len() || values.iter().any(|v| v.len() != local.dim()) {
            return Err(CocycleError::DimensionMismatch(format!(
                "a 2-cochain needs {} vectors of length {}",
                nerve.triangles().len(),
                local.dim()
            )));
        }
        if !nerve.tetrahedra().is_empty() {
            let delta = local.cech_complex().delta(3);
            let image = delta.mul_vec(&LocalSystem::flatten(&values)).expect("shapes agree");
            if let Some(i) = image.iter().position(|x| !x.is_zero()) {
                let q = i / local.dim().max(1);
                return Err(CocycleError::NotACocycle(format!(
                    "coboundary is nonzero on tetrahedron {:?}",
                    nerve.tetrahedra()[q].map(|v| nerve.vertices()[v].clone())
                )));
            }
        }
        let twisting = local.monodromy()?;
        Ok(Self {
            local,
            values,
            twisting,
        })
    }

    /// The cochain equal to `value` on triangle `t` and zero elsewhere.
    pub fn concentrated(local: LocalSystem, t: usize, value: Vec<BigInt>) -> Result<Self, CocycleError> {
        let count = local.nerve().triangles().len();
        if t >= count {
            return Err(CocycleError::DimensionMismatch(format!(
                "triangle #{t} out of range ({count} triangles)"
            )));
        }
        let mut values = vec![vec![BigInt::zero(); local.dim()]; count];
        values[t] = value;
        Self::new(local, values)
    }

    pub fn zero(local: LocalSystem) -> Result<Self, CocycleError> {
        let values = vec![vec![BigInt::zero(); local.dim()]; local.nerve().triangles().len()];
        Self::new(local, values)
    }

    pub fn nerve(&self) -> &CoverNerve {
        self.local.nerve()
    }

    pub fn local_system(&self) -> &LocalSystem {
        &self.local
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn twisting(&self) -> &Representation {
        &self.twisting
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(Zero::is_zero)
    }

    /// Coordinates of the class in twisted Čech cohomology `H^2`.
    pub fn class(&self) -> ClassCoordinates {
        self.local
            .cech_complex()
            .class_of(2, &LocalSystem::flatten(&self.values))
            .expect("values are a cocycle")
    }
}

/// Obstruction cocycle `z_{abc} = ĝ_{bc} + A_{bc}·ĝ_{ab} − ĝ_{ac}` built from
/// the canonical lifts in `[0, 1)^n` (plus any recorded drift).
pub fn chern_cocycle(td: &TransitionData) -> Result<ChernCocycle, CocycleError> {
    build(td, None)
}

/// As [`chern_cocycle`], with the lift on edge `e` moved by `offsets[e]`.
pub fn chern_cocycle_with_lift_offsets(
    td: &TransitionData,
    offsets: &[Vec<BigInt>],
) -> Result<ChernCocycle, CocycleError> {
    if offsets.len() != td.nerve().edges().len() || offsets.iter().any(|v| v.len() != td.dim()) {
        return Err(CocycleError::DimensionMismatch(format!(
            "lift offsets need {} vectors of length {}",
            td.nerve().edges().len(),
            td.dim()
        )));
    }
    build(td, Some(offsets))
}

fn build(td: &TransitionData, offsets: Option<&[Vec<BigInt>]>) -> Result<ChernCocycle, CocycleError> {
    let local = td.local_system()?;
    let values = (0..td.nerve().triangles().len())
        .map(|t| {
            as_integer_vector(&td.triangle_defect(t, offsets)).ok_or_else(|| {
                CocycleError::CocycleViolation(format!(
                    "translations do not close up on triangle {:?}",
                    td.nerve().triangle_name(t)
                ))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChernCocycle::new(local, values)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cohomologous {
    /// `c1 − c2 = δw`, with `w` given per edge.
    Equal { witness: Vec<Vec<BigInt>> },
    NotEqual,
}

impl Cohomologous {
    pub fn is_equal(&self) -> bool {
        matches!(self, Self::Equal { .. })
    }
}

/// Decides whether `c1 − c2` is a twisted coboundary by solving `δw = c1 − c2`
/// over the integers.
pub fn cohomologous(c1: &ChernCocycle, c2: &ChernCocycle) -> Result<Cohomologous, CocycleError> {
    if c1.nerve() != c2.nerve() {
        return Err(CocycleError::NerveMismatch);
    }
    if c1.local.linear_parts() != c2.local.linear_parts() {
        return Err(CocycleError::TwistingMismatch);
    }
    let diff: Vec<BigInt> = LocalSystem::flatten(&c1.values)
        .iter()
        .zip(LocalSystem::flatten(&c2.values))
        .map(|(a, b)| a - b)
        .collect();
    let delta = c1.local.cech_complex().delta(2);
    match solve_diophantine(&delta, &diff) {
        Ok(sol) => Ok(Cohomologous::Equal {
            witness: c1.local.blocks(&sol.particular),
        }),
        Err(LinalgError::NoSolution) => Ok(Cohomologous::NotEqual),
        Err(e) => unreachable!("coboundary system is well formed: {e}"),
    }
}
