use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::AffineError;
use crate::linalg::IntMatrix;

/// An element of GL(n, Z): a square integer matrix with determinant ±1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GlnZ {
    matrix: IntMatrix,
}

impl GlnZ {
    pub fn new(matrix: IntMatrix) -> Result<Self, AffineError> {
        let det = matrix.determinant().map_err(|_| AffineError::NotUnimodular {
            what: format!("{}x{} matrix", matrix.rows(), matrix.cols()),
            det: None,
        })?;
        if !det.abs().is_one() {
            return Err(AffineError::NotUnimodular {
                what: format!("matrix {matrix}"),
                det: Some(det),
            });
        }
        Ok(Self { matrix })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, AffineError> {
        let m = IntMatrix::from_rows(rows).map_err(|e| AffineError::Malformed(e.to_string()))?;
        Self::new(m)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            matrix: IntMatrix::identity(n),
        }
    }

    pub fn minus_identity(n: usize) -> Self {
        Self {
            matrix: IntMatrix::scalar(n, -1),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.matrix
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.determinant().expect("square by construction")
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: self
                .matrix
                .inverse_unimodular()
                .expect("unimodular by construction"),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            matrix: self.matrix.transpose(),
        }
    }

    /// `(A⁻¹)ᵀ`, the action on the dual lattice.
    pub fn contragredient(&self) -> Self {
        self.inverse().transpose()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AffineError> {
        if self.dim() != other.dim() {
            return Err(AffineError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// `P·self·P⁻¹`
    pub fn conjugate_by(&self, p: &Self) -> Self {
        Self {
            matrix: &(&p.matrix * &self.matrix) * &p.inverse().matrix,
        }
    }
}

impl fmt::Debug for GlnZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GlnZ{}", self.matrix)
    }
}

impl fmt::Display for GlnZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            GlnZ::new(IntMatrix::scalar(3, 2)),
            Err(AffineError::NotUnimodular { .. })
        ));
        assert!(GlnZ::new(IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn inverse_and_contragredient() {
        let a = GlnZ::from_rows(&[[1, 1], [0, 1]]).unwrap();
        assert!(a.mul(&a.inverse()).unwrap().is_identity());
        assert_eq!(
            a.contragredient(),
            GlnZ::from_rows(&[[1, 0], [-1, 1]]).unwrap()
        );
        let m = GlnZ::minus_identity(3);
        assert_eq!(m.contragredient(), m);
    }
}
