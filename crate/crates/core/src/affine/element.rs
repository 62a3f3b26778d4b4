//! Affine transformations `x ↦ A·x + v` with `A ∈ GL(n, Z)` and rational `v`.
//!
//! Two flavours share one implementation: [`AffReal`] keeps the translation
//! in `Q^n ⊂ R^n`, [`AffToral`] reduces it into `[0, 1)^n`, i.e. a point of
//! the torus `R^n / Z^n`.

use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{AffineError, GlnZ};
use crate::linalg::IntMatrix;

pub trait TranslationKind: Clone + PartialEq + Eq + fmt::Debug {
    const NAME: &'static str;
    fn normalize(v: &mut [BigRational]);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Toral;

impl TranslationKind for Real {
    const NAME: &'static str = "real";

    fn normalize(_: &mut [BigRational]) {}
}

impl TranslationKind for Toral {
    const NAME: &'static str = "toral";

    fn normalize(v: &mut [BigRational]) {
        for x in v {
            *x = frac(x);
        }
    }
}

/// Representative of `x mod 1` in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// `A·v` for an integer matrix and a rational vector.
pub fn apply_matrix(a: &IntMatrix, v: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(a.cols(), v.len(), "matrix/vector length mismatch");
    (0..a.rows())
        .map(|r| {
            a.row(r)
                .iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (m, x)| {
                    acc + x * BigRational::from_integer(m.clone())
                })
        })
        .collect()
}

pub fn integer_vector(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// Returns the vector as integers when every component is integral.
pub fn as_integer_vector(v: &[BigRational]) -> Option<Vec<BigInt>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Affine<K: TranslationKind> {
    linear: GlnZ,
    translation: Vec<BigRational>,
    kind: PhantomData<K>,
}

pub type AffReal = Affine<Real>;
pub type AffToral = Affine<Toral>;

impl<K: TranslationKind> Affine<K> {
    pub fn new(linear: GlnZ, mut translation: Vec<BigRational>) -> Result<Self, AffineError> {
        if linear.dim() != translation.len() {
            return Err(AffineError::DimensionMismatch {
                left: linear.dim(),
                right: translation.len(),
            });
        }
        K::normalize(&mut translation);
        Ok(Self {
            linear,
            translation,
            kind: PhantomData,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::linear_only(GlnZ::identity(n))
    }

    pub fn linear_only(linear: GlnZ) -> Self {
        let n = linear.dim();
        Self {
            linear,
            translation: vec![BigRational::zero(); n],
            kind: PhantomData,
        }
    }

    pub fn translation_only(translation: Vec<BigRational>) -> Self {
        Self::new(GlnZ::identity(translation.len()), translation).expect("dimensions agree")
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn linear(&self) -> &GlnZ {
        &self.linear
    }

    pub fn translation(&self) -> &[BigRational] {
        &self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(Zero::is_zero)
    }

    /// `(A, x)·(B, y) = (AB, A·y + x)`
    pub fn mul(&self, other: &Self) -> Result<Self, AffineError> {
        let linear = self.linear.mul(&other.linear)?;
        let translation = apply_matrix(self.linear.matrix(), &other.translation)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(linear, translation)
    }

    /// `(A, v)⁻¹ = (A⁻¹, −A⁻¹·v)`
    pub fn inverse(&self) -> Self {
        let inv = self.linear.inverse();
        let translation = apply_matrix(inv.matrix(), &self.translation)
            .into_iter()
            .map(|x| -x)
            .collect();
        Self::new(inv, translation).expect("dimensions agree")
    }

    /// Image of a point (reduced mod 1 for the toral kind).
    pub fn apply(&self, x: &[BigRational]) -> Vec<BigRational> {
        let mut y: Vec<BigRational> = apply_matrix(self.linear.matrix(), x)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b)
            .collect();
        K::normalize(&mut y);
        y
    }
}

impl AffReal {
    /// The covering projection `Aff(R^n) → Aff(T^n)`.
    pub fn to_toral(&self) -> AffToral {
        AffToral::new(self.linear.clone(), self.translation.clone()).expect("dimensions agree")
    }
}

impl AffToral {
    /// Lift to `Aff(R^n)` using the representative in `[0, 1)^n`.
    pub fn canonical_lift(&self) -> AffReal {
        AffReal::new(self.linear.clone(), self.translation.clone()).expect("dimensions agree")
    }

    /// Largest component of the translation's distance to the integer lattice.
    pub fn translation_defect(&self) -> BigRational {
        self.translation
            .iter()
            .map(|x| {
                let y = BigRational::from_integer(1.into()) - x;
                if x < &y {
                    x.abs()
                } else {
                    y
                }
            })
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl<K: TranslationKind> fmt::Debug for Affine<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Aff[{}]({}, (", K::NAME, self.linear)?;
        for (i, t) in self.translation.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "))")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn identity_element() {
        let b = AffReal::new(GlnZ::from_rows(&[[0, 1], [1, 0]]).unwrap(), vec![q(1, 2), q(-3, 1)]).unwrap();
        assert_eq!(AffReal::identity(2).mul(&b).unwrap(), b);
        assert_eq!(b.mul(&AffReal::identity(2)).unwrap(), b);
    }

    #[test]
    fn antipodal_action_is_an_involution() {
        let a = AffReal::linear_only(GlnZ::minus_identity(3));
        assert!(a.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn toral_translations_wrap() {
        let x = AffToral::translation_only(vec![q(3, 4)]);
        let y = AffToral::translation_only(vec![q(1, 2)]);
        assert_eq!(x.mul(&y).unwrap(), AffToral::translation_only(vec![q(1, 4)]));
    }

    #[test]
    fn inverses() {
        let t = AffToral::translation_only(vec![q(1, 3), q(0, 1)]);
        assert_eq!(t.inverse(), AffToral::translation_only(vec![q(2, 3), q(0, 1)]));

        let a = GlnZ::from_rows(&[[2, 1], [1, 1]]).unwrap();
        let lin = AffReal::linear_only(a.clone());
        assert_eq!(lin.inverse(), AffReal::linear_only(a.inverse()));

        let g = AffReal::new(a.clone(), vec![q(1, 2), q(5, 3)]).unwrap();
        let inv = g.inverse();
        // (A⁻¹, −A⁻¹v) with A⁻¹ = [[1,-1],[-1,2]]
        assert_eq!(inv.translation(), &[q(7, 6), q(-17, 6)]);
        assert!(g.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&g).unwrap().is_identity());
    }

    #[test]
    fn dimension_mismatch() {
        let a = AffReal::identity(2);
        let b = AffReal::identity(3);
        assert!(matches!(a.mul(&b), Err(AffineError::DimensionMismatch { .. })));
        assert!(AffReal::new(GlnZ::identity(2), vec![q(0, 1)]).is_err());
    }

    #[test]
    fn frac_of_negative() {
        assert_eq!(frac(&q(-1, 4)), q(3, 4));
        assert_eq!(frac(&q(5, 2)), q(1, 2));
        assert_eq!(frac(&q(-2, 1)), q(0, 1));
    }
}
