use super::{AffineError, GlnZ, GroupPresentation, Word};
use crate::linalg::IntMatrix;

/// A homomorphism from a finitely presented group into GL(n, Z), given by
/// generator images and checked against every relator.
///
/// Words are evaluated left to right as matrix products: the word `g h`
/// maps to `ρ(g)·ρ(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    presentation: GroupPresentation,
    dim: usize,
    images: Vec<GlnZ>,
    inverses: Vec<GlnZ>,
}

impl Representation {
    /// Validates images against the presentation.
    ///
    /// Fails with `NotUnimodular` for an image with `|det| != 1` and with
    /// `RelatorViolated` naming the first relator that does not evaluate to
    /// the identity.
    pub fn new(
        presentation: GroupPresentation,
        dim: usize,
        images: Vec<IntMatrix>,
    ) -> Result<Self, AffineError> {
        if images.len() != presentation.generator_count() {
            return Err(AffineError::GeneratorCountMismatch {
                expected: presentation.generator_count(),
                found: images.len(),
            });
        }
        let mut checked = Vec::with_capacity(images.len());
        for (g, m) in images.into_iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(AffineError::DimensionMismatch {
                    left: dim,
                    right: m.rows().max(m.cols()),
                });
            }
            let name = &presentation.generators()[g];
            checked.push(GlnZ::new(m).map_err(|e| match e {
                AffineError::NotUnimodular { det, .. } => AffineError::NotUnimodular {
                    what: format!("image of generator {name}"),
                    det,
                },
                other => other,
            })?);
        }
        let inverses = checked.iter().map(GlnZ::inverse).collect();
        let rep = Self {
            presentation,
            dim,
            images: checked,
            inverses,
        };
        for r in rep.presentation.relators() {
            if !rep.evaluate_word(r).is_identity() {
                return Err(AffineError::RelatorViolated {
                    relator: rep.presentation.display_word(r).to_string(),
                });
            }
        }
        Ok(rep)
    }

    /// Every generator acts trivially.
    pub fn trivial(presentation: GroupPresentation, dim: usize) -> Self {
        let images = vec![IntMatrix::identity(dim); presentation.generator_count()];
        Self::new(presentation, dim, images).expect("trivial representation satisfies every relator")
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[GlnZ] {
        &self.images
    }

    pub fn image(&self, generator: usize) -> &GlnZ {
        &self.images[generator]
    }

    pub fn evaluate_word(&self, word: &Word) -> GlnZ {
        let mut acc = IntMatrix::identity(self.dim);
        for l in word.letters() {
            let m = if l.inverse {
                &self.inverses[l.generator]
            } else {
                &self.images[l.generator]
            };
            acc = &acc * m.matrix();
        }
        GlnZ::new(acc).expect("products of unimodular matrices are unimodular")
    }

    /// Conjugate representation `g ↦ P·ρ(g)·P⁻¹`.
    pub fn conjugated_by(&self, p: &GlnZ) -> Self {
        let images = self
            .images
            .iter()
            .map(|m| m.conjugate_by(p).into_matrix())
            .collect();
        Self::new(self.presentation.clone(), self.dim, images).expect("conjugation preserves relators")
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(GlnZ::is_identity)
    }
}
