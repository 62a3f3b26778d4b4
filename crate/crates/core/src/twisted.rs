//! Chain complexes of free `Z[π]`-modules and their twisted cohomology.
//!
//! A [`TwistedComplex`] stores boundary matrices whose entries are group-ring
//! elements. Applying a representation `ρ: π → GL(n, Z)` turns it into an
//! integer [`CochainComplex`] with `δ_k = ρ(∂_kᵀ)` blockwise, i.e.
//! `(δτ)(e) = τ(∂e)` with `π` acting on the coefficients through `ρ`.
//! Cohomology is computed exactly via Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::affine::{GroupPresentation, Representation, Word};
use crate::linalg::{smith_normal_form, AbelianGroup, IntMatrix, SmithDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("delta_{degree} composed with delta_{} is not zero", degree - 1)]
    NotAComplex { degree: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degree {degree} outside 0..={top}")]
    DegreeOutOfRange { degree: usize, top: usize },
    #[error("cochain is not a cocycle in degree {degree}")]
    NotACocycle { degree: usize },
    #[error("representation is over a different presentation than the complex")]
    PresentationMismatch,
}

impl ComplexError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::NotAComplex { .. } => "NotAComplex",
            Self::ShapeMismatch(_) => "ShapeMismatch",
            Self::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Self::NotACocycle { .. } => "NotACocycle",
            Self::PresentationMismatch => "PresentationMismatch",
        }
    }
}

/// Finite formal sum `Σ c_i·w_i` of group words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: Vec<(BigInt, Word)>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([(BigInt::one(), Word::empty())])
    }

    /// Zero coefficients are dropped; words are kept as given.
    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, Word)>) -> Self {
        Self {
            terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(BigInt, Word)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c_i·ρ(w_i)`
    pub fn apply(&self, rep: &Representation) -> IntMatrix {
        let n = rep.dim();
        self.terms.iter().fold(IntMatrix::zeros(n, n), |acc, (c, w)| {
            &acc + &rep.evaluate_word(w).matrix().scale(c)
        })
    }

    fn max_generator(&self) -> Option<usize> {
        self.terms
            .iter()
            .flat_map(|(_, w)| w.letters().iter().map(|l| l.generator))
            .max()
    }
}

/// Free `Z[π]`-chain complex `C_d → … → C_1 → C_0`.
///
/// `boundaries[k - 1]` holds `∂_k: C_k → C_{k-1}` as a `ranks[k-1] × ranks[k]`
/// matrix: column `j` lists the coefficients of `∂(e^k_j)` in the basis of
/// `C_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedComplex {
    presentation: GroupPresentation,
    ranks: Vec<usize>,
    boundaries: Vec<Vec<Vec<GroupRingElement>>>,
}

impl TwistedComplex {
    pub fn new(
        presentation: GroupPresentation,
        ranks: Vec<usize>,
        boundaries: Vec<Vec<Vec<GroupRingElement>>>,
    ) -> Result<Self, ComplexError> {
        if ranks.is_empty() {
            return Err(ComplexError::ShapeMismatch("complex needs at least degree 0".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(ComplexError::ShapeMismatch(format!(
                "{} ranks need {} boundary maps, found {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            let k = i + 1;
            let ok = b.len() == ranks[k - 1] && b.iter().all(|row| row.len() == ranks[k]);
            if !ok {
                return Err(ComplexError::ShapeMismatch(format!(
                    "boundary_{k} must be {}x{}",
                    ranks[k - 1],
                    ranks[k]
                )));
            }
            let bad = b
                .iter()
                .flatten()
                .filter_map(GroupRingElement::max_generator)
                .any(|g| g >= presentation.generator_count());
            if bad {
                return Err(ComplexError::ShapeMismatch(format!(
                    "boundary_{k} references an unknown generator"
                )));
            }
        }
        Ok(Self {
            presentation,
            ranks,
            boundaries,
        })
    }

    /// The cellular complex of the universal cover of RP² as a `Z[⟨t | t²⟩]`
    /// complex: one cell per degree, `∂_2 = 1 + t`, `∂_1 = 1 − t`.
    pub fn real_projective_plane() -> Self {
        let pres = GroupPresentation::cyclic("t", 2);
        let t = Word::generator(0);
        let one_plus_t =
            GroupRingElement::from_terms([(BigInt::one(), Word::empty()), (BigInt::one(), t.clone())]);
        let one_minus_t =
            GroupRingElement::from_terms([(BigInt::one(), Word::empty()), (-BigInt::one(), t)]);
        Self::new(pres, vec![1, 1, 1], vec![vec![vec![one_minus_t]], vec![vec![one_plus_t]]])
            .expect("well-formed complex")
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundaries(&self) -> &[Vec<Vec<GroupRingElement>>] {
        &self.boundaries
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// Applies `ρ` entrywise to `∂_kᵀ`; fails if the result is not a complex.
    pub fn to_cochain_complex(&self, rep: &Representation) -> Result<CochainComplex, ComplexError> {
        if rep.presentation() != &self.presentation {
            return Err(ComplexError::PresentationMismatch);
        }
        let n = rep.dim();
        let dims: Vec<usize> = self.ranks.iter().map(|r| r * n).collect();
        let deltas = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let k = i + 1;
                let mut delta = IntMatrix::zeros(dims[k], dims[k - 1]);
                for (src, row) in b.iter().enumerate() {
                    for (dst, entry) in row.iter().enumerate() {
                        if !entry.is_zero() {
                            delta.set_block(dst * n, src * n, &entry.apply(rep));
                        }
                    }
                }
                delta
            })
            .collect();
        CochainComplex::new(dims, deltas)
    }
}

/// Integer cochain complex `C^0 → C^1 → … → C^d` with `deltas[k-1] = δ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    dims: Vec<usize>,
    deltas: Vec<IntMatrix>,
}

/// Coordinates of a cohomology class in the decomposition reported by
/// [`CochainComplex::cohomology`]: free coordinates first, then each torsion
/// coordinate with its modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoordinates {
    pub free: Vec<BigInt>,
    pub torsion: Vec<(BigInt, BigInt)>,
}

impl ClassCoordinates {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(|(v, _)| v.is_zero())
    }
}

/// `ker δ_{k+1} / im δ_k` prepared for reading off classes.
struct QuotientData {
    /// Inverse of the right transform of δ_{k+1}'s Smith form.
    v_inv: IntMatrix,
    rank_next: usize,
    /// Smith form of δ_k expressed in kernel coordinates.
    relations: SmithDecomposition,
}

impl CochainComplex {
    pub fn new(dims: Vec<usize>, deltas: Vec<IntMatrix>) -> Result<Self, ComplexError> {
        if dims.is_empty() || deltas.len() + 1 != dims.len() {
            return Err(ComplexError::ShapeMismatch(format!(
                "{} cochain groups need {} deltas, found {}",
                dims.len(),
                dims.len().saturating_sub(1),
                deltas.len()
            )));
        }
        for (i, d) in deltas.iter().enumerate() {
            let k = i + 1;
            if d.rows() != dims[k] || d.cols() != dims[k - 1] {
                return Err(ComplexError::ShapeMismatch(format!(
                    "delta_{k} must be {}x{}, found {}x{}",
                    dims[k],
                    dims[k - 1],
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for (i, pair) in deltas.windows(2).enumerate() {
            if !(&pair[1] * &pair[0]).is_zero() {
                return Err(ComplexError::NotAComplex { degree: i + 2 });
            }
        }
        Ok(Self { dims, deltas })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn deltas(&self) -> &[IntMatrix] {
        &self.deltas
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    /// `δ_k: C^{k-1} → C^k`, with the zero maps at both ends included.
    pub fn delta(&self, k: usize) -> IntMatrix {
        let target = self.dims.get(k).copied().unwrap_or(0);
        let source = if k == 0 { 0 } else { self.dims.get(k - 1).copied().unwrap_or(0) };
        if k >= 1 && k <= self.deltas.len() {
            self.deltas[k - 1].clone()
        } else {
            IntMatrix::zeros(target, source)
        }
    }

    fn check_degree(&self, k: usize) -> Result<(), ComplexError> {
        if k > self.top_degree() {
            return Err(ComplexError::DegreeOutOfRange {
                degree: k,
                top: self.top_degree(),
            });
        }
        Ok(())
    }

    fn quotient(&self, k: usize) -> QuotientData {
        let next = smith_normal_form(&self.delta(k + 1));
        let rank_next = next.rank();
        let v_inv = next
            .v
            .inverse_unimodular()
            .expect("Smith transforms are unimodular");
        // Columns of δ_k lie in ker δ_{k+1}, so in V-coordinates their first
        // `rank_next` components vanish.
        let in_v = &v_inv * &self.delta(k);
        let relations = in_v.submatrix(rank_next..in_v.rows(), 0..in_v.cols());
        QuotientData {
            v_inv,
            rank_next,
            relations: smith_normal_form(&relations),
        }
    }

    /// Isomorphism type of `H^k = ker δ_{k+1} / im δ_k`.
    pub fn cohomology(&self, k: usize) -> Result<AbelianGroup, ComplexError> {
        self.check_degree(k)?;
        let q = self.quotient(k);
        let kernel_rank = self.dims[k] - q.rank_next;
        let factors = q.relations.invariant_factors();
        Ok(AbelianGroup::from_invariant_factors(
            kernel_rank - factors.len(),
            &factors,
        ))
    }

    /// Coordinates of the class of a `k`-cocycle.
    ///
    /// Two cocycles are cohomologous iff their coordinates agree.
    pub fn class_of(&self, k: usize, cochain: &[BigInt]) -> Result<ClassCoordinates, ComplexError> {
        self.check_degree(k)?;
        if cochain.len() != self.dims[k] {
            return Err(ComplexError::ShapeMismatch(format!(
                "cochain of length {} in degree {k} of dimension {}",
                cochain.len(),
                self.dims[k]
            )));
        }
        let image = self.delta(k + 1).mul_vec(cochain).expect("shapes checked");
        if image.iter().any(|x| !x.is_zero()) {
            return Err(ComplexError::NotACocycle { degree: k });
        }
        let q = self.quotient(k);
        let y = q.v_inv.mul_vec(cochain).expect("shapes checked");
        let c = q
            .relations
            .u
            .mul_vec(&y[q.rank_next..])
            .expect("shapes checked");
        let diag = q.relations.diagonal();
        let mut coords = ClassCoordinates {
            free: Vec::new(),
            torsion: Vec::new(),
        };
        for (i, ci) in c.into_iter().enumerate() {
            match diag.get(i) {
                Some(d) if !d.is_zero() => {
                    if !d.is_one() {
                        coords.torsion.push((ci.mod_floor(d), d.clone()));
                    }
                }
                _ => coords.free.push(ci),
            }
        }
        Ok(coords)
    }
}
