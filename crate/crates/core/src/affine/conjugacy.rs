//! Conjugacy of GL(n, Z) representations.
//!
//! Deciding conjugacy in GL(n, Z) in general is out of reach here. We first
//! look for a separating invariant on short words, then run a bounded
//! exhaustive search for an integral conjugator, and otherwise answer
//! `Unknown`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{AffineError, GlnZ, Letter, Representation, Word};
use crate::linalg::{kernel_basis, smith_normal_form, IntMatrix};

/// Longest word examined by the invariant pass.
pub const INVARIANT_WORD_LENGTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    /// Coefficients of `det(x·I − ρ(w))`, highest degree first.
    CharacteristicPolynomial,
    /// Smith invariants of `ρ(w) − I`, i.e. the cokernel `Z^n / im(ρ(w) − I)`.
    FixedCokernel,
    /// Smith invariants of `ρ(w) + I`.
    AntiFixedCokernel,
    /// No nonzero integer matrix intertwines the two representations.
    NoIntertwiner,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishingInvariant {
    pub kind: InvariantKind,
    /// Word on which the invariant was evaluated, in word syntax.
    pub word: String,
    pub left: Vec<BigInt>,
    pub right: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyVerdict {
    /// `P·r1(g)·P⁻¹ = r2(g)` for every generator `g`.
    Conjugate { witness: GlnZ },
    NotConjugate { invariant: DistinguishingInvariant },
    /// Search box exhausted without a witness; nothing separated the two.
    Unknown { candidates_searched: u128 },
}

/// Coefficients of the characteristic polynomial by Faddeev–LeVerrier.
///
/// All divisions are exact over the integers.
pub fn characteristic_polynomial(a: &IntMatrix) -> Vec<BigInt> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = BigInt::from(1);
    let mut m = IntMatrix::zeros(n, n);
    for k in 1..=n {
        let prev = coeffs[k - 1].clone();
        m = &(a * &m) + &IntMatrix::scalar(n, prev);
        let am = a * &m;
        let trace: BigInt = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[k] = -trace / BigInt::from(k);
    }
    coeffs
}

fn words_up_to(generators: usize, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (0..generators)
        .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    let mut out = Vec::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn shifted_smith(a: &IntMatrix, shift: i64) -> Vec<BigInt> {
    let shifted = a + &IntMatrix::scalar(a.rows(), shift);
    smith_normal_form(&shifted).diagonal()
}

type Probe = fn(&IntMatrix) -> Vec<BigInt>;

fn separating_invariant(r1: &Representation, r2: &Representation) -> Option<DistinguishingInvariant> {
    let pres = r1.presentation();
    for word in words_up_to(pres.generator_count(), INVARIANT_WORD_LENGTH) {
        let a = r1.evaluate_word(&word);
        let b = r2.evaluate_word(&word);
        let probes: [(InvariantKind, Probe); 3] = [
            (InvariantKind::CharacteristicPolynomial, characteristic_polynomial),
            (InvariantKind::FixedCokernel, |m| shifted_smith(m, -1)),
            (InvariantKind::AntiFixedCokernel, |m| shifted_smith(m, 1)),
        ];
        for (kind, probe) in probes {
            let left = probe(a.matrix());
            let right = probe(b.matrix());
            if left != right {
                return Some(DistinguishingInvariant {
                    kind,
                    word: pres.display_word(&word).to_string(),
                    left,
                    right,
                });
            }
        }
    }
    None
}

/// Linear map `P ↦ (P·A_g − B_g·P)_g` on row-major `P`, as an integer matrix.
fn intertwiner_system(r1: &Representation, r2: &Representation) -> IntMatrix {
    let n = r1.dim();
    let gens = r1.presentation().generator_count();
    let mut sys = IntMatrix::zeros(gens * n * n, n * n);
    for g in 0..gens {
        let a = r1.image(g).matrix();
        let b = r2.image(g).matrix();
        for i in 0..n {
            for j in 0..n {
                let row = g * n * n + i * n + j;
                // (P·A)_{ij} = Σ_k P_{ik} A_{kj}
                for k in 0..n {
                    let v = sys.get(row, i * n + k) + a.get(k, j);
                    sys.set(row, i * n + k, v);
                }
                // (B·P)_{ij} = Σ_k B_{ik} P_{kj}
                for k in 0..n {
                    let v = sys.get(row, k * n + j) - b.get(i, k);
                    sys.set(row, k * n + j, v);
                }
            }
        }
    }
    sys
}

fn small_images(rep: &Representation) -> Option<Vec<Vec<i64>>> {
    rep.images()
        .iter()
        .map(|m| m.matrix().entries().iter().map(ToPrimitive::to_i64).collect())
        .collect()
}

/// Exhaustive search over `P` with entries in `[-bound, bound]`, in
/// lexicographic order of the row-major entry vector. Returns the first
/// unimodular intertwiner found and the number of candidates visited.
fn bounded_search(r1: &Representation, r2: &Representation, bound: u32) -> (Option<GlnZ>, u128) {
    let n = r1.dim();
    let (Some(a), Some(b)) = (small_images(r1), small_images(r2)) else {
        return (None, 0);
    };
    let bound = i64::from(bound);
    let cells = n * n;
    let mut p = vec![-bound; cells];
    let mut visited: u128 = 0;
    let intertwines = |p: &[i64]| -> bool {
        a.iter().zip(&b).all(|(ag, bg)| {
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let mut lhs: i128 = 0;
                    let mut rhs: i128 = 0;
                    for k in 0..n {
                        lhs += i128::from(p[i * n + k]) * i128::from(ag[k * n + j]);
                        rhs += i128::from(bg[i * n + k]) * i128::from(p[k * n + j]);
                    }
                    lhs == rhs
                })
            })
        })
    };
    loop {
        visited += 1;
        if intertwines(&p) {
            let m = IntMatrix::from_vec(n, n, p.iter().map(|&x| BigInt::from(x)).collect())
                .expect("n*n entries");
            if let Ok(w) = GlnZ::new(m) {
                return (Some(w), visited);
            }
        }
        // odometer, last cell fastest
        let mut idx = cells;
        loop {
            if idx == 0 {
                return (None, visited);
            }
            idx -= 1;
            if p[idx] < bound {
                p[idx] += 1;
                for x in &mut p[idx + 1..] {
                    *x = -bound;
                }
                break;
            }
        }
    }
}

pub fn conjugacy_check(
    r1: &Representation,
    r2: &Representation,
    bound: u32,
) -> Result<ConjugacyVerdict, AffineError> {
    if r1.presentation() != r2.presentation() || r1.dim() != r2.dim() {
        return Err(AffineError::PresentationMismatch);
    }
    if r1.images() == r2.images() {
        return Ok(ConjugacyVerdict::Conjugate {
            witness: GlnZ::identity(r1.dim()),
        });
    }
    if let Some(invariant) = separating_invariant(r1, r2) {
        return Ok(ConjugacyVerdict::NotConjugate { invariant });
    }
    if r1.dim() > 0 && kernel_basis(&intertwiner_system(r1, r2)).cols() == 0 {
        return Ok(ConjugacyVerdict::NotConjugate {
            invariant: DistinguishingInvariant {
                kind: InvariantKind::NoIntertwiner,
                word: "1".into(),
                left: Vec::new(),
                right: Vec::new(),
            },
        });
    }
    let (witness, searched) = bounded_search(r1, r2, bound);
    Ok(match witness {
        Some(witness) => ConjugacyVerdict::Conjugate { witness },
        None => ConjugacyVerdict::Unknown {
            candidates_searched: searched,
        },
    })
}
