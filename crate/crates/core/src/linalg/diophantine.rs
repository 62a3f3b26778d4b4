use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{gcd_all, hermite_normal_form, smith_normal_form, IntMatrix, LinalgError};

/// A particular integer solution of `M·x = b` together with a basis of `ker M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub particular: Vec<BigInt>,
    /// Each entry is a kernel vector; together they form a lattice basis.
    pub kernel: Vec<Vec<BigInt>>,
}

/// Solves `M·x = b` over the integers through the Smith decomposition.
///
/// With `U·M·V = D`, the system becomes `D·y = U·b` with `x = V·y`; it is
/// solvable iff each nonzero `d_i` divides `(U·b)_i` and the remaining
/// components of `U·b` vanish. The columns of `V` past the rank span the
/// kernel.
pub fn solve_diophantine(m: &IntMatrix, b: &[BigInt]) -> Result<DiophantineSolution, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: format!("right-hand side of length {}", m.rows()),
            found: format!("length {}", b.len()),
        });
    }
    let snf = smith_normal_form(m);
    let ub = snf.u.mul_vec(b)?;
    let factors = snf.invariant_factors();
    let rank = factors.len();

    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, d) in factors.iter().enumerate() {
        let (q, r) = ub[i].div_rem(d);
        if !r.is_zero() {
            return Err(LinalgError::NoSolution);
        }
        y[i] = q;
    }
    if ub[rank..].iter().any(|e| !e.is_zero()) {
        return Err(LinalgError::NoSolution);
    }

    let particular = snf.v.mul_vec(&y)?;
    let kernel = (rank..m.cols()).map(|j| snf.v.col(j)).collect();
    debug_assert_eq!(m.mul_vec(&particular)?, b);
    Ok(DiophantineSolution { particular, kernel })
}

/// Basis of the integer kernel of `m` as the columns of the returned matrix.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let keep: Vec<usize> = (rank..m.cols()).collect();
    snf.v.select_columns(&keep)
}

/// Unimodular `G` with `(G⁻¹)ᵀ·e₁ = v`.
///
/// Row-reducing the column `v` gives `U·v = e₁` (the pivot is `gcd(v)`, which
/// must be 1), hence `U⁻¹·e₁ = v` and `G = Uᵀ` works.
pub fn complete_primitive(v: &[BigInt]) -> Result<IntMatrix, LinalgError> {
    let g = gcd_all(v);
    if !g.is_one() {
        return Err(LinalgError::NotPrimitive { gcd: g });
    }
    let (_, u) = hermite_normal_form(&IntMatrix::column(v.iter().cloned()));
    Ok(u.transpose())
}
