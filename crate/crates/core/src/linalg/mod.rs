//! Exact integer linear algebra: dense big-integer matrices, Hermite and
//! Smith normal forms, integer linear systems and unimodular completion.
//!
//! Everything here is a pure function of its inputs.

mod abelian;
mod diophantine;
mod hermite;
mod matrix;
mod smith;

pub use abelian::AbelianGroup;
pub use diophantine::{complete_primitive, kernel_basis, solve_diophantine, DiophantineSolution};
pub use hermite::hermite_normal_form;
pub use matrix::{gcd_all, IntMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("system has no integer solution")]
    NoSolution,
    #[error("vector is not primitive (gcd {gcd})")]
    NotPrimitive { gcd: BigInt },
}

impl LinalgError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DimensionMismatch { .. } => "DimensionMismatch",
            Self::NotSquare { .. } => "NotSquare",
            Self::NoSolution => "NoSolution",
            Self::NotPrimitive { .. } => "NotPrimitive",
        }
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use num_bigint::BigInt;
    use num_traits::Zero;

    use super::{gcd_all, IntMatrix};

    fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, k, &mut Vec::new(), &mut out);
        out
    }

    /// gcd of all `k×k` minors, by enumeration.
    pub fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
        let mut minors = Vec::new();
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                let sub = m.select_rows(&rows).select_columns(&cols);
                minors.push(sub.determinant().unwrap());
            }
        }
        if minors.is_empty() {
            return BigInt::zero();
        }
        gcd_all(&minors)
    }
}
