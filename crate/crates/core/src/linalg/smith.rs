//! Smith normal form with unimodular transforms.
//!
//! For a source matrix `M` we produce unimodular `U`, `V` and diagonal `D`
//! with `U·M·V = D`, nonnegative diagonal, `d_i | d_{i+1}` and zeros last.
//! Pivots are chosen as the entry of smallest nonzero absolute value, ties
//! broken by row index then column index, so the decomposition is a pure
//! function of the input.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k)
            .map(|i| self.d.get(i, i).clone())
            .take_while(|e| !e.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Full diagonal including trailing zeros (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Position of the smallest nonzero |entry| in the given block.
fn smallest_in_block(
    a: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            let mag = e.abs();
            if best.as_ref().is_none_or(|(b, _, _)| mag < *b) {
                best = Some((mag, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_in_block(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = a.get(t, t).clone();
            let mut remainder_left = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / &pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                remainder_left |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / &pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                remainder_left |= !a.get(t, j).is_zero();
            }

            if remainder_left {
                // Some remainder is strictly smaller than the pivot: promote
                // the smallest entry of the pivot row/column and go again.
                let in_col = smallest_in_block(&a, t..rows, t..t + 1);
                let in_row = smallest_in_block(&a, t..t + 1, t..cols);
                let pick = match (in_col, in_row) {
                    (Some(c), Some(r)) => {
                        if a.get(r.0, r.1).abs() < a.get(c.0, c.1).abs() {
                            r
                        } else {
                            c
                        }
                    }
                    (Some(p), None) | (None, Some(p)) => p,
                    (None, None) => unreachable!("pivot row and column cannot both vanish"),
                };
                a.swap_rows(t, pick.0);
                u.swap_rows(t, pick.0);
                a.swap_cols(t, pick.1);
                v.swap_cols(t, pick.1);
                continue;
            }

            // Pivot row and column are clean; enforce divisibility of the rest.
            let offending = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(a.get(i, j) % &pivot).is_zero())
            });
            match offending {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { u, d: a, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::minor_gcd;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    fn check(mat: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(mat);
        assert_eq!(&(&s.u * mat) * &s.v, s.d, "UMV != D for {mat}");
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        for r in 0..s.d.rows() {
            for c in 0..s.d.cols() {
                if r != c {
                    assert!(s.d.get(r, c).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must come last");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility fails: {diag:?}");
            }
        }
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&m(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, IntMatrix::diagonal([2, 4]));
    }

    #[test]
    fn scalar_diagonal() {
        let s = check(&IntMatrix::scalar(3, 2));
        assert_eq!(s.d, IntMatrix::scalar(3, 2));
    }

    #[test]
    fn non_divisible_diagonal_gets_fixed() {
        let s = check(&IntMatrix::diagonal([4, 6]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn rectangular_and_rank_deficient() {
        let s = check(&m(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(s.invariant_factors(), vec![BigInt::one()]);
        let s = check(&m(&[&[0, 0], &[0, 3], &[0, 0]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(3), BigInt::zero()]);
    }

    #[test]
    fn empty_matrices() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert_eq!(s.u, IntMatrix::identity(r));
            assert_eq!(s.v, IntMatrix::identity(c));
            assert!(s.invariant_factors().is_empty());
        }
    }

    #[test]
    fn deterministic() {
        let a = m(&[&[3, -7, 2], &[5, 1, -4], &[6, 6, 0]]);
        assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }

    #[test]
    fn product_matches_minor_gcd() {
        let a = m(&[&[3, -7, 2], &[5, 1, -4], &[6, 6, 0]]);
        let s = check(&a);
        let factors = s.invariant_factors();
        let mut prod = BigInt::one();
        for (k, f) in factors.iter().enumerate() {
            prod *= f;
            assert_eq!(prod, minor_gcd(&a, k + 1));
        }
    }
}
