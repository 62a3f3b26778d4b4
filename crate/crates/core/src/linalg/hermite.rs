use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `U·M = H`. `H` is in row echelon
/// form, every pivot is positive, entries above a pivot lie in `[0, pivot)`
/// and zero rows sit at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_row = 0;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains.
        loop {
            let mut best: Option<(BigInt, usize)> = None;
            for r in pivot_row..rows {
                let e = h.get(r, col);
                if e.is_zero() {
                    continue;
                }
                let mag = e.abs();
                if best.as_ref().is_none_or(|(b, _)| mag < *b) {
                    best = Some((mag, r));
                }
            }
            let Some((_, r)) = best else { break };
            h.swap_rows(pivot_row, r);
            u.swap_rows(pivot_row, r);

            let pivot = h.get(pivot_row, col).clone();
            let mut done = true;
            for r in pivot_row + 1..rows {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let q = -h.get(r, col).div_floor(&pivot);
                h.add_row_multiple(r, pivot_row, &q);
                u.add_row_multiple(r, pivot_row, &q);
                done &= h.get(r, col).is_zero();
            }
            if done {
                break;
            }
        }

        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h.get(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = -h.get(r, col).div_floor(&pivot);
            h.add_row_multiple(r, pivot_row, &q);
            u.add_row_multiple(r, pivot_row, &q);
        }
        pivot_row += 1;
    }

    (h, u)
}
