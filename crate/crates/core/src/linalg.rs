//! Exact Gaussian elimination over the rationals.
//!
//! Small dense routines used by the decomposition oracle and the
//! chain-basis rank checks. No pivot-size heuristics: exact arithmetic
//! makes any nonzero pivot valid.

use num_traits::Zero;

use crate::rational::Rational;

/// Row-reduce `m` in place, returning the rank.
pub fn row_reduce(m: &mut [Vec<Rational>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row][col..].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (dst, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *dst = &*dst - &factor * pv;
                }
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

/// Rank of a dense rational matrix.
pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work)
}

/// Solve `sum_k x_k columns[k] = target` exactly.
///
/// The columns need not be independent and the system may be
/// overdetermined; returns `None` when `target` is outside the span. When
/// the columns are independent the solution is unique.
pub fn solve_in_span(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = columns.len();
    let rows = target.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));
    // Augmented matrix [columns | target].
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    row_reduce(&mut m);
    let mut solution = vec![Rational::zero(); n];
    for row in &m {
        let lead = row[..n].iter().position(|v| !v.is_zero());
        match lead {
            Some(col) => solution[col] = row[n].clone(),
            None => {
                if !row[n].is_zero() {
                    return None; // inconsistent: target outside the span
                }
            }
        }
    }
    // With dependent columns the echelon read-off can be wrong; verify.
    for r in 0..rows {
        let mut acc = Rational::zero();
        for (k, col) in columns.iter().enumerate() {
            if !solution[k].is_zero() {
                acc += &solution[k] * &col[r];
            }
        }
        if acc != target[r] {
            return None;
        }
    }
    Some(solution)
}
