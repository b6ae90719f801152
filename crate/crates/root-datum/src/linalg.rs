//! Small exact linear algebra over the rationals.

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Solves `Σ_j x_j · cols[j] = target` exactly, assuming the columns are
/// linearly independent. Returns `None` when `target` is outside their span.
pub fn solve_in_span(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational64>> {
    let n = cols.len();
    let m = target.len();
    // Augmented m × (n+1) matrix.
    let mut a: Vec<Vec<Rational64>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational64> = cols.iter().map(|c| Rational64::from_integer(c[i])).collect();
            row.push(Rational64::from_integer(target[i]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = Rational64::one() / a[row][col];
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..=n {
                    let v = a[row][c];
                    a[r][c] -= f * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational64::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][n];
    }
    Some(x)
}
