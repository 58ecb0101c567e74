//! Exact Gaussian elimination over Q.
//!
//! This solver backs division and subfield re-expression inside `cyclo`. It is
//! intentionally separate from the matrix layer whose *entries* are cyclotomic
//! numbers: that layer sits above this one and must not be called from here.

use num::{BigRational, Zero};

/// Solves `rows · x = rhs` exactly. Returns `None` when the system is
/// inconsistent; free variables (if any) are set to zero.
pub(crate) fn solve(
    mut rows: Vec<Vec<BigRational>>,
    mut rhs: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let m = rows.len();
    assert_eq!(m, rhs.len(), "row/rhs length mismatch");
    let n = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == n), "ragged matrix");

    let mut pivot_in_col = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        rhs.swap(row, p);
        let inv = rows[row][col].recip();
        for c in col..n {
            let scaled = &rows[row][c] * &inv;
            rows[row][c] = scaled;
        }
        let scaled = &rhs[row] * &inv;
        rhs[row] = scaled;
        for r in 0..m {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..n {
                    let delta = &factor * &rows[row][c];
                    rows[r][c] -= delta;
                }
                let delta = &factor * &rhs[row];
                rhs[r] -= delta;
            }
        }
        pivot_in_col[col] = Some(row);
        row += 1;
        if row == m {
            break;
        }
    }
    // Any zero row with a nonzero right-hand side kills solvability.
    if rhs[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (col, pivot) in pivot_in_col.iter().enumerate() {
        if let Some(r) = pivot {
            x[col] = rhs[*r].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).expect("fits")
    }

    fn qr(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn solves_square_system() {
        // 2x + y = 5, x − y = 1  ⇒  x = 2, y = 1.
        let rows = vec![vec![q(2), q(1)], vec![q(1), q(-1)]];
        let x = solve(rows, vec![q(5), q(1)]).expect("consistent");
        assert_eq!(x, vec![q(2), q(1)]);
    }

    #[test]
    fn exact_fractions_survive() {
        // 3x = 1 ⇒ x = 1/3, no rounding anywhere.
        let x = solve(vec![vec![q(3)]], vec![q(1)]).expect("consistent");
        assert_eq!(x, vec![qr(1, 3)]);
    }

    #[test]
    fn detects_inconsistency() {
        // x + y = 1 and x + y = 2 cannot both hold.
        let rows = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(solve(rows, vec![q(1), q(2)]).is_none());
    }

    #[test]
    fn overdetermined_but_consistent() {
        let rows = vec![vec![q(1)], vec![q(2)], vec![q(3)]];
        let x = solve(rows, vec![q(4), q(8), q(12)]).expect("consistent");
        assert_eq!(x, vec![q(4)]);
    }

    #[test]
    fn underdetermined_sets_free_variables_to_zero() {
        // x + y = 3 with y free ⇒ x = 3, y = 0.
        let rows = vec![vec![q(1), q(1)]];
        let x = solve(rows, vec![q(3)]).expect("consistent");
        assert_eq!(x, vec![q(3), q(0)]);
    }
}
