//! Exact rational linear solving, used where integer back-substitution is
//! not enough (parallelepiped coordinates, span membership).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::IntMatrix;

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Solve `A·x = b` over `Q` by Gaussian elimination.
///
/// Returns `None` when the system is inconsistent.  Columns without a pivot
/// get coordinate zero, which is only meaningful when `A` has full column
/// rank; all callers in this crate are in that situation.
pub fn solve_columns(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    assert_eq!(a.rows(), b.len(), "dimension mismatch in solve_columns");
    let m = a.rows();
    let n = a.cols();
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n).map(|j| rat(a.at(i, j))).collect();
            row.push(rat(&b[i]));
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..=n {
                    let delta = &f * &aug[r][j];
                    aug[i][j] -= delta;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == m {
            break;
        }
    }
    // Inconsistent when a cleared row still has a nonzero right-hand side.
    for row in aug.iter().skip(r) {
        if row[..n].iter().all(Zero::is_zero) && !row[n].is_zero() {
            return None;
        }
    }
    Some(
        (0..n)
            .map(|c| match pivot_of_col[c] {
                Some(i) => aug[i][n].clone(),
                None => BigRational::zero(),
            })
            .collect(),
    )
}

/// Solve `x·A = b` over `Q` (row-vector convention).
pub fn solve_rows(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    solve_columns(&a.transpose(), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::vector::vec_from_i64;

    #[test]
    fn solves_square_system() {
        let a = IntMatrix::from_i64(&[&[2, 1], &[1, 3]]);
        let x = solve_columns(&a, &vec_from_i64(&[5, 10])).unwrap();
        assert_eq!(x[0], BigRational::new(BigInt::from(1), BigInt::from(1)));
        assert_eq!(x[1], BigRational::new(BigInt::from(3), BigInt::from(1)));
    }

    #[test]
    fn detects_inconsistency() {
        let a = IntMatrix::from_i64(&[&[1, 0], &[1, 0], &[0, 1]]);
        assert!(solve_columns(&a, &vec_from_i64(&[1, 2, 0])).is_none());
        assert!(solve_columns(&a, &vec_from_i64(&[2, 2, 7])).is_some());
    }

    #[test]
    fn row_convention() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[0, 2]]);
        let x = solve_rows(&a, &vec_from_i64(&[1, 3])).unwrap();
        // x·A = (1,3) means x = (1, 1).
        assert_eq!(x[0], BigRational::from_integer(BigInt::from(1)));
        assert_eq!(x[1], BigRational::from_integer(BigInt::from(1)));
    }
}
