//! Dense matrices over arbitrary-precision integers and their normal forms.
//!
//! Row-style Hermite form and Smith form both return the unimodular
//! transformations, so callers can certify `H = U·A` respectively
//! `S = U·A·V` after the fact.  No fixed-width fast path exists on purpose:
//! every entry is a [`BigInt`] and overflow is impossible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vector::{vec_dot, vec_is_zero};

/// Dense row-major matrix over `Z`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from explicit rows; `cols` disambiguates the empty case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
        }
        let nrows = rows.len();
        IntMatrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Test helper: rows of machine integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in left_mul_vec");
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| v[i].clone() * self.at(i, j)).sum())
            .collect()
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows).map(|i| vec_dot(self.row(i), v)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub_mul(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.at(dst, j) - q * self.at(src, j);
            self.set(dst, j, v);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_sub_mul(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.at(i, dst) - q * self.at(i, src);
            self.set(i, dst, v);
        }
    }

    /// Rank over `Q` (equals the number of nonzero rows of the Hermite form).
    pub fn rank(&self) -> usize {
        let (h, _) = self.hnf();
        (0..h.rows).filter(|&i| !vec_is_zero(h.row(i))).count()
    }

    /// Row-style Hermite normal form.
    ///
    /// Returns `(H, U)` with `H = U·A`, `U` unimodular, `H` in row echelon
    /// form with positive pivots, entries above each pivot reduced into
    /// `[0, pivot)`, and zero rows at the bottom.  The form is canonical for
    /// the row span, so two lattices are equal exactly when their Hermite
    /// bases are identical.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Gcd elimination in this column, below pivot_row.
            loop {
                // Pick the row with the smallest nonzero magnitude.
                let mut best: Option<usize> = None;
                for i in pivot_row..self.rows {
                    if !h.at(i, col).is_zero()
                        && best.is_none_or(|b| h.at(i, col).abs() < h.at(b, col).abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(best) = best else { break };
                h.swap_rows(pivot_row, best);
                u.swap_rows(pivot_row, best);
                if h.at(pivot_row, col).is_negative() {
                    h.negate_row(pivot_row);
                    u.negate_row(pivot_row);
                }
                let mut clean = true;
                for i in pivot_row + 1..self.rows {
                    if !h.at(i, col).is_zero() {
                        let q = h.at(i, col).div_floor(h.at(pivot_row, col));
                        h.row_sub_mul(i, pivot_row, &q);
                        u.row_sub_mul(i, pivot_row, &q);
                        if !h.at(i, col).is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if h.at(pivot_row, col).is_zero() {
                continue;
            }
            // Reduce the entries above the pivot into [0, pivot).
            for i in 0..pivot_row {
                let q = h.at(i, col).div_floor(h.at(pivot_row, col));
                h.row_sub_mul(i, pivot_row, &q);
                u.row_sub_mul(i, pivot_row, &q);
            }
            pivot_row += 1;
        }
        (h, u)
    }

    /// Smith normal form: `(S, U, V)` with `S = U·A·V` diagonal,
    /// `d_1 | d_2 | …`, all `d_i >= 0`, and `U`, `V` unimodular.
    pub fn snf(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            // Find the nonzero entry of least magnitude in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if !s.at(i, j).is_zero()
                        && best.is_none_or(|(bi, bj)| s.at(i, j).abs() < s.at(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);
            if s.at(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            // Clear column t and row t; restart if a remainder survives.
            let mut dirty = false;
            for i in t + 1..self.rows {
                if !s.at(i, t).is_zero() {
                    let q = s.at(i, t).div_floor(s.at(t, t));
                    s.row_sub_mul(i, t, &q);
                    u.row_sub_mul(i, t, &q);
                    dirty |= !s.at(i, t).is_zero();
                }
            }
            for j in t + 1..self.cols {
                if !s.at(t, j).is_zero() {
                    let q = s.at(t, j).div_floor(s.at(t, t));
                    s.col_sub_mul(j, t, &q);
                    v.col_sub_mul(j, t, &q);
                    dirty |= !s.at(t, j).is_zero();
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any non-multiple into the pivot's row.
            let mut fixed = None;
            'outer: for i in t + 1..self.rows {
                for j in t + 1..self.cols {
                    if !s.at(i, j).mod_floor(s.at(t, t)).is_zero() {
                        fixed = Some(i);
                        break 'outer;
                    }
                }
            }
            if let Some(i) = fixed {
                let minus_one = -BigInt::one();
                s.row_sub_mul(t, i, &minus_one);
                u.row_sub_mul(t, i, &minus_one);
                continue;
            }
            t += 1;
        }
        (s, u, v)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    /// Inverse of a unimodular matrix: the Hermite form of such a matrix is
    /// the identity, and the recorded transformation is the inverse.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let (h, u) = self.hnf();
        h.is_identity().then_some(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_identity_is_fixed() {
        let a = IntMatrix::identity(2);
        let (h, u) = a.hnf();
        assert!(h.is_identity());
        assert!(u.is_identity());
    }

    #[test]
    fn hnf_two_by_two() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[1, 3]]);
        let (h, u) = a.hnf();
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.det().abs(), BigInt::one());
    }

    #[test]
    fn hnf_zero_matrix() {
        let a = IntMatrix::from_i64(&[&[0, 0]]);
        let (h, _) = a.hnf();
        assert_eq!(h, a);
    }

    #[test]
    fn snf_examples() {
        let a = IntMatrix::identity(3);
        let (s, u, v) = a.snf();
        assert!(s.is_identity() && u.is_identity() && v.is_identity());

        let a = IntMatrix::from_i64(&[&[2, 4], &[1, 3]]);
        let (s, u, v) = a.snf();
        assert_eq!(s, IntMatrix::from_i64(&[&[1, 0], &[0, 2]]));
        assert_eq!(u.mul(&a).mul(&v), s);

        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 2]]);
        let (s, _, _) = a.snf();
        assert_eq!(s, IntMatrix::from_i64(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn det_and_inverse() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[1, 3]]);
        assert_eq!(a.det(), BigInt::from(2));
        let w = IntMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let winv = w.inverse_unimodular().unwrap();
        assert!(w.mul(&winv).is_identity());
        assert!(a.inverse_unimodular().is_none());
    }

    #[test]
    fn hnf_is_idempotent() {
        let a = IntMatrix::from_i64(&[&[6, 4, 2], &[2, 8, 10], &[3, 3, 3]]);
        let (h, u) = a.hnf();
        assert_eq!(u.mul(&a), h);
        let (h2, _) = h.hnf();
        assert_eq!(h, h2);
    }
}
