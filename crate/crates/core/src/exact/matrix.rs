use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ExactError;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    #[serde(serialize_with = "serialize_entries")]
    data: Vec<BigInt>,
}

fn serialize_entries<S: serde::Serializer>(data: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(data.iter().map(|x| x.to_string()))
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Columns `start..` as a new matrix.
    pub fn columns_from(&self, start: usize) -> Self {
        Self::from_fn(self.rows, self.cols - start, |i, j| self[(i, j + start)].clone())
    }

    /// Stack blocks vertically; all blocks must share a column count.
    pub fn vstack(blocks: &[IntMatrix], cols: usize) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
        }
        IntMatrix { rows, cols, data }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Solves `m · x = b` over the integers for a matrix that is triangular under
/// `order`: the equation for unknown `order[k]` may only involve unknowns
/// `order[..=k]`. Unknowns are determined in that order.
///
/// The first pivot whose quotient is non-integral is reported together with
/// the (non-negative) remainder.
pub fn solve_triangular_integer(
    m: &IntMatrix,
    b: &[BigInt],
    order: &[usize],
) -> Result<Vec<BigInt>, ExactError> {
    let n = m.rows();
    if m.cols() != n || b.len() != n || order.len() != n {
        return Err(ExactError::Dimension(format!(
            "{}x{} system with {} right-hand entries and {} ordered indices",
            n,
            m.cols(),
            b.len(),
            order.len()
        )));
    }
    let mut solved = vec![false; n];
    let mut x = vec![BigInt::zero(); n];
    for &i in order {
        let mut rest = b[i].clone();
        for j in 0..n {
            if j == i || m[(i, j)].is_zero() {
                continue;
            }
            if !solved[j] {
                return Err(ExactError::NotTriangular { row: i, col: j });
            }
            rest -= &m[(i, j)] * &x[j];
        }
        let pivot = &m[(i, i)];
        if pivot.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (q, r) = rest.div_mod_floor(&pivot.abs());
        if !r.is_zero() {
            return Err(ExactError::NotIntegral { pivot: i, remainder: r });
        }
        x[i] = if pivot.is_negative() { -q } else { q };
        solved[i] = true;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn lower_triangular_two_by_two() {
        // brute force over a small box: the unique solution of [[6,0],[3,1]] x = (6,6)
        let mut hits = vec![];
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                if 6 * a == 6 && 3 * a + b == 6 {
                    hits.push((a, b));
                }
            }
        }
        assert_eq!(hits, vec![(1, 3)]);
        let m = IntMatrix::from_rows(&[vec![6, 0], vec![3, 1]]);
        assert_eq!(solve_triangular_integer(&m, &v(&[6, 6]), &[0, 1]).unwrap(), v(&[1, 3]));
        // wrong order is rejected, not silently mis-solved
        assert!(matches!(
            solve_triangular_integer(&m, &v(&[6, 6]), &[1, 0]),
            Err(ExactError::NotTriangular { row: 1, col: 0 })
        ));
    }

    #[test]
    fn identity_and_parity() {
        let id = IntMatrix::identity(3);
        assert_eq!(solve_triangular_integer(&id, &v(&[4, -2, 7]), &[0, 1, 2]).unwrap(), v(&[4, -2, 7]));
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(
            solve_triangular_integer(&two, &v(&[1]), &[0]),
            Err(ExactError::NotIntegral { pivot: 0, remainder: BigInt::from(1) })
        );
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-8));
        let m = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
    }

    proptest::proptest! {
        #[test]
        fn solution_satisfies_system(
            diag in proptest::collection::vec(proptest::prop_oneof![-3i64..=-1, 1i64..=3], 4),
            low in proptest::collection::vec(-5i64..=5, 16),
            b in proptest::collection::vec(-20i64..=20, 4),
        ) {
            let m = IntMatrix::from_fn(4, 4, |i, j| {
                if i == j { BigInt::from(diag[i]) } else if j < i { BigInt::from(low[i * 4 + j]) } else { BigInt::zero() }
            });
            let b = v(&b);
            if let Ok(x) = solve_triangular_integer(&m, &b, &[0, 1, 2, 3]) {
                proptest::prop_assert_eq!(m.mul_vec(&x), b);
            }
        }
    }
}
