use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, index -> nonzero coefficient.
pub type SparseVec = BTreeMap<usize, BigInt>;

/// Sparse integer matrix stored by rows. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i].insert(i, BigInt::one());
        }
        m
    }

    pub fn from_dense<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v.into());
            }
        }
        m
    }

    pub(crate) fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.iter().all(|(&c, v)| c < cols && !v.is_zero())));
        IntMatrix { rows: data.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i].get(&j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    /// Adds `v` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        add_scaled(&mut self.data[i], j, v);
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.data[j].insert(i, v.clone());
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut out = SparseVec::new();
                for (&k, a) in row {
                    for (&j, b) in &other.data[k] {
                        add_scaled(&mut out, j, &(a * b));
                    }
                }
                out
            })
            .collect();
        IntMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (j, a) in row {
                if let Some(b) = x.get(j) {
                    acc += a * b;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseVec {
        self.data.iter().enumerate().filter_map(|(i, r)| r.get(&j).map(|v| (i, v.clone()))).collect()
    }

    /// Rows `range` as a new matrix.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> IntMatrix {
        IntMatrix { rows: range.len(), cols: self.cols, data: self.data[range].to_vec() }
    }

    /// Columns `range` as a new matrix, reindexed from zero.
    pub fn col_slice(&self, range: std::ops::Range<usize>) -> IntMatrix {
        let data = self
            .data
            .iter()
            .map(|r| r.range(range.clone()).map(|(&j, v)| (j - range.start, v.clone())).collect())
            .collect();
        IntMatrix { rows: self.rows, cols: range.len(), data }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries().map(|(_, _, v)| v.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.nnz())?;
        }
        write!(f, "]")
    }
}

/// `v[j] += c`, dropping the entry if it cancels.
pub fn add_scaled(v: &mut SparseVec, j: usize, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&j) {
        Some(e) => {
            *e += c;
            if e.is_zero() {
                v.remove(&j);
            }
        }
        None => {
            v.insert(j, c.clone());
        }
    }
}

/// `target += factor * source`.
pub fn axpy(target: &mut SparseVec, factor: &BigInt, source: &SparseVec) {
    if factor.is_zero() {
        return;
    }
    for (&j, s) in source {
        add_scaled(target, j, &(factor * s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_dense(&[vec![1, 2], vec![0, 3]]);
        let b = IntMatrix::from_dense(&[vec![1], vec![2]]);
        assert_eq!(a.mul(&b), IntMatrix::from_dense(&[vec![5], vec![6]]));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(1, 0), BigInt::from(2));
    }

    #[test]
    fn no_stored_zeros() {
        let mut a = IntMatrix::zeros(2, 2);
        a.set(0, 0, BigInt::from(3));
        a.add_to(0, 0, &BigInt::from(-3));
        assert_eq!(a.nnz(), 0);
        assert!(a.is_zero());
    }

    #[test]
    fn slices() {
        let a = IntMatrix::from_dense(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(a.col_slice(1..3), IntMatrix::from_dense(&[vec![2, 3], vec![5, 6]]));
        assert_eq!(a.row_slice(1..2), IntMatrix::from_dense(&[vec![4, 5, 6]]));
    }
}
