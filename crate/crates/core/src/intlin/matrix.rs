use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;

use crate::scalar::{Checked, IntScalar};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(rows: usize, cols: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_i64(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn try_mul(&self, other: &Self) -> Checked<Self> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add_c(&a.mul_c(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Checked<Self> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add_c(b)).collect::<Checked<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, other: &Self) -> Checked<Self> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub_c(b)).collect::<Checked<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_scale(&self, c: &T) -> Checked<Self> {
        let data = self.data.iter().map(|a| a.mul_c(c)).collect::<Checked<_>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul_vec(&self, v: &[T]) -> Checked<Vec<T>> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![T::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o = o.add_c(&a.mul_c(b)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Entrywise reduction into `[0, m)`.
    pub fn reduce_mod(&self, m: &T) -> Self {
        let data = self.data.iter().map(|a| a.mod_floor(m)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &all)
    }

    pub fn hstack(parts: &[&Self]) -> Self {
        let rows = parts.first().map_or(0, |p| p.rows);
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..p.cols {
                    m[(i, off + j)] = p[(i, j)].clone();
                }
            }
            off += p.cols;
        }
        m
    }

    pub fn vstack(parts: &[&Self]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix { rows, cols, data }
    }

    pub fn block_diag(parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    m[(r0 + i, c0 + j)] = p[(i, j)].clone();
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        m
    }

    /// Kronecker product; basis of the result is `(i, j) -> i * other.dim + j`.
    pub fn try_kron(&self, other: &Self) -> Checked<Self> {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m[(i * other.rows + k, j * other.cols + l)] = a.mul_c(&other[(k, l)])?;
                    }
                }
            }
        }
        Ok(m)
    }

    /// True iff every column and row holds exactly one entry, equal to 1.
    pub fn is_permutation(&self) -> bool {
        self.is_signed_permutation() && self.data.iter().all(|v| !v.is_negative())
    }

    /// True iff every column and row holds exactly one entry, equal to +-1.
    pub fn is_signed_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut row_hits = vec![0usize; self.rows];
        for j in 0..self.cols {
            let mut hits = 0;
            for i in 0..self.rows {
                let v = &self[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if !v.abs().is_one() {
                    return false;
                }
                hits += 1;
                row_hits[i] += 1;
            }
            if hits != 1 {
                return false;
            }
        }
        row_hits.iter().all(|&h| h == 1)
    }

    pub fn convert<U: IntScalar>(&self) -> Option<Matrix<U>> {
        let data = self.data.iter().map(|v| U::from_big(&v.to_big())).collect::<Option<Vec<U>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn to_big(&self) -> Matrix<BigInt> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.to_big()).collect() }
    }

    pub fn max_abs_bits(&self) -> u64 {
        self.data.iter().map(|v| v.to_big().bits()).max().unwrap_or(0)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.cols {
                write!(f, " {:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, " ]")
    }
}

impl Matrix<BigInt> {
    /// Panicking product for the arbitrary-precision matrix, which cannot overflow.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("bigint arithmetic does not overflow")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("bigint arithmetic does not overflow")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("bigint arithmetic does not overflow")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.try_scale(c).expect("bigint arithmetic does not overflow")
    }

    pub fn kron(&self, other: &Self) -> Self {
        self.try_kron(other).expect("bigint arithmetic does not overflow")
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.try_mul_vec(v).expect("bigint arithmetic does not overflow")
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_i64_rows(rows)
    }

    /// Column vector.
    pub fn column(v: Vec<BigInt>) -> Self {
        let n = v.len();
        Matrix::from_vec(n, 1, v)
    }
}
