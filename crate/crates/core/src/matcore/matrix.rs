use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Deref, DerefMut, Index, IndexMut};

use num_traits::Zero;

use super::C64;
use crate::error::{Error, Result};

/// Dense complex matrix stored column-major: entry `(i, j)` lives at
/// `j * rows + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for j in 0..cols {
            for i in 0..rows {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Wraps column-major data.
    pub fn from_col_major(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_col_major",
                expected: (rows * cols, 1),
                found: (data.len(), 1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from row-major nested slices; handy for literals.
    pub fn from_rows(rows: &[&[C64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| C64::new(rows[i][j], 0.0))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [C64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    #[inline]
    pub fn col(&self, j: usize) -> &[C64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    #[inline]
    pub fn col_mut(&mut self, j: usize) -> &mut [C64] {
        &mut self.data[j * self.rows..(j + 1) * self.rows]
    }

    /// Copies columns `[start, end)` into a new matrix.
    pub fn columns(&self, start: usize, end: usize) -> CMatrix {
        assert!(
            start <= end && end <= self.cols,
            "column range out of bounds"
        );
        Self {
            rows: self.rows,
            cols: end - start,
            data: self.data[start * self.rows..end * self.rows].to_vec(),
        }
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> CMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> CMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> CMatrix {
        self.scale(C64::new(s, 0.0))
    }

    pub fn matmul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                expected: (self.cols, rhs.cols),
                found: rhs.shape(),
            });
        }
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let dst = j * self.rows;
            for (k, &b) in rhs.col(j).iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let a = self.col(k);
                for (o, &x) in out.data[dst..dst + self.rows].iter_mut().zip(a) {
                    *o += x * b;
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[C64]) -> Result<CVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                expected: (self.cols, 1),
                found: (v.len(), 1),
            });
        }
        let mut out = vec![C64::zero(); self.rows];
        for (k, &b) in v.iter().enumerate() {
            for (o, &x) in out.iter_mut().zip(self.col(k)) {
                *o += x * b;
            }
        }
        Ok(CVector::from(out))
    }

    /// `self^H * v` without forming the adjoint.
    pub fn adjoint_mul_vec(&self, v: &[C64]) -> Result<CVector> {
        if self.rows != v.len() {
            return Err(Error::DimensionMismatch {
                op: "adjoint_mul_vec",
                expected: (self.rows, 1),
                found: (v.len(), 1),
            });
        }
        let out = (0..self.cols)
            .map(|j| dot_conj(self.col(j), v))
            .collect::<Vec<_>>();
        Ok(CVector::from(out))
    }

    /// `self^T * v` without forming the transpose.
    pub fn transpose_mul_vec(&self, v: &[C64]) -> Result<CVector> {
        if self.rows != v.len() {
            return Err(Error::DimensionMismatch {
                op: "transpose_mul_vec",
                expected: (self.rows, 1),
                found: (v.len(), 1),
            });
        }
        let out = (0..self.cols)
            .map(|j| {
                self.col(j)
                    .iter()
                    .zip(v)
                    .fold(C64::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect::<Vec<_>>();
        Ok(CVector::from(out))
    }

    pub fn sub(&self, rhs: &CMatrix) -> Result<CMatrix> {
        self.check_same_shape("sub", rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, rhs: &CMatrix) -> Result<CMatrix> {
        self.check_same_shape("add", rhs)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Squared Frobenius norm.
    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.data)
    }

    pub fn frobenius_norm(&self) -> f64 {
        num_traits::Float::sqrt(self.norm_sqr())
    }

    /// `‖self - rhs‖_F / ‖rhs‖_F`, or the absolute error when `rhs` is zero.
    pub fn relative_error(&self, reference: &CMatrix) -> f64 {
        assert_eq!(self.shape(), reference.shape(), "relative_error shape");
        relative_error(&self.data, &reference.data)
    }

    fn check_same_shape(&self, op: &'static str, rhs: &CMatrix) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                expected: self.shape(),
                found: rhs.shape(),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[j * self.rows + i]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[j * self.rows + i]
    }
}

/// Dense complex column vector. Dereferences to a slice and converts to and
/// from a single-column [`CMatrix`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CVector(Vec<C64>);

impl CVector {
    pub fn zeros(len: usize) -> Self {
        Self(vec![C64::zero(); len])
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.0)
    }

    pub fn norm(&self) -> f64 {
        num_traits::Float::sqrt(self.norm_sqr())
    }

    pub fn conj(&self) -> CVector {
        Self(self.0.iter().map(|z| z.conj()).collect())
    }

    pub fn scale(&self, s: C64) -> CVector {
        Self(self.0.iter().map(|z| z * s).collect())
    }

    pub fn relative_error(&self, reference: &[C64]) -> f64 {
        assert_eq!(self.len(), reference.len(), "relative_error length");
        relative_error(&self.0, reference)
    }

    /// Views the vector as a `len x 1` matrix.
    pub fn into_column(self) -> CMatrix {
        let n = self.0.len();
        CMatrix {
            rows: n,
            cols: 1,
            data: self.0,
        }
    }
}

impl From<Vec<C64>> for CVector {
    fn from(v: Vec<C64>) -> Self {
        Self(v)
    }
}

impl From<&[C64]> for CVector {
    fn from(v: &[C64]) -> Self {
        Self(v.to_vec())
    }
}

impl FromIterator<C64> for CVector {
    fn from_iter<I: IntoIterator<Item = C64>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Deref for CVector {
    type Target = [C64];

    fn deref(&self) -> &[C64] {
        &self.0
    }
}

impl DerefMut for CVector {
    fn deref_mut(&mut self) -> &mut [C64] {
        &mut self.0
    }
}

/// `a^H b`.
#[inline]
pub fn dot_conj(a: &[C64], b: &[C64]) -> C64 {
    a.iter()
        .zip(b)
        .fold(C64::zero(), |acc, (x, y)| acc + x.conj() * y)
}

#[inline]
pub fn norm_sqr(a: &[C64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum()
}

pub(crate) fn relative_error(a: &[C64], reference: &[C64]) -> f64 {
    let diff: f64 = a
        .iter()
        .zip(reference)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum();
    let refn = norm_sqr(reference);
    if refn > 0.0 {
        num_traits::Float::sqrt(diff / refn)
    } else {
        num_traits::Float::sqrt(diff)
    }
}
