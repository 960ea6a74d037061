use alloc::vec::Vec;

use super::{CMatrix, CVector, C64};
use crate::error::{Error, Result};

/// Kronecker product. Entry `(ia * b.rows + ib, ja * b.cols + jb)` of the
/// result is `a(ia, ja) * b(ib, jb)`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (br, bc) = b.shape();
    let rows = a.rows() * br;
    let cols = a.cols() * bc;
    let mut data = Vec::with_capacity(rows * cols);
    for ja in 0..a.cols() {
        for jb in 0..bc {
            let bcol = b.col(jb);
            for &x in a.col(ja) {
                data.extend(bcol.iter().map(|&y| x * y));
            }
        }
    }
    CMatrix::from_col_major(rows, cols, data).expect("kron shape")
}

/// Kronecker product of two vectors, `a ⊗ b`.
pub fn kron_vec(a: &[C64], b: &[C64]) -> CVector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        out.extend(b.iter().map(|&y| x * y));
    }
    CVector::from(out)
}

/// Column-wise Kronecker (Khatri-Rao) product: column `r` of the result is
/// `x[:, r] ⊗ y[:, r]`.
pub fn khatri_rao(x: &CMatrix, y: &CMatrix) -> Result<CMatrix> {
    if x.cols() != y.cols() {
        return Err(Error::DimensionMismatch {
            op: "khatri_rao",
            expected: (y.rows(), x.cols()),
            found: y.shape(),
        });
    }
    let rows = x.rows() * y.rows();
    let mut data = Vec::with_capacity(rows * x.cols());
    for r in 0..x.cols() {
        let ycol = y.col(r);
        for &a in x.col(r) {
            data.extend(ycol.iter().map(|&b| a * b));
        }
    }
    CMatrix::from_col_major(rows, x.cols(), data)
}

/// Stacks the columns of `a`.
pub fn vec(a: &CMatrix) -> CVector {
    CVector::from(a.as_slice())
}

/// Inverse of [`vec`].
pub fn unvec(v: &[C64], rows: usize, cols: usize) -> Result<CMatrix> {
    if v.len() != rows * cols {
        return Err(Error::DimensionMismatch {
            op: "unvec",
            expected: (rows * cols, 1),
            found: (v.len(), 1),
        });
    }
    CMatrix::from_col_major(rows, cols, v.to_vec())
}

/// `diag(b)` as a dense matrix.
pub fn diag(b: &[C64]) -> CMatrix {
    let mut m = CMatrix::zeros(b.len(), b.len());
    for (i, &z) in b.iter().enumerate() {
        m[(i, i)] = z;
    }
    m
}
