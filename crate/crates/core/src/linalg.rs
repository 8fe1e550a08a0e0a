//! Dense exact linear algebra over a [`Field`].
//!
//! Elimination always pivots on the first nonzero entry (rows scanned top to
//! bottom, columns left to right), so every result is deterministic.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::gf::{Elem, Field, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, not square")]
    NonSquare(usize, usize),
    #[error("operands live in different fields")]
    MixedFields,
    #[error("entry count {got} does not match shape {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, got: usize },
    #[error(transparent)]
    Gf(#[from] GfError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|&x| self.field.format_element(x)).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::BadShape { rows, cols, got: data.len() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    /// Builds a matrix from rows of equal length; no rows gives a 0×0 matrix.
    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Matrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::BadShape { rows: rows.len(), cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Builds a matrix from integer element encodings, row-major.
    pub fn from_values(field: &Field, rows: usize, cols: usize, values: &[u32]) -> Result<Matrix, LinalgError> {
        let data = values.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>, _>>()?;
        Matrix::new(field, rows, cols, data)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn same_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(LinalgError::MixedFields)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.data[l * other.cols + j]));
                }
            }
        }
        Ok(out)
    }

    /// `[self ; other]`, rows of `other` below.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// `[self : other]`, columns of `other` to the right.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols, data })
    }

    /// Submatrix made of the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: cols.len(), data }
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                self.swap_rows(pr, r);
            }
            let inv = f.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            for x in &mut self.data[r * cols + c..(r + 1) * cols] {
                *x = f.mul(*x, inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor.is_zero() {
                    continue;
                }
                self.add_scaled_row(i, r, f.neg(factor), c);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[dst] += factor * row[src], touching columns from `start` on.
    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: Elem, start: usize) {
        let f = &self.field;
        let cols = self.cols;
        for c in start..cols {
            let s = self.data[src * cols + c];
            if !s.is_zero() {
                let d = &mut self.data[dst * cols + c];
                *d = f.add(*d, f.mul(factor, s));
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the row space: the nonzero rows of the rref.
    pub fn row_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        Matrix { field: self.field.clone(), rows: k, cols: self.cols, data: r.data[..k * self.cols].to_vec() }
    }

    /// Rows form a basis of `{x : A x^T = 0}`.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, Elem::ONE);
            for (pi, &pc) in pivots.iter().enumerate() {
                out.set(bi, pc, f.neg(r.get(pi, fc)));
            }
        }
        out
    }

    /// Determinant by elimination with row-swap sign tracking.
    pub fn det(&self) -> Result<Elem, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare(self.rows, self.cols));
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.data[i * n + c].is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(det);
            }
            let pivot = m.data[c * n + c];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            for i in c + 1..n {
                let factor = m.data[i * n + c];
                if !factor.is_zero() {
                    m.add_scaled_row(i, c, f.neg(f.mul(factor, inv)), c);
                }
            }
        }
        Ok(det)
    }

    /// Basis of rowspace(self) ∩ rowspace(other).
    ///
    /// Solves `x·A = y·B` through the left kernel of the stacked matrix
    /// `[A ; B]`, then reduces the images `x·A` to a basis.
    pub fn row_space_intersection(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "row_space_intersection",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let stacked = self.vstack(other)?;
        let kernel = stacked.transpose().null_space();
        if kernel.rows == 0 {
            return Ok(Matrix::zeros(&self.field, 0, self.cols));
        }
        let coeffs = kernel.select_columns(&(0..self.rows).collect::<Vec<_>>());
        Ok(coeffs.mul(self)?.row_basis())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<u32>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            entries: self.data.iter().map(|x| x.value()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        Matrix::from_values(&j.field, j.rows, j.cols, &j.entries).map_err(serde::de::Error::custom)
    }
}
