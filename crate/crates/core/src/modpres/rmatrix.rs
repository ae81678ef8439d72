use std::fmt;

use super::quotient::QRing;
use crate::error::{Error, Result};
use crate::ffpoly::{check_same, Polynomial};
use crate::matrix::PolyMatrix;

/// Matrix over a quotient ring; every entry is kept in normal form.
#[derive(Clone)]
pub struct RMatrix {
    ring: QRing,
    inner: PolyMatrix,
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .inner
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        f.debug_struct("RMatrix")
            .field("rows", &self.inner.rows())
            .field("cols", &self.inner.cols())
            .field("entries", &rows)
            .finish()
    }
}

impl PartialEq for RMatrix {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.inner == other.inner
    }
}

impl RMatrix {
    pub fn new(ring: &QRing, m: PolyMatrix) -> Result<Self> {
        check_same(ring.ambient(), m.ring())?;
        let inner = m.map(|e| ring.reduce(e));
        Ok(Self {
            ring: ring.clone(),
            inner,
        })
    }

    pub fn zero(ring: &QRing, rows: usize, cols: usize) -> Self {
        Self {
            ring: ring.clone(),
            inner: PolyMatrix::zero(ring.ambient(), rows, cols),
        }
    }

    pub fn from_rows(ring: &QRing, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        Self::new(ring, PolyMatrix::from_rows(ring.ambient(), rows)?)
    }

    pub fn from_cols(ring: &QRing, nrows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        Self::new(ring, PolyMatrix::from_cols(ring.ambient(), nrows, cols)?)
    }

    /// Row-major entries in the polynomial text syntax.
    pub fn parse(ring: &QRing, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|t| ring.parse_elem(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(Error::InvalidArgument("matrix without rows; use RMatrix::zero".into()));
        }
        Self::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &QRing {
        &self.ring
    }

    pub fn inner(&self) -> &PolyMatrix {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.inner.rows()
    }

    pub fn cols(&self) -> usize {
        self.inner.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        self.inner.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        let v = self.ring.reduce(&v);
        self.inner.set(i, j, v);
    }

    pub fn col(&self, j: usize) -> Vec<Polynomial> {
        self.inner.col(j)
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.inner.row(i)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn transpose(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            inner: self.inner.transpose(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self {
            ring: self.ring.clone(),
            inner: self.inner.submatrix(rows, cols),
        }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Self {
            ring: self.ring.clone(),
            inner: self.inner.select_cols(cols),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            ring: self.ring.clone(),
            inner: self.inner.direct_sum(&other.inner)?,
        })
    }

    pub fn nnz(&self) -> usize {
        self.inner.entries().iter().filter(|e| !e.is_zero()).count()
    }

    /// `col[j] += c * col[k]`.
    pub fn add_col_multiple(&mut self, j: usize, k: usize, c: &Polynomial) {
        for i in 0..self.rows() {
            let a = self.get(i, k);
            if a.is_zero() {
                continue;
            }
            let v = self.ring.reduce(&(self.get(i, j) + &(a * c)));
            self.inner.set(i, j, v);
        }
    }

    /// `row[i] += c * row[k]`.
    pub fn add_row_multiple(&mut self, i: usize, k: usize, c: &Polynomial) {
        for j in 0..self.cols() {
            let a = self.get(k, j);
            if a.is_zero() {
                continue;
            }
            let v = self.ring.reduce(&(self.get(i, j) + &(a * c)));
            self.inner.set(i, j, v);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: u32) {
        for i in 0..self.rows() {
            let v = self.get(i, j).scale(c);
            self.inner.set(i, j, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: u32) {
        for j in 0..self.cols() {
            let v = self.get(i, j).scale(c);
            self.inner.set(i, j, v);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        let perm: Vec<usize> = (0..self.cols())
            .map(|j| {
                if j == a {
                    b
                } else if j == b {
                    a
                } else {
                    j
                }
            })
            .collect();
        *self = self.select_cols(&perm);
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        let perm: Vec<usize> = (0..self.rows())
            .map(|i| {
                if i == a {
                    b
                } else if i == b {
                    a
                } else {
                    i
                }
            })
            .collect();
        let cols: Vec<usize> = (0..self.cols()).collect();
        *self = self.submatrix(&perm, &cols);
    }

    /// Appends a zero column.
    pub fn pad_zero_col(&self) -> Self {
        let mut cols: Vec<Vec<Polynomial>> = (0..self.cols()).map(|j| self.col(j)).collect();
        cols.push(vec![Polynomial::zero(self.ring.ambient()); self.rows()]);
        RMatrix::from_cols(&self.ring, self.rows(), cols).expect("same ring")
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.inner
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }
}
