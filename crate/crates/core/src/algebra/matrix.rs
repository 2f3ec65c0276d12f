//! Dense matrices with [`SymScalar`] entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use super::sym::SymScalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SymScalar>,
}

impl SymMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![SymScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![SymScalar::one(); n])
    }

    pub fn diagonal(values: &[SymScalar]) -> Self {
        let n = values.len();
        let mut out = Self::zeros(n, n);
        for (k, v) in values.iter().enumerate() {
            out[(k, k)] = v.clone();
        }
        out
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> SymScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Single nonzero entry `value` at zero-based `(row, col)`.
    pub fn unit(rows: usize, cols: usize, row: usize, col: usize, value: SymScalar) -> Self {
        let mut out = Self::zeros(rows, cols);
        out[(row, col)] = value;
        out
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[SymScalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SymScalar::is_zero)
    }

    pub fn try_mul(&self, rhs: &SymMatrix) -> Result<SymMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "matrix product",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &SymMatrix) -> Result<SymMatrix> {
        self.zip_with(rhs, "matrix sum", |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &SymMatrix) -> Result<SymMatrix> {
        self.zip_with(rhs, "matrix difference", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &SymMatrix,
        op: &'static str,
        f: impl Fn(&SymScalar, &SymScalar) -> SymScalar,
    ) -> Result<SymMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: rhs.shape() });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn map(&self, f: impl Fn(&SymScalar) -> SymScalar) -> SymMatrix {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &SymScalar) -> SymMatrix {
        self.map(|e| s * e)
    }

    pub fn transpose(&self) -> SymMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj_transpose(&self) -> SymMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// `self = s * 1` for some scalar `s`.
    pub fn as_scalar_identity(&self) -> Option<SymScalar> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let s = self[(0, 0)].clone();
        (*self == Self::identity(self.rows).scale(&s)).then_some(s)
    }

    /// Finds `r` in Q with `self = r * other`.
    pub fn rational_ratio(&self, other: &SymMatrix) -> Option<Rational> {
        if self.shape() != other.shape() {
            return None;
        }
        let r = match other.data.iter().position(|e| !e.is_zero()) {
            None => return self.is_zero().then(|| super::rational::int(0)),
            Some(k) => self.data[k].rational_ratio(&other.data[k])?,
        };
        (other.map(|e| e.scale(&r)) == *self).then_some(r)
    }

    pub fn block(&self, row0: usize, rows: usize, col0: usize, cols: usize) -> SymMatrix {
        assert!(row0 + rows <= self.rows && col0 + cols <= self.cols, "block out of range");
        Self::from_fn(rows, cols, |r, c| self[(row0 + r, col0 + c)].clone())
    }

    pub fn set_block(&mut self, row0: usize, col0: usize, src: &SymMatrix) {
        assert!(row0 + src.rows <= self.rows && col0 + src.cols <= self.cols, "block out of range");
        for r in 0..src.rows {
            for c in 0..src.cols {
                self[(row0 + r, col0 + c)] = src[(r, c)].clone();
            }
        }
    }

    /// Drops the listed rows and columns (zero-based).
    pub fn remove_rows_cols(&self, rows: &[usize], cols: &[usize]) -> SymMatrix {
        let keep_r: Vec<usize> = (0..self.rows).filter(|r| !rows.contains(r)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|c| !cols.contains(c)).collect();
        Self::from_fn(keep_r.len(), keep_c.len(), |r, c| self[(keep_r[r], keep_c[c])].clone())
    }

    /// Commutator `[self, rhs]`.
    pub fn commutator(&self, rhs: &SymMatrix) -> SymMatrix {
        &(self * rhs) - &(rhs * self)
    }

    pub fn anticommutator(&self, rhs: &SymMatrix) -> SymMatrix {
        &(self * rhs) + &(rhs * self)
    }
}

impl std::ops::Index<(usize, usize)> for SymMatrix {
    type Output = SymScalar;
    fn index(&self, (r, c): (usize, usize)) -> &SymScalar {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SymMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut SymScalar {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        &mut self.data[r * self.cols + c]
    }
}

// Operator forms panic on a shape mismatch; use the `try_*` methods where
// shapes come from outside.
impl Mul<&SymMatrix> for &SymMatrix {
    type Output = SymMatrix;
    fn mul(self, rhs: &SymMatrix) -> SymMatrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add<&SymMatrix> for &SymMatrix {
    type Output = SymMatrix;
    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&SymMatrix> for &SymMatrix {
    type Output = SymMatrix;
    fn sub(self, rhs: &SymMatrix) -> SymMatrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &SymMatrix {
    type Output = SymMatrix;
    fn neg(self) -> SymMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                let cell = &cells[r * self.cols + c];
                let pad = width - cell.chars().count();
                write!(f, " {}{cell}", " ".repeat(pad))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
