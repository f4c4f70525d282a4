//! Dense matrices with exact ring entries.

use std::fmt;

use crate::ring::{Ring, RingElem};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<RingElem>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn scalar(ring: &Ring, n: usize, c: &RingElem) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Row-major construction; `cols` is needed to type empty matrices.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElem>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for e in row {
                if e.ring() != ring {
                    return Err(Error::RingMismatch(e.ring().to_string(), ring.to_string()));
                }
                data.push(e);
            }
        }
        Ok(Self { ring: ring.clone(), rows: nrows, cols, data })
    }

    pub fn from_i64(ring: &Ring, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(ring, rows.iter().map(|r| r.iter().map(|&x| ring.from_int(x)).collect()).collect(), cols)
            .expect("rectangular literal")
    }

    pub fn column(ring: &Ring, entries: Vec<RingElem>) -> Self {
        let rows = entries.len();
        Self { ring: ring.clone(), rows, cols: 1, data: entries }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
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

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RingElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<RingElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(&self.ring, self.rows)
    }

    pub fn map(&self, f: impl Fn(&RingElem) -> RingElem) -> Self {
        let data: Vec<RingElem> = self.data.iter().map(f).collect();
        let ring = data.first().map_or_else(|| self.ring.clone(), |e| e.ring().clone());
        Self { ring, rows: self.rows, cols: self.cols, data }
    }

    /// Re-types an empty or mapped matrix into `ring`.
    pub fn map_into(&self, ring: &Ring, f: impl Fn(&RingElem) -> RingElem) -> Self {
        Self { ring: ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!("cannot add {:?} and {:?}", self.shape(), other.shape())));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.checked_add(b)).collect::<Result<_>>()?;
        Ok(Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| -e).collect() }
    }

    pub fn scale(&self, c: &RingElem) -> Self {
        Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| e * c).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(&self.ring, rows.len(), cols.len());
        for (oi, i) in rows.clone().enumerate() {
            for (oj, j) in cols.clone().enumerate() {
                out.set(oi, oj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let mut out = Self::zeros(&self.ring, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        Ok(self.transpose().hstack(&other.transpose())?.transpose())
    }

    /// 2×2 block matrix `[[a, b], [c, d]]`.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        a.hstack(b)?.vstack(&c.hstack(d)?)
    }

    pub fn block_diag(a: &Self, b: &Self) -> Result<Self> {
        let r = &a.ring;
        Self::blocks(a, &Self::zeros(r, a.rows, b.cols), &Self::zeros(r, b.rows, a.cols), b)
    }

    /// Kronecker product; row index `i·b.rows + k`, column index `j·b.cols + l`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(&self.ring, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
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

    /// row[dst] += c · row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &RingElem) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if !s.is_zero() {
                let v = self.get(dst, j) + &(c * s);
                self.set(dst, j, v);
            }
        }
    }

    /// col[dst] += c · col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &RingElem) {
        for i in 0..self.rows {
            let s = self.get(i, src);
            if !s.is_zero() {
                let v = self.get(i, dst) + &(s * c);
                self.set(i, dst, v);
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &RingElem) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// Entrywise lift into the covering Euclidean ring.
    pub fn lift(&self) -> Self {
        let cover = self.ring.cover();
        self.map_into(&cover, |e| self.ring.lift(e))
    }

    /// Entrywise reduction of a covering-ring matrix into `ring`.
    pub fn reduce_into(&self, ring: &Ring) -> Self {
        self.map_into(ring, |e| ring.reduce(e))
    }

    /// Row-major nested-list literal: `[[1, 2], [3, 4]]`.
    pub fn to_literal(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| format!("[{}]", self.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}
