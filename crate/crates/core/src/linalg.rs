//! Exact linear algebra over the rationals: row reduction, kernels, solving,
//! and canonical subspace bases.
//!
//! Subspaces are always handled through their reduced row echelon form, so
//! subspace equality is literal equality of canonical bases.

use crate::scalar::Scalar;
use num_traits::{One, Zero};
use std::fmt;

/// Dense matrix of exact rationals, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::scalar::format_scalar(self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * other.at(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * &v[k];
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation (rows of `other` appended below).
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.row_vecs();
        rows.extend(other.row_vecs());
        Mat { rows: self.rows + other.rows, cols: self.cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// In-place reduction to reduced row echelon form.
    /// Returns the pivot columns in order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).recip();
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let factor = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j) - &factor * self.at(r, j);
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Canonical basis of the row space: nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Mat::from_fn(rank, self.cols, |i, j| m.at(i, j).clone())
    }

    /// Canonical basis (as rows) of the kernel `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -m.at(r, f).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Mat::zero(0, self.cols)
        } else {
            Mat::from_rows(rows)
        }
    }

    /// A particular solution of `self * x = b`, free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = self.hstack(&Mat::from_rows(b.iter().map(|x| vec![x.clone()]).collect()));
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Solves `self * X = B` column by column.
    pub fn solve_mat(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows());
        let mut cols = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            let col: Vec<Scalar> = (0..b.rows()).map(|i| b.at(i, j).clone()).collect();
            cols.push(self.solve(&col)?);
        }
        let res = Mat::from_fn(self.cols, b.cols(), |i, j| cols[j][i].clone());
        Some(res)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Mat::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug.at(i, n + j).clone()))
    }
}

/// Subspace of Q^n presented by a canonical (RREF) row basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    /// Span of the rows of `m`, canonicalized.
    pub fn from_rows(m: &Mat) -> Self {
        Subspace { basis: m.row_space_basis() }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Mat::zero(0, ambient) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut m = self.basis.clone();
        m = m.vstack(&Mat::from_rows(vec![v.to_vec()]));
        m.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.basis.rows()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Intersection, computed from the kernel of the stacked transposes.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let a = &self.basis;
        let b = &other.basis;
        if a.rows() == 0 || b.rows() == 0 {
            return Subspace::zero(self.ambient());
        }
        // x = a^T u = b^T v; kernel of [a^T | -b^T] gives (u, v).
        let stacked = a.transpose().hstack(&b.transpose().scale(&-Scalar::one()));
        let ker = stacked.kernel_basis();
        let mut rows = Vec::new();
        for i in 0..ker.rows() {
            let u = &ker.row(i)[..a.rows()];
            let x = a.transpose().mul_vec(u);
            rows.push(x);
        }
        if rows.is_empty() {
            Subspace::zero(self.ambient())
        } else {
            Subspace::from_rows(&Mat::from_rows(rows))
        }
    }

    /// A vector of `self` outside `other`, if one exists.
    pub fn witness_not_in(&self, other: &Subspace) -> Option<Vec<Scalar>> {
        (0..self.basis.rows())
            .find(|&i| !other.contains(self.basis.row(i)))
            .map(|i| self.basis.row(i).to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rref_rank_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.rows(), 1);
        for i in 0..k.rows() {
            assert!(crate::scalar::is_zero_vec(&a.mul_vec(k.row(i))));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[int(3), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        assert_eq!(*inv.at(0, 0), int(1));
        assert_eq!(*inv.at(0, 1), int(-1));

        let sing = m(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[int(1), int(0)]).is_none());
    }

    #[test]
    fn subspace_operations() {
        let u = Subspace::from_rows(&m(&[&[1, 0, 0], &[0, 1, 0]]));
        let v = Subspace::from_rows(&m(&[&[0, 1, 0], &[0, 0, 1]]));
        let w = u.intersect(&v);
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&[int(0), int(1), int(0)]));
        assert!(!w.contains(&[int(1), int(0), int(0)]));
        assert!(u.contains_subspace(&w));

        let half = Subspace::from_rows(&m(&[&[2, 2, 0]]));
        assert!(u.contains_subspace(&half));
        assert_eq!(half.basis().at(0, 1), &frac(1, 1));
    }
}
