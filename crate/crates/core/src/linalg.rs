//! Dense exact matrices over the rationals.
//!
//! Row reduction always takes the leftmost nonzero column as the next pivot
//! and rescales pivots to one, so echelon forms, kernel bases and particular
//! solutions are reproducible bit for bit.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, zero_vec, Rational, Vector};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns (ascending).
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from rows. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| crate::rational::int(x)).collect()).collect())
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        Mat::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Mat::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| &self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(_, b)| !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }

    pub fn commutes_with(&self, other: &Mat) -> bool {
        self * other == other * self
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows as u32).is_zero()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Vertical concatenation of blocks with a common column count.
    pub fn vstack(blocks: &[Mat], cols: usize) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Mat { rows, cols, data }
    }

    /// Flattens row-major into a single vector.
    pub fn to_vector(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vector) -> Mat {
        assert_eq!(v.len(), rows * cols);
        Mat { rows, cols, data: v }
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            let v = &m[(i, j)] - &f * &m[(r, j)];
                            m[(i, j)] = v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space. One vector per non-pivot column, in
    /// ascending column order, with a one in that column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let Echelon { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = zero_vec(self.cols);
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// A particular solution of `self * x = b` with free variables set to
    /// zero, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = self.hstack(&Mat::from_columns(self.rows, &[b.to_vec()]));
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Indices of a maximal set of linearly independent columns, chosen
    /// greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_rational(&self[(i, j)]))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Echelonized basis (RREF rows) of the span of `vectors` in `Q^dim`.
pub fn span_basis(dim: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_rows(vectors.to_vec());
    debug_assert_eq!(m.cols(), dim);
    let e = m.rref();
    (0..e.pivots.len()).map(|r| e.matrix.row(r).to_vec()).collect()
}

/// Coordinates of `v` in the (linearly independent) `basis`, if `v` lies in its span.
pub fn coordinates_in(basis: &[Vector], v: &[Rational]) -> Option<Vector> {
    if basis.is_empty() {
        return crate::rational::is_zero_vec(v).then(Vec::new);
    }
    Mat::from_columns(v.len(), basis).solve(v)
}

pub fn in_span(basis: &[Vector], v: &[Rational]) -> bool {
    coordinates_in(basis, v).is_some()
}

/// Rank of a family of vectors.
pub fn rank_of(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        Mat::from_rows(vectors.to_vec()).rank()
    }
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `sum_i coeffs[i] * vectors[i]`.
pub fn combine(dim: usize, coeffs: &[Rational], vectors: &[Vector]) -> Vector {
    let mut out = zero_vec(dim);
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::from_i64_rows(&[&[1, 0], &[0, 0]]).kernel_basis(), vec![vec![int(0), int(1)]]);
        assert!(Mat::identity(3).kernel_basis().is_empty());
        assert_eq!(Mat::from_i64_rows(&[&[1, 2], &[2, 4]]).kernel_basis(), vec![vec![int(-2), int(1)]]);
        let z = Mat::zeros(2, 3).kernel_basis();
        assert_eq!(z, vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::zeros(2, 2).rank(), 0);
        assert_eq!(Mat::identity(4).rank(), 4);
        assert_eq!(Mat::from_i64_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat(1, 3), int(-2), int(5)];
        assert_eq!(Mat::identity(3).solve(&b), Some(b.clone()));
        assert_eq!(Mat::from_i64_rows(&[&[1, 1]]).solve(&[int(2)]), Some(vec![int(2), int(0)]));
        assert_eq!(Mat::from_i64_rows(&[&[1], &[1]]).solve(&[int(1), int(2)]), None);
    }

    #[test]
    fn rref_pivots_are_leftmost_and_unit() {
        let m = Mat::from_i64_rows(&[&[0, 2, 4, 1], &[0, 1, 2, 0], &[0, 0, 0, 3]]);
        let e = m.rref();
        assert_eq!(e.pivots, vec![1, 3]);
        assert_eq!(e.matrix.row(0), &[int(0), int(1), int(2), int(0)]);
        assert_eq!(e.matrix.row(1), &[int(0), int(0), int(0), int(1)]);
    }

    #[test]
    fn power_and_nilpotency() {
        let n = Mat::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(n.is_nilpotent());
        assert!(!n.pow(2).is_zero());
        assert!(!Mat::identity(2).is_nilpotent());
        assert_eq!(Mat::identity(2).pow(0), Mat::identity(2));
    }
}
