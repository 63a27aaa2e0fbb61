use std::fmt;
use std::ops::{Index, IndexMut};

use super::{LinError, Scalar, Subspace};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinError> {
        if data.len() != rows * cols {
            return Err(LinError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Rows must all have the same length. An empty list gives a 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinError> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self, LinError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinError::Shape(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Convenience for tests and tables of small integer matrices.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| Scalar::from_int(x))).collect();
        Matrix { rows: rows.len(), cols: C, data }
    }

    /// Matrix unit `E_{ij}` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Scalar::ONE;
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Self, LinError> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(LinError::Shape("incompatible block shapes".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let (blk, r, s) = match (i < a.rows, j < a.cols) {
                    (true, true) => (a, i, j),
                    (true, false) => (b, i, j - a.cols),
                    (false, true) => (c, i - a.rows, j),
                    (false, false) => (d, i - a.rows, j - a.cols),
                };
                m[(i, j)] = blk[(r, s)].clone();
            }
        }
        Ok(m)
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

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    fn same_shape(&self, other: &Matrix) -> Result<(), LinError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinError> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinError> {
        if v.len() != self.cols {
            return Err(LinError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect())
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Result<Matrix, LinError> {
        if !self.is_square() {
            return Err(LinError::Shape("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinError> {
        if self.cols != other.cols {
            return Err(LinError::Shape("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivot_cols = m.rref_in_place();
        Rref { rank: pivot_cols.len(), reduced: m, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Row-reduces in place and returns the pivot columns.
    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..cols {
                    let v = &self.data[r * cols + j] * &inv;
                    self.data[r * cols + j] = v;
                }
            }
            let pivot_row: Vec<Scalar> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                let f = -f;
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        self.data[i * cols + c + k].add_mul(&f, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        for j in 0..cols {
            self.data.swap(a * cols + j, b * cols + j);
        }
    }

    /// Null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { reduced, pivot_cols, .. } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivot_cols {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Scalar::ZERO; n];
            v[free] = Scalar::ONE;
            for (r, &p) in pivot_cols.iter().enumerate() {
                v[p] = -&reduced[(r, free)];
            }
            basis.push(v);
        }
        Subspace::span(n, basis).expect("kernel vectors have ambient length")
    }

    /// One exact solution of `self * x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinError> {
        if rhs.len() != self.rows {
            return Err(LinError::Shape(format!("rhs of length {} for {} rows", rhs.len(), self.rows)));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::ZERO; self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix, LinError> {
        if !self.is_square() {
            return Err(LinError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_blocks(self, &Matrix::identity(n), &Matrix::zeros(0, n), &Matrix::zeros(0, n))?;
        let Rref { reduced, rank, pivot_cols } = aug.rref();
        if rank < n || pivot_cols[n - 1] != n - 1 {
            return Err(LinError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = reduced[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<Scalar, LinError> {
        if !self.is_square() {
            return Err(LinError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::ZERO);
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.recip()?;
            for i in c + 1..n {
                let f = &m[(i, c)] * &inv;
                if f.is_zero() {
                    continue;
                }
                let f = -f;
                for j in c..n {
                    let pv = m[(c, j)].clone();
                    m.data[i * n + j].add_mul(&f, &pv);
                }
            }
        }
        Ok(det)
    }

    /// Flattens row-major into a vector of length `rows * cols`.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let r = Matrix::from_ints(&[[2, 4], [1, 2]]).rref();
        assert_eq!(r.reduced, Matrix::from_ints(&[[1, 2], [0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);

        let r = Matrix::identity(3).rref();
        assert_eq!(r.reduced, Matrix::identity(3));
        assert_eq!((r.rank, r.pivot_cols), (3, vec![0, 1, 2]));

        let r = Matrix::zeros(2, 2).rref();
        assert_eq!(r.reduced, Matrix::zeros(2, 2));
        assert_eq!((r.rank, r.pivot_cols), (0, vec![]));
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::from_ints(&[[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Scalar::ONE, -Scalar::ONE]).unwrap());

        assert_eq!(Matrix::from_ints(&[[1, 2], [3, 4]]).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(2, 3).kernel(), Subspace::full(3));
    }

    #[test]
    fn solve_examples() {
        let v = vec![Scalar::frac(1, 2), Scalar::from_int(-3)];
        assert_eq!(Matrix::identity(2).solve(&v).unwrap(), Some(v));

        let x = Matrix::from_ints(&[[1, 1]]).solve(&[Scalar::from_int(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], Scalar::from_int(2));

        assert_eq!(Matrix::from_ints(&[[0, 0]]).solve(&[Scalar::ONE]).unwrap(), None);
        assert!(Matrix::identity(2).solve(&[Scalar::ONE]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_ints(&[[1, 1], [1, -1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(-2));
        assert_eq!(Matrix::from_ints(&[[1, 2], [2, 4]]).inverse(), Err(LinError::Singular));
        assert_eq!(Matrix::from_ints(&[[0, 1], [1, 0]]).determinant().unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn power() {
        let m = Matrix::from_ints(&[[1, 1], [0, 1]]);
        assert_eq!(m.pow(5).unwrap(), Matrix::from_ints(&[[1, 5], [0, 1]]));
        assert_eq!(m.pow(0).unwrap(), Matrix::identity(2));
    }
}
