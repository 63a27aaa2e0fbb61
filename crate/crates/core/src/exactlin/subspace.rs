use super::{LinError, Matrix, Scalar};

/// A subspace of `Q^n` stored as the reduced row-echelon basis of its row
/// space. The canonical form makes `==` subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

/// Binary operations of the subspace lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Sum,
    Intersect,
    ContainsSubspace,
    Equals,
}

/// Result of [`subspace_lattice`]: a subspace for `Sum`/`Intersect`, a
/// verdict for the predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeResult {
    Space(Subspace),
    Verdict(bool),
}

pub fn subspace_lattice(a: &Subspace, b: &Subspace, op: LatticeOp) -> Result<LatticeResult, LinError> {
    Ok(match op {
        LatticeOp::Sum => LatticeResult::Space(a.sum(b)?),
        LatticeOp::Intersect => LatticeResult::Space(a.intersect(b)?),
        LatticeOp::ContainsSubspace => LatticeResult::Verdict(a.contains_subspace(b)?),
        LatticeOp::Equals => {
            a.check_ambient(b)?;
            LatticeResult::Verdict(a == b)
        }
    })
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_rref_rows(Matrix::identity(ambient), ambient)
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinError::Ambient { expected: ambient, found: v.len() });
        }
        let m = Matrix::from_rows_with_cols(vectors, ambient)?;
        Ok(Self::from_rref_rows(m, ambient))
    }

    fn from_rref_rows(mut m: Matrix, ambient: usize) -> Self {
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    /// Span of the standard unit vectors at `indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self, LinError> {
        let mut vs = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient {
                return Err(LinError::Shape(format!("index {i} out of range for dimension {ambient}")));
            }
            let mut v = vec![Scalar::ZERO; ambient];
            v[i] = Scalar::ONE;
            vs.push(v);
        }
        Self::span(ambient, vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows_with_cols(self.basis.clone(), self.ambient).expect("basis rows have ambient length")
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinError> {
        if self.ambient != other.ambient {
            return Err(LinError::Ambient { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Subtracts the basis components of `v`; the result has zeros at every
    /// pivot and is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinError> {
        if v.len() != self.ambient {
            return Err(LinError::Ambient { expected: self.ambient, found: v.len() });
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            let f = -f;
            for (x, b) in r.iter_mut().zip(row).skip(p) {
                x.add_mul(&f, b);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::ZERO; self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row) {
                o.add_mul(c, b);
            }
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinError> {
        self.check_ambient(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v)?;
        }
        Ok(out)
    }

    /// Zassenhaus: row-reduce `[[A, A], [B, 0]]`; rows whose left half
    /// vanishes carry the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend_from_slice(v);
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(Scalar::ZERO, n));
            rows.push(r);
        }
        let mut m = Matrix::from_rows_with_cols(rows, 2 * n)?;
        let pivots = m.rref_in_place();
        let vecs = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| m.row(r)[n..].to_vec())
            .collect();
        Subspace::span(n, vecs)
    }

    /// Adds `v` to the subspace in place; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool, LinError> {
        let mut r = self.reduce(v)?;
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].recip()?;
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        // Clear column p from the existing rows.
        for row in self.basis.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            let f = -f;
            for (x, b) in row.iter_mut().zip(&r).skip(p) {
                x.add_mul(&f, b);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.basis.insert(pos, r);
        self.pivots.insert(pos, p);
        Ok(true)
    }

    /// Coordinate projection onto the complement spanned by non-pivot unit
    /// vectors: returns the non-pivot entries of `reduce(v)`.
    pub fn complement_coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinError> {
        let r = self.reduce(v)?;
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        Ok(r.into_iter().enumerate().filter(|(i, _)| !is_pivot[*i]).map(|(_, x)| x).collect())
    }

    /// Indices of the unit vectors spanning the standard complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}; {:?})", self.dim(), self.ambient, self.basis)
    }
}

/// Coordinates with respect to a fixed, not necessarily canonical, list of
/// independent vectors.
#[derive(Debug, Clone)]
pub struct BasisCoordinates {
    span: Subspace,
    /// Row `r` expresses canonical basis vector `r` in the original vectors.
    transform: Matrix,
}

impl BasisCoordinates {
    /// Fails with [`LinError::Dependent`] if the vectors are linearly dependent.
    pub fn new(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self, LinError> {
        let k = vectors.len();
        let mut rows = Vec::with_capacity(k);
        for (a, v) in vectors.iter().enumerate() {
            if v.len() != ambient {
                return Err(LinError::Ambient { expected: ambient, found: v.len() });
            }
            let mut r = v.clone();
            r.extend((0..k).map(|b| if a == b { Scalar::ONE } else { Scalar::ZERO }));
            rows.push(r);
        }
        let mut m = Matrix::from_rows_with_cols(rows, ambient + k)?;
        let pivots = m.rref_in_place();
        let rank = pivots.iter().take_while(|&&p| p < ambient).count();
        if rank < k {
            return Err(LinError::Dependent);
        }
        let basis: Vec<Vec<Scalar>> = (0..k).map(|r| m.row(r)[..ambient].to_vec()).collect();
        let transform = Matrix::from_rows_with_cols((0..k).map(|r| m.row(r)[ambient..].to_vec()).collect(), k)?;
        Ok(BasisCoordinates { span: Subspace { ambient, basis, pivots: pivots[..k].to_vec() }, transform })
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    /// Coefficients `c` with `v = sum c_a vectors[a]`, if `v` is in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinError> {
        let Some(canon) = self.span.coordinates(v)? else {
            return Ok(None);
        };
        let k = self.transform.cols();
        let mut out = vec![Scalar::ZERO; k];
        for (r, c) in canon.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, o) in out.iter_mut().enumerate() {
                o.add_mul(c, &self.transform[(r, a)]);
            }
        }
        Ok(Some(out))
    }
}
