//! Lie algebras of matrices under the commutator: skew-adjoint algebras of
//! a bilinear form, the classical families, and conversion to structure
//! constants.
//!
//! Basis templates are generated in a fixed order so that serialised output
//! is deterministic. Size conventions: `gl`, `sl`, `so`, `upper`,
//! `strict-upper` take the matrix size; `so-jd`, `so-prime`, `sp` take `n`
//! and act on `2n x 2n` matrices; `so-jb` takes `n` and acts on
//! `(2n+1) x (2n+1)` matrices.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactlin::{BasisCoordinates, LinError, Matrix, Scalar};
use crate::lie::{CheckMode, LieAlgebra, LieError, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixLieError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("matrices must be square of equal size: {0}")]
    Size(String),
    #[error("basis matrices are linearly dependent")]
    Dependent,
    #[error("not closed under the commutator: [{left}, {right}] leaves the span")]
    NotClosed { left: String, right: String },
    #[error("invalid size parameter {size} for {family}")]
    InvalidSize { family: String, size: usize },
    #[error("congruence matrix is singular")]
    SingularCongruence,
    #[error("congruence transport check failed: {0}")]
    Transport(String),
}

/// `AB - BA`.
pub fn matrix_bracket(a: &Matrix, b: &Matrix) -> Result<Matrix, MatrixLieError> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(MatrixLieError::Size(format!("{}x{} and {}x{}", a.rows(), a.cols(), b.rows(), b.cols())));
    }
    Ok(a.mul(b)?.sub(&b.mul(a)?)?)
}

/// `Aᵀ · J2 = J · B`, i.e. `A` and `B` are adjoint for the forms `J`, `J2`.
pub fn is_adjoint_pair_matrix(j: &Matrix, j2: &Matrix, a: &Matrix, b: &Matrix) -> Result<bool, MatrixLieError> {
    let lhs = a.transpose().mul(j2).map_err(|e| MatrixLieError::Size(e.to_string()))?;
    let rhs = j.mul(b).map_err(|e| MatrixLieError::Size(e.to_string()))?;
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Err(MatrixLieError::Size("adjoint pair products differ in shape".into()));
    }
    Ok(lhs == rhs)
}

/// A Lie algebra of `n x n` matrices with a certified-closed basis.
#[derive(Clone)]
pub struct MatrixLieAlgebra {
    name: String,
    n: usize,
    basis: Vec<Matrix>,
    names: Vec<String>,
    constants: BTreeMap<(usize, usize), SparseVec>,
    coords: BasisCoordinates,
}

impl fmt::Debug for MatrixLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixLieAlgebra")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("dim", &self.basis.len())
            .finish()
    }
}

impl MatrixLieAlgebra {
    /// Checks independence and commutator closure of `basis`, recording the
    /// structure constants on the way.
    pub fn new(name: impl Into<String>, n: usize, basis: Vec<Matrix>, names: Vec<String>) -> Result<Self, MatrixLieError> {
        for m in &basis {
            if m.rows() != n || m.cols() != n {
                return Err(MatrixLieError::Size(format!("expected {n}x{n}, found {}x{}", m.rows(), m.cols())));
            }
        }
        assert_eq!(names.len(), basis.len(), "one name per basis matrix");
        let flat: Vec<Vec<Scalar>> = basis.iter().map(Matrix::flatten).collect();
        let coords = BasisCoordinates::new(n * n, &flat).map_err(|e| match e {
            LinError::Dependent => MatrixLieError::Dependent,
            other => other.into(),
        })?;
        let mut constants = BTreeMap::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let c = matrix_bracket(&basis[a], &basis[b])?;
                let Some(v) = coords.coordinates(&c.flatten())? else {
                    return Err(MatrixLieError::NotClosed { left: names[a].clone(), right: names[b].clone() });
                };
                let sparse = crate::lie::to_sparse(&v);
                if !sparse.is_empty() {
                    constants.insert((a, b), sparse);
                }
            }
        }
        Ok(MatrixLieAlgebra { name: name.into(), n, basis, names, constants, coords })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of `m` in the basis, if `m` lies in the algebra.
    pub fn coordinates(&self, m: &Matrix) -> Result<Option<Vec<Scalar>>, MatrixLieError> {
        if m.rows() != self.n || m.cols() != self.n {
            return Err(MatrixLieError::Size(format!("expected {0}x{0}", self.n)));
        }
        Ok(self.coords.coordinates(&m.flatten())?)
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool, MatrixLieError> {
        Ok(self.coordinates(m)?.is_some())
    }

    /// `sum c_i basis_i`.
    pub fn element(&self, coeffs: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.n, self.n);
        for (c, m) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("same size");
            }
        }
        out
    }

    /// Structure constants in the matrix basis; the result passes the
    /// axiom check (full up to dimension 64, sampled above).
    pub fn to_abstract(&self) -> Result<LieAlgebra, MatrixLieError> {
        let alg = LieAlgebra::from_constants(self.names.clone(), self.constants.clone())?;
        Ok(alg.verify_with(CheckMode::default_for(self.dim()))?)
    }
}

/// The matrix algebra `{A : AᵀJ = -JA}`, on the canonical kernel basis.
pub fn skew_adjoint_algebra(j: &Matrix) -> Result<MatrixLieAlgebra, MatrixLieError> {
    if !j.is_square() {
        return Err(MatrixLieError::Size("form matrix must be square".into()));
    }
    let n = j.rows();
    let space = skew_adjoint_space(j)?;
    let basis: Vec<Matrix> =
        space.basis().iter().map(|v| Matrix::from_vec(n, n, v.clone()).expect("n*n entries")).collect();
    let names = (0..basis.len()).map(|i| format!("A{i}")).collect();
    MatrixLieAlgebra::new("skew-adjoint", n, basis, names)
}

/// Kernel of the linear map `A -> AᵀJ + JA` on flattened `n x n` matrices.
fn skew_adjoint_space(j: &Matrix) -> Result<crate::exactlin::Subspace, MatrixLieError> {
    let n = j.rows();
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let e = Matrix::unit(n, a, b);
            cols.push(e.transpose().mul(j)?.add(&j.mul(&e)?)?.flatten());
        }
    }
    let map = Matrix::from_rows_with_cols(cols, n * n)?.transpose();
    Ok(map.kernel())
}

/// Block matrix `[[0, I], [I, 0]]` of size `2n`.
pub fn jd_matrix(n: usize) -> Matrix {
    let i = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    Matrix::from_blocks(&z, &i, &i, &z).expect("square blocks")
}

/// Block matrix `[[0, -I], [I, 0]]` of size `2n`.
pub fn j_matrix(n: usize) -> Matrix {
    let i = Matrix::identity(n);
    let z = Matrix::zeros(n, n);
    Matrix::from_blocks(&z, &i.scale(&-Scalar::ONE), &i, &z).expect("square blocks")
}

/// `[[0, I, 0], [I, 0, 0], [0, 0, 1]]` of size `2n + 1`.
pub fn jb_matrix(n: usize) -> Matrix {
    let mut m = Matrix::zeros(2 * n + 1, 2 * n + 1);
    for i in 0..n {
        m[(i, n + i)] = Scalar::ONE;
        m[(n + i, i)] = Scalar::ONE;
    }
    m[(2 * n, 2 * n)] = Scalar::ONE;
    m
}

/// `diag(1_p, -1_q)`.
pub fn so_prime_matrix(p: usize, q: usize) -> Matrix {
    let entries: Vec<Scalar> =
        (0..p + q).map(|i| if i < p { Scalar::ONE } else { -Scalar::ONE }).collect();
    Matrix::diagonal(&entries)
}

/// Classical matrix families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gl,
    Sl,
    /// Skew-symmetric matrices.
    So,
    /// Skew-adjoint for `diag(1_p, -1_q)`.
    SoPrime { q: usize },
    /// Skew-adjoint for `[[0, I], [I, 0]]`.
    SoJD,
    /// Skew-adjoint for `[[0, I, 0], [I, 0, 0], [0, 0, 1]]`.
    SoJB,
    /// Skew-adjoint for `[[0, -I], [I, 0]]`.
    Sp,
    /// Upper-triangular matrices.
    Upper,
    /// Strictly upper-triangular matrices.
    StrictUpper,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Sl => "sl",
            Family::So => "so",
            Family::SoPrime { .. } => "so-prime",
            Family::SoJD => "so-jd",
            Family::SoJB => "so-jb",
            Family::Sp => "sp",
            Family::Upper => "upper",
            Family::StrictUpper => "strict-upper",
        }
    }

    /// The defining form, for the skew-adjoint families.
    pub fn form(&self, size: usize) -> Option<Matrix> {
        match *self {
            Family::So => Some(Matrix::identity(size)),
            Family::SoPrime { q } => Some(so_prime_matrix(size, q)),
            Family::SoJD => Some(jd_matrix(size)),
            Family::SoJB => Some(jb_matrix(size)),
            Family::Sp => Some(j_matrix(size)),
            _ => None,
        }
    }
}

fn idx_name(prefix: &str, i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{prefix}{}{}", i + 1, j + 1)
    } else {
        format!("{prefix}{}_{}", i + 1, j + 1)
    }
}

/// `a ± b` for matrix units, as a builder helper.
fn units(n: usize, terms: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for &(i, j, c) in terms {
        m[(i, j)] = &m[(i, j)] + &Scalar::from_int(c);
    }
    m
}

/// Builds a classical family from elementary-matrix templates.
///
/// `gl(n)`: `E_ij` row-major. `sl(n)`: `E_ij` for `i < j`, then
/// `H_i = E_ii - E_(i+1)(i+1)`, then `E_ij` for `i > j`. `so(n)`:
/// `E_ij - E_ji`, `i < j`. `so-prime(p, q)`: `E_ij - ε_i ε_j E_ji`. `so-jd(n)`:
/// `M_ij = E_ij - E_(n+j)(n+i)`, then `B_ij = E_i(n+j) - E_j(n+i)` and
/// `C_ij = E_(n+i)j - E_(n+j)i` for `i < j`. `so-jb(n)`: the `so-jd(n)`
/// templates plus `U_i = E_i(2n) - E_(2n)(n+i)` and `V_i = E_(n+i)(2n) - E_(2n)i`.
/// `sp(n)`: `M_ij`, then `B_ij = E_i(n+j) + E_j(n+i)` and
/// `C_ij = E_(n+i)j + E_(n+j)i` for `i <= j` (single unit on the diagonal).
pub fn classical(family: Family, size: usize) -> Result<MatrixLieAlgebra, MatrixLieError> {
    let invalid = || MatrixLieError::InvalidSize { family: family.label().into(), size };
    if size == 0 {
        return Err(invalid());
    }
    let mut basis = Vec::new();
    let mut names = Vec::new();
    let mut push = |name: String, m: Matrix| {
        names.push(name);
        basis.push(m);
    };
    let n = size;
    let (mat_n, label) = match family {
        Family::Gl => {
            for i in 0..n {
                for j in 0..n {
                    push(idx_name("E", i, j, n), Matrix::unit(n, i, j));
                }
            }
            (n, format!("gl({n})"))
        }
        Family::Sl => {
            if n < 2 {
                return Err(invalid());
            }
            for i in 0..n {
                for j in i + 1..n {
                    push(idx_name("E", i, j, n), Matrix::unit(n, i, j));
                }
            }
            for i in 0..n - 1 {
                push(format!("H{}", i + 1), units(n, &[(i, i, 1), (i + 1, i + 1, -1)]));
            }
            for i in 0..n {
                for j in 0..i {
                    push(idx_name("E", i, j, n), Matrix::unit(n, i, j));
                }
            }
            (n, format!("sl({n})"))
        }
        Family::So => {
            for i in 0..n {
                for j in i + 1..n {
                    push(idx_name("A", i, j, n), units(n, &[(i, j, 1), (j, i, -1)]));
                }
            }
            (n, format!("so({n})"))
        }
        Family::SoPrime { q } => {
            let p = n;
            let total = p + q;
            let eps = |i: usize| if i < p { 1 } else { -1 };
            for i in 0..total {
                for j in i + 1..total {
                    push(idx_name("A", i, j, total), units(total, &[(i, j, 1), (j, i, -eps(i) * eps(j))]));
                }
            }
            (total, format!("so'({p},{q})"))
        }
        Family::SoJD | Family::SoJB => {
            let m = if family == Family::SoJB { 2 * n + 1 } else { 2 * n };
            for i in 0..n {
                for j in 0..n {
                    push(idx_name("M", i, j, n), units(m, &[(i, j, 1), (n + j, n + i, -1)]));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    push(idx_name("B", i, j, n), units(m, &[(i, n + j, 1), (j, n + i, -1)]));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    push(idx_name("C", i, j, n), units(m, &[(n + i, j, 1), (n + j, i, -1)]));
                }
            }
            if family == Family::SoJB {
                let last = 2 * n;
                for i in 0..n {
                    push(format!("U{}", i + 1), units(m, &[(i, last, 1), (last, n + i, -1)]));
                }
                for i in 0..n {
                    push(format!("V{}", i + 1), units(m, &[(n + i, last, 1), (last, i, -1)]));
                }
                (m, format!("so_JB({n})"))
            } else {
                (m, format!("so_JD({n})"))
            }
        }
        Family::Sp => {
            let m = 2 * n;
            for i in 0..n {
                for j in 0..n {
                    push(idx_name("M", i, j, n), units(m, &[(i, j, 1), (n + j, n + i, -1)]));
                }
            }
            for i in 0..n {
                for j in i..n {
                    let t = if i == j { vec![(i, n + i, 1)] } else { vec![(i, n + j, 1), (j, n + i, 1)] };
                    push(idx_name("B", i, j, n), units(m, &t));
                }
            }
            for i in 0..n {
                for j in i..n {
                    let t = if i == j { vec![(n + i, i, 1)] } else { vec![(n + i, j, 1), (n + j, i, 1)] };
                    push(idx_name("C", i, j, n), units(m, &t));
                }
            }
            (m, format!("sp({m})"))
        }
        Family::Upper | Family::StrictUpper => {
            let strict = family == Family::StrictUpper;
            for i in 0..n {
                for j in i..n {
                    if strict && i == j {
                        continue;
                    }
                    push(idx_name("E", i, j, n), Matrix::unit(n, i, j));
                }
            }
            (n, format!("{}({n})", if strict { "n" } else { "t" }))
        }
    };
    if basis.is_empty() {
        return Err(invalid());
    }
    let alg = MatrixLieAlgebra::new(label, mat_n, basis, names)?;
    // Skew-adjoint families must fill the whole kernel of the linearised condition.
    if let Some(j) = family.form(size) {
        let space = skew_adjoint_space(&j)?;
        if space.dim() != alg.dim() {
            return Err(MatrixLieError::Transport(format!(
                "template basis of {} has dimension {}, expected {}",
                alg.name(),
                alg.dim(),
                space.dim()
            )));
        }
        for m in alg.basis() {
            if !space.contains(&m.flatten())? {
                return Err(MatrixLieError::Transport(format!("template of {} is not skew-adjoint", alg.name())));
            }
        }
    }
    Ok(alg)
}

/// A change of form `J -> PᵀJP`, carrying skew-adjoint matrices for `J` to
/// skew-adjoint matrices for `PᵀJP` by `A -> P⁻¹AP`.
#[derive(Debug, Clone)]
pub struct Congruence {
    pub p: Matrix,
    pub p_inv: Matrix,
    pub j: Matrix,
    pub j2: Matrix,
}

impl Congruence {
    pub fn apply(&self, a: &Matrix) -> Result<Matrix, MatrixLieError> {
        Ok(self.p_inv.mul(a)?.mul(&self.p)?)
    }

    /// Transports every basis matrix of `alg` and checks the image is a
    /// basis of the skew-adjoint algebra of `j2` with brackets preserved.
    pub fn transport(&self, alg: &MatrixLieAlgebra) -> Result<MatrixLieAlgebra, MatrixLieError> {
        let images: Vec<Matrix> = alg.basis().iter().map(|a| self.apply(a)).collect::<Result<_, _>>()?;
        let out = MatrixLieAlgebra::new(format!("{}^P", alg.name()), self.j2.rows(), images, alg.basis_names().to_vec())?;
        if out.constants != alg.constants {
            return Err(MatrixLieError::Transport("structure constants changed under conjugation".into()));
        }
        let target = skew_adjoint_space(&self.j2)?;
        if target.dim() != out.dim() {
            return Err(MatrixLieError::Transport(format!(
                "image has dimension {}, skew-adjoint algebra of J2 has {}",
                out.dim(),
                target.dim()
            )));
        }
        for m in out.basis() {
            if !target.contains(&m.flatten())? {
                return Err(MatrixLieError::Transport("image matrix is not skew-adjoint for J2".into()));
            }
        }
        Ok(out)
    }
}

/// Builds the congruence for invertible `p` and verifies it on the full
/// basis of `skew_adjoint_algebra(j)`.
pub fn congruence_transport(p: &Matrix, j: &Matrix) -> Result<(Congruence, MatrixLieAlgebra), MatrixLieError> {
    if !p.is_square() || !j.is_square() || p.rows() != j.rows() {
        return Err(MatrixLieError::Size("P and J must be square of equal size".into()));
    }
    let p_inv = p.inverse().map_err(|_| MatrixLieError::SingularCongruence)?;
    let j2 = p.transpose().mul(j)?.mul(p)?;
    let c = Congruence { p: p.clone(), p_inv, j: j.clone(), j2 };
    let image = c.transport(&skew_adjoint_algebra(j)?)?;
    Ok((c, image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Subspace;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn bracket_examples() {
        let e12 = Matrix::unit(2, 0, 1);
        let e21 = Matrix::unit(2, 1, 0);
        assert_eq!(matrix_bracket(&e12, &e21).unwrap(), Matrix::from_ints(&[[1, 0], [0, -1]]));
        assert!(matrix_bracket(&e12, &e12).unwrap().is_zero());
        assert!(matrix_bracket(&e12, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn adjoint_pair_examples() {
        let i = Matrix::identity(2);
        let sym = Matrix::from_ints(&[[1, 2], [2, 5]]);
        assert!(is_adjoint_pair_matrix(&i, &i, &sym, &sym).unwrap());
        let skew = Matrix::from_ints(&[[0, 3], [-3, 0]]);
        assert!(is_adjoint_pair_matrix(&i, &i, &skew, &skew.scale(&q(-1))).unwrap());
        // entrywise cross-check on a violating pair
        let a = Matrix::from_ints(&[[1, 2], [0, 1]]);
        let b = Matrix::from_ints(&[[1, 0], [0, 1]]);
        let j = Matrix::from_ints(&[[0, 1], [1, 0]]);
        let lhs = a.transpose().mul(&j).unwrap();
        let rhs = j.mul(&b).unwrap();
        assert_eq!(is_adjoint_pair_matrix(&j, &j, &a, &b).unwrap(), lhs == rhs);
        assert!(!is_adjoint_pair_matrix(&j, &j, &a, &b).unwrap());
    }

    #[test]
    fn skew_adjoint_examples() {
        let so3 = skew_adjoint_algebra(&Matrix::identity(3)).unwrap();
        assert_eq!(so3.dim(), 3);
        for m in so3.basis() {
            assert_eq!(m.transpose(), m.scale(&q(-1)));
        }
        let sp2 = skew_adjoint_algebra(&j_matrix(1)).unwrap();
        assert_eq!(sp2.dim(), 3);
        assert_eq!(skew_adjoint_algebra(&Matrix::zeros(3, 3)).unwrap().dim(), 9);
    }

    #[test]
    fn classical_dimensions() {
        assert_eq!(classical(Family::Sl, 3).unwrap().dim(), 8);
        assert_eq!(classical(Family::Sp, 2).unwrap().dim(), 10);
        assert_eq!(classical(Family::SoJD, 2).unwrap().dim(), 6);
        assert_eq!(classical(Family::SoJB, 2).unwrap().dim(), 10);
        assert_eq!(classical(Family::SoPrime { q: 2 }, 3).unwrap().dim(), 10);
        assert_eq!(classical(Family::Gl, 3).unwrap().dim(), 9);
        assert_eq!(classical(Family::Upper, 3).unwrap().dim(), 6);
        assert_eq!(classical(Family::StrictUpper, 3).unwrap().dim(), 3);
        assert!(classical(Family::Sl, 1).is_err());
        assert!(classical(Family::Gl, 0).is_err());
    }

    #[test]
    fn so_jd2_has_abelian_diagonal_subalgebra() {
        let alg = classical(Family::SoJD, 2).unwrap();
        let abs = alg.to_abstract().unwrap();
        let diag: Vec<usize> = (0..alg.dim())
            .filter(|&i| {
                let m = &alg.basis()[i];
                (0..4).all(|r| (0..4).all(|c| r == c || m[(r, c)].is_zero()))
            })
            .collect();
        assert_eq!(diag.len(), 2);
        let h = abs.coordinate_subalgebra(&diag).unwrap();
        assert!(abs.restrict(&h).unwrap().is_abelian());
    }

    #[test]
    fn to_abstract_sl2_and_so3() {
        let sl2 = classical(Family::Sl, 2).unwrap().to_abstract().unwrap();
        assert_eq!(sl2.basis_names(), ["E12", "H1", "E21"]);
        let (e, h, f) = (sl2.basis_vector(0), sl2.basis_vector(1), sl2.basis_vector(2));
        assert_eq!(sl2.bracket(&e, &f).unwrap(), h);
        assert_eq!(sl2.bracket(&h, &e).unwrap(), e.iter().map(|x| x * &q(2)).collect::<Vec<_>>());
        assert_eq!(sl2.bracket(&h, &f).unwrap(), f.iter().map(|x| x * &q(-2)).collect::<Vec<_>>());

        // so(3) basis A12, A13, A23: cyclic ±1 constants of the cross product
        let so3 = classical(Family::So, 3).unwrap().to_abstract().unwrap();
        let b = |i| so3.basis_vector(i);
        assert_eq!(so3.bracket(&b(0), &b(1)).unwrap(), vec![q(0), q(0), q(-1)]);
        assert_eq!(so3.bracket(&b(0), &b(2)).unwrap(), vec![q(0), q(1), q(0)]);
        assert_eq!(so3.bracket(&b(1), &b(2)).unwrap(), vec![q(-1), q(0), q(0)]);
    }

    #[test]
    fn diagonal_algebra_is_abelian() {
        let basis = vec![Matrix::unit(3, 0, 0), Matrix::unit(3, 1, 1)];
        let alg = MatrixLieAlgebra::new("d", 3, basis, vec!["d1".into(), "d2".into()]).unwrap();
        assert!(alg.to_abstract().unwrap().is_abelian());
    }

    #[test]
    fn closure_and_independence_failures() {
        let basis = vec![Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)];
        let err = MatrixLieAlgebra::new("x", 2, basis, vec!["e".into(), "f".into()]).unwrap_err();
        assert_eq!(err, MatrixLieError::NotClosed { left: "e".into(), right: "f".into() });
        let basis = vec![Matrix::unit(2, 0, 1), Matrix::unit(2, 0, 1).scale(&q(2))];
        assert_eq!(
            MatrixLieAlgebra::new("x", 2, basis, vec!["a".into(), "b".into()]).unwrap_err(),
            MatrixLieError::Dependent
        );
    }

    #[test]
    fn congruence_jd1_to_so_prime() {
        let p = Matrix::from_ints(&[[1, 1], [1, -1]]);
        let (c, image) = congruence_transport(&p, &jd_matrix(1)).unwrap();
        assert_eq!(c.j2, Matrix::from_ints(&[[2, 0], [0, -2]]));
        let target = classical(Family::SoPrime { q: 1 }, 1).unwrap();
        let span = |a: &MatrixLieAlgebra| Subspace::span(4, a.basis().iter().map(Matrix::flatten).collect()).unwrap();
        assert_eq!(span(&image), span(&target));
    }

    #[test]
    fn identity_congruence() {
        let j = jd_matrix(2);
        let (c, image) = congruence_transport(&Matrix::identity(4), &j).unwrap();
        assert_eq!(c.j2, j);
        assert_eq!(image.basis(), skew_adjoint_algebra(&j).unwrap().basis());
        assert_eq!(
            congruence_transport(&Matrix::zeros(4, 4), &j).unwrap_err(),
            MatrixLieError::SingularCongruence
        );
    }
}
