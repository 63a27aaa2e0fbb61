//! Exact rational linear algebra: scalars, dense matrices, and canonical
//! subspaces.

mod matrix;
pub mod poly;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use scalar::{scalar_arith, ArithOp, Scalar};
pub use subspace::{subspace_lattice, BasisCoordinates, LatticeOp, LatticeResult, Subspace};

use thiserror::Error;

/// A dense rational vector.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    Ambient { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("invalid rational literal {0:?}")]
    ParseScalar(String),
    #[error("input too large: {0}")]
    TooLarge(String),
}

/// Zero vector of length `n`.
pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::ZERO; n]
}

/// Standard unit vector `e_i` in `Q^n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::ONE;
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vector {
    a.iter().map(|x| x * c).collect()
}
