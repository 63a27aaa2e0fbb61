//! Abstract Lie algebras given by structure constants, with ideals,
//! series, the Killing form, the radical, and Lie modules.

mod algebra;
mod constructions;
mod ideals;
mod invariants;
mod representation;
#[cfg(test)]
pub(crate) mod testing;

pub use algebra::{
    linear_combination, to_dense, to_sparse, AxiomReport, CheckMode, LieAlgebra, SparseVec, TripleVerdict,
};
pub use constructions::Quotient;
pub use ideals::{LieSubspace, SeriesReport, SubspaceKind};
pub use representation::Representation;

use thiserror::Error;

use crate::exactlin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("malformed structure constants: {0}")]
    Structure(String),
    #[error("Jacobi identity fails on basis triple {triple:?} ({failures} failing triples)")]
    Axiom { triple: (usize, usize, usize), failures: usize },
    #[error("not an ideal: [b{algebra_index}, s{subspace_index}] leaves the subspace")]
    NotIdeal { algebra_index: usize, subspace_index: usize },
    #[error("not a subalgebra: [s{left}, s{right}] leaves the subspace")]
    NotSubalgebra { left: usize, right: usize },
    #[error("module axiom fails on basis pair ({left}, {right})")]
    ModuleAxiom { left: usize, right: usize },
    #[error("internal consistency failure: {0}")]
    Defect(String),
}
