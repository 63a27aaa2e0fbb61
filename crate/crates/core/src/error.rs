use thiserror::Error;

use crate::cartan::CartanError;
use crate::exactlin::LinError;
use crate::freelie::FreeLieError;
use crate::io::IoError;
use crate::lie::LieError;
use crate::matrix_lie::MatrixLieError;
use crate::weights::WeightError;

/// Failure classes shared by the command line and the C interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(i32)]
pub enum Status {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    BadCartan = 3,
    NotNilpotent = 4,
    NonSplit = 5,
    NotSemisimple = 6,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    CheckFailed(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Matrix(#[from] MatrixLieError),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
}

fn lie_status(e: &LieError) -> Status {
    match e {
        LieError::Structure(_) | LieError::Dimension { .. } => Status::Usage,
        LieError::Lin(e) => lin_status(e),
        _ => Status::CheckFailed,
    }
}

fn lin_status(e: &LinError) -> Status {
    match e {
        LinError::ParseScalar(_) | LinError::TooLarge(_) => Status::Usage,
        _ => Status::CheckFailed,
    }
}

fn weight_status(e: &WeightError) -> Status {
    match e {
        WeightError::NotNilpotent | WeightError::NotSubalgebra => Status::NotNilpotent,
        WeightError::NonSplit { .. } => Status::NonSplit,
        WeightError::WeightLength { .. } => Status::Usage,
        WeightError::Lie(e) => lie_status(e),
        WeightError::Lin(e) => lin_status(e),
    }
}

fn cartan_status(e: &CartanError) -> Status {
    match e {
        CartanError::InvalidRank { .. } | CartanError::UnknownType(_) => Status::Usage,
        CartanError::Invalid(_) | CartanError::NotFiniteType => Status::BadCartan,
        CartanError::NotSemisimple => Status::NotSemisimple,
        CartanError::NotSplitting(_) => Status::NonSplit,
        CartanError::Weight(e) => weight_status(e),
        CartanError::Lie(e) => lie_status(e),
        CartanError::Lin(e) => lin_status(e),
    }
}

impl Error {
    pub fn status(&self) -> Status {
        match self {
            Error::Usage(_) => Status::Usage,
            Error::CheckFailed(_) => Status::CheckFailed,
            Error::Io(IoError::Cartan(e)) | Error::Cartan(e) => cartan_status(e),
            Error::Io(IoError::Lie(e)) | Error::Lie(e) => lie_status(e),
            Error::Io(_) => Status::Usage,
            Error::Weight(e) => weight_status(e),
            Error::Lin(e) => lin_status(e),
            Error::Matrix(MatrixLieError::InvalidSize { .. }) => Status::Usage,
            Error::Matrix(MatrixLieError::Lie(e)) => lie_status(e),
            Error::Matrix(_) => Status::CheckFailed,
            Error::FreeLie(FreeLieError::Lie(e)) => lie_status(e),
            Error::FreeLie(_) => Status::Usage,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_map() {
        assert_eq!(Error::from(CartanError::NotFiniteType).status().code(), 3);
        assert_eq!(Error::from(CartanError::NotSemisimple).status().code(), 6);
        assert_eq!(Error::from(WeightError::NotNilpotent).status().code(), 4);
        assert_eq!(Error::from(WeightError::NonSplit { index: 0, vector: "x".into() }).status().code(), 5);
        assert_eq!(Error::from(IoError::Format("x".into())).status().code(), 2);
        assert_eq!(Error::from(LieError::Axiom { triple: (0, 1, 2), failures: 1 }).status().code(), 1);
        let syntax = FreeLieError::Syntax { offset: 0, message: "x".into() };
        assert_eq!(Error::from(syntax).status().code(), 2);
    }
}
