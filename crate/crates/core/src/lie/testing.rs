//! Hand-entered structure constants for unit tests, independent of the
//! matrix constructions.

use std::collections::BTreeMap;

use crate::exactlin::Scalar;

use super::LieAlgebra;

fn build(names: &[&str], entries: &[((usize, usize), &[(usize, i64)])]) -> LieAlgebra {
    let mut c = BTreeMap::new();
    for ((i, j), v) in entries {
        c.insert((*i, *j), v.iter().map(|(k, x)| (*k, Scalar::from_int(*x))).collect());
    }
    LieAlgebra::from_constants(names.iter().map(|s| s.to_string()).collect(), c).unwrap()
}

/// Basis `(E, H, F)`.
pub fn sl2() -> LieAlgebra {
    build(&["E", "H", "F"], &[((0, 1), &[(0, -2)]), ((0, 2), &[(1, 1)]), ((1, 2), &[(2, -2)])])
}

/// Basis `(E11, E12, E21, E22)`.
pub fn gl2() -> LieAlgebra {
    build(
        &["E11", "E12", "E21", "E22"],
        &[
            ((0, 1), &[(1, 1)]),
            ((0, 2), &[(2, -1)]),
            ((1, 2), &[(0, 1), (3, -1)]),
            ((1, 3), &[(1, 1)]),
            ((2, 3), &[(2, -1)]),
        ],
    )
}

/// Upper-triangular 2x2 matrices, basis `(E11, E12, E22)`.
pub fn upper_triangular2() -> LieAlgebra {
    build(&["E11", "E12", "E22"], &[((0, 1), &[(1, 1)]), ((1, 2), &[(1, 1)])])
}

/// `[x, y] = z`.
pub fn heisenberg() -> LieAlgebra {
    build(&["x", "y", "z"], &[((0, 1), &[(2, 1)])])
}
