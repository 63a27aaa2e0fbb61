use crate::exactlin::{Matrix, Scalar, Subspace};

use super::{LieAlgebra, LieError, LieSubspace};

impl LieAlgebra {
    /// Gram matrix of `κ(x, y) = trace(ad x · ad y)` on the basis.
    ///
    /// Evaluated from the sparse structure table: the `(i, j)` entry is
    /// `sum_k sum_m c_{jk}^m c_{im}^k`.
    pub fn killing_form(&self) -> Matrix {
        let dim = self.dim();
        let mut k = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let mut acc = Scalar::ZERO;
                for kk in 0..dim {
                    for (m, c) in self.basis_bracket(j, kk) {
                        let row = self.basis_bracket(i, *m);
                        if let Ok(pos) = row.binary_search_by_key(&kk, |(idx, _)| *idx) {
                            acc.add_mul(c, &row[pos].1);
                        }
                    }
                }
                k[(j, i)] = acc.clone();
                k[(i, j)] = acc;
            }
        }
        k
    }

    /// Basis triples `(i, j, k)` where `κ([b_i, b_j], b_k) != κ(b_i, [b_j, b_k])`.
    pub fn killing_invariance_failures(&self, kf: &Matrix) -> Vec<(usize, usize, usize)> {
        let dim = self.dim();
        let mut out = Vec::new();
        let pair = |v: &super::SparseVec, other: usize, left: bool| -> Scalar {
            v.iter()
                .map(|(m, c)| if left { c * &kf[(*m, other)] } else { c * &kf[(other, *m)] })
                .sum()
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let lhs = pair(self.basis_bracket(i, j), k, true);
                    let rhs = pair(self.basis_bracket(j, k), i, false);
                    if lhs != rhs {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// The solvable radical, computed as the Killing-orthogonal complement of
    /// `[L, L]` (characteristic zero). The result is re-checked to be a
    /// solvable ideal.
    pub fn radical(&self) -> Result<LieSubspace, LieError> {
        let dim = self.dim();
        let kf = self.killing_form();
        let derived = self.derived_algebra();
        let rows: Vec<Vec<Scalar>> =
            derived.space().basis().iter().map(|d| kf.mul_vec(d).expect("square")).collect();
        let space = if rows.is_empty() {
            Subspace::full(dim)
        } else {
            Matrix::from_rows_with_cols(rows, dim)?.kernel()
        };
        let ideal = self
            .ideal(space)
            .map_err(|e| LieError::Defect(format!("computed radical is not an ideal: {e}")))?;
        let restricted = self.restrict(&ideal)?;
        if restricted.is_solvable().is_none() {
            return Err(LieError::Defect("computed radical is not solvable".into()));
        }
        Ok(ideal)
    }

    /// `radical(L) = 0`.
    pub fn is_semisimple(&self) -> Result<bool, LieError> {
        Ok(self.radical()?.is_zero())
    }

    /// Non-abelian, semisimple, and every basis vector generates the whole
    /// algebra as an ideal.
    ///
    /// The generator test is exact for bases adapted to the ideal
    /// decomposition (direct sums, Chevalley bases, matrix templates). For a
    /// basis mixing two simple ideals in every vector it can report a
    /// semisimple non-simple algebra as simple.
    pub fn is_simple(&self) -> Result<bool, LieError> {
        if self.dim() == 0 || self.is_abelian() {
            return Ok(false);
        }
        if !self.is_semisimple()? {
            return Ok(false);
        }
        for i in 0..self.dim() {
            if !self.ideal_closure(&[self.basis_vector(i)])?.space().is_full() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
