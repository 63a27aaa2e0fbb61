use crate::exactlin::{Matrix, Scalar};

use super::{LieAlgebra, LieError};

/// A Lie module: one `m x m` matrix per basis vector of the algebra, with
/// `ρ([x, y]) = ρ(x)ρ(y) - ρ(y)ρ(x)` on basis pairs.
#[derive(Debug, Clone)]
pub struct Representation {
    algebra: LieAlgebra,
    module_dim: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Checks the module axiom on every basis pair.
    pub fn new(algebra: LieAlgebra, module_dim: usize, action: Vec<Matrix>) -> Result<Self, LieError> {
        if action.len() != algebra.dim() {
            return Err(LieError::Dimension { expected: algebra.dim(), found: action.len() });
        }
        for m in &action {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(LieError::Dimension { expected: module_dim, found: m.rows() });
            }
        }
        let rep = Representation { algebra, module_dim, action };
        if let Some((i, j)) = rep.module_axiom_failure() {
            return Err(LieError::ModuleAxiom { left: i, right: j });
        }
        Ok(rep)
    }

    /// The adjoint module `x -> ad x`.
    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad_basis(i)).collect();
        Representation { module_dim: algebra.dim(), algebra: algebra.clone(), action }
    }

    /// Every basis vector acts by zero.
    pub fn trivial(algebra: &LieAlgebra, module_dim: usize) -> Self {
        let action = vec![Matrix::zeros(module_dim, module_dim); algebra.dim()];
        Representation { module_dim, algebra: algebra.clone(), action }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn action_basis(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// `ρ(x)` for an arbitrary algebra vector.
    pub fn act(&self, x: &[Scalar]) -> Result<Matrix, LieError> {
        if x.len() != self.algebra.dim() {
            return Err(LieError::Dimension { expected: self.algebra.dim(), found: x.len() });
        }
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c))?;
            }
        }
        Ok(out)
    }

    fn module_axiom_failure(&self) -> Option<(usize, usize)> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(&super::to_dense(self.algebra.basis_bracket(i, j), n)).ok()?;
                let (a, b) = (&self.action[i], &self.action[j]);
                let rhs = a.mul(b).ok()?.sub(&b.mul(a).ok()?).ok()?;
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}
