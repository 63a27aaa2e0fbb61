//! Generalised eigenspaces, weight spaces of a module over a nilpotent
//! subalgebra `H`, and root spaces.
//!
//! A weight is recorded by its values on the canonical basis of `H` (the
//! reduced row-echelon basis of the subspace), so only linear functionals
//! are represented. The pre-weight space is the intersection, over that
//! basis, of the maximal generalised eigenspaces.

use std::fmt;

use thiserror::Error;

use crate::exactlin::poly::{minimal_polynomial, rational_roots};
use crate::exactlin::{LinError, Matrix, Scalar, Subspace, Vector};
use crate::lie::{LieAlgebra, LieError, LieSubspace, Representation, SubspaceKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("the acting subalgebra is not nilpotent")]
    NotNilpotent,
    #[error("the acting subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("weight has {found} values but the acting subalgebra has dimension {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("non-split over the rationals: ad of H basis vector {index} ({vector}) has eigenvalues outside Q")]
    NonSplit { index: usize, vector: String },
}

/// Values of a weight on a fixed basis of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightFunction(pub Vec<Scalar>);

impl WeightFunction {
    pub fn zero(len: usize) -> Self {
        WeightFunction(vec![Scalar::ZERO; len])
    }

    pub fn values(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        WeightFunction(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        WeightFunction(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Scalar::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpaceResult {
    pub chi: WeightFunction,
    pub space: Subspace,
    pub is_weight: bool,
}

/// `ker (f - λ)^m` with `m` the size of `f`.
pub fn generalized_eigenspace(f: &Matrix, lambda: &Scalar) -> Result<Subspace, WeightError> {
    Ok(shifted_power(f, lambda)?.kernel())
}

fn shifted_power(f: &Matrix, lambda: &Scalar) -> Result<Matrix, WeightError> {
    if !f.is_square() {
        return Err(LinError::Shape("generalised eigenspace of a non-square matrix".into()).into());
    }
    let m = f.rows();
    let shifted = f.sub(&Matrix::identity(m).scale(lambda))?;
    Ok(shifted.pow(m as u32)?)
}

/// `s ∩ ker p`, solved inside the coordinates of `s`.
fn intersect_kernel(s: &Subspace, p: &Matrix) -> Result<Subspace, WeightError> {
    if s.is_full() {
        return Ok(p.kernel());
    }
    if s.is_zero() {
        return Ok(s.clone());
    }
    let image = p.mul(&s.basis_matrix().transpose())?;
    let coeffs = image.kernel();
    let vectors = coeffs.basis().iter().map(|c| s.combine(c)).collect();
    Ok(Subspace::span(s.ambient_dim(), vectors)?)
}

fn check_h_basis(rep: &Representation, h_basis: &[Vector], chi: &WeightFunction) -> Result<(), WeightError> {
    if chi.0.len() != h_basis.len() {
        return Err(WeightError::WeightLength { expected: h_basis.len(), found: chi.0.len() });
    }
    for h in h_basis {
        if h.len() != rep.algebra().dim() {
            return Err(LieError::Dimension { expected: rep.algebra().dim(), found: h.len() }.into());
        }
    }
    Ok(())
}

/// Intersection over `h_basis` of the maximal generalised eigenspaces of
/// `ρ(h)` for the eigenvalue `χ(h)`.
pub fn pre_weight_space(rep: &Representation, h_basis: &[Vector], chi: &WeightFunction) -> Result<Subspace, WeightError> {
    check_h_basis(rep, h_basis, chi)?;
    let mut space = Subspace::full(rep.module_dim());
    for (h, lambda) in h_basis.iter().zip(&chi.0) {
        space = intersect_kernel(&space, &shifted_power(&rep.act(h)?, lambda)?)?;
        if space.is_zero() {
            break;
        }
    }
    Ok(space)
}

/// Checks that `h` is a nilpotent subalgebra of the acting algebra.
fn require_nilpotent(alg: &LieAlgebra, h: &LieSubspace) -> Result<(), WeightError> {
    if h.space().ambient_dim() != alg.dim() {
        return Err(LieError::Dimension { expected: alg.dim(), found: h.space().ambient_dim() }.into());
    }
    let kind = alg.classify_subspace(h.space())?;
    if kind == SubspaceKind::Subspace {
        return Err(WeightError::NotSubalgebra);
    }
    let sub = alg.subalgebra(h.space().clone())?;
    if alg.restrict(&sub)?.is_nilpotent().is_none() {
        return Err(WeightError::NotNilpotent);
    }
    Ok(())
}

/// Verifies `ρ(h) v ∈ space` for every basis pair.
fn certify_invariant(rep: &Representation, h_basis: &[Vector], space: &Subspace) -> Result<(), WeightError> {
    for h in h_basis {
        let m = rep.act(h)?;
        for v in space.basis() {
            if !space.contains(&m.mul_vec(v)?)? {
                return Err(LieError::Defect("weight space is not stable under the acting subalgebra".into()).into());
            }
        }
    }
    Ok(())
}

/// The weight space of `χ` for the nilpotent subalgebra `h`, certified
/// stable under `h`.
pub fn weight_space(rep: &Representation, h: &LieSubspace, chi: &WeightFunction) -> Result<WeightSpaceResult, WeightError> {
    require_nilpotent(rep.algebra(), h)?;
    let h_basis = h.space().basis();
    let space = pre_weight_space(rep, h_basis, chi)?;
    certify_invariant(rep, h_basis, &space)?;
    Ok(WeightSpaceResult { chi: chi.clone(), is_weight: !space.is_zero(), space })
}

/// Rational eigenvalues of `m`; fails if some eigenvalue is irrational.
fn rational_spectrum(m: &Matrix, index: usize, h: &[Scalar]) -> Result<Vec<Scalar>, WeightError> {
    let mu = minimal_polynomial(m)?;
    let roots = rational_roots(&mu)?;
    if roots.residual_degree > 0 {
        let vector = h.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", ");
        return Err(WeightError::NonSplit { index, vector: format!("[{vector}]") });
    }
    Ok(roots.roots.into_iter().map(|(r, _)| r).collect())
}

/// All weights of `rep` for the nilpotent subalgebra `h`, sorted by their
/// value tuples. Candidates per basis vector of `h` are its rational
/// eigenvalues; tuples are pruned by successive intersection.
pub fn weights(rep: &Representation, h: &LieSubspace) -> Result<Vec<WeightSpaceResult>, WeightError> {
    require_nilpotent(rep.algebra(), h)?;
    let h_basis = h.space().basis();
    let mut partial: Vec<(Vec<Scalar>, Subspace)> = vec![(Vec::new(), Subspace::full(rep.module_dim()))];
    for (i, hv) in h_basis.iter().enumerate() {
        let m = rep.act(hv)?;
        let spectrum = rational_spectrum(&m, i, hv)?;
        let powers: Vec<Matrix> = spectrum.iter().map(|l| shifted_power(&m, l)).collect::<Result<_, _>>()?;
        let mut next = Vec::new();
        for (values, space) in &partial {
            for (lambda, p) in spectrum.iter().zip(&powers) {
                let s = intersect_kernel(space, p)?;
                if !s.is_zero() {
                    let mut v = values.clone();
                    v.push(lambda.clone());
                    next.push((v, s));
                }
            }
        }
        partial = next;
    }
    let mut out: Vec<WeightSpaceResult> = partial
        .into_iter()
        .map(|(v, space)| WeightSpaceResult { chi: WeightFunction(v), space, is_weight: true })
        .collect();
    out.sort_by(|a, b| a.chi.cmp(&b.chi));
    let mut total = Subspace::zero(rep.module_dim());
    for w in &out {
        certify_invariant(rep, h_basis, &w.space)?;
        total = total.sum(&w.space)?;
    }
    let dims: usize = out.iter().map(|w| w.space.dim()).sum();
    if !total.is_full() || dims != rep.module_dim() {
        return Err(LieError::Defect(format!(
            "weight spaces span dimension {} with total {}, module dimension {}",
            total.dim(),
            dims,
            rep.module_dim()
        ))
        .into());
    }
    Ok(out)
}

/// Weights of the adjoint action of `h` on `alg`, including zero.
pub fn root_spaces(alg: &LieAlgebra, h: &LieSubspace) -> Result<Vec<WeightSpaceResult>, WeightError> {
    weights(&Representation::adjoint(alg), h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub pairs_checked: usize,
    /// Basis index pairs `(x, m)` with `[x, m]` outside the target space.
    pub failures: Vec<(usize, usize)>,
}

impl ProductReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `[L_χ1, L_χ2] ⊆ L_(χ1+χ2)` on all basis pairs.
pub fn root_product_check(
    alg: &LieAlgebra,
    h: &LieSubspace,
    chi1: &WeightFunction,
    chi2: &WeightFunction,
) -> Result<ProductReport, WeightError> {
    let rep = Representation::adjoint(alg);
    let a = weight_space(&rep, h, chi1)?;
    let b = weight_space(&rep, h, chi2)?;
    let target = weight_space(&rep, h, &chi1.add(chi2))?;
    let mut failures = Vec::new();
    let mut pairs = 0;
    for (i, x) in a.space.basis().iter().enumerate() {
        for (j, y) in b.space.basis().iter().enumerate() {
            pairs += 1;
            if !target.space.contains(&alg.bracket(x, y)?)? {
                failures.push((i, j));
            }
        }
    }
    Ok(ProductReport { pairs_checked: pairs, failures })
}
