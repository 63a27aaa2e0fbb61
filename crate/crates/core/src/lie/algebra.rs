use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{axpy, Matrix, Scalar, Vector};

use super::LieError;

/// Sparse coordinate vector: `(index, coefficient)` with ascending indices
/// and no zero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only brackets `[b_i, b_j]` with `i < j` are part of the data; the
/// diagonal is zero and the lower triangle is the negated upper triangle,
/// so alternation holds structurally. A dense `dim x dim` table of both
/// orientations is kept for fast evaluation.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: Vec<SparseVec>,
    verified: bool,
}

/// How much of the basis-triple space [`LieAlgebra::check_axioms`] visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every triple `i < j < k`.
    Full,
    /// `count` distinct-index triples drawn with a seeded generator.
    Sampled { seed: u64, count: usize },
}

impl CheckMode {
    /// Full up to dimension 64, 200 seeded samples above.
    pub const SAMPLE_THRESHOLD: usize = 64;

    pub fn default_for(dim: usize) -> Self {
        if dim > Self::SAMPLE_THRESHOLD {
            CheckMode::Sampled { seed: 0, count: 200 }
        } else {
            CheckMode::Full
        }
    }
}

/// Verdicts of the three equivalent forms of the Jacobi axiom on one triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleVerdict {
    pub triple: (usize, usize, usize),
    /// `[x,[y,z]] = [[x,y],z] + [y,[x,z]]`
    pub leibniz: bool,
    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0`
    pub jacobi: bool,
    /// `[[x,y],z] = [x,[y,z]] - [y,[x,z]]`
    pub lie_lie: bool,
}

impl TripleVerdict {
    pub fn consistent(&self) -> bool {
        self.leibniz == self.jacobi && self.jacobi == self.lie_lie
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub mode: CheckMode,
    pub triples_checked: usize,
    /// Triples where at least one form fails.
    pub failures: Vec<TripleVerdict>,
    /// True iff the three forms agree on every visited triple.
    pub forms_agree: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl LieAlgebra {
    /// Builds an algebra from upper-triangle constants keyed by `(i, j)`,
    /// `i < j`. Entries must be in range with no repeated or zero
    /// coefficients; they are sorted by basis index.
    pub fn from_constants(
        names: Vec<String>,
        constants: BTreeMap<(usize, usize), SparseVec>,
    ) -> Result<Self, LieError> {
        let dim = names.len();
        let mut table = vec![SparseVec::new(); dim * dim];
        for ((i, j), mut coeffs) in constants {
            if i >= j || j >= dim {
                return Err(LieError::Structure(format!("bracket key ({i},{j}) must satisfy i < j < {dim}")));
            }
            coeffs.sort_by_key(|(k, _)| *k);
            for w in coeffs.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(LieError::Structure(format!("duplicate index {} in bracket ({i},{j})", w[0].0)));
                }
            }
            for (k, c) in &coeffs {
                if *k >= dim {
                    return Err(LieError::Structure(format!("index {k} out of range in bracket ({i},{j})")));
                }
                if c.is_zero() {
                    return Err(LieError::Structure(format!("zero coefficient stored in bracket ({i},{j})")));
                }
            }
            table[j * dim + i] = coeffs.iter().map(|(k, c)| (*k, -c)).collect();
            table[i * dim + j] = coeffs;
        }
        Ok(LieAlgebra { names, table, verified: false })
    }

    /// Builds an algebra from a function giving `[b_i, b_j]` as a dense
    /// vector; it is evaluated for `i < j` only.
    pub fn from_bracket_fn(
        names: Vec<String>,
        mut f: impl FnMut(usize, usize) -> Result<Vector, LieError>,
    ) -> Result<Self, LieError> {
        let dim = names.len();
        let mut constants = BTreeMap::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j)?;
                if v.len() != dim {
                    return Err(LieError::Dimension { expected: dim, found: v.len() });
                }
                let sparse = to_sparse(&v);
                if !sparse.is_empty() {
                    constants.insert((i, j), sparse);
                }
            }
        }
        Self::from_constants(names, constants)
    }

    /// The abelian algebra with basis `x0, x1, ...`.
    pub fn abelian(dim: usize) -> Self {
        let names = (0..dim).map(|i| format!("x{i}")).collect();
        LieAlgebra { names, table: vec![SparseVec::new(); dim * dim], verified: true }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Runs the full axiom check and marks the algebra verified on success.
    pub fn verify(self) -> Result<Self, LieError> {
        self.verify_with(CheckMode::Full)
    }

    pub fn verify_with(mut self, mode: CheckMode) -> Result<Self, LieError> {
        let report = self.check_axioms(mode);
        if let Some(f) = report.failures.first() {
            return Err(LieError::Axiom { triple: f.triple, failures: report.failures.len() });
        }
        self.verified = true;
        Ok(self)
    }

    /// Marks the algebra verified without checking. For constructions whose
    /// axioms have already been certified another way.
    pub(crate) fn assume_verified(mut self) -> Self {
        self.verified = true;
        self
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// Nonzero upper-triangle constants in `(i, j)` order.
    pub fn constants(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec)> + '_ {
        let dim = self.dim();
        (0..dim)
            .flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
            .filter_map(move |(i, j)| {
                let v = &self.table[i * dim + j];
                (!v.is_empty()).then_some(((i, j), v))
            })
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LieError::Dimension { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let dim = self.dim();
        let mut out = vec![Scalar::ZERO; dim];
        let ynz: Vec<usize> = (0..dim).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ynz {
                if i == j {
                    continue;
                }
                let c = xi * &y[j];
                for (k, s) in &self.table[i * dim + j] {
                    out[*k].add_mul(&c, s);
                }
            }
        }
        out
    }

    /// `[b_i, v]` for dense `v`.
    pub(crate) fn bracket_basis_left(&self, i: usize, v: &[Scalar]) -> Vector {
        let dim = self.dim();
        let mut out = vec![Scalar::ZERO; dim];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (k, s) in &self.table[i * dim + j] {
                out[*k].add_mul(vj, s);
            }
        }
        out
    }

    /// `[b_i, v]` for sparse `v`, into a dense vector.
    fn bracket_basis_sparse(&self, i: usize, v: &SparseVec, scale: &Scalar, out: &mut [Scalar]) {
        let dim = self.dim();
        for (j, vj) in v {
            let c = vj * scale;
            for (k, s) in &self.table[i * dim + j] {
                out[*k].add_mul(&c, s);
            }
        }
    }

    /// Matrix of `y -> [x, y]`; column `j` holds `[x, b_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..dim {
                for (k, s) in &self.table[i * dim + j] {
                    m[(*k, j)].add_mul(xi, s);
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for j in 0..dim {
            for (k, s) in &self.table[i * dim + j] {
                m[(*k, j)] = s.clone();
            }
        }
        m
    }

    /// Checks the Jacobi identity in its Leibniz, cyclic, and normal-form
    /// versions on basis triples. Alternation is structural, so triples with
    /// repeated indices and reorderings of a checked triple carry no new
    /// information; only `i < j < k` is visited.
    pub fn check_axioms(&self, mode: CheckMode) -> AxiomReport {
        let dim = self.dim();
        let triples: Vec<(usize, usize, usize)> = match mode {
            CheckMode::Full => (0..dim)
                .flat_map(|i| (i + 1..dim).flat_map(move |j| (j + 1..dim).map(move |k| (i, j, k))))
                .collect(),
            CheckMode::Sampled { seed, count } => {
                if dim < 3 {
                    Vec::new()
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..count)
                        .map(|_| {
                            let mut t = sample(&mut rng, dim, 3).into_vec();
                            t.sort_unstable();
                            (t[0], t[1], t[2])
                        })
                        .collect()
                }
            }
        };
        let mut failures = Vec::new();
        let mut forms_agree = true;
        for &(i, j, k) in &triples {
            let v = self.triple_verdict(i, j, k);
            forms_agree &= v.consistent();
            if !(v.leibniz && v.jacobi && v.lie_lie) {
                failures.push(v);
            }
        }
        AxiomReport { mode, triples_checked: triples.len(), failures, forms_agree }
    }

    /// Evaluates the three axiom forms on `(b_x, b_y, b_z)` independently.
    pub fn triple_verdict(&self, x: usize, y: usize, z: usize) -> TripleVerdict {
        let dim = self.dim();
        let one = Scalar::ONE;
        // [a, [b, c]] for basis a, b, c
        let nested = |a: usize, b: usize, c: usize| {
            let mut out = vec![Scalar::ZERO; dim];
            self.bracket_basis_sparse(a, &self.table[b * dim + c], &one, &mut out);
            out
        };
        // [[a, b], c] = -[c, [a, b]]
        let left_nested = |a: usize, b: usize, c: usize| {
            let mut out = vec![Scalar::ZERO; dim];
            self.bracket_basis_sparse(c, &self.table[a * dim + b], &-Scalar::ONE, &mut out);
            out
        };
        let x_yz = nested(x, y, z);
        let y_zx = nested(y, z, x);
        let z_xy = nested(z, x, y);
        let xy_z = left_nested(x, y, z);
        let y_xz = nested(y, x, z);

        let leibniz = x_yz.iter().zip(&xy_z).zip(&y_xz).all(|((a, b), c)| *a == b + c);
        let jacobi = x_yz.iter().zip(&y_zx).zip(&z_xy).all(|((a, b), c)| (a + b + c).is_zero());
        let lie_lie = xy_z.iter().zip(&x_yz).zip(&y_xz).all(|((a, b), c)| *a == b - c);
        TripleVerdict { triple: (x, y, z), leibniz, jacobi, lie_lie }
    }

    /// Basis vector `b_i` as a dense vector.
    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::exactlin::unit_vector(self.dim(), i)
    }

    pub(crate) fn rename(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.names.len());
        self.names = names;
        self
    }

    /// Applies `f` to every basis name.
    pub fn map_names(self, f: impl Fn(&str) -> String) -> Self {
        let names = self.names.iter().map(|n| f(n)).collect();
        self.rename(names)
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("dim", &self.dim())
            .field("basis", &self.names)
            .field("verified", &self.verified)
            .finish()
    }
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, dim: usize) -> Vector {
    let mut out = vec![Scalar::ZERO; dim];
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

/// `sum_i c_i v_i` over dense vectors.
pub fn linear_combination(coeffs: &[Scalar], vectors: &[Vector], dim: usize) -> Vector {
    let mut out = vec![Scalar::ZERO; dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}
