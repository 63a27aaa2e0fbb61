use crate::exactlin::{Matrix, Scalar, Subspace, Vector};

use super::{LieAlgebra, LieError};

/// Strongest closure property a subspace is known to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubspaceKind {
    Subspace,
    Subalgebra,
    Ideal,
}

/// A subspace of a Lie algebra tagged with its certified closure kind.
///
/// The parent algebra is not stored; operations take it explicitly and
/// check that the ambient dimensions match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSubspace {
    pub(crate) space: Subspace,
    pub(crate) kind: SubspaceKind,
}

impl LieSubspace {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn kind(&self) -> SubspaceKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_ideal(&self) -> bool {
        self.kind == SubspaceKind::Ideal
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

/// Terms of a derived or lower central series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub terms: Vec<Subspace>,
    /// Smallest `k` with `terms[k + 1] == terms[k]` (or `terms[k] == 0`).
    pub stabilised_at: usize,
    pub reaches_bottom: bool,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    /// Index of the first zero term, if any.
    pub fn bottom_index(&self) -> Option<usize> {
        self.terms.iter().position(Subspace::is_zero)
    }
}

impl LieAlgebra {
    pub fn top(&self) -> LieSubspace {
        LieSubspace { space: Subspace::full(self.dim()), kind: SubspaceKind::Ideal }
    }

    pub fn bottom(&self) -> LieSubspace {
        LieSubspace { space: Subspace::zero(self.dim()), kind: SubspaceKind::Ideal }
    }

    fn check_ambient(&self, s: &Subspace) -> Result<(), LieError> {
        if s.ambient_dim() != self.dim() {
            return Err(LieError::Dimension { expected: self.dim(), found: s.ambient_dim() });
        }
        Ok(())
    }

    /// First pair of basis vectors `(a, b)` of `s` with `[a, b]` outside `s`.
    fn subalgebra_witness(&self, s: &Subspace) -> Option<(usize, usize)> {
        let basis = s.basis();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let v = self.bracket_unchecked(&basis[a], &basis[b]);
                if !s.contains(&v).expect("ambient checked") {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// First `(z, x)` with `z` an algebra basis index and `x` a subspace
    /// basis index such that `[b_z, s_x]` leaves `s`.
    fn ideal_witness(&self, s: &Subspace) -> Option<(usize, usize)> {
        for (x, v) in s.basis().iter().enumerate() {
            for z in 0..self.dim() {
                let w = self.bracket_basis_left(z, v);
                if !s.contains(&w).expect("ambient checked") {
                    return Some((z, x));
                }
            }
        }
        None
    }

    /// Strongest tag among subspace, subalgebra, and ideal.
    pub fn classify_subspace(&self, s: &Subspace) -> Result<SubspaceKind, LieError> {
        self.check_ambient(s)?;
        if self.ideal_witness(s).is_none() {
            Ok(SubspaceKind::Ideal)
        } else if self.subalgebra_witness(s).is_none() {
            Ok(SubspaceKind::Subalgebra)
        } else {
            Ok(SubspaceKind::Subspace)
        }
    }

    /// Wraps `s` with its computed kind.
    pub fn lie_subspace(&self, s: Subspace) -> Result<LieSubspace, LieError> {
        let kind = self.classify_subspace(&s)?;
        Ok(LieSubspace { space: s, kind })
    }

    /// Wraps `s` as an ideal, failing with the offending pair otherwise.
    pub fn ideal(&self, s: Subspace) -> Result<LieSubspace, LieError> {
        self.check_ambient(&s)?;
        if let Some((z, x)) = self.ideal_witness(&s) {
            return Err(LieError::NotIdeal { algebra_index: z, subspace_index: x });
        }
        Ok(LieSubspace { space: s, kind: SubspaceKind::Ideal })
    }

    /// Wraps `s` as a subalgebra (or ideal, if it is one).
    pub fn subalgebra(&self, s: Subspace) -> Result<LieSubspace, LieError> {
        self.check_ambient(&s)?;
        if let Some((a, b)) = self.subalgebra_witness(&s) {
            return Err(LieError::NotSubalgebra { left: a, right: b });
        }
        let kind = if self.ideal_witness(&s).is_none() { SubspaceKind::Ideal } else { SubspaceKind::Subalgebra };
        Ok(LieSubspace { space: s, kind })
    }

    /// Accepts an ideal tag, or re-checks a weaker tag.
    fn require_ideal(&self, s: &LieSubspace) -> Result<(), LieError> {
        if s.kind == SubspaceKind::Ideal {
            return Ok(());
        }
        match self.ideal_witness(&s.space) {
            Some((z, x)) => Err(LieError::NotIdeal { algebra_index: z, subspace_index: x }),
            None => Ok(()),
        }
    }

    /// Subalgebra spanned by the given basis vectors.
    pub fn coordinate_subalgebra(&self, indices: &[usize]) -> Result<LieSubspace, LieError> {
        self.subalgebra(Subspace::coordinate(self.dim(), indices)?)
    }

    /// `[I, N]`: the linear span of `[x, n]` over basis vectors `x` of `I`
    /// and `n` of `N`. Both arguments must be ideals; the result is one.
    pub fn ideal_bracket(&self, i: &LieSubspace, n: &LieSubspace) -> Result<LieSubspace, LieError> {
        self.check_ambient(&i.space)?;
        self.check_ambient(&n.space)?;
        self.require_ideal(i)?;
        self.require_ideal(n)?;
        let space = self.bracket_span(&i.space, &n.space);
        Ok(LieSubspace { space, kind: SubspaceKind::Ideal })
    }

    /// Linear span of `[a, b]` for `a` in `x`, `b` in `y` (no closure checks).
    pub fn bracket_span(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let dim = self.dim();
        let mut out = Subspace::zero(dim);
        // Unit-vector bases let the structure table be read directly.
        let unit_index = |v: &Vector| -> Option<usize> {
            let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
            match (nz.next(), nz.next()) {
                (Some((k, c)), None) if c.is_one() => Some(k),
                _ => None,
            }
        };
        for a in x.basis() {
            for b in y.basis() {
                if out.is_full() {
                    return out;
                }
                let v = match (unit_index(a), unit_index(b)) {
                    (Some(p), Some(q)) => crate::lie::to_dense(self.basis_bracket(p, q), dim),
                    _ => self.bracket_unchecked(a, b),
                };
                out.insert(&v).expect("ambient");
            }
        }
        out
    }

    /// `[L, L]`, spanned by the basis brackets.
    pub fn derived_algebra(&self) -> LieSubspace {
        let dim = self.dim();
        let mut out = Subspace::zero(dim);
        for (_, v) in self.constants() {
            if out.is_full() {
                break;
            }
            out.insert(&crate::lie::to_dense(v, dim)).expect("ambient");
        }
        LieSubspace { space: out, kind: SubspaceKind::Ideal }
    }

    fn series(
        &self,
        start: LieSubspace,
        max_k: usize,
        mut step: impl FnMut(&LieSubspace) -> Result<LieSubspace, LieError>,
    ) -> Result<SeriesReport, LieError> {
        let mut terms = vec![start.space.clone()];
        let mut current = start;
        let mut stabilised_at = None;
        for k in 0..max_k {
            if current.is_zero() {
                stabilised_at = Some(k);
                break;
            }
            let next = step(&current)?;
            if next.space == current.space {
                stabilised_at = Some(k);
                break;
            }
            terms.push(next.space.clone());
            current = next;
        }
        let reaches_bottom = current.is_zero();
        let stabilised_at = stabilised_at.unwrap_or(terms.len() - 1);
        Ok(SeriesReport { terms, stabilised_at, reaches_bottom })
    }

    /// `I, [I, I], [[I, I], [I, I]], ...` for at most `max_k` steps.
    pub fn derived_series(&self, i: &LieSubspace, max_k: usize) -> Result<SeriesReport, LieError> {
        self.require_ideal(i)?;
        self.series(i.clone(), max_k, |t| self.ideal_bracket(t, t))
    }

    /// `L, [L, L], [L, [L, L]], ...` for at most `max_k` steps.
    pub fn lower_central_series(&self, max_k: usize) -> Result<SeriesReport, LieError> {
        let top = self.top();
        self.series(top.clone(), max_k, |t| self.ideal_bracket(&top, t))
    }

    /// `Some(k)` with `k` the first index where the derived series vanishes.
    pub fn is_solvable(&self) -> Option<usize> {
        self.derived_series(&self.top(), self.dim() + 1).expect("top is an ideal").bottom_index()
    }

    /// `Some(k)` with `k` the first index where the lower central series vanishes.
    pub fn is_nilpotent(&self) -> Option<usize> {
        self.lower_central_series(self.dim() + 1).expect("top is an ideal").bottom_index()
    }

    /// `{x : [b, x] = 0 for every basis b}`.
    pub fn center(&self) -> LieSubspace {
        let dim = self.dim();
        let mut rows = Subspace::zero(dim);
        'outer: for i in 0..dim {
            let ad = self.ad_basis(i);
            for r in 0..dim {
                if rows.is_full() {
                    break 'outer;
                }
                rows.insert(ad.row(r)).expect("ambient");
            }
        }
        let space = rows.basis_matrix_or_empty(dim).kernel();
        LieSubspace { space, kind: SubspaceKind::Ideal }
    }

    /// `{x : [x, s] ⊆ s}`.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace, LieError> {
        self.check_ambient(s)?;
        let dim = self.dim();
        // Condition: for each basis vector h of s, [x, h] reduces to zero
        // modulo s. The map x -> reduce([x, h]) is linear in x.
        let mut rows = Subspace::zero(dim);
        for h in s.basis() {
            // column j of this block: reduce([b_j, h])
            let cols: Vec<Vector> = (0..dim).map(|j| s.reduce(&self.bracket_basis_left(j, h)).expect("ambient")).collect();
            for r in 0..dim {
                let row: Vector = cols.iter().map(|c| c[r].clone()).collect();
                rows.insert(&row).expect("ambient");
            }
        }
        Ok(rows.basis_matrix_or_empty(dim).kernel())
    }

    /// Smallest ideal containing every vector in `generators`.
    pub fn ideal_closure(&self, generators: &[Vector]) -> Result<LieSubspace, LieError> {
        let dim = self.dim();
        let mut span = Subspace::zero(dim);
        let mut queue: Vec<Vector> = Vec::new();
        for g in generators {
            self.check_len_pub(g)?;
            if span.insert(g)? {
                queue.push(g.clone());
            }
        }
        while let Some(w) = queue.pop() {
            for z in 0..dim {
                if span.is_full() {
                    return Ok(LieSubspace { space: span, kind: SubspaceKind::Ideal });
                }
                let v = self.bracket_basis_left(z, &w);
                if span.insert(&v)? {
                    queue.push(v);
                }
            }
        }
        Ok(LieSubspace { space: span, kind: SubspaceKind::Ideal })
    }

    fn check_len_pub(&self, v: &[Scalar]) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LieError::Dimension { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    /// Sum of two ideals.
    pub fn ideal_sum(&self, a: &LieSubspace, b: &LieSubspace) -> Result<LieSubspace, LieError> {
        let space = a.space.sum(&b.space)?;
        let kind = if a.is_ideal() && b.is_ideal() { SubspaceKind::Ideal } else { self.classify_subspace(&space)? };
        Ok(LieSubspace { space, kind })
    }

    /// Intersection of two ideals.
    pub fn ideal_intersect(&self, a: &LieSubspace, b: &LieSubspace) -> Result<LieSubspace, LieError> {
        let space = a.space.intersect(&b.space)?;
        let kind = if a.is_ideal() && b.is_ideal() { SubspaceKind::Ideal } else { self.classify_subspace(&space)? };
        Ok(LieSubspace { space, kind })
    }
}

trait BasisMatrixExt {
    fn basis_matrix_or_empty(&self, cols: usize) -> Matrix;
}

impl BasisMatrixExt for Subspace {
    fn basis_matrix_or_empty(&self, cols: usize) -> Matrix {
        if self.is_zero() {
            Matrix::zeros(0, cols)
        } else {
            self.basis_matrix()
        }
    }
}
