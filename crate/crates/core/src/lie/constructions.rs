use std::collections::{BTreeMap, HashSet};

use crate::exactlin::{BasisCoordinates, Matrix, Scalar, Vector};

use super::{to_dense, LieAlgebra, LieError, LieSubspace, SparseVec, SubspaceKind};

/// A quotient algebra with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim(Q) x dim(L)` matrix of the canonical projection.
    pub projection: Matrix,
}

impl LieAlgebra {
    /// `L1 ⊕ L2` with cross brackets zero. Clashing basis names from the
    /// second summand get primes appended.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let offset = self.dim();
        let mut seen: HashSet<String> = self.basis_names().iter().cloned().collect();
        let mut names = self.basis_names().to_vec();
        for n in other.basis_names() {
            let mut name = n.clone();
            while seen.contains(&name) {
                name.push('\'');
            }
            seen.insert(name.clone());
            names.push(name);
        }
        let mut constants: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for ((i, j), v) in self.constants() {
            constants.insert((i, j), v.clone());
        }
        for ((i, j), v) in other.constants() {
            constants.insert((i + offset, j + offset), v.iter().map(|(k, c)| (k + offset, c.clone())).collect());
        }
        let out = LieAlgebra::from_constants(names, constants).expect("summands are well formed");
        if self.is_verified() && other.is_verified() {
            out.assume_verified()
        } else {
            out
        }
    }

    /// `L / I` on the complement spanned by the non-pivot basis vectors of
    /// `I`'s canonical basis.
    pub fn quotient(&self, ideal: &LieSubspace) -> Result<Quotient, LieError> {
        let ideal = self.ideal(ideal.space().clone())?;
        let space = ideal.space();
        let dim = self.dim();
        let keep = space.complement_indices();
        let qdim = keep.len();
        let mut projection = Matrix::zeros(qdim, dim);
        for j in 0..dim {
            let coords = space.complement_coordinates(&self.basis_vector(j))?;
            for (r, c) in coords.into_iter().enumerate() {
                projection[(r, j)] = c;
            }
        }
        let names = keep.iter().map(|&i| self.basis_names()[i].clone()).collect();
        let algebra = LieAlgebra::from_bracket_fn(names, |a, b| {
            let v = to_dense(self.basis_bracket(keep[a], keep[b]), dim);
            Ok(space.complement_coordinates(&v)?)
        })?;
        let algebra = if self.is_verified() { algebra.assume_verified() } else { algebra };
        Ok(Quotient { algebra, projection })
    }

    /// The bracket restricted to a subalgebra, on its canonical basis.
    /// Basis vectors that are unit vectors keep their parent names.
    pub fn restrict(&self, sub: &LieSubspace) -> Result<LieAlgebra, LieError> {
        let space = sub.space();
        if space.ambient_dim() != self.dim() {
            return Err(LieError::Dimension { expected: self.dim(), found: space.ambient_dim() });
        }
        let sub = if sub.kind() == SubspaceKind::Subspace { self.subalgebra(space.clone())? } else { sub.clone() };
        let space = sub.space();
        let basis = space.basis();
        let names = basis
            .iter()
            .enumerate()
            .map(|(a, v)| match unit_position(v) {
                Some(i) => self.basis_names()[i].clone(),
                None => format!("s{a}"),
            })
            .collect();
        let out = LieAlgebra::from_bracket_fn(names, |a, b| {
            let v = self.bracket_unchecked(&basis[a], &basis[b]);
            space.coordinates(&v)?.ok_or(LieError::NotSubalgebra { left: a, right: b })
        })?;
        Ok(if self.is_verified() { out.assume_verified() } else { out })
    }

    /// Re-expresses the algebra in a new basis whose vectors (in old
    /// coordinates) are the given rows.
    pub fn change_basis(&self, rows: &[Vector], names: Vec<String>) -> Result<LieAlgebra, LieError> {
        let dim = self.dim();
        if rows.len() != dim || names.len() != dim {
            return Err(LieError::Dimension { expected: dim, found: rows.len() });
        }
        let coords = BasisCoordinates::new(dim, rows)?;
        let out = LieAlgebra::from_bracket_fn(names, |a, b| {
            let v = self.bracket_unchecked(&rows[a], &rows[b]);
            Ok(coords.coordinates(&v)?.expect("new basis spans the algebra"))
        })?;
        Ok(if self.is_verified() { out.assume_verified() } else { out })
    }
}

fn unit_position(v: &[Scalar]) -> Option<usize> {
    let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
    match (nz.next(), nz.next()) {
        (Some((i, c)), None) if c.is_one() => Some(i),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Subspace;
    use crate::lie::testing::{gl2, sl2, upper_triangular2};
    use crate::lie::CheckMode;

    #[test]
    fn direct_sum_examples() {
        let a = LieAlgebra::abelian(1).direct_sum(&LieAlgebra::abelian(1));
        assert_eq!(a.dim(), 2);
        assert!(a.is_abelian());

        let d = sl2().direct_sum(&sl2());
        assert_eq!(d.basis_names(), ["E", "H", "F", "E'", "H'", "F'"]);
        assert!(d.check_axioms(CheckMode::Full).passed());
        // Killing form is block diagonal
        let k = d.killing_form();
        let k1 = sl2().killing_form();
        for i in 0..6 {
            for j in 0..6 {
                let expect = if (i < 3) == (j < 3) { k1[(i % 3, j % 3)].clone() } else { Scalar::ZERO };
                assert_eq!(k[(i, j)], expect);
            }
        }
    }

    #[test]
    fn quotient_by_center_of_gl2() {
        let g = gl2();
        let q = g.quotient(&g.center()).unwrap();
        assert_eq!(q.algebra.dim(), 3);
        assert!(q.algebra.check_axioms(CheckMode::Full).passed());
        assert!(q.algebra.is_semisimple().unwrap());
        assert_eq!(q.algebra.derived_algebra().dim(), 3);
        // projection is a morphism on basis pairs
        for i in 0..4 {
            for j in 0..4 {
                let lhs = q.projection.mul_vec(&g.bracket(&g.basis_vector(i), &g.basis_vector(j)).unwrap()).unwrap();
                let rhs = q
                    .algebra
                    .bracket(&q.projection.column(i), &q.projection.column(j))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trivial_quotients() {
        let l = sl2();
        let q = l.quotient(&l.bottom()).unwrap();
        assert_eq!(q.algebra, l);
        assert_eq!(q.projection, Matrix::identity(3));
        assert_eq!(l.quotient(&l.top()).unwrap().algebra.dim(), 0);
        let h = l.lie_subspace(Subspace::coordinate(3, &[1]).unwrap()).unwrap();
        assert!(matches!(l.quotient(&h), Err(LieError::NotIdeal { .. })));
    }

    #[test]
    fn restrict_examples() {
        let g = gl2();
        // trace-zero matrices: E12, E21, E11 - E22
        let one = Scalar::ONE;
        let z = Scalar::ZERO;
        let sl = Subspace::span(
            4,
            vec![
                vec![z.clone(), one.clone(), z.clone(), z.clone()],
                vec![z.clone(), z.clone(), one.clone(), z.clone()],
                vec![one.clone(), z.clone(), z.clone(), -&one],
            ],
        )
        .unwrap();
        let r = g.restrict(&g.ideal(sl).unwrap()).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.is_simple().unwrap());

        let l = sl2();
        assert_eq!(l.restrict(&l.top()).unwrap(), l);

        let t = upper_triangular2();
        let strict = t.ideal(Subspace::coordinate(3, &[1]).unwrap()).unwrap();
        let r = t.restrict(&strict).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(r.is_abelian());

        let bad = LieSubspace { space: Subspace::coordinate(3, &[0, 2]).unwrap(), kind: SubspaceKind::Subspace };
        assert!(matches!(l.restrict(&bad), Err(LieError::NotSubalgebra { .. })));
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let l = sl2();
        let q = |n| Scalar::from_int(n);
        let rows = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(2)], vec![q(1), q(0), q(-1)]];
        let m = l.change_basis(&rows, vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert!(m.check_axioms(CheckMode::Full).passed());
        assert!(m.is_simple().unwrap());
    }
}
