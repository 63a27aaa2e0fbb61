use std::collections::HashSet;

use crate::exactlin::poly::{minimal_polynomial, rational_roots};
use crate::exactlin::{is_zero_vector, Scalar, Subspace, Vector};
use crate::lie::{LieAlgebra, LieError, LieSubspace};
use crate::weights::{root_spaces, WeightFunction};

use super::{dynkin, recognize, CartanError, CartanMatrix, CartanType, Recognized};

/// One simple ideal of a split semisimple algebra.
#[derive(Debug, Clone)]
pub struct SimpleComponent {
    pub ideal: LieSubspace,
    pub ty: CartanType,
    pub rank: usize,
    /// Simple roots of this component, as values on the basis of `H`.
    pub simple_roots: Vec<WeightFunction>,
}

fn check_splitting(alg: &LieAlgebra, h: &LieSubspace) -> Result<(), CartanError> {
    let basis = h.space().basis();
    for (a, x) in basis.iter().enumerate() {
        for y in &basis[a + 1..] {
            if !is_zero_vector(&alg.bracket(x, y)?) {
                return Err(CartanError::NotSplitting("H is not abelian".into()));
            }
        }
    }
    if alg.normalizer(h.space())?.dim() != h.dim() {
        return Err(CartanError::NotSplitting("H is not self-normalising".into()));
    }
    for (i, x) in basis.iter().enumerate() {
        let mu = minimal_polynomial(&alg.ad(x)?)?;
        let roots = rational_roots(&mu)?;
        let name = format!("ad of H basis vector {i}");
        if roots.residual_degree > 0 {
            return Err(CartanError::NotSplitting(format!("{name} has eigenvalues outside Q")));
        }
        if roots.roots.iter().any(|(_, m)| *m > 1) {
            return Err(CartanError::NotSplitting(format!("{name} is not diagonalisable")));
        }
    }
    Ok(())
}

fn is_positive(w: &WeightFunction) -> bool {
    w.values().iter().find(|x| !x.is_zero()).is_some_and(Scalar::is_positive)
}

/// Splits a semisimple algebra with a splitting Cartan subalgebra `h` into
/// simple ideals, one per connected component of the Dynkin diagram of its
/// root system, and verifies the decomposition.
pub fn split_decompose(alg: &LieAlgebra, h: &LieSubspace) -> Result<Vec<SimpleComponent>, CartanError> {
    if !alg.is_semisimple()? {
        return Err(CartanError::NotSemisimple);
    }
    check_splitting(alg, h)?;
    let spaces = root_spaces(alg, h)?;
    let l = h.dim();
    let mut roots: Vec<(WeightFunction, Subspace)> = Vec::new();
    for w in spaces {
        if w.chi.is_zero() {
            if w.space != *h.space() {
                return Err(CartanError::NotSplitting("zero weight space differs from H".into()));
            }
        } else {
            roots.push((w.chi, w.space));
        }
    }
    let root_set: HashSet<WeightFunction> = roots.iter().map(|(r, _)| r.clone()).collect();
    let positive: Vec<&WeightFunction> = roots.iter().map(|(r, _)| r).filter(|r| is_positive(r)).collect();
    let simple: Vec<WeightFunction> = positive
        .iter()
        .filter(|r| !positive.iter().any(|a| is_positive(&r.add(&a.neg())) && root_set.contains(&r.add(&a.neg()))))
        .map(|r| (*r).clone())
        .collect();
    if simple.len() != l {
        return Err(LieError::Defect(format!("found {} simple roots for a Cartan subalgebra of dimension {l}", simple.len())).into());
    }
    // A_ij = -q, q the largest k with α_j + k α_i a root
    let mut entries = vec![vec![0i64; l]; l];
    for i in 0..l {
        for j in 0..l {
            if i == j {
                entries[i][j] = 2;
                continue;
            }
            let mut q = 0;
            let mut cur = simple[j].add(&simple[i]);
            while root_set.contains(&cur) {
                q += 1;
                cur = cur.add(&simple[i]);
            }
            entries[i][j] = -q;
        }
    }
    let cartan = CartanMatrix::new(entries)?;
    let space_of = |r: &WeightFunction| -> &Subspace {
        &roots.iter().find(|(x, _)| x == r).expect("root present").1
    };
    let mut out = Vec::new();
    for comp in recognize(&dynkin(&cartan)) {
        let Recognized::Finite { ty, rank, nodes } = comp else {
            return Err(LieError::Defect("root system of a split semisimple algebra is not of finite type".into()).into());
        };
        let mut gens: Vec<Vector> = Vec::new();
        for &i in &nodes {
            gens.extend(space_of(&simple[i]).basis().iter().cloned());
            gens.extend(space_of(&simple[i].neg()).basis().iter().cloned());
        }
        let ideal = alg.ideal_closure(&gens)?;
        if !alg.restrict(&ideal)?.is_simple()? {
            return Err(LieError::Defect(format!("component {ty}{rank} is not simple")).into());
        }
        out.push(SimpleComponent { ideal, ty, rank, simple_roots: nodes.iter().map(|&i| simple[i].clone()).collect() });
    }
    let mut total = Subspace::zero(alg.dim());
    for (a, ca) in out.iter().enumerate() {
        for cb in &out[a + 1..] {
            if !alg.ideal_bracket(&ca.ideal, &cb.ideal)?.is_zero() {
                return Err(LieError::Defect("distinct simple components do not commute".into()).into());
            }
        }
        total = total.sum(ca.ideal.space())?;
    }
    if !total.is_full() {
        return Err(LieError::Defect("simple components do not span the algebra".into()).into());
    }
    Ok(out)
}
