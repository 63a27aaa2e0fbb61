//! Named constructions and pipelines shared by the command line and the C
//! interface.

use crate::cartan::{chevalley_algebra, named_cartan, parse_type_label, split_decompose, CartanMatrix, CartanType};
use crate::exactlin::Subspace;
use crate::io::AlgebraDocument;
use crate::lie::{CheckMode, LieAlgebra};
use crate::matrix_lie::{classical, Family};
use crate::Error;

/// Family names accepted by [`construct_family`].
pub const FAMILY_NAMES: &[&str] = &["gl", "sl", "so", "so-jd", "so-jb", "so-prime", "sp", "upper", "strict-upper", "abelian"];

/// Builds a classical family. `n` is the matrix size for `gl`, `sl`, `so`,
/// `upper`, and `strict-upper`; it is the block size for `sp`, `so-jd`
/// (`2n x 2n` matrices), and `so-jb` (`2n+1`); for `so-prime` it is `p`,
/// with `q` defaulting to `p`. For `abelian` it is the dimension.
pub fn construct_family(name: &str, n: usize, q: Option<usize>) -> Result<AlgebraDocument, Error> {
    let family = match name {
        "gl" => Family::Gl,
        "sl" => Family::Sl,
        "so" => Family::So,
        "so-jd" => Family::SoJD,
        "so-jb" => Family::SoJB,
        "so-prime" => Family::SoPrime { q: q.unwrap_or(n) },
        "sp" => Family::Sp,
        "upper" => Family::Upper,
        "strict-upper" => Family::StrictUpper,
        "abelian" => {
            let names = (0..n).map(|i| format!("x{i}")).collect();
            let alg = LieAlgebra::from_constants(names, Default::default())?;
            return Ok(AlgebraDocument::plain(alg));
        }
        other => {
            return Err(Error::Usage(format!("unknown family {other:?}; expected one of {}", FAMILY_NAMES.join(", "))))
        }
    };
    if q.is_some() && name != "so-prime" {
        return Err(Error::Usage("q applies to so-prime only".into()));
    }
    let m = classical(family, n)?;
    let alg = m.to_abstract()?;
    Ok(AlgebraDocument::from_matrix(&m, alg))
}

/// Resolves `E8`, or `A` with a separate rank, to a named Cartan matrix.
pub fn cartan_from_label(label: &str, rank: Option<usize>) -> Result<CartanMatrix, Error> {
    let (ty, inline) = parse_type_label(label)?;
    let rank = match (inline, rank) {
        (Some(a), Some(b)) if a != b => return Err(Error::Usage(format!("label {label} conflicts with rank {b}"))),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(Error::Usage(format!("type {ty} needs a rank"))),
    };
    Ok(named_cartan(ty, rank)?)
}

pub fn construct_cartan(a: &CartanMatrix) -> Result<AlgebraDocument, Error> {
    Ok(AlgebraDocument::from_chevalley(&chevalley_algebra(a)?))
}

/// Checks the axioms (full up to the sampling threshold) and marks the
/// algebra verified.
pub fn verified(doc: AlgebraDocument) -> Result<AlgebraDocument, Error> {
    let mode = CheckMode::default_for(doc.algebra.dim());
    let AlgebraDocument { algebra, cartan_indices, roots, matrix_basis } = doc;
    let algebra = algebra.verify_with(mode)?;
    Ok(AlgebraDocument { algebra, cartan_indices, roots, matrix_basis })
}

/// The explicit basis indices, or the document's `cartan_indices`.
pub fn cartan_basis(doc: &AlgebraDocument, explicit: Option<&[usize]>) -> Result<Vec<usize>, Error> {
    let idx = match (explicit, &doc.cartan_indices) {
        (Some(e), _) => e.to_vec(),
        (None, Some(c)) => c.clone(),
        (None, None) => return Err(Error::Usage("no Cartan basis given and the input has no cartan_indices".into())),
    };
    let dim = doc.algebra.dim();
    if let Some(&k) = idx.iter().find(|&&k| k >= dim) {
        return Err(Error::Usage(format!("Cartan basis index {k} out of range for dimension {dim}")));
    }
    Ok(idx)
}

/// Simple components of a split semisimple algebra, sorted by type and rank.
pub fn classify(alg: &LieAlgebra, cartan_basis: &[usize]) -> Result<Vec<(CartanType, usize)>, Error> {
    let h = alg
        .subalgebra(Subspace::coordinate(alg.dim(), cartan_basis)?)
        .map_err(|_| crate::weights::WeightError::NotSubalgebra)?;
    let mut out: Vec<_> = split_decompose(alg, &h)?.into_iter().map(|c| (c.ty, c.rank)).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(construct_family("sl", 2, None).unwrap().algebra.dim(), 3);
        assert_eq!(construct_family("sp", 2, None).unwrap().algebra.dim(), 10);
        assert_eq!(construct_family("so-prime", 2, Some(1)).unwrap().algebra.dim(), 3);
        assert_eq!(construct_family("abelian", 4, None).unwrap().algebra.dim(), 4);
        assert_eq!(construct_family("nope", 2, None).unwrap_err().status().code(), 2);
        assert_eq!(construct_family("sl", 0, None).unwrap_err().status().code(), 2);
    }

    #[test]
    fn labels() {
        assert_eq!(cartan_from_label("E8", None).unwrap().rank(), 8);
        assert_eq!(cartan_from_label("A", Some(3)).unwrap().rank(), 3);
        assert_eq!(cartan_from_label("A", None).unwrap_err().status().code(), 2);
        assert_eq!(cartan_from_label("E9", None).unwrap_err().status().code(), 2);
    }

    #[test]
    fn classify_sl3() {
        let doc = construct_family("sl", 3, None).unwrap();
        // H1, H2 sit after the three strictly upper units
        assert_eq!(classify(&doc.algebra, &[3, 4]).unwrap(), [(CartanType::A, 2)]);
        let t2 = construct_family("upper", 2, None).unwrap();
        assert_eq!(classify(&t2.algebra, &[0, 2]).unwrap_err().status().code(), 6);
    }
}
