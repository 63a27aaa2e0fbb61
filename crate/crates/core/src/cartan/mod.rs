//! Cartan matrices, root systems, Chevalley bases, Serre relations, Dynkin
//! diagrams, and recognition of split semisimple algebras.
//!
//! Convention: `A_ij = <α_j, α_i^∨> = 2(α_i, α_j) / (α_i, α_i)`, so that
//! `[H_i, E_j] = A_ij E_j` and `ad(E_i)^(1 - A_ij) E_j = 0`. An entry
//! `A_ij = -2` or `-3` therefore marks node `i` as the shorter root.
//!
//! Node numbering (1-based) for the named families:
//! - `A_l`: the path `1 - 2 - ... - l`.
//! - `B_l`: the same path, node `l` short.
//! - `C_l`: the same path, node `l` long.
//! - `D_l`: the path `1 - ... - (l-1)` plus an edge `(l-2) - l`.
//! - `E_l`: the path `1 - 3 - 4 - ... - l` plus an edge `2 - 4`.
//! - `F_4`: `[[2,-1,0,0],[-1,2,-2,0],[0,-1,2,-1],[0,0,-1,2]]`.
//! - `G_2`: `[[2,-1],[-3,2]]`.

mod chevalley;
mod classify;
mod dynkin;
mod roots;

pub use chevalley::{ad_power, chevalley_algebra, chevalley_algebra_with, verify_serre, ChevalleyAlgebra, SerreReport};
pub use classify::{split_decompose, SimpleComponent};
pub use dynkin::{dynkin, recognize, render_dynkin, DiagramFormat, DynkinDiagram, DynkinEdge, Recognized};
pub use roots::{height, reflection_closure, roots_from_cartan, RootSystem};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactlin::{LinError, Matrix, Scalar};
use crate::lie::LieError;
use crate::weights::WeightError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("invalid rank {rank} for type {ty}")]
    InvalidRank { ty: CartanType, rank: usize },
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("invalid Cartan matrix: {0}")]
    Invalid(String),
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("H is not a splitting Cartan subalgebra: {0}")]
    NotSplitting(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E => "E",
            CartanType::F => "F",
            CartanType::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for CartanType {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            _ => Err(CartanError::UnknownType(s.to_string())),
        }
    }
}

/// Splits labels such as `E8`, `A`, or `b3` into a type and optional rank.
pub fn parse_type_label(label: &str) -> Result<(CartanType, Option<usize>), CartanError> {
    let label = label.trim();
    let mut chars = label.chars();
    let head = chars.next().ok_or_else(|| CartanError::UnknownType(label.to_string()))?;
    let ty: CartanType = head.to_string().parse()?;
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok((ty, None));
    }
    let rank = rest.parse().map_err(|_| CartanError::UnknownType(label.to_string()))?;
    Ok((ty, Some(rank)))
}

/// A square integer matrix; the generalised Cartan matrix conditions are
/// checked by [`validate_cartan`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let l = entries.len();
        if l == 0 {
            return Err(CartanError::Invalid("empty matrix".into()));
        }
        if let Some(r) = entries.iter().position(|row| row.len() != l) {
            return Err(CartanError::Invalid(format!("row {r} has length {}, expected {l}", entries[r].len())));
        }
        Ok(CartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `<α, α_i^∨> = Σ_j c_j A_ij` for `α = Σ_j c_j α_j`.
    pub fn pairing(&self, coords: &[i64], i: usize) -> i64 {
        coords.iter().zip(&self.entries[i]).map(|(c, a)| c * a).sum()
    }

    pub fn transpose(&self) -> CartanMatrix {
        let l = self.rank();
        CartanMatrix { entries: (0..l).map(|i| (0..l).map(|j| self.entries[j][i]).collect()).collect() }
    }

    /// Block-diagonal union.
    pub fn direct_sum(&self, other: &CartanMatrix) -> CartanMatrix {
        let (a, b) = (self.rank(), other.rank());
        let mut entries = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            entries[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            entries[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        CartanMatrix { entries }
    }

    /// Fails unless the matrix is a generalised Cartan matrix of finite type.
    pub fn require_finite(&self) -> Result<CartanReport, CartanError> {
        let report = validate_cartan(self);
        if let Some(e) = report.shape_errors.first() {
            return Err(CartanError::Invalid(e.clone()));
        }
        if !report.finite_type {
            return Err(CartanError::NotFiniteType);
        }
        Ok(report)
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

fn path_matrix(l: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; l]; l];
    for i in 0..l {
        m[i][i] = 2;
        if i + 1 < l {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

/// The Cartan matrix of a catalogue type; see the module docs for node
/// numbering. `D_2` and `D_3` are accepted and coincide with `A_1 x A_1`
/// and `A_3`.
pub fn named_cartan(ty: CartanType, rank: usize) -> Result<CartanMatrix, CartanError> {
    let invalid = Err(CartanError::InvalidRank { ty, rank });
    let l = rank;
    let entries = match ty {
        CartanType::A if l >= 1 => path_matrix(l),
        CartanType::B if l >= 2 => {
            let mut m = path_matrix(l);
            m[l - 1][l - 2] = -2;
            m
        }
        CartanType::C if l >= 2 => {
            let mut m = path_matrix(l);
            m[l - 2][l - 1] = -2;
            m
        }
        CartanType::D if l >= 2 => {
            let mut m = path_matrix(l);
            m[l - 1][l - 2] = 0;
            m[l - 2][l - 1] = 0;
            if l >= 3 {
                m[l - 3][l - 1] = -1;
                m[l - 1][l - 3] = -1;
            }
            m
        }
        CartanType::E if (6..=8).contains(&l) => {
            let mut m = vec![vec![0; l]; l];
            let mut edge = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            edge(1, 3);
            edge(2, 4);
            for k in 3..l {
                edge(k, k + 1);
            }
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            m
        }
        CartanType::F if l == 4 => vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]],
        CartanType::G if l == 2 => vec![vec![2, -1], vec![-3, 2]],
        _ => return invalid,
    };
    Ok(CartanMatrix { entries })
}

/// Every catalogue entry at the ranks used by the round-trip checks.
pub fn catalogue() -> Vec<(CartanType, usize)> {
    use CartanType::*;
    let mut out = Vec::new();
    out.extend((1..=8).map(|l| (A, l)));
    out.extend((2..=8).map(|l| (B, l)));
    out.extend((3..=8).map(|l| (C, l)));
    out.extend((4..=8).map(|l| (D, l)));
    out.extend([(E, 6), (E, 7), (E, 8), (F, 4), (G, 2)]);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanReport {
    /// Violations of `A_ii = 2`, `A_ij <= 0`, and `A_ij = 0 ⇔ A_ji = 0`.
    pub shape_errors: Vec<String>,
    /// Positive `d` with `d_i A_ij = d_j A_ji`, integral and primitive on
    /// each connected component; `None` if no such `d` exists.
    pub symmetrizer: Option<Vec<Scalar>>,
    /// Leading principal minors of `DA`.
    pub minors: Vec<Scalar>,
    pub finite_type: bool,
}

impl CartanReport {
    pub fn is_valid(&self) -> bool {
        self.shape_errors.is_empty()
    }
}

fn symmetrizer(a: &CartanMatrix) -> Option<Vec<Scalar>> {
    let l = a.rank();
    let mut d: Vec<Option<Scalar>> = vec![None; l];
    for start in 0..l {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Scalar::ONE);
        let mut component = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..l {
                if i == j || a.entry(i, j) == 0 {
                    continue;
                }
                let dj = &(&di * &Scalar::from_int(a.entry(i, j))) / &Scalar::from_int(a.entry(j, i));
                match &d[j] {
                    Some(existing) if *existing != dj => return None,
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        // scale to the smallest positive integer vector on this component
        let lcm = component.iter().fold(num_bigint::BigInt::from(1), |acc, &i| {
            num_integer::Integer::lcm(&acc, &d[i].as_ref().expect("visited").denom())
        });
        let scale = Scalar::from_big(lcm, num_bigint::BigInt::from(1)).expect("nonzero");
        let scaled: Vec<Scalar> = component.iter().map(|&i| d[i].as_ref().expect("visited") * &scale).collect();
        let g = scaled.iter().fold(num_bigint::BigInt::from(0), |acc, x| num_integer::Integer::gcd(&acc, &x.numer()));
        let g = Scalar::from_big(g, num_bigint::BigInt::from(1)).expect("nonzero");
        for (&i, x) in component.iter().zip(scaled) {
            d[i] = Some(&x / &g);
        }
    }
    d.into_iter().collect()
}

pub fn validate_cartan(a: &CartanMatrix) -> CartanReport {
    let l = a.rank();
    let mut shape_errors = Vec::new();
    for i in 0..l {
        if a.entry(i, i) != 2 {
            shape_errors.push(format!("diagonal entry ({i},{i}) is {}, expected 2", a.entry(i, i)));
        }
        for j in 0..l {
            if i == j {
                continue;
            }
            if a.entry(i, j) > 0 {
                shape_errors.push(format!("off-diagonal entry ({i},{j}) = {} is positive", a.entry(i, j)));
            }
            if (a.entry(i, j) == 0) != (a.entry(j, i) == 0) {
                shape_errors.push(format!("entries ({i},{j}) and ({j},{i}) are not simultaneously zero"));
            }
        }
    }
    if !shape_errors.is_empty() {
        return CartanReport { shape_errors, symmetrizer: None, minors: Vec::new(), finite_type: false };
    }
    let Some(d) = symmetrizer(a) else {
        return CartanReport { shape_errors, symmetrizer: None, minors: Vec::new(), finite_type: false };
    };
    let da = Matrix::from_rows(
        (0..l).map(|i| (0..l).map(|j| &d[i] * &Scalar::from_int(a.entry(i, j))).collect()).collect(),
    )
    .expect("square");
    let mut minors = Vec::with_capacity(l);
    for k in 1..=l {
        let sub = Matrix::from_rows((0..k).map(|i| (0..k).map(|j| da[(i, j)].clone()).collect()).collect())
            .expect("square");
        minors.push(sub.determinant().expect("square"));
    }
    let finite_type = minors.iter().all(Scalar::is_positive);
    CartanReport { shape_errors, symmetrizer: Some(d), minors, finite_type }
}
