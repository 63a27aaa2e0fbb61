//! JSON formats for algebras, Cartan matrices, and weight tables.
//!
//! Rationals are strings `"p/q"` in lowest terms with `q > 0`, or `"p"`
//! when `q = 1`. Object keys come out sorted, so equal inputs serialise to
//! identical bytes.
//!
//! Algebra: `{"basis": [names], "bracket": {"i,j": [[k, "c"], ...]}, "dim": n}`
//! with `i < j`, `k` ascending, and zero coefficients omitted. Optional
//! fields: `"cartan_indices"` (basis indices of `h_1..h_l`), `"roots"`
//! (`[{"index": k, "root": [c1, ...]}]` for every root vector), and
//! `"matrix_basis"` (one matrix of rationals per basis element).

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cartan::{CartanError, CartanMatrix, ChevalleyAlgebra};
use crate::exactlin::{LinError, Matrix, Scalar};
use crate::lie::{LieAlgebra, LieError, SparseVec};
use crate::matrix_lie::MatrixLieAlgebra;
use crate::weights::WeightSpaceResult;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Format(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(p) => message[..p].to_string(),
            None => message,
        };
        IoError::Json { line: e.line(), column: e.column(), message }
    }
}

fn format_err(msg: impl Into<String>) -> IoError {
    IoError::Format(msg.into())
}

/// An algebra read from JSON, with whatever optional fields were present.
/// The algebra is not yet checked against the axioms.
#[derive(Debug, Clone)]
pub struct AlgebraDocument {
    pub algebra: LieAlgebra,
    pub cartan_indices: Option<Vec<usize>>,
    pub roots: Option<Vec<(usize, Vec<i64>)>>,
    pub matrix_basis: Option<Vec<Matrix>>,
}

impl AlgebraDocument {
    pub fn plain(algebra: LieAlgebra) -> Self {
        AlgebraDocument { algebra, cartan_indices: None, roots: None, matrix_basis: None }
    }

    pub fn from_chevalley(c: &ChevalleyAlgebra) -> Self {
        let roots = (0..c.dim()).filter_map(|k| c.root_of(k).map(|r| (k, r))).collect();
        AlgebraDocument {
            algebra: c.algebra.clone(),
            cartan_indices: Some(c.cartan_indices.clone()),
            roots: Some(roots),
            matrix_basis: None,
        }
    }

    pub fn from_matrix(m: &MatrixLieAlgebra, algebra: LieAlgebra) -> Self {
        AlgebraDocument { algebra, cartan_indices: None, roots: None, matrix_basis: Some(m.basis().to_vec()) }
    }

    pub fn to_value(&self) -> Value {
        let mut obj = Map::new();
        let alg = &self.algebra;
        obj.insert("dim".into(), json!(alg.dim()));
        obj.insert("basis".into(), json!(alg.basis_names()));
        let mut bracket = Map::new();
        for ((i, j), v) in alg.constants() {
            if v.is_empty() {
                continue;
            }
            let terms: Vec<Value> = v.iter().map(|(k, c)| json!([k, c.to_string()])).collect();
            bracket.insert(format!("{i},{j}"), Value::Array(terms));
        }
        obj.insert("bracket".into(), Value::Object(bracket));
        if let Some(ci) = &self.cartan_indices {
            obj.insert("cartan_indices".into(), json!(ci));
        }
        if let Some(roots) = &self.roots {
            let list: Vec<Value> = roots.iter().map(|(k, r)| json!({"index": k, "root": r})).collect();
            obj.insert("roots".into(), Value::Array(list));
        }
        if let Some(mb) = &self.matrix_basis {
            obj.insert("matrix_basis".into(), Value::Array(mb.iter().map(matrix_value).collect()));
        }
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let value: Value = serde_json::from_str(text)?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self, IoError> {
        let obj = value.as_object().ok_or_else(|| format_err("top level must be an object"))?;
        let basis = obj.get("basis").ok_or_else(|| format_err("missing \"basis\""))?;
        let names: Vec<String> = basis
            .as_array()
            .ok_or_else(|| format_err("\"basis\" must be an array"))?
            .iter()
            .map(|n| n.as_str().map(str::to_string).ok_or_else(|| format_err("basis names must be strings")))
            .collect::<Result<_, _>>()?;
        let dim = names.len();
        if let Some(d) = obj.get("dim") {
            let d = d.as_u64().ok_or_else(|| format_err("\"dim\" must be a non-negative integer"))?;
            if d as usize != dim {
                return Err(format_err(format!("\"dim\" is {d} but \"basis\" has {dim} names")));
            }
        }
        let mut constants: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        if let Some(b) = obj.get("bracket") {
            let b = b.as_object().ok_or_else(|| format_err("\"bracket\" must be an object"))?;
            for (key, terms) in b {
                let (i, j) = parse_pair_key(key)?;
                let terms = terms.as_array().ok_or_else(|| format_err(format!("bracket {key:?} must be an array")))?;
                let mut v = SparseVec::new();
                for t in terms {
                    let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                        format_err(format!("bracket {key:?}: each term must be [index, coefficient]"))
                    })?;
                    let k = pair[0]
                        .as_u64()
                        .ok_or_else(|| format_err(format!("bracket {key:?}: index must be a non-negative integer")))?;
                    let c = scalar_from_value(&pair[1])?;
                    if !c.is_zero() {
                        v.push((k as usize, c));
                    }
                }
                if !v.is_empty() {
                    constants.insert((i, j), v);
                }
            }
        }
        let algebra = LieAlgebra::from_constants(names, constants)?;
        let cartan_indices = match obj.get("cartan_indices") {
            None => None,
            Some(v) => Some(index_list(v, dim, "cartan_indices")?),
        };
        let roots = match obj.get("roots") {
            None => None,
            Some(v) => Some(parse_roots(v, dim)?),
        };
        let matrix_basis = match obj.get("matrix_basis") {
            None => None,
            Some(v) => {
                let list = v.as_array().ok_or_else(|| format_err("\"matrix_basis\" must be an array"))?;
                if list.len() != dim {
                    return Err(format_err(format!("\"matrix_basis\" has {} matrices, expected {dim}", list.len())));
                }
                Some(list.iter().map(matrix_from_value).collect::<Result<_, _>>()?)
            }
        };
        Ok(AlgebraDocument { algebra, cartan_indices, roots, matrix_basis })
    }
}

fn parse_pair_key(key: &str) -> Result<(usize, usize), IoError> {
    let bad = || format_err(format!("bracket key {key:?} must have the form \"i,j\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i = a.trim().parse().map_err(|_| bad())?;
    let j = b.trim().parse().map_err(|_| bad())?;
    Ok((i, j))
}

fn index_list(v: &Value, dim: usize, field: &str) -> Result<Vec<usize>, IoError> {
    let list = v.as_array().ok_or_else(|| format_err(format!("\"{field}\" must be an array")))?;
    list.iter()
        .map(|x| match x.as_u64() {
            Some(k) if (k as usize) < dim => Ok(k as usize),
            _ => Err(format_err(format!("\"{field}\" entries must be basis indices below {dim}"))),
        })
        .collect()
}

fn parse_roots(v: &Value, dim: usize) -> Result<Vec<(usize, Vec<i64>)>, IoError> {
    let bad = || format_err("\"roots\" entries must be {\"index\": k, \"root\": [integers]}");
    let list = v.as_array().ok_or_else(bad)?;
    list.iter()
        .map(|e| {
            let k = e.get("index").and_then(Value::as_u64).filter(|&k| (k as usize) < dim).ok_or_else(bad)?;
            let r = e
                .get("root")
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|c| c.as_i64().ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((k as usize, r))
        })
        .collect()
}

/// Accepts a rational string or a JSON integer.
pub fn scalar_from_value(v: &Value) -> Result<Scalar, IoError> {
    match v {
        Value::String(s) => s.parse().map_err(|e: LinError| format_err(e.to_string())),
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(Scalar::from_int(k)),
            None => Err(format_err(format!("number {n} is not an integer; write rationals as strings"))),
        },
        _ => Err(format_err(format!("expected a rational, found {v}"))),
    }
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect())).collect(),
    )
}

pub fn matrix_from_value(v: &Value) -> Result<Matrix, IoError> {
    let rows = v.as_array().ok_or_else(|| format_err("a matrix must be an array of rows"))?;
    let rows: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| format_err("a matrix row must be an array"))?
                .iter()
                .map(scalar_from_value)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows_with_cols(rows, cols).map_err(|e| format_err(e.to_string()))
}

pub fn cartan_to_json(a: &CartanMatrix) -> String {
    json!({"rank": a.rank(), "entries": a.entries()}).to_string()
}

/// Reads `{"rank": l, "entries": [[...]]}`. Only the shape is checked here;
/// the Cartan conditions are left to the caller.
pub fn cartan_from_json(text: &str) -> Result<CartanMatrix, IoError> {
    let value: Value = serde_json::from_str(text)?;
    let entries = value.get("entries").and_then(Value::as_array).ok_or_else(|| format_err("missing \"entries\""))?;
    let entries: Vec<Vec<i64>> = entries
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| format_err("Cartan rows must be arrays"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| format_err("Cartan entries must be integers")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if let Some(r) = value.get("rank") {
        let r = r.as_u64().ok_or_else(|| format_err("\"rank\" must be a non-negative integer"))?;
        if r as usize != entries.len() {
            return Err(format_err(format!("\"rank\" is {r} but there are {} rows", entries.len())));
        }
    }
    Ok(CartanMatrix::new(entries)?)
}

pub fn weights_to_json(table: &[WeightSpaceResult]) -> String {
    let list: Vec<Value> = table
        .iter()
        .map(|w| {
            let chi: Vec<String> = w.chi.values().iter().map(Scalar::to_string).collect();
            json!({"chi": chi, "dim": w.space.dim()})
        })
        .collect();
    json!({ "weights": list }).to_string()
}
