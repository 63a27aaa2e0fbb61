use std::collections::{BTreeMap, HashMap};

use crate::exactlin::{is_zero_vector, Scalar, Vector};
use crate::lie::{CheckMode, LieAlgebra, LieError, LieSubspace, SparseVec};

use super::roots::{height, roots_from_cartan};
use super::{CartanError, CartanMatrix, RootSystem};

/// A split semisimple algebra on a Chevalley basis.
///
/// Basis order: `e_α` for positive roots (root order), then `h_1..h_l`,
/// then `e_-α` in the same root order. Names are `e[c1,..]`, `h{i}`,
/// `f[c1,..]` with 1-based `i`.
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    pub cartan: CartanMatrix,
    pub roots: RootSystem,
    pub algebra: LieAlgebra,
    pub cartan_indices: Vec<usize>,
    /// Basis index of `e_α` for every root `α`, positive and negative.
    pub root_index: BTreeMap<Vec<i64>, usize>,
}

impl ChevalleyAlgebra {
    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Basis index of `E_i = e_(α_i)`.
    pub fn e(&self, i: usize) -> usize {
        i
    }

    /// Basis index of `F_i = e_(-α_i)`.
    pub fn f(&self, i: usize) -> usize {
        self.roots.positive().len() + self.rank() + i
    }

    /// Basis index of `H_i`.
    pub fn h(&self, i: usize) -> usize {
        self.cartan_indices[i]
    }

    /// The span of `h_1..h_l`.
    pub fn cartan_subalgebra(&self) -> LieSubspace {
        self.algebra.coordinate_subalgebra(&self.cartan_indices).expect("h-span is a subalgebra")
    }

    /// Root of a basis vector, if it is a root vector.
    pub fn root_of(&self, index: usize) -> Option<Vec<i64>> {
        let n = self.roots.positive().len();
        let l = self.rank();
        if index < n {
            Some(self.roots.positive()[index].clone())
        } else if index >= n + l && index < 2 * n + l {
            Some(self.roots.positive()[index - n - l].iter().map(|x| -x).collect())
        } else {
            None
        }
    }
}

fn neg(r: &[i64]) -> Vec<i64> {
    r.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_positive(r: &[i64]) -> bool {
    r.iter().any(|&x| x > 0)
}

/// Structure constants `N_{r,s}` with `[e_r, e_s] = N_{r,s} e_{r+s}`.
struct Constants<'a> {
    roots: &'a RootSystem,
    /// `(α, β) = Σ x_i y_j d_i A_ij`.
    form: Vec<Vec<i64>>,
    positive: HashMap<(usize, usize), i64>,
}

impl Constants<'_> {
    fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                s += xi * yj * self.form[i][j];
            }
        }
        s
    }

    fn is_root(&self, r: &[i64]) -> bool {
        r.iter().any(|&x| x != 0) && self.roots.contains(r)
    }

    /// Largest `p` with `s - p r` a root.
    fn string_down(&self, r: &[i64], s: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur = s.to_vec();
        loop {
            cur = sub(&cur, r);
            if self.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// `N_{r,s}` for roots with `r + s` a root, reduced to positive pairs by
    /// `N_{-r,-s} = -N_{r,s}` and, for `r + s + t = 0`,
    /// `N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s)`.
    fn n(&self, r: &[i64], s: &[i64]) -> i64 {
        let (rp, sp) = (is_positive(r), is_positive(s));
        if rp && sp {
            let a = self.roots.positive_index(r).expect("positive root");
            let b = self.roots.positive_index(s).expect("positive root");
            return *self.positive.get(&(a, b)).unwrap_or_else(|| panic!("N undefined for {r:?}, {s:?}"));
        }
        if !rp && !sp {
            return -self.n(&neg(r), &neg(s));
        }
        let t = neg(&add(r, s));
        let tt = self.inner(&t, &t);
        let (num, den) = if is_positive(&t) == rp {
            (tt * self.n(&t, r), self.inner(s, s))
        } else {
            (tt * self.n(s, &t), self.inner(r, r))
        };
        assert_eq!(num % den, 0, "non-integral structure constant");
        num / den
    }
}

fn compute_constants<'a>(a: &CartanMatrix, roots: &'a RootSystem, d: &[i64]) -> Result<Constants<'a>, CartanError> {
    let l = a.rank();
    let form = (0..l).map(|i| (0..l).map(|j| d[i] * a.entry(i, j)).collect()).collect();
    let mut c = Constants { roots, form, positive: HashMap::new() };
    let pos = roots.positive();
    for (xi_idx, xi) in pos.iter().enumerate() {
        if height(xi) < 2 {
            continue;
        }
        // special pairs (α, β): α + β = ξ, α before β in root order
        let mut special: Vec<(usize, usize)> = Vec::new();
        for (ai, alpha) in pos[..xi_idx].iter().enumerate() {
            if let Some(bi) = roots.positive_index(&sub(xi, alpha)) {
                if ai < bi {
                    special.push((ai, bi));
                }
            }
        }
        let &(a1, b1) = special.first().expect("non-simple root has a special pair");
        let (ap, bp) = (pos[a1].clone(), pos[b1].clone());
        let n1 = c.string_down(&ap, &bp) + 1;
        c.positive.insert((a1, b1), n1);
        c.positive.insert((b1, a1), -n1);
        let xx = c.inner(xi, xi);
        for &(ai, bi) in &special[1..] {
            let (alpha, beta) = (&pos[ai], &pos[bi]);
            let mut num = 0i64;
            let mut den = 1i64;
            let mut add_term = |p: i64, q: i64| {
                // num/den += p/q
                num = num * q + p * den;
                den *= q;
            };
            let b_minus = sub(beta, &ap);
            if c.is_root(&b_minus) {
                let p = c.n(beta, &neg(&ap)) * c.n(alpha, &neg(&bp));
                add_term(p, c.inner(&b_minus, &b_minus));
            }
            let a_minus = sub(alpha, &ap);
            if c.is_root(&a_minus) {
                let p = c.n(&neg(&ap), alpha) * c.n(beta, &neg(&bp));
                add_term(p, c.inner(&a_minus, &a_minus));
            }
            let total_num = xx * num;
            let total_den = n1 * den;
            if total_num % total_den != 0 {
                return Err(LieError::Defect(format!("non-integral N for roots {alpha:?}, {beta:?}")).into());
            }
            let value = total_num / total_den;
            let expect = c.string_down(alpha, beta) + 1;
            if value.abs() != expect || value.abs() > 3 {
                return Err(LieError::Defect(format!(
                    "|N| = {} for roots {alpha:?}, {beta:?}, expected {expect}",
                    value.abs()
                ))
                .into());
            }
            c.positive.insert((ai, bi), value);
            c.positive.insert((bi, ai), -value);
        }
    }
    Ok(c)
}

fn root_name(prefix: char, r: &[i64]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.abs().to_string()).collect();
    format!("{prefix}[{}]", parts.join(","))
}

/// The Chevalley-basis algebra of a finite-type Cartan matrix, verified
/// with the default axiom check for its dimension.
pub fn chevalley_algebra(a: &CartanMatrix) -> Result<ChevalleyAlgebra, CartanError> {
    let roots = roots_from_cartan(a)?;
    let mode = CheckMode::default_for(a.rank() + roots.len());
    chevalley_algebra_with(a, mode)
}

/// As [`chevalley_algebra`] with an explicit axiom-check mode.
///
/// Signs: on each extraspecial pair `(α', ξ - α')`, with `α'` the first
/// simple root such that `ξ - α'` is a root, `N = +(p + 1)`; every other
/// constant follows from the antisymmetry and Jacobi identities.
pub fn chevalley_algebra_with(a: &CartanMatrix, mode: CheckMode) -> Result<ChevalleyAlgebra, CartanError> {
    let report = a.require_finite()?;
    let d: Vec<i64> =
        report.symmetrizer.expect("finite type").iter().map(|x| x.to_i64().expect("small integer")).collect();
    let roots = roots_from_cartan(a)?;
    let consts = compute_constants(a, &roots, &d)?;
    let l = a.rank();
    let n = roots.positive().len();
    let dim = 2 * n + l;

    let mut root_index = BTreeMap::new();
    let mut names = Vec::with_capacity(dim);
    for (k, r) in roots.positive().iter().enumerate() {
        root_index.insert(r.clone(), k);
        names.push(root_name('e', r));
    }
    names.extend((0..l).map(|i| format!("h{}", i + 1)));
    for (k, r) in roots.positive().iter().enumerate() {
        root_index.insert(neg(r), n + l + k);
        names.push(root_name('f', r));
    }
    let cartan_indices: Vec<usize> = (n..n + l).collect();

    let root_at = |idx: usize| -> Option<Vec<i64>> {
        if idx < n {
            Some(roots.positive()[idx].clone())
        } else if idx >= n + l {
            Some(neg(&roots.positive()[idx - n - l]))
        } else {
            None
        }
    };
    // coroot h_α in the h_i basis, for α positive
    let coroot = |r: &[i64]| -> SparseVec {
        let rr = consts.inner(r, r);
        (0..l)
            .filter(|&j| r[j] != 0)
            .map(|j| (n + j, Scalar::frac(r[j] * 2 * d[j], rr)))
            .collect()
    };

    let mut constants: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    for x in 0..dim {
        for y in x + 1..dim {
            let value: SparseVec = match (root_at(x), root_at(y)) {
                (None, None) => Vec::new(),
                (None, Some(s)) => {
                    let c = a.pairing(&s, x - n);
                    if c == 0 { Vec::new() } else { vec![(y, Scalar::from_int(c))] }
                }
                (Some(r), None) => {
                    let c = a.pairing(&r, y - n);
                    if c == 0 { Vec::new() } else { vec![(x, Scalar::from_int(-c))] }
                }
                (Some(r), Some(s)) => {
                    let sum = add(&r, &s);
                    if sum.iter().all(|&v| v == 0) {
                        if is_positive(&r) {
                            coroot(&r)
                        } else {
                            coroot(&s).into_iter().map(|(k, c)| (k, -c)).collect()
                        }
                    } else if consts.is_root(&sum) {
                        vec![(root_index[&sum], Scalar::from_int(consts.n(&r, &s)))]
                    } else {
                        Vec::new()
                    }
                }
            };
            if !value.is_empty() {
                constants.insert((x, y), value);
            }
        }
    }
    let algebra = LieAlgebra::from_constants(names, constants)?;
    let algebra = algebra.verify_with(mode).map_err(|e| match e {
        LieError::Axiom { triple, failures } => {
            LieError::Defect(format!("constructed constants fail Jacobi at {triple:?} ({failures} triples)"))
        }
        other => other,
    })?;
    Ok(ChevalleyAlgebra { cartan: a.clone(), roots, algebra, cartan_indices, root_index })
}

/// `ad(b_x)^k (b_y)`.
pub fn ad_power(alg: &LieAlgebra, x: usize, k: usize, y: usize) -> Vector {
    let bx = alg.basis_vector(x);
    let mut v = alg.basis_vector(y);
    for _ in 0..k {
        if is_zero_vector(&v) {
            break;
        }
        v = alg.bracket(&bx, &v).expect("same dimension");
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SerreReport {
    pub relations_checked: usize,
    pub violations: Vec<String>,
}

impl SerreReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the seven relation families on `E_i`, `F_i`, `H_i`:
/// `[H_i,H_j] = 0`, `[E_i,F_i] = H_i`, `[E_i,F_j] = 0` (`i ≠ j`),
/// `[H_i,E_j] = A_ij E_j`, `[H_i,F_j] = -A_ij F_j`, and
/// `ad(E_i)^(1-A_ij) E_j = 0 = ad(F_i)^(1-A_ij) F_j` (`i ≠ j`).
pub fn verify_serre(c: &ChevalleyAlgebra) -> SerreReport {
    let alg = &c.algebra;
    let l = c.rank();
    let dim = alg.dim();
    let mut report = SerreReport::default();
    let basis = |i: usize| alg.basis_vector(i);
    let scaled = |i: usize, s: i64| -> Vector {
        let mut v = vec![Scalar::ZERO; dim];
        v[i] = Scalar::from_int(s);
        v
    };
    let br = |x: usize, y: usize| alg.bracket(&basis(x), &basis(y)).expect("same dimension");
    let mut check = |ok: bool, what: String| {
        report.relations_checked += 1;
        if !ok {
            report.violations.push(what);
        }
    };
    for i in 0..l {
        for j in 0..l {
            let (i1, j1) = (i + 1, j + 1);
            check(is_zero_vector(&br(c.h(i), c.h(j))), format!("[H{i1},H{j1}] != 0"));
            if i == j {
                check(br(c.e(i), c.f(i)) == basis(c.h(i)), format!("[E{i1},F{i1}] != H{i1}"));
            } else {
                check(is_zero_vector(&br(c.e(i), c.f(j))), format!("[E{i1},F{j1}] != 0"));
            }
            let aij = c.cartan.entry(i, j);
            check(br(c.h(i), c.e(j)) == scaled(c.e(j), aij), format!("[H{i1},E{j1}] != A{i1}{j1} E{j1}"));
            check(br(c.h(i), c.f(j)) == scaled(c.f(j), -aij), format!("[H{i1},F{j1}] != -A{i1}{j1} F{j1}"));
            if i != j {
                let k = (1 - aij) as usize;
                check(
                    is_zero_vector(&ad_power(alg, c.e(i), k, c.e(j))),
                    format!("ad(E{i1})^{k} E{j1} != 0"),
                );
                check(
                    is_zero_vector(&ad_power(alg, c.f(i), k, c.f(j))),
                    format!("ad(F{i1})^{k} F{j1} != 0"),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::super::{catalogue, named_cartan, CartanType};
    use super::*;
    use crate::lie::testing::sl2;

    fn build(t: CartanType, l: usize) -> ChevalleyAlgebra {
        chevalley_algebra(&named_cartan(t, l).unwrap()).unwrap()
    }

    #[test]
    fn a1_is_sl2() {
        let c = build(CartanType::A, 1);
        assert_eq!(c.algebra.basis_names(), ["e[1]", "h1", "f[1]"]);
        // (e, h, f) constants match sl(2) on (E, H, F) exactly
        let s = sl2();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(c.algebra.basis_bracket(i, j), s.basis_bracket(i, j));
            }
        }
    }

    #[test]
    fn dimensions() {
        let dim = |t, l| build(t, l).dim();
        assert_eq!(dim(CartanType::G, 2), 14);
        assert_eq!(dim(CartanType::F, 4), 52);
        assert_eq!(dim(CartanType::A, 3), 15);
        assert_eq!(dim(CartanType::B, 3), 21);
    }

    #[test]
    fn small_families_fully_checked() {
        for (t, l) in catalogue() {
            let a = named_cartan(t, l).unwrap();
            let n = roots_from_cartan(&a).unwrap().len() + l;
            if n > 60 {
                continue;
            }
            let c = chevalley_algebra_with(&a, CheckMode::Full).unwrap();
            assert!(c.algebra.check_axioms(CheckMode::Full).passed(), "{t}{l}");
            assert!(verify_serre(&c).passed(), "{t}{l}");
        }
    }

    #[test]
    fn g2_serre_exponents() {
        let c = build(CartanType::G, 2);
        let alg = &c.algebra;
        // A_21 = -3: ad(E2)^4 E1 = 0 and ad(E2)^3 E1 != 0
        assert!(is_zero_vector(&ad_power(alg, c.e(1), 4, c.e(0))));
        assert!(!is_zero_vector(&ad_power(alg, c.e(1), 3, c.e(0))));
        // A_12 = -1: ad(E1)^2 E2 = 0 and ad(E1) E2 != 0
        assert!(is_zero_vector(&ad_power(alg, c.e(0), 2, c.e(1))));
        assert!(!is_zero_vector(&ad_power(alg, c.e(0), 1, c.e(1))));
        let r = verify_serre(&c);
        assert!(r.passed());
        assert_eq!(r.relations_checked, 4 * 3 + 2 * 4);
    }

    #[test]
    fn a1_serre_has_no_off_diagonal() {
        let r = verify_serre(&build(CartanType::A, 1));
        assert!(r.passed());
        assert_eq!(r.relations_checked, 4);
    }

    #[test]
    fn structure_constants_bounded() {
        for (t, l) in [(CartanType::G, 2), (CartanType::F, 4), (CartanType::B, 3), (CartanType::C, 3)] {
            let c = build(t, l);
            for ((i, j), v) in c.algebra.constants() {
                assert!(v.iter().all(|(_, x)| x.is_integer()), "{t}{l}");
                let (Some(r), Some(s)) = (c.root_of(i), c.root_of(j)) else { continue };
                if r.iter().zip(&s).any(|(a, b)| a + b != 0) {
                    assert_eq!(v.len(), 1);
                    assert!(v[0].1.abs() <= Scalar::from_int(3), "{t}{l}: {}", v[0].1);
                }
            }
        }
    }

    #[test]
    fn rejects_non_finite() {
        let a = CartanMatrix::new(vec![vec![2, -1], vec![-4, 2]]).unwrap();
        assert_eq!(chevalley_algebra(&a).unwrap_err(), CartanError::NotFiniteType);
    }

    #[test]
    fn chevalley_is_semisimple() {
        for (t, l) in [(CartanType::A, 2), (CartanType::G, 2), (CartanType::C, 3)] {
            let c = build(t, l);
            assert!(c.algebra.is_semisimple().unwrap());
            assert_eq!(c.algebra.killing_form().rank(), c.dim());
        }
    }
}
