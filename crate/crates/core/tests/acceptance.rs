//! Acceptance gate: one line per criterion, with the time limit pinned
//! beside each check. Exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use liekit::cartan::{
    catalogue, chevalley_algebra, dynkin, named_cartan, recognize, reflection_closure, roots_from_cartan,
    split_decompose, verify_serre, CartanMatrix, CartanType, ChevalleyAlgebra, Recognized,
};
use liekit::exactlin::{is_zero_vector, vec_add, Matrix, Scalar, Subspace, Vector};
use liekit::freelie::{free_bracket, graded_dimension, lift, lyndon_words, FreeLieElement};
use liekit::lie::{CheckMode, LieAlgebra, LieSubspace, SparseVec};
use liekit::matrix_lie::{
    classical, j_matrix, jb_matrix, jd_matrix, matrix_bracket, skew_adjoint_algebra, so_prime_matrix, Family,
};
use liekit::weights::{root_product_check, root_spaces, WeightFunction};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn matrix_algebra(f: Family, n: usize) -> LieAlgebra {
    classical(f, n).unwrap().to_abstract().unwrap()
}

fn chevalley(t: CartanType, l: usize) -> ChevalleyAlgebra {
    chevalley_algebra(&named_cartan(t, l).unwrap()).unwrap()
}

/// Criterion 1: exceptional dimensions through the command line, against
/// rank plus the reflection-closure root count.
fn exceptional_dimensions() -> Outcome {
    let mut details = Vec::new();
    for (label, t, l, limit) in [
        ("G2", CartanType::G, 2, 1.0),
        ("F4", CartanType::F, 4, 60.0),
        ("E6", CartanType::E, 6, 60.0),
        ("E7", CartanType::E, 7, 60.0),
        ("E8", CartanType::E, 8, 60.0),
    ] {
        let a = named_cartan(t, l).unwrap();
        let expected = l + reflection_closure(&a, 10_000).unwrap().len();
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_liekit")).args(["construct", "--cartan", label]).output().unwrap();
        let secs = start.elapsed().as_secs_f64();
        ensure(out.status.success(), || format!("construct {label} exited {:?}", out.status.code()))?;
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let dim = doc["dim"].as_u64().unwrap() as usize;
        ensure(dim == expected, || format!("{label}: dim {dim}, oracle {expected}"))?;
        ensure(secs <= limit, || format!("{label}: {secs:.2} s exceeds {limit} s"))?;
        details.push(format!("{label}={dim} ({secs:.2}s)"));
    }
    ensure(details[0].starts_with("G2=14"), || "G2 is not 14-dimensional".into())?;
    Ok(details.join(", "))
}

/// `ad(x)^k y` by repeated brackets of dense vectors.
fn ad_pow(alg: &LieAlgebra, x: usize, k: usize, y: usize) -> Vector {
    let xv = alg.basis_vector(x);
    let mut v = alg.basis_vector(y);
    for _ in 0..k {
        v = alg.bracket(&xv, &v).unwrap();
    }
    v
}

/// Criterion 2: Serre relations on the nine families, with the exponent
/// `1 - A_ij` shown to be sharp.
fn serre_suite() -> Outcome {
    let list = [
        (CartanType::A, 1),
        (CartanType::A, 2),
        (CartanType::A, 3),
        (CartanType::A, 4),
        (CartanType::B, 2),
        (CartanType::B, 3),
        (CartanType::B, 4),
        (CartanType::C, 3),
        (CartanType::D, 4),
        (CartanType::E, 6),
        (CartanType::E, 7),
        (CartanType::E, 8),
        (CartanType::F, 4),
        (CartanType::G, 2),
    ];
    let mut relations = 0;
    for (t, l) in list {
        let c = chevalley(t, l);
        let report = verify_serre(&c);
        ensure(report.passed(), || format!("{t}{l}: {:?}", report.violations))?;
        relations += report.relations_checked;
        for i in 0..l {
            for j in 0..l {
                if i == j {
                    continue;
                }
                let k = (1 - c.cartan.entry(i, j)) as usize;
                for (x, y) in [(c.e(i), c.e(j)), (c.f(i), c.f(j))] {
                    ensure(is_zero_vector(&ad_pow(&c.algebra, x, k, y)), || format!("{t}{l}: ad^{k} nonzero"))?;
                    ensure(!is_zero_vector(&ad_pow(&c.algebra, x, k - 1, y)), || {
                        format!("{t}{l}: ad^{} already zero for ({i},{j})", k - 1)
                    })?;
                }
            }
        }
        let mode = CheckMode::default_for(c.dim());
        ensure(c.algebra.check_axioms(mode).passed(), || format!("{t}{l}: Jacobi fails"))?;
    }
    Ok(format!("{} algebras, {relations} relations", list.len()))
}

fn algebra_corpus() -> Vec<(String, LieAlgebra)> {
    let mut out: Vec<(String, LieAlgebra)> = Vec::new();
    let mut push = |name: String, alg: LieAlgebra| out.push((name, alg));
    for n in 1..=4 {
        push(format!("gl{n}"), matrix_algebra(Family::Gl, n));
        push(format!("t{n}"), matrix_algebra(Family::Upper, n));
        push(format!("abelian{n}"), LieAlgebra::abelian(n));
    }
    for n in 2..=4 {
        push(format!("sl{n}"), matrix_algebra(Family::Sl, n));
        push(format!("n{}", n + 1), matrix_algebra(Family::StrictUpper, n + 1));
    }
    for n in 2..=5 {
        push(format!("so{n}"), matrix_algebra(Family::So, n));
    }
    for n in 1..=2 {
        push(format!("sp{}", 2 * n), matrix_algebra(Family::Sp, n));
        push(format!("so_jb{n}"), matrix_algebra(Family::SoJB, n));
    }
    for n in 1..=3 {
        push(format!("so_jd{n}"), matrix_algebra(Family::SoJD, n));
    }
    for (p, qq) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        push(format!("so'({p},{qq})"), matrix_algebra(Family::SoPrime { q: qq }, p));
    }
    for (t, l) in [(CartanType::A, 1), (CartanType::A, 2), (CartanType::B, 2), (CartanType::G, 2), (CartanType::A, 3)] {
        push(format!("chevalley {t}{l}"), chevalley(t, l).algebra);
    }
    let sl2 = matrix_algebra(Family::Sl, 2);
    let t2 = matrix_algebra(Family::Upper, 2);
    let heis = matrix_algebra(Family::StrictUpper, 3);
    push("sl2+sl2".into(), sl2.direct_sum(&sl2));
    push("sl2+t2".into(), sl2.direct_sum(&t2));
    push("heis+abelian1".into(), heis.direct_sum(&LieAlgebra::abelian(1)));
    let gl3 = matrix_algebra(Family::Gl, 3);
    push("gl3/centre".into(), gl3.quotient(&gl3.center()).unwrap().algebra);
    let t4 = matrix_algebra(Family::Upper, 4);
    push("t4/[t4,t4]".into(), t4.quotient(&t4.derived_algebra()).unwrap().algebra);
    push("[t4,t4]".into(), t4.restrict(&t4.derived_algebra()).unwrap());
    push("[gl3,gl3]".into(), gl3.restrict(&gl3.derived_algebra()).unwrap());
    let g2 = chevalley(CartanType::G, 2).algebra;
    push("g2 Borel".into(), g2.restrict(&g2.coordinate_subalgebra(&(0..8).collect::<Vec<_>>()).unwrap()).unwrap());
    push("g2 nilradical".into(), g2.restrict(&g2.coordinate_subalgebra(&(0..6).collect::<Vec<_>>()).unwrap()).unwrap());
    // random changes of basis
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, base) in [("sl3", matrix_algebra(Family::Sl, 3)), ("heis", heis.clone()), ("t3", matrix_algebra(Family::Upper, 3))] {
        for k in 0..2 {
            let d = base.dim();
            let rows = loop {
                let rows: Vec<Vector> = (0..d).map(|_| (0..d).map(|_| q(rng.gen_range(-2..=2))).collect()).collect();
                if Matrix::from_rows(rows.clone()).unwrap().rank() == d {
                    break rows;
                }
            };
            let names = (0..d).map(|i| format!("y{i}")).collect();
            push(format!("{name} basis change {k}"), base.change_basis(&rows, names).unwrap());
        }
    }
    out
}

/// Cyclic Jacobi sum on every basis triple, from dense brackets.
fn brute_force_is_lie(alg: &LieAlgebra) -> bool {
    let d = alg.dim();
    let b = |x: &[Scalar], y: &[Scalar]| alg.bracket(x, y).unwrap();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                let (x, y, z) = (alg.basis_vector(i), alg.basis_vector(j), alg.basis_vector(k));
                let s = vec_add(&vec_add(&b(&x, &b(&y, &z)), &b(&y, &b(&z, &x))), &b(&z, &b(&x, &y)));
                if !is_zero_vector(&s) {
                    return false;
                }
            }
        }
    }
    true
}

fn mutate(alg: &LieAlgebra, rng: &mut ChaCha8Rng) -> Option<LieAlgebra> {
    let d = alg.dim();
    if d < 3 {
        return None;
    }
    let mut constants: BTreeMap<(usize, usize), SparseVec> = alg.constants().map(|(k, v)| (k, v.clone())).collect();
    let i = rng.gen_range(0..d - 1);
    let j = rng.gen_range(i + 1..d);
    let k = rng.gen_range(0..d);
    let delta = q(rng.gen_range(1..=3));
    let entry = constants.entry((i, j)).or_default();
    match entry.iter_mut().find(|(kk, _)| *kk == k) {
        Some((_, c)) => *c = &*c + &delta,
        None => entry.push((k, delta)),
    }
    entry.retain(|(_, c)| !c.is_zero());
    if entry.is_empty() {
        constants.remove(&(i, j));
    }
    LieAlgebra::from_constants(alg.basis_names().to_vec(), constants).ok()
}

/// Criterion 3: the three axiom forms agree triple by triple on a verified
/// corpus and on corrupted mutants, and every mutant is rejected.
fn axiom_equivalence() -> Outcome {
    let corpus = algebra_corpus();
    ensure(corpus.len() >= 50, || format!("corpus has only {} algebras", corpus.len()))?;
    let mut triples = 0;
    for (name, alg) in &corpus {
        let report = alg.check_axioms(CheckMode::Full);
        ensure(report.passed(), || format!("{name} fails the axioms"))?;
        ensure(report.forms_agree, || format!("{name}: forms disagree"))?;
        triples += report.triples_checked;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut mutants = 0;
    let mut attempts = 0;
    while mutants < 10 {
        attempts += 1;
        ensure(attempts < 1000, || "could not generate 10 non-Lie mutants".into())?;
        let (name, base) = &corpus[rng.gen_range(0..corpus.len())];
        if base.dim() > 15 {
            continue;
        }
        let Some(m) = mutate(base, &mut rng) else { continue };
        if brute_force_is_lie(&m) {
            continue;
        }
        let report = m.check_axioms(CheckMode::Full);
        ensure(!report.passed(), || format!("mutant of {name} passed the check"))?;
        ensure(report.forms_agree, || format!("mutant of {name}: forms disagree"))?;
        for f in &report.failures {
            ensure(!f.leibniz && !f.jacobi && !f.lie_lie, || format!("mutant of {name}: split verdict {f:?}"))?;
        }
        mutants += 1;
    }
    Ok(format!("{} algebras ({triples} triples), {mutants} mutants caught", corpus.len()))
}

fn sample_ideals(alg: &LieAlgebra, rng: &mut ChaCha8Rng, count: usize) -> Vec<LieSubspace> {
    let d = alg.dim();
    let mut out = vec![alg.bottom(), alg.top(), alg.center(), alg.derived_algebra()];
    for _ in 0..count {
        let gens: Vec<Vector> = (0..rng.gen_range(1..=2))
            .map(|_| (0..d).map(|_| if rng.gen_bool(0.3) { q(rng.gen_range(-2..=2)) } else { Scalar::ZERO }).collect())
            .collect();
        out.push(alg.ideal_closure(&gens).unwrap());
    }
    out
}

/// Criterion 4: lattice laws of the ideal bracket on sampled ideals.
fn lattice_laws() -> Outcome {
    let algebras = [
        ("sl2", matrix_algebra(Family::Sl, 2)),
        ("sl3", matrix_algebra(Family::Sl, 3)),
        ("t3", matrix_algebra(Family::Upper, 3)),
        ("gl3", matrix_algebra(Family::Gl, 3)),
        ("heisenberg", matrix_algebra(Family::StrictUpper, 3)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for (name, alg) in &algebras {
        let pool = sample_ideals(alg, &mut rng, 8);
        let br = |a: &LieSubspace, b: &LieSubspace| alg.ideal_bracket(a, b).unwrap();
        let within = |a: &LieSubspace, b: &LieSubspace| b.space().contains_subspace(a.space()).unwrap();
        for a in &pool {
            for b in &pool {
                let ab = br(a, b);
                ensure(within(&ab, b), || format!("{name}: [I,N] not within N"))?;
                ensure(ab.space() == br(b, a).space(), || format!("{name}: [I,J] != [J,I]"))?;
                ensure(within(&ab, &alg.ideal_intersect(a, b).unwrap()), || format!("{name}: [I,J] not within I ∩ J"))?;
                for c in &pool {
                    let sum = alg.ideal_sum(b, c).unwrap();
                    let lhs = br(a, &sum);
                    let rhs = alg.ideal_sum(&ab, &br(a, c)).unwrap();
                    ensure(lhs.space() == rhs.space(), || format!("{name}: [I,J+K] != [I,J]+[I,K]"))?;
                    if within(b, c) {
                        ensure(within(&ab, &br(a, c)), || format!("{name}: bracket not monotone"))?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} ideal triples"))
}

/// Solvable by iterating dense brackets of a spanning set.
fn solvable_by_brackets(alg: &LieAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    for _ in 0..=alg.dim() {
        if cur.is_zero() {
            return true;
        }
        let mut next = Vec::new();
        for x in cur.basis() {
            for y in cur.basis() {
                next.push(alg.bracket(x, y).unwrap());
            }
        }
        let next = Subspace::span(alg.dim(), next).unwrap();
        if next == cur {
            return false;
        }
        cur = next;
    }
    false
}

/// Criterion 5: radicals of sl, t, and gl.
fn radical_correctness() -> Outcome {
    let mut lines = Vec::new();
    for n in 2..=4 {
        for (label, f) in [("sl", Family::Sl), ("t", Family::Upper), ("gl", Family::Gl)] {
            let alg = matrix_algebra(f, n);
            let rad = alg.radical().unwrap();
            let expected = match f {
                Family::Sl => Subspace::zero(alg.dim()),
                Family::Upper => Subspace::full(alg.dim()),
                _ => alg.center().into_space(),
            };
            ensure(rad.space() == &expected, || format!("{label}({n}): radical has dim {}", rad.dim()))?;
            for x in rad.space().basis() {
                for i in 0..alg.dim() {
                    let v = alg.bracket(&alg.basis_vector(i), x).unwrap();
                    ensure(rad.space().contains(&v).unwrap(), || format!("{label}({n}): radical not an ideal"))?;
                }
            }
            ensure(solvable_by_brackets(&alg, rad.space()), || format!("{label}({n}): radical not solvable"))?;
            let quot = alg.quotient(&rad).unwrap().algebra;
            ensure(quot.killing_form().rank() == quot.dim(), || format!("{label}({n}): quotient not semisimple"))?;
            lines.push(format!("{label}{n}:{}", rad.dim()));
        }
    }
    Ok(format!("radical dims {}", lines.join(" ")))
}

/// Criterion 6: dimensions of sl, so, sp with closure re-certified.
fn classical_dimensions() -> Outcome {
    let mut count = 0;
    for n in 1..=5usize {
        let mut cases = vec![(Family::So, n, n * (n - 1) / 2), (Family::Sp, n, n * (2 * n + 1))];
        if n >= 2 {
            cases.push((Family::Sl, n, n * n - 1));
        }
        for (f, size, expected) in cases {
            if expected == 0 {
                continue;
            }
            let m = classical(f, size).unwrap();
            ensure(m.dim() == expected, || format!("{}({size}): dim {} != {expected}", f.label(), m.dim()))?;
            for a in m.basis() {
                for b in m.basis() {
                    let c = matrix_bracket(a, b).unwrap();
                    ensure(m.contains(&c).unwrap(), || format!("{}({size}) not closed", f.label()))?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} algebras closed with the expected dimension"))
}

/// Criterion 7: skew-adjoint algebras are closed under the commutator.
fn skew_adjoint_closure() -> Outcome {
    let forms = [
        ("J", j_matrix(2)),
        ("JD", jd_matrix(2)),
        ("JB", jb_matrix(1)),
        ("I", Matrix::identity(3)),
        ("diag(1,1,-1)", so_prime_matrix(2, 1)),
        ("general", Matrix::from_ints(&[[1, 2, 0], [0, 1, 1], [3, 0, 1]])),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let total = 500;
    for k in 0..total {
        let (name, j) = &forms[k % forms.len()];
        let alg = skew_adjoint_algebra(j).unwrap();
        let random = |rng: &mut ChaCha8Rng| {
            let c: Vec<Scalar> = (0..alg.dim()).map(|_| Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect();
            alg.element(&c)
        };
        let (f, g) = (random(&mut rng), random(&mut rng));
        let c = matrix_bracket(&f, &g).unwrap();
        let lhs = c.transpose().mul(j).unwrap();
        let rhs = j.mul(&c).unwrap().scale(&q(-1));
        ensure(lhs == rhs, || format!("{name}: bracket not skew-adjoint"))?;
        ensure(alg.contains(&c).unwrap(), || format!("{name}: bracket outside the algebra"))?;
    }
    Ok(format!("{total} pairs over {} forms", forms.len()))
}

fn components(alg: &LieAlgebra, h: &[usize]) -> Vec<(CartanType, usize)> {
    let h = alg.coordinate_subalgebra(h).unwrap();
    let mut v: Vec<_> = split_decompose(alg, &h).unwrap().into_iter().map(|c| (c.ty, c.rank)).collect();
    v.sort();
    v
}

/// Criterion 8: recognition round trip and decomposition of direct sums.
fn classification() -> Outcome {
    for (t, l) in catalogue() {
        let r = recognize(&dynkin(&named_cartan(t, l).unwrap()));
        ensure(r.len() == 1 && r[0].label() == Some((t, l)), || format!("{t}{l} recognised as {r:?}"))?;
        ensure(matches!(r[0], Recognized::Finite { .. }), || format!("{t}{l} not finite"))?;
    }
    let sums: [&[(CartanType, usize)]; 5] = [
        &[(CartanType::A, 1), (CartanType::A, 1)],
        &[(CartanType::A, 2), (CartanType::B, 2)],
        &[(CartanType::G, 2), (CartanType::A, 1)],
        &[(CartanType::A, 1), (CartanType::A, 1), (CartanType::A, 2)],
        &[(CartanType::C, 3), (CartanType::G, 2), (CartanType::A, 1)],
    ];
    for parts in sums {
        let mut alg: Option<LieAlgebra> = None;
        let mut h = Vec::new();
        for &(t, l) in parts {
            let c = chevalley(t, l);
            let offset = alg.as_ref().map_or(0, LieAlgebra::dim);
            h.extend(c.cartan_indices.iter().map(|i| i + offset));
            alg = Some(match alg {
                None => c.algebra,
                Some(a) => a.direct_sum(&c.algebra),
            });
        }
        let mut expected = parts.to_vec();
        expected.sort();
        let got = components(&alg.unwrap(), &h);
        ensure(got == expected, || format!("{parts:?} decomposed as {got:?}"))?;
    }
    let so6 = matrix_algebra(Family::SoJD, 3);
    let got = components(&so6, &[0, 4, 8]);
    ensure(got == [(CartanType::A, 3)], || format!("so_JD(3) classified as {got:?}"))?;
    let sp2 = matrix_algebra(Family::Sp, 1);
    let got = components(&sp2, &[0]);
    ensure(got == [(CartanType::A, 1)], || format!("sp(2) classified as {got:?}"))?;
    Ok(format!("{} catalogue entries, {} direct sums, so_JD(3)=A3, sp(2)=A1", catalogue().len(), sums.len()))
}

/// Roots of a Cartan matrix as values on `h_1..h_l`: `(Σ_j c_j A_ij)_i`.
fn expected_weights(a: &CartanMatrix) -> BTreeSet<WeightFunction> {
    roots_from_cartan(a)
        .unwrap()
        .roots()
        .iter()
        .map(|r| WeightFunction((0..a.rank()).map(|i| q(a.pairing(r, i))).collect()))
        .collect()
}

/// sl(3) roots `ε_i - ε_j` on `H_k = E_kk - E_(k+1)(k+1)`, directly.
fn sl3_weights() -> BTreeSet<WeightFunction> {
    let mut out = BTreeSet::new();
    for i in 0..3i64 {
        for j in 0..3i64 {
            if i != j {
                let eps = |m: i64, k: i64| (m == k) as i64 - (m == k + 1) as i64;
                out.insert(WeightFunction((0..2).map(|k| q(eps(i, k) - eps(j, k))).collect()));
            }
        }
    }
    out
}

/// Criterion 9: weight decompositions of sl(2), sl(3), and G2.
fn weight_decomposition() -> Outcome {
    let g2 = chevalley(CartanType::G, 2);
    let cases: Vec<(&str, LieAlgebra, Vec<usize>, BTreeSet<WeightFunction>)> = vec![
        ("sl2", matrix_algebra(Family::Sl, 2), vec![1], expected_weights(&named_cartan(CartanType::A, 1).unwrap())),
        ("sl3", matrix_algebra(Family::Sl, 3), vec![3, 4], sl3_weights()),
        ("g2", g2.algebra.clone(), g2.cartan_indices.clone(), expected_weights(&g2.cartan)),
    ];
    ensure(sl3_weights() == expected_weights(&named_cartan(CartanType::A, 2).unwrap()), || {
        "sl3 direct roots differ from the A2 root system".into()
    })?;
    let mut pairs = 0;
    for (name, alg, hidx, expected) in cases {
        let h = alg.coordinate_subalgebra(&hidx).unwrap();
        let table = root_spaces(&alg, &h).unwrap();
        let total: usize = table.iter().map(|w| w.space.dim()).sum();
        ensure(total == alg.dim(), || format!("{name}: weight spaces sum to {total}"))?;
        for (a, wa) in table.iter().enumerate() {
            for wb in &table[a + 1..] {
                ensure(wa.space.intersect(&wb.space).unwrap().is_zero(), || format!("{name}: weight spaces meet"))?;
            }
        }
        let found: BTreeSet<WeightFunction> = table.iter().filter(|w| !w.chi.is_zero()).map(|w| w.chi.clone()).collect();
        ensure(found == expected, || format!("{name}: roots {found:?} differ from {expected:?}"))?;
        for wa in &table {
            for wb in &table {
                let report = root_product_check(&alg, &h, &wa.chi, &wb.chi).unwrap();
                ensure(report.passed(), || format!("{name}: product check fails for {} and {}", wa.chi, wb.chi))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("3 algebras, {pairs} weight pairs"))
}

fn random_free(rng: &mut ChaCha8Rng, alphabet: usize) -> FreeLieElement {
    let mut e = FreeLieElement::zero(alphabet, 8);
    for d in 1..=3 {
        for w in lyndon_words(alphabet, d) {
            if rng.gen_bool(0.5) {
                let c = Scalar::frac(rng.gen_range(-4..=4), rng.gen_range(1..=3));
                e = e.add(&FreeLieElement::basis(alphabet, 8, w).scale(&c)).unwrap();
            }
        }
    }
    e
}

/// Criterion 10: Witt numbers and lifts into sl(2) and G2.
fn free_lie() -> Outcome {
    for k in 1..=4 {
        for n in 1..=8 {
            let count = lyndon_words(k, n).len() as u128;
            let witt = graded_dimension(k, n).unwrap();
            ensure(count == witt, || format!("k={k} n={n}: {count} Lyndon words, Witt {witt}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let targets = [("sl2", matrix_algebra(Family::Sl, 2)), ("g2", chevalley(CartanType::G, 2).algebra)];
    let per_target = 200;
    for (name, alg) in &targets {
        for _ in 0..per_target {
            let alphabet = rng.gen_range(2..=3);
            let assign: Vec<Vector> =
                (0..alphabet).map(|_| (0..alg.dim()).map(|_| q(rng.gen_range(-2..=2))).collect()).collect();
            let x = random_free(&mut rng, alphabet);
            let y = random_free(&mut rng, alphabet);
            let lhs = lift(&assign, alg, &free_bracket(&x, &y).unwrap()).unwrap();
            let rhs = alg.bracket(&lift(&assign, alg, &x).unwrap(), &lift(&assign, alg, &y).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("{name}: lift does not preserve a bracket"))?;
        }
    }
    Ok(format!("Witt table k<=4, n<=8; {} lift pairs per target", per_target))
}

fn main() -> ExitCode {
    let criteria: [(&str, f64, fn() -> Outcome); 10] = [
        ("exceptional dimensions", 60.0, exceptional_dimensions),
        ("Serre relations", 300.0, serre_suite),
        ("axiom equivalence", 30.0, axiom_equivalence),
        ("ideal lattice laws", 30.0, lattice_laws),
        ("radical", 60.0, radical_correctness),
        ("classical dimensions", 60.0, classical_dimensions),
        ("skew-adjoint closure", 30.0, skew_adjoint_closure),
        ("classification", 120.0, classification),
        ("weight decomposition", 60.0, weight_decomposition),
        ("free Lie algebra", 60.0, free_lie),
    ];
    let mut failed = 0;
    for (n, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > Duration::from_secs_f64(*limit) => Err(format!("too slow: {elapsed:.1?} > {limit} s")),
            r => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.2?} <= {limit} s]", n + 1, elapsed),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e} [{:.2?}, limit {limit} s]", n + 1, elapsed);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria fail", criteria.len());
        ExitCode::FAILURE
    }
}
