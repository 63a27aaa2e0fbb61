//! Univariate rational polynomials as coefficient vectors, lowest degree
//! first: characteristic and minimal polynomials, and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{is_zero_vector, unit_vector, LinError, Matrix, Scalar, Vector};

/// Largest integer whose divisors are enumerated by trial division.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

pub type Poly = Vec<Scalar>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::ZERO, |acc, c| &(&acc * x) + c)
}

pub fn mul(a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[Scalar], b: &[Scalar]) -> Result<(Poly, Poly), LinError> {
    let db = degree(b).ok_or(LinError::DivisionByZero)?;
    let lead = b[db].recip()?;
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![Scalar::ZERO; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead;
        for (k, bk) in b[..=db].iter().enumerate() {
            let t = &r[dr - db + k] - &(&c * bk);
            r[dr - db + k] = t;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    Ok((trim(q), r))
}

pub fn monic(p: &[Scalar]) -> Poly {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let inv = p[d].recip().expect("nonzero leading coefficient");
            p[..=d].iter().map(|c| c * &inv).collect()
        }
    }
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn lcm(a: &[Scalar], b: &[Scalar]) -> Poly {
    let g = gcd(a, b);
    let (q, _) = divrem(&mul(a, b), &g).expect("nonzero gcd");
    monic(&q)
}

/// `det(xI - m)` via reduction to upper Hessenberg form by similarity.
pub fn charpoly(m: &Matrix) -> Result<Poly, LinError> {
    if !m.is_square() {
        return Err(LinError::Shape("characteristic polynomial of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else { continue };
        if piv != j + 1 {
            for c in 0..n {
                let t = h[(piv, c)].clone();
                h[(piv, c)] = h[(j + 1, c)].clone();
                h[(j + 1, c)] = t;
            }
            for r in 0..n {
                let t = h[(r, piv)].clone();
                h[(r, piv)] = h[(r, j + 1)].clone();
                h[(r, j + 1)] = t;
            }
        }
        let inv = h[(j + 1, j)].recip()?;
        for k in j + 2..n {
            let t = &h[(k, j)] * &inv;
            if t.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = &h[(k, c)] - &(&t * &h[(j + 1, c)]);
                h[(k, c)] = v;
            }
            for r in 0..n {
                let v = &h[(r, j + 1)] + &(&t * &h[(r, k)]);
                h[(r, j + 1)] = v;
            }
        }
    }
    // p_k is the characteristic polynomial of the leading k x k block.
    let mut ps: Vec<Poly> = vec![vec![Scalar::ONE]];
    for k in 1..=n {
        let d = &h[(k - 1, k - 1)];
        let mut pk = mul(&[-d, Scalar::ONE], &ps[k - 1]);
        let mut prod = Scalar::ONE;
        for i in 1..k {
            prod = &prod * &h[(k - i, k - i - 1)];
            if prod.is_zero() {
                break;
            }
            let c = &h[(k - 1 - i, k - 1)] * &prod;
            if c.is_zero() {
                continue;
            }
            let term = &ps[k - 1 - i];
            pk.resize(pk.len().max(term.len()), Scalar::ZERO);
            for (slot, t) in pk.iter_mut().zip(term) {
                let v = &*slot - &(&c * t);
                *slot = v;
            }
        }
        ps.push(trim(pk));
    }
    Ok(ps.pop().expect("n + 1 polynomials"))
}

/// `p(m) v` by Horner's rule.
pub fn apply(p: &[Scalar], m: &Matrix, v: &[Scalar]) -> Result<Vector, LinError> {
    let mut acc = vec![Scalar::ZERO; v.len()];
    for c in p.iter().rev() {
        acc = m.mul_vec(&acc)?;
        for (a, x) in acc.iter_mut().zip(v) {
            a.add_mul(c, x);
        }
    }
    Ok(acc)
}

/// Monic minimal polynomial of `v` under `m`.
fn local_minimal_polynomial(m: &Matrix, v: &[Scalar]) -> Result<Poly, LinError> {
    let mut krylov: Vec<Vector> = vec![v.to_vec()];
    loop {
        let next = m.mul_vec(krylov.last().expect("nonempty"))?;
        let cols = Matrix::from_rows_with_cols(krylov.clone(), v.len())?.transpose();
        if let Some(c) = cols.solve(&next)? {
            let mut p: Poly = c.iter().map(|x| -x).collect();
            p.push(Scalar::ONE);
            return Ok(p);
        }
        krylov.push(next);
    }
}

/// The minimal polynomial, as the lcm of the local minimal polynomials of
/// the unit vectors.
pub fn minimal_polynomial(m: &Matrix) -> Result<Poly, LinError> {
    if !m.is_square() {
        return Err(LinError::Shape("minimal polynomial of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut mu: Poly = vec![Scalar::ONE];
    for j in 0..n {
        let e = unit_vector(n, j);
        if is_zero_vector(&apply(&mu, m, &e)?) {
            continue;
        }
        mu = lcm(&mu, &local_minimal_polynomial(m, &e)?);
    }
    Ok(mu)
}

/// Rational roots with multiplicities, and the degree of the factor left
/// without rational roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoots {
    pub roots: Vec<(Scalar, usize)>,
    pub residual_degree: usize,
}

fn divisors(n: &BigInt) -> Result<Vec<u64>, LinError> {
    let n = n.abs().to_u64().filter(|&x| x <= DIVISOR_LIMIT).ok_or_else(|| {
        LinError::TooLarge(format!("coefficient {n} is beyond the rational-root search limit"))
    })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Rational roots by the rational-root theorem on the primitive integer
/// multiple of `p`, deflating each root found.
pub fn rational_roots(p: &[Scalar]) -> Result<RationalRoots, LinError> {
    let mut rest = trim(p.to_vec());
    if rest.is_empty() {
        return Err(LinError::Shape("roots of the zero polynomial".into()));
    }
    let mut roots = Vec::new();
    let zero_mult = rest.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
    if zero_mult > 0 {
        roots.push((Scalar::ZERO, zero_mult));
        rest.drain(..zero_mult);
    }
    if rest.len() > 1 {
        let den_lcm = rest.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let ints: Vec<BigInt> = rest.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let a0 = &ints[0] / &content;
        let an = ints.last().expect("nonempty") / &content;
        let (nums, dens) = (divisors(&a0)?, divisors(&an)?);
        let mut candidates: Vec<Scalar> = Vec::new();
        for &q in &dens {
            for &p in &nums {
                for s in [1i64, -1] {
                    let c = Scalar::from_big(BigInt::from(p) * s, BigInt::from(q))?;
                    if !candidates.contains(&c) {
                        candidates.push(c);
                    }
                }
            }
        }
        candidates.sort();
        for c in candidates {
            let mut mult = 0;
            while rest.len() > 1 && eval(&rest, &c).is_zero() {
                let (q, _) = divrem(&rest, &[-&c, Scalar::ONE])?;
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RationalRoots { roots, residual_degree: rest.len() - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn ints(v: &[i64]) -> Poly {
        v.iter().map(|&x| q(x)).collect()
    }

    /// `det(xI - m)` at integer points, for comparison.
    fn det_at(m: &Matrix, x: i64) -> Scalar {
        Matrix::identity(m.rows()).scale(&q(x)).sub(m).unwrap().determinant().unwrap()
    }

    #[test]
    fn charpoly_matches_determinant() {
        let ms = [
            Matrix::from_ints(&[[1, 2, 0], [3, -1, 4], [0, 5, 2]]),
            Matrix::from_ints(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
            Matrix::from_ints(&[[2, 0, 0, 1], [0, 0, 3, 0], [1, 0, 0, 0], [0, 7, 0, -2]]),
        ];
        for m in &ms {
            let p = charpoly(m).unwrap();
            assert_eq!(p.len(), m.rows() + 1);
            for x in -3..=3 {
                assert_eq!(eval(&p, &q(x)), det_at(m, x));
            }
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(minimal_polynomial(&Matrix::identity(3)).unwrap(), ints(&[-1, 1]));
        let j = Matrix::from_ints(&[[1, 1], [0, 1]]);
        assert_eq!(minimal_polynomial(&j).unwrap(), ints(&[1, -2, 1]));
        let d = Matrix::diagonal(&ints(&[2, 0, -2, 2]));
        let mu = minimal_polynomial(&d).unwrap();
        assert_eq!(mu, ints(&[0, -4, 0, 1]));
        let cp = charpoly(&d).unwrap();
        assert!(divrem(&cp, &mu).unwrap().1.is_empty());
    }

    #[test]
    fn roots_examples() {
        // (x - 1/2)^2 (x + 3) x (x^2 + 1)
        let p = mul(&mul(&mul(&ints(&[-1, 2]), &ints(&[-1, 2])), &mul(&ints(&[3, 1]), &ints(&[0, 1]))), &ints(&[1, 0, 1]));
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.roots, vec![(q(-3), 1), (q(0), 1), (Scalar::frac(1, 2), 2)]);
        assert_eq!(r.residual_degree, 2);
        assert_eq!(rational_roots(&ints(&[-2, 0, 1])).unwrap().roots, vec![]);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = mul(&ints(&[-1, 1]), &ints(&[2, 1]));
        let b = mul(&ints(&[-1, 1]), &ints(&[5, 1]));
        assert_eq!(gcd(&a, &b), ints(&[-1, 1]));
        assert_eq!(degree(&lcm(&a, &b)), Some(3));
    }
}
