//! The free Lie algebra on `k` letters over the rationals, truncated at a
//! fixed degree and realised on the Lyndon basis.
//!
//! A Lyndon word stands for its standard bracketing: split `w = uv` with
//! `v` the longest proper Lyndon suffix and bracket the parts recursively.
//! Brackets of basis elements are rewritten into the basis through the
//! free associative algebra, where the expansion of a standard bracketing
//! of `w` is `w` plus lexicographically larger words.
//!
//! Text syntax: letters are `a`, `b`, ... (alphabet of at most 26). An
//! element is a sum of terms `c·X` where `c` is an optional rational
//! coefficient (`*` may replace `·`) and `X` is a letter or a bracket
//! `[X, Y]` whose arguments are elements themselves. `0` is the zero
//! element. Printing uses standard bracketings, e.g. `[a,[a,b]] - 2/3·[a,b]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::exactlin::{Scalar, Vector};
use crate::lie::{LieAlgebra, LieError};

pub const DEFAULT_TRUNCATION: usize = 8;
pub const MAX_ALPHABET: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeLieError {
    #[error("alphabet mismatch: {0} vs {1} letters")]
    AlphabetMismatch(usize, usize),
    #[error("truncation mismatch: degree {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("alphabet size must be between 1 and {MAX_ALPHABET}, got {0}")]
    AlphabetSize(usize),
    #[error("expected {expected} assigned vectors, found {found}")]
    Assignment { expected: usize, found: usize },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A Lyndon word over letters `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord(Vec<u8>);

impl LyndonWord {
    /// `None` unless `letters` is a nonempty Lyndon word.
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        is_lyndon(&letters).then_some(LyndonWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `(u, v)` with `v` the longest proper Lyndon suffix; `None` for letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        standard_split(&self.0).map(|i| (LyndonWord(self.0[..i].to_vec()), LyndonWord(self.0[i..].to_vec())))
    }

    /// The flat word, e.g. `aab`.
    pub fn word_string(&self) -> String {
        self.0.iter().map(|&c| letter_char(c)).collect()
    }

    /// The standard bracketing, e.g. `[a,[a,b]]`.
    pub fn bracketing(&self) -> String {
        match self.standard_factorization() {
            None => letter_char(self.0[0]).to_string(),
            Some((u, v)) => format!("[{},{}]", u.bracketing(), v.bracketing()),
        }
    }
}

fn letter_char(c: u8) -> char {
    (b'a' + c) as char
}

/// Strictly smaller than each proper suffix.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

fn standard_split(w: &[u8]) -> Option<usize> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..]))
}

/// All Lyndon words of length exactly `degree`, in lexicographic order
/// (Duval's generation algorithm).
pub fn lyndon_words(alphabet_size: usize, degree: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    if alphabet_size == 0 || degree == 0 {
        return out;
    }
    let k = alphabet_size as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == degree {
            out.push(LyndonWord(w.clone()));
        }
        let m = w.len();
        while w.len() < degree {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(c) => *c += 1,
        }
    }
    out
}

fn mobius(mut n: usize) -> i128 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The Witt number `(1/n) Σ_{d|n} μ(d) k^{n/d}`; `None` on overflow.
pub fn graded_dimension(alphabet_size: usize, degree: usize) -> Option<u128> {
    if alphabet_size == 0 || degree == 0 {
        return Some(0);
    }
    let k = alphabet_size as i128;
    let mut total: i128 = 0;
    for d in (1..=degree).filter(|d| degree.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu != 0 {
            total = total.checked_add(mu * k.checked_pow((degree / d) as u32)?)?;
        }
    }
    Some((total / degree as i128) as u128)
}

/// Noncommutative polynomial on words.
type AssocPoly = BTreeMap<Vec<u8>, Scalar>;

fn poly_add_term(p: &mut AssocPoly, w: Vec<u8>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let sum = p.get(&w).map_or(c.clone(), |x| x + &c);
    if sum.is_zero() {
        p.remove(&w);
    } else {
        p.insert(w, sum);
    }
}

/// `xy - yx`, dropping words longer than `max_len`.
fn poly_commutator(x: &AssocPoly, y: &AssocPoly, max_len: usize) -> AssocPoly {
    let mut out = AssocPoly::new();
    for (u, a) in x {
        for (v, b) in y {
            if u.len() + v.len() > max_len {
                continue;
            }
            let c = a * b;
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            poly_add_term(&mut out, uv, c.clone());
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            poly_add_term(&mut out, vu, -c);
        }
    }
    out
}

/// Associative expansion of the standard bracketing of `w`.
fn expand_word(w: &[u8], cache: &mut HashMap<Vec<u8>, AssocPoly>) -> AssocPoly {
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let p = match standard_split(w) {
        None => AssocPoly::from([(w.to_vec(), Scalar::ONE)]),
        Some(i) => {
            let u = expand_word(&w[..i], cache);
            let v = expand_word(&w[i..], cache);
            poly_commutator(&u, &v, usize::MAX)
        }
    };
    cache.insert(w.to_vec(), p.clone());
    p
}

/// An element of the truncated free Lie algebra, in Lyndon coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeLieElement {
    alphabet: usize,
    truncation: usize,
    terms: BTreeMap<LyndonWord, Scalar>,
}

impl FreeLieElement {
    pub fn zero(alphabet: usize, truncation: usize) -> Self {
        FreeLieElement { alphabet, truncation, terms: BTreeMap::new() }
    }

    /// The generator with index `letter`.
    pub fn letter(alphabet: usize, truncation: usize, letter: usize) -> Self {
        assert!(letter < alphabet, "letter {letter} outside alphabet of size {alphabet}");
        Self::basis(alphabet, truncation, LyndonWord(vec![letter as u8]))
    }

    /// A basis element; zero if its degree exceeds the truncation.
    pub fn basis(alphabet: usize, truncation: usize, w: LyndonWord) -> Self {
        let mut e = Self::zero(alphabet, truncation);
        assert!(w.0.iter().all(|&c| (c as usize) < alphabet), "word uses letters outside the alphabet");
        if w.degree() <= truncation {
            e.terms.insert(w, Scalar::ONE);
        }
        e
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<LyndonWord, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, w: &LyndonWord) -> Scalar {
        self.terms.get(w).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), FreeLieError> {
        if self.alphabet != other.alphabet {
            return Err(FreeLieError::AlphabetMismatch(self.alphabet, other.alphabet));
        }
        if self.truncation != other.truncation {
            return Err(FreeLieError::TruncationMismatch(self.truncation, other.truncation));
        }
        Ok(())
    }

    fn add_term(&mut self, w: LyndonWord, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(Scalar::ZERO);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FreeLieError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.alphabet, self.truncation);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FreeLieError> {
        self.add(&other.scale(&-Scalar::ONE))
    }

    fn expand(&self, cache: &mut HashMap<Vec<u8>, AssocPoly>) -> AssocPoly {
        let mut out = AssocPoly::new();
        for (w, c) in &self.terms {
            for (u, x) in expand_word(&w.0, cache) {
                poly_add_term(&mut out, u, &x * c);
            }
        }
        out
    }

    /// Rewrites a Lie polynomial into Lyndon coordinates by peeling off the
    /// lexicographically least word, which leads its standard bracketing.
    fn from_poly(
        alphabet: usize,
        truncation: usize,
        mut p: AssocPoly,
        cache: &mut HashMap<Vec<u8>, AssocPoly>,
    ) -> Result<Self, FreeLieError> {
        let mut out = Self::zero(alphabet, truncation);
        while let Some((w, c)) = p.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            if !is_lyndon(&w) {
                return Err(LieError::Defect(format!("leading word {w:?} of a Lie polynomial is not Lyndon")).into());
            }
            for (u, x) in expand_word(&w, cache) {
                poly_add_term(&mut p, u, -(&x * &c));
            }
            out.add_term(LyndonWord(w), c);
        }
        Ok(out)
    }
}

/// The truncated bracket; terms above the truncation degree are dropped.
pub fn free_bracket(x: &FreeLieElement, y: &FreeLieElement) -> Result<FreeLieElement, FreeLieError> {
    x.check_compatible(y)?;
    let mut cache = HashMap::new();
    let p = poly_commutator(&x.expand(&mut cache), &y.expand(&mut cache), x.truncation);
    FreeLieElement::from_poly(x.alphabet, x.truncation, p, &mut cache)
}

/// Evaluates `x` in `target` with letter `i` sent to `assignment[i]`.
pub fn lift(assignment: &[Vector], target: &LieAlgebra, x: &FreeLieElement) -> Result<Vector, FreeLieError> {
    if assignment.len() != x.alphabet {
        return Err(FreeLieError::Assignment { expected: x.alphabet, found: assignment.len() });
    }
    for v in assignment {
        if v.len() != target.dim() {
            return Err(LieError::Dimension { expected: target.dim(), found: v.len() }.into());
        }
    }
    let mut memo: HashMap<LyndonWord, Vector> = HashMap::new();
    let mut out = vec![Scalar::ZERO; target.dim()];
    for (w, c) in &x.terms {
        let v = lift_word(assignment, target, w, &mut memo)?;
        for (o, vi) in out.iter_mut().zip(&v) {
            *o = &*o + &(vi * c);
        }
    }
    Ok(out)
}

fn lift_word(
    assignment: &[Vector],
    target: &LieAlgebra,
    w: &LyndonWord,
    memo: &mut HashMap<LyndonWord, Vector>,
) -> Result<Vector, FreeLieError> {
    if let Some(v) = memo.get(w) {
        return Ok(v.clone());
    }
    let v = match w.standard_factorization() {
        None => assignment[w.0[0] as usize].clone(),
        Some((u, v)) => {
            let a = lift_word(assignment, target, &u, memo)?;
            let b = lift_word(assignment, target, &v, memo)?;
            target.bracket(&a, &b)?
        }
    };
    memo.insert(w.clone(), v.clone());
    Ok(v)
}

impl fmt::Display for FreeLieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "{}", w.bracketing())?;
        }
        Ok(())
    }
}

/// Parses the text syntax described in the module docs.
pub fn parse_element(text: &str, alphabet: usize, truncation: usize) -> Result<FreeLieElement, FreeLieError> {
    if alphabet == 0 || alphabet > MAX_ALPHABET {
        return Err(FreeLieError::AlphabetSize(alphabet));
    }
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, alphabet, truncation, len: text.len() };
    let e = p.element()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: usize,
    truncation: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn error(&self, message: &str) -> FreeLieError {
        FreeLieError::Syntax { offset: self.offset(), message: message.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FreeLieError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn element(&mut self) -> Result<FreeLieElement, FreeLieError> {
        let mut acc = FreeLieElement::zero(self.alphabet, self.truncation);
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = Scalar::ONE;
            match self.peek() {
                Some('+') if !first => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = -Scalar::ONE;
                }
                _ if !first => break,
                _ => {}
            }
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign))?;
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FreeLieElement, FreeLieError> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
                self.pos += 1;
            }
            let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
            let c: Scalar = s.parse().map_err(|_| self.error(&format!("bad coefficient '{s}'")))?;
            self.skip_ws();
            match self.peek() {
                Some('·') | Some('*') => {
                    self.pos += 1;
                }
                _ if c.is_zero() => return Ok(FreeLieElement::zero(self.alphabet, self.truncation)),
                _ => return Err(self.error("expected '·' or '*' after coefficient")),
            }
            c
        } else {
            Scalar::ONE
        };
        Ok(self.atom()?.scale(&coeff))
    }

    fn atom(&mut self) -> Result<FreeLieElement, FreeLieError> {
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let x = self.element()?;
                self.expect(',')?;
                let y = self.element()?;
                self.expect(']')?;
                free_bracket(&x, &y)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let i = (c as u8 - b'a') as usize;
                if i >= self.alphabet {
                    return Err(self.error(&format!("letter '{c}' outside alphabet of size {}", self.alphabet)));
                }
                self.pos += 1;
                Ok(FreeLieElement::letter(self.alphabet, self.truncation, i))
            }
            _ => Err(self.error("expected a letter, '[' or a coefficient")),
        }
    }
}
