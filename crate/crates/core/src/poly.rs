//! Sparse exact polynomials over arbitrary-precision integers.
//!
//! [`UniPoly`] is keyed by the exponent of `x`; [`BiPoly`] by the pair
//! `(x exponent, y exponent)`. Zero coefficients are never stored, so
//! structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One monomial in the JSON exchange format: `{"x": 3, "y": 1, "c": "2"}`.
/// Coefficients travel as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub x: u64,
    pub y: u64,
    pub c: String,
}

fn parse_coeff(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad coefficient {s:?}: {e}")))
}

fn insert_nonzero<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if !c.is_zero() {
        map.insert(key, c);
    }
}

fn add_into<K: Ord + Copy>(map: &mut BTreeMap<K, BigInt>, key: K, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// Univariate polynomial in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Term>", try_from = "Vec<Term>")]
pub struct UniPoly {
    coeffs: BTreeMap<u64, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: u64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        insert_nonzero(&mut coeffs, exp, c);
        UniPoly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            add_into(&mut coeffs, e, &c.into());
        }
        UniPoly { coeffs }
    }

    /// Dense coefficient list `c[0], c[1], ...` (low to high).
    pub fn from_dense<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(e, c)| (e as u64, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u64> {
        self.coeffs.keys().next().copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Stored terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Coefficients for every exponent `0..=degree`, zeros included.
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    /// Coefficients of the stored terms in descending exponent order, the
    /// order in which printed polynomials are read.
    pub fn coefficients_descending(&self) -> Vec<BigInt> {
        self.coeffs.values().rev().cloned().collect()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            add_into(&mut coeffs, *e, c);
        }
        UniPoly { coeffs }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        let mut coeffs = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                add_into(&mut coeffs, ea + eb, &(ca * cb));
            }
        }
        UniPoly { coeffs }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: u64) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// `self * (1 + x^exp)` without a general multiplication.
    pub fn mul_one_plus(&self, exp: u64) -> UniPoly {
        self.add(&self.shift(exp))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse terms, high to low.
        let mut acc = BigInt::zero();
        let mut prev: Option<u64> = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev {
                acc *= Pow::pow(x, p - e);
            }
            acc += c;
            prev = Some(*e);
        }
        if let Some(p) = prev {
            acc *= Pow::pow(x, p);
        }
        acc
    }

    /// Keeps the terms whose exponent is a positive multiple of `j`. The
    /// constant term is dropped.
    pub fn restrict_multiples(&self, j: u64) -> Result<UniPoly> {
        if j == 0 {
            return crate::error::domain("restrict_multiples needs j >= 1");
        }
        Ok(UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| **e > 0 && **e % j == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// Paper-style rendering in variable `var`, highest exponent first,
    /// e.g. `q^{11}+q^{10}+2q^9`.
    pub fn to_text(&self, var: &str) -> String {
        render(
            self.coeffs.iter().rev().map(|(e, c)| (vec![(var, *e)], c)),
        )
    }
}

impl From<UniPoly> for Vec<Term> {
    fn from(p: UniPoly) -> Self {
        p.coeffs
            .into_iter()
            .rev()
            .map(|(x, c)| Term { x, y: 0, c: c.to_string() })
            .collect()
    }
}

impl TryFrom<Vec<Term>> for UniPoly {
    type Error = Error;

    fn try_from(terms: Vec<Term>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for t in terms {
            if t.y != 0 {
                return Err(Error::Parse(format!(
                    "univariate polynomial term has y exponent {}",
                    t.y
                )));
            }
            add_into(&mut coeffs, t.x, &parse_coeff(&t.c)?);
        }
        Ok(UniPoly { coeffs })
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

/// Bivariate polynomial in `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Term>", try_from = "Vec<Term>")]
pub struct BiPoly {
    coeffs: BTreeMap<(u64, u64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(x_exp: u64, y_exp: u64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        insert_nonzero(&mut coeffs, (x_exp, y_exp), c);
        BiPoly { coeffs }
    }

    /// Builds from `((x exponent, y exponent), coefficient)` triples.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u64, u64), C)>,
        C: Into<BigInt>,
    {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            add_into(&mut coeffs, k, &c.into());
        }
        BiPoly { coeffs }
    }

    /// `1 + y x^exp`.
    pub fn one_plus_y_x(exp: u64) -> Self {
        Self::from_terms([((0, 0), 1), ((exp, 1), 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x_exp: u64, y_exp: u64) -> BigInt {
        self.coeffs.get(&(x_exp, y_exp)).cloned().unwrap_or_default()
    }

    pub fn max_x_degree(&self) -> Option<u64> {
        self.coeffs.keys().map(|k| k.0).max()
    }

    pub fn max_y_degree(&self) -> Option<u64> {
        self.coeffs.keys().map(|k| k.1).max()
    }

    /// Terms in canonical order: descending `x` exponent, then descending
    /// `y` exponent.
    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), &BigInt)> + '_ {
        self.coeffs.iter().rev().map(|(k, c)| (*k, c))
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            add_into(&mut coeffs, *k, c);
        }
        BiPoly { coeffs }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut coeffs = BTreeMap::new();
        for ((xa, ya), ca) in &self.coeffs {
            for ((xb, yb), cb) in &other.coeffs {
                add_into(&mut coeffs, (xa + xb, ya + yb), &(ca * cb));
            }
        }
        BiPoly { coeffs }
    }

    /// `self * (1 + y x^exp)`, the step used by every product expansion.
    pub fn mul_one_plus_y_x(&self, exp: u64) -> BiPoly {
        let mut coeffs = self.coeffs.clone();
        for ((xe, ye), c) in &self.coeffs {
            add_into(&mut coeffs, (xe + exp, ye + 1), c);
        }
        BiPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|((xe, ye), c)| c * Pow::pow(x, *xe) * Pow::pow(y, *ye))
            .sum()
    }

    /// The coefficient of `y^h` as a polynomial in `x`.
    pub fn slice_y(&self, h: u64) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((_, ye), _)| *ye == h)
                .map(|((xe, _), c)| (*xe, c.clone()))
                .collect(),
        }
    }

    /// Sets `y = 1`.
    pub fn collapse_y(&self) -> UniPoly {
        let mut coeffs = BTreeMap::new();
        for ((xe, _), c) in &self.coeffs {
            add_into(&mut coeffs, *xe, c);
        }
        UniPoly { coeffs }
    }

    /// Number of distinct `x` exponents carrying a `y^h` term.
    pub fn distinct_x_exponents(&self, h: u64) -> usize {
        self.coeffs.keys().filter(|(_, ye)| *ye == h).count()
    }

    /// Paper-style rendering, e.g. `x^{36}y^6+x^{35}y^5+...+xy+1`.
    pub fn to_text(&self) -> String {
        render(
            self.coeffs
                .iter()
                .rev()
                .map(|((xe, ye), c)| (vec![("x", *xe), ("y", *ye)], c)),
        )
    }
}

impl From<BiPoly> for Vec<Term> {
    fn from(p: BiPoly) -> Self {
        p.coeffs
            .into_iter()
            .rev()
            .map(|((x, y), c)| Term { x, y, c: c.to_string() })
            .collect()
    }
}

impl TryFrom<Vec<Term>> for BiPoly {
    type Error = Error;

    fn try_from(terms: Vec<Term>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for t in terms {
            add_into(&mut coeffs, (t.x, t.y), &parse_coeff(&t.c)?);
        }
        Ok(BiPoly { coeffs })
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn render<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (Vec<(&'a str, u64)>, &'a BigInt)>,
{
    let mut out = String::new();
    for (vars, c) in terms {
        let negative = c.sign() == num_bigint::Sign::Minus;
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.magnitude();
        let mut mono = String::new();
        for (v, e) in vars {
            match e {
                0 => {}
                1 => mono.push_str(v),
                2..=9 => mono.push_str(&format!("{v}^{e}")),
                _ => mono.push_str(&format!("{v}^{{{e}}}")),
            }
        }
        if mono.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `prod_{n=1..j} (1 + y x^{2n-1})`. The empty product (`j = 0`) is `1`.
pub fn expand_odd_product(j: u64) -> BiPoly {
    (1..=j).fold(BiPoly::one(), |acc, n| acc.mul_one_plus_y_x(2 * n - 1))
}

/// `prod_{n=1..j} (1 + y x^n)`.
pub fn expand_consecutive_product(j: u64) -> BiPoly {
    (1..=j).fold(BiPoly::one(), |acc, n| acc.mul_one_plus_y_x(n))
}

/// `q_s(x) = prod_{n=1..s} (1 + x^n)`; the coefficient of `x^m` counts
/// partitions of `m` into distinct parts no larger than `s`.
pub fn expand_qs(s: u64) -> UniPoly {
    (1..=s).fold(UniPoly::one(), |acc, n| acc.mul_one_plus(n))
}

/// `prod_{n=1..j} (1 + x^{2n-1})`: distinct odd parts at most `2j - 1`.
pub fn expand_odd_univariate(j: u64) -> UniPoly {
    (1..=j).fold(UniPoly::one(), |acc, n| acc.mul_one_plus(2 * n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(terms: &[((u64, u64), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|(k, c)| (*k, *c)))
    }

    #[test]
    fn two_factor_product() {
        let p = BiPoly::one_plus_y_x(1).mul(&BiPoly::one_plus_y_x(3));
        assert_eq!(p, bi(&[((0, 0), 1), ((1, 1), 1), ((3, 1), 1), ((4, 2), 1)]));
        assert_eq!(p.to_text(), "x^4y^2+x^3y+xy+1");
    }

    #[test]
    fn identity_and_zero() {
        let p = bi(&[((2, 1), 3), ((0, 0), -1)]);
        assert_eq!(p.mul(&BiPoly::one()), p);
        assert!(p.mul(&BiPoly::zero()).is_zero());
        assert_eq!(BiPoly::zero().to_text(), "0");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = bi(&[((1, 0), 1), ((0, 0), 1)]);
        let b = bi(&[((1, 0), 1), ((0, 0), -1)]);
        let p = a.mul(&b);
        assert_eq!(p, bi(&[((2, 0), 1), ((0, 0), -1)]));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn small_expansions() {
        assert_eq!(expand_odd_product(1), BiPoly::one_plus_y_x(1));
        assert_eq!(expand_consecutive_product(1), BiPoly::one_plus_y_x(1));
        assert_eq!(expand_odd_product(0), BiPoly::one());
        assert_eq!(expand_qs(1), UniPoly::from_dense([1, 1]));
        assert_eq!(expand_qs(3), UniPoly::from_dense([1, 1, 1, 2, 1, 1, 1]));
    }

    #[test]
    fn degrees() {
        let p = expand_odd_product(7);
        assert_eq!(p.max_x_degree(), Some(49));
        assert_eq!(p.max_y_degree(), Some(7));
        assert_eq!(expand_consecutive_product(7).max_x_degree(), Some(28));
        assert_eq!(expand_qs(9).degree(), Some(45));
    }

    #[test]
    fn slice_above_top_degree_is_zero() {
        assert!(expand_odd_product(4).slice_y(5).is_zero());
    }

    #[test]
    fn restrict_multiples_drops_constant() {
        let p = UniPoly::from_terms([(18u64, 1), (16, 1), (12, 3), (6, 1), (4, 1), (0, 7)]);
        let r = p.restrict_multiples(6).unwrap();
        assert_eq!(r, UniPoly::from_terms([(18u64, 1), (12, 3), (6, 1)]));
        assert!(UniPoly::zero().restrict_multiples(4).unwrap().is_zero());
        assert!(p.restrict_multiples(0).is_err());
    }

    #[test]
    fn text_rendering() {
        let p = UniPoly::from_terms([(11u64, 1), (10, -1), (3, 2), (1, 1), (0, -5)]);
        assert_eq!(p.to_text("q"), "q^{11}-q^{10}+2q^3+q-5");
        assert_eq!(UniPoly::monomial(2, BigInt::from(-1)).to_text("x"), "-x^2");
    }

    #[test]
    fn eval_sparse() {
        let p = UniPoly::from_terms([(5u64, 2), (2, -3), (0, 1)]);
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(2 * 243 - 27 + 1));
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(1));
    }

    #[test]
    fn json_shape() {
        let p = bi(&[((4, 2), 1), ((1, 1), -12)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"x":4,"y":2,"c":"1"},{"x":1,"y":1,"c":"-12"}]"#);
        let back: BiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let bad: std::result::Result<UniPoly, _> = serde_json::from_str(&s);
        assert!(bad.is_err());
    }
}
