//! The continuation
//! `omega(z) = log2 sum_{x=1}^{c} sinc(prod_{y=1}^{c+1} (x^2 + x - y z))`,
//! `c = ceil(Re z)`, which agrees with the prime omega function at positive
//! integers.
//!
//! `z` is taken as the exact binary value it holds; parse it at a precision
//! at least as large as any precision requested here. The function is not
//! analytic where `Re z` crosses an integer (the range of `x` jumps); such
//! inputs are evaluated as given.

use astro_float::BigFloat;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::hp::{
    format_pow2, gt, int, ln, ln2, log2_abs, supported_frac_digits, to_bigint, to_decimal, HPComplex,
    LogComplex, RM,
};
use super::sinc::{exact_sinc, log_sinc_at};
use crate::error::{domain, Error, Result};
use crate::even::psi_root_count;

pub const DEFAULT_PRECISION: usize = 256;
/// Automatic escalation stops at this multiple of the requested precision.
pub const MAX_ESCALATION: usize = 8;
/// Largest `ceil(Re z)` evaluated.
pub const MAX_CEIL: u64 = 400;
/// Bits that must survive cancellation in the inner sum.
const MIN_SURVIVING_BITS: f64 = 64.0;

/// One summand `sinc(P_x)`.
#[derive(Debug, Clone)]
enum Term {
    Exact(u8),
    Log(LogComplex),
}

/// The inner sum in log form.
#[derive(Debug, Clone)]
pub struct InnerSum {
    /// Set when every summand was an exact 0 or 1.
    pub exact: Option<u64>,
    /// Logarithm of the sum (principal branch); `None` when it is zero.
    pub log: Option<LogComplex>,
    /// Bits lost to cancellation.
    pub lost_bits: f64,
    pub terms: usize,
    pub precision: usize,
}

/// `ceil(Re z)` as an integer, checked against the supported range.
pub fn ceil_re(z: &HPComplex) -> Result<u64> {
    if !z.re.is_positive() || z.re.is_zero() {
        return domain("omega(z) is defined here only for Re z > 0");
    }
    let c = to_bigint(&z.re.ceil()).and_then(|c| c.to_u64());
    match c {
        Some(c) if c <= MAX_CEIL => Ok(c),
        _ => domain(format!("ceil(Re z) exceeds the supported maximum {MAX_CEIL}")),
    }
}

/// `prod_{y=1}^{c+1} (x^2 + x - y z)` with enough bits that its absolute
/// error stays below `2^-(p + 48)`.
fn inner_product(z: &HPComplex, x: u64, c: u64, p: usize) -> HPComplex {
    let s = (x * x + x) as f64;
    let zabs = 2f64.powf(z.log2_abs());
    let bound: f64 = (1..=c + 1).map(|y| (s + y as f64 * zabs).log2()).sum();
    let wp = p + 64 + bound.max(0.0).ceil() as usize + (64 - (c + 1).leading_zeros()) as usize;
    let s = HPComplex::from_i64((x * x + x) as i64, wp);
    let z = z.with_precision(wp);
    let mut acc = HPComplex::from_i64(1, wp);
    for y in 1..=c + 1 {
        let f = s.sub(&z.scale(&int(y as i64, wp)));
        acc = acc.mul(&f);
    }
    acc
}

fn term(z: &HPComplex, x: u64, c: u64, p: usize) -> Result<Term> {
    let prod = inner_product(z, x, c, p);
    if let Some(v) = exact_sinc(&prod) {
        return Ok(Term::Exact(v));
    }
    Ok(Term::Log(log_sinc_at(&prod, p)?))
}

/// Deterministic pairwise sum.
fn tree_sum(mut v: Vec<HPComplex>, p: usize) -> HPComplex {
    if v.is_empty() {
        return HPComplex::zero(p);
    }
    while v.len() > 1 {
        v = v
            .chunks(2)
            .map(|c| if c.len() == 2 { c[0].add(&c[1]) } else { c[0].clone() })
            .collect();
    }
    v.pop().expect("nonempty")
}

/// The inner sum at `p` bits, without escalation.
pub fn inner_sum(z: &HPComplex, p: usize) -> Result<InnerSum> {
    let c = ceil_re(z)?;
    let terms: Vec<Term> = (1..=c)
        .into_par_iter()
        .map(|x| term(z, x, c, p))
        .collect::<Result<_>>()?;
    let n = terms.len();
    if terms.iter().all(|t| matches!(t, Term::Exact(_))) {
        let count: u64 = terms
            .iter()
            .map(|t| match t {
                Term::Exact(v) => u64::from(*v),
                Term::Log(_) => 0,
            })
            .sum();
        let log = (count > 0).then(|| LogComplex::new(ln(&int(count as i64, p + 16), p), BigFloat::new(p), p));
        return Ok(InnerSum { exact: Some(count), log, lost_bits: 0.0, terms: n, precision: p });
    }
    let logs: Vec<LogComplex> = terms
        .into_iter()
        .filter_map(|t| match t {
            Term::Exact(0) => None,
            Term::Exact(_) => Some(LogComplex::new(BigFloat::new(p), BigFloat::new(p), p)),
            Term::Log(l) => Some(l),
        })
        .collect();
    let shift = logs
        .iter()
        .map(|l| &l.log_mag)
        .fold(None::<&BigFloat>, |m, v| match m {
            Some(m) if !gt(v, m) => Some(m),
            _ => Some(v),
        })
        .expect("some summand is inexact")
        .clone();
    let parts: Vec<HPComplex> = logs.iter().map(|l| l.exp_shifted(&shift)).collect();
    let mut s = tree_sum(parts, p);
    if z.is_real() {
        // every summand is real; drop rounding noise so a negative sum
        // lands on the principal side of the cut
        s.im = BigFloat::new(p);
    }
    let mag = s.log2_abs();
    let lost = (-mag).max(0.0) + (n as f64).log2();
    let log = s.ln().map(|l| {
        let log_mag = l.log_mag.add(&shift, p, RM);
        LogComplex { log_mag, phase: l.phase, precision: p }
    });
    Ok(InnerSum { exact: None, log, lost_bits: if mag.is_finite() { lost } else { f64::INFINITY }, terms: n, precision: p })
}

/// `omega(z)` with its error bound and the precision it was obtained at.
#[derive(Debug, Clone)]
pub struct OmegaResult {
    pub value: HPComplex,
    /// `log2` of the absolute error bound (per component).
    pub err_log2: f64,
    pub precision_bits: usize,
    /// Set when the inner sum was an exact integer.
    pub exact_sum: Option<u64>,
}

/// Decimal rendering of an [`OmegaResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OmegaValue {
    pub re: String,
    pub im: String,
    pub err_bound: String,
    pub precision_bits: usize,
}

impl OmegaResult {
    /// Fractional digits justified by the error bound.
    pub fn digits(&self) -> usize {
        let mag = log2_abs(&self.value.re).max(log2_abs(&self.value.im));
        let supported = supported_frac_digits(self.precision_bits, mag);
        let by_err = (-self.err_log2 * std::f64::consts::LOG10_2).floor().max(0.0) as usize;
        supported.min(by_err)
    }

    pub fn to_value(&self) -> OmegaValue {
        let d = self.digits();
        OmegaValue {
            re: to_decimal(&self.value.re, d),
            im: to_decimal(&self.value.im, d),
            err_bound: format_pow2(self.err_log2),
            precision_bits: self.precision_bits,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        self.value.to_f64()
    }
}

fn log2_sum(a: f64, b: f64) -> f64 {
    let hi = a.max(b);
    hi + (2f64.powf(a - hi) + 2f64.powf(b - hi)).log2()
}

fn finish(sum: &InnerSum, p: usize) -> Result<OmegaResult> {
    let log = match &sum.log {
        Some(l) => l,
        None => return domain("the inner sum vanishes, so omega(z) is undefined"),
    };
    let l2 = ln2(p + 16);
    let re = log.log_mag.div(&l2, p, RM);
    let im = log.phase.div(&l2, p, RM);
    // rounding in each summand, magnified by cancellation, plus the
    // relative error of the log-magnitude shift
    let sum_err = (sum.terms.max(1) as f64).log2() + 8.0 - p as f64 + sum.lost_bits;
    let shift_err = log2_abs(&log.log_mag) + 4.0 - p as f64;
    let err_log2 = match sum.exact {
        Some(n) if n.is_power_of_two() => f64::NEG_INFINITY,
        _ => log2_sum(sum_err, shift_err) + 1.0,
    };
    let value = HPComplex::new(re, im, p);
    Ok(OmegaResult { value, err_log2, precision_bits: p, exact_sum: sum.exact })
}

/// `omega(z)` at `precision_bits`, doubling the precision (up to
/// `MAX_ESCALATION` times the request) while cancellation leaves fewer than
/// 64 good bits.
pub fn omega_cont(z: &HPComplex, precision_bits: usize) -> Result<OmegaResult> {
    let p0 = precision_bits.max(super::hp::MIN_PRECISION);
    let c = ceil_re(z)?;
    if z.is_real() && z.re.is_int() {
        // integer input: every summand is exactly 0 or 1
        let count = psi_root_count(c);
        let log = LogComplex::new(ln(&int(count as i64, p0 + 16), p0), BigFloat::new(p0), p0);
        let sum = InnerSum { exact: Some(count), log: Some(log), lost_bits: 0.0, terms: c as usize, precision: p0 };
        return finish(&sum, p0);
    }
    let mut p = p0;
    loop {
        let sum = inner_sum(z, p)?;
        let ok = sum.exact.is_some() || (p as f64 - sum.lost_bits) >= MIN_SURVIVING_BITS;
        if ok {
            return finish(&sum, p);
        }
        if p >= p0 * MAX_ESCALATION {
            return Err(Error::PrecisionExhausted { bits: p });
        }
        p *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::even::omega_int;

    fn z(s: &str) -> HPComplex {
        HPComplex::parse(s, 4096).unwrap()
    }

    #[test]
    fn integer_inputs() {
        let r = omega_cont(&z("6"), 128).unwrap();
        assert_eq!(r.to_f64(), (2.0, 0.0));
        assert_eq!(r.exact_sum, Some(4));
        for t in 1..=12u64 {
            let r = omega_cont(&HPComplex::from_i64(t as i64, 128), 128).unwrap();
            assert!((r.to_f64().0 - omega_int(t) as f64).abs() < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn generic_path_counts_roots_at_integers() {
        for t in 1..=15u64 {
            let s = inner_sum(&HPComplex::from_i64(t as i64, 128), 128).unwrap();
            assert_eq!(s.exact, Some(psi_root_count(t)), "t = {t}");
        }
    }

    #[test]
    fn pi_and_e() {
        let r = omega_cont(&z("pi"), 256).unwrap();
        let (re, im) = r.to_f64();
        assert!((re + 9.92870894527892).abs() < 1e-12 && im.abs() < 1e-12, "{re} {im}");
        let r = omega_cont(&z("e"), 256).unwrap();
        let (re, im) = r.to_f64();
        assert!((re + 6.09630252709462).abs() < 1e-12, "{re}");
        assert!((im - 4.53236014182719).abs() < 1e-12, "{im}");
    }

    #[test]
    fn domain() {
        assert!(omega_cont(&z("0"), 128).is_err());
        assert!(omega_cont(&z("-1+2i"), 128).is_err());
        assert!(omega_cont(&z("1000.5"), 128).is_err());
    }

    #[test]
    fn report_shape() {
        let v = omega_cont(&z("2.5"), 128).unwrap().to_value();
        assert!(v.re.starts_with("-10.876703566415820762186"), "{}", v.re);
        assert_eq!(v.precision_bits, 128);
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"errBound\"") && json.contains("\"precisionBits\":128"));
        assert_eq!(serde_json::from_str::<OmegaValue>(&json).unwrap(), v);
    }
}
