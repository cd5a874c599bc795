//! Binary floating-point helpers on top of `astro_float::BigFloat`, and the
//! complex types used by the continuation.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MIN_PRECISION: usize = 53;
pub const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Runs `f` with this thread's constants cache.
pub fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

pub fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

pub fn ln2(p: usize) -> BigFloat {
    with_consts(|cc| cc.ln_2(p, RM))
}

/// `a > b`; false when either is NaN.
pub fn gt(a: &BigFloat, b: &BigFloat) -> bool {
    a.cmp(b).is_some_and(|c| c > 0)
}

pub fn int(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

pub fn ln(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.ln(p, RM, cc))
}

pub fn exp(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.exp(p, RM, cc))
}

pub fn sin(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.sin(p, RM, cc))
}

pub fn cos(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.cos(p, RM, cc))
}

pub fn sinh(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.sinh(p, RM, cc))
}

pub fn cosh(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.cosh(p, RM, cc))
}

/// `x^y` for `x > 0`.
pub fn powf(x: &BigFloat, y: &BigFloat, p: usize) -> BigFloat {
    if y.is_int() {
        if let Some(n) = to_bigint(y).and_then(|n| n.to_usize()) {
            return x.powi(n, p, RM);
        }
    }
    exp(&ln(x, p + 32).mul(y, p + 32, RM), p)
}

/// Angle of `(x, y)` in `(-pi, pi]`; `atan2(0, 0) = 0`.
pub fn atan2(y: &BigFloat, x: &BigFloat, p: usize) -> BigFloat {
    let q = p + 16;
    if x.is_zero() {
        if y.is_zero() {
            return BigFloat::new(p);
        }
        let half = pi(q).div(&int(2, q), q, RM);
        return if y.is_negative() { half.neg() } else { half };
    }
    // atan of the smaller ratio keeps the argument bounded
    if gt(&y.abs(), &x.abs()) {
        let r = with_consts(|cc| x.div(y, q, RM).atan(q, RM, cc));
        let half = pi(q).div(&int(2, q), q, RM);
        let base = if y.is_negative() { half.neg() } else { half };
        return base.sub(&r, p, RM);
    }
    let r = with_consts(|cc| y.div(x, q, RM).atan(q, RM, cc));
    if x.is_positive() {
        r
    } else if y.is_negative() {
        r.sub(&pi(q), p, RM)
    } else {
        r.add(&pi(q), p, RM)
    }
}

/// Reduces `phi` into `(-pi, pi]`.
pub fn normalize_phase(phi: &BigFloat, p: usize) -> BigFloat {
    let extra = phi.exponent().map_or(0, |e| e.max(0) as usize);
    let q = p + extra + 16;
    let two_pi = pi(q).mul(&int(2, q), q, RM);
    let turns = phi.div(&two_pi, q, RM);
    let n = turns.add(&BigFloat::from_f64(0.5, q), q, RM).floor();
    let mut r = phi.sub(&n.mul(&two_pi, q, RM), q, RM);
    let pi_q = pi(q);
    if gt(&r, &pi_q) {
        r = r.sub(&two_pi, q, RM);
    } else if !gt(&r, &pi_q.neg()) {
        r = r.add(&two_pi, q, RM);
    }
    let mut out = r;
    out.set_precision(p, RM).ok();
    out
}

/// The integer value of an integral `x`; `None` for NaN, infinities or
/// non-integers.
pub fn to_bigint(x: &BigFloat) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    if !x.is_int() {
        return None;
    }
    let (words, _, sign, e, _) = x.as_raw_parts()?;
    let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
    let m = BigUint::from_bytes_le(&bytes);
    let width = (words.len() * astro_float::WORD_BIT_SIZE) as i64;
    let shift = e as i64 - width;
    let mag = if shift >= 0 { m << shift as usize } else { m >> (-shift) as usize };
    let v = BigInt::from(mag);
    Some(if sign == Sign::Neg { -v } else { v })
}

/// `x` rounded to the nearest `f64` (infinite or zero outside its range).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().expect("normalized mantissa") as f64;
    let v = top * 2f64.powi(e.saturating_sub(64).max(-1100));
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// `log2 |x|`, usable far outside the `f64` range.
pub fn log2_abs(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let Some((words, _, _, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = *words.last().expect("normalized mantissa") as f64;
    top.log2() - 64.0 + e as f64
}

/// Fixed-point decimal rendering with `frac_digits` digits after the point,
/// rounded half away from zero.
pub fn to_decimal(x: &BigFloat, frac_digits: usize) -> String {
    let p = x.precision().unwrap_or(64).max(64) + (frac_digits as f64 * 3.33) as usize + 64;
    let scale = BigFloat::from_u64(10, p).powi(frac_digits, p, RM);
    let scaled = x.mul(&scale, p, RM);
    let half = BigFloat::from_f64(0.5, p);
    let rounded = if scaled.is_negative() {
        scaled.sub(&half, p, RM).ceil()
    } else {
        scaled.add(&half, p, RM).floor()
    };
    let n = to_bigint(&rounded).unwrap_or_default();
    let neg = n.is_negative();
    let digits = n.abs().to_string();
    let digits = if digits.len() <= frac_digits {
        format!("{}{digits}", "0".repeat(frac_digits + 1 - digits.len()))
    } else {
        digits
    };
    let (int_part, frac_part) = digits.split_at(digits.len() - frac_digits);
    let sign = if neg { "-" } else { "" };
    if frac_digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Decimal digits after the point that `p` bits support for a value of
/// magnitude `2^log2_mag`.
pub fn supported_frac_digits(p: usize, log2_mag: f64) -> usize {
    let sig = (p as f64 - 8.0) * std::f64::consts::LOG10_2;
    let int_digits = (log2_mag.max(0.0) * std::f64::consts::LOG10_2).floor() + 1.0;
    (sig - int_digits).max(0.0) as usize
}

/// Scientific rendering of `2^log2`, e.g. `3.1e-70`.
pub fn format_pow2(log2: f64) -> String {
    if log2 == f64::NEG_INFINITY {
        return "0".into();
    }
    let l10 = log2 * std::f64::consts::LOG10_2;
    let mut e = l10.floor();
    let mut m = 10f64.powf(l10 - e);
    if m >= 9.95 {
        m /= 10.0;
        e += 1.0;
    }
    format!("{m:.1}e{e}")
}

/// Parses a real token: decimal literal, `pi` or `e`, optionally signed.
pub fn parse_real(tok: &str, p: usize) -> Result<BigFloat> {
    let tok = tok.trim();
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let v = match body {
        "pi" | "π" => pi(p),
        "e" => with_consts(|cc| cc.e(p, RM)),
        _ => {
            let ok = !body.is_empty()
                && body.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
                && body.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '.');
            if !ok {
                return Err(Error::Parse(format!("not a real number: {tok:?}")));
            }
            let v = with_consts(|cc| BigFloat::parse(body, Radix::Dec, p, RM, cc));
            if v.is_nan() || v.is_inf() {
                return Err(Error::Parse(format!("not a real number: {tok:?}")));
            }
            v
        }
    };
    Ok(if neg { v.neg() } else { v })
}

fn is_exponent_sign(bytes: &[u8], i: usize) -> bool {
    i >= 2 && matches!(bytes[i - 1], b'e' | b'E') && (bytes[i - 2].is_ascii_digit() || bytes[i - 2] == b'.')
}

/// Complex number with an explicit working precision in bits.
#[derive(Debug, Clone)]
pub struct HPComplex {
    pub re: BigFloat,
    pub im: BigFloat,
    pub precision: usize,
}

impl HPComplex {
    pub fn new(re: BigFloat, im: BigFloat, precision: usize) -> Self {
        HPComplex { re, im, precision: precision.max(MIN_PRECISION) }
    }

    pub fn zero(p: usize) -> Self {
        Self::new(BigFloat::new(p), BigFloat::new(p), p)
    }

    pub fn from_i64(v: i64, p: usize) -> Self {
        Self::new(int(v, p), BigFloat::new(p), p)
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Self::new(BigFloat::from_f64(re, p), BigFloat::from_f64(im, p), p)
    }

    pub fn with_precision(&self, p: usize) -> Self {
        Self::new(self.re.clone(), self.im.clone(), p)
    }

    /// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`; components may be `pi` or `e`.
    pub fn parse(s: &str, p: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty complex number".into()));
        }
        if let Ok(re) = parse_real(&s, p) {
            return Ok(Self::new(re, BigFloat::new(p), p));
        }
        let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
            return Err(Error::Parse(format!("not a complex number: {s:?}")));
        };
        // split at the last sign that is not leading and not an exponent sign
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| matches!(bytes[i], b'+' | b'-') && !is_exponent_sign(bytes, i));
        let (re_tok, im_tok) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im_tok {
            "" | "+" => int(1, p),
            "-" => int(-1, p),
            t => parse_real(t.trim_end_matches('*'), p)?,
        };
        Ok(Self::new(parse_real(re_tok, p)?, im, p))
    }

    fn prec(&self, other: &Self) -> usize {
        self.precision.max(other.precision)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec(o);
        Self::new(self.re.add(&o.re, p, RM), self.im.add(&o.im, p, RM), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec(o);
        Self::new(self.re.sub(&o.re, p, RM), self.im.sub(&o.im, p, RM), p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec(o);
        let q = p + 8;
        let re = self.re.mul(&o.re, q, RM).sub(&self.im.mul(&o.im, q, RM), p, RM);
        let im = self.re.mul(&o.im, q, RM).add(&self.im.mul(&o.re, q, RM), p, RM);
        Self::new(re, im, p)
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.prec(o);
        let q = p + 8;
        let den = o.re.mul(&o.re, q, RM).add(&o.im.mul(&o.im, q, RM), q, RM);
        let re = self.re.mul(&o.re, q, RM).add(&self.im.mul(&o.im, q, RM), q, RM);
        let im = self.im.mul(&o.re, q, RM).sub(&self.re.mul(&o.im, q, RM), q, RM);
        Self::new(re.div(&den, p, RM), im.div(&den, p, RM), p)
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        let p = self.precision;
        Self::new(self.re.mul(k, p, RM), self.im.mul(k, p, RM), p)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg(), self.precision)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> BigFloat {
        let q = self.precision + 8;
        self.re.mul(&self.re, q, RM).add(&self.im.mul(&self.im, q, RM), q, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.precision, RM)
    }

    /// `log2 |z|` as an `f64`, valid for any exponent.
    pub fn log2_abs(&self) -> f64 {
        let a = log2_abs(&self.re);
        let b = log2_abs(&self.im);
        let hi = a.max(b);
        if hi == f64::NEG_INFINITY {
            return hi;
        }
        hi + 0.5 * (1.0 + 2f64.powf(2.0 * (a.min(b) - hi))).log2()
    }

    /// Principal logarithm; `None` at zero.
    pub fn ln(&self) -> Option<LogComplex> {
        if self.is_zero() {
            return None;
        }
        let p = self.precision;
        let q = p + 16;
        let half = BigFloat::from_f64(0.5, q);
        let log_mag = ln(&self.norm_sqr(), q).mul(&half, p, RM);
        Some(LogComplex { log_mag, phase: atan2(&self.im, &self.re, p), precision: p })
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl fmt::Display for HPComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(12);
        let re = to_decimal(&self.re, d);
        let im = to_decimal(&self.im, d);
        match im.strip_prefix('-') {
            Some(mag) => write!(f, "{re} - {mag}i"),
            None => write!(f, "{re} + {im}i"),
        }
    }
}

/// `log_mag + i phase`, the logarithm of a nonzero complex number, phase in
/// `(-pi, pi]`.
#[derive(Debug, Clone)]
pub struct LogComplex {
    pub log_mag: BigFloat,
    pub phase: BigFloat,
    pub precision: usize,
}

impl LogComplex {
    /// Builds the value with the phase reduced into `(-pi, pi]`.
    pub fn new(log_mag: BigFloat, phase: BigFloat, precision: usize) -> Self {
        let phase = normalize_phase(&phase, precision);
        LogComplex { log_mag, phase, precision }
    }

    /// `exp(self)`.
    pub fn exp(&self) -> HPComplex {
        let p = self.precision;
        let m = exp(&self.log_mag, p + 8);
        Self::polar(&m, &self.phase, p)
    }

    /// `exp(self - shift)`, for log-sum-exp.
    pub fn exp_shifted(&self, shift: &BigFloat) -> HPComplex {
        let p = self.precision;
        let m = exp(&self.log_mag.sub(shift, p + 16, RM), p + 8);
        Self::polar(&m, &self.phase, p)
    }

    fn polar(m: &BigFloat, phase: &BigFloat, p: usize) -> HPComplex {
        let q = p + 8;
        HPComplex::new(
            m.mul(&cos(phase, q), p, RM),
            m.mul(&sin(phase, q), p, RM),
            p,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_roundtrip() {
        for v in [1i64, 2, 3, 7, -12, 1 << 40, -(1 << 62) + 5, 123_456_789] {
            assert_eq!(to_bigint(&int(v, 128)), Some(BigInt::from(v)));
        }
        let big = BigFloat::from_u64(10, 512).powi(40, 512, RM);
        assert_eq!(to_bigint(&big).unwrap().to_string(), format!("1{}", "0".repeat(40)));
        assert_eq!(to_bigint(&BigFloat::from_f64(2.5, 64)), None);
    }

    #[test]
    fn decimals() {
        assert_eq!(to_decimal(&BigFloat::from_f64(2.5, 64), 3), "2.500");
        assert_eq!(to_decimal(&BigFloat::from_f64(-0.125, 64), 2), "-0.13");
        assert_eq!(to_decimal(&BigFloat::from_f64(0.001, 64), 2), "0.00");
        assert_eq!(to_decimal(&pi(256), 30), "3.141592653589793238462643383280");
        assert_eq!(to_decimal(&int(-7, 64), 0), "-7");
        assert_eq!(format_pow2(-10.0), "9.8e-4");
        assert_eq!(format_pow2(f64::NEG_INFINITY), "0");
    }

    #[test]
    fn f64_views() {
        assert_eq!(to_f64(&BigFloat::from_f64(-3.75, 128)), -3.75);
        assert_eq!(log2_abs(&int(1024, 64)), 10.0);
        let huge = exp(&int(100_000, 128), 128);
        assert!((log2_abs(&huge) - 100_000.0 / std::f64::consts::LN_2).abs() < 1e-6);
    }

    #[test]
    fn angles() {
        let p = 128;
        let cases = [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (0.0, -2.0), (-3.0, 0.0), (5.0, -0.1)];
        for (x, y) in cases {
            let a = to_f64(&atan2(&BigFloat::from_f64(y, p), &BigFloat::from_f64(x, p), p));
            assert!((a - f64::atan2(y, x)).abs() < 1e-15, "atan2({y}, {x})");
        }
        let r = to_f64(&normalize_phase(&BigFloat::from_f64(10.0, p), p));
        assert!((r - (10.0 - 4.0 * std::f64::consts::PI)).abs() < 1e-14);
        // -pi rounded to p bits sits on the cut; either end is acceptable
        let r = to_f64(&normalize_phase(&pi(p).neg(), p));
        assert!((r.abs() - std::f64::consts::PI).abs() < 1e-15);
        let r = to_f64(&normalize_phase(&BigFloat::from_f64(-1e6, p), p));
        let turns = (-1e6 - r) / (2.0 * std::f64::consts::PI);
        assert!(r.abs() <= std::f64::consts::PI && (turns - turns.round()).abs() < 1e-9);
    }

    #[test]
    fn parsing() {
        let p = 128;
        let z = HPComplex::parse("4+1i", p).unwrap();
        assert_eq!(z.to_f64(), (4.0, 1.0));
        assert_eq!(HPComplex::parse("4+i", p).unwrap().to_f64(), (4.0, 1.0));
        assert_eq!(HPComplex::parse("2.5 - 0.25i", p).unwrap().to_f64(), (2.5, -0.25));
        assert_eq!(HPComplex::parse("-2i", p).unwrap().to_f64(), (0.0, -2.0));
        assert_eq!(HPComplex::parse("1e-3+2e+1i", p).unwrap().to_f64(), (0.001, 20.0));
        assert_eq!(HPComplex::parse("pi", p).unwrap().to_f64().0, std::f64::consts::PI);
        assert_eq!(HPComplex::parse("e", p).unwrap().to_f64().0, std::f64::consts::E);
        assert_eq!(HPComplex::parse("e+2i", p).unwrap().to_f64(), (std::f64::consts::E, 2.0));
        assert!(HPComplex::parse("abc", p).is_err());
        assert!(HPComplex::parse("", p).is_err());
        // exact decimal: 0.1 at 256 bits differs from the f64 0.1
        let tenth = HPComplex::parse("0.1", 256).unwrap();
        assert_eq!(to_decimal(&tenth.re, 60), format!("0.1{}", "0".repeat(59)));
    }

    #[test]
    fn complex_ops() {
        let p = 128;
        let a = HPComplex::from_f64(1.0, 2.0, p);
        let b = HPComplex::from_f64(3.0, -1.0, p);
        assert_eq!(a.mul(&b).to_f64(), (5.0, 5.0));
        assert_eq!(a.mul(&b).div(&b).to_f64(), (1.0, 2.0));
        let l = HPComplex::from_f64(-1.0, 0.0, p).ln().unwrap();
        assert!((to_f64(&l.phase) - std::f64::consts::PI).abs() < 1e-15);
        let back = l.exp().to_f64();
        assert!((back.0 + 1.0).abs() < 1e-30 && back.1.abs() < 1e-30);
        assert!(HPComplex::zero(p).ln().is_none());
    }
}
