//! Normalized sinc, `sin(pi w) / (pi w)`, directly and in log form.

use astro_float::BigFloat;

use super::hp::{cos, cosh, gt, int, ln, sin, sinh, HPComplex, LogComplex, RM};
use crate::error::{domain, Result};

/// Sinc of a real integer: exactly 1 at zero, 0 elsewhere.
pub(crate) fn exact_sinc(w: &HPComplex) -> Option<u8> {
    if !w.is_real() {
        return None;
    }
    if w.re.is_zero() {
        return Some(1);
    }
    w.re.is_int().then_some(0)
}

/// `pi (w - 2m)` for the even `2m` nearest `Re w`, as `(a, beta)` with
/// `a` in `[-pi, pi)`. `sin` is unchanged by the shift.
fn reduced_angle(w: &HPComplex, p: usize) -> (BigFloat, BigFloat) {
    let q = w.precision + 16;
    let half = BigFloat::from_f64(0.5, q);
    let two = int(2, q);
    let m = w.re.div(&two, q, RM).add(&half, q, RM).floor();
    let r = w.re.sub(&m.mul(&two, q, RM), q, RM);
    let pi = super::hp::pi(p + w.im.exponent().map_or(0, |e| e.max(0) as usize) + 16);
    (r.mul(&pi, p, RM), w.im.mul(&pi, p, RM))
}

/// `sin(a + i beta)` by the product formula, for moderate `beta`.
fn sin_direct(a: &BigFloat, beta: &BigFloat, p: usize) -> HPComplex {
    let q = p + 16;
    HPComplex::new(
        sin(a, q).mul(&cosh(beta, q), p, RM),
        cos(a, q).mul(&sinh(beta, q), p, RM),
        p,
    )
}

/// `log sin(a + i beta)` for `|beta| > 1`, through the decaying exponential
/// so nothing overflows:
/// `beta > 0`: `sin w = (i/2) e^{-iw} (1 - e^{2iw})`,
/// `beta < 0`: `sin w = (-i/2) e^{iw} (1 - e^{-2iw})`.
fn log_sin_large(a: &BigFloat, beta: &BigFloat, p: usize) -> LogComplex {
    let q = p + 16;
    let pos = beta.is_positive();
    let abs_beta = beta.abs();
    // e^{+-2iw} = e^{-2|beta|} (cos 2a +- i sin 2a)
    let decay = super::hp::exp(&abs_beta.mul(&int(-2, q), q, RM), q);
    let two_a = a.mul(&int(2, q), q, RM);
    let mut s2 = sin(&two_a, q);
    if !pos {
        s2 = s2.neg();
    }
    let e = HPComplex::new(decay.mul(&cos(&two_a, q), q, RM), decay.mul(&s2, q, RM), q);
    let one_minus = HPComplex::from_i64(1, q).sub(&e);
    let tail = one_minus.ln().expect("|e^{2iw}| < 1");
    let half_pi = super::hp::pi(q).div(&int(2, q), q, RM);
    let ln2 = super::hp::ln2(q);
    let log_mag = abs_beta.sub(&ln2, q, RM).add(&tail.log_mag, p, RM);
    let phase = if pos {
        half_pi.sub(a, q, RM)
    } else {
        a.sub(&half_pi, q, RM)
    };
    LogComplex::new(log_mag, phase.add(&tail.phase, q, RM), p)
}

fn beta_is_large(beta: &BigFloat) -> bool {
    gt(&beta.abs(), &BigFloat::from_f64(1.0, 64))
}

/// `log sinc(w)` for `w` not a real integer. Phase in `(-pi, pi]`.
pub fn log_sinc_c(w: &HPComplex) -> Result<LogComplex> {
    if w.is_zero() {
        return domain("log sinc is taken at a removable singularity w = 0");
    }
    if exact_sinc(w).is_some() {
        return domain("sinc vanishes at nonzero real integers");
    }
    log_sinc_at(w, w.precision)
}

/// As `log_sinc_c`, computing at `p` bits while reading `w` at its own
/// (possibly much larger) precision.
pub(crate) fn log_sinc_at(w: &HPComplex, p: usize) -> Result<LogComplex> {
    let (a, beta) = reduced_angle(w, p + 32);
    let q = p + 32;
    let log_sin = if beta_is_large(&beta) {
        log_sin_large(&a, &beta, q)
    } else {
        match sin_direct(&a, &beta, q).ln() {
            Some(l) => l,
            None => return domain("sin(pi w) underflowed to zero"),
        }
    };
    let lw = w.ln().expect("w is nonzero");
    let ln_pi = ln(&super::hp::pi(q), q);
    let log_mag = log_sin
        .log_mag
        .sub(&ln_pi, q, RM)
        .sub(&lw.log_mag, p, RM);
    let phase = log_sin.phase.sub(&lw.phase, q, RM);
    Ok(LogComplex::new(log_mag, phase, p))
}

/// `sin(pi w) / (pi w)` with `sinc(0) = 1`; exact 0 or 1 at real integers.
pub fn sinc_c(w: &HPComplex) -> HPComplex {
    let p = w.precision;
    if let Some(v) = exact_sinc(w) {
        return HPComplex::from_i64(v.into(), p);
    }
    let (a, beta) = reduced_angle(w, p + 32);
    if beta_is_large(&beta) {
        return log_sinc_at(w, p).expect("w is not a real integer").exp();
    }
    let s = sin_direct(&a, &beta, p + 32);
    let pw = w.scale(&super::hp::pi(p + 32)).with_precision(p + 32);
    let out = s.div(&pw);
    out.with_precision(p)
}
