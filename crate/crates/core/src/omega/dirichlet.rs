//! `sum_t 2^omega(t) / t^s = zeta(s)^2 / zeta(2s)`, checked by partial sums.

use astro_float::BigFloat;
use rayon::prelude::*;

use super::hp::{gt, int, powf, to_f64, RM};
use crate::error::{domain, Result};

const CHUNK: u64 = 4096;

/// `B_2, B_4, ..., B_20` as `(numerator, denominator)`.
const BERNOULLI: [(i64, i64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

fn check_s(s: &BigFloat) -> Result<()> {
    if !gt(s, &int(2, 64)) {
        return domain("the series needs s > 2");
    }
    Ok(())
}

/// `omega(t)` for `t <= n` by sieving.
pub fn omega_sieve(n: u64) -> Vec<u8> {
    let mut w = vec![0u8; n as usize + 1];
    for p in 2..=n as usize {
        if w[p] == 0 {
            for m in (p..=n as usize).step_by(p) {
                w[m] += 1;
            }
        }
    }
    w
}

/// `sum_{t=1}^{T} 2^omega(t) / t^s`, summed in fixed chunks so the result
/// does not depend on the thread count.
pub fn dirichlet_partial(s: &BigFloat, t_max: u64, p: usize) -> Result<BigFloat> {
    check_s(s)?;
    if t_max == 0 {
        return domain("T must be at least 1");
    }
    let w = omega_sieve(t_max);
    let q = p + 32;
    let starts: Vec<u64> = (1..=t_max).step_by(CHUNK as usize).collect();
    let partials: Vec<BigFloat> = starts
        .par_iter()
        .map(|&a| {
            let b = (a + CHUNK - 1).min(t_max);
            let mut acc = BigFloat::new(q);
            for t in a..=b {
                let num = int(1i64 << w[t as usize], q);
                let den = powf(&int(t as i64, q), s, q);
                acc = acc.add(&num.div(&den, q, RM), q, RM);
            }
            acc
        })
        .collect();
    let mut total = BigFloat::new(q);
    for v in &partials {
        total = total.add(v, q, RM);
    }
    total.set_precision(p, RM).ok();
    Ok(total)
}

/// Upper bound on `sum_{t > T} 2^omega(t) / t^s`: since `2^omega(t) <= t`,
/// the tail is at most `int_T^inf u^{1-s} du = T^{2-s} / (s - 2)`.
pub fn tail_bound(s: f64, t_max: u64) -> f64 {
    (t_max as f64).powf(2.0 - s) / (s - 2.0)
}

/// `zeta(s)` for real `s > 1` by direct summation to `N` and
/// Euler-Maclaurin correction through `B_20`.
pub fn zeta(s: &BigFloat, p: usize) -> Result<BigFloat> {
    if !gt(s, &int(1, 64)) {
        return domain("zeta is summed here only for s > 1");
    }
    let q = p + 32;
    let n = 32 + p as i64;
    let mut acc = BigFloat::new(q);
    for k in 1..n {
        acc = acc.add(&powf(&int(k, q), s, q).reciprocal(q, RM), q, RM);
    }
    let big_n = int(n, q);
    let n_pow = powf(&big_n, s, q).reciprocal(q, RM); // N^-s
    let s_minus_1 = s.sub(&int(1, q), q, RM);
    acc = acc.add(&n_pow.mul(&big_n, q, RM).div(&s_minus_1, q, RM), q, RM);
    acc = acc.add(&n_pow.div(&int(2, q), q, RM), q, RM);
    // B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^{-s-2k+1}
    let mut rising = s.clone(); // s (s+1) ... (s+2k-2)
    let mut factorial = int(2, q); // (2k)!
    let mut power = n_pow.div(&big_n, q, RM); // N^{-s-2k+1}
    let n2 = big_n.mul(&big_n, q, RM);
    for (k, &(bn, bd)) in (1i64..).zip(BERNOULLI.iter()) {
        let b = int(bn, q).div(&int(bd, q), q, RM);
        let term = b.div(&factorial, q, RM).mul(&rising, q, RM).mul(&power, q, RM);
        acc = acc.add(&term, q, RM);
        let j = 2 * k;
        rising = rising
            .mul(&s.add(&int(j - 1, q), q, RM), q, RM)
            .mul(&s.add(&int(j, q), q, RM), q, RM);
        factorial = factorial.mul(&int((j + 1) * (j + 2), q), q, RM);
        power = power.div(&n2, q, RM);
    }
    acc.set_precision(p, RM).ok();
    Ok(acc)
}

/// `zeta(s)^2 / zeta(2s)`.
pub fn zeta_ratio(s: &BigFloat, p: usize) -> Result<BigFloat> {
    check_s(s)?;
    let q = p + 16;
    let z1 = zeta(s, q)?;
    let z2 = zeta(&s.mul(&int(2, q), q, RM), q)?;
    Ok(z1.mul(&z1, q, RM).div(&z2, p, RM))
}

/// `f64` convenience for `tail_bound` from a `BigFloat` exponent.
pub fn tail_bound_for(s: &BigFloat, t_max: u64) -> f64 {
    tail_bound(to_f64(s), t_max)
}
