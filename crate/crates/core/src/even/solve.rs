//! Solutions of `x^2 + x = y t` in positive integers.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::factor::{factorize, omega_int};
use crate::error::{domain, Result};

/// Largest `t` accepted by the residue construction; keeps `x^2 + x` inside
/// `u128` and `y <= t + 1` inside `u64`.
pub const CRT_LIMIT: u64 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EvenSolution {
    pub t: u64,
    pub x: u64,
    pub y: u64,
}

impl EvenSolution {
    /// `Some` when `t` divides `x^2 + x`.
    pub fn from_x(t: u64, x: u64) -> Option<Self> {
        let p = x as u128 * (x as u128 + 1);
        (t > 0 && p.is_multiple_of(t as u128)).then(|| EvenSolution { t, x, y: (p / t as u128) as u64 })
    }

    pub fn holds(&self) -> bool {
        self.x as u128 * (self.x as u128 + 1) == self.y as u128 * self.t as u128
    }

    /// `0 < y < x < t`.
    pub fn is_strict(&self) -> bool {
        0 < self.y && self.y < self.x && self.x < self.t
    }

    /// `0 < x <= t` and `0 < y <= t + 1`.
    pub fn is_relaxed(&self) -> bool {
        0 < self.x && self.x <= self.t && 0 < self.y && self.y <= self.t + 1
    }

    /// `x = t - 1` or `x = t`, present for every `t >= 2`.
    pub fn is_trivial(&self) -> bool {
        self.x + 1 == self.t || self.x == self.t
    }
}

/// All `(x, y)` with `0 < y < x < t`, ascending in `x`, by scanning.
pub fn solve_strict(t: u64) -> Vec<EvenSolution> {
    (1..t.saturating_sub(1))
        .filter_map(|x| EvenSolution::from_x(t, x))
        .filter(EvenSolution::is_strict)
        .collect()
}

/// All `(x, y)` with `0 < x <= t`, `0 < y <= t + 1`, ascending in `x`.
/// For `t >= 2` these are the strict solutions plus `x = t - 1` and `x = t`.
pub fn solve_relaxed(t: u64) -> Vec<EvenSolution> {
    (1..=t)
        .filter_map(|x| EvenSolution::from_x(t, x))
        .filter(EvenSolution::is_relaxed)
        .collect()
}

/// `F_E(t) = 2^omega(t) - 2`, from the factorization of `t`.
pub fn f_e(t: u64) -> Result<BigInt> {
    if t <= 1 {
        return domain(format!("F_E(t) needs t >= 2, got {t}"));
    }
    Ok((BigInt::from(1u8) << omega_int(t)) - 2)
}

fn mod_inverse(a: u128, m: u128) -> u128 {
    let (mut r0, mut r1) = (a as i128 % m as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m as i128) as u128
}

/// Relaxed solutions built from residues instead of a scan: modulo each
/// prime power `p^e || t`, `x(x + 1) = 0` forces `x = 0` or `x = -1`, and
/// every combination lifts to one `x` in `1..=t`.
pub fn solve_crt(t: u64) -> Result<Vec<EvenSolution>> {
    if t < 2 {
        return domain(format!("residue construction needs t >= 2, got {t}"));
    }
    if t > CRT_LIMIT {
        return domain(format!("t = {t} exceeds {CRT_LIMIT}"));
    }
    let moduli: Vec<u128> = factorize(t).prime_powers().into_iter().map(u128::from).collect();
    let big_t = t as u128;
    // e_i = 1 mod q_i, 0 mod q_j for j != i
    let idempotents: Vec<u128> = moduli
        .iter()
        .map(|&q| {
            let rest = big_t / q;
            rest * mod_inverse(rest % q, q) % big_t
        })
        .collect();
    let mut out = Vec::with_capacity(1 << moduli.len());
    for mask in 0u64..(1 << moduli.len()) {
        let mut x = 0u128;
        for (i, (&q, &e)) in moduli.iter().zip(&idempotents).enumerate() {
            if mask >> i & 1 == 1 {
                x = (x + (q - 1) * e) % big_t;
            }
        }
        let x = if x == 0 { t } else { x as u64 };
        let s = EvenSolution::from_x(t, x).expect("residue combination solves the equation");
        out.push(s);
    }
    out.sort_unstable();
    Ok(out)
}
