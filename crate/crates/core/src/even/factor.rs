//! Integer factorization for `u64`: trial division by small primes, then
//! deterministic Miller-Rabin and Pollard rho (Brent variant) on whatever
//! cofactor remains.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::Path;
use std::str::FromStr;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization as `(prime, exponent)` pairs, ascending by prime.
/// `1` factors as the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Factorization {
    pub primes: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn omega(&self) -> usize {
        self.primes.len()
    }

    /// The product of the prime powers, if it fits in `u64`.
    pub fn value(&self) -> Option<u64> {
        self.primes.iter().try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    /// The prime powers `p^e`.
    pub fn prime_powers(&self) -> Vec<u64> {
        self.primes.iter().map(|&(p, e)| p.pow(e)).collect()
    }

    /// One line of the cache file: `t: p1^e1 p2^e2 ...`.
    pub fn to_cache_line(&self, t: u64) -> String {
        format!("{t}: {self}")
    }

    pub fn parse_cache_line(line: &str) -> Result<(u64, Factorization)> {
        let (t, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {line:?}")))?;
        let t: u64 = t.trim().parse().map_err(|e| Error::Parse(format!("bad t in {line:?}: {e}")))?;
        let f: Factorization = rest.parse()?;
        if f.value() != Some(t) || !f.primes.iter().all(|&(p, _)| is_prime(p)) {
            return Err(Error::Parse(format!("factorization does not reconstruct {t}: {line:?}")));
        }
        Ok((t, f))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Factorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut primes = Vec::new();
        for tok in s.split_whitespace() {
            let (p, e) = tok.split_once('^').unwrap_or((tok, "1"));
            let p: u64 = p.parse().map_err(|e| Error::Parse(format!("bad prime {tok:?}: {e}")))?;
            let e: u32 = e.parse().map_err(|e| Error::Parse(format!("bad exponent {tok:?}: {e}")))?;
            primes.push((p, e));
        }
        primes.sort_unstable();
        Ok(Factorization { primes })
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for all `u64` with the first twelve prime bases.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128u64).min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("some polynomial constant splits every composite")
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Factorizes `t >= 1`.
pub fn factorize(t: u64) -> Factorization {
    let mut n = t;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((p, e));
        }
    };
    push(2, &mut n);
    let mut p = 3;
    while p <= TRIAL_LIMIT && p * p <= n {
        push(p, &mut n);
        p += 2;
    }
    if n > 1 {
        if p * p > n {
            primes.push((n, 1));
        } else {
            let mut big = Vec::new();
            split_large(n, &mut big);
            big.sort_unstable();
            for q in big {
                match primes.last_mut() {
                    Some((last, e)) if *last == q => *e += 1,
                    _ => primes.push((q, 1)),
                }
            }
        }
    }
    Factorization { primes }
}

/// `omega(t)`: number of distinct primes dividing `t`; `omega(1) = 0`.
pub fn omega_int(t: u64) -> usize {
    factorize(t).omega()
}

/// Memoized factorizations, shareable across threads. Inserting the same
/// `t` twice stores the same value, so racing writers are harmless.
#[derive(Debug, Default)]
pub struct FactorCache {
    map: RwLock<HashMap<u64, Factorization>>,
}

impl FactorCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, t: u64) -> Factorization {
        if let Some(f) = self.map.read().expect("factor cache poisoned").get(&t) {
            return f.clone();
        }
        let f = factorize(t);
        self.map.write().expect("factor cache poisoned").insert(t, f.clone());
        f
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("factor cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Loads `t: p^e ...` lines; every line is re-verified.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let mut map = HashMap::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (t, f) = Factorization::parse_cache_line(line)?;
            map.insert(t, f);
        }
        Ok(FactorCache { map: RwLock::new(map) })
    }

    /// Writes the cache in ascending `t`.
    pub fn save(&self, path: &Path) -> io::Result<()> {
        let map = self.map.read().expect("factor cache poisoned");
        let mut keys: Vec<_> = map.keys().copied().collect();
        keys.sort_unstable();
        let mut text = String::new();
        for t in keys {
            text.push_str(&map[&t].to_cache_line(t));
            text.push('\n');
        }
        fs::write(path, text)
    }
}
