//! The root-counting polynomial `Psi_t(x) = prod_{y=1}^{t+1} (x^2 + x - y t)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factor::{factorize, is_prime};
use super::solve::EvenSolution;
use crate::error::{domain, Error, Result};

/// Largest `t` for which a nonzero `Psi_t(x)` is multiplied out.
pub const PSI_LIMIT: u64 = 200;

/// `true` when some factor `x^2 + x - y t` with `1 <= y <= t + 1` vanishes.
pub fn psi_vanishes(t: u64, x: u64) -> bool {
    EvenSolution::from_x(t, x).is_some_and(|s| (1..=t + 1).contains(&s.y))
}

/// Exact `Psi_t(x)`. Vanishing inputs return 0 for any `t`; otherwise
/// `t <= PSI_LIMIT` is required.
pub fn psi_eval(t: u64, x: u64) -> Result<BigInt> {
    if t == 0 {
        return domain("Psi_t needs t >= 1");
    }
    if psi_vanishes(t, x) {
        return Ok(BigInt::zero());
    }
    if t > PSI_LIMIT {
        return domain(format!("Psi_t(x) is only expanded for t <= {PSI_LIMIT}, got t = {t}"));
    }
    let s = BigInt::from(x) * (BigInt::from(x) + 1);
    let t_big = BigInt::from(t);
    Ok((1..=t + 1).map(|y| &s - BigInt::from(y) * &t_big).product())
}

/// Number of `x` in `1..=t` with `Psi_t(x) = 0`.
pub fn psi_root_count(t: u64) -> u64 {
    (1..=t).filter(|&x| psi_vanishes(t, x)).count() as u64
}

/// Checks `Psi_t(x) = (-t)^{t+1} prod_{m=0}^{t} (1 - (x^2 + x)/t + m)` in
/// exact rationals.
pub fn pochhammer_identity_check(t: u64, x: u64) -> Result<bool> {
    let lhs = BigRational::from_integer(psi_eval(t, x)?);
    let s = BigInt::from(x) * (BigInt::from(x) + 1);
    let a = BigRational::one() - BigRational::new(s, BigInt::from(t));
    let rising: BigRational = (0..=t).map(|m| &a + BigInt::from(m)).product();
    let scale = BigRational::from_integer(num_traits::pow(-BigInt::from(t), (t + 1) as usize));
    Ok(lhs == scale * rising)
}

/// `roots(m n) = roots(m) roots(n)` for coprime `m, n >= 2`.
pub fn crt_structure_check(m: u64, n: u64) -> Result<bool> {
    if m < 2 || n < 2 {
        return domain(format!("structure check needs m, n >= 2, got {m}, {n}"));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let mn = m
        .checked_mul(n)
        .ok_or_else(|| Error::Domain(format!("{m} * {n} overflows")))?;
    Ok(psi_root_count(mn) == psi_root_count(m) * psi_root_count(n))
}

/// For a prime power `q = p^a`, the only roots are `x = q - 1` and `x = q`.
pub fn prime_power_check(q: u64) -> Result<bool> {
    let f = factorize(q);
    if f.omega() != 1 || !is_prime(f.primes[0].0) {
        return domain(format!("{q} is not a prime power"));
    }
    let roots: Vec<u64> = (1..=q).filter(|&x| psi_vanishes(q, x)).collect();
    Ok(roots == [q - 1, q])
}

/// Sign of `Psi_t(x)` without expanding it; used to sanity-check large
/// products. Every factor with `y t > x^2 + x` is negative.
pub fn psi_sign(t: u64, x: u64) -> i8 {
    if psi_vanishes(t, x) {
        return 0;
    }
    let s = x as u128 * (x as u128 + 1);
    let negatives = (1..=t + 1).filter(|&y| y as u128 * t as u128 > s).count();
    if negatives % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn sign_of(v: &BigInt) -> i8 {
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    #[test]
    fn roots_of_psi_6() {
        let roots: Vec<u64> = (1..=6).filter(|&x| psi_eval(6, x).unwrap().is_zero()).collect();
        assert_eq!(roots, vec![2, 3, 5, 6]);
        assert_eq!(psi_root_count(6), 4);
        assert_eq!(psi_root_count(7), 2);
        assert_eq!(psi_root_count(36), 4);
    }

    #[test]
    fn direct_product() {
        let expect: BigInt = (1..=7).map(|y| BigInt::from(2 - 6 * y)).product();
        assert_eq!(psi_eval(6, 1).unwrap(), expect);
        assert!(expect.is_negative());
        for t in [5u64, 50, 1000] {
            assert!(psi_eval(t, t).unwrap().is_zero());
        }
        assert!(psi_eval(1000, 3).is_err());
    }

    #[test]
    fn sign_matches_expansion() {
        for t in 1..30 {
            for x in 1..=t + 3 {
                assert_eq!(psi_sign(t, x), sign_of(&psi_eval(t, x).unwrap()), "t={t} x={x}");
            }
        }
    }

    #[test]
    fn pochhammer() {
        assert!(pochhammer_identity_check(6, 2).unwrap());
        assert!(pochhammer_identity_check(5, 3).unwrap());
        assert!(pochhammer_identity_check(10, 4).unwrap());
    }

    #[test]
    fn structure() {
        assert!(crt_structure_check(4, 9).unwrap());
        assert!(crt_structure_check(2, 3).unwrap());
        assert_eq!(crt_structure_check(4, 6), Err(Error::NotCoprime { m: 4, n: 6 }));
        assert!(prime_power_check(8).unwrap());
        assert!(prime_power_check(49).unwrap());
        assert!(prime_power_check(12).is_err());
    }
}
