use std::collections::BTreeSet;

use fracpart::even::{
    crt_structure_check, even_series_partitions, f_e, factorize, omega_int, pochhammer_identity_check, prime_power_check,
    psi_eval, psi_root_count, psi_sign, psi_vanishes, solve_crt, solve_relaxed, solve_strict, EvenSeries, Factorization,
};
use fracpart::{BigInt, Error};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Distinct prime factors by trial division.
fn omega_oracle(mut t: u64) -> u32 {
    let mut w = 0;
    let mut p = 2;
    while p * p <= t {
        if t.is_multiple_of(p) {
            w += 1;
            while t.is_multiple_of(p) {
                t /= p;
            }
        }
        p += 1;
    }
    w + u32::from(t > 1)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn strict_counts_follow_omega() {
    for t in 2..=10_000u64 {
        let n = solve_strict(t).len() as u64;
        assert_eq!(n, (1 << omega_oracle(t)) - 2, "t = {t}");
        assert_eq!(f_e(t).unwrap(), BigInt::from(n));
    }
}

#[test]
fn root_counts_follow_omega() {
    for t in 1..=2000u64 {
        assert_eq!(psi_root_count(t), 1 << omega_oracle(t), "t = {t}");
    }
    let roots: Vec<u64> = (1..=6).filter(|&x| psi_vanishes(6, x)).collect();
    assert_eq!(roots, [2, 3, 5, 6]);
}

#[test]
fn solutions_make_a_perfect_square() {
    // x^2 + x = y t  <=>  1 + 4 y t = (2x + 1)^2
    for t in 2..=300u64 {
        for s in solve_relaxed(t) {
            assert_eq!(1 + 4 * s.y * t, (2 * s.x + 1).pow(2));
        }
        for y in 1..=t + 1 {
            let d = 1 + 4 * y * t;
            let r = (d as f64).sqrt() as u64;
            let square = (r.saturating_sub(1)..=r + 1).any(|r| r * r == d);
            let listed = solve_relaxed(t).iter().any(|s| s.y == y);
            assert_eq!(square, listed, "t = {t}, y = {y}");
        }
    }
}

#[test]
fn pochhammer_identity() {
    for t in 1..=50 {
        for x in 1..=t {
            assert!(pochhammer_identity_check(t, x).unwrap(), "t = {t}, x = {x}");
        }
    }
}

#[test]
fn psi_values_have_the_predicted_sign() {
    for t in 1..=40u64 {
        for x in 1..=t {
            let v = psi_eval(t, x).unwrap();
            let sign = match v.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            };
            assert_eq!(sign, psi_sign(t, x), "t = {t}, x = {x}");
        }
    }
}

#[test]
fn coprime_factors_multiply_root_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 200 {
        let (m, n) = (rng.gen_range(2..400u64), rng.gen_range(2..400u64));
        if gcd(m, n) != 1 {
            continue;
        }
        assert!(crt_structure_check(m, n).unwrap(), "m = {m}, n = {n}");
        checked += 1;
    }
}

#[test]
fn shared_factors_are_rejected() {
    assert_eq!(crt_structure_check(6, 9), Err(Error::NotCoprime { m: 6, n: 9 }));
    assert!(crt_structure_check(1, 9).is_err());
    // with a shared prime the root counts do not multiply
    for (m, n) in [(4u64, 6u64), (6, 10), (9, 12), (10, 15)] {
        assert_ne!(psi_root_count(m * n), psi_root_count(m) * psi_root_count(n), "m = {m}, n = {n}");
    }
}

#[test]
fn prime_powers_have_only_trivial_roots() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 81, 121, 125, 128, 243, 343, 1024] {
        assert!(prime_power_check(q).unwrap(), "q = {q}");
    }
    assert!(prime_power_check(12).is_err());
}

#[test]
fn residue_construction_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let t = rng.gen_range(2..200_000u64);
        assert_eq!(solve_crt(t).unwrap(), solve_relaxed(t), "t = {t}");
    }
    // 2 3 5 7 11 13 17 19 23 29 31 37 * 41
    let t = 304_250_263_527_210u64;
    let sols = solve_crt(t).unwrap();
    assert_eq!(sols.len() as u64, 1 << omega_int(t));
    assert!(sols.iter().all(|s| s.holds() && s.is_relaxed()));
}

fn block(t: u64, x: u64, y: u64) -> BTreeSet<(u64, Vec<u64>)> {
    even_series_partitions(t, x, y, None).unwrap().into_iter().map(|w| (w.k, w.numerators)).collect()
}

fn expected(rows: &[(u64, &[u64])]) -> BTreeSet<(u64, Vec<u64>)> {
    rows.iter().map(|&(k, n)| (k, n.to_vec())).collect()
}

#[test]
fn printed_series_listings() {
    assert_eq!(
        block(6, 3, 2),
        expected(&[(1, &[2]), (2, &[4]), (3, &[6]), (3, &[2, 4]), (4, &[2, 6]), (5, &[4, 6])])
    );
    assert_eq!(
        block(10, 4, 2),
        expected(&[
            (1, &[2]),
            (2, &[4]),
            (3, &[6]),
            (3, &[2, 4]),
            (4, &[8]),
            (4, &[2, 6]),
            (5, &[2, 8]),
            (5, &[4, 6]),
            (6, &[4, 8]),
            (6, &[2, 4, 6]),
            (7, &[6, 8]),
            (7, &[2, 4, 8]),
            (8, &[2, 6, 8]),
            (9, &[4, 6, 8]),
        ])
    );
    assert_eq!(
        block(10, 5, 3),
        expected(&[
            (2, &[6]),
            (2, &[2, 4]),
            (4, &[2, 10]),
            (4, &[4, 8]),
            (4, &[2, 4, 6]),
            (6, &[8, 10]),
            (6, &[2, 6, 10]),
            (6, &[4, 6, 8]),
            (8, &[6, 8, 10]),
            (8, &[2, 4, 8, 10]),
        ])
    );
    assert_eq!(EvenSeries::new(10, 5, 3).unwrap().missing(), [1, 3, 5, 7, 9]);
}

#[test]
fn factorization_cache_lines_round_trip() {
    for t in [2u64, 360, 97, 1 << 40, 600_851_475_143, 304_250_263_527_210] {
        let f = factorize(t);
        assert_eq!(f.value(), Some(t));
        let line = f.to_cache_line(t);
        assert_eq!(Factorization::parse_cache_line(&line).unwrap(), (t, f));
    }
}

proptest! {
    #[test]
    fn relaxed_is_strict_plus_trivial(t in 2u64..5000) {
        let relaxed = solve_relaxed(t);
        let strict: Vec<_> = relaxed.iter().filter(|s| s.is_strict()).copied().collect();
        prop_assert_eq!(&strict, &solve_strict(t));
        let trivial: Vec<u64> = relaxed.iter().filter(|s| s.is_trivial()).map(|s| s.x).collect();
        prop_assert_eq!(trivial, vec![t - 1, t]);
        prop_assert_eq!(relaxed.len(), strict.len() + 2);
    }

    #[test]
    fn series_witnesses_sum_to_their_k(t in 2u64..60) {
        for s in EvenSeries::all_for(t).into_iter().filter(|s| s.x <= 16) {
            let ws = even_series_partitions(t, s.x, s.y, None).unwrap();
            let counts = s.counts();
            for w in &ws {
                prop_assert_eq!(w.numerators.iter().sum::<u64>(), w.k * s.y);
                prop_assert!(w.k > 0 && w.k < t);
            }
            for k in 1..t {
                let n = ws.iter().filter(|w| w.k == k).count() as u128;
                prop_assert_eq!(n, counts[k as usize]);
            }
        }
    }
}
