use fracpart::odd::{
    bijection_check, closed_form_h2, construct_witness, count_all, count_all_row, count_h, enumerate, feasibility,
    r_polynomial, rascal_relation_check, rascal_row, shifted_gaussian, RestrictedGrid,
};
use fracpart::BigInt;
use proptest::prelude::*;

/// `counts[h][s]`: subsets of `{1, 3, ..., 2j - 1}` with `h` elements and
/// sum `s`, by walking all `2^j` masks.
fn brute_force(j: u64) -> Vec<Vec<u64>> {
    let max = (j * j) as usize;
    let mut counts = vec![vec![0u64; max + 1]; j as usize + 1];
    for mask in 0u32..(1 << j) {
        let mut sum = 0;
        for n in 0..j {
            if mask >> n & 1 == 1 {
                sum += 2 * n as usize + 1;
            }
        }
        counts[mask.count_ones() as usize][sum] += 1;
    }
    counts
}

#[test]
fn counts_match_subset_enumeration() {
    for j in 1..=18u64 {
        let bf = brute_force(j);
        for k in 1..j {
            let s = (k * j) as usize;
            let total: u64 = bf.iter().map(|row| row[s]).sum();
            assert_eq!(count_all(j, k), BigInt::from(total), "j = {j}, k = {k}");
            for h in 0..=j {
                assert_eq!(count_h(j, h, k), BigInt::from(bf[h as usize][s]), "j = {j}, h = {h}, k = {k}");
            }
        }
    }
}

#[test]
fn unrestricted_rows_are_symmetric() {
    for j in 3..=60 {
        let row = count_all_row(j);
        let rev: Vec<_> = row.iter().rev().cloned().collect();
        assert_eq!(row, rev, "j = {j}");
    }
}

#[test]
fn restricted_rows_are_symmetric_and_peak_at_h() {
    for j in 3..=60u64 {
        let grid = RestrictedGrid::new(j).unwrap();
        for h in 1..=j {
            let row = grid.row(h);
            let at = |k: u64| if (1..j).contains(&k) { row[(k - 1) as usize] } else { 0 };
            for k in 1..j {
                let c = at(k);
                if k >= 2 * h {
                    assert_eq!(c, 0, "j = {j}, h = {h}, k = {k}: vanishing above 2h");
                }
                if (k * j) % 2 != h % 2 {
                    assert_eq!(c, 0, "j = {j}, h = {h}, k = {k}: parity");
                }
                if c != 0 {
                    assert!(feasibility(j, h, k));
                }
                if k < 2 * h && 2 * h - k < j {
                    assert_eq!(c, at(2 * h - k), "j = {j}, h = {h}, k = {k}: reflection about h");
                }
            }
            // nonzero terms strictly rise to k = h and then strictly fall
            let nonzero: Vec<(u64, u128)> = (1..j).map(|k| (k, at(k))).filter(|&(_, c)| c != 0).collect();
            if h < j && !nonzero.is_empty() {
                let peak = nonzero.iter().position(|&(k, _)| k == h).expect("k = h is nonzero");
                for w in nonzero[..=peak].windows(2) {
                    assert!(w[0].1 < w[1].1, "j = {j}, h = {h}: not increasing before h");
                }
                for w in nonzero[peak..].windows(2) {
                    assert!(w[0].1 > w[1].1, "j = {j}, h = {h}: not decreasing after h");
                }
            }
        }
    }
}

#[test]
fn closed_form_agrees_with_counts() {
    for j in 3..=200 {
        for k in 1..=10 {
            assert_eq!(closed_form_h2(j, k).unwrap(), count_h(j, 2, k), "j = {j}, k = {k}");
        }
    }
}

#[test]
fn rascal_rows_count_distinct_sums() {
    for j in 0..=20 {
        assert!(rascal_relation_check(j).unwrap(), "j = {j}");
    }
    assert_eq!(rascal_row(6).unwrap(), [1, 6, 9, 10, 9, 6, 1].map(BigInt::from));
}

#[test]
fn gaussian_bijection() {
    for j in 0..=20 {
        for h in 0..=j {
            assert!(bijection_check(j, h).unwrap(), "j = {j}, h = {h}");
        }
    }
    let g = shifted_gaussian(6, 2);
    assert_eq!(g.to_text("q"), "q^{11}+q^{10}+2q^9+2q^8+3q^7+2q^6+2q^5+q^4+q^3");
}

#[test]
fn polynomials_from_the_text() {
    // the j = 6 row is bimodal; the eighth row (j = 10) has a plateau of
    // three 20s
    assert_eq!(r_polynomial(6).unwrap().to_text("x"), "x^5+3x^4+2x^3+3x^2+x");
    assert_eq!(count_all_row(10), [2, 7, 12, 20, 20, 20, 12, 7, 2].map(BigInt::from));
}

proptest! {
    #[test]
    fn enumerated_witnesses_are_valid(j in 3u64..16, k in 1u64..16, h in proptest::option::of(0u64..16)) {
        prop_assume!(k < j);
        let ws = enumerate(j, k, h, 1 << 20).unwrap();
        let expect = match h {
            Some(h) => count_h(j, h, k),
            None => count_all(j, k),
        };
        prop_assert_eq!(BigInt::from(ws.len()), expect);
        for w in &ws {
            prop_assert!(w.numerators.windows(2).all(|p| p[0] < p[1]));
            prop_assert!(w.numerators.iter().all(|&a| a % 2 == 1 && a < 2 * j));
            prop_assert_eq!(w.numerator_sum(), k * j);
            if let Some(h) = h {
                prop_assert_eq!(w.parts() as u64, h);
            }
        }
    }

    #[test]
    fn constructed_witnesses_check(j in 3u64..400, k in 1u64..400) {
        prop_assume!(k < j);
        let w = construct_witness(j, k).unwrap();
        prop_assert!(w.check().is_ok());
        prop_assert_eq!(w.numerator_sum(), k * j);
    }

    #[test]
    fn counts_vanish_outside_the_domain(j in 1u64..40, h in 0u64..40, extra in 0u64..10) {
        let k = j + extra;
        prop_assert_eq!(count_all(j, k), BigInt::from(0));
        prop_assert_eq!(count_h(j, h, k), BigInt::from(0));
    }

    #[test]
    fn restricted_counts_sum_to_unrestricted(j in 3u64..50, k in 1u64..50) {
        prop_assume!(k < j);
        let total: BigInt = (0..=j).map(|h| count_h(j, h, k)).sum();
        prop_assert_eq!(total, count_all(j, k));
    }
}
