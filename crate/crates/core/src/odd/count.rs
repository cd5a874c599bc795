//! Subset-sum dynamic programs over the first `j` odd integers.
//!
//! Counts are accumulated in `u128` whenever the total number of admissible
//! subsets provably fits (at most `2^j`, or `C(j, h)` with `h` parts) and in
//! `BigInt` otherwise. The two paths run the same recurrence.

use std::ops::AddAssign;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Largest `j` whose `2^j` subsets fit comfortably in a `u128` counter.
pub const U128_ALL_LIMIT: u64 = 126;

trait Counter: Clone + Zero + One + for<'a> AddAssign<&'a Self> + Into<BigInt> {}
impl Counter for u128 {}
impl Counter for BigInt {}

fn odd(n: u64) -> usize {
    (2 * n - 1) as usize
}

/// `dp[s]` = number of subsets of `{1, 3, ..., 2j-1}` summing to `s`.
fn sum_counts<T: Counter>(j: u64, max_sum: usize) -> Vec<T> {
    let mut dp = vec![T::zero(); max_sum + 1];
    dp[0] = T::one();
    for n in 1..=j {
        let a = odd(n);
        if a > max_sum {
            break;
        }
        for s in (a..=max_sum).rev() {
            let (lo, hi) = dp.split_at_mut(s);
            hi[0] += &lo[s - a];
        }
    }
    dp
}

/// `dp[p][s]` = number of `p`-element subsets summing to `s`, `p <= max_parts`.
fn part_sum_counts<T: Counter>(j: u64, max_parts: usize, max_sum: usize) -> Vec<Vec<T>> {
    let mut dp = vec![vec![T::zero(); max_sum + 1]; max_parts + 1];
    dp[0][0] = T::one();
    for n in 1..=j {
        let a = odd(n);
        if a > max_sum {
            break;
        }
        let top = max_parts.min(n as usize);
        for p in (1..=top).rev() {
            let (lower, upper) = dp.split_at_mut(p);
            let prev = &lower[p - 1];
            let cur = &mut upper[0];
            for s in (a..=max_sum).rev() {
                if !prev[s - a].is_zero() {
                    cur[s] += &prev[s - a];
                }
            }
        }
    }
    dp
}

fn to_big<T: Counter>(v: Vec<T>) -> Vec<BigInt> {
    v.into_iter().map(Into::into).collect()
}

fn binomial_fits_u128(n: u64, k: u64) -> bool {
    let k = k.min(n.saturating_sub(k));
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc.bits() < 127
}

fn all_sums(j: u64, max_sum: usize) -> Vec<BigInt> {
    if j <= U128_ALL_LIMIT {
        to_big(sum_counts::<u128>(j, max_sum))
    } else {
        sum_counts::<BigInt>(j, max_sum)
    }
}

fn parts_sums(j: u64, h: u64, max_sum: usize) -> Vec<BigInt> {
    let h_us = h as usize;
    if j <= U128_ALL_LIMIT || binomial_fits_u128(j, h) {
        to_big(part_sum_counts::<u128>(j, h_us, max_sum).swap_remove(h_us))
    } else {
        part_sum_counts::<BigInt>(j, h_us, max_sum).swap_remove(h_us)
    }
}

fn in_domain(j: u64, k: u64) -> bool {
    j >= 1 && k >= 1 && k < j
}

/// `f_{O_j}(k)`: subsets of `{1, 3, ..., 2j-1}` summing to `k j`.
/// Zero outside `1 <= k <= j - 1`.
pub fn count_all(j: u64, k: u64) -> BigInt {
    if !in_domain(j, k) {
        return BigInt::zero();
    }
    let target = (k * j) as usize;
    all_sums(j, target).swap_remove(target)
}

/// `f_{O_j,h}(k)`: `h`-element subsets summing to `k j`.
pub fn count_h(j: u64, h: u64, k: u64) -> BigInt {
    if !in_domain(j, k) || h > j {
        return BigInt::zero();
    }
    let target = (k * j) as usize;
    parts_sums(j, h, target).swap_remove(target)
}

/// `[f_{O_j}(1), ..., f_{O_j}(j-1)]` from a single pass.
pub fn count_all_row(j: u64) -> Vec<BigInt> {
    if j < 2 {
        return Vec::new();
    }
    let dp = all_sums(j, ((j - 1) * j) as usize);
    (1..j).map(|k| dp[(k * j) as usize].clone()).collect()
}

/// `[f_{O_j,h}(1), ..., f_{O_j,h}(j-1)]` from a single pass.
pub fn count_h_row(j: u64, h: u64) -> Vec<BigInt> {
    if j < 2 {
        return Vec::new();
    }
    if h > j {
        return vec![BigInt::zero(); (j - 1) as usize];
    }
    let dp = parts_sums(j, h, ((j - 1) * j) as usize);
    (1..j).map(|k| dp[(k * j) as usize].clone()).collect()
}

/// Every restricted count for one `j`: `f_{O_j,h}(k)` for all `h <= j` and
/// `1 <= k <= j - 1`, from one `(parts, sum)` table.
#[derive(Debug, Clone)]
pub struct RestrictedGrid {
    j: u64,
    // rows[h][k - 1]
    rows: Vec<Vec<u128>>,
}

impl RestrictedGrid {
    /// Returns `None` when `j` is too large for exact `u128` cells.
    pub fn new(j: u64) -> Option<Self> {
        if j > U128_ALL_LIMIT {
            return None;
        }
        let max_sum = (j * j) as usize;
        let dp = part_sum_counts::<u128>(j, j as usize, max_sum);
        let rows = dp
            .into_iter()
            .map(|by_sum| (1..j).map(|k| by_sum[(k * j) as usize]).collect())
            .collect();
        Some(RestrictedGrid { j, rows })
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// `f_{O_j,h}(k)`; zero outside the table.
    pub fn get(&self, h: u64, k: u64) -> u128 {
        if !in_domain(self.j, k) {
            return 0;
        }
        self.rows
            .get(h as usize)
            .map_or(0, |row| row[(k - 1) as usize])
    }

    /// `[f_{O_j,h}(1), ..., f_{O_j,h}(j-1)]`.
    pub fn row(&self, h: u64) -> &[u128] {
        self.rows.get(h as usize).map_or(&[], |r| r.as_slice())
    }
}
