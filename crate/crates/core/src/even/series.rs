//! Sub-sums of the even series `2/y + 4/y + ... + 2x/y = t`.

use serde::{Deserialize, Serialize};

use super::solve::{solve_relaxed, EvenSolution};
use crate::error::{domain, Error, Result};

/// Longest series that is enumerated.
pub const SERIES_LIMIT: u64 = 24;
pub const SERIES_CAP: usize = 1_000_000;

/// The series `2/y + 4/y + ... + 2x/y`, which sums to `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSeries {
    pub t: u64,
    pub x: u64,
    pub y: u64,
}

/// A subset of the series: numerators `2n`, common denominator, and the
/// integer they sum to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesWitness {
    pub numerators: Vec<u64>,
    pub denominator: u64,
    pub k: u64,
}

impl EvenSeries {
    /// Requires `(x, y)` to be a relaxed solution for `t`.
    pub fn new(t: u64, x: u64, y: u64) -> Result<Self> {
        let s = EvenSolution { t, x, y };
        if !(s.holds() && s.is_relaxed()) {
            return domain(format!("(x, y) = ({x}, {y}) does not solve x^2 + x = y t for t = {t}"));
        }
        Ok(EvenSeries { t, x, y })
    }

    /// Every series for `t`, one per relaxed solution.
    pub fn all_for(t: u64) -> Vec<EvenSeries> {
        solve_relaxed(t)
            .into_iter()
            .map(|s| EvenSeries { t, x: s.x, y: s.y })
            .collect()
    }

    pub fn numerators(&self) -> Vec<u64> {
        (1..=self.x).map(|n| 2 * n).collect()
    }

    /// Number of subsets summing to each `k` in `0..=t`.
    pub fn counts(&self) -> Vec<u128> {
        let total = (self.x * (self.x + 1)) as usize;
        let mut dp = vec![0u128; total + 1];
        dp[0] = 1;
        for a in self.numerators() {
            let a = a as usize;
            for s in (a..=total).rev() {
                dp[s] += dp[s - a];
            }
        }
        (0..=self.t).map(|k| dp[(k * self.y) as usize]).collect()
    }

    /// The `k` with `0 < k < t` that no subset reaches.
    pub fn missing(&self) -> Vec<u64> {
        let counts = self.counts();
        (1..self.t).filter(|&k| counts[k as usize] == 0).collect()
    }
}

/// Lexicographic subsets of `values` (ascending) summing to `target`.
fn subsets_with_sum(values: &[u64], target: u64, cap: usize, out: &mut Vec<Vec<u64>>) -> Result<()> {
    let n = values.len();
    let target = target as usize;
    // reach[i][s]: some subset of values[i..] sums to s
    let mut reach = vec![vec![false; target + 1]; n + 1];
    reach[n][0] = true;
    for i in (0..n).rev() {
        let a = values[i] as usize;
        for s in 0..=target {
            reach[i][s] = reach[i + 1][s] || (s >= a && reach[i + 1][s - a]);
        }
    }
    if !reach[0][target] {
        return Ok(());
    }
    let mut stack = Vec::new();
    walk(values, &reach, 0, target, &mut stack, cap, out)
}

fn walk(
    values: &[u64],
    reach: &[Vec<bool>],
    from: usize,
    remaining: usize,
    stack: &mut Vec<u64>,
    cap: usize,
    out: &mut Vec<Vec<u64>>,
) -> Result<()> {
    if remaining == 0 {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(stack.clone());
        return Ok(());
    }
    for i in from..values.len() {
        let a = values[i] as usize;
        if a <= remaining && reach[i + 1][remaining - a] {
            stack.push(values[i]);
            walk(values, reach, i + 1, remaining - a, stack, cap, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Subsets of `{2/y, 4/y, ..., 2x/y}` with an integer sum `k`, for the given
/// target or for every `0 < k < t`. Ordered by `k`, then by size, then
/// lexicographically. Subsets with equal sums are separate witnesses.
pub fn even_series_partitions(t: u64, x: u64, y: u64, target: Option<u64>) -> Result<Vec<SeriesWitness>> {
    even_series_partitions_capped(t, x, y, target, SERIES_CAP)
}

pub fn even_series_partitions_capped(
    t: u64,
    x: u64,
    y: u64,
    target: Option<u64>,
    cap: usize,
) -> Result<Vec<SeriesWitness>> {
    let series = EvenSeries::new(t, x, y)?;
    if x > SERIES_LIMIT {
        return Err(Error::EnumerationTooLarge { len: x, limit: SERIES_LIMIT });
    }
    let ks: Vec<u64> = match target {
        Some(k) if k <= t => vec![k],
        Some(_) => Vec::new(),
        None => (1..t).collect(),
    };
    let values = series.numerators();
    let mut out = Vec::new();
    for k in ks {
        let mut found = Vec::new();
        subsets_with_sum(&values, k * y, cap - out.len(), &mut found)
            .map_err(|_| Error::CapExceeded { cap })?;
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.extend(found.into_iter().map(|numerators| SeriesWitness { numerators, denominator: y, k }));
    }
    Ok(out)
}
