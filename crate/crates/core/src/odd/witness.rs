//! Partition witnesses: explicit sets of odd numerators, by enumeration or
//! by the pairing construction.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::count::{count_all, count_h};
use crate::error::{Error, Result};

/// Series length up to which enumeration always runs.
pub const ENUMERATION_LIMIT: u64 = 24;
/// Beyond this length enumeration is refused outright.
pub const ENUMERATION_HARD_LIMIT: u64 = 64;
pub const DEFAULT_CAP: usize = 1_000_000;

/// A set of distinct odd numerators `a_1 < ... < a_n <= 2j - 1` whose
/// fractions `a_i / j` sum to an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub j: u64,
    pub numerators: Vec<u64>,
}

impl PartitionWitness {
    pub fn new(j: u64, mut numerators: Vec<u64>) -> Result<Self> {
        numerators.sort_unstable();
        let w = PartitionWitness { j, numerators };
        w.check()?;
        Ok(w)
    }

    /// Validates the structural invariants (odd, distinct, in range).
    pub fn check(&self) -> Result<()> {
        if self.j == 0 {
            return Err(Error::Domain("witness with j = 0".into()));
        }
        let max = 2 * self.j - 1;
        for w in self.numerators.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain(format!(
                    "numerators not strictly increasing: {:?}",
                    self.numerators
                )));
            }
        }
        if let Some(bad) = self.numerators.iter().find(|a| **a % 2 == 0 || **a > max) {
            return Err(Error::Domain(format!(
                "numerator {bad} is not an odd integer in 1..={max}"
            )));
        }
        Ok(())
    }

    pub fn numerator_sum(&self) -> u64 {
        self.numerators.iter().sum()
    }

    /// The integer represented, if the fractions sum to an integer.
    pub fn k(&self) -> Option<u64> {
        let s = self.numerator_sum();
        s.is_multiple_of(self.j).then(|| s / self.j)
    }

    pub fn parts(&self) -> usize {
        self.numerators.len()
    }

    /// `true` iff the invariants hold and the fractions sum to `k`.
    pub fn witnesses(&self, k: u64) -> bool {
        self.check().is_ok() && self.numerator_sum() == k * self.j
    }
}

/// All witnesses for `k` (optionally with exactly `h` parts), in
/// lexicographic order of the numerator lists.
///
/// Up to [`ENUMERATION_LIMIT`] the full list is produced unless it holds
/// more than `cap` entries ([`Error::CapExceeded`]). Longer series are
/// accepted only while the exact count stays within `cap`.
pub fn enumerate(j: u64, k: u64, h: Option<u64>, cap: usize) -> Result<Vec<PartitionWitness>> {
    if j == 0 || k == 0 || k >= j || h.is_some_and(|h| h > j) {
        return Ok(Vec::new());
    }
    if j > ENUMERATION_HARD_LIMIT {
        return Err(Error::EnumerationTooLarge { len: j, limit: ENUMERATION_HARD_LIMIT });
    }
    let expected = match h {
        Some(h) => count_h(j, h, k),
        None => count_all(j, k),
    };
    if expected > BigInt::from(cap) {
        return Err(if j > ENUMERATION_LIMIT {
            Error::EnumerationTooLarge { len: j, limit: ENUMERATION_LIMIT }
        } else {
            Error::CapExceeded { cap }
        });
    }

    let odds: Vec<u64> = (1..=j).map(|n| 2 * n - 1).collect();
    let target = k * j;
    let reach = Reach::new(&odds, target, h);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    walk(&odds, &reach, 0, target, h.unwrap_or(0), &mut stack, &mut out, j);
    Ok(out)
}

/// `reach[i][p][s]`: some subset of `odds[i..]` has `p` parts summing to `s`.
/// Without a part restriction the `p` axis has length one.
struct Reach {
    restricted: bool,
    parts: usize,
    width: usize,
    cells: Vec<bool>,
}

impl Reach {
    fn new(odds: &[u64], target: u64, h: Option<u64>) -> Self {
        let width = target as usize + 1;
        let parts = h.map_or(1, |h| h as usize + 1);
        let len = odds.len();
        let mut r = Reach { restricted: h.is_some(), parts, width, cells: vec![false; (len + 1) * parts * width] };
        let base = r.idx(len, 0, 0);
        r.cells[base] = true;
        for i in (0..len).rev() {
            let a = odds[i] as usize;
            for p in 0..parts {
                for s in 0..width {
                    let skip = r.cells[r.idx(i + 1, p, s)];
                    let take = if s >= a {
                        if r.restricted {
                            p >= 1 && r.cells[r.idx(i + 1, p - 1, s - a)]
                        } else {
                            r.cells[r.idx(i + 1, 0, s - a)]
                        }
                    } else {
                        false
                    };
                    let at = r.idx(i, p, s);
                    r.cells[at] = skip || take;
                }
            }
        }
        r
    }

    fn idx(&self, i: usize, p: usize, s: usize) -> usize {
        (i * self.parts + p) * self.width + s
    }

    fn get(&self, i: usize, parts_left: u64, s: u64) -> bool {
        let p = if self.restricted { parts_left as usize } else { 0 };
        self.cells[self.idx(i, p, s as usize)]
    }
}

#[allow(clippy::too_many_arguments)]
fn walk(
    odds: &[u64],
    reach: &Reach,
    i: usize,
    remaining: u64,
    parts_left: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<PartitionWitness>,
    j: u64,
) {
    if i == odds.len() {
        if remaining == 0 && (!reach.restricted || parts_left == 0) {
            out.push(PartitionWitness { j, numerators: stack.clone() });
        }
        return;
    }
    if !reach.get(i, parts_left, remaining) {
        return;
    }
    let a = odds[i];
    if a <= remaining && (!reach.restricted || parts_left > 0) {
        let next_parts = if reach.restricted { parts_left - 1 } else { 0 };
        if reach.get(i + 1, next_parts, remaining - a) {
            stack.push(a);
            walk(odds, reach, i + 1, remaining - a, next_parts, stack, out, j);
            stack.pop();
        }
    }
    if reach.get(i + 1, parts_left, remaining) {
        walk(odds, reach, i + 1, remaining, parts_left, stack, out, j);
    }
}

/// `true` iff `k` is a sum of distinct fractions `(2n-1)/j`, `n <= j`,
/// which happens exactly when `j > 2` and `1 <= k <= j - 1`.
pub fn exists_partition(j: u64, k: u64) -> bool {
    j > 2 && k >= 1 && k < j
}

/// Builds a witness from the pairing argument: numerators `m` and `2j - m`
/// sum to `2j`, so each outer pair contributes 2.
///
/// - even `k`: the `k/2` outermost pairs;
/// - odd `k`, odd `j`: the middle numerator `j` plus `(k-1)/2` outer pairs;
/// - odd `k`, even `j`: start from the whole series, drop `1` and `j - 1`
///   (which together give 1), then drop intact pairs from the outside in
///   until `k` is left.
pub fn construct_witness(j: u64, k: u64) -> Result<PartitionWitness> {
    if !exists_partition(j, k) {
        return Err(Error::NoWitness { j, k });
    }
    let pair = |n: u64| [2 * n - 1, 2 * (j - n + 1) - 1];
    let mut numerators: Vec<u64> = Vec::new();
    if k.is_multiple_of(2) {
        for n in 1..=k / 2 {
            numerators.extend(pair(n));
        }
    } else if j % 2 == 1 {
        numerators.push(j);
        for n in 1..=(k - 1) / 2 {
            numerators.extend(pair(n));
        }
    } else if k == 1 {
        numerators.extend([1, j - 1]);
    } else {
        // Pairs n = 2 .. j/2 - 1 are untouched by removing 1 and j - 1.
        let drop_pairs = (j - 1 - k) / 2;
        let mut removed: Vec<u64> = vec![1, j - 1];
        for n in 2..2 + drop_pairs {
            removed.extend(pair(n));
        }
        numerators = (1..=j).map(|n| 2 * n - 1).filter(|a| !removed.contains(a)).collect();
    }
    PartitionWitness::new(j, numerators)
}

/// The `h` consecutive numerators centred in the series; they sum to `h j`
/// whenever `j` and `h` share parity.
pub fn centered_block(j: u64, h: u64) -> Option<PartitionWitness> {
    if h > j || !(j - h).is_multiple_of(2) {
        return None;
    }
    let start = (j - h) / 2 + 1;
    Some(PartitionWitness { j, numerators: (start..start + h).map(|n| 2 * n - 1).collect() })
}

/// The first `h/2` and last `h/2` numerators; they sum to `h j` for even `h`.
pub fn end_blocks(j: u64, h: u64) -> Option<PartitionWitness> {
    if !h.is_multiple_of(2) || h > j {
        return None;
    }
    let half = h / 2;
    let mut numerators: Vec<u64> = (1..=half).map(|n| 2 * n - 1).collect();
    numerators.extend((j - half + 1..=j).map(|n| 2 * n - 1));
    Some(PartitionWitness { j, numerators })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(ws: &[PartitionWitness]) -> Vec<Vec<u64>> {
        ws.iter().map(|w| w.numerators.clone()).collect()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(nums(&enumerate(6, 1, None, DEFAULT_CAP).unwrap()), vec![vec![1, 5]]);
        assert_eq!(
            nums(&enumerate(6, 2, None, DEFAULT_CAP).unwrap()),
            vec![vec![1, 11], vec![3, 9], vec![5, 7]]
        );
        assert!(enumerate(3, 3, None, DEFAULT_CAP).unwrap().is_empty());
        assert_eq!(
            nums(&enumerate(6, 4, None, DEFAULT_CAP).unwrap()),
            vec![vec![1, 3, 9, 11], vec![1, 5, 7, 11], vec![3, 5, 7, 9]]
        );
    }

    #[test]
    fn enumerate_restricted() {
        let ws = enumerate(8, 5, Some(4), DEFAULT_CAP).unwrap();
        assert_eq!(ws.len(), 5);
        assert!(ws.contains(&PartitionWitness { j: 8, numerators: vec![3, 9, 13, 15] }));
        assert!(ws.iter().all(|w| w.parts() == 4 && w.witnesses(5)));
        assert!(enumerate(5, 2, Some(3), DEFAULT_CAP).unwrap().is_empty());
    }

    #[test]
    fn caps() {
        assert_eq!(enumerate(12, 6, None, 10), Err(Error::CapExceeded { cap: 10 }));
        assert!(matches!(
            enumerate(40, 20, None, DEFAULT_CAP),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(matches!(enumerate(70, 1, Some(2), DEFAULT_CAP), Err(Error::EnumerationTooLarge { .. })));
        // Few witnesses beyond the soft limit are still listed.
        let ws = enumerate(40, 1, Some(2), DEFAULT_CAP).unwrap();
        assert_eq!(ws.len(), 10);
    }

    #[test]
    fn constructed_examples() {
        assert_eq!(construct_witness(10, 7).unwrap().numerators, vec![5, 7, 11, 13, 15, 19]);
        assert_eq!(construct_witness(10, 3).unwrap().numerators, vec![11, 19]);
        assert_eq!(construct_witness(6, 1).unwrap().numerators, vec![1, 5]);
        let w = construct_witness(5, 4).unwrap();
        assert!(w.witnesses(4));
    }

    #[test]
    fn no_witness_outside_domain() {
        assert_eq!(construct_witness(2, 1), Err(Error::NoWitness { j: 2, k: 1 }));
        assert!(construct_witness(7, 7).is_err());
        assert!(construct_witness(7, 0).is_err());
        assert!(!exists_partition(2, 1));
        assert!(!exists_partition(7, 7));
        assert!(exists_partition(3, 2));
    }

    #[test]
    fn witness_validation() {
        assert!(PartitionWitness::new(4, vec![3, 3]).is_err());
        assert!(PartitionWitness::new(4, vec![2]).is_err());
        assert!(PartitionWitness::new(4, vec![9]).is_err());
        let w = PartitionWitness::new(4, vec![7, 1]).unwrap();
        assert_eq!(w.numerators, vec![1, 7]);
        assert_eq!(w.k(), Some(2));
    }

    #[test]
    fn blocks() {
        let w = centered_block(10, 4).unwrap();
        assert_eq!(w.numerators, vec![7, 9, 11, 13]);
        assert!(w.witnesses(4));
        assert!(centered_block(10, 3).is_none());
        let w = end_blocks(9, 4).unwrap();
        assert_eq!(w.numerators, vec![1, 3, 15, 17]);
        assert!(w.witnesses(4));
    }
}
