//! Scans that look for counterexamples to two open questions: which
//! numerator sequences other than the odd numbers reach every
//! `k < floor(G)`, and whether the integer-sum counts of the odd series are
//! always unimodal or bimodal in `k`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::odd::{classify_modality, count_all_row, Modality};
use crate::poly::expand_odd_univariate;

/// Largest numerator sum accepted by the subset-sum scan.
pub const DEFAULT_SUM_BOUND: u128 = 1 << 28;
/// Largest `j` for the full-polynomial modality check.
pub const FULL_POLY_LIMIT: u64 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NumeratorSequence {
    /// `2n - 1`.
    Odd,
    /// `n(n - 1)/2 + 1`: 1, 2, 4, 7, 11, ...
    LazyCaterer,
    /// `(n^3 - 3n^2 + 8n)/6`: 1, 2, 4, 8, 15, 26, ...
    Cake,
    /// 1, 1, 2, 3, 5, ...; equal values at different positions are
    /// different terms.
    Fibonacci,
    /// An explicit finite prefix.
    Custom(Vec<u64>),
}

impl NumeratorSequence {
    pub fn name(&self) -> &'static str {
        match self {
            NumeratorSequence::Odd => "odd",
            NumeratorSequence::LazyCaterer => "lazy-caterer",
            NumeratorSequence::Cake => "cake",
            NumeratorSequence::Fibonacci => "fibonacci",
            NumeratorSequence::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for NumeratorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumeratorSequence::Custom(v) => {
                let terms: Vec<String> = v.iter().map(u64::to_string).collect();
                write!(f, "custom:{}", terms.join(","))
            }
            s => f.write_str(s.name()),
        }
    }
}

impl FromStr for NumeratorSequence {
    type Err = Error;

    /// `odd`, `lazy-caterer`, `cake`, `fibonacci`, or `custom:1,2,4,...`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd" => Ok(NumeratorSequence::Odd),
            "lazy-caterer" => Ok(NumeratorSequence::LazyCaterer),
            "cake" => Ok(NumeratorSequence::Cake),
            "fibonacci" => Ok(NumeratorSequence::Fibonacci),
            _ => {
                let list = s
                    .strip_prefix("custom:")
                    .ok_or_else(|| Error::Parse(format!("unknown sequence {s:?}")))?;
                let terms = list
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u64>()
                            .ok()
                            .filter(|&v| v > 0)
                            .ok_or_else(|| Error::Parse(format!("bad term {t:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(NumeratorSequence::Custom(terms))
            }
        }
    }
}

fn overflow(j: u64) -> Error {
    Error::Domain(format!("the first {j} terms do not fit in 64 bits"))
}

/// The first `j` terms.
pub fn sequence_prefix(seq: &NumeratorSequence, j: u64) -> Result<Vec<u64>> {
    let n = j as usize;
    match seq {
        NumeratorSequence::Odd => Ok((1..=j).map(|n| 2 * n - 1).collect()),
        NumeratorSequence::LazyCaterer => (1..=j)
            .map(|n| n.checked_mul(n - 1).map(|v| v / 2 + 1).ok_or_else(|| overflow(j)))
            .collect(),
        NumeratorSequence::Cake => (1..=j as u128)
            .map(|n| {
                let v = (n * n * n + 8 * n - 3 * n * n) / 6;
                u64::try_from(v).map_err(|_| overflow(j))
            })
            .collect(),
        NumeratorSequence::Fibonacci => {
            let mut out = Vec::with_capacity(n);
            let (mut a, mut b) = (1u64, 1u64);
            for _ in 0..n {
                out.push(a);
                let next = a.checked_add(b).ok_or_else(|| overflow(j));
                a = b;
                b = match next {
                    Ok(v) => v,
                    Err(e) if out.len() + 1 < n => return Err(e),
                    Err(_) => 0,
                };
            }
            Ok(out)
        }
        NumeratorSequence::Custom(v) => {
            if v.len() < n {
                return domain(format!("custom sequence has {} terms, {j} requested", v.len()));
            }
            Ok(v[..n].to_vec())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Failure {
    /// No subset of the first `j` terms sums to `k j`.
    MissingK { j: u64, k: u64 },
    /// The counts for this `j` have three or more peaks.
    Peaks { j: u64, peaks: usize },
}

impl Failure {
    fn key(&self) -> (u64, u64) {
        match *self {
            Failure::MissingK { j, k } => (j, k),
            Failure::Peaks { j, peaks } => (j, peaks as u64),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub name: String,
    pub j_range: (u64, u64),
    /// Ascending by `j`, then `k`.
    pub failures: Vec<Failure>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ConjectureReport {
    fn new(name: String, j_range: (u64, u64), mut failures: Vec<Failure>, notes: Vec<String>) -> Self {
        failures.sort_by_key(Failure::key);
        let verdict = if failures.is_empty() { Verdict::Consistent } else { Verdict::Counterexample };
        ConjectureReport { name, j_range, failures, verdict, notes }
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: j = {}..={}: {}\n",
            self.name,
            self.j_range.0,
            self.j_range.1,
            match self.verdict {
                Verdict::Consistent => "consistent",
                Verdict::Counterexample => "counterexample",
            }
        );
        for f in &self.failures {
            match f {
                Failure::MissingK { j, k } => out.push_str(&format!("  j = {j}: no subset sums to k = {k}\n")),
                Failure::Peaks { j, peaks } => out.push_str(&format!("  j = {j}: {peaks} peaks\n")),
            }
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

/// Subset-sum reachability as a bitset: bit `s` set iff some subset of
/// `terms` (by position) sums to `s`.
fn reachable_sums(terms: &[u64], total: usize) -> Vec<u64> {
    let words = total / 64 + 1;
    let mut bits = vec![0u64; words];
    bits[0] = 1;
    for &a in terms {
        let (ws, bs) = ((a / 64) as usize, (a % 64) as u32);
        for i in (ws..words).rev() {
            let lo = bits[i - ws] << bs;
            let carry = if bs > 0 && i > ws { bits[i - ws - 1] >> (64 - bs) } else { 0 };
            bits[i] |= lo | carry;
        }
    }
    bits
}

fn bit(bits: &[u64], s: u128) -> bool {
    let s = s as usize;
    bits[s / 64] >> (s % 64) & 1 == 1
}

/// The `k` in `1..floor(G)` with no subset of the first `j` terms summing to
/// `k j`, where `G` is the prefix sum over `j`.
fn missing_ks(seq: &NumeratorSequence, j: u64, bound: u128) -> Result<Vec<u64>> {
    let terms = sequence_prefix(seq, j)?;
    let sum: u128 = terms.iter().map(|&t| t as u128).sum();
    if sum > bound {
        return Err(Error::PrefixSumTooLarge { sum, bound });
    }
    let g_floor = (sum / j as u128) as u64;
    let bits = reachable_sums(&terms, sum as usize);
    Ok((1..g_floor).filter(|&k| !bit(&bits, k as u128 * j as u128)).collect())
}

/// Checks that every `1 <= k < floor(G)` is reached for this `j` (strict
/// reading of the bound).
pub fn enables_all_k(seq: &NumeratorSequence, j: u64) -> Result<ConjectureReport> {
    scan_sequence(seq, j, j, DEFAULT_SUM_BOUND)
}

/// `enables_all_k` over `j_min..=j_max`, in parallel.
pub fn scan_sequence(seq: &NumeratorSequence, j_min: u64, j_max: u64, bound: u128) -> Result<ConjectureReport> {
    if j_min < 3 {
        return domain(format!("sequence scans need j > 2, got {j_min}"));
    }
    if j_max < j_min {
        return domain(format!("empty range {j_min}..={j_max}"));
    }
    let per_j: Vec<Vec<u64>> = (j_min..=j_max)
        .into_par_iter()
        .map(|j| missing_ks(seq, j, bound))
        .collect::<Result<_>>()?;
    let failures = (j_min..=j_max)
        .zip(per_j)
        .flat_map(|(j, ks)| ks.into_iter().map(move |k| Failure::MissingK { j, k }))
        .collect();
    let mut notes = vec!["k ranges over 1 <= k < floor(G), G = (sum of the first j terms) / j".to_string()];
    if matches!(seq, NumeratorSequence::Fibonacci) {
        notes.push("subsets are taken over term positions; the two leading 1s are distinct terms".into());
    }
    Ok(ConjectureReport::new(seq.to_string(), (j_min, j_max), failures, notes))
}

/// Modality of `f_{O_j}(1), ..., f_{O_j}(j-1)`.
pub fn row_modality(j: u64) -> Result<Modality> {
    if j < 3 {
        return domain(format!("modality needs j >= 3, got {j}"));
    }
    classify_modality(&count_all_row(j))
}

/// Classifies every row `3 <= j <= j_max`; three or more peaks is a
/// counterexample.
pub fn scan_modality(j_max: u64) -> Result<ConjectureReport> {
    if j_max < 3 {
        return domain(format!("modality scan needs j_max >= 3, got {j_max}"));
    }
    let rows: Vec<Modality> = (3..=j_max).into_par_iter().map(row_modality).collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut bimodal = Vec::new();
    for (j, m) in (3..=j_max).zip(&rows) {
        if m.peaks >= 3 {
            failures.push(Failure::Peaks { j, peaks: m.peaks });
        } else if m.peaks == 2 {
            bimodal.push(j.to_string());
        }
    }
    let notes = vec![format!(
        "bimodal rows: {}",
        if bimodal.is_empty() { "none".to_string() } else { bimodal.join(", ") }
    )];
    Ok(ConjectureReport::new("modality".into(), (3, j_max), failures, notes))
}

/// Modality of every coefficient of `prod_{n=1}^{j} (1 + x^{2n-1})`,
/// exponents `0..=j^2`, zeros included.
pub fn scan_full_poly_modality(j: u64) -> Result<Modality> {
    if !(1..=FULL_POLY_LIMIT).contains(&j) {
        return domain(format!("full-polynomial modality is limited to 1 <= j <= {FULL_POLY_LIMIT}"));
    }
    classify_modality(&expand_odd_univariate(j).dense())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::odd::ModalityLabel;

    #[test]
    fn prefixes() {
        assert_eq!(sequence_prefix(&NumeratorSequence::LazyCaterer, 6).unwrap(), vec![1, 2, 4, 7, 11, 16]);
        assert_eq!(sequence_prefix(&NumeratorSequence::Odd, 4).unwrap(), vec![1, 3, 5, 7]);
        assert_eq!(sequence_prefix(&NumeratorSequence::Cake, 6).unwrap(), vec![1, 2, 4, 8, 15, 26]);
        assert_eq!(sequence_prefix(&NumeratorSequence::Fibonacci, 6).unwrap(), vec![1, 1, 2, 3, 5, 8]);
        assert_eq!(sequence_prefix(&NumeratorSequence::Fibonacci, 93).unwrap().len(), 93);
        assert!(sequence_prefix(&NumeratorSequence::Fibonacci, 100).is_err());
        assert!(sequence_prefix(&"custom:1,2".parse().unwrap(), 3).is_err());
    }

    #[test]
    fn names_roundtrip() {
        for s in ["odd", "lazy-caterer", "cake", "fibonacci", "custom:1,2,4"] {
            assert_eq!(s.parse::<NumeratorSequence>().unwrap().to_string(), s);
        }
        assert!("primes".parse::<NumeratorSequence>().is_err());
        assert!("custom:1,0".parse::<NumeratorSequence>().is_err());
    }

    #[test]
    fn odd_reaches_everything() {
        let r = enables_all_k(&NumeratorSequence::Odd, 6).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(enables_all_k(&NumeratorSequence::Odd, 2).is_err());
    }

    #[test]
    fn custom_counterexample() {
        // 1, 2, 100: G = 103/3, and k = 2 needs a subset summing to 6
        let seq: NumeratorSequence = "custom:1,2,100".parse().unwrap();
        let r = enables_all_k(&seq, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert_eq!(r.first_failure(), Some(&Failure::MissingK { j: 3, k: 2 }));
    }

    #[test]
    fn bitset_matches_naive() {
        let terms = [3u64, 64, 65, 1, 130, 7];
        let total: u64 = terms.iter().sum();
        let bits = reachable_sums(&terms, total as usize);
        let mut naive = vec![false; total as usize + 1];
        for mask in 0..1u32 << terms.len() {
            let s: u64 = (0..terms.len()).filter(|i| mask >> i & 1 == 1).map(|i| terms[i]).sum();
            naive[s as usize] = true;
        }
        for s in 0..=total {
            assert_eq!(bit(&bits, s as u128), naive[s as usize], "s = {s}");
        }
    }

    #[test]
    fn modality_rows() {
        assert_eq!(row_modality(6).unwrap().label, ModalityLabel::Bimodal);
        assert_eq!(row_modality(7).unwrap().label, ModalityLabel::Unimodal);
        let r = scan_modality(20).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.notes, vec!["bimodal rows: 6".to_string()]);
    }

    #[test]
    fn full_polynomial() {
        assert_eq!(scan_full_poly_modality(1).unwrap().peaks, 1);
        assert!(scan_full_poly_modality(11).unwrap().peaks >= 3);
        assert!(scan_full_poly_modality(31).is_err());
    }

    #[test]
    fn report_json() {
        let r = scan_modality(8).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"jRange\":[3,8]") && json.contains("\"verdict\":\"consistent\""));
        assert_eq!(serde_json::from_str::<ConjectureReport>(&json).unwrap(), r);
        let f = serde_json::to_string(&Failure::MissingK { j: 3, k: 1 }).unwrap();
        assert_eq!(f, r#"{"kind":"missingK","j":3,"k":1}"#);
    }
}
