//! JSON shapes of every command's result. Counts travel as decimal strings.

use fracpart::decimal;
use fracpart::even::{EvenSolution, SeriesWitness};
use fracpart::odd::{Modality, PartitionWitness};
use fracpart::poly::UniPoly;
use fracpart::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCount {
    pub j: u64,
    pub k: u64,
    pub h: Option<u64>,
    #[serde(with = "decimal::scalar")]
    pub count: BigInt,
}

/// Numerators over a common denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub numerators: Vec<u64>,
    pub denominator: u64,
}

impl From<&PartitionWitness> for Witness {
    fn from(w: &PartitionWitness) -> Self {
        Witness { numerators: w.numerators.clone(), denominator: w.j }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddEnum {
    pub j: u64,
    pub k: u64,
    pub h: Option<u64>,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddWitness {
    pub j: u64,
    pub k: u64,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosedForm {
    pub j: u64,
    pub k: u64,
    #[serde(with = "decimal::scalar")]
    pub closed_form: BigInt,
    #[serde(with = "decimal::scalar")]
    pub count: BigInt,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Rascal {
    pub j: u64,
    #[serde(with = "decimal::matrix")]
    pub rows: Vec<Vec<BigInt>>,
    pub distinct_sums: Vec<usize>,
    pub relation_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gaussian {
    pub j: u64,
    pub h: u64,
    pub text: String,
    pub poly: UniPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bijection {
    pub j: u64,
    pub h: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenCount {
    pub t: u64,
    pub omega: usize,
    #[serde(with = "decimal::scalar")]
    pub count: BigInt,
    /// Strict solutions found by scanning, when `t` is small enough.
    pub scanned: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSolve {
    pub t: u64,
    pub relaxed: bool,
    pub solutions: Vec<EvenSolution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSeries {
    pub t: u64,
    pub x: u64,
    pub y: u64,
    pub missing: Vec<u64>,
    pub witnesses: Vec<SeriesWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiValue {
    pub t: u64,
    pub x: u64,
    #[serde(with = "decimal::scalar")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PsiRoots {
    pub t: u64,
    pub roots: Vec<u64>,
    pub two_pow_omega: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Dirichlet {
    pub s: String,
    pub t: u64,
    pub partial: String,
    pub limit: String,
    pub gap: String,
    pub tail_bound: String,
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullPoly {
    pub j: u64,
    pub modality: Modality,
}
