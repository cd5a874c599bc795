//! Partitions of `k` into distinct fractions `(2n-1)/j`, `1 <= n <= j`.
//!
//! `f_{O_j}(k)` counts them; `f_{O_j,h}(k)` counts those with exactly `h`
//! fractions. Both equal subset counts of `{1, 3, ..., 2j-1}` with sum
//! `k j`.

mod closed_form;
mod count;
mod gaussian;
mod modality;
mod rascal;
mod table;
mod witness;

pub use closed_form::closed_form_h2;
pub use count::{count_all, count_all_row, count_h, count_h_row, RestrictedGrid, U128_ALL_LIMIT};
pub use gaussian::{
    bijection_check, gaussian_at_one, gaussian_binomial, odd_image_exponent, shifted_gaussian,
    to_odd_parts, BIJECTION_LIMIT,
};
pub use modality::{classify_modality, Modality, ModalityLabel};
pub use rascal::{distinct_sum_counts, rascal_relation_check, rascal_row, rascal_triangle, RELATION_LIMIT};
pub use table::{count_table, CountTable};
pub use witness::{
    centered_block, construct_witness, end_blocks, enumerate, exists_partition, PartitionWitness,
    DEFAULT_CAP, ENUMERATION_HARD_LIMIT, ENUMERATION_LIMIT,
};

use num_bigint::BigInt;

use crate::error::{domain, Result};
use crate::poly::UniPoly;

/// A counting query: denominator `j`, target `k`, optional part count `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddQuery {
    pub j: u64,
    pub k: u64,
    pub h: Option<u64>,
}

impl OddQuery {
    pub fn count(&self) -> BigInt {
        match self.h {
            Some(h) => count_h(self.j, h, self.k),
            None => count_all(self.j, self.k),
        }
    }
}

/// `false` when no `h`-term solution of `2(n_1 + ... + n_h) = k j + h` can
/// exist: `j < 3`, `k` outside `1..j`, `k >= 2h`, or `k j` and `h` of
/// different parity. `true` only means the query is not excluded.
pub fn feasibility(j: u64, h: u64, k: u64) -> bool {
    j >= 3 && k >= 1 && k < j && k < 2 * h && (k * j) % 2 == h % 2
}

/// `r(x) = sum_{k=1}^{j-1} f_{O_j}(k) x^k`.
pub fn r_polynomial(j: u64) -> Result<UniPoly> {
    if j < 3 {
        return domain(format!("r(x) needs j >= 3, got {j}"));
    }
    Ok(UniPoly::from_terms((1..).zip(count_all_row(j))))
}

/// `r_h(x) = sum_{k=1}^{j-1} f_{O_j,h}(k) x^k`.
pub fn r_h_polynomial(j: u64, h: u64) -> Result<UniPoly> {
    if j < 3 {
        return domain(format!("r_h(x) needs j >= 3, got {j}"));
    }
    Ok(UniPoly::from_terms((1..).zip(count_h_row(j, h))))
}
