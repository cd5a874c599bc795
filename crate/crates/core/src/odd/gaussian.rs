//! Gaussian binomial coefficients and the bijection between `h`-subsets of
//! `{1, ..., j}` and `h`-subsets of the first `j` odd integers.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{domain, Result};
use crate::poly::{expand_consecutive_product, expand_odd_product, UniPoly};

/// Largest `j` accepted by [`bijection_check`].
pub const BIJECTION_LIMIT: u64 = 30;

/// `[j choose h]_q` from the q-Pascal rule
/// `[j, h] = [j-1, h-1] + q^h [j-1, h]`. Zero when `h > j`.
pub fn gaussian_binomial(j: u64, h: u64) -> UniPoly {
    if h > j {
        return UniPoly::zero();
    }
    // row[i] = [n choose i]_q for the current n
    let mut row: Vec<UniPoly> = vec![UniPoly::one()];
    for n in 1..=j {
        let width = (n.min(h) + 1) as usize;
        let mut next = Vec::with_capacity(width);
        for i in 0..width {
            let from_left = if i == 0 { UniPoly::zero() } else { row[i - 1].clone() };
            let from_above = row.get(i).map_or_else(UniPoly::zero, |p| p.shift(i as u64));
            next.push(from_left.add(&from_above));
        }
        row = next;
    }
    row.swap_remove(h as usize)
}

/// `q^{h(h+1)/2} [j choose h]_q`: the generating function of `h`-element
/// subsets of `{1, ..., j}` by their sum.
pub fn shifted_gaussian(j: u64, h: u64) -> UniPoly {
    gaussian_binomial(j, h).shift(h * (h + 1) / 2)
}

/// Image of a subset sum under `n -> 2n - 1` applied to all `h` parts.
pub fn odd_image_exponent(m: u64, h: u64) -> u64 {
    2 * m - h
}

/// Maps a subset of `{1, ..., j}` to the corresponding odd integers.
pub fn to_odd_parts(parts: &[u64]) -> Vec<u64> {
    parts.iter().map(|n| 2 * n - 1).collect()
}

/// Checks that the `y^h` slice of `prod (1 + y x^n)` equals the shifted
/// Gaussian binomial, and that the `y^h` slice of `prod (1 + y x^{2n-1})`
/// carries the same coefficients in the same order at exponents `2m - h`.
pub fn bijection_check(j: u64, h: u64) -> Result<bool> {
    if j > BIJECTION_LIMIT {
        return domain(format!("bijection check limited to j <= {BIJECTION_LIMIT}"));
    }
    let consecutive = expand_consecutive_product(j).slice_y(h);
    let odd = expand_odd_product(j).slice_y(h);
    Ok(bijection_holds(&consecutive, &odd, &shifted_gaussian(j, h), h))
}

pub(crate) fn bijection_holds(consecutive: &UniPoly, odd: &UniPoly, gaussian: &UniPoly, h: u64) -> bool {
    if consecutive != gaussian || consecutive.len() != odd.len() {
        return false;
    }
    consecutive
        .terms()
        .zip(odd.terms())
        .all(|((m, a), (e, b))| a == b && e == odd_image_exponent(m, h))
}

/// `[j choose h]_q` at `q = 1`.
pub fn gaussian_at_one(j: u64, h: u64) -> BigInt {
    gaussian_binomial(j, h).eval(&BigInt::one())
}
