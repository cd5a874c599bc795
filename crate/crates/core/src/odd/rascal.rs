//! The Rascal triangle and its link to distinct restricted sums of odd
//! integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::poly::expand_odd_product;

/// Largest `j` accepted by [`rascal_relation_check`].
pub const RELATION_LIMIT: u64 = 25;

/// Rows `0..=last` of the triangle. Row `r` has `r + 1` entries with unit
/// borders; interior entries follow
/// `T(r, n) = (T(r-1, n-1) T(r-1, n) + 1) / T(r-2, n-1)`.
pub fn rascal_triangle(last: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(last + 1);
    for r in 0..=last {
        let mut row = vec![BigInt::one(); r + 1];
        for n in 1..r {
            let above = &rows[r - 1];
            let num = &above[n - 1] * &above[n] + 1u32;
            let den = &rows[r - 2][n - 1];
            let (q, rem) = num.div_rem(den);
            if !rem.is_zero() {
                return Err(Error::IntegralityViolation { row: r, entry: n });
            }
            row[n] = q;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Row `r` of the triangle (row 0 is `[1]`).
pub fn rascal_row(r: usize) -> Result<Vec<BigInt>> {
    Ok(rascal_triangle(r)?.swap_remove(r))
}

/// For each `h` in `0..=j`, the number of distinct `x` exponents carrying
/// `y^h` in `prod_{n=1..j} (1 + y x^{2n-1})`.
pub fn distinct_sum_counts(j: u64) -> Vec<usize> {
    let p = expand_odd_product(j);
    (0..=j).map(|h| p.distinct_x_exponents(h)).collect()
}

/// Checks that [`distinct_sum_counts`] for `j` equals row `j` of the
/// triangle.
pub fn rascal_relation_check(j: u64) -> Result<bool> {
    if j > RELATION_LIMIT {
        return domain(format!("Rascal relation check limited to j <= {RELATION_LIMIT}"));
    }
    let row = rascal_row(j as usize)?;
    let counts = distinct_sum_counts(j);
    Ok(row.len() == counts.len() && row.iter().zip(&counts).all(|(t, c)| *t == BigInt::from(*c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[u32]) -> Vec<BigInt> {
        v.iter().map(|x| BigInt::from(*x)).collect()
    }

    #[test]
    fn first_rows() {
        let t = rascal_triangle(6).unwrap();
        assert_eq!(t[0], ints(&[1]));
        assert_eq!(t[1], ints(&[1, 1]));
        assert_eq!(t[4], ints(&[1, 4, 5, 4, 1]));
        assert_eq!(t[6], ints(&[1, 6, 9, 10, 9, 6, 1]));
        // 10 = (7 * 7 + 1) / 5
        assert_eq!((&t[5][2] * &t[5][3] + 1u32) / &t[4][2], BigInt::from(10));
    }

    #[test]
    fn interior_closed_form() {
        // T(r, n) = n (r - n) + 1
        let t = rascal_triangle(40).unwrap();
        for (r, row) in t.iter().enumerate() {
            for (n, v) in row.iter().enumerate() {
                assert_eq!(*v, BigInt::from(n * (r - n) + 1));
            }
        }
    }

    #[test]
    fn relation_small() {
        assert_eq!(distinct_sum_counts(6), vec![1, 6, 9, 10, 9, 6, 1]);
        assert!(rascal_relation_check(6).unwrap());
        assert!(rascal_relation_check(0).unwrap());
        assert!(rascal_relation_check(26).is_err());
    }
}
