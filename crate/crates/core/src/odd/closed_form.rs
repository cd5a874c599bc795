//! Closed forms for two-part partitions.

use num_bigint::BigInt;

use crate::error::{domain, Result};

/// `f_{O_j,2}(k)` from its closed forms.
///
/// For `k` in `{1, 3}` the count is
/// `((-1)^(j+1) - 1 + (-i)^j + i^j + (-1)^j j + j) / 8`, for `k = 2` it is
/// `((-1)^j + 2j - 1) / 4`, and it vanishes for `k > 3`. The term
/// `i^j + (-i)^j` is `2, 0, -2, 0` for `j = 0, 1, 2, 3 (mod 4)`, which keeps
/// the evaluation in integers.
pub fn closed_form_h2(j: u64, k: u64) -> Result<BigInt> {
    if j < 3 {
        return domain(format!("closed form needs j >= 3, got {j}"));
    }
    if k == 0 {
        return domain("closed form needs k >= 1");
    }
    let n = i128::from(j);
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    let value = match k {
        1 | 3 => {
            let unit_sum = match j % 4 {
                0 => 2,
                2 => -2,
                _ => 0,
            };
            let num = -sign - 1 + unit_sum + sign * n + n;
            debug_assert_eq!(num % 8, 0);
            num / 8
        }
        2 => {
            let num = sign + 2 * n - 1;
            debug_assert_eq!(num % 4, 0);
            num / 4
        }
        _ => 0,
    };
    Ok(BigInt::from(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_cells() {
        assert_eq!(closed_form_h2(8, 1).unwrap(), BigInt::from(2));
        assert_eq!(closed_form_h2(13, 2).unwrap(), BigInt::from(6));
        assert_eq!(closed_form_h2(9, 4).unwrap(), BigInt::from(0));
        assert_eq!(closed_form_h2(12, 3).unwrap(), BigInt::from(3));
        assert_eq!(closed_form_h2(3, 1).unwrap(), BigInt::from(0));
        assert_eq!(closed_form_h2(3, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn k1_column_pattern() {
        // 0,1,0,1,0,2,0,2,0,3 for j = 3..=12
        let col: Vec<i64> = (3..=12)
            .map(|j| closed_form_h2(j, 1).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(col, vec![0, 1, 0, 1, 0, 2, 0, 2, 0, 3]);
    }

    #[test]
    fn domain_errors() {
        assert!(closed_form_h2(2, 1).is_err());
        assert!(closed_form_h2(5, 0).is_err());
    }
}
