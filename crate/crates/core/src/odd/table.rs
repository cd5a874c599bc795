//! Count tables over ranges of `j` and `k`, with CSV, Markdown and JSON
//! renderings.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::count::{count_all_row, count_h_row};
use crate::error::{domain, Result};

/// `counts[r][c]` is the count for `j = j_range.0 + r`, `k = k_range.0 + c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CountTable {
    pub j_range: (u64, u64),
    pub k_range: (u64, u64),
    pub h: Option<u64>,
    #[serde(with = "crate::decimal::matrix")]
    pub counts: Vec<Vec<BigInt>>,
}

/// Tabulates `f_{O_j}(k)` (or `f_{O_j,h}(k)` when `h` is given) over
/// inclusive ranges. Rows are computed in parallel; cells with `k >= j` are
/// zero.
pub fn count_table(j_range: (u64, u64), k_range: (u64, u64), h: Option<u64>) -> Result<CountTable> {
    if j_range.0 > j_range.1 || k_range.0 > k_range.1 {
        return domain("count table ranges must be nonempty");
    }
    if j_range.0 == 0 || k_range.0 == 0 {
        return domain("count table ranges start at 1");
    }
    let counts = (j_range.0..=j_range.1)
        .into_par_iter()
        .map(|j| {
            let row = match h {
                Some(h) => count_h_row(j, h),
                None => count_all_row(j),
            };
            (k_range.0..=k_range.1)
                .map(|k| row.get((k - 1) as usize).cloned().unwrap_or_else(BigInt::zero))
                .collect()
        })
        .collect();
    Ok(CountTable { j_range, k_range, h, counts })
}

impl CountTable {
    pub fn get(&self, j: u64, k: u64) -> Option<&BigInt> {
        let r = j.checked_sub(self.j_range.0)?;
        let c = k.checked_sub(self.k_range.0)?;
        self.counts.get(r as usize)?.get(c as usize)
    }

    /// Row for a given `j`.
    pub fn row(&self, j: u64) -> Option<&[BigInt]> {
        let r = j.checked_sub(self.j_range.0)?;
        self.counts.get(r as usize).map(Vec::as_slice)
    }

    fn ks(&self) -> impl Iterator<Item = u64> {
        self.k_range.0..=self.k_range.1
    }

    fn js(&self) -> impl Iterator<Item = u64> {
        self.j_range.0..=self.j_range.1
    }

    /// Header `j,1,2,...`, then one line per `j`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j");
        for k in self.ks() {
            out.push_str(&format!(",{k}"));
        }
        out.push('\n');
        for (j, row) in self.js().zip(&self.counts) {
            out.push_str(&j.to_string());
            for c in row {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }

    /// Pipe table with nonzero entries in bold.
    pub fn to_markdown(&self) -> String {
        let ks: Vec<String> = self.ks().map(|k| k.to_string()).collect();
        let mut out = format!("| j \\ k | {} |\n", ks.join(" | "));
        out.push('|');
        out.push_str(&"---|".repeat(ks.len() + 1));
        out.push('\n');
        for (j, row) in self.js().zip(&self.counts) {
            let cells: Vec<String> = row
                .iter()
                .map(|c| if c.is_zero() { "0".to_string() } else { format!("**{c}**") })
                .collect();
            out.push_str(&format!("| {j} | {} |\n", cells.join(" | ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(t: &CountTable, j: u64) -> Vec<u64> {
        t.row(j).unwrap().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn printed_rows() {
        let t = count_table((3, 15), (1, 14), Some(3)).unwrap();
        assert_eq!(&row(&t, 11)[..6], &[1, 0, 13, 0, 1, 0]);
        let t = count_table((3, 15), (1, 14), Some(6)).unwrap();
        assert_eq!(&row(&t, 12)[..10], &[0, 0, 1, 11, 39, 58, 39, 11, 1, 0]);
        let t = count_table((3, 13), (1, 12), Some(2)).unwrap();
        assert_eq!(&row(&t, 3)[..3], &[0, 1, 0]);
        let t = count_table((3, 12), (1, 11), None).unwrap();
        assert_eq!(row(&t, 12), vec![3, 11, 25, 44, 60, 68, 60, 44, 25, 11, 3]);
        assert_eq!(row(&t, 3), vec![1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn bad_ranges() {
        assert!(count_table((5, 4), (1, 3), None).is_err());
        assert!(count_table((0, 4), (1, 3), None).is_err());
        assert!(count_table((3, 4), (0, 3), None).is_err());
    }

    #[test]
    fn renderings() {
        let t = count_table((3, 4), (1, 3), None).unwrap();
        assert_eq!(t.to_csv(), "j,1,2,3\n3,1,1,0\n4,1,2,1\n");
        assert_eq!(
            t.to_markdown(),
            "| j \\ k | 1 | 2 | 3 |\n|---|---|---|---|\n| 3 | **1** | **1** | 0 |\n| 4 | **1** | **2** | **1** |\n"
        );
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"jRange":[3,4],"kRange":[1,3],"h":null,"counts":[["1","1","0"],["1","2","1"]]}"#
        );
        assert_eq!(serde_json::from_str::<CountTable>(&json).unwrap(), t);
    }
}
