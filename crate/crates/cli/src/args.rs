use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "fracpart", version, about = "Partitions of integers into fractions with a constant denominator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. Tables default to md, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Working precision for omega and dirichlet.
    #[arg(long, global = true, env = "FRACPART_PRECISION_BITS", default_value_t = 256)]
    pub precision_bits: usize,

    /// Worker threads; defaults to all cores for tables and scans and to
    /// one for single queries.
    #[arg(long, global = true, env = "FRACPART_THREADS")]
    pub threads: Option<usize>,

    /// Maximum number of witnesses an enumeration may return.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Md,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of f_{O_j}(k) or f_{O_j,h}(k) for 3 <= j <= jmax, 1 <= k < jmax.
    OddTable {
        #[arg(long)]
        jmax: u64,
        #[arg(long)]
        h: Option<u64>,
    },
    /// A single count f_{O_j}(k) or f_{O_j,h}(k).
    OddCount(OddCell),
    /// Every set of odd numerators over j summing to k.
    OddEnum(OddCell),
    /// One witness built by pairing numerators.
    OddWitness(Cell),
    /// The h = 2 closed form next to the DP count.
    ClosedForm(Cell),
    /// Rascal triangle rows 0..=j and the distinct-sum relation for j.
    Rascal {
        #[arg(long)]
        j: u64,
    },
    /// Shifted Gaussian binomial whose coefficients are f_{O_j,h}.
    Gaussian {
        #[arg(long)]
        j: u64,
        #[arg(long)]
        h: u64,
    },
    /// Checks the partition bijection behind the Gaussian form, for one h
    /// or all 0 <= h <= j.
    BijectionCheck {
        #[arg(long)]
        j: u64,
        #[arg(long)]
        h: Option<u64>,
    },
    /// F_E(t) = 2^omega(t) - 2 for one t or a range a..b.
    EvenCount {
        #[arg(long)]
        t: TRange,
    },
    /// Solutions of x^2 + x = y t.
    EvenSolve {
        #[arg(long)]
        t: u64,
        /// Include the trivial x = t - 1 and x = t.
        #[arg(long)]
        relaxed: bool,
    },
    /// Subsets of 2/y + 4/y + ... + 2x/y with integer sums.
    EvenSeries {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Psi_t at x, or its integer roots in 1..=t.
    Psi {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        x: Option<u64>,
    },
    /// The continuation omega(z).
    Omega {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Partial sum of 2^omega(t) / t^s next to zeta(s)^2 / zeta(2s).
    Dirichlet {
        #[arg(long)]
        s: String,
        #[arg(long, default_value_t = 100_000)]
        t: u64,
    },
    /// Falsification scan: modality, full-poly, or a numerator sequence
    /// (odd, lazy-caterer, cake, fibonacci, custom:a,b,...).
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Args)]
pub struct Cell {
    #[arg(long)]
    pub j: u64,
    #[arg(long)]
    pub k: u64,
}

#[derive(Debug, Args)]
pub struct OddCell {
    #[arg(long)]
    pub j: u64,
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub h: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    pub name: String,
    /// Largest j scanned (the j for full-poly).
    #[arg(long, alias = "j", default_value_t = 20)]
    pub jmax: u64,
}

/// `t`, or an inclusive range `a..b` (also `a..=b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TRange(pub u64, pub u64);

impl FromStr for TRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |v: &str| v.trim().parse::<u64>().map_err(|_| format!("invalid integer {v:?}"));
        match s.split_once("..") {
            None => num(s).map(|t| TRange(t, t)),
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
                if a > b {
                    return Err(format!("empty range {s}"));
                }
                Ok(TRange(a, b))
            }
        }
    }
}
