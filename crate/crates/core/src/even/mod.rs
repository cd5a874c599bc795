//! Even numerators: the equation `x^2 + x = y t`, whose solutions with
//! `0 < y < x < t` number `2^omega(t) - 2`, and the series
//! `2/y + 4/y + ... + 2x/y = t` each solution produces.

mod factor;
mod psi;
mod series;
mod solve;

pub use factor::{factorize, is_prime, omega_int, FactorCache, Factorization};
pub use psi::{
    crt_structure_check, pochhammer_identity_check, prime_power_check, psi_eval, psi_root_count,
    psi_sign, psi_vanishes, PSI_LIMIT,
};
pub use series::{
    even_series_partitions, even_series_partitions_capped, EvenSeries, SeriesWitness, SERIES_CAP,
    SERIES_LIMIT,
};
pub use solve::{f_e, solve_crt, solve_relaxed, solve_strict, EvenSolution, CRT_LIMIT};
