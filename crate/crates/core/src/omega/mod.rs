//! A complex continuation of the prime omega function, evaluated with
//! arbitrary-precision binary floats in log space, and the Dirichlet series
//! of `2^omega(t)`.

mod cont;
mod dirichlet;
mod hp;
mod sinc;

pub use cont::{
    ceil_re, inner_sum, omega_cont, InnerSum, OmegaResult, OmegaValue, DEFAULT_PRECISION,
    MAX_CEIL, MAX_ESCALATION,
};
pub use dirichlet::{
    dirichlet_partial, omega_sieve, tail_bound, tail_bound_for, zeta, zeta_ratio,
};
pub use hp::{
    atan2, format_pow2, log2_abs, normalize_phase, parse_real, to_bigint, to_decimal, to_f64,
    HPComplex, LogComplex, MIN_PRECISION, RM,
};
pub use sinc::{log_sinc_c, sinc_c};

pub use astro_float::BigFloat;
