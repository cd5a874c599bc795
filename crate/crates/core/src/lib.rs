//! Exact counting, enumeration and verification for partitions of integers
//! into fractions with a constant denominator and distinct odd or even
//! numerators.
//!
//! - [`poly`]: sparse exact polynomials in `x` (and `y`) for the generating
//!   function products.
//! - [`odd`]: `f_{O_j}(k)` and `f_{O_j,h}(k)`, witnesses, closed forms,
//!   modality, Gaussian binomials and the Rascal triangle.
//! - [`even`]: solutions of `x^2 + x = y t`, `F_E(t) = 2^omega(t) - 2`,
//!   the polynomial `Psi_t` and series-into-integers listings.
//! - [`omega`]: the sinc-product continuation of `omega(z)` and the
//!   Dirichlet series for `zeta(s)^2 / zeta(2s)`.
//! - [`conjecture`]: falsification scans for numerator sequences and for
//!   the modality of `r(x)`.

pub mod conjecture;
pub mod decimal;
pub mod error;
pub mod even;
pub mod odd;
pub mod omega;
pub mod poly;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
