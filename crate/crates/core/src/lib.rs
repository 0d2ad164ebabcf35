//! Images of integer polynomials modulo primes and square-free moduli, their
//! shifted-intersection counts `N_k`, k-level correlations and spacing
//! statistics, and the critical-value sets that obstruct the generic
//! asymptotics.

pub mod arith;
pub mod composite;
pub mod oracle;
pub mod polyarith;
pub mod primeimage;
pub mod stats;
pub mod verify;

/// Big-number types that appear in the public API.
pub mod num {
    pub use num_bigint::{BigInt, BigUint};
    pub use num_rational::{BigRational, Ratio};
}
