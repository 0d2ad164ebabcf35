//! Exact polynomial arithmetic over ℤ and 𝔽_p, resultants, and the
//! critical-value obstruction sets.

mod critical;
mod fp;
mod int;
mod parse;
mod resultant;

pub use critical::{
    critical_value_poly, critical_value_poly_mod, is_supported_prime, prop1_hypothesis,
    rtilde_infinity, rtilde_mod_p, rtilde_mod_p_or_rational, theorem1_hypothesis,
    ObstructionKind, ObstructionSet, MAX_DIFFERENCE_SCAN,
};
pub use fp::{fp_gcd, FpPoly, MAX_PRIME};
pub use int::IntPoly;
pub use resultant::{
    resultant_fp, resultant_int, resultant_x_fp, resultant_x_int, subresultant, Domain,
};

pub(crate) use fp::add_mod;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomials live over different moduli ({left} vs {right})")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} polynomial has no critical structure")]
    Degenerate { degree: usize },
    #[error("f' vanishes identically mod {p} (wild case)")]
    WildCase { p: u64 },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("critical-value difference scan exceeds {MAX_DIFFERENCE_SCAN} candidates")]
    ScanTooLarge,
}
