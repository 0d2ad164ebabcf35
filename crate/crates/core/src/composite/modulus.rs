use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::ModulusError;
use crate::arith::{factorize, is_prime};

/// A square-free modulus `q`, kept as its sorted list of distinct primes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareFreeModulus {
    primes: Vec<u64>,
    q: BigUint,
}

impl SquareFreeModulus {
    /// Factor `q` (trial division, then Pollard rho) and check it is square-free.
    pub fn from_integer(q: u64) -> Result<Self, ModulusError> {
        if q < 2 {
            return Err(ModulusError::Trivial);
        }
        let factors = factorize(q);
        if factors.windows(2).any(|w| w[0] == w[1]) {
            return Err(ModulusError::NotSquareFree(q));
        }
        Ok(Self::from_sorted(factors))
    }

    /// Validate an explicit list of primes; order does not matter.
    pub fn from_primes(primes: &[u64]) -> Result<Self, ModulusError> {
        if primes.is_empty() {
            return Err(ModulusError::Trivial);
        }
        if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(ModulusError::CompositeEntry(bad));
        }
        let mut sorted = primes.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ModulusError::RepeatedPrime(w[0]));
        }
        Ok(Self::from_sorted(sorted))
    }

    /// The modulus 1 (no primes); arises when every prime is reduced away.
    pub fn unit() -> Self {
        Self::from_sorted(Vec::new())
    }

    pub(crate) fn from_sorted(primes: Vec<u64>) -> Self {
        let q = primes.iter().fold(BigUint::one(), |acc, &p| acc * p);
        SquareFreeModulus { primes, q }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    /// `q` if it fits in 64 bits.
    pub fn q_u64(&self) -> Option<u64> {
        self.q.to_u64()
    }

    /// `ω(q)`, the number of prime factors.
    pub fn omega(&self) -> usize {
        self.primes.len()
    }

    pub fn is_unit(&self) -> bool {
        self.primes.is_empty()
    }
}

impl fmt::Display for SquareFreeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Accepts either an integer (`"105"`) or a comma-separated prime list
/// (`"3,5,7"`).
impl FromStr for SquareFreeModulus {
    type Err = ModulusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.contains(',') {
            let primes = s
                .split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| ModulusError::Syntax(s.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            Self::from_primes(&primes)
        } else {
            let q = s.parse::<u64>().map_err(|_| ModulusError::Syntax(s.to_string()))?;
            Self::from_integer(q)
        }
    }
}
