//! Square-free moduli: CRT-multiplicative counts, reduction to the
//! non-permutation part `q₁`, and explicit enumeration of `Ω_q`.

mod modulus;

pub use modulus::SquareFreeModulus;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::polyarith::IntPoly;
use crate::primeimage::{compute_image, CyclicView, ImageError, ImageMask, PrimeStats};

/// Default ceiling on explicitly enumerated moduli: 2^31 bits (256 MiB).
pub const DEFAULT_CAP_BITS: u64 = 1 << 31;

const WORDS_PER_TASK: usize = 1 << 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModulusError {
    #[error("modulus must exceed 1")]
    Trivial,
    #[error("{0} is not square-free")]
    NotSquareFree(u64),
    #[error("{0} in the prime list is not prime")]
    CompositeEntry(u64),
    #[error("prime {0} repeated in the prime list")]
    RepeatedPrime(u64),
    #[error("cannot read modulus {0:?}")]
    Syntax(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositeError {
    #[error(transparent)]
    Image(#[from] ImageError),
    #[error("modulus {q} exceeds the enumeration cap of {cap} bits; only CRT-multiplicative statistics are available")]
    CapExceeded { q: BigUint, cap: u64 },
}

/// Per-prime images of `f` for every prime of a square-free modulus.
#[derive(Clone, Debug)]
pub struct CompositeImage {
    modulus: SquareFreeModulus,
    degree: usize,
    views: Vec<CyclicView>,
}

/// Aggregate statistics of `f` modulo `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeStats {
    pub modulus: SquareFreeModulus,
    pub per_prime: Vec<PrimeStats>,
    /// `|Ω_q| = ∏ |Ω_p|`.
    pub omega_q_size: BigUint,
    /// `s_q = q / |Ω_q| = ∏ s_p`.
    pub s_q: BigRational,
    /// The primes where `f` is not a permutation.
    pub q1_reduced: SquareFreeModulus,
}

impl CompositeImage {
    /// Build every per-prime mask, in parallel.
    pub fn new(f: &IntPoly, modulus: &SquareFreeModulus) -> Result<Self, CompositeError> {
        let views = modulus
            .primes()
            .par_iter()
            .map(|&p| compute_image(f, p).map(|m| CyclicView::new(&m)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CompositeImage {
            modulus: modulus.clone(),
            degree: f.degree().unwrap_or(0),
            views,
        })
    }

    pub fn modulus(&self) -> &SquareFreeModulus {
        &self.modulus
    }

    pub fn masks(&self) -> impl Iterator<Item = &ImageMask> {
        self.views.iter().map(CyclicView::mask)
    }

    /// `|Ω_q|`.
    pub fn omega_size(&self) -> BigUint {
        self.masks().fold(BigUint::one(), |acc, m| acc * m.count())
    }

    /// `s_q = q / |Ω_q|`, exact.
    pub fn mean_spacing(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.modulus.q().clone()),
            BigInt::from(self.omega_size()),
        )
    }

    pub fn stats(&self) -> CompositeStats {
        let per_prime: Vec<PrimeStats> = self
            .masks()
            .map(|m| PrimeStats::from_mask(m, self.degree))
            .collect();
        let s_q = per_prime.iter().fold(BigRational::one(), |acc, s| {
            acc * BigRational::new(BigInt::from(*s.s_p.numer()), BigInt::from(*s.s_p.denom()))
        });
        CompositeStats {
            modulus: self.modulus.clone(),
            omega_q_size: self.omega_size(),
            s_q,
            q1_reduced: self.q1(),
            per_prime,
        }
    }

    /// `N_k(h, q) = ∏_{p | q} N_k(h mod p, p)`.
    pub fn n_k(&self, offsets: &[i64]) -> BigUint {
        self.views.iter().fold(BigUint::one(), |acc, v| {
            let p = v.mask().p();
            let reduced: Vec<u64> = offsets.iter().map(|&h| h.rem_euclid(p as i64) as u64).collect();
            acc * v.count_shifted(&reduced)
        })
    }

    /// The sub-modulus of primes with `|Ω_p| < p`.
    pub fn q1(&self) -> SquareFreeModulus {
        SquareFreeModulus::from_sorted(
            self.masks()
                .filter(|m| !m.is_permutation())
                .map(ImageMask::p)
                .collect(),
        )
    }

    /// The same image restricted to the non-permutation primes.
    pub fn reduced(&self) -> CompositeImage {
        CompositeImage {
            modulus: self.q1(),
            degree: self.degree,
            views: self
                .views
                .iter()
                .filter(|v| !v.mask().is_permutation())
                .cloned()
                .collect(),
        }
    }

    /// `Ω_q` as an explicit bit array of length `q`: bit `t` is set iff
    /// `t mod p ∈ Ω_p` for every `p | q`.
    pub fn enumerate(&self, cap_bits: u64) -> Result<ImageBits, CompositeError> {
        let q = self
            .modulus
            .q_u64()
            .filter(|&q| q <= cap_bits)
            .ok_or_else(|| CompositeError::CapExceeded {
                q: self.modulus.q().clone(),
                cap: cap_bits,
            })?;
        let nwords = q.div_ceil(64) as usize;
        let mut words = vec![!0u64; nwords];
        words
            .par_chunks_mut(WORDS_PER_TASK)
            .enumerate()
            .for_each(|(task, chunk)| {
                let first = (task * WORDS_PER_TASK) as u64 * 64;
                for v in &self.views {
                    let p = v.mask().p();
                    let step = 64 % p;
                    let mut r = first % p;
                    for w in chunk.iter_mut() {
                        *w &= v.window(r);
                        r += step;
                        if r >= p {
                            r -= p;
                        }
                    }
                }
            });
        if q % 64 != 0 {
            words[nwords - 1] &= (1u64 << (q % 64)) - 1;
        }
        Ok(ImageBits::from_words(q, words))
    }
}

/// `Ω_q` as a bit array over `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageBits {
    q: u64,
    words: Vec<u64>,
    count: u64,
}

impl ImageBits {
    fn from_words(q: u64, words: Vec<u64>) -> Self {
        let count = words.iter().map(|w| w.count_ones() as u64).sum();
        ImageBits { q, words, count }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn contains(&self, t: u64) -> bool {
        let t = t % self.q;
        self.words[(t / 64) as usize] >> (t % 64) & 1 == 1
    }

    /// Size of the backing bit array in bytes.
    pub fn memory_bytes(&self) -> usize {
        self.words.len() * std::mem::size_of::<u64>()
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + b)
            })
        })
    }
}

/// Convenience wrapper: `∏ N_k(h mod p, p)` for `f` modulo `q`.
pub fn n_k_composite(
    f: &IntPoly,
    modulus: &SquareFreeModulus,
    offsets: &[i64],
) -> Result<BigUint, CompositeError> {
    Ok(CompositeImage::new(f, modulus)?.n_k(offsets))
}

/// The primes of `modulus` at which `f` is not a permutation.
pub fn reduce_to_q1(f: &IntPoly, modulus: &SquareFreeModulus) -> Result<SquareFreeModulus, CompositeError> {
    Ok(CompositeImage::new(f, modulus)?.q1())
}

pub fn enumerate_image(
    f: &IntPoly,
    modulus: &SquareFreeModulus,
    cap_bits: u64,
) -> Result<ImageBits, CompositeError> {
    CompositeImage::new(f, modulus)?.enumerate(cap_bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(n: u64) -> SquareFreeModulus {
        SquareFreeModulus::from_integer(n).unwrap()
    }

    #[test]
    fn n_k_composite_examples() {
        let sq = ip(&[0, 0, 1]);
        assert_eq!(n_k_composite(&sq, &q(105), &[1]).unwrap(), BigUint::from(4u32));
        assert_eq!(n_k_composite(&sq, &q(105), &[0]).unwrap(), BigUint::from(24u32));
        let single = SquareFreeModulus::from_primes(&[13]).unwrap();
        let direct = crate::primeimage::n_k_prime(&compute_image(&sq, 13).unwrap(), &[5]);
        assert_eq!(n_k_composite(&sq, &single, &[5]).unwrap(), BigUint::from(direct));
    }

    #[test]
    fn q1_reduction() {
        assert_eq!(reduce_to_q1(&ip(&[0, 0, 0, 1]), &q(105)).unwrap().primes(), &[7]);
        assert_eq!(reduce_to_q1(&ip(&[0, 0, 1]), &q(105)).unwrap().primes(), &[3, 5, 7]);
        let unit = reduce_to_q1(&ip(&[0, 1]), &q(105)).unwrap();
        assert!(unit.is_unit());
        let stats = CompositeImage::new(&ip(&[0, 1]), &q(105)).unwrap().stats();
        assert!(stats.s_q.is_one());
    }

    #[test]
    fn enumeration_counts() {
        let sq = ip(&[0, 0, 1]);
        let bits = enumerate_image(&sq, &q(105), DEFAULT_CAP_BITS).unwrap();
        assert_eq!(bits.count(), 24);
        let all = enumerate_image(&ip(&[0, 1]), &q(15), DEFAULT_CAP_BITS).unwrap();
        assert_eq!(all.iter().collect::<Vec<_>>(), (0..15).collect::<Vec<_>>());
        let err = enumerate_image(&sq, &q(105), 100).unwrap_err();
        assert!(matches!(err, CompositeError::CapExceeded { cap: 100, .. }));
    }

    #[test]
    fn eight_prime_squares() {
        let m = SquareFreeModulus::from_primes(&[3, 5, 7, 11, 13, 17, 19, 23]).unwrap();
        let img = CompositeImage::new(&ip(&[0, 0, 1]), &m).unwrap();
        let bits = img.enumerate(DEFAULT_CAP_BITS).unwrap();
        assert_eq!(bits.count(), 1_088_640);
        assert_eq!(img.omega_size().to_u64(), Some(1_088_640));
    }

    #[test]
    fn s_q_is_product_of_s_p() {
        let img = CompositeImage::new(&ip(&[0, 1, 0, 1]), &q(1155)).unwrap();
        let stats = img.stats();
        let bits = img.enumerate(DEFAULT_CAP_BITS).unwrap();
        assert_eq!(stats.s_q, BigRational::new(1155.into(), (bits.count() as i64).into()));
        assert_eq!(stats.s_q, img.mean_spacing());
    }
}
