use std::sync::atomic::{AtomicU64, Ordering};

use num_rational::Ratio;
use rayon::prelude::*;

use super::ImageError;
use crate::arith::is_prime;
use crate::polyarith::{add_mod, FpPoly, IntPoly, MAX_PRIME};

/// Residues per parallel work unit when building a mask.
const CHUNK: u64 = 1 << 16;

/// How [`compute_image_with`] walks the residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ImageStrategy {
    /// Horner evaluation at every point.
    Horner,
    /// Forward differences: `deg f` running accumulators, additions only.
    #[default]
    FiniteDifference,
}

/// The image `Ω_p = f(𝔽_p)` as a bit array of length `p` with a cached
/// popcount.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageMask {
    p: u64,
    words: Vec<u64>,
    count: u64,
}

impl ImageMask {
    pub(crate) fn from_words(p: u64, words: Vec<u64>) -> Self {
        let count = words.iter().map(|w| w.count_ones() as u64).sum();
        ImageMask { p, words, count }
    }

    /// Mask with exactly the given residues set (reduced mod `p`).
    pub fn from_residues(p: u64, residues: impl IntoIterator<Item = u64>) -> Self {
        let mut words = vec![0u64; p.div_ceil(64) as usize];
        for r in residues {
            let r = r % p;
            words[(r / 64) as usize] |= 1 << (r % 64);
        }
        Self::from_words(p, words)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `|Ω_p|`.
    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, t: u64) -> bool {
        let t = t % self.p;
        self.words[(t / 64) as usize] >> (t % 64) & 1 == 1
    }

    /// Elements of the image in increasing order.
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

    /// Mean spacing `s_p = p / |Ω_p|`, exact.
    pub fn mean_spacing(&self) -> Ratio<u64> {
        Ratio::new(self.p, self.count)
    }

    pub fn is_permutation(&self) -> bool {
        self.count == self.p
    }
}

fn check_prime(p: u64) -> Result<(), ImageError> {
    if p >= MAX_PRIME {
        return Err(ImageError::PrimeOutOfRange(p));
    }
    if !is_prime(p) {
        return Err(ImageError::NotPrime(p));
    }
    Ok(())
}

/// The image of `f` modulo the prime `p`, built by finite differences.
pub fn compute_image(f: &IntPoly, p: u64) -> Result<ImageMask, ImageError> {
    compute_image_with(f, p, ImageStrategy::default())
}

pub fn compute_image_with(
    f: &IntPoly,
    p: u64,
    strategy: ImageStrategy,
) -> Result<ImageMask, ImageError> {
    check_prime(p)?;
    let fp = f.reduce_mod(p);
    let words: Vec<AtomicU64> = (0..p.div_ceil(64)).map(|_| AtomicU64::new(0)).collect();
    let set = |t: u64| {
        words[(t / 64) as usize].fetch_or(1 << (t % 64), Ordering::Relaxed);
    };
    let chunk = |start: u64| {
        let end = (start + CHUNK).min(p);
        match strategy {
            ImageStrategy::Horner => (start..end).for_each(|x| set(fp.eval(x))),
            ImageStrategy::FiniteDifference => walk_differences(&fp, start, end, &set),
        }
    };
    let starts: Vec<u64> = (0..p).step_by(CHUNK as usize).collect();
    if starts.len() > 1 {
        starts.into_par_iter().for_each(chunk);
    } else {
        starts.into_iter().for_each(chunk);
    }
    let words = words.into_iter().map(AtomicU64::into_inner).collect();
    Ok(ImageMask::from_words(p, words))
}

fn walk_differences(fp: &FpPoly, start: u64, end: u64, emit: &impl Fn(u64)) {
    let p = fp.modulus();
    let n = fp.degree().unwrap_or(0);
    // d[i] = Δ^i f(start), from the values f(start), ..., f(start + n)
    let mut d: Vec<u64> = (0..=n as u64).map(|j| fp.eval(start + j)).collect();
    for level in 1..=n {
        for j in (level..=n).rev() {
            d[j] = add_mod(d[j], p - d[j - 1], p);
        }
    }
    for _ in start..end {
        emit(d[0]);
        for i in 0..n {
            d[i] = add_mod(d[i], d[i + 1], p);
        }
    }
}

/// The mask repeated cyclically so any 64-bit window starting below `p` can
/// be read without wraparound logic.
#[derive(Clone, Debug)]
pub(crate) struct CyclicView {
    mask: ImageMask,
    ring: Vec<u64>,
}

impl CyclicView {
    pub(crate) fn new(mask: &ImageMask) -> Self {
        let p = mask.p;
        let bits = p + 128;
        let mut ring = vec![0u64; bits.div_ceil(64) as usize + 1];
        let mut offset = 0u64;
        while offset < bits {
            for t in mask.iter() {
                let pos = offset + t;
                if pos < bits {
                    ring[(pos / 64) as usize] |= 1 << (pos % 64);
                }
            }
            offset += p;
        }
        CyclicView {
            mask: mask.clone(),
            ring,
        }
    }

    pub(crate) fn mask(&self) -> &ImageMask {
        &self.mask
    }

    /// Bits `t, t+1, ..., t+63` (mod p) of the mask, `t < p`.
    #[inline]
    pub(crate) fn window(&self, t: u64) -> u64 {
        let w = (t / 64) as usize;
        let o = t % 64;
        if o == 0 {
            self.ring[w]
        } else {
            self.ring[w] >> o | self.ring[w + 1] << (64 - o)
        }
    }

    /// `|{t ∈ Ω : t + h_i ∈ Ω ∀i}|` with offsets already reduced into `[0, p)`.
    pub(crate) fn count_shifted(&self, offsets: &[u64]) -> u64 {
        let p = self.mask.p;
        let nwords = self.mask.words.len();
        let tail = p % 64;
        let mut total = 0u64;
        for w in 0..nwords {
            let base = w as u64 * 64;
            let mut acc = self.mask.words[w];
            for &h in offsets {
                if acc == 0 {
                    break;
                }
                let start = base + h;
                acc &= self.window(if start >= p { start - p } else { start });
            }
            if w == nwords - 1 && tail != 0 {
                acc &= (1u64 << tail) - 1;
            }
            total += acc.count_ones() as u64;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn elements(m: &ImageMask) -> Vec<u64> {
        m.iter().collect()
    }

    #[test]
    fn small_images() {
        let m = compute_image(&ip(&[0, 1]), 11).unwrap();
        assert!(m.is_permutation());
        assert_eq!(m.mean_spacing(), Ratio::from_integer(1));
        let m = compute_image(&ip(&[0, 0, 1]), 7).unwrap();
        assert_eq!(elements(&m), vec![0, 1, 2, 4]);
        assert_eq!(m.mean_spacing(), Ratio::new(7, 4));
        let m = compute_image(&ip(&[0, 0, -2, 0, 1]), 5).unwrap();
        assert_eq!(elements(&m), vec![0, 3, 4]);
    }

    #[test]
    fn constant_polynomial_gives_singleton() {
        let m = compute_image(&ip(&[9]), 7).unwrap();
        assert_eq!(elements(&m), vec![2]);
    }

    #[test]
    fn strategies_agree_across_chunk_boundaries() {
        let f = ip(&[17, -3, 0, 5, 0, 0, 1]);
        for p in [2u64, 3, 5, 7, 131_071, 200_003] {
            let a = compute_image_with(&f, p, ImageStrategy::Horner).unwrap();
            let b = compute_image_with(&f, p, ImageStrategy::FiniteDifference).unwrap();
            assert_eq!(a, b, "p = {p}");
        }
    }

    #[test]
    fn bad_moduli() {
        assert!(matches!(compute_image(&ip(&[0, 1]), 15), Err(ImageError::NotPrime(15))));
        assert!(matches!(
            compute_image(&ip(&[0, 1]), 1 << 31),
            Err(ImageError::PrimeOutOfRange(_))
        ));
    }

    #[test]
    fn cyclic_windows_handle_tiny_primes() {
        let m = ImageMask::from_residues(3, [0, 1]);
        let v = CyclicView::new(&m);
        assert_eq!(v.count_shifted(&[]), 2);
        assert_eq!(v.count_shifted(&[1]), 1);
        assert_eq!(v.count_shifted(&[2]), 1);
        assert_eq!(v.count_shifted(&[1, 2]), 0);
    }
}
