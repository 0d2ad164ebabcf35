use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::StatsError;
use crate::composite::{CompositeImage, SquareFreeModulus};
use crate::polyarith::IntPoly;

/// Default ceiling on lattice points visited by [`r_k_correlation`].
pub const DEFAULT_LATTICE_CAP: u64 = 1_000_000;

/// An axis-aligned box `X = ∏ (a_i, b_i]` of dimension `k - 1`. Lattice
/// points of `s_q X` with some `h_i = 0` or `h_i = h_j` are skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationWindow {
    intervals: Vec<(BigRational, BigRational)>,
}

impl CorrelationWindow {
    pub fn new(intervals: Vec<(BigRational, BigRational)>) -> Result<Self, StatsError> {
        if intervals.is_empty() {
            return Err(StatsError::Window("window needs at least one interval".into()));
        }
        if let Some((a, b)) = intervals.iter().find(|(a, b)| a >= b) {
            return Err(StatsError::Window(format!("interval ({a}, {b}] is empty or reversed")));
        }
        Ok(CorrelationWindow { intervals })
    }

    /// `(0, len]` in every one of `dim` coordinates.
    pub fn cube(dim: usize, len: i64) -> Result<Self, StatsError> {
        Self::new(vec![(BigRational::zero(), BigRational::from_integer(len.into())); dim])
    }

    pub fn dimension(&self) -> usize {
        self.intervals.len()
    }

    /// The correlation order `k = dimension + 1`.
    pub fn k(&self) -> usize {
        self.intervals.len() + 1
    }

    pub fn intervals(&self) -> &[(BigRational, BigRational)] {
        &self.intervals
    }

    /// `vol(X) = ∏ (b_i - a_i)`.
    pub fn volume(&self) -> BigRational {
        self.intervals
            .iter()
            .fold(BigRational::one(), |acc, (a, b)| acc * (b - a))
    }

    /// Integer range `floor(s a) + 1 ..= floor(s b)` per coordinate.
    fn lattice_ranges(&self, s: &BigRational) -> Vec<(i64, i64)> {
        let bound = |x: &BigRational| {
            (s * x)
                .floor()
                .to_integer()
                .to_i64()
                .expect("lattice coordinates fit in i64")
        };
        self.intervals
            .iter()
            .map(|(a, b)| (bound(a) + 1, bound(b)))
            .collect()
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let num: BigInt = digits.parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Some(if negative { -r } else { r });
    }
    s.parse().ok()
}

/// `a:b[,a:b...]` with each endpoint an integer, `n/d` or a decimal.
impl FromStr for CorrelationWindow {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || StatsError::Window(format!("cannot read window {s:?}"));
        let intervals = s
            .split(',')
            .map(|part| {
                let (a, b) = part.split_once(':').ok_or_else(bad)?;
                Ok((parse_rational(a).ok_or_else(bad)?, parse_rational(b).ok_or_else(bad)?))
            })
            .collect::<Result<Vec<_>, StatsError>>()?;
        Self::new(intervals)
    }
}

impl fmt::Display for CorrelationWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.intervals.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `R_k(X, q)` and how it compares with `vol(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationReport {
    pub k: usize,
    /// The modulus the sum ran over.
    pub modulus: SquareFreeModulus,
    pub reduced_from: SquareFreeModulus,
    pub s_q: BigRational,
    pub omega_size: BigUint,
    pub value: BigRational,
    pub volume: BigRational,
    /// `value - volume`.
    pub deviation: BigRational,
    /// Lattice points summed over, after exclusions.
    pub lattice_points: u64,
    pub excluded_points: u64,
}

impl CorrelationReport {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    pub fn deviation_abs_f64(&self) -> f64 {
        self.deviation.abs().to_f64().unwrap_or(f64::NAN)
    }
}

fn excluded(h: &[i64]) -> bool {
    h.iter().enumerate().any(|(i, &x)| x == 0 || h[..i].contains(&x))
}

/// `R_k(X, q) = |Ω_q|^{-1} Σ_{h ∈ s_q X ∩ ℤ^{k-1}} N_k(h, q)` over the image
/// exactly as given (no permutation-prime reduction).
pub fn correlation_on(
    image: &CompositeImage,
    window: &CorrelationWindow,
    lattice_cap: u64,
) -> Result<CorrelationReport, StatsError> {
    let s_q = image.mean_spacing();
    if s_q.is_one() {
        return Err(StatsError::Degenerate);
    }
    let ranges = window.lattice_ranges(&s_q);
    let extent: Vec<u64> = ranges.iter().map(|&(lo, hi)| (hi - lo + 1).max(0) as u64).collect();
    let total = extent.iter().try_fold(1u64, |acc, &e| acc.checked_mul(e));
    let total = match total {
        Some(t) if t <= lattice_cap => t,
        _ => {
            return Err(StatsError::LatticeCap {
                cap: lattice_cap,
            })
        }
    };
    let dim = ranges.len();
    let point = |mut idx: u64| -> Vec<i64> {
        let mut h = vec![0i64; dim];
        for i in (0..dim).rev() {
            h[i] = ranges[i].0 + (idx % extent[i]) as i64;
            idx /= extent[i];
        }
        h
    };
    let (sum, kept) = (0..total)
        .into_par_iter()
        .map(|idx| {
            let h = point(idx);
            if excluded(&h) {
                (BigUint::zero(), 0u64)
            } else {
                (image.n_k(&h), 1)
            }
        })
        .reduce(|| (BigUint::zero(), 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let omega_size = image.omega_size();
    let value = BigRational::new(BigInt::from(sum), BigInt::from(omega_size.clone()));
    let volume = window.volume();
    Ok(CorrelationReport {
        k: window.k(),
        modulus: image.modulus().clone(),
        reduced_from: image.modulus().clone(),
        s_q,
        omega_size,
        deviation: &value - &volume,
        value,
        volume,
        lattice_points: kept,
        excluded_points: total - kept,
    })
}

/// `R_k(X, q)` computed on the non-permutation part `q₁` of `q`, which
/// leaves the value unchanged.
pub fn r_k_correlation(
    f: &IntPoly,
    modulus: &SquareFreeModulus,
    window: &CorrelationWindow,
    lattice_cap: u64,
) -> Result<CorrelationReport, StatsError> {
    let image = CompositeImage::new(f, modulus)?.reduced();
    if image.modulus().is_unit() {
        return Err(StatsError::Degenerate);
    }
    let mut report = correlation_on(&image, window, lattice_cap)?;
    report.reduced_from = modulus.clone();
    Ok(report)
}
