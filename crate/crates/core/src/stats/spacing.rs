use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::ToPrimitive;

use super::{Histogram, StatsError};
use crate::composite::{CompositeImage, ImageBits, SquareFreeModulus};
use crate::polyarith::IntPoly;

/// Consecutive gaps of `Ω_q` on `ℤ/qℤ`, the last one wrapping around:
/// `x_1 - x_n + q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpacingSeries {
    modulus: SquareFreeModulus,
    reduced_from: SquareFreeModulus,
    element_count: u64,
    raw_gaps: Vec<u64>,
}

impl SpacingSeries {
    /// Gaps of an enumerated image. Needs at least two elements.
    pub fn from_bits(modulus: SquareFreeModulus, bits: &ImageBits) -> Result<Self, StatsError> {
        let q = bits.q();
        if bits.count() == q {
            return Err(StatsError::Degenerate);
        }
        if bits.count() < 2 {
            return Err(StatsError::TooFewPoints { have: bits.count(), need: 2 });
        }
        let mut raw_gaps = Vec::with_capacity(bits.count() as usize);
        let mut it = bits.iter();
        let first = it.next().expect("nonempty");
        let mut prev = first;
        for t in it {
            raw_gaps.push(t - prev);
            prev = t;
        }
        raw_gaps.push(first + q - prev);
        Ok(SpacingSeries {
            reduced_from: modulus.clone(),
            modulus,
            element_count: bits.count(),
            raw_gaps,
        })
    }

    fn with_original(mut self, original: SquareFreeModulus) -> Self {
        self.reduced_from = original;
        self
    }

    /// The modulus the gaps live on (after permutation-prime reduction).
    pub fn modulus(&self) -> &SquareFreeModulus {
        &self.modulus
    }

    /// The modulus originally requested.
    pub fn reduced_from(&self) -> &SquareFreeModulus {
        &self.reduced_from
    }

    pub fn q(&self) -> u64 {
        self.modulus.q_u64().expect("enumerated moduli fit in u64")
    }

    pub fn element_count(&self) -> u64 {
        self.element_count
    }

    pub fn len(&self) -> usize {
        self.raw_gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw_gaps.is_empty()
    }

    pub fn raw_gaps(&self) -> &[u64] {
        &self.raw_gaps
    }

    /// `s_q = q / |Ω_q|`.
    pub fn mean_spacing(&self) -> Ratio<u64> {
        Ratio::new(self.q(), self.element_count)
    }

    /// `gap / s_q`, exact.
    pub fn normalized(&self, i: usize) -> Ratio<u64> {
        let (g, n, q) = (self.raw_gaps[i] as u128, self.element_count as u128, self.q() as u128);
        let r = Ratio::new(g * n, q);
        Ratio::new_raw(*r.numer() as u64, *r.denom() as u64)
    }

    pub fn normalized_all(&self) -> Vec<Ratio<u64>> {
        (0..self.len()).map(|i| self.normalized(i)).collect()
    }

    /// Normalized gaps rounded (half-even) to the nearest `f64`.
    pub fn normalized_f64(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| self.normalized(i).to_f64().expect("finite"))
            .collect()
    }

    /// `Σ normalized = |Ω_q|`, computed exactly.
    pub fn normalized_sum(&self) -> BigRational {
        let total: BigUint = self.raw_gaps.iter().map(|&g| BigUint::from(g)).sum();
        BigRational::new(
            BigInt::from(total) * BigInt::from(self.element_count),
            BigInt::from(self.q()),
        )
    }

    pub fn histogram(&self, lo: f64, hi: f64, bins: usize) -> Histogram {
        Histogram::from_values(&self.normalized_f64(), lo, hi, bins)
    }
}

/// Enumerate `Ω_{q₁}` and return its gaps; `q₁` drops the primes where `f`
/// permutes residues (which only repeat the pattern periodically).
pub fn spacings(
    f: &IntPoly,
    modulus: &SquareFreeModulus,
    cap_bits: u64,
) -> Result<SpacingSeries, StatsError> {
    let image = CompositeImage::new(f, modulus)?.reduced();
    if image.modulus().is_unit() {
        return Err(StatsError::Degenerate);
    }
    let bits = image.enumerate(cap_bits)?;
    Ok(SpacingSeries::from_bits(image.modulus().clone(), &bits)?.with_original(modulus.clone()))
}

/// Fraction of gaps exactly equal to `h`.
pub fn gap_frequency(series: &SpacingSeries, h: u64) -> Ratio<u64> {
    let hits = series.raw_gaps.iter().filter(|&&g| g == h).count() as u64;
    Ratio::new(hits, series.len() as u64)
}

/// `k` cyclically consecutive normalized gaps, with lag correlations.
#[derive(Clone, Debug)]
pub struct JointSpacings<'a> {
    series: &'a SpacingSeries,
    k: usize,
    /// One histogram per tuple coordinate.
    pub marginals: Vec<Histogram>,
    /// Pearson correlation between gaps `i` and `i + j`, for `j = 1..k`;
    /// index 0 is lag 1.
    pub lag_correlations: Vec<f64>,
}

impl JointSpacings<'_> {
    pub fn k(&self) -> usize {
        self.k
    }

    /// `(g_i, g_{i+1}, ..., g_{i+k-1})` for every `i`, indices mod `n`.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<Ratio<u64>>> + '_ {
        let n = self.series.len();
        (0..n).map(move |i| (0..self.k).map(|j| self.series.normalized((i + j) % n)).collect())
    }
}

/// Exact lag-`j` correlation of the gap sequence, then rounded. With
/// `Σ g = q` the normalization cancels:
/// `(n Σ g_i g_{i+j} - q²) / (n Σ g_i² - q²)`.
pub fn lag_correlation(series: &SpacingSeries, lag: usize) -> f64 {
    let g = &series.raw_gaps;
    let n = g.len();
    let q = BigInt::from(series.q());
    let cross: u128 = (0..n).map(|i| g[i] as u128 * g[(i + lag) % n] as u128).sum();
    let square: u128 = g.iter().map(|&x| x as u128 * x as u128).sum();
    let nn = BigInt::from(n);
    let num = &nn * BigInt::from(cross) - &q * &q;
    let den = &nn * BigInt::from(square) - &q * &q;
    if den == BigInt::from(0) {
        return 0.0;
    }
    BigRational::new(num, den).to_f64().unwrap_or(f64::NAN)
}

pub fn adjacent_correlation(series: &SpacingSeries) -> f64 {
    lag_correlation(series, 1)
}

pub fn joint_consecutive(
    series: &SpacingSeries,
    k: usize,
    bins: usize,
) -> Result<JointSpacings<'_>, StatsError> {
    if k == 0 || series.len() < k {
        return Err(StatsError::TooFewPoints {
            have: series.len() as u64,
            need: k.max(1) as u64,
        });
    }
    let values = series.normalized_f64();
    let n = values.len();
    let marginals = (0..k)
        .map(|j| {
            let column: Vec<f64> = (0..n).map(|i| values[(i + j) % n]).collect();
            Histogram::from_values(&column, 0.0, super::DEFAULT_HIST_MAX, bins)
        })
        .collect();
    let lag_correlations = (1..k).map(|j| lag_correlation(series, j)).collect();
    Ok(JointSpacings {
        series,
        k,
        marginals,
        lag_correlations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::DEFAULT_CAP_BITS;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn modulus(q: u64) -> SquareFreeModulus {
        SquareFreeModulus::from_integer(q).unwrap()
    }

    fn squares_mod_7() -> SpacingSeries {
        spacings(&ip(&[0, 0, 1]), &modulus(7), DEFAULT_CAP_BITS).unwrap()
    }

    #[test]
    fn squares_mod_seven() {
        let s = squares_mod_7();
        assert_eq!(s.raw_gaps(), &[1, 1, 2, 3]);
        let expect: Vec<Ratio<u64>> = [4, 4, 8, 12].iter().map(|&n| Ratio::new(n, 7)).collect();
        assert_eq!(s.normalized_all(), expect);
        assert_eq!(s.normalized_sum(), BigRational::from_integer(4.into()));
        assert_eq!(gap_frequency(&s, 1), Ratio::new(1, 2));
        assert_eq!(gap_frequency(&s, 5), Ratio::from_integer(0));
    }

    #[test]
    fn gaps_sum_to_modulus() {
        let s = spacings(&ip(&[0, 0, 1]), &modulus(105), DEFAULT_CAP_BITS).unwrap();
        assert_eq!(s.len(), 24);
        assert_eq!(s.raw_gaps().iter().sum::<u64>(), 105);
        let total: Ratio<u64> = (1..=105).map(|h| gap_frequency(&s, h)).sum();
        assert_eq!(total, Ratio::from_integer(1));
    }

    #[test]
    fn permutation_primes_are_dropped() {
        let s = spacings(&ip(&[0, 0, 0, 1]), &modulus(105), DEFAULT_CAP_BITS).unwrap();
        assert_eq!(s.modulus().primes(), &[7]);
        assert_eq!(s.reduced_from().q_u64(), Some(105));
        assert!(matches!(
            spacings(&ip(&[0, 1]), &modulus(15), DEFAULT_CAP_BITS),
            Err(StatsError::Degenerate)
        ));
    }

    #[test]
    fn consecutive_pairs() {
        let s = squares_mod_7();
        let joint = joint_consecutive(&s, 2, 10).unwrap();
        let r = |n| Ratio::new(n, 7);
        let tuples: Vec<_> = joint.tuples().collect();
        assert_eq!(
            tuples,
            vec![
                vec![r(4), r(4)],
                vec![r(4), r(8)],
                vec![r(8), r(12)],
                vec![r(12), r(4)]
            ]
        );
        let single: Vec<_> = joint_consecutive(&s, 1, 10).unwrap().tuples().flatten().collect();
        assert_eq!(single, s.normalized_all());
        assert!(joint_consecutive(&s, 5, 10).is_err());
    }

    #[test]
    fn lag_correlation_by_hand() {
        // gaps 1,1,2,3: mean 7/4, Σg² = 15, Σ g_i g_{i+1} = 1+2+6+3 = 12
        // (4·12 - 49) / (4·15 - 49) = -1/11
        let c = adjacent_correlation(&squares_mod_7());
        assert!((c + 1.0 / 11.0).abs() < 1e-15);
    }
}
