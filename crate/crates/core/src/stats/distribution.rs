use super::SpacingSeries;

/// Kolmogorov–Smirnov distance to the unit exponential law.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KsResult {
    /// `sup_t |F_emp(t) - (1 - e^{-t})|`.
    pub statistic: f64,
    pub n: usize,
}

fn exp_cdf(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        -(-t).exp_m1()
    }
}

/// KS distance for an arbitrary sample. The supremum is attained at a jump,
/// so both one-sided limits are checked at every sorted point.
pub fn ks_exponential_sample(sample: &[f64]) -> KsResult {
    let mut xs = sample.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let statistic = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = exp_cdf(x);
            ((i + 1) as f64 / n - f).max(f - i as f64 / n)
        })
        .fold(0.0, f64::max);
    KsResult {
        statistic,
        n: xs.len(),
    }
}

pub fn ks_exponential(series: &SpacingSeries) -> KsResult {
    ks_exponential_sample(&series.normalized_f64())
}

/// Uniform bins on `[lo, hi)` plus one overflow count for everything else.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<u64>,
    pub overflow: u64,
    pub total: u64,
}

/// One CSV row of a histogram.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HistogramRow {
    pub bin_left: f64,
    pub bin_right: f64,
    pub count: u64,
    pub density: f64,
    /// Mean exponential density over the bin, `(e^{-a} - e^{-b}) / (b - a)`.
    pub exp_reference: f64,
}

impl Histogram {
    pub fn from_values(values: &[f64], lo: f64, hi: f64, bins: usize) -> Self {
        assert!(bins > 0 && lo < hi, "histogram needs bins > 0 and lo < hi");
        let width = (hi - lo) / bins as f64;
        let mut counts = vec![0u64; bins];
        let mut overflow = 0;
        for &v in values {
            if v >= lo && v < hi {
                let b = (((v - lo) / width) as usize).min(bins - 1);
                counts[b] += 1;
            } else {
                overflow += 1;
            }
        }
        Histogram {
            lo,
            hi,
            counts,
            overflow,
            total: values.len() as u64,
        }
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo) / self.bins() as f64
    }

    pub fn edges(&self) -> Vec<f64> {
        (0..=self.bins())
            .map(|i| self.lo + i as f64 * self.width())
            .collect()
    }

    pub fn rows(&self) -> Vec<HistogramRow> {
        let w = self.width();
        let edges = self.edges();
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &count)| {
                let (a, b) = (edges[i], edges[i + 1]);
                HistogramRow {
                    bin_left: a,
                    bin_right: b,
                    count,
                    density: if self.total == 0 {
                        0.0
                    } else {
                        count as f64 / (self.total as f64 * w)
                    },
                    exp_reference: (exp_cdf(b) - exp_cdf(a)) / w,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_point_at_median() {
        let r = ks_exponential_sample(&[std::f64::consts::LN_2]);
        assert!((r.statistic - 0.5).abs() < 1e-15);
        assert_eq!(r.n, 1);
    }

    #[test]
    fn midpoint_quantiles() {
        // F^{-1}(u) = -ln(1-u) at u = 1/4, 3/4
        let xs = [-(0.75f64).ln(), -(0.25f64).ln()];
        let r = ks_exponential_sample(&xs);
        assert!((r.statistic - 0.25).abs() < 1e-12);
    }

    #[test]
    fn histogram_counts_and_reference() {
        let h = Histogram::from_values(&[0.0, 0.5, 1.0, 5.9, 6.0, 7.0], 0.0, 6.0, 6);
        assert_eq!(h.counts, vec![2, 1, 0, 0, 0, 1]);
        assert_eq!(h.overflow, 2);
        assert_eq!(h.counts.iter().sum::<u64>() + h.overflow, h.total);
        let rows = h.rows();
        assert_eq!(rows.len(), 6);
        assert!((rows[0].exp_reference - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!(h.edges().windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #[test]
        fn ks_ignores_order(
            (xs, shuffled) in prop::collection::vec(0.0f64..10.0, 1..60)
                .prop_flat_map(|xs| (Just(xs.clone()), Just(xs).prop_shuffle()))
        ) {
            let before = ks_exponential_sample(&xs).statistic;
            prop_assert_eq!(before, ks_exponential_sample(&shuffled).statistic);
            prop_assert!((0.0..=1.0).contains(&before));
        }
    }
}
