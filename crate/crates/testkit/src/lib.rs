//! Independent statistical oracles for the test suites.
//!
//! Nothing in this crate is used by the library implementation: the point is
//! that these routines provide a second, naive route to the same quantities,
//! so the suites can compare the production path against them. Keep them
//! simple and obviously correct rather than fast.

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Naive two-pass local variation: materialize the interval vector, then sum
/// the squared normalized differences left to right with plain additions.
/// Returns `None` for fewer than three spikes.
pub fn naive_local_variation(times: &[f64]) -> Option<f64> {
    if times.len() < 3 {
        return None;
    }
    let intervals: Vec<f64> = times.windows(2).map(|w| w[1] - w[0]).collect();
    let mut sum = 0.0;
    for pair in intervals.windows(2) {
        let (prev, next) = (pair[0], pair[1]);
        sum += ((next - prev) / (next + prev)).powi(2);
    }
    Some(3.0 / (intervals.len() - 1) as f64 * sum)
}

/// Same oracle over integer-second times.
pub fn naive_local_variation_grid(times: &[u64]) -> Option<f64> {
    let as_f64: Vec<f64> = times.iter().map(|&t| t as f64).collect();
    naive_local_variation(&as_f64)
}

/// Two-sided Kolmogorov–Smirnov statistic of a sample against a continuous
/// CDF. Sorts a copy of the sample.
pub fn ks_statistic(sample: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut sorted = sample.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / n).abs());
        d = d.max(((i + 1) as f64 / n - f).abs());
    }
    d
}

/// Asymptotic Kolmogorov–Smirnov p-value with the Stephens small-sample
/// correction of the argument.
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    let sqrt_n = (n as f64).sqrt();
    let lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
    let mut sum = 0.0;
    for k in 1..=100 {
        let k = k as f64;
        let term = 2.0 * (-1.0f64).powi(k as i32 + 1) * (-2.0 * k * k * lambda * lambda).exp();
        sum += term;
        if term.abs() < 1e-12 {
            break;
        }
    }
    sum.clamp(0.0, 1.0)
}

/// Upper-tail chi-square p-value (survival function) at the given degrees of
/// freedom.
pub fn chi_square_pvalue(statistic: f64, dof: f64) -> f64 {
    let dist = ChiSquared::new(dof).expect("positive dof");
    1.0 - dist.cdf(statistic)
}

/// Mean-removed autocorrelation at the given lag.
pub fn autocorrelation(series: &[f64], lag: usize) -> f64 {
    let n = series.len();
    assert!(lag < n, "lag beyond series length");
    let mean = series.iter().sum::<f64>() / n as f64;
    let var: f64 = series.iter().map(|x| (x - mean).powi(2)).sum();
    if var == 0.0 {
        return 0.0;
    }
    let cov: f64 = (0..n - lag)
        .map(|i| (series[i] - mean) * (series[i + lag] - mean))
        .sum();
    cov / var
}

/// Lag (within `[lo, hi]`) maximizing the autocorrelation.
pub fn autocorrelation_argmax(series: &[f64], lo: usize, hi: usize) -> usize {
    (lo..=hi)
        .max_by(|&a, &b| {
            autocorrelation(series, a)
                .partial_cmp(&autocorrelation(series, b))
                .unwrap()
        })
        .expect("non-empty lag range")
}

/// Ordinary least-squares slope of y against x.
pub fn ols_slope(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

/// Simple reference Pearson correlation (no compensation).
pub fn naive_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let syy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    sxy / (sxx * syy).sqrt()
}

/// Rank of a sorted k-subset of `{0, .., n-1}` in colexicographic order;
/// bijective onto `0..C(n, k)`. Used to tabulate subset frequencies.
pub fn subset_rank(subset: &[usize]) -> u64 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &v)| binomial(v as u64, i as u64 + 1))
        .sum()
}

/// Binomial coefficient C(n, k) in u64 arithmetic (small arguments only).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
