//! Corpus-level descriptive statistics: activity series, rank tables,
//! popularity densities, inter-event histograms, per-class local-variation
//! summaries with z-scores, and split-half correlations.
//!
//! Everything here is a pure fold over an immutable corpus. Reductions run
//! in a fixed order (or per-train in parallel with an order-preserving
//! collect), so outputs are deterministic.

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{ClassScheme, PopularityClass};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::lv::{local_variation, split_half_lv};
use crate::train::SpikeTrain;
use crate::util::{mean, sample_std, KahanSum};

/// Poisson baseline μ₀ for the z-score: the expected local variation of any
/// (possibly time-dependent) Poisson train.
pub const LV_POISSON_BASELINE: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HistogramKind {
    /// `mass[i]` is a density: probability per unit of the x-axis.
    Pdf,
    /// `mass[i]` is the cumulative probability at the bin's right edge.
    Cdf,
}

/// Binned distribution. For `Pdf` the densities integrate to 1; for `Cdf`
/// the masses are non-decreasing and terminate at 1. A histogram with
/// `n_samples == 0` is the flagged "empty" case and carries no bins.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub mass: Vec<f64>,
    pub kind: HistogramKind,
    pub n_samples: u64,
}

impl Histogram {
    fn empty(kind: HistogramKind) -> Self {
        Self {
            edges: Vec::new(),
            mass: Vec::new(),
            kind,
            n_samples: 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.n_samples == 0
    }

    pub fn n_bins(&self) -> usize {
        self.mass.len()
    }

    pub fn width(&self, bin: usize) -> f64 {
        self.edges[bin + 1] - self.edges[bin]
    }

    /// Probability carried by one bin (density × width for a PDF).
    pub fn bin_probability(&self, bin: usize) -> f64 {
        match self.kind {
            HistogramKind::Pdf => self.mass[bin] * self.width(bin),
            HistogramKind::Cdf => {
                if bin == 0 {
                    self.mass[0]
                } else {
                    self.mass[bin] - self.mass[bin - 1]
                }
            }
        }
    }

    /// Total mass: the integral of a PDF, or the terminal value of a CDF.
    /// 1 within rounding for any non-empty histogram.
    pub fn total_mass(&self) -> f64 {
        match self.kind {
            HistogramKind::Pdf => {
                let mut acc = KahanSum::new();
                for i in 0..self.n_bins() {
                    acc.add(self.mass[i] * self.width(i));
                }
                acc.value()
            }
            HistogramKind::Cdf => self.mass.last().copied().unwrap_or(0.0),
        }
    }
}

/// Histogram over pre-binned counts with the given edges.
fn histogram_from_counts(edges: Vec<f64>, counts: Vec<u64>, kind: HistogramKind) -> Histogram {
    let n_samples: u64 = counts.iter().sum();
    if n_samples == 0 {
        return Histogram::empty(kind);
    }
    let total = n_samples as f64;
    let mass = match kind {
        HistogramKind::Pdf => counts
            .iter()
            .enumerate()
            .map(|(i, &c)| c as f64 / (total * (edges[i + 1] - edges[i])))
            .collect(),
        HistogramKind::Cdf => {
            let mut acc = 0u64;
            counts
                .iter()
                .map(|&c| {
                    acc += c;
                    acc as f64 / total
                })
                .collect()
        }
    };
    Histogram {
        edges,
        mass,
        kind,
        n_samples,
    }
}

/// Event counts over consecutive bins covering the window exactly; each
/// event contributes its raw multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActivitySeries {
    pub start: u64,
    pub bin_width: u64,
    pub counts: Vec<u64>,
}

impl ActivitySeries {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Total tweets-per-bin style series over the corpus window. The last bin is
/// truncated by the window end when the width does not divide the span.
pub fn activity_series(corpus: &Corpus, bin_width: u64) -> Result<ActivitySeries> {
    if bin_width < 1 {
        return Err(Error::InvalidBinWidth);
    }
    let window = corpus.window();
    let n_bins = window.duration_secs().div_ceil(bin_width) as usize;
    let mut counts = vec![0u64; n_bins];
    for train in corpus.trains() {
        for (&t, &c) in train.times().iter().zip(train.counts()) {
            let bin = ((t - window.start) / bin_width) as usize;
            counts[bin] += u64::from(c);
        }
    }
    Ok(ActivitySeries {
        start: window.start,
        bin_width,
        counts,
    })
}

/// One row of the popularity rank table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZipfEntry {
    pub rank: usize,
    pub tag: String,
    pub p_raw: u64,
}

/// Tags ranked by descending popularity; ties break lexicographically by
/// tag, so the table is a deterministic permutation of the tag set.
pub fn zipf_table(corpus: &Corpus) -> Vec<ZipfEntry> {
    let mut rows: Vec<(&str, u64)> = corpus
        .trains()
        .map(|t| (t.tag(), t.p_raw()))
        .collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    rows.into_iter()
        .enumerate()
        .map(|(i, (tag, p_raw))| ZipfEntry {
            rank: i + 1,
            tag: tag.to_string(),
            p_raw,
        })
        .collect()
}

/// Fraction of table entries with popularity strictly below `threshold`.
pub fn share_with_p_below(table: &[ZipfEntry], threshold: u64) -> f64 {
    if table.is_empty() {
        return 0.0;
    }
    table.iter().filter(|e| e.p_raw < threshold).count() as f64 / table.len() as f64
}

/// Log-binned density of the popularity distribution P(p). Bin edges are
/// powers of `10^(1/bins_per_decade)` starting at 1.
pub fn popularity_pdf(corpus: &Corpus, bins_per_decade: u32) -> Result<Histogram> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if bins_per_decade < 1 {
        return Err(Error::InvalidBinWidth);
    }
    let max_p = corpus.trains().map(SpikeTrain::p_raw).max().unwrap_or(1);
    let mut edges = vec![1.0f64];
    let mut j = 1u32;
    while *edges.last().unwrap() <= max_p as f64 {
        edges.push(10f64.powf(f64::from(j) / f64::from(bins_per_decade)));
        j += 1;
    }
    let n_bins = edges.len() - 1;
    let mut counts = vec![0u64; n_bins];
    for train in corpus.trains() {
        let p = train.p_raw() as f64;
        let idx = edges.partition_point(|&e| e <= p) - 1;
        counts[idx.min(n_bins - 1)] += 1;
    }
    Ok(histogram_from_counts(edges, counts, HistogramKind::Pdf))
}

/// Pooled inter-event histogram over every class train with at least two
/// spikes, in linear bins of `bin_width` seconds anchored at 0.
///
/// `suppress_one_second` drops Δτ = 1 s samples before normalizing — a
/// display option mirroring plots that hide the one-second maximum; the
/// corpus data itself always retains them. A class with no train of two or
/// more spikes yields the flagged empty histogram.
pub fn interval_histogram(
    corpus: &Corpus,
    class: &PopularityClass,
    bin_width: u64,
    kind: HistogramKind,
    suppress_one_second: bool,
) -> Result<Histogram> {
    if bin_width < 1 {
        return Err(Error::InvalidBinWidth);
    }
    let mut pooled: Vec<u64> = Vec::new();
    for train in corpus.trains() {
        if !class.contains(train.p_raw()) || train.n_spikes() < 2 {
            continue;
        }
        pooled.extend(train.intervals()?);
    }
    if suppress_one_second {
        pooled.retain(|&d| d != 1);
    }
    let Some(&max_dt) = pooled.iter().max() else {
        return Ok(Histogram::empty(kind));
    };
    let n_bins = (max_dt / bin_width + 1) as usize;
    let mut counts = vec![0u64; n_bins];
    for &dt in &pooled {
        counts[(dt / bin_width) as usize] += 1;
    }
    let edges = (0..=n_bins).map(|i| (i as u64 * bin_width) as f64).collect();
    Ok(histogram_from_counts(edges, counts, kind))
}

/// Probability mass of same-second multiplicities c_h pooled over the class
/// (unit-width bins, so density equals probability).
pub fn multiplicity_distribution(corpus: &Corpus, class: &PopularityClass) -> Histogram {
    let mut counts_by_c: Vec<u64> = Vec::new();
    for train in corpus.trains() {
        if !class.contains(train.p_raw()) {
            continue;
        }
        for &c in train.counts() {
            let idx = (c - 1) as usize;
            if counts_by_c.len() <= idx {
                counts_by_c.resize(idx + 1, 0);
            }
            counts_by_c[idx] += 1;
        }
    }
    if counts_by_c.is_empty() {
        return Histogram::empty(HistogramKind::Pdf);
    }
    let edges = (1..=counts_by_c.len() + 1).map(|c| c as f64).collect();
    histogram_from_counts(edges, counts_by_c, HistogramKind::Pdf)
}

/// Per-train local variation row, the unit of the scatter table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LvRow {
    pub tag: String,
    pub p_raw: u64,
    pub n_spikes: usize,
    pub lv: f64,
}

/// Local variation of every train with at least three spikes, in tag order.
/// Shorter trains are excluded rather than assigned a sentinel.
pub fn lv_table(corpus: &Corpus) -> Vec<LvRow> {
    corpus
        .trains()
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|train| {
            local_variation(train).ok().map(|r| LvRow {
                tag: train.tag().to_string(),
                p_raw: train.p_raw(),
                n_spikes: r.n_spikes,
                lv: r.lv,
            })
        })
        .collect()
}

/// Density histogram of local-variation values on [0, 3].
pub fn lv_histogram(values: &[f64], bin_width: f64) -> Histogram {
    if values.is_empty() || !bin_width.is_finite() || bin_width <= 0.0 {
        return Histogram::empty(HistogramKind::Pdf);
    }
    let n_bins = (3.0 / bin_width).ceil() as usize;
    let mut counts = vec![0u64; n_bins];
    for &v in values {
        let idx = ((v / bin_width) as usize).min(n_bins - 1);
        counts[idx] += 1;
    }
    let edges = (0..=n_bins).map(|i| i as f64 * bin_width).collect();
    histogram_from_counts(edges, counts, HistogramKind::Pdf)
}

/// Per-class local-variation summary. `n` counts trains with a defined
/// statistic; `mean_p` averages popularity over every train in the class.
/// The z-score measures the deviation of the class mean from the Poisson
/// baseline in standard-error units: `z = (μ − μ₀)·√n / σ`. Fields are
/// undefined (`None`) where the sample is too small, never a crash.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassSummary {
    pub class: PopularityClass,
    /// Trains in the class regardless of length.
    pub n_trains: usize,
    /// Trains contributing a local variation (n_spikes >= 3).
    pub n: usize,
    pub mean_p: Option<f64>,
    pub mu_lv: Option<f64>,
    pub sigma_lv: Option<f64>,
    pub z: Option<f64>,
}

/// Unweighted per-class mean and sample deviation (n−1 denominator) of the
/// local variation, with the z-score against the Poisson baseline.
pub fn class_lv_summary(corpus: &Corpus, scheme: &ClassScheme) -> Vec<ClassSummary> {
    let rows = lv_table(corpus);
    scheme
        .classes()
        .iter()
        .map(|class| {
            let mut p_acc = KahanSum::new();
            let mut n_trains = 0usize;
            for train in corpus.trains() {
                if class.contains(train.p_raw()) {
                    n_trains += 1;
                    p_acc.add(train.p_raw() as f64);
                }
            }
            let lvs: Vec<f64> = rows
                .iter()
                .filter(|r| class.contains(r.p_raw))
                .map(|r| r.lv)
                .collect();
            let mu_lv = mean(&lvs);
            let sigma_lv = sample_std(&lvs);
            let z = match (mu_lv, sigma_lv) {
                (Some(mu), Some(sigma)) if sigma > 0.0 => {
                    Some((mu - LV_POISSON_BASELINE) * (lvs.len() as f64).sqrt() / sigma)
                }
                _ => None,
            };
            ClassSummary {
                class: class.clone(),
                n_trains,
                n: lvs.len(),
                mean_p: (n_trains > 0).then(|| p_acc.value() / n_trains as f64),
                mu_lv,
                sigma_lv,
                z,
            }
        })
        .collect()
}

/// Product-moment correlation coefficient. Errors on mismatched lengths,
/// fewer than two points, or zero variance in either argument.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::DegenerateCorrelation("need at least two points"));
    }
    let mx = mean(x).expect("non-empty");
    let my = mean(y).expect("non-empty");
    let (mut sxy, mut sxx, mut syy) = (KahanSum::new(), KahanSum::new(), KahanSum::new());
    for (&a, &b) in x.iter().zip(y) {
        let dx = a - mx;
        let dy = b - my;
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    let (sxy, sxx, syy) = (sxy.value(), sxx.value(), syy.value());
    if sxx <= 0.0 || syy <= 0.0 {
        return Err(Error::DegenerateCorrelation("zero variance"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// Split-half persistence of one class: Pearson correlation between the
/// local variations of each train's first and second halves.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitHalfSummary {
    pub class: PopularityClass,
    /// Mean popularity over the paired trains.
    pub mean_p: Option<f64>,
    pub n_pairs: usize,
    /// `None` flags classes with fewer than two pairs or degenerate inputs.
    pub r: Option<f64>,
}

/// Pairs `(Lv(first half), Lv(second half))` from every class train with at
/// least six spikes, correlated per class. Classes without two valid pairs,
/// or with zero variance in either half, are flagged with `r = None`.
pub fn split_half_correlation(corpus: &Corpus, scheme: &ClassScheme) -> Vec<SplitHalfSummary> {
    let trains: Vec<&SpikeTrain> = corpus.trains().collect();
    let pairs: Vec<(u64, f64, f64)> = trains
        .par_iter()
        .filter_map(|train| {
            split_half_lv(train)
                .ok()
                .map(|(a, b)| (train.p_raw(), a.lv, b.lv))
        })
        .collect();
    scheme
        .classes()
        .iter()
        .map(|class| {
            let class_pairs: Vec<&(u64, f64, f64)> = pairs
                .iter()
                .filter(|(p, _, _)| class.contains(*p))
                .collect();
            let first: Vec<f64> = class_pairs.iter().map(|(_, a, _)| *a).collect();
            let second: Vec<f64> = class_pairs.iter().map(|(_, _, b)| *b).collect();
            let mean_p = if class_pairs.is_empty() {
                None
            } else {
                Some(
                    class_pairs.iter().map(|(p, _, _)| *p as f64).sum::<f64>()
                        / class_pairs.len() as f64,
                )
            };
            SplitHalfSummary {
                class: class.clone(),
                mean_p,
                n_pairs: class_pairs.len(),
                r: pearson(&first, &second).ok(),
            }
        })
        .collect()
}
