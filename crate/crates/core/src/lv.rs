//! Local variation of a spike train and the Gamma-process shape relations.
//!
//! For a train of N spikes with inter-event intervals Δτ_2, ..., Δτ_N the
//! local variation is
//!
//! ```text
//! Lv = 3/(N-2) * Σ_{i=2}^{N-1} ((Δτ_{i+1} - Δτ_i) / (Δτ_{i+1} + Δτ_i))^2
//! ```
//!
//! Each squared ratio compares a forward delay with the preceding waiting
//! time, so the statistic detrends slow rate changes: it stays at 1 on
//! average for stationary *and* slowly-modulated Poisson trains, drops
//! toward 0 for regular trains, and rises toward 3 for bursty ones. For a
//! renewal process with Gamma-distributed intervals of shape κ the expected
//! value is `3/(2κ+1)`, which this module exposes in both directions.
//!
//! Sums are accumulated with compensated summation so results do not depend
//! on accumulation order even for very long trains.

use crate::error::{Error, Result};
use crate::train::SpikeTrain;
use crate::util::KahanSum;

/// Local variation of one train, together with the sample sizes that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LvResult {
    /// The statistic, always within [0, 3].
    pub lv: f64,
    /// Number of spikes N.
    pub n_spikes: usize,
    /// Number of summed terms, N − 2.
    pub n_terms: usize,
}

/// Parameters of a Gamma renewal process: intervals have density
/// `(ξκ)^κ Δτ^(κ-1) e^(-ξκΔτ) / Γ(κ)`, i.e. shape κ and mean 1/ξ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaShape {
    pub kappa: f64,
    pub xi: f64,
}

impl GammaShape {
    pub fn new(kappa: f64, xi: f64) -> Result<Self> {
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(Error::NonPositiveShape(kappa));
        }
        if !xi.is_finite() || xi <= 0.0 {
            return Err(Error::InvalidRate(xi));
        }
        Ok(Self { kappa, xi })
    }

    /// Expected local variation of this process.
    pub fn expected_lv(&self) -> f64 {
        3.0 / (2.0 * self.kappa + 1.0)
    }
}

/// Streaming accumulator over consecutive interval pairs.
fn lv_over_intervals(intervals: impl IntoIterator<Item = f64>, n_spikes: usize) -> LvResult {
    let mut acc = KahanSum::new();
    let mut n_terms = 0usize;
    let mut prev: Option<f64> = None;
    for next in intervals {
        if let Some(p) = prev {
            let ratio = (next - p) / (next + p);
            acc.add(ratio * ratio);
            n_terms += 1;
        }
        prev = Some(next);
    }
    debug_assert_eq!(n_terms, n_spikes - 2);
    LvResult {
        lv: 3.0 / n_terms as f64 * acc.value(),
        n_spikes,
        n_terms,
    }
}

/// Local variation of a spike train. Errors for fewer than three spikes,
/// where the statistic is undefined; callers decide whether to skip or
/// report such trains.
pub fn local_variation(train: &SpikeTrain) -> Result<LvResult> {
    let n = train.n_spikes();
    if n < 3 {
        return Err(Error::UndefinedLocalVariation { n_spikes: n });
    }
    let times = train.times();
    Ok(lv_over_intervals(
        times.windows(2).map(|w| (w[1] - w[0]) as f64),
        n,
    ))
}

/// Local variation of strictly increasing continuous times. Used for
/// unquantized generator output, where no one-second grid applies.
pub fn local_variation_of_times(times: &[f64]) -> Result<LvResult> {
    let n = times.len();
    if n < 3 {
        return Err(Error::UndefinedLocalVariation { n_spikes: n });
    }
    if !times.windows(2).all(|w| w[0] < w[1] && w[1].is_finite()) {
        return Err(Error::NonIncreasingTimes);
    }
    Ok(lv_over_intervals(times.windows(2).map(|w| w[1] - w[0]), n))
}

/// Local variation computed directly from a sequence of positive intervals
/// (a train of `intervals.len() + 1` spikes). Preferred for renewal-process
/// gap sequences, where tiny gaps would vanish in a cumulative time vector.
pub fn local_variation_of_intervals(intervals: &[f64]) -> Result<LvResult> {
    let n = intervals.len() + 1;
    if n < 3 {
        return Err(Error::UndefinedLocalVariation { n_spikes: n });
    }
    if !intervals.iter().all(|&d| d > 0.0 && d.is_finite()) {
        return Err(Error::NonIncreasingTimes);
    }
    Ok(lv_over_intervals(intervals.iter().copied(), n))
}

/// Index of the first spike of the second half: the first half takes the
/// first ⌈N/2⌉ spikes, the second half the remainder.
pub fn split_point(n_spikes: usize) -> usize {
    n_spikes.div_ceil(2)
}

/// Local variation of each half of the train, computed independently (the
/// interval across the split is not used by either half).
///
/// Requires at least six spikes so each half has the three spikes the
/// statistic needs.
pub fn split_half_lv(train: &SpikeTrain) -> Result<(LvResult, LvResult)> {
    let n = train.n_spikes();
    if n < 6 {
        return Err(Error::TooShortToSplit { n_spikes: n });
    }
    let mid = split_point(n);
    let half = |times: &[u64]| {
        lv_over_intervals(times.windows(2).map(|w| (w[1] - w[0]) as f64), times.len())
    };
    Ok((half(&train.times()[..mid]), half(&train.times()[mid..])))
}

/// Expected local variation of a Gamma renewal process with shape κ:
/// `3/(2κ+1)`.
pub fn expected_lv_gamma(kappa: f64) -> Result<f64> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::NonPositiveShape(kappa));
    }
    Ok(3.0 / (2.0 * kappa + 1.0))
}

/// Invert the shape relation: the κ whose Gamma renewal process has the
/// given expected local variation, `κ = (3/Lv − 1)/2`.
///
/// Errors outside (0, 3); exactly 3 is reported as a degenerate shape since
/// it corresponds to κ = 0.
pub fn shape_from_lv(lv: f64) -> Result<f64> {
    if !lv.is_finite() || lv <= 0.0 || lv > 3.0 {
        return Err(Error::LvOutOfRange(lv));
    }
    if lv == 3.0 {
        return Err(Error::DegenerateShape(lv));
    }
    Ok((3.0 / lv - 1.0) / 2.0)
}
