//! Ground-truth point-process generators used as analytic oracles.
//!
//! All generators emit strictly increasing continuous times inside a window
//! `[t0, t1)` and are pure functions of their parameters and a seed.
//! Quantization to the one-second grid is opt-in via
//! [`SpikeTrain::from_continuous`](crate::train::SpikeTrain::from_continuous):
//! the analytic oracles run unquantized to avoid grid bias, while null-model
//! comparisons run quantized to mirror ingested data.

use crate::error::{Error, Result};
use crate::rng::CounterRng;

/// Generators refuse windows whose expected event count exceeds this bound.
pub const MAX_EXPECTED_EVENTS: f64 = 1e8;

/// A time-dependent firing rate with a declared upper bound.
pub trait Rate {
    /// ξ(t) ≥ 0, required to stay at or below `max_rate` over the window.
    fn rate(&self, t: f64) -> f64;
    /// Declared bound ξ_max used as the thinning candidate rate.
    fn max_rate(&self) -> f64;
}

/// Constant rate; makes thinning degenerate to a homogeneous process.
#[derive(Debug, Clone, Copy)]
pub struct ConstantRate(pub f64);

impl Rate for ConstantRate {
    fn rate(&self, _t: f64) -> f64 {
        self.0
    }
    fn max_rate(&self) -> f64 {
        self.0
    }
}

/// Sinusoidally modulated rate: `mean * (1 + amplitude * sin(2π t / period))`
/// with relative amplitude in [0, 1]; models a circadian cycle.
#[derive(Debug, Clone, Copy)]
pub struct SinusoidalRate {
    pub mean: f64,
    pub amplitude: f64,
    pub period: f64,
}

impl Rate for SinusoidalRate {
    fn rate(&self, t: f64) -> f64 {
        self.mean * (1.0 + self.amplitude * (2.0 * std::f64::consts::PI * t / self.period).sin())
    }
    fn max_rate(&self) -> f64 {
        self.mean * (1.0 + self.amplitude)
    }
}

fn check_window(window: (f64, f64)) -> Result<f64> {
    let (t0, t1) = window;
    if !t0.is_finite() || !t1.is_finite() || t0 >= t1 {
        return Err(Error::InvalidGenWindow(t0, t1));
    }
    Ok(t1 - t0)
}

fn check_rate(xi: f64) -> Result<()> {
    if !xi.is_finite() || xi <= 0.0 {
        return Err(Error::InvalidRate(xi));
    }
    Ok(())
}

fn check_budget(expected: f64) -> Result<()> {
    if expected > MAX_EXPECTED_EVENTS {
        return Err(Error::ResourceGuard {
            expected,
            guard: MAX_EXPECTED_EVENTS as u64,
        });
    }
    Ok(())
}

/// Stationary Poisson process: i.i.d. exponential gaps at rate ξ.
pub fn gen_poisson(xi: f64, window: (f64, f64), seed: u64) -> Result<Vec<f64>> {
    check_rate(xi)?;
    let span = check_window(window)?;
    check_budget(xi * span)?;
    let mut rng = CounterRng::new(seed);
    let mut times = Vec::with_capacity((xi * span * 1.1) as usize + 4);
    let mut t = window.0 + rng.exponential(xi);
    while t < window.1 {
        times.push(t);
        t += rng.exponential(xi);
    }
    Ok(times)
}

/// Stationary Poisson train with exactly `n` spikes (cumulative exponential
/// gaps from 0, no window truncation).
pub fn gen_poisson_n(xi: f64, n: usize, seed: u64) -> Result<Vec<f64>> {
    gen_gamma_renewal_n(xi, 1.0, n, seed)
}

/// Time-dependent Poisson process by thinning (Lewis–Shedler): candidates
/// arrive at the declared maximum rate and are kept with probability
/// ξ(t)/ξ_max. Errors if the rate function escapes the declared bound or
/// goes negative during generation.
pub fn gen_nonstationary_poisson<R: Rate>(
    rate: &R,
    window: (f64, f64),
    seed: u64,
) -> Result<Vec<f64>> {
    let xi_max = rate.max_rate();
    check_rate(xi_max)?;
    let span = check_window(window)?;
    check_budget(xi_max * span)?;
    let mut rng = CounterRng::new(seed);
    let mut times = Vec::new();
    let mut t = window.0 + rng.exponential(xi_max);
    while t < window.1 {
        let xi_t = rate.rate(t);
        // tolerate only rounding-level overshoot of the declared bound
        if xi_t > xi_max * (1.0 + 1e-12) || xi_t < 0.0 || !xi_t.is_finite() {
            return Err(Error::RateAboveBound {
                rate: xi_t,
                bound: xi_max,
                t,
            });
        }
        if rng.next_f64() < xi_t / xi_max {
            times.push(t);
        }
        t += rng.exponential(xi_max);
    }
    Ok(times)
}

/// Gamma renewal process: i.i.d. gaps with shape κ and mean 1/ξ, i.e. the
/// density `(ξκ)^κ Δτ^(κ-1) e^(-ξκΔτ) / Γ(κ)`. κ = 1 recovers the
/// exponential; κ < 1 is the bursty regime.
pub fn gen_gamma_renewal(xi: f64, kappa: f64, window: (f64, f64), seed: u64) -> Result<Vec<f64>> {
    check_rate(xi)?;
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::NonPositiveShape(kappa));
    }
    let span = check_window(window)?;
    check_budget(xi * span)?;
    let gamma_rate = xi * kappa;
    let mut rng = CounterRng::new(seed);
    let mut times = Vec::with_capacity((xi * span * 1.1) as usize + 4);
    let mut t = window.0 + rng.gamma(kappa, gamma_rate);
    while t < window.1 {
        times.push(t);
        t += rng.gamma(kappa, gamma_rate);
    }
    Ok(times)
}

/// Exactly `n` i.i.d. Gamma inter-event gaps (shape κ, mean 1/ξ).
///
/// In the bursty regime κ < 1 individual gaps can fall below the floating-
/// point resolution of the accumulated time, so interval-level analyses
/// should consume the gaps themselves rather than differences of the
/// cumulative times.
pub fn gen_gamma_gaps(xi: f64, kappa: f64, n: usize, seed: u64) -> Result<Vec<f64>> {
    check_rate(xi)?;
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(Error::NonPositiveShape(kappa));
    }
    check_budget(n as f64)?;
    let gamma_rate = xi * kappa;
    let mut rng = CounterRng::new(seed);
    Ok((0..n).map(|_| rng.gamma(kappa, gamma_rate)).collect())
}

/// Gamma renewal train with exactly `n` spikes, starting from 0.
pub fn gen_gamma_renewal_n(xi: f64, kappa: f64, n: usize, seed: u64) -> Result<Vec<f64>> {
    let gaps = gen_gamma_gaps(xi, kappa, n, seed)?;
    let mut t = 0.0;
    Ok(gaps
        .into_iter()
        .map(|g| {
            t += g;
            t
        })
        .collect())
}

/// Discrete bounded power law `P(k) ∝ k^(-alpha)` on `[kmin, kmax]`, sampled
/// by inversion of the tabulated CDF. Exposes its exact weights so tests can
/// compare observed fractions against generator ground truth.
#[derive(Debug, Clone)]
pub struct PowerLawSizes {
    kmin: u64,
    cdf: Vec<f64>,
    total: f64,
}

impl PowerLawSizes {
    pub fn new(alpha: f64, kmin: u64, kmax: u64) -> Result<Self> {
        if kmin < 1 || kmin > kmax || !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidScheme(format!(
                "power law needs 1 <= kmin <= kmax and alpha > 0, got alpha={alpha}, [{kmin}, {kmax}]"
            )));
        }
        let mut cdf = Vec::with_capacity((kmax - kmin + 1) as usize);
        let mut acc = 0.0;
        for k in kmin..=kmax {
            acc += (k as f64).powf(-alpha);
            cdf.push(acc);
        }
        Ok(Self {
            kmin,
            total: acc,
            cdf,
        })
    }

    pub fn sample(&self, rng: &mut CounterRng) -> u64 {
        let u = rng.next_f64() * self.total;
        let idx = self.cdf.partition_point(|&c| c <= u);
        self.kmin + idx.min(self.cdf.len() - 1) as u64
    }

    /// Exact probability that a draw is strictly below `k`.
    pub fn share_below(&self, k: u64) -> f64 {
        if k <= self.kmin {
            return 0.0;
        }
        let idx = ((k - self.kmin) as usize).min(self.cdf.len());
        self.cdf[idx - 1] / self.total
    }
}
