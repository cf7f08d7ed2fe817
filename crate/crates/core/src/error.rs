//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by train construction, statistics, and generators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("train too short for intervals: {n_spikes} spikes (need at least 2)")]
    TrainTooShort { n_spikes: usize },

    #[error("undefined local variation: {n_spikes} spikes (need at least 3)")]
    UndefinedLocalVariation { n_spikes: usize },

    #[error("too short to split: {n_spikes} spikes (need at least 6)")]
    TooShortToSplit { n_spikes: usize },

    #[error("times must be strictly increasing")]
    NonIncreasingTimes,

    #[error("negative or non-finite timestamp: {0}")]
    InvalidTimestamp(f64),

    #[error("spike multiplicity must be at least 1")]
    InvalidMultiplicity,

    #[error("shape parameter must be positive, got {0}")]
    NonPositiveShape(f64),

    #[error("degenerate shape: local variation {0} corresponds to a non-positive shape")]
    DegenerateShape(f64),

    #[error("local variation outside (0, 3]: {0}")]
    LvOutOfRange(f64),

    #[error("popularity must be at least 1, got {0}")]
    InvalidPopularity(u64),

    #[error("invalid class scheme: {0}")]
    InvalidScheme(String),

    #[error("no class covers popularity {0}")]
    Unclassifiable(u64),

    #[error("invalid window: start {start} must be below end {end}")]
    InvalidWindow { start: u64, end: u64 },

    #[error("spike at {time} outside window [{start}, {end})")]
    OutsideWindow { time: u64, start: u64, end: u64 },

    #[error("duplicate tag in corpus: {0}")]
    DuplicateTag(String),

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("popularity exceeds merged support: requested {requested}, support {support}")]
    PopularityExceedsSupport { requested: usize, support: usize },

    #[error("degenerate correlation input: {0}")]
    DegenerateCorrelation(&'static str),

    #[error("correlation inputs differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("bin width must be at least 1")]
    InvalidBinWidth,

    #[error("rate must be positive and finite, got {0}")]
    InvalidRate(f64),

    #[error("rate {rate} exceeds declared bound {bound} at t={t}")]
    RateAboveBound { rate: f64, bound: f64, t: f64 },

    #[error("expected event count {expected:.0} exceeds resource guard of {guard}")]
    ResourceGuard { expected: f64, guard: u64 },

    #[error("invalid generation window [{0}, {1})")]
    InvalidGenWindow(f64, f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
