//! Events and per-tag spike trains on the one-second grid.

use crate::error::{Error, Result};

/// Normalize a raw tag: strip one leading `#`, Unicode-lowercase, and reject
/// tags that are empty afterwards. No accent folding — accented variants of
/// a tag are distinct tags.
pub fn normalize_tag(raw: &str) -> Option<String> {
    let stripped = raw.strip_prefix('#').unwrap_or(raw);
    let folded = stripped.to_lowercase();
    if folded.is_empty() || folded.chars().all(char::is_whitespace) {
        None
    } else {
        Some(folded)
    }
}

/// One raw observation: an integer second and a normalized tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventRecord {
    pub time: u64,
    pub tag: String,
}

impl EventRecord {
    /// Build a record from a raw tag, normalizing it. Returns `None` when the
    /// tag is empty after normalization (a malformed record).
    pub fn new(time: u64, raw_tag: &str) -> Option<Self> {
        normalize_tag(raw_tag).map(|tag| Self { time, tag })
    }
}

/// Deduplicated spike train of one tag: strictly increasing seconds plus the
/// number of raw occurrences observed within each second.
///
/// `p_raw` (total occurrences) is the popularity used for classification;
/// `n_spikes` (distinct seconds) is the train length used by the local
/// variation and by null-model size matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpikeTrain {
    tag: String,
    times: Vec<u64>,
    counts: Vec<u32>,
    p_raw: u64,
}

impl SpikeTrain {
    /// Build from parallel `times`/`counts` vectors, validating the train
    /// invariants: strictly increasing times, every multiplicity at least 1.
    pub fn new(tag: impl Into<String>, times: Vec<u64>, counts: Vec<u32>) -> Result<Self> {
        if times.len() != counts.len() {
            return Err(Error::LengthMismatch {
                left: times.len(),
                right: counts.len(),
            });
        }
        if !times.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NonIncreasingTimes);
        }
        if counts.contains(&0) {
            return Err(Error::InvalidMultiplicity);
        }
        let p_raw = counts.iter().map(|&c| u64::from(c)).sum();
        Ok(Self {
            tag: tag.into(),
            times,
            counts,
            p_raw,
        })
    }

    /// Build from raw event seconds (unsorted, duplicates allowed); same-second
    /// occurrences collapse into one spike with a multiplicity.
    pub fn from_seconds(tag: impl Into<String>, mut seconds: Vec<u64>) -> Self {
        seconds.sort_unstable();
        let p_raw = seconds.len() as u64;
        let mut times = Vec::new();
        let mut counts: Vec<u32> = Vec::new();
        for s in seconds {
            match times.last() {
                Some(&last) if last == s => *counts.last_mut().unwrap() += 1,
                _ => {
                    times.push(s);
                    counts.push(1);
                }
            }
        }
        Self {
            tag: tag.into(),
            times,
            counts,
            p_raw,
        }
    }

    /// Quantize continuous event times to the one-second grid (floor) and
    /// collapse same-second occurrences. Times must be non-negative and finite.
    pub fn from_continuous(tag: impl Into<String>, times: &[f64]) -> Result<Self> {
        let mut seconds = Vec::with_capacity(times.len());
        for &t in times {
            if !t.is_finite() || t < 0.0 {
                return Err(Error::InvalidTimestamp(t));
            }
            seconds.push(t.floor() as u64);
        }
        Ok(Self::from_seconds(tag, seconds))
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    /// Distinct spike seconds, strictly increasing.
    pub fn times(&self) -> &[u64] {
        &self.times
    }

    /// Per-spike raw multiplicities (all at least 1).
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Total raw occurrences (popularity).
    pub fn p_raw(&self) -> u64 {
        self.p_raw
    }

    /// Number of distinct spikes.
    pub fn n_spikes(&self) -> usize {
        self.times.len()
    }

    /// Largest same-second multiplicity, or 0 for an empty train.
    pub fn max_multiplicity(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Inter-event intervals Δτ in seconds; all at least 1 on the integer
    /// grid. Errors when the train has fewer than two spikes.
    pub fn intervals(&self) -> Result<Vec<u64>> {
        if self.n_spikes() < 2 {
            return Err(Error::TrainTooShort {
                n_spikes: self.n_spikes(),
            });
        }
        Ok(self.times.windows(2).map(|w| w[1] - w[0]).collect())
    }
}
