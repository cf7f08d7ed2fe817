//! Corpus assembly: fold raw events into per-tag spike trains.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::train::{normalize_tag, SpikeTrain};

/// Half-open observation window `[start, end)` in integer seconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub start: u64,
    pub end: u64,
}

impl Window {
    pub fn new(start: u64, end: u64) -> Result<Self> {
        if start >= end {
            return Err(Error::InvalidWindow { start, end });
        }
        Ok(Self { start, end })
    }

    pub fn contains(&self, t: u64) -> bool {
        self.start <= t && t < self.end
    }

    pub fn duration_secs(&self) -> u64 {
        self.end - self.start
    }
}

/// Counters from one ingestion pass.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    /// Raw in-window occurrences folded into trains (sums all multiplicities).
    pub accepted: u64,
    /// Records skipped because the tag was empty after normalization, plus
    /// any parse rejects the caller adds.
    pub rejected: u64,
    /// Well-formed records dropped for lying outside the window.
    pub out_of_window: u64,
}

/// An immutable set of spike trains sharing one observation window.
///
/// Trains are keyed by normalized tag in a sorted map, so every iteration
/// order (and everything derived from it) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    trains: BTreeMap<String, SpikeTrain>,
    window: Window,
}

impl Corpus {
    /// Assemble a corpus from prebuilt trains, checking that tags are unique
    /// and all spikes lie inside the window.
    pub fn from_trains(trains: Vec<SpikeTrain>, window: Window) -> Result<Self> {
        let mut map = BTreeMap::new();
        for train in trains {
            for &t in train.times() {
                if !window.contains(t) {
                    return Err(Error::OutsideWindow {
                        time: t,
                        start: window.start,
                        end: window.end,
                    });
                }
            }
            if map.contains_key(train.tag()) {
                return Err(Error::DuplicateTag(train.tag().to_string()));
            }
            map.insert(train.tag().to_string(), train);
        }
        Ok(Self {
            trains: map,
            window,
        })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn len(&self) -> usize {
        self.trains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trains.is_empty()
    }

    pub fn get(&self, tag: &str) -> Option<&SpikeTrain> {
        self.trains.get(tag)
    }

    /// Trains in ascending tag order.
    pub fn trains(&self) -> impl Iterator<Item = &SpikeTrain> {
        self.trains.values()
    }

    /// Total raw occurrences across the corpus (Σ p_raw).
    pub fn total_events(&self) -> u64 {
        self.trains.values().map(SpikeTrain::p_raw).sum()
    }

    /// Total distinct spikes across the corpus (Σ n_spikes).
    pub fn total_spikes(&self) -> u64 {
        self.trains.values().map(|t| t.n_spikes() as u64).sum()
    }
}

/// Fold raw `(second, raw_tag)` records into a corpus.
///
/// Records may arrive in any order. Tags are normalized; records whose tag is
/// empty after normalization are rejected, and well-formed records outside
/// the window are dropped — both are counted in the report. Same-second
/// occurrences of one tag collapse into a single spike with a multiplicity.
/// An empty input yields an empty corpus, not an error.
pub fn ingest_events<I, S>(records: I, window: Window) -> (Corpus, IngestReport)
where
    I: IntoIterator<Item = (u64, S)>,
    S: AsRef<str>,
{
    let mut report = IngestReport::default();
    let mut buckets: BTreeMap<String, Vec<u64>> = BTreeMap::new();
    for (time, raw_tag) in records {
        let Some(tag) = normalize_tag(raw_tag.as_ref()) else {
            report.rejected += 1;
            continue;
        };
        if !window.contains(time) {
            report.out_of_window += 1;
            continue;
        }
        report.accepted += 1;
        buckets.entry(tag).or_default().push(time);
    }
    let trains = buckets
        .into_iter()
        .map(|(tag, seconds)| (tag.clone(), SpikeTrain::from_seconds(tag, seconds)))
        .collect();
    (
        Corpus {
            trains,
            window,
        },
        report,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn window() -> Window {
        Window::new(0, 1_000_000).unwrap()
    }

    #[test]
    fn dedup_by_definition() {
        let (corpus, report) = ingest_events(
            vec![(100u64, "a"), (100, "a"), (105, "a")],
            window(),
        );
        let train = corpus.get("a").unwrap();
        assert_eq!(train.times(), &[100, 105]);
        assert_eq!(train.counts(), &[2, 1]);
        assert_eq!(train.p_raw(), 3);
        assert_eq!(train.n_spikes(), 2);
        assert_eq!(report.accepted, 3);
        assert_eq!(report.rejected, 0);
    }

    #[test]
    fn normalization_collapses_variants() {
        let (corpus, _) = ingest_events(vec![(100u64, "A"), (100, "#a")], window());
        assert_eq!(corpus.len(), 1);
        let train = corpus.get("a").unwrap();
        assert_eq!(train.times(), &[100]);
        assert_eq!(train.counts(), &[2]);
    }

    #[test]
    fn heavy_same_second_multiplicity_is_preserved() {
        // Mirrors the most extreme observed same-second burst: 40 occurrences.
        let records: Vec<(u64, &str)> = std::iter::repeat_n((500u64, "hot"), 40).collect();
        let (corpus, _) = ingest_events(records, window());
        assert_eq!(corpus.get("hot").unwrap().max_multiplicity(), 40);
    }

    #[test]
    fn out_of_window_dropped_not_clamped() {
        let w = Window::new(100, 200).unwrap();
        let (corpus, report) =
            ingest_events(vec![(99u64, "a"), (100, "a"), (199, "a"), (200, "a")], w);
        assert_eq!(corpus.get("a").unwrap().times(), &[100, 199]);
        assert_eq!(report.accepted, 2);
        assert_eq!(report.out_of_window, 2);
    }

    #[test]
    fn malformed_records_rejected_and_counted() {
        let (corpus, report) = ingest_events(vec![(1u64, "#"), (2, ""), (3, "ok")], window());
        assert_eq!(corpus.len(), 1);
        assert_eq!(report.rejected, 2);
        assert_eq!(report.accepted, 1);
    }

    #[test]
    fn empty_input_is_an_empty_corpus() {
        let (corpus, report) = ingest_events(Vec::<(u64, String)>::new(), window());
        assert!(corpus.is_empty());
        assert_eq!(report, IngestReport::default());
    }

    #[test]
    fn from_trains_validates() {
        let w = Window::new(0, 100).unwrap();
        let t1 = SpikeTrain::from_seconds("a", vec![10, 20]);
        let t2 = SpikeTrain::from_seconds("a", vec![30]);
        assert!(Corpus::from_trains(vec![t1.clone(), t2], w).is_err());
        let outside = SpikeTrain::from_seconds("b", vec![100]);
        assert!(Corpus::from_trains(vec![outside], w).is_err());
        assert!(Corpus::from_trains(vec![t1], w).is_ok());
    }

    #[test]
    fn totals_track_multiplicities() {
        let (corpus, report) =
            ingest_events(vec![(1u64, "a"), (1, "a"), (2, "a"), (5, "b")], window());
        assert_eq!(corpus.total_events(), 4);
        assert_eq!(corpus.total_spikes(), 3);
        assert_eq!(report.accepted, 4);
    }
}
