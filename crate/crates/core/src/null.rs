//! Popularity-matched randomized trains (the permutation null model).
//!
//! All trains of a corpus are merged into one support train — the sorted set
//! of every second in which anything fired. A null surrogate for a real
//! train draws the same number of distinct timestamps uniformly without
//! replacement from that support. The surrogates inherit the global activity
//! profile (circadian cycles, event bursts) while erasing all per-tag
//! temporal structure, which makes them time-dependent Poisson references
//! for the local variation.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::rng::CounterRng;
use crate::train::SpikeTrain;
use crate::util::fnv1a64;

/// Sorted distinct seconds across every train of a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedTrain {
    times: Vec<u64>,
}

impl MergedTrain {
    pub fn times(&self) -> &[u64] {
        &self.times
    }

    /// Number of distinct active seconds.
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Set-union of all per-train times. Same-second activity across tags
/// collapses to a single entry. Errors on an empty corpus.
pub fn merge_trains(corpus: &Corpus) -> Result<MergedTrain> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut times: Vec<u64> = Vec::with_capacity(corpus.total_spikes() as usize);
    for train in corpus.trains() {
        times.extend_from_slice(train.times());
    }
    times.sort_unstable();
    times.dedup();
    Ok(MergedTrain { times })
}

/// Sub-seed for one tag: FNV-1a over the little-endian master seed, a fixed
/// separator byte, and the tag's UTF-8 bytes. Published so null corpora can
/// be regenerated per tag, in any order, in any language.
pub fn subseed(seed: u64, tag: &str) -> u64 {
    let mut bytes = Vec::with_capacity(9 + tag.len());
    bytes.extend_from_slice(&seed.to_le_bytes());
    bytes.push(0x1f);
    bytes.extend_from_slice(tag.as_bytes());
    fnv1a64(&bytes)
}

/// Draw `n` distinct timestamps uniformly from the merged train, sorted.
///
/// Implemented as a partial Fisher–Yates shuffle over a virtual index array
/// (sparse: only displaced entries are stored), so each draw costs O(n) while
/// staying exactly equivalent to shuffling the full support and taking a
/// prefix. Deterministic for a fixed seed.
pub fn sample_null_train(merged: &MergedTrain, tag: &str, n: usize, seed: u64) -> Result<SpikeTrain> {
    let support = merged.len();
    if n > support {
        return Err(Error::PopularityExceedsSupport {
            requested: n,
            support,
        });
    }
    let mut rng = CounterRng::new(seed);
    let mut displaced: HashMap<u64, u64> = HashMap::new();
    let mut picked: Vec<u64> = Vec::with_capacity(n);
    for i in 0..n as u64 {
        let j = i + rng.next_below(support as u64 - i);
        let value_j = *displaced.get(&j).unwrap_or(&j);
        let value_i = *displaced.get(&i).unwrap_or(&i);
        displaced.insert(j, value_i);
        picked.push(merged.times[value_j as usize]);
    }
    picked.sort_unstable();
    SpikeTrain::new(tag, picked, vec![1; n])
}

/// One null train per real train, matched on the number of distinct spikes.
/// Per-tag sub-seeds make generation order-independent, so trains are drawn
/// in parallel; the result is deterministic for a fixed `(corpus, seed)`.
pub fn randomize_corpus(corpus: &Corpus, seed: u64) -> Result<Corpus> {
    let merged = merge_trains(corpus)?;
    let trains: Vec<SpikeTrain> = corpus
        .trains()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|train| {
            sample_null_train(&merged, train.tag(), train.n_spikes(), subseed(seed, train.tag()))
        })
        .collect::<Result<_>>()?;
    Corpus::from_trains(trains, corpus.window())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ingest_events, Window};

    fn corpus_of(trains: Vec<SpikeTrain>) -> Corpus {
        Corpus::from_trains(trains, Window::new(0, 1_000_000).unwrap()).unwrap()
    }

    #[test]
    fn merge_is_a_set_union() {
        let corpus = corpus_of(vec![
            SpikeTrain::from_seconds("a", vec![1, 5]),
            SpikeTrain::from_seconds("b", vec![5, 9]),
        ]);
        assert_eq!(merge_trains(&corpus).unwrap().times(), &[1, 5, 9]);
    }

    #[test]
    fn merge_of_single_train_is_identity() {
        let corpus = corpus_of(vec![SpikeTrain::from_seconds("a", vec![2, 4, 10])]);
        assert_eq!(merge_trains(&corpus).unwrap().times(), &[2, 4, 10]);
    }

    #[test]
    fn merge_of_empty_corpus_errors() {
        let (corpus, _) = ingest_events(
            Vec::<(u64, String)>::new(),
            Window::new(0, 10).unwrap(),
        );
        assert!(matches!(merge_trains(&corpus), Err(Error::EmptyCorpus)));
    }

    #[test]
    fn exhaustive_draw_returns_the_merged_train() {
        let corpus = corpus_of(vec![SpikeTrain::from_seconds("a", vec![3, 7, 8, 20, 55])]);
        let merged = merge_trains(&corpus).unwrap();
        for seed in [0u64, 1, 99] {
            let t = sample_null_train(&merged, "a", merged.len(), seed).unwrap();
            assert_eq!(t.times(), merged.times());
        }
    }

    #[test]
    fn oversized_draw_errors() {
        let corpus = corpus_of(vec![SpikeTrain::from_seconds("a", vec![1, 2])]);
        let merged = merge_trains(&corpus).unwrap();
        assert!(matches!(
            sample_null_train(&merged, "a", 3, 0),
            Err(Error::PopularityExceedsSupport { .. })
        ));
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let corpus = corpus_of(vec![SpikeTrain::from_seconds(
            "a",
            (0..500u64).map(|i| i * 3).collect(),
        )]);
        let merged = merge_trains(&corpus).unwrap();
        let a = sample_null_train(&merged, "a", 100, 7).unwrap();
        let b = sample_null_train(&merged, "a", 100, 7).unwrap();
        assert_eq!(a, b);
        let c = sample_null_train(&merged, "a", 100, 8).unwrap();
        assert_ne!(a.times(), c.times());
    }

    #[test]
    fn randomized_corpus_preserves_sizes_and_support() {
        let corpus = corpus_of(vec![
            SpikeTrain::from_seconds("a", (0..200u64).map(|i| i * 7).collect()),
            SpikeTrain::from_seconds("b", (0..50u64).map(|i| i * 13 + 1).collect()),
            SpikeTrain::from_seconds("c", vec![4, 9]),
        ]);
        let merged = merge_trains(&corpus).unwrap();
        let null = randomize_corpus(&corpus, 42).unwrap();
        assert_eq!(null.len(), corpus.len());
        for train in corpus.trains() {
            let surrogate = null.get(train.tag()).unwrap();
            assert_eq!(surrogate.n_spikes(), train.n_spikes());
            for t in surrogate.times() {
                assert!(merged.times().binary_search(t).is_ok());
            }
        }
        // independent of draw order: regenerating is identical
        assert_eq!(randomize_corpus(&corpus, 42).unwrap(), null);
    }

    #[test]
    fn subseeds_separate_tags_and_seeds() {
        assert_ne!(subseed(1, "a"), subseed(1, "b"));
        assert_ne!(subseed(1, "a"), subseed(2, "a"));
        assert_eq!(subseed(9, "x"), subseed(9, "x"));
    }
}
