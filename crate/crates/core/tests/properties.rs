//! Property tests for the structural invariants: bounds, invariances,
//! conservation laws, normalization, and determinism.

use std::collections::BTreeSet;

use proptest::prelude::*;

use spikes_core::classes::ClassScheme;
use spikes_core::corpus::{ingest_events, Corpus, Window};
use spikes_core::lv::{local_variation, split_half_lv, split_point};
use spikes_core::null::{merge_trains, sample_null_train};
use spikes_core::stats::{
    activity_series, interval_histogram, multiplicity_distribution, pearson, popularity_pdf,
    zipf_table, HistogramKind,
};
use spikes_core::train::SpikeTrain;
use spikes_testkit::naive_local_variation_grid;

const WINDOW_END: u64 = 100_000;

fn arb_times() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::btree_set(0u64..WINDOW_END, 3..120)
        .prop_map(|set: BTreeSet<u64>| set.into_iter().collect())
}

fn arb_events() -> impl Strategy<Value = Vec<(u64, String)>> {
    proptest::collection::vec(
        (0u64..WINDOW_END, "[a-e]{1,2}".prop_map(String::from)),
        0..300,
    )
}

fn arb_corpus() -> impl Strategy<Value = Corpus> {
    arb_events().prop_map(|events| {
        ingest_events(events, Window::new(0, WINDOW_END).unwrap()).0
    })
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn lv_stays_in_bounds(times in arb_times()) {
        let train = SpikeTrain::from_seconds("t", times);
        let r = local_variation(&train).unwrap();
        prop_assert!((0.0..=3.0).contains(&r.lv), "lv = {}", r.lv);
        prop_assert_eq!(r.n_terms, r.n_spikes - 2);
    }

    #[test]
    fn lv_is_zero_exactly_when_intervals_are_equal(times in arb_times()) {
        let train = SpikeTrain::from_seconds("t", times);
        let intervals = train.intervals().unwrap();
        let all_equal = intervals.windows(2).all(|w| w[0] == w[1]);
        let lv = local_variation(&train).unwrap().lv;
        prop_assert_eq!(lv == 0.0, all_equal);
    }

    #[test]
    fn streaming_lv_matches_naive_two_pass(times in arb_times()) {
        let train = SpikeTrain::from_seconds("t", times.clone());
        let streaming = local_variation(&train).unwrap().lv;
        let naive = naive_local_variation_grid(&times).unwrap();
        prop_assert!(rel_close(streaming, naive, 1e-12), "{streaming} vs {naive}");
    }

    #[test]
    fn lv_invariant_under_translation(times in arb_times(), shift in 0u64..1_000_000) {
        let base = local_variation(&SpikeTrain::from_seconds("t", times.clone())).unwrap().lv;
        let shifted: Vec<u64> = times.iter().map(|&t| t + shift).collect();
        let moved = local_variation(&SpikeTrain::from_seconds("t", shifted)).unwrap().lv;
        prop_assert!(rel_close(base, moved, 1e-12));
    }

    #[test]
    fn lv_invariant_under_interval_scaling(times in arb_times(), factor in 2u64..9) {
        let base = local_variation(&SpikeTrain::from_seconds("t", times.clone())).unwrap().lv;
        let scaled: Vec<u64> = times.iter().map(|&t| t * factor).collect();
        let rescaled = local_variation(&SpikeTrain::from_seconds("t", scaled)).unwrap().lv;
        prop_assert!(rel_close(base, rescaled, 1e-12));
    }

    #[test]
    fn lv_invariant_under_interval_reversal(times in arb_times()) {
        let train = SpikeTrain::from_seconds("t", times);
        let base = local_variation(&train).unwrap().lv;
        let mut intervals = train.intervals().unwrap();
        intervals.reverse();
        let mut t = 0u64;
        let mut reversed = vec![0u64];
        for d in intervals {
            t += d;
            reversed.push(t);
        }
        let rev = local_variation(&SpikeTrain::from_seconds("t", reversed)).unwrap().lv;
        prop_assert!(rel_close(base, rev, 1e-12));
    }

    #[test]
    fn intervals_telescope_to_span(times in arb_times()) {
        let train = SpikeTrain::from_seconds("t", times);
        let intervals = train.intervals().unwrap();
        prop_assert!(intervals.iter().all(|&d| d >= 1));
        let span = train.times().last().unwrap() - train.times()[0];
        prop_assert_eq!(intervals.iter().sum::<u64>(), span);
    }

    #[test]
    fn split_halves_partition_the_train(times in arb_times()) {
        let train = SpikeTrain::from_seconds("t", times);
        let n = train.n_spikes();
        match split_half_lv(&train) {
            Ok((a, b)) => {
                prop_assert!(n >= 6);
                prop_assert_eq!(a.n_spikes, split_point(n));
                prop_assert_eq!(a.n_spikes + b.n_spikes, n);
                prop_assert!(a.n_spikes >= b.n_spikes);
                prop_assert!(a.n_spikes - b.n_spikes <= 1);
            }
            Err(_) => prop_assert!(n < 6),
        }
    }

    #[test]
    fn ingestion_conserves_events(events in arb_events()) {
        let window = Window::new(0, WINDOW_END).unwrap();
        let (corpus, report) = ingest_events(events.clone(), window);
        prop_assert_eq!(report.accepted, corpus.total_events());
        prop_assert_eq!(report.accepted + report.rejected + report.out_of_window,
            events.len() as u64);
        let spikes: u64 = corpus.trains().map(|t| t.n_spikes() as u64).sum();
        prop_assert!(spikes <= report.accepted);
    }

    #[test]
    fn ingestion_is_idempotent_on_deduplicated_streams(events in arb_events()) {
        let window = Window::new(0, WINDOW_END).unwrap();
        let (corpus, _) = ingest_events(events, window);
        // re-expand the corpus into records, multiplicities included
        let mut replay: Vec<(u64, String)> = Vec::new();
        for train in corpus.trains() {
            for (&t, &c) in train.times().iter().zip(train.counts()) {
                for _ in 0..c {
                    replay.push((t, train.tag().to_string()));
                }
            }
        }
        let (again, report) = ingest_events(replay, window);
        prop_assert_eq!(report.rejected, 0);
        prop_assert_eq!(&again, &corpus);
    }

    #[test]
    fn classification_is_total_and_unique(p in 1u64..10_000_000) {
        let scheme = ClassScheme::default_scheme();
        let matches = scheme.classes().iter().filter(|c| c.contains(p)).count();
        prop_assert_eq!(matches, 1);
        let class = scheme.classify(p).unwrap();
        prop_assert!(class.contains(p));
    }

    #[test]
    fn histograms_are_normalized(corpus in arb_corpus(), bin_width in 1u64..500) {
        prop_assume!(!corpus.is_empty());
        let scheme = ClassScheme::default_scheme();
        for class in scheme.classes() {
            let pdf = interval_histogram(&corpus, class, bin_width, HistogramKind::Pdf, false)
                .unwrap();
            if !pdf.is_empty() {
                prop_assert!((pdf.total_mass() - 1.0).abs() < 1e-9);
                prop_assert!(pdf.mass.iter().all(|&m| m >= 0.0));
            }
            let cdf = interval_histogram(&corpus, class, bin_width, HistogramKind::Cdf, false)
                .unwrap();
            if !cdf.is_empty() {
                prop_assert!(cdf.mass.windows(2).all(|w| w[0] <= w[1]));
                prop_assert!((cdf.total_mass() - 1.0).abs() < 1e-9);
            }
            let mult = multiplicity_distribution(&corpus, class);
            if !mult.is_empty() {
                prop_assert!((mult.total_mass() - 1.0).abs() < 1e-9);
            }
        }
        let pop = popularity_pdf(&corpus, 6).unwrap();
        prop_assert!((pop.total_mass() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zipf_table_is_an_ordered_permutation(corpus in arb_corpus()) {
        let table = zipf_table(&corpus);
        prop_assert_eq!(table.len(), corpus.len());
        // non-increasing popularity, ranks 1..=n, ties broken by tag
        for w in table.windows(2) {
            prop_assert!(w[0].p_raw > w[1].p_raw
                || (w[0].p_raw == w[1].p_raw && w[0].tag < w[1].tag));
        }
        for (i, entry) in table.iter().enumerate() {
            prop_assert_eq!(entry.rank, i + 1);
            prop_assert_eq!(corpus.get(&entry.tag).unwrap().p_raw(), entry.p_raw);
        }
    }

    #[test]
    fn activity_series_totals_match(corpus in arb_corpus(), bin_width in 1u64..10_000) {
        let series = activity_series(&corpus, bin_width).unwrap();
        prop_assert_eq!(series.total(), corpus.total_events());
        let expected_bins = WINDOW_END.div_ceil(bin_width) as usize;
        prop_assert_eq!(series.counts.len(), expected_bins);
    }

    #[test]
    fn pearson_symmetry_and_affine_invariance(
        pairs in proptest::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..50),
        scale in 0.1f64..10.0,
        offset in -50.0f64..50.0,
    ) {
        let x: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let y: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        match (pearson(&x, &y), pearson(&y, &x)) {
            (Ok(r_xy), Ok(r_yx)) => {
                prop_assert!((r_xy - r_yx).abs() < 1e-9);
                prop_assert!((-1.0..=1.0).contains(&r_xy));
                let x2: Vec<f64> = x.iter().map(|v| offset + scale * v).collect();
                let r_affine = pearson(&x2, &y).unwrap();
                prop_assert!((r_xy - r_affine).abs() < 1e-9);
                let y_neg: Vec<f64> = y.iter().map(|v| -v).collect();
                let r_neg = pearson(&x, &y_neg).unwrap();
                prop_assert!((r_xy + r_neg).abs() < 1e-9);
            }
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "symmetry of error behavior violated"),
        }
    }

    #[test]
    fn null_samples_are_sorted_subsets_of_support(
        support in proptest::collection::btree_set(0u64..50_000, 2..300),
        seed in 0u64..1000,
    ) {
        let times: Vec<u64> = support.iter().copied().collect();
        let train = SpikeTrain::from_seconds("a", times);
        let corpus = Corpus::from_trains(vec![train], Window::new(0, 50_000).unwrap()).unwrap();
        let merged = merge_trains(&corpus).unwrap();
        let n = merged.len() / 2 + 1;
        let sample = sample_null_train(&merged, "a", n, seed).unwrap();
        prop_assert_eq!(sample.n_spikes(), n);
        prop_assert!(sample.times().windows(2).all(|w| w[0] < w[1]));
        for t in sample.times() {
            prop_assert!(merged.times().binary_search(t).is_ok());
        }
        let replay = sample_null_train(&merged, "a", n, seed).unwrap();
        prop_assert_eq!(replay, sample);
    }
}
