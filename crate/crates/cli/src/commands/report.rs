//! `spikes report` — the full pipeline: ingest, null model, every
//! distribution table, class summaries with z-scores, and split-half
//! correlations, as plot-ready CSVs plus one JSON report.

use serde::Serialize;

use spikes_core::classes::{ClassScheme, PopularityClass};
use spikes_core::corpus::{Corpus, IngestReport, Window};
use spikes_core::null::{merge_trains, randomize_corpus};
use spikes_core::rng::GENERATOR_ID;
use spikes_core::stats::{
    activity_series, class_lv_summary, lv_histogram, lv_table, popularity_pdf,
    share_with_p_below, split_half_correlation, zipf_table, ClassSummary, LvRow,
    SplitHalfSummary,
};

use super::dist::write_class_distributions;
use super::{bound_cell, common_repr, load_corpus};
use crate::args::{OutputFormat, ReportArgs};
use crate::output::{artifact_path, opt_cell, write_csv, write_json, Meta};
use crate::{CliError, CliResult};

#[derive(Debug, Serialize)]
struct ZipfBlock {
    n_tags: usize,
    frac_p1: f64,
    frac_p_lt5: f64,
    max_p: u64,
    top_tag: Option<String>,
}

#[derive(Debug, Serialize)]
struct NullBlock {
    seed: u64,
    generator: &'static str,
    merged_len: usize,
}

#[derive(Debug, Serialize)]
struct Report<'a> {
    meta: &'a Meta,
    input: String,
    window: Window,
    ingest: &'a IngestReport,
    n_tags: usize,
    total_events: u64,
    total_spikes: u64,
    null_model: NullBlock,
    zipf: ZipfBlock,
    class_summary_real: &'a [ClassSummary],
    class_summary_null: &'a [ClassSummary],
    split_half: &'a [SplitHalfSummary],
    artifacts: &'a [String],
}

fn class_summary_rows(summaries: &[ClassSummary]) -> Vec<Vec<String>> {
    summaries
        .iter()
        .map(|s| {
            vec![
                s.class.label.clone(),
                s.class.lo.to_string(),
                bound_cell(s.class.hi),
                s.n_trains.to_string(),
                s.n.to_string(),
                opt_cell(s.mean_p),
                opt_cell(s.mu_lv),
                opt_cell(s.sigma_lv),
                opt_cell(s.z),
            ]
        })
        .collect()
}

fn scatter_rows<'a>(dataset: &'a str, rows: &'a [LvRow]) -> impl Iterator<Item = Vec<String>> + 'a {
    rows.iter().map(move |r| {
        vec![
            dataset.to_string(),
            r.tag.clone(),
            r.p_raw.to_string(),
            r.n_spikes.to_string(),
            format!("{}", r.lv),
        ]
    })
}

fn lv_pdf_rows(
    class: &PopularityClass,
    real: &[LvRow],
    null: &[LvRow],
    bin_width: f64,
) -> Vec<Vec<String>> {
    let pick = |rows: &[LvRow]| -> Vec<f64> {
        rows.iter()
            .filter(|r| class.contains(r.p_raw))
            .map(|r| r.lv)
            .collect()
    };
    let real_hist = lv_histogram(&pick(real), bin_width);
    let null_hist = lv_histogram(&pick(null), bin_width);
    let n_bins = real_hist.n_bins().max(null_hist.n_bins());
    (0..n_bins)
        .map(|i| {
            let lo = i as f64 * bin_width;
            let density = |h: &spikes_core::stats::Histogram| {
                if i < h.n_bins() {
                    h.mass[i]
                } else {
                    0.0
                }
            };
            vec![
                format!("{lo}"),
                format!("{}", lo + bin_width),
                format!("{}", density(&real_hist)),
                format!("{}", density(&null_hist)),
            ]
        })
        .collect()
}

pub fn run(args: &ReportArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let corpus: &Corpus = &loaded.corpus;
    if corpus.is_empty() {
        return Err(CliError::data_stage("ingest", "empty corpus, nothing to report"));
    }
    let scheme = args.common.scheme()?;
    let seed = args.common.seed;
    let config = format!(
        "{} bin_width={:?} activity_bin={} lv_bin={} bins_per_decade={} suppress_1s={} format={:?}",
        common_repr(&args.common),
        args.bin_width,
        args.activity_bin,
        args.lv_bin,
        args.bins_per_decade,
        args.suppress_1s,
        args.format
    );
    let meta = Meta::new("report", seed, &config);
    let out = &args.common.out;
    let emit_csv = matches!(args.format, OutputFormat::Csv | OutputFormat::Both);
    let emit_json = matches!(args.format, OutputFormat::Json | OutputFormat::Both);

    let merged = merge_trains(corpus).map_err(|e| CliError::data_stage("null-model", e))?;
    let null_corpus =
        randomize_corpus(corpus, seed).map_err(|e| CliError::data_stage("null-model", e))?;

    let table = zipf_table(corpus);
    let real_rows = lv_table(corpus);
    let null_rows = lv_table(&null_corpus);
    let summary_real = class_lv_summary(corpus, &scheme);
    let summary_null = class_lv_summary(&null_corpus, &scheme);
    let split = split_half_correlation(corpus, &scheme);

    let mut artifacts: Vec<String> = Vec::new();
    if emit_csv {
        let series = activity_series(corpus, args.activity_bin)
            .map_err(|e| CliError::data_stage("activity", e))?;
        write_csv(
            &artifact_path(out, "activity.csv")?,
            &meta,
            &["bin_start", "count"],
            series.counts.iter().enumerate().map(|(i, &c)| {
                vec![
                    format!("{}", series.start + i as u64 * series.bin_width),
                    format!("{c}"),
                ]
            }),
        )?;
        artifacts.push("activity.csv".into());

        write_csv(
            &artifact_path(out, "zipf.csv")?,
            &meta,
            &["rank", "tag", "p_raw"],
            table
                .iter()
                .map(|e| vec![e.rank.to_string(), e.tag.clone(), e.p_raw.to_string()]),
        )?;
        artifacts.push("zipf.csv".into());

        let pdf = popularity_pdf(corpus, args.bins_per_decade)
            .map_err(|e| CliError::data_stage("popularity", e))?;
        write_csv(
            &artifact_path(out, "popularity_pdf.csv")?,
            &meta,
            &["bin_lo", "bin_hi", "density", "count"],
            (0..pdf.n_bins()).map(|i| {
                vec![
                    format!("{}", pdf.edges[i]),
                    format!("{}", pdf.edges[i + 1]),
                    format!("{}", pdf.mass[i]),
                    format!("{}", (pdf.bin_probability(i) * pdf.n_samples as f64).round() as u64),
                ]
            }),
        )?;
        artifacts.push("popularity_pdf.csv".into());

        for class in scheme.classes() {
            let width = args
                .bin_width
                .unwrap_or_else(|| ClassScheme::default_interval_bin_width(class));
            let (intervals_name, mult_name) = write_class_distributions(
                corpus,
                class,
                width,
                args.suppress_1s,
                out,
                &meta,
            )?;
            artifacts.push(intervals_name);
            artifacts.push(mult_name);

            let lv_pdf_name = format!("lv_pdf_{}.csv", class.label);
            write_csv(
                &artifact_path(out, &lv_pdf_name)?,
                &meta,
                &["bin_lo", "bin_hi", "pdf_real", "pdf_null"],
                lv_pdf_rows(class, &real_rows, &null_rows, args.lv_bin),
            )?;
            artifacts.push(lv_pdf_name);
        }

        write_csv(
            &artifact_path(out, "lv_scatter.csv")?,
            &meta,
            &["dataset", "tag", "p_raw", "n_spikes", "lv"],
            scatter_rows("real", &real_rows).chain(scatter_rows("null", &null_rows)),
        )?;
        artifacts.push("lv_scatter.csv".into());

        write_csv(
            &artifact_path(out, "class_summary_real.csv")?,
            &meta,
            &["label", "lo", "hi", "n_trains", "n", "mean_p", "mu_lv", "sigma_lv", "z"],
            class_summary_rows(&summary_real),
        )?;
        artifacts.push("class_summary_real.csv".into());

        write_csv(
            &artifact_path(out, "class_summary_null.csv")?,
            &meta,
            &["label", "lo", "hi", "n_trains", "n", "mean_p", "mu_lv", "sigma_lv", "z"],
            class_summary_rows(&summary_null),
        )?;
        artifacts.push("class_summary_null.csv".into());

        write_csv(
            &artifact_path(out, "splithalf.csv")?,
            &meta,
            &["label", "lo", "hi", "mean_p", "n_pairs", "r"],
            split.iter().map(|s| {
                vec![
                    s.class.label.clone(),
                    s.class.lo.to_string(),
                    bound_cell(s.class.hi),
                    opt_cell(s.mean_p),
                    s.n_pairs.to_string(),
                    opt_cell(s.r),
                ]
            }),
        )?;
        artifacts.push("splithalf.csv".into());
    }

    if emit_json {
        artifacts.push("report.json".into());
        let report = Report {
            meta: &meta,
            input: args.common.input.display().to_string(),
            window: corpus.window(),
            ingest: &loaded.report,
            n_tags: corpus.len(),
            total_events: corpus.total_events(),
            total_spikes: corpus.total_spikes(),
            null_model: NullBlock {
                seed,
                generator: GENERATOR_ID,
                merged_len: merged.len(),
            },
            zipf: ZipfBlock {
                n_tags: table.len(),
                frac_p1: share_with_p_below(&table, 2),
                frac_p_lt5: share_with_p_below(&table, 5),
                max_p: table.first().map(|e| e.p_raw).unwrap_or(0),
                top_tag: table.first().map(|e| e.tag.clone()),
            },
            class_summary_real: &summary_real,
            class_summary_null: &summary_null,
            split_half: &split,
            artifacts: &artifacts,
        };
        write_json(&artifact_path(out, "report.json")?, &report)?;
    }

    println!("wrote {} artifact(s) to {}", artifacts.len(), out.display());
    Ok(())
}
