//! `spikes dist` — inter-event and multiplicity distributions per class.

use spikes_core::classes::{ClassScheme, PopularityClass};
use spikes_core::corpus::Corpus;
use spikes_core::stats::{interval_histogram, multiplicity_distribution, Histogram, HistogramKind};

use super::{common_repr, load_corpus};
use crate::args::DistArgs;
use crate::output::{artifact_path, write_csv, Meta};
use crate::{CliError, CliResult};

/// Interval table rows on the full (unsuppressed) bin grid; the pdf column
/// may come from the suppressed variant.
pub(crate) fn interval_rows(pdf: &Histogram, cdf: &Histogram) -> Vec<Vec<String>> {
    (0..cdf.n_bins())
        .map(|i| {
            let density = if i < pdf.n_bins() { pdf.mass[i] } else { 0.0 };
            let count = (cdf.bin_probability(i) * cdf.n_samples as f64).round() as u64;
            vec![
                format!("{}", cdf.edges[i]),
                format!("{}", cdf.edges[i + 1]),
                format!("{density}"),
                format!("{}", cdf.mass[i]),
                format!("{count}"),
            ]
        })
        .collect()
}

pub(crate) fn write_class_distributions(
    corpus: &Corpus,
    class: &PopularityClass,
    bin_width: u64,
    suppress_1s: bool,
    out_dir: &std::path::Path,
    meta: &Meta,
) -> CliResult<(String, String)> {
    let cdf = interval_histogram(corpus, class, bin_width, HistogramKind::Cdf, false)
        .map_err(|e| CliError::data_stage("intervals", e))?;
    let pdf = interval_histogram(corpus, class, bin_width, HistogramKind::Pdf, suppress_1s)
        .map_err(|e| CliError::data_stage("intervals", e))?;

    let intervals_name = format!("intervals_{}.csv", class.label);
    let path = artifact_path(out_dir, &intervals_name)?;
    write_csv(
        &path,
        meta,
        &["bin_lo", "bin_hi", "pdf", "cdf", "count"],
        interval_rows(&pdf, &cdf),
    )?;

    let mult = multiplicity_distribution(corpus, class);
    let mult_name = format!("multiplicity_{}.csv", class.label);
    let path = artifact_path(out_dir, &mult_name)?;
    write_csv(
        &path,
        meta,
        &["c", "probability", "count"],
        (0..mult.n_bins()).map(|i| {
            vec![
                format!("{}", mult.edges[i]),
                format!("{}", mult.mass[i]),
                format!("{}", (mult.bin_probability(i) * mult.n_samples as f64).round() as u64),
            ]
        }),
    )?;
    Ok((intervals_name, mult_name))
}

pub fn run(args: &DistArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let scheme = args.common.scheme()?;
    let config = format!(
        "{} bin_width={:?} class={:?} suppress_1s={}",
        common_repr(&args.common),
        args.bin_width,
        args.class,
        args.suppress_1s
    );
    let meta = Meta::new("dist", args.common.seed, &config);

    if let Some(label) = &args.class {
        if !scheme.classes().iter().any(|c| &c.label == label) {
            return Err(CliError::Usage(format!(
                "unknown class label {label:?}; scheme has {:?}",
                scheme
                    .classes()
                    .iter()
                    .map(|c| c.label.as_str())
                    .collect::<Vec<_>>()
            )));
        }
    }

    let mut written = 0usize;
    for class in scheme.classes() {
        if args.class.as_deref().is_some_and(|l| l != class.label) {
            continue;
        }
        let width = args
            .bin_width
            .unwrap_or_else(|| ClassScheme::default_interval_bin_width(class));
        write_class_distributions(
            &loaded.corpus,
            class,
            width,
            args.suppress_1s,
            &args.common.out,
            &meta,
        )?;
        written += 1;
    }
    println!("wrote distributions for {written} class(es)");
    Ok(())
}
