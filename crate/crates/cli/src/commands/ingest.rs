//! `spikes ingest` — corpus summary and optional normalized re-emission.

use serde::Serialize;

use spikes_core::corpus::Window;
use spikes_core::null::merge_trains;

use super::{common_repr, load_corpus};
use crate::args::IngestArgs;
use crate::output::{artifact_path, write_event_file, write_json, Meta};
use crate::{CliError, CliResult};

#[derive(Debug, Serialize)]
struct IngestSummary {
    meta: Meta,
    input: String,
    window: Window,
    /// In-window raw occurrences folded into the corpus.
    accepted: u64,
    /// Malformed lines plus records with empty normalized tags.
    rejected: u64,
    out_of_window: u64,
    n_tags: usize,
    /// Distinct spikes across all trains.
    total_spikes: u64,
    /// Length of the merged train: seconds in which anything fired.
    distinct_active_seconds: usize,
    /// Largest same-second multiplicity observed.
    max_multiplicity: u32,
}

pub fn run(args: &IngestArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let corpus = &loaded.corpus;
    let meta = Meta::new("ingest", args.common.seed, &common_repr(&args.common));

    let distinct_active_seconds = if corpus.is_empty() {
        0
    } else {
        merge_trains(corpus)
            .map_err(|e| CliError::data_stage("merge", e))?
            .len()
    };
    let summary = IngestSummary {
        meta: meta.clone(),
        input: args.common.input.display().to_string(),
        window: corpus.window(),
        accepted: loaded.report.accepted,
        rejected: loaded.report.rejected,
        out_of_window: loaded.report.out_of_window,
        n_tags: corpus.len(),
        total_spikes: corpus.total_spikes(),
        distinct_active_seconds,
        max_multiplicity: corpus
            .trains()
            .map(|t| t.max_multiplicity())
            .max()
            .unwrap_or(0),
    };

    let path = artifact_path(&args.common.out, "ingest.json")?;
    write_json(&path, &summary)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    );

    if let Some(normalized) = &args.emit_normalized {
        write_event_file(normalized, &meta, corpus)?;
    }
    Ok(())
}
