//! `spikes null` — emit a popularity-matched randomized corpus.

use serde::Serialize;

use spikes_core::corpus::Window;
use spikes_core::null::{merge_trains, randomize_corpus};
use spikes_core::rng::GENERATOR_ID;

use super::{common_repr, load_corpus};
use crate::args::NullArgs;
use crate::output::{artifact_path, write_event_file, write_json, Meta};
use crate::{CliError, CliResult};

#[derive(Debug, Serialize)]
struct NullSidecar {
    meta: Meta,
    window: Window,
    seed: u64,
    generator: &'static str,
    /// Distinct active seconds the surrogates are drawn from.
    merged_len: usize,
    n_trains: usize,
}

pub fn run(args: &NullArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let corpus = &loaded.corpus;
    let meta = Meta::new("null", args.common.seed, &common_repr(&args.common));

    let merged = merge_trains(corpus).map_err(|e| CliError::data_stage("null-model", e))?;
    let surrogates =
        randomize_corpus(corpus, args.common.seed).map_err(|e| CliError::data_stage("null-model", e))?;

    let events_path = artifact_path(&args.common.out, "null_events.tsv")?;
    write_event_file(&events_path, &meta, &surrogates)?;

    let sidecar = NullSidecar {
        meta,
        window: corpus.window(),
        seed: args.common.seed,
        generator: GENERATOR_ID,
        merged_len: merged.len(),
        n_trains: surrogates.len(),
    };
    let sidecar_path = artifact_path(&args.common.out, "null_meta.json")?;
    write_json(&sidecar_path, &sidecar)?;
    println!(
        "wrote {} and {} ({} trains, support {})",
        events_path.display(),
        sidecar_path.display(),
        sidecar.n_trains,
        sidecar.merged_len
    );
    Ok(())
}
