//! Subcommand implementations.

pub mod corr;
pub mod dist;
pub mod ingest;
pub mod lv;
pub mod null;
pub mod report;
pub mod synth;
pub mod zipf;

use spikes_core::corpus::{ingest_events, Corpus, IngestReport, Window};
use spikes_core::io;

use crate::args::CommonArgs;
use crate::{CliError, CliResult};

pub(crate) struct LoadedCorpus {
    pub corpus: Corpus,
    pub report: IngestReport,
}

/// Read, window, and fold the input into a corpus. The window defaults to
/// the exact span of the parsed events; an empty input yields an empty
/// corpus over a placeholder window.
pub(crate) fn load_corpus(common: &CommonArgs) -> CliResult<LoadedCorpus> {
    let raw = io::read_events(&common.input)
        .map_err(|e| CliError::data_stage("ingest", format!("{}: {e}", common.input.display())))?;
    let window = match common.window_override()? {
        Some(w) => w,
        None => {
            let (start, end) = raw.span().unwrap_or((0, 1));
            Window::new(start, end).expect("span window is valid")
        }
    };
    let (corpus, mut report) = ingest_events(raw.events, window);
    report.rejected += raw.rejected;
    Ok(LoadedCorpus { corpus, report })
}

/// Canonical rendering of the shared flags for the config digest.
pub(crate) fn common_repr(common: &CommonArgs) -> String {
    format!(
        "input={} seed={} classes={} window={}",
        common.input.display(),
        common.seed,
        common.classes.as_deref().unwrap_or("default"),
        common.window.as_deref().unwrap_or("span"),
    )
}

/// Render a class upper bound; the open-ended top class prints as `inf`.
pub(crate) fn bound_cell(hi: u64) -> String {
    if hi == u64::MAX {
        "inf".to_string()
    } else {
        format!("{hi}")
    }
}
