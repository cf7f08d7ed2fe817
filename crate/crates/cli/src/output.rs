//! Artifact writers: CSV tables with a self-describing metadata header line
//! and JSON reports carrying the same metadata block.
//!
//! Every artifact's first line is `# <json>` with the tool version, the
//! command, the seed, and a digest of the resolved configuration, so a file
//! can always be traced back to the invocation that produced it. Nothing
//! time- or host-dependent goes into the header: identical configuration and
//! seed must reproduce identical bytes.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::{CliError, CliResult};

pub const TOOL: &str = "spikes";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Metadata block stamped into every artifact.
#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    /// FNV-1a digest of the resolved configuration, hex.
    pub config: String,
    /// Identifier of the random generator algorithm.
    pub generator: &'static str,
}

impl Meta {
    /// Build metadata from the command name, seed, and a canonical rendering
    /// of the resolved configuration.
    pub fn new(command: &'static str, seed: u64, config_repr: &str) -> Self {
        Meta {
            tool: TOOL,
            version: VERSION,
            command,
            seed,
            config: format!("{:016x}", fnv1a64(config_repr.as_bytes())),
            generator: spikes_core::rng::GENERATOR_ID,
        }
    }

    fn header_line(&self) -> String {
        format!(
            "# {}",
            serde_json::to_string(self).expect("meta serializes")
        )
    }
}

/// Render an optional statistic; undefined values print as `nan` so every
/// CSV cell stays numeric.
pub fn opt_cell(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x}"),
        None => "nan".to_string(),
    }
}

/// Write one CSV artifact: metadata header, column row, then data rows.
pub fn write_csv(
    path: &Path,
    meta: &Meta,
    columns: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> CliResult<()> {
    fn emit(
        w: &mut impl Write,
        meta: &Meta,
        columns: &[&str],
        rows: impl IntoIterator<Item = Vec<String>>,
    ) -> std::io::Result<()> {
        writeln!(w, "{}", meta.header_line())?;
        writeln!(w, "{}", columns.join(","))?;
        for row in rows {
            debug_assert_eq!(row.len(), columns.len());
            writeln!(w, "{}", row.join(","))?;
        }
        w.flush()
    }
    let file = File::create(path)
        .map_err(|e| CliError::Internal(format!("create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    emit(&mut w, meta, columns, rows)
        .map_err(|e| CliError::Internal(format!("write {}: {e}", path.display())))
}

/// Write an event-line artifact: metadata comment line, then the corpus in
/// the standard format (readers treat `#` lines as comments).
pub fn write_event_file(
    path: &Path,
    meta: &Meta,
    corpus: &spikes_core::corpus::Corpus,
) -> CliResult<()> {
    let file = File::create(path)
        .map_err(|e| CliError::Internal(format!("create {}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    writeln!(w, "{}", meta.header_line())
        .map_err(|e| CliError::Internal(format!("write {}: {e}", path.display())))?;
    spikes_core::io::write_events(&mut w, corpus)
        .map_err(|e| CliError::Internal(format!("write {}: {e}", path.display())))?;
    Ok(())
}

/// Write a JSON artifact (pretty-printed, trailing newline).
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let rendered = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialize {}: {e}", path.display())))?;
    std::fs::write(path, rendered + "\n")
        .map_err(|e| CliError::Internal(format!("write {}: {e}", path.display())))
}

/// Ensure the output directory exists and return the path of one artifact
/// inside it.
pub fn artifact_path(out_dir: &Path, name: &str) -> CliResult<PathBuf> {
    std::fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Internal(format!("create {}: {e}", out_dir.display())))?;
    Ok(out_dir.join(name))
}
