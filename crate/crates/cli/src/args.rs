//! Flag definitions. Every flag can also come from an `SPIKES_*` environment
//! variable, listed in the per-flag help.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spikes_core::classes::ClassScheme;
use spikes_core::corpus::Window;

use crate::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "spikes",
    version,
    about = "Spike-train analytics for tagged event streams",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ingest an event file and print a corpus summary
    Ingest(IngestArgs),
    /// Run the full analysis pipeline and emit all plot-ready artifacts
    Report(ReportArgs),
    /// Per-train local variation table
    Lv(LvArgs),
    /// Generate a popularity-matched randomized corpus
    Null(NullArgs),
    /// Inter-event and multiplicity distributions per popularity class
    Dist(DistArgs),
    /// Popularity rank table and log-binned popularity density
    Zipf(ZipfArgs),
    /// Split-half persistence of the local variation per class
    Corr(CorrArgs),
    /// Generate synthetic corpora from seeded point-process generators
    Synth(SynthArgs),
}

/// Flags shared by every corpus-consuming subcommand.
#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Input event file (`<unix_seconds><TAB><tag>` lines; .gz accepted)
    #[arg(long, env = "SPIKES_INPUT")]
    pub input: PathBuf,

    /// Output directory for artifacts
    #[arg(long, env = "SPIKES_OUT", default_value = ".")]
    pub out: PathBuf,

    /// Master seed recorded in every artifact and driving all randomness
    #[arg(long, env = "SPIKES_SEED", default_value_t = 42)]
    pub seed: u64,

    /// Popularity class edges, comma-separated ascending, starting at 1
    #[arg(long, env = "SPIKES_CLASSES", value_name = "EDGES")]
    pub classes: Option<String>,

    /// Observation window `start:end` (seconds, end exclusive); defaults to
    /// the span of the input
    #[arg(long, env = "SPIKES_WINDOW", value_name = "START:END")]
    pub window: Option<String>,
}

impl CommonArgs {
    pub fn scheme(&self) -> CliResult<ClassScheme> {
        match &self.classes {
            None => Ok(ClassScheme::default_scheme()),
            Some(spec) => {
                let edges: Vec<u64> = spec
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u64>()
                            .map_err(|e| CliError::Usage(format!("bad class edge {s:?}: {e}")))
                    })
                    .collect::<CliResult<_>>()?;
                ClassScheme::from_edges(&edges)
                    .map_err(|e| CliError::Usage(format!("--classes: {e}")))
            }
        }
    }

    pub fn window_override(&self) -> CliResult<Option<Window>> {
        self.window.as_deref().map(parse_window).transpose()
    }
}

pub fn parse_window(spec: &str) -> CliResult<Window> {
    let (start, end) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("--window expects START:END, got {spec:?}")))?;
    let start: u64 = start
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("bad window start {start:?}: {e}")))?;
    let end: u64 = end
        .trim()
        .parse()
        .map_err(|e| CliError::Usage(format!("bad window end {end:?}: {e}")))?;
    Window::new(start, end).map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Both,
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Re-emit the normalized, deduplicated corpus as an event file
    #[arg(long, value_name = "PATH")]
    pub emit_normalized: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Override the per-class inter-event bin width (seconds)
    #[arg(long, value_name = "SECONDS")]
    pub bin_width: Option<u64>,

    /// Activity series bin width (seconds)
    #[arg(long, default_value_t = 60)]
    pub activity_bin: u64,

    /// Local-variation histogram bin width
    #[arg(long, default_value_t = 0.1)]
    pub lv_bin: f64,

    /// Popularity density bins per decade
    #[arg(long, default_value_t = 8)]
    pub bins_per_decade: u32,

    /// Drop one-second intervals from the emitted interval PDFs
    #[arg(long)]
    pub suppress_1s: bool,

    /// Which artifact families to write
    #[arg(long, value_enum, default_value_t = OutputFormat::Both)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct LvArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct NullArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Override the per-class inter-event bin width (seconds)
    #[arg(long, value_name = "SECONDS")]
    pub bin_width: Option<u64>,

    /// Only emit the class with this label
    #[arg(long, value_name = "LABEL")]
    pub class: Option<String>,

    /// Drop one-second intervals from the emitted interval PDFs
    #[arg(long)]
    pub suppress_1s: bool,
}

#[derive(Debug, Args)]
pub struct ZipfArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Popularity density bins per decade
    #[arg(long, default_value_t = 8)]
    pub bins_per_decade: u32,
}

#[derive(Debug, Args)]
pub struct CorrArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeneratorKind {
    /// Stationary Poisson process
    Poisson,
    /// Poisson process with a sinusoidal daily rate
    Sinusoidal,
    /// Gamma renewal process
    Gamma,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Output directory (events.tsv plus synth_meta.json)
    #[arg(long, env = "SPIKES_OUT", default_value = ".")]
    pub out: PathBuf,

    /// Master seed
    #[arg(long, env = "SPIKES_SEED", default_value_t = 42)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = GeneratorKind::Poisson)]
    pub generator: GeneratorKind,

    /// Number of tags to generate
    #[arg(long, default_value_t = 100)]
    pub tags: usize,

    /// Base firing rate ξ (events per second per tag)
    #[arg(long, default_value_t = 0.01)]
    pub rate: f64,

    /// Gamma shape κ
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,

    /// Sinusoidal rate period (seconds)
    #[arg(long, default_value_t = 86_400.0)]
    pub period: f64,

    /// Sinusoidal relative amplitude in [0, 1]
    #[arg(long, default_value_t = 0.5)]
    pub amplitude: f64,

    /// Draw per-tag target sizes from `zipf:<alpha>:<min>:<max>` instead of
    /// using one rate for every tag
    #[arg(long, value_name = "SPEC")]
    pub sizes: Option<String>,

    /// Generation window `start:end` (seconds)
    #[arg(long, default_value = "0:864000", value_name = "START:END")]
    pub window: String,

    /// Collapse same-second events before writing (one line per distinct
    /// second); default emits one line per raw event
    #[arg(long)]
    pub quantize: bool,
}
