//! `spikes synth` — synthetic corpora from seeded point-process generators.
//!
//! Emits the standard event-line file plus a ground-truth sidecar recording
//! every tag's generator parameters and sub-seed, so analyses of the output
//! can be checked against what was actually generated.

use rayon::prelude::*;
use serde::Serialize;

use spikes_core::corpus::Window;
use spikes_core::null::subseed;
use spikes_core::rng::{CounterRng, GENERATOR_ID};
use spikes_core::synth::{
    gen_gamma_renewal, gen_nonstationary_poisson, gen_poisson, PowerLawSizes, SinusoidalRate,
};

use crate::args::{parse_window, GeneratorKind, SynthArgs};
use crate::output::{artifact_path, write_json, Meta};
use crate::{CliError, CliResult};

#[derive(Debug, Serialize)]
struct TagEntry {
    tag: String,
    generator: &'static str,
    /// Mean firing rate used for this tag.
    xi: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
    subseed: u64,
    /// Events generated before any same-second collapse.
    raw_events: u64,
    /// Distinct seconds after flooring to the grid.
    distinct_seconds: u64,
}

#[derive(Debug, Serialize)]
struct SynthSidecar {
    meta: Meta,
    window: Window,
    generator: &'static str,
    rng: &'static str,
    seed: u64,
    quantize: bool,
    n_tags: usize,
    entries: Vec<TagEntry>,
}

fn generator_name(kind: GeneratorKind) -> &'static str {
    match kind {
        GeneratorKind::Poisson => "poisson",
        GeneratorKind::Sinusoidal => "sinusoidal",
        GeneratorKind::Gamma => "gamma",
    }
}

fn parse_sizes(spec: &str) -> CliResult<PowerLawSizes> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || {
        CliError::Usage(format!(
            "--sizes expects zipf:<alpha>:<min>:<max>, got {spec:?}"
        ))
    };
    if parts.len() != 4 || parts[0] != "zipf" {
        return Err(usage());
    }
    let alpha: f64 = parts[1].parse().map_err(|_| usage())?;
    let kmin: u64 = parts[2].parse().map_err(|_| usage())?;
    let kmax: u64 = parts[3].parse().map_err(|_| usage())?;
    PowerLawSizes::new(alpha, kmin, kmax).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(args: &SynthArgs) -> CliResult<()> {
    if args.tags == 0 {
        return Err(CliError::Usage("--tags must be at least 1".into()));
    }
    if !args.rate.is_finite() || args.rate <= 0.0 {
        return Err(CliError::Usage(format!("--rate must be positive, got {}", args.rate)));
    }
    if matches!(args.generator, GeneratorKind::Gamma) && args.kappa <= 0.0 {
        return Err(CliError::Usage(format!("--kappa must be positive, got {}", args.kappa)));
    }
    if matches!(args.generator, GeneratorKind::Sinusoidal)
        && (!(0.0..=1.0).contains(&args.amplitude) || args.period <= 0.0)
    {
        return Err(CliError::Usage(
            "--amplitude must lie in [0, 1] and --period must be positive".into(),
        ));
    }
    let window = parse_window(&args.window)?;
    let span = (window.end - window.start) as f64;
    let fwindow = (window.start as f64, window.end as f64);

    let config = format!(
        "out={} seed={} generator={} tags={} rate={} kappa={} period={} amplitude={} sizes={:?} window={} quantize={}",
        args.out.display(),
        args.seed,
        generator_name(args.generator),
        args.tags,
        args.rate,
        args.kappa,
        args.period,
        args.amplitude,
        args.sizes,
        args.window,
        args.quantize
    );
    let meta = Meta::new("synth", args.seed, &config);

    // per-tag mean rates: constant, or matched to drawn target sizes
    let width = args.tags.to_string().len().max(3);
    let tags: Vec<String> = (0..args.tags)
        .map(|i| format!("t{:0width$}", i, width = width))
        .collect();
    let mut size_rng = CounterRng::new(args.seed);
    let rates: Vec<f64> = match &args.sizes {
        None => vec![args.rate; args.tags],
        Some(spec) => {
            let sizes = parse_sizes(spec)?;
            tags.iter()
                .map(|_| sizes.sample(&mut size_rng) as f64 / span)
                .collect()
        }
    };

    let kind = args.generator;
    let (kappa, period, amplitude) = (args.kappa, args.period, args.amplitude);
    let generated: Vec<(Vec<u64>, u64)> = tags
        .par_iter()
        .zip(rates.par_iter())
        .map(|(tag, &xi)| {
            let seed = subseed(args.seed, tag);
            let times = match kind {
                GeneratorKind::Poisson => gen_poisson(xi, fwindow, seed),
                GeneratorKind::Gamma => gen_gamma_renewal(xi, kappa, fwindow, seed),
                GeneratorKind::Sinusoidal => {
                    let rate = SinusoidalRate {
                        mean: xi,
                        amplitude,
                        period,
                    };
                    gen_nonstationary_poisson(&rate, fwindow, seed)
                }
            }
            .map_err(|e| CliError::Usage(format!("generator for {tag}: {e}")))?;
            let raw: Vec<u64> = times.iter().map(|&t| t.floor() as u64).collect();
            Ok((raw, times.len() as u64))
        })
        .collect::<CliResult<_>>()?;

    let mut entries = Vec::with_capacity(args.tags);
    let mut lines: Vec<(u64, &str)> = Vec::new();
    for ((tag, xi), (mut seconds, raw_events)) in
        tags.iter().zip(&rates).zip(generated)
    {
        seconds.sort_unstable();
        let mut distinct = seconds.clone();
        distinct.dedup();
        entries.push(TagEntry {
            tag: tag.clone(),
            generator: generator_name(kind),
            xi: *xi,
            kappa: matches!(kind, GeneratorKind::Gamma).then_some(kappa),
            subseed: subseed(args.seed, tag),
            raw_events,
            distinct_seconds: distinct.len() as u64,
        });
        let emit = if args.quantize { distinct } else { seconds };
        lines.extend(emit.into_iter().map(|s| (s, tag.as_str())));
    }
    lines.sort_unstable();

    let events_path = artifact_path(&args.out, "events.tsv")?;
    let mut rendered = format!(
        "# {}\n",
        serde_json::to_string(&meta).expect("meta serializes")
    );
    for (s, tag) in &lines {
        rendered.push_str(&format!("{s}\t{tag}\n"));
    }
    std::fs::write(&events_path, rendered)
        .map_err(|e| CliError::Internal(format!("write {}: {e}", events_path.display())))?;

    let sidecar = SynthSidecar {
        meta,
        window,
        generator: generator_name(kind),
        rng: GENERATOR_ID,
        seed: args.seed,
        quantize: args.quantize,
        n_tags: args.tags,
        entries,
    };
    let sidecar_path = artifact_path(&args.out, "synth_meta.json")?;
    write_json(&sidecar_path, &sidecar)?;
    println!(
        "wrote {} ({} events) and {}",
        events_path.display(),
        lines.len(),
        sidecar_path.display()
    );
    Ok(())
}
