//! `spikes corr` — split-half persistence of the local variation.

use spikes_core::stats::split_half_correlation;

use super::{bound_cell, common_repr, load_corpus};
use crate::args::CorrArgs;
use crate::output::{artifact_path, opt_cell, write_csv, Meta};
use crate::CliResult;

pub fn run(args: &CorrArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let scheme = args.common.scheme()?;
    let meta = Meta::new("corr", args.common.seed, &common_repr(&args.common));

    let summaries = split_half_correlation(&loaded.corpus, &scheme);
    let path = artifact_path(&args.common.out, "splithalf.csv")?;
    write_csv(
        &path,
        &meta,
        &["label", "lo", "hi", "mean_p", "n_pairs", "r"],
        summaries.iter().map(|s| {
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
    println!("wrote {}", path.display());
    Ok(())
}
