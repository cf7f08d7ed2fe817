//! `spikes zipf` — popularity rank table and log-binned density.

use spikes_core::stats::{popularity_pdf, share_with_p_below, zipf_table};

use super::{common_repr, load_corpus};
use crate::args::ZipfArgs;
use crate::output::{artifact_path, write_csv, Meta};
use crate::{CliError, CliResult};

pub fn run(args: &ZipfArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let corpus = &loaded.corpus;
    let config = format!(
        "{} bins_per_decade={}",
        common_repr(&args.common),
        args.bins_per_decade
    );
    let meta = Meta::new("zipf", args.common.seed, &config);

    let table = zipf_table(corpus);
    let table_path = artifact_path(&args.common.out, "zipf.csv")?;
    write_csv(
        &table_path,
        &meta,
        &["rank", "tag", "p_raw"],
        table
            .iter()
            .map(|e| vec![e.rank.to_string(), e.tag.clone(), e.p_raw.to_string()]),
    )?;

    let pdf_path = artifact_path(&args.common.out, "popularity_pdf.csv")?;
    if corpus.is_empty() {
        write_csv(
            &pdf_path,
            &meta,
            &["bin_lo", "bin_hi", "density", "count"],
            std::iter::empty(),
        )?;
        println!("empty corpus: wrote header-only tables");
        return Ok(());
    }
    let pdf = popularity_pdf(corpus, args.bins_per_decade)
        .map_err(|e| CliError::data_stage("popularity", e))?;
    write_csv(
        &pdf_path,
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

    println!(
        "{} tags; share p=1: {:.4}; share p<5: {:.4}",
        table.len(),
        share_with_p_below(&table, 2),
        share_with_p_below(&table, 5)
    );
    Ok(())
}
