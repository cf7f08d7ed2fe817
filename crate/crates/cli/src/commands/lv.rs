//! `spikes lv` — per-train local variation table.

use spikes_core::stats::lv_table;

use super::{common_repr, load_corpus};
use crate::args::LvArgs;
use crate::output::{artifact_path, write_csv, Meta};
use crate::CliResult;

pub fn run(args: &LvArgs) -> CliResult<()> {
    let loaded = load_corpus(&args.common)?;
    let meta = Meta::new("lv", args.common.seed, &common_repr(&args.common));
    let rows = lv_table(&loaded.corpus);
    let path = artifact_path(&args.common.out, "lv.csv")?;
    write_csv(
        &path,
        &meta,
        &["tag", "p_raw", "n_spikes", "lv"],
        rows.iter().map(|r| {
            vec![
                r.tag.clone(),
                r.p_raw.to_string(),
                r.n_spikes.to_string(),
                format!("{}", r.lv),
            ]
        }),
    )?;
    println!("wrote {} ({} trains)", path.display(), rows.len());
    Ok(())
}
