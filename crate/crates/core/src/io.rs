//! Event-line files: `<unix_seconds><TAB><tag>`, one event per line.
//!
//! Lines whose first column is `#` are comments; blank lines are skipped.
//! A `.gz` extension selects gzip decompression on read. Multiplicities are
//! represented by repeated lines, so writing a corpus and ingesting it back
//! reproduces every `p_raw`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use flate2::read::GzDecoder;

use crate::corpus::Corpus;
use crate::error::Result;

/// Raw events parsed from one file, plus the count of unparseable lines.
#[derive(Debug, Default)]
pub struct RawEvents {
    pub events: Vec<(u64, String)>,
    pub rejected: u64,
}

impl RawEvents {
    /// Smallest window containing every event: `[min, max + 1)`.
    pub fn span(&self) -> Option<(u64, u64)> {
        let min = self.events.iter().map(|e| e.0).min()?;
        let max = self.events.iter().map(|e| e.0).max()?;
        Some((min, max + 1))
    }
}

fn parse_line(line: &str) -> Option<(u64, String)> {
    let (time, tag) = line.split_once('\t')?;
    let time: u64 = time.parse().ok()?;
    if tag.is_empty() {
        return None;
    }
    Some((time, tag.to_string()))
}

/// Read raw events from a reader. Malformed lines (no tab, unparseable or
/// negative seconds, empty tag field) are counted, not fatal.
pub fn read_events_from<R: Read>(reader: R) -> Result<RawEvents> {
    let mut raw = RawEvents::default();
    for line in BufReader::new(reader).lines() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        match parse_line(&line) {
            Some(event) => raw.events.push(event),
            None => raw.rejected += 1,
        }
    }
    Ok(raw)
}

/// Read raw events from a path, transparently decompressing `.gz` files.
pub fn read_events(path: &Path) -> Result<RawEvents> {
    let file = File::open(path)?;
    if path.extension().is_some_and(|e| e == "gz") {
        read_events_from(GzDecoder::new(file))
    } else {
        read_events_from(file)
    }
}

/// Write a corpus in the event-line format, time-ordered, one line per raw
/// occurrence (spikes with multiplicity c emit c identical lines).
pub fn write_events<W: Write>(writer: W, corpus: &Corpus) -> Result<()> {
    let mut lines: Vec<(u64, &str, u32)> = Vec::new();
    for train in corpus.trains() {
        for (&t, &c) in train.times().iter().zip(train.counts()) {
            lines.push((t, train.tag(), c));
        }
    }
    lines.sort_unstable();
    let mut w = BufWriter::new(writer);
    for (t, tag, c) in lines {
        for _ in 0..c {
            writeln!(w, "{t}\t{tag}")?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Write a corpus to a file path.
pub fn write_events_path(path: &Path, corpus: &Corpus) -> Result<()> {
    write_events(File::create(path)?, corpus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ingest_events, Window};

    #[test]
    fn parses_lines_and_counts_rejects() {
        let input = "\
# comment line
100\ta
100\ta
105\t#A
oops\tb
106
107\t
108\tb

";
        let raw = read_events_from(input.as_bytes()).unwrap();
        assert_eq!(raw.events.len(), 4);
        assert_eq!(raw.rejected, 3);
        assert_eq!(raw.span(), Some((100, 109)));
    }

    #[test]
    fn empty_input_is_not_an_error() {
        let raw = read_events_from(&b""[..]).unwrap();
        assert!(raw.events.is_empty());
        assert_eq!(raw.span(), None);
    }

    #[test]
    fn write_then_read_round_trips_multiplicities() {
        let (corpus, _) = ingest_events(
            vec![(100u64, "a"), (100, "a"), (105, "a"), (50, "b")],
            Window::new(0, 200).unwrap(),
        );
        let mut buf = Vec::new();
        write_events(&mut buf, &corpus).unwrap();
        let raw = read_events_from(&buf[..]).unwrap();
        let (back, report) = ingest_events(raw.events, Window::new(0, 200).unwrap());
        assert_eq!(report.accepted, 4);
        assert_eq!(back, corpus);
    }

    #[test]
    fn gzip_files_are_transparent() {
        use flate2::write::GzEncoder;
        use flate2::Compression;

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("events.tsv.gz");
        let f = File::create(&path).unwrap();
        let mut enc = GzEncoder::new(f, Compression::default());
        enc.write_all(b"10\tx\n11\ty\n").unwrap();
        enc.finish().unwrap();

        let raw = read_events(&path).unwrap();
        assert_eq!(raw.events.len(), 2);
        assert_eq!(raw.events[0], (10, "x".to_string()));
    }
}
