use clap::error::ErrorKind;
use clap::Parser;

use spikes_cli::args::Cli;
use spikes_cli::dispatch;

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::try_parse() {
        Err(err) => {
            let kind = err.kind();
            let _ = err.print();
            if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                0
            } else {
                1
            }
        }
        Ok(cli) => match dispatch(cli) {
            Ok(()) => 0,
            Err(err) => {
                eprintln!("{err}");
                err.exit_code()
            }
        },
    }
}
