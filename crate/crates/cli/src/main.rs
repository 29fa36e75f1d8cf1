use std::io::Write;

use clap::Parser;
use skewroot_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli);
    if let Some(err) = &report.error {
        eprintln!("skewroot: {err}");
    }
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{}", report.render(cli.format).trim_end());
    std::process::exit(report.exit_code());
}
