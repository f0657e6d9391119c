use std::io::Write;
use std::path::PathBuf;

use clap::Parser;
use mixoptic_cli::{execute, Action, Request};

/// Apply composed optics to JSON documents.
#[derive(Parser)]
#[command(name = "mixoptic", version)]
struct Cli {
    action: Action,
    /// Dot-separated optic expression, e.g. `each.address.city`.
    #[arg(long)]
    optic: String,
    /// Input document; standard input when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// JSON value for set/review/classify, function name for over/aggregate.
    #[arg(long, allow_hyphen_values = true)]
    arg: Option<String>,
    /// JSON file of extra optic names.
    #[arg(long)]
    defs: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let req = Request {
        action: cli.action,
        optic: cli.optic,
        input: cli.input,
        arg: cli.arg,
        defs: cli.defs,
    };
    let out = execute(&req, &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
