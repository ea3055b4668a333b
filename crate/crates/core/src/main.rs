use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use oretower::cli::{run_file, run_suite, Options};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Structured,
}

/// Runs the checks of a task file (or a built-in suite) and prints a TAP-style report.
#[derive(Parser, Debug)]
#[command(name = "oretower", version)]
struct Args {
    /// Task file to run.
    #[arg(required_unless_present = "suite", conflicts_with = "suite")]
    file: Option<PathBuf>,

    /// Built-in suite: paper-all or paper-quick.
    #[arg(long)]
    suite: Option<String>,

    #[arg(long, value_enum, default_value = "plain")]
    format: Format,

    /// Default center-search bounds, e.g. `skew=2,coeff=3`.
    #[arg(long)]
    bounds: Option<String>,

    /// Seed for sampled identities.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Worker threads (0 = available parallelism).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut opts = Options {
        seed: args.seed,
        threads: args.threads,
        ..Options::default()
    };
    if let Some(b) = &args.bounds {
        if let Err(e) = opts.set_bounds(b) {
            eprintln!("error: --bounds: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match (&args.suite, &args.file) {
        (Some(name), _) => run_suite(name, &opts),
        (None, Some(path)) => run_file(path, &opts),
        (None, None) => unreachable!("clap requires a file or a suite"),
    };
    match report {
        Ok(r) => {
            let text = match args.format {
                Format::Plain => r.render_plain(),
                Format::Structured => r.render_structured(),
            };
            print!("{text}");
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
