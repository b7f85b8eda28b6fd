use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use wsn_schedex::bench::{
    run_benchmark, run_scenario, summarize, write_records, BenchConfig, Extension, OutputFormat,
};
use wsn_schedex::channel::load_scenario;
use wsn_schedex::scheduling::SchedulerKind;

/// Build schedule frames over generated topologies and report construction
/// time and frame size.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Args {
    /// Network sizes (transceiver counts).
    #[arg(long, value_delimiter = ',', default_values_t = [50, 200])]
    sizes: Vec<usize>,

    /// Topologies per size.
    #[arg(long, default_value_t = 10)]
    topologies: usize,

    /// End-to-end reliability demands.
    #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.999, 0.99999])]
    rhos: Vec<f64>,

    /// Scheduler kinds: node, level, dedicated, shared.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "node,level,dedicated,shared"
    )]
    kinds: Vec<SchedulerKind>,

    /// Extensions: none, schedex, incrementer.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "none,schedex,incrementer"
    )]
    extensions: Vec<Extension>,

    /// Master seed.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Monte-Carlo trials per record (0 disables).
    #[arg(long, default_value_t = 0)]
    trials: u64,

    #[arg(long, default_value = "csv")]
    format: OutputFormat,

    /// Write records here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Run on a saved scenario instead of generating topologies.
    #[arg(long)]
    scenario: Option<PathBuf>,

    /// Builds per cell; the fastest is reported.
    #[arg(long, default_value_t = 1)]
    repeats: usize,

    /// Run cells sequentially for cleaner timings.
    #[arg(long)]
    timing_strict: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let cfg = BenchConfig {
        sizes: args.sizes,
        topologies: args.topologies,
        rhos: args.rhos,
        kinds: args.kinds,
        extensions: args.extensions,
        seed: args.seed,
        trials: args.trials,
        timing_strict: args.timing_strict,
        repeats: args.repeats,
        ..BenchConfig::default()
    };
    let records = match &args.scenario {
        Some(path) => load_scenario(path).and_then(|s| run_scenario(&cfg, &s)),
        None => run_benchmark(&cfg),
    };
    let records = match records {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &args.out {
        Some(path) => File::create(path)
            .map_err(Into::into)
            .and_then(|f| write_records(&records, args.format, BufWriter::new(f))),
        None => write_records(&records, args.format, io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let summary = summarize(&records);
    let _ = writeln!(io::stderr(), "{summary}");
    for r in records.iter().filter(|r| r.failed()) {
        eprintln!(
            "failed: size {} seed {} {} {} rho {:?}: {}",
            r.size,
            r.seed,
            r.kind,
            r.extension,
            r.rho,
            r.error.as_deref().unwrap_or("")
        );
    }
    if summary.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
