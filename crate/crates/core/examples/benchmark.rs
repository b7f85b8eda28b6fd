//! A small benchmark run through the library API, summarized the same way
//! as the command-line tool.

use wsn_schedex::bench::{run_benchmark, summarize, write_csv, BenchConfig};

fn main() -> wsn_schedex::Result<()> {
    let cfg = BenchConfig {
        sizes: vec![50],
        topologies: 3,
        timing_strict: true,
        ..BenchConfig::default()
    };
    let records = run_benchmark(&cfg)?;
    println!("{}", summarize(&records));
    write_csv(&records[..4], std::io::stdout().lock())?;
    Ok(())
}
