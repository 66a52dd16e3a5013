//! `skewring`: validate inputs, decide simplicity with full reports, replay the gallery and
//! run the seeded property corpus.
//!
//! Exit status: 0 valid and complete, 1 invalid input, 2 a cross-check disagreed, 3 a cap was
//! exceeded where a verdict was mandatory.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use skewring::analysis::{analyze_input, render_text, verify_input, AnalyzeOptions};
use skewring::bruteforce::DEFAULT_CAP_BITS;
use skewring::corpus::run_corpus;
use skewring::gallery::gallery;
use skewring::io::parse_input;
use skewring::{Carrier, Error};

#[derive(Parser)]
#[command(name = "skewring", version, about = "Simplicity of skew inverse semigroup rings and Steinberg algebras")]
struct Cli {
    /// Emit JSON instead of `path: value` lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Caps {
    /// Coefficients: gf:p, q or zmod:n. Defaults to the file's carrier, then gf:2.
    #[arg(long)]
    carrier: Option<Carrier>,
    /// Exhaustive scan only when p^dim ≤ 2^cap.
    #[arg(long, default_value_t = DEFAULT_CAP_BITS, value_parser = clap::value_parser!(u32).range(1..=24))]
    bruteforce_cap: u32,
    /// Window of the two-headed snake.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    window: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a semigroup, action or groupoid file.
    Verify { file: PathBuf },
    /// Run every predicate and decide simplicity.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        caps: Caps,
        /// Fail with status 3 when the exhaustive scan does not fit under the cap.
        #[arg(long)]
        require_bruteforce: bool,
    },
    /// Rebuild and analyse a named example.
    Gallery {
        name: String,
        #[command(flatten)]
        caps: Caps,
    },
    /// Generate random partial actions and check every property on each.
    Corpus {
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit<T: Serialize>(value: &T, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", render_text(value));
    }
}

fn status_of(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => 3,
        _ => 1,
    }
}

fn read(file: &PathBuf) -> anyhow::Result<skewring::io::Input> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    Ok(parse_input(&text)?)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let agreed = match cli.command {
        Command::Verify { file } => {
            emit(&verify_input(&read(&file)?)?, cli.json);
            true
        }
        Command::Analyze { file, caps, require_bruteforce } => {
            let input = read(&file)?;
            let carrier = match caps.carrier {
                Some(c) => c,
                None => input.carrier()?.unwrap_or(Carrier::Gf(2)),
            };
            let opts = AnalyzeOptions { carrier, cap_bits: caps.bruteforce_cap, require_bruteforce };
            let report = analyze_input(&input, opts, caps.window.map(|w| w as usize))?;
            emit(&report, cli.json);
            report.agrees()
        }
        Command::Gallery { name, caps } => {
            let report = gallery(&name, caps.carrier, caps.window.map(|w| w as usize), Some(caps.bruteforce_cap))?;
            emit(&report, cli.json);
            report.agrees()
        }
        Command::Corpus { n, seed } => {
            let report = run_corpus(n as usize, seed)?;
            emit(&report, cli.json);
            report.failures.is_empty()
        }
    };
    Ok(if agreed { 0 } else { 2 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => {
            if code == 2 {
                eprintln!("error: a cross-check disagreed; see the report");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(status_of(&e))
        }
    }
}
