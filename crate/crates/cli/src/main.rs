//! `nsr`: build the near-semiring over `B_n` and report on it.
//!
//! Exit codes: 0 success, 1 a verification check or premise failed,
//! 2 usage error, 3 internal error (bad cache, broken invariant).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use brandt_nsr::congruence::{lookup as lookup_mode, registry as mode_registry};
use clap::builder::PossibleValuesParser;
use clap::{CommandFactory, FromArgMatches, Parser, ValueEnum};

use commands::{exit_code, lookup, registry, RunConfig, MAX_BUILD_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "nsr", version, about = "Affine near-semirings over Brandt semigroups")]
struct Cli {
    /// One of: gen, endos, congruences, rightideals, annihilators, radicals, verify
    #[arg(value_parser = PossibleValuesParser::new(registry().iter().map(|c| c.name())))]
    command: String,

    /// Size parameter of B_n.
    #[arg(long)]
    n: usize,

    /// Compatibility mode for `congruences`.
    #[arg(long, default_value = "twosided",
          value_parser = PossibleValuesParser::new(mode_registry().iter().map(|m| m.name())))]
    mode: String,

    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Load N from this file if valid for --n, otherwise build and write it.
    #[arg(long)]
    cache: Option<PathBuf>,

    /// Permit lattice and radical computations at n = 4.
    #[arg(long)]
    allow_heavy: bool,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let listing: Vec<String> = registry()
        .iter()
        .map(|c| format!("  {:<13} {}", c.name(), c.about()))
        .collect();
    let matches = Cli::command()
        .after_help(format!("Commands:\n{}", listing.join("\n")))
        .get_matches();
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    let command = lookup(&cli.command).expect("clap restricts command names");
    let mode = match lookup_mode(&cli.mode) {
        Ok(m) => m.mode(),
        Err(e) => return usage(&e.to_string()),
    };

    if cli.n == 0 {
        return usage("--n must be at least 1");
    }
    if cli.n > command.max_n() {
        return usage(&format!("{} supports n up to {}", command.name(), command.max_n()));
    }
    if cli.n == MAX_BUILD_N && command.heavy() && !cli.allow_heavy {
        return usage(&format!("{} at n = {} needs --allow-heavy", command.name(), cli.n));
    }

    let cfg = RunConfig {
        n: cli.n,
        mode,
        json: cli.output == Output::Json,
        cache: cli.cache,
    };
    match command.run(&cfg) {
        Ok(outcome) => {
            if cfg.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("reports serialize")
                );
            } else {
                print!("{}", outcome.text);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
