// Copyright 2026 The stabilizer-locality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `stabloc`: classify logical operators of a stabilizer code by locality.
//!
//! Exit status: 0 success, 1 a property check failed, 2 bad input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "stabloc",
    version,
    about = "Locality of logical operators in stabilizer codes"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Oracle budget override, `subset=N`, `statevector=N` or `distance=N`.
    #[arg(long = "budget", value_name = "KEY=VALUE", global = true)]
    budget: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a reference code file to standard output.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Classify logical operators for a bipartition.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        region: String,
    },
    /// Entropy bounds, and optionally the entropy of one ground state.
    Entropy {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        region: String,
        /// A fixed logical operator; repeat once per logical qubit.
        #[arg(long = "fixed", value_name = "PAULI")]
        fixed: Vec<String>,
    },
    /// Check the count identities and oracle agreement.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        region: Option<String>,
        /// Check this many random regions instead of one.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force code distance and the singleton bound.
    Distance {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    Toric {
        #[arg(long = "L", short = 'L')]
        l: usize,
    },
    Repetition {
        #[arg(long, short)]
        n: usize,
    },
    FiveQubit,
}

#[derive(Args, Debug)]
struct Source {
    /// Code file.
    #[arg(required_unless_present = "gen_toric", conflicts_with = "gen_toric")]
    file: Option<PathBuf>,
    /// Use the generated Toric code of this size instead of a file.
    #[arg(long = "gen-toric", value_name = "L")]
    gen_toric: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match commands::parse_budget(&cli.budget) {
        Ok(b) => b,
        Err(e) => return commands::fail(e),
    };
    let fmt = cli.format;
    let result = match cli.command {
        Command::Gen { kind } => commands::gen(match kind {
            GenKind::Toric { l } => commands::GenRequest::Toric(l),
            GenKind::Repetition { n } => commands::GenRequest::Repetition(n),
            GenKind::FiveQubit => commands::GenRequest::FiveQubit,
        }),
        Command::Classify { source, region } => {
            commands::load(&source.file, source.gen_toric).and_then(|code| commands::classify(&code, &region, fmt))
        }
        Command::Entropy { source, region, fixed } => commands::load(&source.file, source.gen_toric)
            .and_then(|code| commands::entropy(&code, &region, &fixed, fmt)),
        Command::Verify {
            source,
            region,
            sweep,
            seed,
        } => commands::load(&source.file, source.gen_toric).and_then(|code| match (region, sweep) {
            (_, Some(count)) => commands::sweep(&code, count, seed, &budget, fmt),
            (Some(region), None) => commands::verify(&code, &region, &budget, fmt),
            (None, None) => unreachable!("clap requires one of --region and --sweep"),
        }),
        Command::Distance { source } => {
            commands::load(&source.file, source.gen_toric).and_then(|code| commands::distance(&code, &budget, fmt))
        }
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => commands::fail(e),
    }
}
