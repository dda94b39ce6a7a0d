//! Command-line front end for the chordless graph library.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Exit statuses shared by every subcommand.
pub mod exit {
    pub const OK: u8 = 0;
    /// A check ran and the answer is negative.
    pub const NEGATIVE: u8 = 1;
    /// The input graph has a chord.
    pub const NOT_CHORDLESS: u8 = 2;
    /// Bad command line or malformed input file.
    pub const USAGE: u8 = 64;
    /// Well-formed input that the command cannot accept.
    pub const DATA: u8 = 65;
    /// An input file could not be read.
    pub const NO_INPUT: u8 = 66;
    /// A bug: the algorithm broke one of its own invariants.
    pub const SOFTWARE: u8 = 70;
}

#[derive(Parser, Debug)]
#[command(
    name = "chordless",
    version,
    about = "Optimal acyclic edge coloring of chordless graphs"
)]
pub struct Cli {
    /// Print `key=value` records instead of human-oriented text.
    #[arg(long, global = true)]
    pub machine: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report whether a graph is chordless and whether it is 2-sparse.
    Check {
        /// Graph file, or `-` for standard input.
        graph: String,
    },
    /// Print an optimal acyclic edge coloring.
    Color { graph: String },
    /// Check that a coloring is proper and acyclic.
    Verify { graph: String, coloring: String },
    /// Partition the edges into the fewest linear forests.
    Arboricity { graph: String },
    /// Compute the acyclic chromatic index by exhaustive search.
    Oracle {
        graph: String,
        /// Largest palette to try.
        #[arg(long, default_value_t = 12)]
        max_k: u32,
        /// Refuse graphs with more edges than this.
        #[arg(long, default_value_t = chordless::oracle::DEFAULT_MAX_EDGES)]
        max_edges: usize,
    },
    /// Print the split the coloring algorithm would use on a 2-connected graph.
    Split {
        graph: String,
        /// Also look for qualifying splits with a smaller X on the same cutset.
        #[arg(long)]
        slow_checks: bool,
    },
    /// Print a random connected chordless graph.
    Gen {
        /// Number of vertices.
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the coloring of generated graphs of the given sizes.
    Bench {
        /// Ascending vertex counts.
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            });
        }
    };
    let mut stdout = std::io::stdout().lock();
    match commands::run(&cli, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("chordless: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
