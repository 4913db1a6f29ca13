//! `permgraph`: recognize, build, classify and count permutation graphs.
//!
//! Exit status is 0 for success or a yes verdict, 1 for a no verdict, and 2
//! for any error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

#[derive(Parser, Debug)]
#[command(
    name = "permgraph",
    version,
    about = "Permutation graphs: recognition, boxcar graphs, and exact counts"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format for graphs.
    #[arg(long, value_enum, global = true, default_value_t = Format::Graph6)]
    pub format: Format,
    /// Emit a JSON document instead of text (same as `--format json`).
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Largest graph order a command will search or generate.
    #[arg(long, global = true, env = "PERMGRAPH_MAX_N", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: Option<u32>,
}

impl Global {
    pub fn json(&self) -> bool {
        self.json || self.format == Format::Json
    }

    pub fn max_n(&self, default: usize) -> usize {
        self.max_n.map_or(default, |n| n as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a graph is a permutation graph.
    Check {
        /// Edge list or graph6 file; stdin when absent or `-`.
        input: Option<PathBuf>,
        /// Also print a realizer and the vertex-to-position map.
        #[arg(long)]
        certificate: bool,
    },
    /// Print the inversion graph of a permutation such as `[2,4,1,3]`.
    FromPerm { permutation: String },
    /// Build the boxcar graph of a sequence such as `2,3,2` (`-` for none).
    Boxcar {
        sequence: String,
        /// Print a realizer instead of the graph.
        #[arg(long, conflicts_with_all = ["hamiltonian_path", "spec"])]
        realizer: bool,
        /// Print a Hamiltonian path (1-based) instead of the graph.
        #[arg(long, conflicts_with = "spec")]
        hamiltonian_path: bool,
        /// Print the path blow-up spec instead of the graph.
        #[arg(long)]
        spec: bool,
    },
    /// Classify a connected 3-regular graph.
    Classify { input: Option<PathBuf> },
    /// Build the r-regular permutation graph of order 2nr + r + 1.
    Family {
        r: usize,
        n: usize,
        /// Print a realizer instead of the graph.
        #[arg(long)]
        realizer: bool,
    },
    /// Count or list connected 3-regular permutation graphs for `N` or `A..B`.
    Enumerate {
        range: String,
        /// Print the count table (the default).
        #[arg(long, conflicts_with_all = ["list", "sequences", "compositions"])]
        count: bool,
        /// Print every graph.
        #[arg(long, conflicts_with_all = ["sequences", "compositions"])]
        list: bool,
        /// Print the canonical boxcar sequences.
        #[arg(long, conflicts_with = "compositions")]
        sequences: bool,
        /// Print t(x), compositions of x into 2s and 3s, over the range.
        #[arg(long)]
        compositions: bool,
    },
    /// List every connected 3-regular graph on N vertices (N <= 12).
    Census {
        n: usize,
        /// Keep only graphs of this kind.
        #[arg(long, value_enum)]
        filter: Option<CensusFilter>,
    },
    /// Compare the recurrence with generation and the census.
    Crosscheck {
        n_max: usize,
        #[arg(long, value_enum, default_value_t = RecognizerArg::Realizer)]
        recognizer: RecognizerArg,
    },
    /// Derive the forbidden induced subgraphs with maximum degree 3.
    Catalog {
        #[arg(default_value_t = 8)]
        max_order: usize,
    },
    /// Expand a blow-up spec (`graph6 K2 I2 ...`) read from a file or stdin.
    Blowup { input: Option<PathBuf> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusFilter {
    Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RecognizerArg {
    Realizer,
    Catalog,
}

fn emit(global: &Global, text: &str) -> io::Result<()> {
    match &global.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.global, &cli.command) {
        Ok(out) => {
            let text = if cli.global.json() {
                let mut s = serde_json::to_string_pretty(&out.json).expect("JSON values serialize");
                s.push('\n');
                s
            } else {
                out.text
            };
            if let Err(e) = emit(&cli.global, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.affirmative { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
