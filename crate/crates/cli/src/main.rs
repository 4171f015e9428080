//! `thompson`: reduce words, classify elements, draw diagrams and measure
//! balls in the Cayley graph of Thompson's group F.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thompson_core::folner::DEFAULT_ELEMENT_LIMIT;
use thompson_core::ClassLabel;

#[derive(Parser, Debug)]
#[command(name = "thompson", version, about = "Normal forms, diagrams and divisor classes in Thompson's group F")]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of a word.
    Reduce { word: String },

    /// Print the class M1..M7 of an element.
    Classify { word: String },

    /// Print the canonical diagram of an element as `top|bottom`.
    Diagram {
        word: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },

    /// Enumerate the ball of radius n and report its density.
    Ball {
        n: usize,
        /// Density rows for every radius 0..=n.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
        limit: usize,
    },

    /// Density of the ball of radius n, optionally after removing classes.
    Density {
        n: usize,
        #[arg(long, value_delimiter = ',', value_parser = parse_class)]
        drop: Vec<ClassLabel>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
        limit: usize,
    },

    /// Class counts over the ball of radius n.
    Histogram {
        n: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
        limit: usize,
    },

    /// Exhaustive checks over a ball; exits nonzero if anything fails.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        #[arg(long)]
        radius: usize,
        /// lemma-del: number of random instances (default 1000).
        /// partition, closures: extra random elements checked besides the ball.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Partition,
    Closures,
    LemmaDel,
}

fn parse_class(s: &str) -> Result<ClassLabel, String> {
    s.parse().map_err(|e: thompson_core::ClassifyError| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                e.exit();
            }
            // first paragraph of clap's message, minus the usage block
            let message = e.to_string();
            let summary: Vec<&str> = message
                .lines()
                .take_while(|l| !l.is_empty() && !l.starts_with("Usage:"))
                .map(str::trim)
                .collect();
            let summary = summary.join(" ");
            let summary = summary.strip_prefix("error: ").unwrap_or(&summary);
            eprintln!("error: usage: {summary}");
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            let chain: Vec<String> = e.chain().map(|c| c.to_string()).collect();
            eprintln!("error: {}", chain.join(": ").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
