mod commands;
mod error;
mod formats;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use commands::{MorseMode, Report, SequenceArgs};
use error::CliError;

/// Weighted homology, collapses and discrete Morse theory over the integers.
#[derive(Parser)]
#[command(name = "wmorse", version)]
struct Cli {
  /// Emit a single JSON document instead of text.
  #[arg(long, global = true)]
  json: bool,

  /// Highest homology degree to compute.
  #[arg(long, global = true, env = "WMORSE_MAX_DIM")]
  max_dim: Option<usize>,

  #[command(subcommand)]
  command: Command,
}

#[derive(Subcommand)]
enum Command {
  /// Weighted homology of a complex.
  Homology {
    complex: PathBuf,
    /// Treat the listing as unweighted generators with every weight equal to A.
    #[arg(long, value_name = "A", allow_negative_numbers = true)]
    constant_weight: Option<String>,
  },

  /// Run elementary collapses and report whether each is guaranteed to preserve homology.
  #[command(group(ArgGroup::new("plan").required(true).args(["steps", "auto_greedy"])))]
  Collapse {
    complex: PathBuf,
    /// JSON file listing free faces in order.
    #[arg(long)]
    steps: Option<PathBuf>,
    /// Collapse greedily until no free face remains.
    #[arg(long)]
    auto_greedy: bool,
    /// Recompute homology after every step.
    #[arg(long)]
    verify: bool,
  },

  /// Check a discrete Morse function and use it.
  #[command(group(ArgGroup::new("mode").required(true).args(["classify", "collapse", "window"])))]
  Morse {
    complex: PathBuf,
    values: PathBuf,
    /// List critical and non w-simple simplices.
    #[arg(long)]
    classify: bool,
    /// Collapse K(B) onto K(A).
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
    collapse: Option<Vec<String>>,
    /// Certify the single critical simplex ALPHA (e.g. 0,1,2) in (A, B].
    #[arg(long, num_args = 3, value_names = ["ALPHA", "A", "B"], allow_negative_numbers = true)]
    window: Option<Vec<String>>,
  },

  /// Homology fingerprint of the weighted order complex of a sequence.
  #[command(group(ArgGroup::new("input").required(true).args(["sequence", "fasta"])))]
  Sequence {
    sequence: Option<String>,
    #[arg(long)]
    fasta: Option<PathBuf>,
    /// dna, rna, bin, hex or custom:SYMBOLS
    #[arg(long, default_value = "dna")]
    alphabet: String,
    /// Letter weights such as A=1,C=2,G=3,T=4.
    #[arg(long)]
    weights: String,
    /// Weighting rule, 1 to 4.
    #[arg(long, default_value = "2")]
    woc_type: String,
    /// Also write the weighted complex as a JSON document.
    #[arg(long, value_name = "PATH")]
    emit_complex: Option<PathBuf>,
  },
}

fn run(cli: Cli) -> anyhow::Result<Report> {
  let max_dim = cli.max_dim;
  match cli.command {
    Command::Homology { complex, constant_weight } => {
      commands::homology_cmd(&complex, constant_weight.as_deref(), max_dim)
    }
    Command::Collapse { complex, steps, verify, .. } => {
      commands::collapse_cmd(&complex, steps.as_deref(), verify, max_dim)
    }
    Command::Morse { complex, values, collapse, window, .. } => {
      let mode = match (collapse, window) {
        (Some(ab), _) => MorseMode::Collapse(ab[0].clone(), ab[1].clone()),
        (None, Some(w)) => MorseMode::Window(w[0].clone(), w[1].clone(), w[2].clone()),
        (None, None) => MorseMode::Classify,
      };
      commands::morse_cmd(&complex, &values, mode, max_dim)
    }
    Command::Sequence { sequence, fasta, alphabet, weights, woc_type, emit_complex } => {
      let args = SequenceArgs { sequence, fasta, alphabet, weights, woc_type, emit_complex };
      commands::sequence_cmd(&args, max_dim)
    }
  }
}

fn main() -> ExitCode {
  let cli = Cli::parse();
  let json = cli.json;
  match run(cli) {
    Ok(report) => {
      let mut out = std::io::stdout().lock();
      let written = if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("serializable"))
      } else {
        out.write_all(report.text.as_bytes())
      };
      if written.is_err() {
        return ExitCode::from(2);
      }
      ExitCode::SUCCESS
    }
    Err(e) => {
      let err = match e.downcast::<CliError>() {
        Ok(c) => c,
        Err(other) => CliError::input("IoError", format!("{other:#}")),
      };
      eprintln!("{}", err.to_json());
      ExitCode::from(err.exit as u8)
    }
  }
}
