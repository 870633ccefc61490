//! Invocations shared by the golden and acceptance targets.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixtures() -> PathBuf {
  Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn run(args: &[&str]) -> Output {
  Command::new(env!("CARGO_BIN_EXE_wmorse"))
    .args(args)
    .current_dir(fixtures())
    .env_remove("WMORSE_MAX_DIM")
    .output()
    .expect("binary runs")
}

/// Stdout on success, otherwise the exit status followed by stderr.
pub fn transcript(out: &Output) -> String {
  if out.status.success() {
    String::from_utf8(out.stdout.clone()).unwrap()
  } else {
    format!("exit {}\n{}", out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stderr))
  }
}

pub const CASES: &[(&str, &[&str])] = &[
  ("homology_k0", &["homology", "k0.json"]),
  ("homology_k0_json", &["homology", "k0.json", "--json"]),
  ("homology_hollow_triangle", &["homology", "hollow_triangle.json"]),
  ("homology_constant_triangle", &["homology", "triangle.json", "--constant-weight", "3"]),
  ("homology_max_dim", &["homology", "k0.json", "--max-dim", "0"]),
  ("homology_empty", &["homology", "empty.json"]),
  ("homology_indivisible", &["homology", "indivisible.json"]),
  ("homology_not_closed", &["homology", "not_closed.json"]),
  ("homology_malformed", &["homology", "malformed.json"]),
  ("homology_weighted_constant", &["homology", "k0.json", "--constant-weight", "2"]),
  ("collapse_k0_steps", &["collapse", "k0.json", "--steps", "k0_steps.json"]),
  ("collapse_k0_verify", &["collapse", "k0.json", "--steps", "k0_steps.json", "--verify"]),
  ("collapse_k0_json", &["collapse", "k0.json", "--steps", "k0_steps.json", "--verify", "--json"]),
  ("collapse_simplex_greedy", &["collapse", "simplex2.json", "--auto-greedy", "--verify"]),
  ("collapse_bad_steps", &["collapse", "k0.json", "--steps", "bad_steps.json"]),
  ("morse_xyyy_classify", &["morse", "xyyy.json", "xyyy_morse.json", "--classify"]),
  ("morse_xyyy_collapse", &["morse", "xyyy.json", "xyyy_morse.json", "--collapse", "2", "5"]),
  ("morse_xyyy_collapse_json", &["morse", "xyyy.json", "xyyy_morse.json", "--collapse", "2", "5", "--json"]),
  (
    "morse_homopolymer_collapse",
    &["morse", "homopolymer4.json", "homopolymer4_morse.json", "--collapse", "1", "4"],
  ),
  ("morse_dimension_classify", &["morse", "k0.json", "k0_dim.json", "--classify"]),
  ("morse_invalid", &["morse", "k0.json", "k0_invalid.json", "--classify"]),
  (
    "morse_window",
    &["morse", "hollow_triangle_even.json", "hollow_triangle_morse.json", "--window", "1,2", "2", "4"],
  ),
  (
    "morse_window_json",
    &[
      "morse",
      "hollow_triangle_even.json",
      "hollow_triangle_morse.json",
      "--window",
      "1,2",
      "2",
      "4",
      "--json",
    ],
  ),
  (
    "morse_window_not_simple",
    &["morse", "hollow_triangle.json", "hollow_triangle_morse.json", "--window", "1,2", "2", "4"],
  ),
  (
    "morse_window_extra_critical",
    &["morse", "hollow_triangle_even.json", "hollow_triangle_morse.json", "--window", "1,2", "-1", "4"],
  ),
  (
    "morse_window_vertex",
    &["morse", "homopolymer4.json", "homopolymer4_morse.json", "--window", "0", "0", "4"],
  ),
  ("sequence_ctc", &["sequence", "CTC", "--weights", "A=1,C=2,G=3,T=4", "--woc-type", "2"]),
  ("sequence_gtg", &["sequence", "GTG", "--weights", "A=1,C=2,G=3,T=4", "--woc-type", "2"]),
  ("sequence_aaa", &["sequence", "AAA", "--weights", "A=1,C=2,G=3,T=4", "--woc-type", "2"]),
  ("sequence_ctc_alt", &["sequence", "CTC", "--weights", "A=1,C=2,G=1,T=3"]),
  ("sequence_cct_alt", &["sequence", "CCT", "--weights", "A=1,C=2,G=1,T=3"]),
  (
    "sequence_xyyy",
    &["sequence", "xyyy", "--alphabet", "custom:xy", "--weights", "x=6,y=10", "--woc-type", "3"],
  ),
  ("sequence_fasta", &["sequence", "--fasta", "codons.fasta", "--weights", "A=1,C=2,G=3,T=4"]),
  ("sequence_fasta_json", &["sequence", "--fasta", "codons.fasta", "--weights", "A=1,C=2,G=3,T=4", "--json"]),
  ("sequence_unknown_symbol", &["sequence", "CTX", "--weights", "A=1,C=2,G=3,T=4"]),
  ("sequence_unweighted", &["sequence", "CTC", "--weights", "A=1,C=2"]),
  ("sequence_zero_weight", &["sequence", "CTC", "--weights", "A=1,C=0,G=3,T=4"]),
];

pub fn golden_dir() -> PathBuf {
  Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[allow(dead_code)]
/// Names of cases whose transcript differs from its golden file.
pub fn golden_mismatches() -> Vec<String> {
  CASES
    .iter()
    .filter(|(name, args)| {
      let want = std::fs::read_to_string(golden_dir().join(format!("{name}.out"))).unwrap_or_default();
      transcript(&run(args)) != want
    })
    .map(|(name, _)| name.to_string())
    .collect()
}
