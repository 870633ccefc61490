use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};

use proptest::prelude::*;

static COUNTER: AtomicUsize = AtomicUsize::new(0);

fn scratch(tag: &str) -> PathBuf {
  let n = COUNTER.fetch_add(1, Ordering::Relaxed);
  std::env::temp_dir().join(format!("wmorse-{}-{tag}-{n}.json", std::process::id()))
}

fn wmorse(args: &[&str]) -> Vec<u8> {
  let out =
    Command::new(env!("CARGO_BIN_EXE_wmorse")).args(args).env_remove("WMORSE_MAX_DIM").output().unwrap();
  assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
  out.stdout
}

/// Sequence report, emitted document, and the homology report of that document.
fn emit_and_reingest(seq: &str, extra: &[&str]) -> (Vec<u8>, Vec<u8>, Vec<u8>) {
  let path = scratch("emit");
  let p = path.to_str().unwrap();
  let mut args = vec!["sequence", seq, "--emit-complex", p];
  args.extend_from_slice(extra);
  let direct = wmorse(&args);
  let doc = std::fs::read(&path).unwrap();
  let mut again = vec!["homology", p];
  again.extend(extra.iter().filter(|a| a.starts_with("--max-dim")).copied());
  let reingested = wmorse(&again);
  std::fs::remove_file(&path).unwrap();
  (direct, doc, reingested)
}

#[test]
fn codons_round_trip() {
  for seq in ["CTC", "GTG", "AAA", "CCT", "ACGTAC"] {
    for t in ["1", "2", "3", "4"] {
      let (direct, _, back) = emit_and_reingest(seq, &["--weights", "A=1,C=2,G=3,T=4", "--woc-type", t]);
      assert_eq!(direct, back, "{seq} type {t}");
    }
  }
}

#[test]
fn single_letters_have_nothing_to_emit() {
  let path = scratch("single");
  let out = Command::new(env!("CARGO_BIN_EXE_wmorse"))
    .args(["sequence", "A", "--weights", "A=1", "--emit-complex", path.to_str().unwrap()])
    .output()
    .unwrap();
  assert_eq!(out.status.code(), Some(2));
  assert!(String::from_utf8_lossy(&out.stderr).contains("EmptyComplex"));
  assert!(!path.exists());
  assert_eq!(wmorse(&["sequence", "A", "--weights", "A=1"]), b"empty complex\n");
}

#[test]
fn emitted_documents_are_stable() {
  let args = ["--alphabet", "custom:xy", "--weights", "x=6,y=10", "--woc-type", "3"];
  let (_, first, _) = emit_and_reingest("xyyy", &args);
  let (_, second, _) = emit_and_reingest("xyyy", &args);
  assert_eq!(first, second);
  let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/xyyy.json");
  assert_eq!(first, std::fs::read(fixture).unwrap());
}

#[test]
fn fasta_output_keeps_input_order() {
  let path = scratch("fasta");
  let names: Vec<String> = (0..24).map(|i| format!("r{i:02}")).collect();
  let bodies = ["ACGTA", "A", "CCCCCC", "GATTACA", "TTAGGC", "CGCG"];
  let mut text = String::new();
  for (i, n) in names.iter().enumerate() {
    text += &format!(">{n}\n{}\n", bodies[i % bodies.len()]);
  }
  std::fs::write(&path, text).unwrap();
  let weights = ["--weights", "A=1,C=2,G=3,T=4"];
  let batch = wmorse(&[&["sequence", "--fasta", path.to_str().unwrap()][..], &weights].concat());
  std::fs::remove_file(&path).unwrap();

  let mut expected = Vec::new();
  for (i, n) in names.iter().enumerate() {
    expected.extend(format!(">{n}\n").into_bytes());
    expected.extend(wmorse(&[&["sequence", bodies[i % bodies.len()]][..], &weights].concat()));
  }
  assert_eq!(String::from_utf8(batch).unwrap(), String::from_utf8(expected).unwrap());
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(24))]

  #[test]
  fn random_sequences_round_trip(
    seq in "[ACGT]{2,6}",
    w in prop::collection::vec(1u32..30, 4),
    t in 1u8..=4,
    cap in prop::option::of(0usize..3),
  ) {
    let weights = format!("A={},C={},G={},T={}", w[0], w[1], w[2], w[3]);
    let t = t.to_string();
    let cap = cap.map(|c| format!("--max-dim={c}"));
    let mut extra = vec!["--weights", &weights, "--woc-type", &t];
    if let Some(c) = &cap {
      extra.push(c);
    }
    let (direct, _, back) = emit_and_reingest(&seq, &extra);
    prop_assert_eq!(direct, back);
  }
}
