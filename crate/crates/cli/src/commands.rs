use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde_json::{json, Number, Value};
use wmorse::collapse::{collapse_sequence, greedy_collapse, CollapseTrace};
use wmorse::homology::{homology, HomologyGroup};
use wmorse::morse::{
  classify, critical_window, morse_collapse, parse_value, CollapseCertificate, WindowCertificate,
};
use wmorse::sequence::{build_woc, Alphabet, LetterWeights, Sequence, WocType};
use wmorse::{BigInt, BigRational, Simplex, WeightedComplex};

use crate::error::CliError;
use crate::formats::{read_json, ComplexDocument, MorseDocument, StepsDocument};

/// Text and JSON renderings of one command's result.
pub struct Report {
  pub text: String,
  pub json: Value,
}

fn big(n: &BigInt) -> Value {
  Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn rational(q: &BigRational) -> Value {
  if q.is_integer() {
    big(q.numer())
  } else {
    json!(q.to_string())
  }
}

fn cells(k: &WeightedComplex) -> String {
  if k.is_empty() {
    return "(empty)".into();
  }
  k.complex().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn cells_json(k: &WeightedComplex) -> Value {
  Value::Array(k.complex().iter().map(|s| json!(s.vertices())).collect())
}

pub fn homology_text(h: &[HomologyGroup]) -> String {
  h.iter().enumerate().map(|(k, g)| format!("H{k} = {g}\n")).collect()
}

fn homology_inline(h: &[HomologyGroup]) -> String {
  h.iter().enumerate().map(|(k, g)| format!("H{k} = {g}")).collect::<Vec<_>>().join("; ")
}

pub fn homology_json(h: &[HomologyGroup]) -> Value {
  Value::Array(
    h.iter()
      .enumerate()
      .map(|(k, g)| json!({"dim": k, "free_rank": g.free_rank, "torsion": g.torsion.iter().map(big).collect::<Vec<_>>()}))
      .collect(),
  )
}

/// Homology padded with zero groups up to `top`.
fn padded(k: &WeightedComplex, top: usize) -> Vec<HomologyGroup> {
  let mut h = homology(k, Some(top));
  h.resize(top + 1, HomologyGroup::zero());
  h
}

fn cap(k: &WeightedComplex, max_dim: Option<usize>) -> usize {
  let d = k.dim().unwrap_or(0);
  max_dim.map_or(d, |m| m.min(d))
}

pub fn load_complex(path: &Path, constant: Option<&str>) -> Result<WeightedComplex> {
  let doc: ComplexDocument = read_json(path)?;
  let k = match constant {
    Some(a) => {
      let a: BigInt = a
        .parse()
        .map_err(|_| CliError::input("ParseError", format!("constant weight {a:?} is not an integer")))?;
      if a == BigInt::from(0) {
        return Err(CliError::input("ParseError", "constant weight must be nonzero".into()).into());
      }
      doc.into_constant(a)?
    }
    None => doc.into_complex()?,
  };
  Ok(k)
}

pub fn homology_cmd(path: &Path, constant: Option<&str>, max_dim: Option<usize>) -> Result<Report> {
  let k = load_complex(path, constant)?;
  let h = homology(&k, max_dim);
  Ok(Report { text: homology_text(&h), json: json!({ "homology": homology_json(&h) }) })
}

fn trace_report(trace: &CollapseTrace, text: &mut String) -> Value {
  let mut steps = Vec::new();
  for (i, (step, v)) in trace.steps.iter().enumerate() {
    writeln!(
      text,
      "step {}: face {} coface {} w(face)={} w(coface)={} {}",
      i + 1,
      step.face,
      step.coface,
      v.face_weight,
      v.coface_weight,
      v.tag
    )
    .unwrap();
    steps.push(json!({
      "step": i + 1,
      "face": step.face.vertices(),
      "coface": step.coface.vertices(),
      "face_weight": big(&v.face_weight),
      "coface_weight": big(&v.coface_weight),
      "verdict": v.tag.to_string(),
    }));
  }
  Value::Array(steps)
}

pub fn collapse_cmd(
  path: &Path,
  steps: Option<&Path>,
  verify: bool,
  max_dim: Option<usize>,
) -> Result<Report> {
  let k = load_complex(path, None)?;
  let (end, trace) = match steps {
    Some(p) => {
      let doc: StepsDocument = read_json(p)?;
      collapse_sequence(&k, &doc.faces()?).map_err(CliError::from)?
    }
    None => greedy_collapse(&k),
  };
  let mut text = String::new();
  let steps_json = trace_report(&trace, &mut text);
  writeln!(text, "guaranteed: {}", trace.is_guaranteed()).unwrap();
  writeln!(text, "remaining: {}", cells(&end)).unwrap();
  let mut out = json!({
    "steps": steps_json,
    "guaranteed": trace.is_guaranteed(),
    "remaining": cells_json(&end),
  });

  if verify {
    let top = cap(&k, max_dim);
    let mut current = k.clone();
    let mut before = padded(&current, top);
    writeln!(text, "verify before: {}", homology_inline(&before)).unwrap();
    let mut checks = Vec::new();
    let mut all_agree = true;
    for (i, (step, _)) in trace.steps.iter().enumerate() {
      current = current.without(&[&step.face, &step.coface]).expect("replaying a valid collapse");
      let after = padded(&current, top);
      let changed: Vec<usize> = (0..=top).filter(|&d| before[d] != after[d]).collect();
      all_agree &= changed.is_empty();
      let detail: Vec<String> =
        changed.iter().map(|&d| format!("H{d} {} -> {}", before[d], after[d])).collect();
      if changed.is_empty() {
        writeln!(text, "verify step {}: preserved", i + 1).unwrap();
      } else {
        writeln!(text, "verify step {}: changed {}", i + 1, detail.join("; ")).unwrap();
      }
      checks.push(json!({"step": i + 1, "preserved": changed.is_empty(), "homology": homology_json(&after)}));
      before = after;
    }
    writeln!(text, "verify agrees: {all_agree}").unwrap();
    out["verify"] =
      json!({ "before": homology_json(&padded(&k, top)), "steps": checks, "agrees": all_agree });
  }
  Ok(Report { text, json: out })
}

fn value_arg(s: &str) -> Result<BigRational> {
  Ok(parse_value(s).ok_or_else(|| CliError::input("ParseError", format!("{s:?} is not an exact number")))?)
}

pub fn simplex_arg(s: &str) -> Result<Simplex> {
  let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
  let vertices: Vec<u32> = inner
    .split(',')
    .map(|v| v.trim().parse())
    .collect::<Result<_, _>>()
    .map_err(|_| CliError::input("ParseError", format!("{s:?} is not a vertex list like 0,1,2")))?;
  Ok(Simplex::new(vertices).map_err(CliError::from)?)
}

pub enum MorseMode {
  Classify,
  Collapse(String, String),
  Window(String, String, String),
}

pub fn morse_cmd(path: &Path, morse: &Path, mode: MorseMode, max_dim: Option<usize>) -> Result<Report> {
  let k = load_complex(path, None)?;
  let doc: MorseDocument = read_json(morse)?;
  let f = doc.into_function(&k)?;
  match mode {
    MorseMode::Classify => {
      let cls = classify(&k, &f);
      let critical: Vec<&Simplex> = cls.critical().collect();
      let not_simple: Vec<&Simplex> = cls.not_w_simple().collect();
      let mut text = String::new();
      for s in &critical {
        writeln!(text, "critical {s} f={}", f.value(s)).unwrap();
      }
      for s in &not_simple {
        writeln!(text, "not-w-simple {s} f={}", f.value(s)).unwrap();
      }
      writeln!(
        text,
        "summary: {} critical, {} not w-simple, {} simplices",
        critical.len(),
        not_simple.len(),
        k.len()
      )
      .unwrap();
      let json = json!({
        "critical": critical.iter().map(|s| json!(s.vertices())).collect::<Vec<_>>(),
        "not_w_simple": not_simple.iter().map(|s| json!(s.vertices())).collect::<Vec<_>>(),
        "simplices": k.len(),
      });
      Ok(Report { text, json })
    }
    MorseMode::Collapse(a, b) => {
      let (a, b) = (value_arg(&a)?, value_arg(&b)?);
      let cert = morse_collapse(&k, &f, &a, &b).map_err(CliError::from)?;
      let mut text = String::new();
      let json = certificate_report(&cert, max_dim, &mut text);
      Ok(Report { text, json })
    }
    MorseMode::Window(alpha, a, b) => {
      let alpha = simplex_arg(&alpha)?;
      let (a, b) = (value_arg(&a)?, value_arg(&b)?);
      let cert = critical_window(&k, &f, &alpha, &a, &b).map_err(CliError::from)?;
      let mut text = String::new();
      let json = window_report(&cert, max_dim, &mut text);
      Ok(Report { text, json })
    }
  }
}

fn certificate_report(cert: &CollapseCertificate, max_dim: Option<usize>, text: &mut String) -> Value {
  writeln!(text, "collapse K({}) -> K({})", cert.upper, cert.lower).unwrap();
  let steps = trace_report(&cert.trace, text);
  let top = cap(&cert.start, max_dim);
  let (hs, he) = (padded(&cert.start, top), padded(&cert.end, top));
  writeln!(text, "start: {}", homology_inline(&hs)).unwrap();
  writeln!(text, "end: {}", homology_inline(&he)).unwrap();
  writeln!(text, "homology agrees: {}", hs == he).unwrap();
  writeln!(text, "K({}) = {}", cert.lower, cells(&cert.end)).unwrap();
  json!({
    "upper": rational(&cert.upper),
    "lower": rational(&cert.lower),
    "steps": steps,
    "start_homology": homology_json(&hs),
    "end_homology": homology_json(&he),
    "homology_agrees": hs == he,
    "end": cells_json(&cert.end),
  })
}

fn window_report(cert: &WindowCertificate, max_dim: Option<usize>, text: &mut String) -> Value {
  writeln!(text, "alpha = {}", cert.alpha).unwrap();
  writeln!(text, "f(alpha) = {}", cert.alpha_value).unwrap();
  writeln!(text, "window = ({}, {}]", cert.a, cert.b).unwrap();
  writeln!(text, "a' = {}", cert.a_prime).unwrap();
  writeln!(text, "K(f(alpha)) = {}", cells(&cert.upper_level)).unwrap();
  writeln!(text, "K(a') = {}", cells(&cert.lower_level)).unwrap();
  let mut out = json!({
    "alpha": cert.alpha.vertices(),
    "alpha_value": rational(&cert.alpha_value),
    "a": rational(&cert.a),
    "b": rational(&cert.b),
    "a_prime": rational(&cert.a_prime),
    "upper_level": cells_json(&cert.upper_level),
    "lower_level": cells_json(&cert.lower_level),
  });
  match &cert.extended {
    Ok(ext) => {
      let mut upper = String::new();
      let mut lower = String::new();
      let u = certificate_report(&ext.upper, max_dim, &mut upper);
      let l = certificate_report(&ext.lower, max_dim, &mut lower);
      text.push_str(&upper);
      text.push_str(&lower);
      let mut removal_json = Value::Null;
      if let Some(r) = &ext.removal {
        let n = r.dim;
        if n > 0 {
          writeln!(text, "order of [d alpha] in H{}(K(a')) = {}", n - 1, r.class_order).unwrap();
        }
        writeln!(text, "K(a'): {}", homology_inline(&r.remaining_homology)).unwrap();
        writeln!(text, "K(f(alpha)) predicted: {}", homology_inline(&r.predicted_homology)).unwrap();
        removal_json = json!({
          "dim": n,
          "class_order": r.class_order.to_string(),
          "lower_homology": homology_json(&r.remaining_homology),
          "predicted_upper_homology": homology_json(&r.predicted_homology),
        });
      } else {
        writeln!(text, "alpha has weight zero; homology of K(a') and K(f(alpha)) coincide").unwrap();
      }
      out["extended"] = json!({ "upper": u, "lower": l, "removal": removal_json });
    }
    Err(e) => {
      writeln!(text, "extended: unavailable ({e})").unwrap();
      out["extended"] = json!({ "error": CliError::from(e.clone()).to_json() });
    }
  }
  out
}

pub struct SequenceArgs {
  pub sequence: Option<String>,
  pub fasta: Option<PathBuf>,
  pub alphabet: String,
  pub weights: String,
  pub woc_type: String,
  pub emit_complex: Option<PathBuf>,
}

fn alphabet(spec: &str) -> Result<Alphabet> {
  match spec.strip_prefix("custom:") {
    Some(symbols) if !symbols.is_empty() => Ok(Alphabet::custom(spec, symbols.chars())),
    _ => Ok(Alphabet::named(spec).map_err(CliError::from)?),
  }
}

/// `>name` headers, sequence lines joined with whitespace removed.
pub fn parse_fasta(text: &str) -> Result<Vec<(String, String)>> {
  let mut records: Vec<(String, String)> = Vec::new();
  for (n, line) in text.lines().enumerate() {
    let line = line.trim();
    if line.is_empty() || line.starts_with(';') {
      continue;
    }
    if let Some(name) = line.strip_prefix('>') {
      records.push((name.trim().to_string(), String::new()));
    } else {
      let Some(last) = records.last_mut() else {
        return Err(
          CliError::input("ParseError", format!("FASTA line {} precedes the first header", n + 1))
            .with("line", json!(n + 1))
            .into(),
        );
      };
      last.1.extend(line.chars().filter(|c| !c.is_whitespace()));
    }
  }
  if records.is_empty() {
    return Err(CliError::input("ParseError", "no FASTA records".into()).into());
  }
  Ok(records)
}

pub fn sequence_cmd(args: &SequenceArgs, max_dim: Option<usize>) -> Result<Report> {
  let alphabet = alphabet(&args.alphabet)?;
  let weights: LetterWeights = args.weights.parse().map_err(CliError::from)?;
  let woc: WocType = args.woc_type.parse().map_err(CliError::from)?;
  let (named, records) = match (&args.sequence, &args.fasta) {
    (Some(s), None) => (false, vec![(String::new(), s.clone())]),
    (None, Some(p)) => {
      let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
      (true, parse_fasta(&text)?)
    }
    _ => return Err(CliError::input("Usage", "give exactly one of a sequence or --fasta".into()).into()),
  };
  if args.emit_complex.is_some() && records.len() != 1 {
    return Err(CliError::input("Usage", "--emit-complex needs exactly one sequence".into()).into());
  }

  let skeleton = max_dim.map(|d| d + 1);
  let built: Vec<Result<_, CliError>> = records
    .par_iter()
    .map(|(name, text)| {
      let seq = Sequence::new(text, &alphabet).map_err(|e| {
        let err = CliError::from(e);
        if name.is_empty() {
          err
        } else {
          err.with("record", json!(name))
        }
      })?;
      let woc = build_woc(&seq, &weights, woc, skeleton)?;
      let h = homology(&woc.complex, max_dim);
      Ok((woc, h))
    })
    .collect();

  let mut text = String::new();
  let mut out = Vec::new();
  for ((name, _), result) in records.iter().zip(built) {
    let (woc, h) = result?;
    if named {
      writeln!(text, ">{name}").unwrap();
    }
    if h.is_empty() {
      text.push_str("empty complex\n");
    }
    text.push_str(&homology_text(&h));
    out.push(json!({ "name": name, "homology": homology_json(&h) }));
    if let Some(path) = &args.emit_complex {
      if woc.complex.is_empty() {
        return Err(
          CliError::input("EmptyComplex", "empty complex: the sequence has no proper substrings".into())
            .into(),
        );
      }
      let doc = ComplexDocument::from_complex(&woc.complex, &woc.names);
      std::fs::write(path, doc.to_text()).with_context(|| format!("cannot write {}", path.display()))?;
    }
  }
  let json =
    if named { json!({ "records": out }) } else { json!({ "homology": out[0]["homology"].clone() }) };
  Ok(Report { text, json })
}
