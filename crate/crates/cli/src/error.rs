use std::fmt;
use std::path::Path;

use serde_json::{json, Map, Value};
use wmorse::collapse::CollapseError;
use wmorse::complex::ComplexError;
use wmorse::morse::MorseError;
use wmorse::sequence::SequenceError;
use wmorse::Simplex;

/// Process exit status for a failed run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
  Input = 2,
  Hypothesis = 3,
}

/// An error with a stable kind tag and structured detail, printed as one JSON line.
#[derive(Debug)]
pub struct CliError {
  pub exit: Exit,
  pub kind: &'static str,
  pub message: String,
  pub detail: Map<String, Value>,
}

impl fmt::Display for CliError {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}: {}", self.kind, self.message)
  }
}

impl std::error::Error for CliError {}

fn vertices(s: &Simplex) -> Value {
  json!(s.vertices())
}

impl CliError {
  pub fn input(kind: &'static str, message: String) -> Self {
    Self { exit: Exit::Input, kind, message, detail: Map::new() }
  }

  pub fn hypothesis(kind: &'static str, message: String) -> Self {
    Self { exit: Exit::Hypothesis, kind, message, detail: Map::new() }
  }

  pub fn with(mut self, key: &str, value: Value) -> Self {
    self.detail.insert(key.to_string(), value);
    self
  }

  pub fn parse(path: &Path, e: &serde_json::Error) -> Self {
    Self::input("ParseError", format!("{}: {e}", path.display()))
      .with("file", json!(path.display().to_string()))
      .with("line", json!(e.line()))
      .with("column", json!(e.column()))
  }

  pub fn to_json(&self) -> Value {
    let mut m = Map::new();
    m.insert("error".into(), json!(self.kind));
    m.insert("message".into(), json!(self.message));
    m.extend(self.detail.clone());
    Value::Object(m)
  }
}

impl From<ComplexError> for CliError {
  fn from(e: ComplexError) -> Self {
    let message = e.to_string();
    match e {
      ComplexError::EmptySimplex => Self::input("EmptySimplex", message),
      ComplexError::DuplicateVertex(v) => Self::input("DuplicateVertex", message).with("vertices", json!(v)),
      ComplexError::DuplicateSimplex(s) => {
        Self::input("DuplicateSimplex", message).with("simplex", vertices(&s))
      }
      ComplexError::NotFaceClosed(s) => Self::input("NotFaceClosed", message).with("missing", vertices(&s)),
      ComplexError::NotInComplex(s) => Self::input("NotInComplex", message).with("simplex", vertices(&s)),
      ComplexError::DivisibilityViolation { face, coface, face_weight, coface_weight } => {
        Self::input("DivisibilityViolation", message)
          .with("face", vertices(&face))
          .with("coface", vertices(&coface))
          .with("face_weight", json!(face_weight.to_string()))
          .with("coface_weight", json!(coface_weight.to_string()))
      }
    }
  }
}

impl From<CollapseError> for CliError {
  fn from(e: CollapseError) -> Self {
    let message = e.to_string();
    match e {
      CollapseError::NotFreeFace(s) => Self::input("NotFreeFace", message).with("simplex", vertices(&s)),
      CollapseError::AtStep { index, source } => {
        let mut inner = CliError::from(*source);
        inner.message = message;
        inner.with("step", json!(index + 1))
      }
      CollapseError::NotMaximal(s) => Self::input("NotMaximal", message).with("simplex", vertices(&s)),
      CollapseError::ZeroWeight(s) => Self::input("ZeroWeight", message).with("simplex", vertices(&s)),
      CollapseError::Complex(c) => c.into(),
    }
  }
}

impl From<MorseError> for CliError {
  fn from(e: MorseError) -> Self {
    let message = e.to_string();
    match e {
      MorseError::NotTotal(s) => Self::input("NotTotal", message).with("simplex", vertices(&s)),
      MorseError::UnknownSimplex(s) => Self::input("UnknownSimplex", message).with("simplex", vertices(&s)),
      MorseError::Violations(vs) => {
        let list: Vec<Value> = vs
          .iter()
          .map(|v| {
            json!({
              "simplex": v.simplex.vertices(),
              "condition": v.condition.to_string(),
              "witnesses": v.witnesses.iter().map(|w| w.vertices().to_vec()).collect::<Vec<_>>(),
            })
          })
          .collect();
        Self::input("MorseViolation", message).with("violations", Value::Array(list))
      }
      MorseError::InvalidInterval { a, b } => Self::input("InvalidInterval", message)
        .with("a", json!(a.to_string()))
        .with("b", json!(b.to_string())),
      MorseError::HypothesisFailed { simplex, reason } => Self::hypothesis("HypothesisFailed", message)
        .with("simplex", vertices(&simplex))
        .with("reason", json!(reason.to_string())),
      MorseError::NotCritical(s) => Self::hypothesis("NotCritical", message).with("simplex", vertices(&s)),
      MorseError::NotInWindow(s) => Self::hypothesis("NotInWindow", message).with("simplex", vertices(&s)),
      MorseError::ExtraCritical(s) => {
        Self::hypothesis("ExtraCritical", message).with("simplex", vertices(&s))
      }
      MorseError::NoValidAPrime(s) => {
        Self::hypothesis("NoValidAPrime", message).with("simplex", vertices(&s))
      }
      MorseError::WSimpleFailed(s) => {
        Self::hypothesis("WSimpleFailed", message).with("simplex", vertices(&s))
      }
      MorseError::CollapseStuck(v) => {
        Self::hypothesis("CollapseStuck", message).with("level", json!(v.to_string()))
      }
      MorseError::LevelMismatch(s) => {
        Self::hypothesis("LevelMismatch", message).with("simplex", vertices(&s))
      }
      MorseError::Collapse(c) => c.into(),
    }
  }
}

impl From<SequenceError> for CliError {
  fn from(e: SequenceError) -> Self {
    let message = e.to_string();
    let kind = match &e {
      SequenceError::Empty => "EmptySequence",
      SequenceError::UnknownSymbol { .. } => "UnknownSymbol",
      SequenceError::UnknownAlphabet(_) => "UnknownAlphabet",
      SequenceError::UnweightedSymbol(_) => "UnweightedSymbol",
      SequenceError::ZeroLetterWeight(_) => "ZeroLetterWeight",
      SequenceError::NegativeLetterWeight(..) => "NegativeLetterWeight",
      SequenceError::BadWeights(_) => "ParseError",
      SequenceError::BadWocType(_) => "ParseError",
      SequenceError::Complex(c) => return c.clone().into(),
    };
    let err = Self::input(kind, message);
    match e {
      SequenceError::UnknownSymbol { symbol, position, alphabet } => err
        .with("symbol", json!(symbol.to_string()))
        .with("position", json!(position))
        .with("alphabet", json!(alphabet)),
      SequenceError::UnweightedSymbol(c) | SequenceError::ZeroLetterWeight(c) => {
        err.with("symbol", json!(c.to_string()))
      }
      SequenceError::NegativeLetterWeight(c, w) => {
        err.with("symbol", json!(c.to_string())).with("weight", json!(w.to_string()))
      }
      _ => err,
    }
  }
}
