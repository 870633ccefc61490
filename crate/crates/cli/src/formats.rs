//! JSON documents read and written by the CLI.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};
use wmorse::morse::{parse_value, validate_morse, MorseFunction};
use wmorse::{BigInt, BigRational, Simplex, SimplicialComplex, Vertex, WeightedComplex};

use crate::error::CliError;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexRecord {
  pub vertices: Vec<Vertex>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub weight: Option<Number>,
}

/// `{"simplices": [{"vertices": [0, 1], "weight": 2}, ...], "names": {"0": "C"}}`
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
  pub simplices: Vec<SimplexRecord>,
  #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
  pub names: BTreeMap<Vertex, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueRecord {
  pub vertices: Vec<Vertex>,
  pub value: Value,
}

/// `{"values": [{"vertices": [0], "value": "1/2"}, ...]}`
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorseDocument {
  pub values: Vec<ValueRecord>,
}

/// `{"steps": [[1, 2], [1], [0]]}`, each entry naming the free face to collapse.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepsDocument {
  pub steps: Vec<Vec<Vertex>>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
  let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
  serde_json::from_str(&text).map_err(|e| CliError::parse(path, &e).into())
}

fn integer(n: &Number, what: &str) -> Result<BigInt, CliError> {
  n.to_string().parse().map_err(|_| CliError::input("ParseError", format!("{what} {n} is not an integer")))
}

fn simplex(vertices: &[Vertex]) -> Result<Simplex, CliError> {
  Simplex::new(vertices.to_vec()).map_err(CliError::from)
}

impl ComplexDocument {
  /// Explicit listing, every simplex with its weight.
  pub fn into_complex(self) -> Result<WeightedComplex, CliError> {
    if self.simplices.is_empty() {
      return Err(CliError::input("EmptyComplex", "empty complex".into()));
    }
    let mut records = Vec::with_capacity(self.simplices.len());
    for r in self.simplices {
      let w = r.weight.as_ref().ok_or_else(|| {
        CliError::input(
          "MissingWeight",
          format!("simplex {:?} has no weight (use --constant-weight for unweighted input)", r.vertices),
        )
      })?;
      records.push((r.vertices, integer(w, "weight")?));
    }
    WeightedComplex::validate(records).map_err(CliError::from)
  }

  /// Closure of the listed simplices with every weight equal to `a`.
  pub fn into_constant(self, a: BigInt) -> Result<WeightedComplex, CliError> {
    if self.simplices.is_empty() {
      return Err(CliError::input("EmptyComplex", "empty complex".into()));
    }
    let mut generators = Vec::new();
    for r in self.simplices {
      if r.weight.is_some() {
        return Err(CliError::input(
          "UnexpectedWeight",
          format!("simplex {:?} carries a weight; --constant-weight expects unweighted input", r.vertices),
        ));
      }
      generators.push(simplex(&r.vertices)?);
    }
    Ok(WeightedComplex::constant(SimplicialComplex::closure(generators), a))
  }

  pub fn from_complex(k: &WeightedComplex, names: &[String]) -> Self {
    let simplices = k
      .iter()
      .map(|(s, w)| SimplexRecord {
        vertices: s.vertices().to_vec(),
        weight: Some(w.to_string().parse().expect("integer literal")),
      })
      .collect();
    let names = names.iter().enumerate().map(|(i, n)| (i as Vertex, n.clone())).collect();
    Self { simplices, names }
  }

  /// One simplex record per line, stable across runs.
  pub fn to_text(&self) -> String {
    let line = |v: String| format!("    {v}");
    let records: Vec<String> =
      self.simplices.iter().map(|r| line(serde_json::to_string(r).expect("serializable"))).collect();
    let mut out = format!("{{\n  \"simplices\": [\n{}\n  ]", records.join(",\n"));
    if !self.names.is_empty() {
      out += &format!(",\n  \"names\": {}", serde_json::to_string(&self.names).expect("serializable"));
    }
    out + "\n}\n"
  }
}

impl MorseDocument {
  pub fn into_function(self, k: &WeightedComplex) -> Result<MorseFunction, CliError> {
    let mut values = BTreeMap::new();
    for r in self.values {
      let s = simplex(&r.vertices)?;
      let text = match &r.value {
        Value::Number(n) => n.to_string(),
        Value::String(t) => t.clone(),
        other => return Err(CliError::input("ParseError", format!("value {other} for {s} is not a number"))),
      };
      let v: BigRational = parse_value(&text).ok_or_else(|| {
        CliError::input("ParseError", format!("value {text:?} for {s} is not an exact number"))
      })?;
      if values.insert(s.clone(), v).is_some() {
        return Err(CliError::input("DuplicateSimplex", format!("value given twice for {s}")));
      }
    }
    validate_morse(k, values).map_err(CliError::from)
  }
}

impl StepsDocument {
  pub fn faces(&self) -> Result<Vec<Simplex>, CliError> {
    self.steps.iter().map(|v| simplex(v)).collect()
  }
}
