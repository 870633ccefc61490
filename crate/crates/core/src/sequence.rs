//! Substring posets of symbol sequences and their weighted order complexes.
//!
//! The poset `P_S` holds every distinct proper nonempty contiguous substring of `S`, ordered
//! by the substring relation. Its order complex has one vertex per element and one simplex
//! per chain. Letter weights extend first to substrings and then to chains, each stage by
//! either LCM or product, giving four weighting types.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex, Vertex, WeightedComplex};
use crate::homology::{homology, HomologyGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
  #[error("empty sequence")]
  Empty,
  #[error("symbol {symbol:?} at position {position} is not in alphabet {alphabet}")]
  UnknownSymbol { symbol: char, position: usize, alphabet: String },
  #[error("unknown alphabet {0:?}")]
  UnknownAlphabet(String),
  #[error("no weight given for symbol {0:?}")]
  UnweightedSymbol(char),
  #[error("symbol {0:?} has weight zero")]
  ZeroLetterWeight(char),
  #[error("symbol {0:?} has negative weight {1}")]
  NegativeLetterWeight(char, BigInt),
  #[error("cannot parse letter weights: {0}")]
  BadWeights(String),
  #[error("unknown WOC type {0:?} (expected 1, 2, 3 or 4)")]
  BadWocType(String),
  #[error(transparent)]
  Complex(#[from] ComplexError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
  name: String,
  symbols: BTreeSet<char>,
}

impl Alphabet {
  pub fn custom(name: &str, symbols: impl IntoIterator<Item = char>) -> Self {
    Self { name: name.to_string(), symbols: symbols.into_iter().collect() }
  }

  pub fn dna() -> Self {
    Self::custom("dna", "ACGT".chars())
  }

  pub fn rna() -> Self {
    Self::custom("rna", "ACGU".chars())
  }

  pub fn bin() -> Self {
    Self::custom("bin", "01".chars())
  }

  pub fn hex() -> Self {
    Self::custom("hex", "0123456789ABCDEF".chars())
  }

  /// Built-in alphabets by name.
  pub fn named(name: &str) -> Result<Self, SequenceError> {
    match name {
      "dna" => Ok(Self::dna()),
      "rna" => Ok(Self::rna()),
      "bin" => Ok(Self::bin()),
      "hex" => Ok(Self::hex()),
      other => Err(SequenceError::UnknownAlphabet(other.to_string())),
    }
  }

  pub fn name(&self) -> &str {
    &self.name
  }

  pub fn contains(&self, c: char) -> bool {
    self.symbols.contains(&c)
  }
}

/// Nonempty symbol sequence over a known alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
  symbols: Vec<char>,
}

impl Sequence {
  pub fn new(text: &str, alphabet: &Alphabet) -> Result<Self, SequenceError> {
    let symbols: Vec<char> = text.chars().collect();
    if symbols.is_empty() {
      return Err(SequenceError::Empty);
    }
    if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, c)| !alphabet.contains(**c)) {
      return Err(SequenceError::UnknownSymbol { symbol, position, alphabet: alphabet.name.clone() });
    }
    Ok(Self { symbols })
  }

  pub fn symbols(&self) -> &[char] {
    &self.symbols
  }

  pub fn len(&self) -> usize {
    self.symbols.len()
  }

  pub fn is_empty(&self) -> bool {
    self.symbols.is_empty()
  }
}

impl fmt::Display for Sequence {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
  }
}

/// Proper nonempty substrings of a sequence, each listed once in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstringPoset {
  elements: Vec<String>,
  /// `below[i][j]` iff element `i` is a proper substring of element `j`.
  below: Vec<Vec<bool>>,
}

impl SubstringPoset {
  pub fn elements(&self) -> &[String] {
    &self.elements
  }

  pub fn len(&self) -> usize {
    self.elements.len()
  }

  pub fn is_empty(&self) -> bool {
    self.elements.is_empty()
  }

  pub fn index_of(&self, s: &str) -> Option<usize> {
    self.elements.binary_search_by(|e| e.as_str().cmp(s)).ok()
  }

  /// `elements[i] ⪯ elements[j]`.
  pub fn precedes(&self, i: usize, j: usize) -> bool {
    i == j || self.below[i][j]
  }

  /// Strict order.
  pub fn strictly_below(&self, i: usize, j: usize) -> bool {
    self.below[i][j]
  }

  /// Cover relations `(i, j)` of the Hasse diagram.
  pub fn covers(&self) -> Vec<(usize, usize)> {
    let n = self.len();
    let mut out = Vec::new();
    for i in 0..n {
      for j in 0..n {
        if self.below[i][j] && !(0..n).any(|m| self.below[i][m] && self.below[m][j]) {
          out.push((i, j));
        }
      }
    }
    out
  }
}

/// The substring poset `P_S`; empty when `|S| < 2`.
pub fn substrings(seq: &Sequence) -> SubstringPoset {
  substring_poset(seq, seq.len() - 1)
}

/// `P_S` with `S` itself adjoined as the unique maximum.
pub fn substrings_with_whole(seq: &Sequence) -> SubstringPoset {
  substring_poset(seq, seq.len())
}

fn substring_poset(seq: &Sequence, max_len: usize) -> SubstringPoset {
  let n = seq.len();
  let mut set = BTreeSet::new();
  for len in 1..=max_len {
    for start in 0..=n - len {
      set.insert(seq.symbols[start..start + len].iter().collect::<String>());
    }
  }
  let elements: Vec<String> = set.into_iter().collect();
  let below = elements
    .iter()
    .map(|a| elements.iter().map(|b| a.len() < b.len() && b.contains(a.as_str())).collect())
    .collect();
  SubstringPoset { elements, below }
}

/// Chains of a poset as a simplicial complex, with vertex `i` naming `elements[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderComplex {
  pub complex: SimplicialComplex,
  pub names: Vec<String>,
}

/// All chains of `poset`, optionally only those of dimension `≤ skeleton`.
pub fn order_complex(poset: &SubstringPoset, skeleton: Option<usize>) -> OrderComplex {
  let n = poset.len();
  let max_len = skeleton.map_or(usize::MAX, |d| d + 1);
  let mut simplices = BTreeSet::new();
  let mut chain: Vec<usize> = Vec::new();

  fn extend(poset: &SubstringPoset, chain: &mut Vec<usize>, max_len: usize, out: &mut BTreeSet<Simplex>) {
    let mut verts: Vec<Vertex> = chain.iter().map(|&i| i as Vertex).collect();
    verts.sort_unstable();
    out.insert(Simplex::from_sorted(verts));
    if chain.len() >= max_len {
      return;
    }
    let last = *chain.last().expect("nonempty chain");
    for next in 0..poset.len() {
      if poset.strictly_below(last, next) {
        chain.push(next);
        extend(poset, chain, max_len, out);
        chain.pop();
      }
    }
  }

  for start in 0..n {
    chain.push(start);
    extend(poset, &mut chain, max_len, &mut simplices);
    chain.pop();
  }
  let complex = SimplicialComplex::new(simplices).expect("faces of chains are chains");
  OrderComplex { complex, names: poset.elements.clone() }
}

/// How letter weights combine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Combine {
  Lcm,
  Product,
}

impl Combine {
  fn fold<'a>(self, xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| match self {
      Combine::Lcm => acc.lcm(x),
      Combine::Product => acc * x,
    })
  }
}

/// The four weighted-order-complex rules: (letters → string, vertices → simplex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WocType {
  /// LCM, LCM
  Type1,
  /// LCM, product
  Type2,
  /// product, LCM
  Type3,
  /// product, product
  Type4,
}

impl WocType {
  pub fn string_rule(self) -> Combine {
    match self {
      WocType::Type1 | WocType::Type2 => Combine::Lcm,
      WocType::Type3 | WocType::Type4 => Combine::Product,
    }
  }

  pub fn simplex_rule(self) -> Combine {
    match self {
      WocType::Type1 | WocType::Type3 => Combine::Lcm,
      WocType::Type2 | WocType::Type4 => Combine::Product,
    }
  }
}

impl FromStr for WocType {
  type Err = SequenceError;

  fn from_str(s: &str) -> Result<Self, Self::Err> {
    match s.trim() {
      "1" => Ok(WocType::Type1),
      "2" => Ok(WocType::Type2),
      "3" => Ok(WocType::Type3),
      "4" => Ok(WocType::Type4),
      other => Err(SequenceError::BadWocType(other.to_string())),
    }
  }
}

/// Positive integer weight per symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LetterWeights(BTreeMap<char, BigInt>);

impl LetterWeights {
  pub fn new(weights: impl IntoIterator<Item = (char, BigInt)>) -> Result<Self, SequenceError> {
    let map: BTreeMap<char, BigInt> = weights.into_iter().collect();
    for (c, w) in &map {
      if w.is_zero() {
        return Err(SequenceError::ZeroLetterWeight(*c));
      }
      if w.is_negative() {
        return Err(SequenceError::NegativeLetterWeight(*c, w.clone()));
      }
    }
    Ok(Self(map))
  }

  pub fn get(&self, c: char) -> Option<&BigInt> {
    self.0.get(&c)
  }
}

impl FromStr for LetterWeights {
  type Err = SequenceError;

  /// `A=1,C=2,G=3,T=4`
  fn from_str(s: &str) -> Result<Self, Self::Err> {
    let mut pairs = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
      let (sym, w) = item.split_once('=').ok_or_else(|| SequenceError::BadWeights(item.to_string()))?;
      let mut chars = sym.trim().chars();
      let (Some(c), None) = (chars.next(), chars.next()) else {
        return Err(SequenceError::BadWeights(item.to_string()));
      };
      let w: BigInt = w.trim().parse().map_err(|_| SequenceError::BadWeights(item.to_string()))?;
      pairs.push((c, w));
    }
    Self::new(pairs)
  }
}

/// Weighted order complex with its vertex name table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedOrderComplex {
  pub complex: WeightedComplex,
  pub names: Vec<String>,
}

/// Builds the weighted order complex of `seq`. The weight map is validated, not assumed.
pub fn build_woc(
  seq: &Sequence,
  weights: &LetterWeights,
  woc: WocType,
  skeleton: Option<usize>,
) -> Result<WeightedOrderComplex, SequenceError> {
  for &c in &seq.symbols {
    if weights.get(c).is_none() {
      return Err(SequenceError::UnweightedSymbol(c));
    }
  }
  let poset = substrings(seq);
  let oc = order_complex(&poset, skeleton);
  let string_rule = woc.string_rule();
  let vertex_weights: Vec<BigInt> = oc
    .names
    .iter()
    .map(|name| string_rule.fold(name.chars().map(|c| weights.get(c).expect("checked above"))))
    .collect();
  let simplex_rule = woc.simplex_rule();
  let weight_map = oc
    .complex
    .iter()
    .map(|s| (s.clone(), simplex_rule.fold(s.vertices().iter().map(|&v| &vertex_weights[v as usize]))))
    .collect();
  let complex = WeightedComplex::from_weight_map(weight_map)?;
  Ok(WeightedOrderComplex { complex, names: oc.names })
}

/// Weighted homology of the order complex, `H_0 … H_top` with `top` capped by `max_dim`.
pub fn sequence_fingerprint(
  seq: &Sequence,
  weights: &LetterWeights,
  woc: WocType,
  max_dim: Option<usize>,
) -> Result<Vec<HomologyGroup>, SequenceError> {
  let woc = build_woc(seq, weights, woc, max_dim.map(|d| d + 1))?;
  Ok(homology(&woc.complex, max_dim))
}
