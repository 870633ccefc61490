//! Finite abstract simplicial complexes carrying integer weights.
//!
//! A [`WeightedComplex`] is a face-closed set of simplices together with a total weight map
//! into ℤ such that the weight of a face always divides the weight of every coface
//! (`0 | x` only when `x = 0`). Zero weights are allowed; they simply drop the simplex out of
//! the chain basis used by [`crate::homology`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Opaque vertex identifier.
pub type Vertex = u32;

/// A simplex stored as a strictly increasing, nonempty vertex tuple.
///
/// Ordering is lexicographic on the vertex tuple, which is also the basis order used for
/// boundary matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
  /// Canonicalizes `vertices` by sorting. Rejects empty input and repeated vertices.
  pub fn new(mut vertices: Vec<Vertex>) -> Result<Self, ComplexError> {
    if vertices.is_empty() {
      return Err(ComplexError::EmptySimplex);
    }
    let original = vertices.clone();
    vertices.sort_unstable();
    if vertices.windows(2).any(|w| w[0] == w[1]) {
      return Err(ComplexError::DuplicateVertex(original));
    }
    Ok(Self(vertices))
  }

  /// Single-vertex simplex.
  pub fn vertex(v: Vertex) -> Self {
    Self(vec![v])
  }

  /// Caller guarantees `vertices` is strictly increasing and nonempty.
  pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
    debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
    Self(vertices)
  }

  pub fn vertices(&self) -> &[Vertex] {
    &self.0
  }

  pub fn dim(&self) -> usize {
    self.0.len() - 1
  }

  /// The codimension-one faces `[d_0 σ, …, d_n σ]`, where `d_i` deletes the vertex in
  /// position `i`. A vertex has no such faces.
  pub fn faces(&self) -> Vec<Simplex> {
    if self.0.len() == 1 {
      return Vec::new();
    }
    (0..self.0.len())
      .map(|i| {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
      })
      .collect()
  }

  /// Every nonempty subset of the vertex set, including `self`.
  pub fn all_faces(&self) -> Vec<Simplex> {
    let n = self.0.len();
    assert!(n < 32, "simplex too large to enumerate its faces");
    (1u32..(1 << n))
      .map(|mask| {
        Simplex(self.0.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect())
      })
      .collect()
  }

  /// `self ⊆ other` as vertex sets.
  pub fn is_face_of(&self, other: &Simplex) -> bool {
    if self.0.len() > other.0.len() {
      return false;
    }
    let mut it = other.0.iter();
    self.0.iter().all(|v| it.any(|w| w == v))
  }

  /// `self ⊊ other`.
  pub fn is_proper_face_of(&self, other: &Simplex) -> bool {
    self.0.len() < other.0.len() && self.is_face_of(other)
  }
}

impl fmt::Display for Simplex {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for (i, v) in self.0.iter().enumerate() {
      if i > 0 {
        write!(f, ",")?;
      }
      write!(f, "{v}")?;
    }
    write!(f, "]")
  }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
  #[error("empty vertex list")]
  EmptySimplex,
  #[error("duplicate vertex in {0:?}")]
  DuplicateVertex(Vec<Vertex>),
  #[error("duplicate simplex {0}")]
  DuplicateSimplex(Simplex),
  #[error("not face-closed: missing {0}")]
  NotFaceClosed(Simplex),
  #[error("simplex {0} is not in the complex")]
  NotInComplex(Simplex),
  #[error("divisibility violation: w({face}) = {face_weight} does not divide w({coface}) = {coface_weight}")]
  DivisibilityViolation { face: Simplex, coface: Simplex, face_weight: BigInt, coface_weight: BigInt },
}

/// `a | b` over ℤ, with `0 | b` exactly when `b = 0`.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
  if a.is_zero() {
    b.is_zero()
  } else {
    (b % a).is_zero()
  }
}

/// A finite face-closed set of simplices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
  simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
  pub fn new(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self, ComplexError> {
    let simplices: BTreeSet<Simplex> = simplices.into_iter().collect();
    check_closed(&simplices)?;
    Ok(Self { simplices })
  }

  /// Closure of the given simplices under taking faces.
  pub fn closure(generators: impl IntoIterator<Item = Simplex>) -> Self {
    let mut simplices = BTreeSet::new();
    for g in generators {
      if simplices.contains(&g) {
        continue;
      }
      simplices.extend(g.all_faces());
    }
    Self { simplices }
  }

  pub fn contains(&self, s: &Simplex) -> bool {
    self.simplices.contains(s)
  }

  pub fn len(&self) -> usize {
    self.simplices.len()
  }

  pub fn is_empty(&self) -> bool {
    self.simplices.is_empty()
  }

  /// Lexicographic iteration.
  pub fn iter(&self) -> impl Iterator<Item = &Simplex> + '_ {
    self.simplices.iter()
  }

  pub fn simplices(&self) -> &BTreeSet<Simplex> {
    &self.simplices
  }

  /// `None` for the empty complex.
  pub fn dim(&self) -> Option<usize> {
    self.simplices.iter().map(Simplex::dim).max()
  }

  pub fn of_dim(&self, n: usize) -> impl Iterator<Item = &Simplex> + '_ {
    self.simplices.iter().filter(move |s| s.dim() == n)
  }

  /// All proper cofaces of `s` present in the complex.
  pub fn cofaces<'a>(&'a self, s: &'a Simplex) -> impl Iterator<Item = &'a Simplex> + 'a {
    self.simplices.iter().filter(move |t| s.is_proper_face_of(t))
  }

  pub fn is_maximal(&self, s: &Simplex) -> bool {
    self.contains(s) && self.cofaces(s).next().is_none()
  }

  /// Map from each simplex to its codimension-one cofaces.
  pub fn coface_index(&self) -> BTreeMap<Simplex, Vec<Simplex>> {
    let mut index: BTreeMap<Simplex, Vec<Simplex>> =
      self.simplices.iter().map(|s| (s.clone(), Vec::new())).collect();
    for s in &self.simplices {
      for f in s.faces() {
        if let Some(v) = index.get_mut(&f) {
          v.push(s.clone());
        }
      }
    }
    index
  }

  /// Returns the unique coface `τ` when `σ` is a free face of `τ`: `σ` has exactly one
  /// proper coface, which is then one dimension higher and maximal.
  pub fn free_face_of(&self, sigma: &Simplex) -> Option<Simplex> {
    let mut cofaces = self.cofaces(sigma);
    let tau = cofaces.next()?;
    if cofaces.next().is_some() || tau.dim() != sigma.dim() + 1 {
      return None;
    }
    Some(tau.clone())
  }
}

fn check_closed(simplices: &BTreeSet<Simplex>) -> Result<(), ComplexError> {
  for s in simplices {
    for f in s.faces() {
      if !simplices.contains(&f) {
        return Err(ComplexError::NotFaceClosed(f));
      }
    }
  }
  Ok(())
}

/// A simplicial complex with a weight map satisfying face-divides-coface.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedComplex {
  complex: SimplicialComplex,
  weights: BTreeMap<Simplex, BigInt>,
}

impl WeightedComplex {
  /// Validates a candidate list of `(vertex tuple, weight)` records.
  ///
  /// Tuples are canonicalized by sorting. Divisibility is checked on codimension-one pairs,
  /// which covers every face pair by transitivity.
  pub fn validate<I, V>(candidate: I) -> Result<Self, ComplexError>
  where
    I: IntoIterator<Item = (V, BigInt)>,
    V: Into<Vec<Vertex>>,
  {
    let mut weights = BTreeMap::new();
    for (vertices, w) in candidate {
      let s = Simplex::new(vertices.into())?;
      if weights.contains_key(&s) {
        return Err(ComplexError::DuplicateSimplex(s));
      }
      weights.insert(s, w);
    }
    Self::from_weight_map(weights)
  }

  /// Validates an already canonical weight map.
  pub fn from_weight_map(weights: BTreeMap<Simplex, BigInt>) -> Result<Self, ComplexError> {
    let simplices: BTreeSet<Simplex> = weights.keys().cloned().collect();
    check_closed(&simplices)?;
    for (s, w) in &weights {
      for f in s.faces() {
        let fw = &weights[&f];
        if !divides(fw, w) {
          return Err(ComplexError::DivisibilityViolation {
            face: f.clone(),
            coface: s.clone(),
            face_weight: fw.clone(),
            coface_weight: w.clone(),
          });
        }
      }
    }
    Ok(Self { complex: SimplicialComplex { simplices }, weights })
  }

  /// Every simplex gets weight `a`.
  pub fn constant(complex: SimplicialComplex, a: BigInt) -> Self {
    let weights = complex.iter().map(|s| (s.clone(), a.clone())).collect();
    Self { complex, weights }
  }

  /// Closure of `maximal` with constant weight `a`.
  pub fn constant_closure(maximal: impl IntoIterator<Item = Simplex>, a: BigInt) -> Self {
    Self::constant(SimplicialComplex::closure(maximal), a)
  }

  pub fn empty() -> Self {
    Self::default()
  }

  pub fn complex(&self) -> &SimplicialComplex {
    &self.complex
  }

  pub fn weight(&self, s: &Simplex) -> Option<&BigInt> {
    self.weights.get(s)
  }

  pub fn weights(&self) -> &BTreeMap<Simplex, BigInt> {
    &self.weights
  }

  pub fn contains(&self, s: &Simplex) -> bool {
    self.complex.contains(s)
  }

  pub fn len(&self) -> usize {
    self.complex.len()
  }

  pub fn is_empty(&self) -> bool {
    self.complex.is_empty()
  }

  pub fn dim(&self) -> Option<usize> {
    self.complex.dim()
  }

  pub fn iter(&self) -> impl Iterator<Item = (&Simplex, &BigInt)> + '_ {
    self.weights.iter()
  }

  /// Weighted subcomplex on `subset`, which must lie in `self` and be face-closed.
  pub fn restrict<'a>(&self, subset: impl IntoIterator<Item = &'a Simplex>) -> Result<Self, ComplexError> {
    let mut weights = BTreeMap::new();
    for s in subset {
      let w = self.weights.get(s).ok_or_else(|| ComplexError::NotInComplex(s.clone()))?;
      weights.insert(s.clone(), w.clone());
    }
    let simplices: BTreeSet<Simplex> = weights.keys().cloned().collect();
    check_closed(&simplices)?;
    Ok(Self { complex: SimplicialComplex { simplices }, weights })
  }

  /// `self ∖ removed`, checked for face-closure.
  pub fn without(&self, removed: &[&Simplex]) -> Result<Self, ComplexError> {
    for s in removed {
      if !self.contains(s) {
        return Err(ComplexError::NotInComplex((*s).clone()));
      }
    }
    self.restrict(self.complex.iter().filter(|s| !removed.contains(s)))
  }

  /// Same complex with every weight multiplied by `k`.
  pub fn scaled(&self, k: &BigInt) -> Self {
    let weights = self.weights.iter().map(|(s, w)| (s.clone(), w * k)).collect();
    Self { complex: self.complex.clone(), weights }
  }

  /// Same complex, all weights replaced by 1.
  pub fn unweighted(&self) -> Self {
    Self::constant(self.complex.clone(), BigInt::one())
  }
}
