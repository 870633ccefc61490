//! Elementary collapses and removals of weighted complexes.
//!
//! A collapse of a free face `σ` into its coface `τ` preserves weighted homology whenever
//! `w(σ)` and `w(τ)` are equal, or more generally associates (equal up to sign over ℤ), and
//! nonzero. Removing a single maximal simplex `σ` of dimension `n` changes homology only in
//! dimensions `n - 1` and `n`; the change is governed by the class of `∂σ`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::complex::{ComplexError, Simplex, WeightedComplex};
use crate::homology::{self, boundary_matrices, homology, ClassOrder, HomologyGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CollapseError {
  #[error("{0} is not a free face")]
  NotFreeFace(Simplex),
  /// `index` counts from zero; the message counts from one.
  #[error("step {}: {source}", .index + 1)]
  AtStep { index: usize, source: Box<CollapseError> },
  #[error("{0} is not a maximal simplex")]
  NotMaximal(Simplex),
  #[error("{0} has zero weight")]
  ZeroWeight(Simplex),
  #[error(transparent)]
  Complex(#[from] ComplexError),
}

/// A free face and its unique coface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
  pub face: Simplex,
  pub coface: Simplex,
}

impl CollapseStep {
  /// Dimension of the collapse, i.e. of the coface.
  pub fn dim(&self) -> usize {
    self.coface.dim()
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preservation {
  /// `w(σ) = w(τ) ≠ 0`.
  SameWeight,
  /// `w(τ) = -w(σ) ≠ 0`.
  Associate,
  /// `w(σ) = w(τ) = 0`: neither cell is a chain generator, so no chain group changes.
  ZeroPair,
  NotGuaranteed,
}

impl Preservation {
  pub fn guarantees_preservation(self) -> bool {
    !matches!(self, Preservation::NotGuaranteed)
  }
}

impl fmt::Display for Preservation {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str(match self {
      Preservation::SameWeight => "SameWeight",
      Preservation::Associate => "Associate",
      Preservation::ZeroPair => "ZeroPair",
      Preservation::NotGuaranteed => "NotGuaranteed",
    })
  }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationVerdict {
  pub tag: Preservation,
  pub face_weight: BigInt,
  pub coface_weight: BigInt,
}

/// Removes the free face `sigma` and its coface.
pub fn elementary_collapse(
  k: &WeightedComplex,
  sigma: &Simplex,
) -> Result<(WeightedComplex, CollapseStep), CollapseError> {
  if !k.contains(sigma) {
    return Err(CollapseError::NotFreeFace(sigma.clone()));
  }
  let tau = k.complex().free_face_of(sigma).ok_or_else(|| CollapseError::NotFreeFace(sigma.clone()))?;
  let l = k.without(&[sigma, &tau])?;
  Ok((l, CollapseStep { face: sigma.clone(), coface: tau }))
}

/// Static weight test for a collapse step; never computes homology.
pub fn check_preservation(k: &WeightedComplex, step: &CollapseStep) -> PreservationVerdict {
  let ws = k.weight(&step.face).expect("face in complex").clone();
  let wt = k.weight(&step.coface).expect("coface in complex").clone();
  let tag = if ws.is_zero() && wt.is_zero() {
    Preservation::ZeroPair
  } else if ws.is_zero() || wt.is_zero() {
    Preservation::NotGuaranteed
  } else if ws == wt {
    Preservation::SameWeight
  } else if ws.abs() == wt.abs() {
    Preservation::Associate
  } else {
    Preservation::NotGuaranteed
  };
  PreservationVerdict { tag, face_weight: ws, coface_weight: wt }
}

/// Applied collapse steps with their verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CollapseTrace {
  pub steps: Vec<(CollapseStep, PreservationVerdict)>,
}

impl CollapseTrace {
  /// Every step carries a preserving verdict.
  pub fn is_guaranteed(&self) -> bool {
    self.steps.iter().all(|(_, v)| v.tag.guarantees_preservation())
  }

  pub fn verdicts(&self) -> Vec<Preservation> {
    self.steps.iter().map(|(_, v)| v.tag).collect()
  }
}

/// Applies `faces` in order, each naming a free face of the complex produced so far.
pub fn collapse_sequence(
  k: &WeightedComplex,
  faces: &[Simplex],
) -> Result<(WeightedComplex, CollapseTrace), CollapseError> {
  let mut current = k.clone();
  let mut trace = CollapseTrace::default();
  for (index, sigma) in faces.iter().enumerate() {
    let (next, step) = elementary_collapse(&current, sigma)
      .map_err(|e| CollapseError::AtStep { index, source: Box::new(e) })?;
    let verdict = check_preservation(&current, &step);
    trace.steps.push((step, verdict));
    current = next;
  }
  Ok((current, trace))
}

/// Repeatedly collapses the lexicographically smallest free face until none remains.
pub fn greedy_collapse(k: &WeightedComplex) -> (WeightedComplex, CollapseTrace) {
  let mut current = k.clone();
  let mut trace = CollapseTrace::default();
  loop {
    let next =
      current.complex().iter().find_map(|s| current.complex().free_face_of(s).map(|t| (s.clone(), t)));
    let Some((face, coface)) = next else { break };
    let step = CollapseStep { face, coface };
    let verdict = check_preservation(&current, &step);
    current = current.without(&[&step.face, &step.coface]).expect("collapse keeps face-closure");
    trace.steps.push((step, verdict));
  }
  (current, trace)
}

/// Outcome of removing a maximal simplex `σ` of dimension `n` from `K`, leaving `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalReport {
  pub removed: Simplex,
  pub dim: usize,
  /// `∂σ` in the chain basis of `C_{n-1}(L)`; empty when `n = 0`.
  pub boundary: Vec<BigInt>,
  /// Order of `[∂σ]` in `H_{n-1}(L)`.
  pub class_order: ClassOrder,
  /// `H_*(L)` padded with zero groups up to `dim K`.
  pub remaining_homology: Vec<HomologyGroup>,
  /// `H_*(K)` as predicted from `L`: unchanged outside `{n-1, n}`, the quotient
  /// `H_{n-1}(L)/⟨[∂σ]⟩` in dimension `n-1`, and `H_n(L) ⊕ ℤ` in dimension `n` exactly
  /// when `[∂σ]` is torsion.
  pub predicted_homology: Vec<HomologyGroup>,
}

/// Removes a maximal nonzero-weight simplex and predicts the homology of the larger complex.
pub fn elementary_removal(
  k: &WeightedComplex,
  sigma: &Simplex,
) -> Result<(WeightedComplex, RemovalReport), CollapseError> {
  if !k.complex().is_maximal(sigma) {
    return Err(CollapseError::NotMaximal(sigma.clone()));
  }
  if k.weight(sigma).is_some_and(Zero::is_zero) {
    return Err(CollapseError::ZeroWeight(sigma.clone()));
  }
  let n = sigma.dim();
  let l = k.without(&[sigma])?;
  let top = k.dim().expect("nonempty");

  let mut remaining = homology(&l, Some(top));
  remaining.resize(top + 1, HomologyGroup::zero());

  let (boundary, class_order, quotient) = if n == 0 {
    (Vec::new(), ClassOrder::Zero, None)
  } else {
    // C_{n-1}(L) = C_{n-1}(K), so σ's column of ∂_n(K) is already in L's basis.
    let column = boundary_matrices(k).column_of(sigma).expect("nonzero weight");
    let order = homology::homology_class_order(&l, n - 1, &column).expect("boundary is a cycle");
    let q = homology::quotient_by_class(&l, n - 1, &column).expect("boundary is a cycle");
    (column, order, Some(q))
  };

  let mut predicted = remaining.clone();
  if let Some(q) = quotient {
    predicted[n - 1] = q;
  }
  if class_order.is_torsion() {
    predicted[n] = predicted[n].plus_free();
  }

  let report = RemovalReport {
    removed: sigma.clone(),
    dim: n,
    boundary,
    class_order,
    remaining_homology: remaining,
    predicted_homology: predicted,
  };
  Ok((l, report))
}
