//! Discrete Morse functions on weighted complexes.
//!
//! Values are exact rationals and need not be injective. Two procedures produce certificates:
//!
//! * [`morse_collapse`]: if every simplex with value in `(a, b]` is non-critical and
//!   w-simple, `K(b)` collapses onto `K(a)` through steps that each remove a pair of equal
//!   nonzero weight.
//! * [`critical_window`]: a lone critical simplex `α` in `(a, b]` is removed as a maximal
//!   face between `K(f(α))` and `K(a')`, with the surrounding collapses certified when the
//!   remaining cells are w-simple.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::collapse::{
  check_preservation, elementary_collapse, elementary_removal, CollapseError, CollapseTrace, RemovalReport,
};
use crate::complex::{Simplex, WeightedComplex};
use crate::homology::{homology, HomologyGroup};

/// Which of the two Morse conditions failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
  /// More than one codimension-one coface with value `≤ f(α)`.
  Cofaces,
  /// More than one codimension-one face with value `≥ f(α)`.
  Faces,
}

impl fmt::Display for Condition {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str(match self {
      Condition::Cofaces => "cofaces",
      Condition::Faces => "faces",
    })
  }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseViolation {
  pub simplex: Simplex,
  pub condition: Condition,
  pub witnesses: Vec<Simplex>,
}

impl fmt::Display for MorseViolation {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let w: Vec<String> = self.witnesses.iter().map(ToString::to_string).collect();
    write!(f, "{} violates the {} condition (witnesses {})", self.simplex, self.condition, w.join(" "))
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypothesisReason {
  Critical,
  NotWSimple,
}

impl fmt::Display for HypothesisReason {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str(match self {
      HypothesisReason::Critical => "critical",
      HypothesisReason::NotWSimple => "not w-simple",
    })
  }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MorseError {
  #[error("no value given for {0}")]
  NotTotal(Simplex),
  #[error("value given for {0}, which is not in the complex")]
  UnknownSimplex(Simplex),
  #[error("not a discrete Morse function: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
  Violations(Vec<MorseViolation>),
  #[error("empty or reversed interval ({a}, {b}]")]
  InvalidInterval { a: Box<BigRational>, b: Box<BigRational> },
  #[error("hypothesis failed at {simplex}: {reason}")]
  HypothesisFailed { simplex: Simplex, reason: HypothesisReason },
  #[error("{0} is not critical")]
  NotCritical(Simplex),
  #[error("value of {0} lies outside the window")]
  NotInWindow(Simplex),
  #[error("window contains another critical simplex {0}")]
  ExtraCritical(Simplex),
  #[error("{0} shares its value with the critical simplex")]
  NoValidAPrime(Simplex),
  #[error("{0} is not w-simple")]
  WSimpleFailed(Simplex),
  #[error("no collapse available at level {0}")]
  CollapseStuck(BigRational),
  #[error("level subcomplexes disagree with the removal of {0}")]
  LevelMismatch(Simplex),
  #[error(transparent)]
  Collapse(#[from] CollapseError),
}

/// A validated discrete Morse function on a specific complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseFunction {
  values: BTreeMap<Simplex, BigRational>,
}

impl MorseFunction {
  pub fn value(&self, s: &Simplex) -> &BigRational {
    &self.values[s]
  }

  pub fn values(&self) -> &BTreeMap<Simplex, BigRational> {
    &self.values
  }

  /// Distinct values in ascending order.
  pub fn distinct_values(&self) -> Vec<BigRational> {
    self.values.values().cloned().collect::<BTreeSet<_>>().into_iter().collect()
  }

  /// Simplices whose value lies in the half-open interval `(lo, hi]`.
  pub fn preimage<'a>(
    &'a self,
    lo: &'a BigRational,
    hi: &'a BigRational,
  ) -> impl Iterator<Item = &'a Simplex> + 'a {
    self.values.iter().filter(move |(_, v)| *v > lo && *v <= hi).map(|(s, _)| s)
  }
}

/// Exact value from an integer, a decimal such as `-2.75` or `1e-3`, or a fraction `p/q`.
pub fn parse_value(text: &str) -> Option<BigRational> {
  let t = text.trim();
  if let Some((p, q)) = t.split_once('/') {
    let (p, q): (BigInt, BigInt) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
    return (!q.is_zero()).then(|| BigRational::new(p, q));
  }
  let (mantissa, exp) = match t.split_once(['e', 'E']) {
    Some((m, e)) => (m, e.parse::<i32>().ok()?),
    None => (t, 0),
  };
  let (negative, digits) = match mantissa.strip_prefix('-') {
    Some(rest) => (true, rest),
    None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
  };
  let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
  if int_part.is_empty() && frac_part.is_empty() {
    return None;
  }
  if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
    return None;
  }
  let numer: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
  let scale = exp - frac_part.len() as i32;
  let ten = BigInt::from(10);
  let value = if scale >= 0 {
    BigRational::from_integer(numer * ten.pow(scale as u32))
  } else {
    BigRational::new(numer, ten.pow(scale.unsigned_abs()))
  };
  Some(if negative { -value } else { value })
}

/// `f(σ) = dim σ`: always a Morse function, with every cell critical.
pub fn dimension_function(k: &WeightedComplex) -> MorseFunction {
  let values =
    k.complex().iter().map(|s| (s.clone(), BigRational::from_integer(BigInt::from(s.dim())))).collect();
  MorseFunction { values }
}

struct Witnesses {
  /// Codimension-one cofaces β with f(β) ≤ f(α).
  up: Vec<Simplex>,
  /// Codimension-one faces γ with f(γ) ≥ f(α).
  down: Vec<Simplex>,
}

fn witnesses(
  k: &WeightedComplex,
  values: &BTreeMap<Simplex, BigRational>,
  cofaces: &BTreeMap<Simplex, Vec<Simplex>>,
) -> BTreeMap<Simplex, Witnesses> {
  k.complex()
    .iter()
    .map(|a| {
      let fa = &values[a];
      let up = cofaces[a].iter().filter(|b| values[*b] <= *fa).cloned().collect();
      let down = a.faces().into_iter().filter(|g| values[g] >= *fa).collect();
      (a.clone(), Witnesses { up, down })
    })
    .collect()
}

/// Checks that `values` is total on `k` and satisfies both Morse conditions everywhere;
/// reports every violation found.
pub fn validate_morse(
  k: &WeightedComplex,
  values: BTreeMap<Simplex, BigRational>,
) -> Result<MorseFunction, MorseError> {
  if let Some(s) = values.keys().find(|s| !k.contains(s)) {
    return Err(MorseError::UnknownSimplex(s.clone()));
  }
  if let Some(s) = k.complex().iter().find(|s| !values.contains_key(*s)) {
    return Err(MorseError::NotTotal(s.clone()));
  }
  let cofaces = k.complex().coface_index();
  let mut violations = Vec::new();
  for (s, w) in witnesses(k, &values, &cofaces) {
    if w.up.len() > 1 {
      violations.push(MorseViolation { simplex: s.clone(), condition: Condition::Cofaces, witnesses: w.up });
    }
    if w.down.len() > 1 {
      violations.push(MorseViolation { simplex: s, condition: Condition::Faces, witnesses: w.down });
    }
  }
  if violations.is_empty() {
    Ok(MorseFunction { values })
  } else {
    Err(MorseError::Violations(violations))
  }
}

/// The cell a non-critical simplex is matched with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Partner {
  /// A coface `β` with `f(β) ≤ f(α)`.
  Coface(Simplex),
  /// A face `γ` with `f(γ) ≥ f(α)`.
  Face(Simplex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellInfo {
  pub critical: bool,
  pub w_simple: bool,
  pub partner: Option<Partner>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellClassification {
  pub cells: BTreeMap<Simplex, CellInfo>,
}

impl CellClassification {
  pub fn get(&self, s: &Simplex) -> &CellInfo {
    &self.cells[s]
  }

  pub fn critical(&self) -> impl Iterator<Item = &Simplex> + '_ {
    self.cells.iter().filter(|(_, c)| c.critical).map(|(s, _)| s)
  }

  pub fn not_w_simple(&self) -> impl Iterator<Item = &Simplex> + '_ {
    self.cells.iter().filter(|(_, c)| !c.w_simple).map(|(s, _)| s)
  }
}

/// Critical and w-simple flags for every simplex.
///
/// Panics if some simplex has witnesses in both directions, which cannot happen for a
/// validated Morse function.
pub fn classify(k: &WeightedComplex, f: &MorseFunction) -> CellClassification {
  let cofaces = k.complex().coface_index();
  let cells = witnesses(k, &f.values, &cofaces)
    .into_iter()
    .map(|(s, w)| {
      assert!(w.up.is_empty() || w.down.is_empty(), "{s} fails both Morse conditions");
      let ws = k.weight(&s).expect("simplex in complex");
      let w_simple = !ws.is_zero() && w.down.iter().all(|g| k.weight(g) == Some(ws));
      let partner = match (w.up.first(), w.down.first()) {
        (Some(b), _) => Some(Partner::Coface(b.clone())),
        (_, Some(g)) => Some(Partner::Face(g.clone())),
        _ => None,
      };
      let info = CellInfo { critical: partner.is_none(), w_simple, partner };
      (s, info)
    })
    .collect();
  CellClassification { cells }
}

/// `K(c)` together with its threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSubcomplex {
  pub threshold: BigRational,
  pub complex: WeightedComplex,
}

/// For every simplex, the least value among itself and all of its cofaces.
fn lowest_coface_values(k: &WeightedComplex, f: &MorseFunction) -> BTreeMap<Simplex, BigRational> {
  let cofaces = k.complex().coface_index();
  let mut by_dim: Vec<&Simplex> = k.complex().iter().collect();
  by_dim.sort_by_key(|s| std::cmp::Reverse(s.dim()));
  let mut low: BTreeMap<Simplex, BigRational> = BTreeMap::new();
  for s in by_dim {
    let mut m = f.value(s).clone();
    for b in &cofaces[s] {
      if low[b] < m {
        m = low[b].clone();
      }
    }
    low.insert(s.clone(), m);
  }
  low
}

/// `α ∈ K(c)` iff `f(α) ≤ c` or some coface `β > α` has `f(β) ≤ c`.
pub fn level_subcomplex(k: &WeightedComplex, f: &MorseFunction, c: &BigRational) -> LevelSubcomplex {
  let low = lowest_coface_values(k, f);
  let members: Vec<&Simplex> = low.iter().filter(|(_, v)| *v <= c).map(|(s, _)| s).collect();
  let complex = k.restrict(members).expect("level sets are face-closed");
  LevelSubcomplex { threshold: c.clone(), complex }
}

/// A certified collapse `K(upper) ↘ K(lower)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseCertificate {
  pub lower: BigRational,
  pub upper: BigRational,
  pub start: WeightedComplex,
  pub end: WeightedComplex,
  pub trace: CollapseTrace,
  pub start_homology: Vec<HomologyGroup>,
  pub end_homology: Vec<HomologyGroup>,
}

impl CollapseCertificate {
  pub fn homology_agrees(&self) -> bool {
    let pad = |h: &[HomologyGroup], n: usize| {
      let mut v = h.to_vec();
      v.resize(n, HomologyGroup::zero());
      v
    };
    let n = self.start_homology.len().max(self.end_homology.len());
    pad(&self.start_homology, n) == pad(&self.end_homology, n)
  }
}

/// Certifies `K(b) ↘ K(a)` when every simplex valued in `(a, b]` is non-critical and
/// w-simple.
///
/// Distinct values are processed from the top down. At each value `v`, the cells of
/// `K(v) ∖ K(v')` (with `v'` the next lower level) are exactly the pairs `(γ, α)` where
/// `f(α) = v` and `γ` is the face witness of `α`; pairs are collapsed in order of
/// descending dimension of `α`, then lexicographically.
pub fn morse_collapse(
  k: &WeightedComplex,
  f: &MorseFunction,
  a: &BigRational,
  b: &BigRational,
) -> Result<CollapseCertificate, MorseError> {
  if a >= b {
    return Err(MorseError::InvalidInterval { a: Box::new(a.clone()), b: Box::new(b.clone()) });
  }
  let cls = classify(k, f);
  for s in f.preimage(a, b) {
    let info = cls.get(s);
    if info.critical {
      return Err(MorseError::HypothesisFailed { simplex: s.clone(), reason: HypothesisReason::Critical });
    }
    if !info.w_simple {
      return Err(MorseError::HypothesisFailed { simplex: s.clone(), reason: HypothesisReason::NotWSimple });
    }
  }
  collapse_between(k, f, &cls, a, b)
}

fn collapse_between(
  k: &WeightedComplex,
  f: &MorseFunction,
  cls: &CellClassification,
  a: &BigRational,
  b: &BigRational,
) -> Result<CollapseCertificate, MorseError> {
  let start = level_subcomplex(k, f, b).complex;
  let mut current = start.clone();
  let mut trace = CollapseTrace::default();

  let mut levels: Vec<BigRational> = f.preimage(a, b).map(|s| f.value(s).clone()).collect();
  levels.sort();
  levels.dedup();
  levels.reverse();

  for (i, v) in levels.iter().enumerate() {
    let next_level = levels.get(i + 1).unwrap_or(a);
    let target = level_subcomplex(k, f, next_level).complex;
    let diff: BTreeSet<&Simplex> = current.complex().iter().filter(|s| !target.contains(s)).collect();

    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    let mut covered = BTreeSet::new();
    for alpha in diff.iter().filter(|s| f.value(s) == v) {
      if let Some(Partner::Face(gamma)) = &cls.get(alpha).partner {
        if !diff.contains(gamma) {
          return Err(MorseError::CollapseStuck(v.clone()));
        }
        covered.insert((*alpha).clone());
        covered.insert(gamma.clone());
        pairs.push((gamma.clone(), (*alpha).clone()));
      }
    }
    if covered.len() != diff.len() {
      return Err(MorseError::CollapseStuck(v.clone()));
    }
    pairs.sort_by(|(_, x), (_, y)| y.dim().cmp(&x.dim()).then_with(|| x.cmp(y)));

    while !pairs.is_empty() {
      let pos = pairs
        .iter()
        .position(|(g, al)| current.complex().free_face_of(g).as_ref() == Some(al))
        .ok_or_else(|| MorseError::CollapseStuck(v.clone()))?;
      let (gamma, _) = pairs.remove(pos);
      let (next, step) = elementary_collapse(&current, &gamma)?;
      let verdict = check_preservation(&current, &step);
      trace.steps.push((step, verdict));
      current = next;
    }
    if current != target {
      return Err(MorseError::CollapseStuck(v.clone()));
    }
  }

  let start_homology = homology(&start, None);
  let end_homology = homology(&current, None);
  let cert = CollapseCertificate {
    lower: a.clone(),
    upper: b.clone(),
    start,
    end: current,
    trace,
    start_homology,
    end_homology,
  };
  debug_assert!(cert.homology_agrees());
  Ok(cert)
}

/// Collapses on either side of the critical simplex, plus the removal relating
/// `K(a')` and `K(f(α))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCollapses {
  /// `K(b) ↘ K(f(α))`
  pub upper: CollapseCertificate,
  /// `K(a') ↘ K(a)`
  pub lower: CollapseCertificate,
  /// Present when `w(α) ≠ 0`.
  pub removal: Option<RemovalReport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCertificate {
  pub alpha: Simplex,
  pub alpha_value: BigRational,
  pub a: BigRational,
  pub b: BigRational,
  pub a_prime: BigRational,
  /// `K(f(α))`, in which `α` is maximal.
  pub upper_level: WeightedComplex,
  /// `K(a') = K(f(α)) ∖ {α}`.
  pub lower_level: WeightedComplex,
  /// Fails with [`MorseError::WSimpleFailed`] when a cell in `(a, a'] ∪ (f(α), b]` is not
  /// w-simple.
  pub extended: Result<WindowCollapses, MorseError>,
}

/// Certificate for a single critical simplex `alpha` in the window `(a, b]`.
///
/// `a'` is the largest of `a` and the values in `[a, f(α))`, so that `f⁻¹(a', f(α)] = {α}`.
/// Another simplex sharing the value `f(α)` leaves no such `a'` and is reported as
/// [`MorseError::NoValidAPrime`].
pub fn critical_window(
  k: &WeightedComplex,
  f: &MorseFunction,
  alpha: &Simplex,
  a: &BigRational,
  b: &BigRational,
) -> Result<WindowCertificate, MorseError> {
  if a >= b {
    return Err(MorseError::InvalidInterval { a: Box::new(a.clone()), b: Box::new(b.clone()) });
  }
  if !k.contains(alpha) {
    return Err(MorseError::UnknownSimplex(alpha.clone()));
  }
  let cls = classify(k, f);
  if !cls.get(alpha).critical {
    return Err(MorseError::NotCritical(alpha.clone()));
  }
  let fa = f.value(alpha).clone();
  if !(fa > *a && fa <= *b) {
    return Err(MorseError::NotInWindow(alpha.clone()));
  }
  if let Some(extra) = f.preimage(a, b).find(|s| *s != alpha && cls.get(s).critical) {
    return Err(MorseError::ExtraCritical(extra.clone()));
  }
  if let Some(tie) = f.values().iter().find(|(s, v)| *s != alpha && **v == fa).map(|(s, _)| s) {
    return Err(MorseError::NoValidAPrime(tie.clone()));
  }
  let a_prime = f.values().values().filter(|v| *v >= a && **v < fa).max().unwrap_or(a).clone();

  let upper_level = level_subcomplex(k, f, &fa).complex;
  let lower_level = level_subcomplex(k, f, &a_prime).complex;
  let expected = upper_level.without(&[alpha]).map_err(|_| MorseError::LevelMismatch(alpha.clone()))?;
  if !upper_level.complex().is_maximal(alpha) || expected != lower_level {
    return Err(MorseError::LevelMismatch(alpha.clone()));
  }

  let extended = extended_certificates(k, f, &cls, alpha, a, &a_prime, &fa, b, &upper_level);
  Ok(WindowCertificate {
    alpha: alpha.clone(),
    alpha_value: fa,
    a: a.clone(),
    b: b.clone(),
    a_prime,
    upper_level,
    lower_level,
    extended,
  })
}

#[allow(clippy::too_many_arguments)]
fn extended_certificates(
  k: &WeightedComplex,
  f: &MorseFunction,
  cls: &CellClassification,
  alpha: &Simplex,
  a: &BigRational,
  a_prime: &BigRational,
  fa: &BigRational,
  b: &BigRational,
  upper_level: &WeightedComplex,
) -> Result<WindowCollapses, MorseError> {
  if let Some(s) = f.preimage(a, a_prime).chain(f.preimage(fa, b)).find(|s| !cls.get(s).w_simple) {
    return Err(MorseError::WSimpleFailed(s.clone()));
  }
  let upper = collapse_between(k, f, cls, fa, b)?;
  let lower = collapse_between(k, f, cls, a, a_prime)?;
  let removal = if upper_level.weight(alpha).is_some_and(|w| !w.is_zero()) {
    Some(elementary_removal(upper_level, alpha)?.1)
  } else {
    None
  };
  Ok(WindowCollapses { upper, lower, removal })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::complex::Vertex;

  fn s(v: &[Vertex]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
  }

  fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
  }

  fn half(n: i64) -> BigRational {
    BigRational::new(n.into(), 2.into())
  }

  fn edge() -> WeightedComplex {
    WeightedComplex::constant_closure([s(&[0, 1])], 1.into())
  }

  #[test]
  fn exact_value_parsing() {
    assert_eq!(parse_value("3"), Some(q(3)));
    assert_eq!(parse_value("-1.5"), Some(-half(3)));
    assert_eq!(parse_value("5/2"), Some(half(5)));
    assert_eq!(parse_value("0.1"), Some(BigRational::new(1.into(), 10.into())));
    assert_eq!(parse_value("2.5e1"), Some(q(25)));
    assert_eq!(parse_value("15e-1"), Some(half(3)));
    assert_eq!(parse_value(".5"), Some(half(1)));
    for bad in ["", "x", "1/0", "1.2.3", "-", "1e", "e3"] {
      assert_eq!(parse_value(bad), None, "{bad}");
    }
  }

  #[test]
  fn dimension_function_is_valid_and_all_critical() {
    let k = WeightedComplex::constant_closure([s(&[0, 1, 2]), s(&[2, 3])], 1.into());
    let f = dimension_function(&k);
    let f = validate_morse(&k, f.values().clone()).unwrap();
    let cls = classify(&k, &f);
    assert!(cls.cells.values().all(|c| c.critical && c.w_simple));
  }

  #[test]
  fn flat_edge_violates_face_condition() {
    let values = [(s(&[0]), q(1)), (s(&[1]), q(1)), (s(&[0, 1]), q(1))].into_iter().collect();
    let err = validate_morse(&edge(), values).unwrap_err();
    assert_eq!(
      err,
      MorseError::Violations(vec![MorseViolation {
        simplex: s(&[0, 1]),
        condition: Condition::Faces,
        witnesses: vec![s(&[1]), s(&[0])],
      }])
    );
  }

  #[test]
  fn totality_is_checked() {
    let values = [(s(&[0]), q(1)), (s(&[1]), q(1))].into_iter().collect();
    assert_eq!(validate_morse(&edge(), values).unwrap_err(), MorseError::NotTotal(s(&[0, 1])));
    let values =
      [(s(&[0]), q(0)), (s(&[1]), q(0)), (s(&[0, 1]), q(1)), (s(&[7]), q(0))].into_iter().collect();
    assert_eq!(validate_morse(&edge(), values).unwrap_err(), MorseError::UnknownSimplex(s(&[7])));
  }

  #[test]
  fn paired_cell_that_is_not_w_simple() {
    // Vertex [1] weight 1, edge weight 2; the edge is matched down to [1].
    let k =
      WeightedComplex::validate([(vec![0], 1.into()), (vec![1], 1.into()), (vec![0, 1], BigInt::from(2))])
        .unwrap();
    let values = [(s(&[0]), q(1)), (s(&[1]), q(2)), (s(&[0, 1]), q(2))].into_iter().collect();
    let f = validate_morse(&k, values).unwrap();
    let cls = classify(&k, &f);
    let e = cls.get(&s(&[0, 1]));
    assert!(!e.critical && !e.w_simple);
    assert_eq!(e.partner, Some(Partner::Face(s(&[1]))));
    assert_eq!(cls.get(&s(&[1])).partner, Some(Partner::Coface(s(&[0, 1]))));
    assert!(cls.get(&s(&[0])).critical);
    let err = morse_collapse(&k, &f, &q(1), &q(2)).unwrap_err();
    assert_eq!(
      err,
      MorseError::HypothesisFailed { simplex: s(&[0, 1]), reason: HypothesisReason::NotWSimple }
    );
  }

  #[test]
  fn tie_with_critical_value_has_no_a_prime() {
    let k = WeightedComplex::constant_closure([s(&[0, 1]), s(&[2])], 1.into());
    let values =
      [(s(&[0]), q(0)), (s(&[1]), q(1)), (s(&[0, 1]), q(1)), (s(&[2]), q(1))].into_iter().collect();
    let f = validate_morse(&k, values).unwrap();
    assert_eq!(
      critical_window(&k, &f, &s(&[2]), &half(1), &q(1)).unwrap_err(),
      MorseError::NoValidAPrime(s(&[0, 1]))
    );
    assert_eq!(
      critical_window(&k, &f, &s(&[1]), &half(1), &q(1)).unwrap_err(),
      MorseError::NotCritical(s(&[1]))
    );
    assert_eq!(
      critical_window(&k, &f, &s(&[0]), &half(1), &q(1)).unwrap_err(),
      MorseError::NotInWindow(s(&[0]))
    );
  }

  #[test]
  fn level_extremes() {
    let k = edge();
    let f = dimension_function(&k);
    assert!(level_subcomplex(&k, &f, &q(-1)).complex.is_empty());
    assert_eq!(level_subcomplex(&k, &f, &q(1)).complex, k);
    assert_eq!(level_subcomplex(&k, &f, &half(1)).complex.len(), 2);
  }

  #[test]
  fn interval_checks() {
    let k = edge();
    let f = dimension_function(&k);
    assert!(matches!(morse_collapse(&k, &f, &q(1), &q(1)), Err(MorseError::InvalidInterval { .. })));
    let err = morse_collapse(&k, &f, &q(0), &q(1)).unwrap_err();
    assert_eq!(err, MorseError::HypothesisFailed { simplex: s(&[0, 1]), reason: HypothesisReason::Critical });
    let cert = morse_collapse(&k, &f, &q(2), &q(3)).unwrap();
    assert!(cert.trace.steps.is_empty());
    assert_eq!(cert.start, cert.end);
  }

  #[test]
  fn window_on_a_filled_triangle() {
    let k = WeightedComplex::constant_closure([s(&[0, 1, 2])], 1.into());
    let f = dimension_function(&k);
    let cert = critical_window(&k, &f, &s(&[0, 1, 2]), &half(3), &q(2)).unwrap();
    assert_eq!(cert.a_prime, half(3));
    assert_eq!(cert.lower_level.len(), 6);
    let ext = cert.extended.unwrap();
    assert!(ext.upper.trace.steps.is_empty() && ext.lower.trace.steps.is_empty());
    let removal = ext.removal.unwrap();
    assert_eq!(removal.predicted_homology, homology(&k, None));

    assert_eq!(
      critical_window(&k, &f, &s(&[0, 1]), &half(1), &q(2)).unwrap_err(),
      MorseError::ExtraCritical(s(&[0, 1, 2]))
    );
    assert_eq!(critical_window(&k, &f, &s(&[0, 1, 2]), &half(3), &half(5)).unwrap().a_prime, half(3));
  }
}
