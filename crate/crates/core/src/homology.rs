//! Weighted chain complexes and their homology over ℤ.
//!
//! Chains in dimension `n` are spanned by the `n`-simplices of nonzero weight, and the
//! weighted boundary of `σ = [v_0, …, v_n]` is
//! `Σ_i (-1)^i · w(σ)/w(d_i σ) · d_i σ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::complex::{Simplex, WeightedComplex};
use crate::linalg::{smith_normal_form, IntMatrix};

/// One homology group `ℤ^free_rank ⊕ ℤ/t_1 ⊕ … ⊕ ℤ/t_k` with `t_1 | t_2 | … | t_k`, all `> 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
  pub free_rank: usize,
  pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
  pub fn zero() -> Self {
    Self::default()
  }

  pub fn free(rank: usize) -> Self {
    Self { free_rank: rank, torsion: Vec::new() }
  }

  pub fn new(free_rank: usize, torsion: impl IntoIterator<Item = BigInt>) -> Self {
    Self { free_rank, torsion: torsion.into_iter().collect() }
  }

  pub fn is_zero(&self) -> bool {
    self.free_rank == 0 && self.torsion.is_empty()
  }

  /// `self ⊕ ℤ`
  pub fn plus_free(&self) -> Self {
    Self { free_rank: self.free_rank + 1, torsion: self.torsion.clone() }
  }

  fn from_factors(free_rank: usize, factors: &[BigInt]) -> Self {
    Self { free_rank, torsion: factors.iter().filter(|d| !d.is_one()).cloned().collect() }
  }
}

impl fmt::Display for HomologyGroup {
  /// `Z^2 (+) Z/2 (+) Z/4`, or `0`.
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if self.is_zero() {
      return write!(f, "0");
    }
    let mut parts = Vec::new();
    if self.free_rank > 0 {
      parts.push(format!("Z^{}", self.free_rank));
    }
    parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
    write!(f, "{}", parts.join(" (+) "))
  }
}

/// Per-dimension lexicographically ordered lists of nonzero-weight simplices.
#[derive(Clone, Debug, Default)]
pub struct ChainBasis {
  cells: Vec<Vec<Simplex>>,
  index: BTreeMap<Simplex, usize>,
}

impl ChainBasis {
  pub fn new(k: &WeightedComplex) -> Self {
    let top = k.dim().map_or(0, |d| d + 1);
    let mut cells = vec![Vec::new(); top];
    let mut index = BTreeMap::new();
    for (s, w) in k.iter() {
      if w.is_zero() {
        continue;
      }
      let cell = &mut cells[s.dim()];
      index.insert(s.clone(), cell.len());
      cell.push(s.clone());
    }
    Self { cells, index }
  }

  /// Basis of `C_n`; empty beyond the top dimension.
  pub fn cells(&self, n: usize) -> &[Simplex] {
    self.cells.get(n).map_or(&[], Vec::as_slice)
  }

  pub fn rank(&self, n: usize) -> usize {
    self.cells(n).len()
  }

  /// Position of `s` within its dimension's basis.
  pub fn position(&self, s: &Simplex) -> Option<usize> {
    self.index.get(s).copied()
  }
}

/// The weighted boundary of a single nonzero-weight simplex as `(face, coefficient)` terms.
/// Faces of weight zero cannot occur: they would force `w(σ) = 0`.
pub fn weighted_boundary_terms(k: &WeightedComplex, s: &Simplex) -> Vec<(Simplex, BigInt)> {
  let ws = k.weight(s).expect("simplex in complex");
  assert!(!ws.is_zero(), "zero-weight simplex has no boundary chain");
  s.faces()
    .into_iter()
    .enumerate()
    .map(|(i, face)| {
      let wf = k.weight(&face).expect("complex is face-closed");
      let (q, r) = ws.div_rem(wf);
      assert!(r.is_zero(), "inexact weight ratio w({s})/w({face})");
      let coeff = if i % 2 == 0 { q } else { -q };
      (face, coeff)
    })
    .collect()
}

/// Boundary matrices `∂_n` for `n ≥ 1` over a fixed [`ChainBasis`].
#[derive(Clone, Debug)]
pub struct WeightedBoundary {
  basis: ChainBasis,
  matrices: Vec<IntMatrix>,
}

impl WeightedBoundary {
  pub fn basis(&self) -> &ChainBasis {
    &self.basis
  }

  /// `∂_n : C_n → C_{n-1}`; `∂_0` is the zero map to the zero module.
  pub fn matrix(&self, n: usize) -> IntMatrix {
    if n == 0 {
      return IntMatrix::zeros(0, self.basis.rank(0));
    }
    match self.matrices.get(n) {
      Some(m) => m.clone(),
      None => IntMatrix::zeros(self.basis.rank(n - 1), self.basis.rank(n)),
    }
  }

  /// Coordinates of the boundary of `s` in the basis of `C_{dim s - 1}`.
  pub fn column_of(&self, s: &Simplex) -> Option<Vec<BigInt>> {
    let n = s.dim();
    let j = self.basis.position(s)?;
    if n == 0 {
      return Some(Vec::new());
    }
    Some(self.matrices[n].column(j))
  }
}

/// Builds `∂_n` for every dimension of `k`.
pub fn boundary_matrices(k: &WeightedComplex) -> WeightedBoundary {
  let basis = ChainBasis::new(k);
  let top = k.dim().unwrap_or(0);
  let mut matrices = vec![IntMatrix::zeros(0, basis.rank(0))];
  for n in 1..=top {
    let mut m = IntMatrix::zeros(basis.rank(n - 1), basis.rank(n));
    for (j, s) in basis.cells(n).iter().enumerate() {
      for (face, c) in weighted_boundary_terms(k, s) {
        let i = basis.position(&face).expect("face of nonzero weight is in the basis");
        m[(i, j)] = c;
      }
    }
    matrices.push(m);
  }
  WeightedBoundary { basis, matrices }
}

/// `H_0 … H_top` where `top = min(dim K, max_dim)`. Empty for the empty complex.
pub fn homology(k: &WeightedComplex, max_dim: Option<usize>) -> Vec<HomologyGroup> {
  let Some(dim) = k.dim() else { return Vec::new() };
  let top = max_dim.map_or(dim, |m| m.min(dim));
  let boundary = boundary_matrices(k);
  homology_from_boundary(&boundary, top)
}

fn homology_from_boundary(boundary: &WeightedBoundary, top: usize) -> Vec<HomologyGroup> {
  // snf[n] = SNF of ∂_n, for n in 0..=top+1
  let snf: Vec<_> = (0..=top + 1).map(|n| smith_normal_form(&boundary.matrix(n), false)).collect();
  (0..=top)
    .map(|n| {
      let cycles = boundary.basis.rank(n) - snf[n].rank();
      let next = &snf[n + 1];
      HomologyGroup::from_factors(cycles - next.rank(), &next.invariant_factors)
    })
    .collect()
}

/// Order of a homology class in `H_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassOrder {
  Zero,
  /// Least `k > 1` with `k·z` a boundary.
  Torsion(BigInt),
  Infinite,
}

impl ClassOrder {
  /// Annihilated by some nonzero integer (the zero class included).
  pub fn is_torsion(&self) -> bool {
    !matches!(self, ClassOrder::Infinite)
  }
}

impl fmt::Display for ClassOrder {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match self {
      ClassOrder::Zero => write!(f, "zero"),
      ClassOrder::Torsion(k) => write!(f, "torsion({k})"),
      ClassOrder::Infinite => write!(f, "infinite"),
    }
  }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
  #[error("vector has length {got}, expected {expected} (rank of C_{dim})")]
  DimensionMismatch { dim: usize, expected: usize, got: usize },
  #[error("chain is not a cycle in dimension {0}")]
  NotACycle(usize),
}

/// Order of `[z]` in `H_n(K, w)` for a cycle `z` given in [`ChainBasis`] coordinates.
pub fn homology_class_order(
  k: &WeightedComplex,
  n: usize,
  z: &[BigInt],
) -> Result<ClassOrder, HomologyError> {
  let boundary = boundary_matrices(k);
  check_cycle(&boundary, n, z)?;
  Ok(class_order_in(&boundary.matrix(n + 1), z))
}

fn check_cycle(boundary: &WeightedBoundary, n: usize, z: &[BigInt]) -> Result<(), HomologyError> {
  let expected = boundary.basis.rank(n);
  if z.len() != expected {
    return Err(HomologyError::DimensionMismatch { dim: n, expected, got: z.len() });
  }
  if boundary.matrix(n).mul_vec(z).iter().any(|x| !x.is_zero()) {
    return Err(HomologyError::NotACycle(n));
  }
  Ok(())
}

/// Least `k ≥ 1` with `k·z` in the column space of `image`, via the row transform `U` of
/// its Smith form: `k·z ∈ col(A)` iff `k·(Uz)_i` is divisible by `d_i` on pivot rows and
/// `(Uz)_i = 0` elsewhere.
pub(crate) fn class_order_in(image: &IntMatrix, z: &[BigInt]) -> ClassOrder {
  if z.iter().all(Zero::is_zero) {
    return ClassOrder::Zero;
  }
  let snf = smith_normal_form(image, true);
  let u = snf.row_transform().expect("transforms requested");
  let y = u.mul_vec(z);
  let r = snf.rank();
  if y[r..].iter().any(|x| !x.is_zero()) {
    return ClassOrder::Infinite;
  }
  let k = snf.invariant_factors.iter().zip(&y).fold(BigInt::one(), |acc, (d, yi)| {
    let need = d / d.gcd(yi);
    acc.lcm(&need)
  });
  if k.is_one() {
    ClassOrder::Zero
  } else {
    ClassOrder::Torsion(k)
  }
}

/// `H_n(K, w) / ⟨[z]⟩` for a cycle `z`, computed by appending `z` to `∂_{n+1}`.
pub fn quotient_by_class(
  k: &WeightedComplex,
  n: usize,
  z: &[BigInt],
) -> Result<HomologyGroup, HomologyError> {
  let boundary = boundary_matrices(k);
  check_cycle(&boundary, n, z)?;
  let cycles = boundary.basis.rank(n) - smith_normal_form(&boundary.matrix(n), false).rank();
  let extended = boundary.matrix(n + 1).with_column(z);
  let snf = smith_normal_form(&extended, false);
  Ok(HomologyGroup::from_factors(cycles - snf.rank(), &snf.invariant_factors))
}
