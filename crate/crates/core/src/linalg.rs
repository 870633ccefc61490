//! Exact integer matrices and Smith normal form.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
  rows: usize,
  cols: usize,
  data: Vec<BigInt>,
}

impl IntMatrix {
  pub fn zeros(rows: usize, cols: usize) -> Self {
    Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
  }

  pub fn identity(n: usize) -> Self {
    let mut m = Self::zeros(n, n);
    for i in 0..n {
      m[(i, i)] = BigInt::one();
    }
    m
  }

  /// Panics if the rows are ragged.
  pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
    let cols = rows.first().map_or(0, Vec::len);
    let mut data = Vec::with_capacity(rows.len() * cols);
    for r in rows {
      assert_eq!(r.len(), cols, "ragged rows");
      data.extend(r.iter().cloned().map(Into::into));
    }
    Self { rows: rows.len(), cols, data }
  }

  pub fn rows(&self) -> usize {
    self.rows
  }

  pub fn cols(&self) -> usize {
    self.cols
  }

  pub fn is_zero(&self) -> bool {
    self.data.iter().all(Zero::is_zero)
  }

  pub fn column(&self, j: usize) -> Vec<BigInt> {
    (0..self.rows).map(|i| self[(i, j)].clone()).collect()
  }

  /// Copy of `self` with `col` appended on the right.
  pub fn with_column(&self, col: &[BigInt]) -> Self {
    assert_eq!(col.len(), self.rows);
    let mut m = Self::zeros(self.rows, self.cols + 1);
    for i in 0..self.rows {
      for j in 0..self.cols {
        m[(i, j)] = self[(i, j)].clone();
      }
      m[(i, self.cols)] = col[i].clone();
    }
    m
  }

  pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(v.len(), self.cols);
    (0..self.rows)
      .map(|i| (0..self.cols).fold(BigInt::zero(), |acc, j| acc + &self[(i, j)] * &v[j]))
      .collect()
  }

  pub fn transpose(&self) -> Self {
    let mut t = Self::zeros(self.cols, self.rows);
    for i in 0..self.rows {
      for j in 0..self.cols {
        t[(j, i)] = self[(i, j)].clone();
      }
    }
    t
  }

  fn swap_rows(&mut self, a: usize, b: usize) {
    if a == b {
      return;
    }
    for j in 0..self.cols {
      self.data.swap(a * self.cols + j, b * self.cols + j);
    }
  }

  fn swap_cols(&mut self, a: usize, b: usize) {
    if a == b {
      return;
    }
    for i in 0..self.rows {
      self.data.swap(i * self.cols + a, i * self.cols + b);
    }
  }

  /// row[dst] += k * row[src]
  fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
    for j in 0..self.cols {
      let v = &self[(src, j)] * k;
      self[(dst, j)] += v;
    }
  }

  /// col[dst] += k * col[src]
  fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
    for i in 0..self.rows {
      let v = &self[(i, src)] * k;
      self[(i, dst)] += v;
    }
  }

  fn negate_row(&mut self, r: usize) {
    for j in 0..self.cols {
      let v = -&self[(r, j)];
      self[(r, j)] = v;
    }
  }
}

impl Index<(usize, usize)> for IntMatrix {
  type Output = BigInt;

  fn index(&self, (i, j): (usize, usize)) -> &BigInt {
    assert!(i < self.rows && j < self.cols);
    &self.data[i * self.cols + j]
  }
}

impl IndexMut<(usize, usize)> for IntMatrix {
  fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
    assert!(i < self.rows && j < self.cols);
    &mut self.data[i * self.cols + j]
  }
}

impl Mul for &IntMatrix {
  type Output = IntMatrix;

  fn mul(self, rhs: &IntMatrix) -> IntMatrix {
    assert_eq!(self.cols, rhs.rows);
    let mut out = IntMatrix::zeros(self.rows, rhs.cols);
    for i in 0..self.rows {
      for k in 0..self.cols {
        let a = &self[(i, k)];
        if a.is_zero() {
          continue;
        }
        for j in 0..rhs.cols {
          out[(i, j)] += a * &rhs[(k, j)];
        }
      }
    }
    out
  }
}

impl fmt::Debug for IntMatrix {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
    for i in 0..self.rows {
      let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
      writeln!(f, "  [{}]", row.join(", "))?;
    }
    write!(f, "]")
  }
}

/// Invariant factors `d_1 | d_2 | … | d_r` (all positive) and, on request, unimodular
/// `U`, `V` with `U·A·V` equal to the diagonal matrix padded with zeros.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
  pub invariant_factors: Vec<BigInt>,
  pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithDecomposition {
  pub fn rank(&self) -> usize {
    self.invariant_factors.len()
  }

  /// Invariant factors greater than one.
  pub fn torsion(&self) -> Vec<BigInt> {
    self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
  }

  /// Row transform `U`, when computed.
  pub fn row_transform(&self) -> Option<&IntMatrix> {
    self.transforms.as_ref().map(|(u, _)| u)
  }

  /// Column transform `V`, when computed.
  pub fn col_transform(&self) -> Option<&IntMatrix> {
    self.transforms.as_ref().map(|(_, v)| v)
  }
}

/// Smith normal form.
///
/// Without transforms the matrix is first reduced sparsely (see [`invariant_factors`]).
/// With transforms every stage moves the nonzero entry of least absolute value to the
/// pivot, clears its row and column by Euclidean steps, and folds in any row whose entries
/// the pivot does not divide.
pub fn smith_normal_form(a: &IntMatrix, want_transforms: bool) -> SmithDecomposition {
  if !want_transforms {
    return SmithDecomposition { invariant_factors: invariant_factors(a), transforms: None };
  }
  dense_smith(a, true)
}

fn dense_smith(a: &IntMatrix, want_transforms: bool) -> SmithDecomposition {
  let mut m = a.clone();
  let (rows, cols) = (m.rows, m.cols);
  let mut tr = want_transforms.then(|| (IntMatrix::identity(rows), IntMatrix::identity(cols)));
  let mut factors = Vec::new();

  for t in 0..rows.min(cols) {
    let Some((pi, pj)) = min_abs_entry(&m, t..rows, t..cols) else {
      break;
    };
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);
    if let Some((u, v)) = tr.as_mut() {
      u.swap_rows(t, pi);
      v.swap_cols(t, pj);
    }

    loop {
      let mut clean = true;
      for i in t + 1..rows {
        if m[(i, t)].is_zero() {
          continue;
        }
        let q = -(&m[(i, t)] / &m[(t, t)]);
        m.add_row_multiple(i, t, &q);
        if let Some((u, _)) = tr.as_mut() {
          u.add_row_multiple(i, t, &q);
        }
        clean &= m[(i, t)].is_zero();
      }
      for j in t + 1..cols {
        if m[(t, j)].is_zero() {
          continue;
        }
        let q = -(&m[(t, j)] / &m[(t, t)]);
        m.add_col_multiple(j, t, &q);
        if let Some((_, v)) = tr.as_mut() {
          v.add_col_multiple(j, t, &q);
        }
        clean &= m[(t, j)].is_zero();
      }
      if !clean {
        // A remainder smaller than the pivot survived in row or column t.
        let pivot = m[(t, t)].abs();
        let mut best = (t, t, pivot);
        for i in t + 1..rows {
          let x = m[(i, t)].abs();
          if !x.is_zero() && x < best.2 {
            best = (i, t, x);
          }
        }
        for j in t + 1..cols {
          let x = m[(t, j)].abs();
          if !x.is_zero() && x < best.2 {
            best = (t, j, x);
          }
        }
        let (bi, bj, _) = best;
        m.swap_rows(t, bi);
        m.swap_cols(t, bj);
        if let Some((u, v)) = tr.as_mut() {
          u.swap_rows(t, bi);
          v.swap_cols(t, bj);
        }
        continue;
      }
      // Pivot must divide the remaining block.
      let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[(i, j)] % &m[(t, t)]).is_zero()));
      match bad_row {
        Some(i) => {
          let one = BigInt::one();
          m.add_row_multiple(t, i, &one);
          if let Some((u, _)) = tr.as_mut() {
            u.add_row_multiple(t, i, &one);
          }
        }
        None => break,
      }
    }

    if m[(t, t)].is_negative() {
      m.negate_row(t);
      if let Some((u, _)) = tr.as_mut() {
        u.negate_row(t);
      }
    }
    factors.push(m[(t, t)].clone());
  }

  SmithDecomposition { invariant_factors: factors, transforms: tr }
}

fn min_abs_entry(
  m: &IntMatrix,
  rows: std::ops::Range<usize>,
  cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
  let mut best: Option<(usize, usize, BigInt)> = None;
  for i in rows {
    for j in cols.clone() {
      let x = m[(i, j)].abs();
      if x.is_zero() {
        continue;
      }
      if best.as_ref().is_none_or(|b| x < b.2) {
        best = Some((i, j, x));
      }
    }
  }
  best.map(|(i, j, _)| (i, j))
}

/// Invariant factors only.
///
/// Pivots are taken greedily on entries dividing every other entry of their row and column,
/// preferring units and low fill-in; such a pivot splits off as a diagonal entry. Whatever
/// remains is handed to the dense algorithm and the collected diagonal is normalized into a
/// divisibility chain.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
  let mut sp = Sparse::from_dense(a);
  let mut diagonal = Vec::new();
  while let Some((i, j)) = sp.pick_pivot() {
    diagonal.push(sp.eliminate(i, j));
  }
  let rest = sp.into_dense();
  diagonal.extend(dense_smith(&rest, false).invariant_factors);
  normalize_diagonal(diagonal)
}

/// Turns any diagonal into the invariant factors of the same cokernel.
fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
  d.retain(|x| !x.is_zero());
  d.iter_mut().for_each(|x| *x = x.abs());
  d.sort();
  for i in 0..d.len() {
    for j in i + 1..d.len() {
      if (&d[j] % &d[i]).is_zero() {
        continue;
      }
      let g = d[i].gcd(&d[j]);
      let l = &d[i] / &g * &d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  d
}

struct Sparse {
  rows: Vec<Vec<(usize, BigInt)>>,
  cols: Vec<BTreeSet<usize>>,
}

impl Sparse {
  fn from_dense(a: &IntMatrix) -> Self {
    let mut rows = vec![Vec::new(); a.rows];
    let mut cols = vec![BTreeSet::new(); a.cols];
    for (i, row) in rows.iter_mut().enumerate() {
      for (j, col) in cols.iter_mut().enumerate() {
        let x = &a[(i, j)];
        if !x.is_zero() {
          row.push((j, x.clone()));
          col.insert(i);
        }
      }
    }
    Self { rows, cols }
  }

  fn entry(&self, i: usize, j: usize) -> &BigInt {
    let row = &self.rows[i];
    &row[row.binary_search_by_key(&j, |e| e.0).expect("entry present")].1
  }

  /// Lowest-cost admissible pivot; a unit with no fill-in is taken immediately.
  fn pick_pivot(&self) -> Option<(usize, usize)> {
    let mut best: Option<(bool, usize, usize, usize)> = None;
    for (j, col) in self.cols.iter().enumerate() {
      if col.is_empty() {
        continue;
      }
      let (i, p) =
        col.iter().map(|&i| (i, self.entry(i, j))).min_by(|x, y| x.1.abs().cmp(&y.1.abs())).unwrap();
      let unit = p.abs().is_one();
      if !unit {
        let divides = |x: &BigInt| (x % p).is_zero();
        if !col.iter().all(|&r| divides(self.entry(r, j))) || !self.rows[i].iter().all(|(_, x)| divides(x)) {
          continue;
        }
      }
      let cost = (col.len() - 1) * (self.rows[i].len() - 1);
      if unit && cost == 0 {
        return Some((i, j));
      }
      let key = (!unit, cost, i, j);
      if best.as_ref().is_none_or(|b| key < *b) {
        best = Some(key);
      }
    }
    best.map(|(_, _, i, j)| (i, j))
  }

  /// Clears column `j` with row `i`, then drops both; returns the pivot.
  fn eliminate(&mut self, i: usize, j: usize) -> BigInt {
    let p = self.entry(i, j).clone();
    let pivot_row = std::mem::take(&mut self.rows[i]);
    for (k, _) in &pivot_row {
      self.cols[*k].remove(&i);
    }
    let targets: Vec<usize> = self.cols[j].iter().copied().collect();
    for r in targets {
      let factor = self.entry(r, j) / &p;
      let old = std::mem::take(&mut self.rows[r]);
      let mut merged = Vec::with_capacity(old.len() + pivot_row.len());
      let (mut x, mut y) = (old.into_iter().peekable(), pivot_row.iter().peekable());
      loop {
        let take_old = match (x.peek(), y.peek()) {
          (None, None) => break,
          (Some(_), None) => Some(true),
          (None, Some(_)) => Some(false),
          (Some(a), Some(b)) => match a.0.cmp(&b.0) {
            Ordering::Less => Some(true),
            Ordering::Greater => Some(false),
            Ordering::Equal => None,
          },
        };
        let (k, v) = match take_old {
          Some(true) => x.next().unwrap(),
          Some(false) => {
            let (k, v) = y.next().unwrap();
            (*k, -(v * &factor))
          }
          None => {
            let (k, a) = x.next().unwrap();
            let (_, v) = y.next().unwrap();
            (k, a - v * &factor)
          }
        };
        if v.is_zero() {
          self.cols[k].remove(&r);
        } else {
          self.cols[k].insert(r);
          merged.push((k, v));
        }
      }
      self.rows[r] = merged;
    }
    debug_assert!(self.cols[j].is_empty());
    p.abs()
  }

  /// Remaining nonzero block, compacted.
  fn into_dense(self) -> IntMatrix {
    let live_rows: Vec<usize> = (0..self.rows.len()).filter(|&i| !self.rows[i].is_empty()).collect();
    let live_cols: Vec<usize> = (0..self.cols.len()).filter(|&j| !self.cols[j].is_empty()).collect();
    let mut m = IntMatrix::zeros(live_rows.len(), live_cols.len());
    for (ri, &i) in live_rows.iter().enumerate() {
      for (k, v) in &self.rows[i] {
        let cj = live_cols.binary_search(k).expect("live column");
        m[(ri, cj)] = v.clone();
      }
    }
    m
  }
}

/// Rank over ℤ (equivalently over ℚ).
pub fn rank(a: &IntMatrix) -> usize {
  smith_normal_form(a, false).rank()
}

#[cfg(test)]
mod tests {
  use super::*;

  fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
    smith_normal_form(&IntMatrix::from_rows(rows), false)
      .invariant_factors
      .iter()
      .map(|d| i64::try_from(d).unwrap())
      .collect()
  }

  #[test]
  fn two_by_two_diagonal() {
    assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
  }

  #[test]
  fn gcd_pattern_from_path_boundary() {
    for (a, b) in [(6i64, 10i64), (4, 6), (7, 13), (12, 18), (1, 1)] {
      let g = num_integer::Integer::gcd(&a, &b);
      let f = factors(&[vec![-b, 0], vec![1, -1], vec![0, a]]);
      if g == 1 {
        assert_eq!(f, vec![1, 1]);
      } else {
        assert_eq!(f, vec![1, g]);
      }
    }
  }

  #[test]
  fn zero_and_empty() {
    assert!(factors(&[vec![0, 0, 0], vec![0, 0, 0]]).is_empty());
    let empty = IntMatrix::zeros(0, 4);
    assert_eq!(rank(&empty), 0);
    assert_eq!(rank(&IntMatrix::zeros(3, 0)), 0);
  }

  #[test]
  fn identity_rank() {
    assert_eq!(rank(&IntMatrix::identity(3)), 3);
  }

  #[test]
  fn sparse_and_dense_agree() {
    let mut seed = 7u64;
    let mut next = move || {
      seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
      ((seed >> 33) % 7) as i64 - 3
    };
    for _ in 0..300 {
      let (r, c) = (1 + (next().unsigned_abs() as usize % 6), 1 + (next().unsigned_abs() as usize % 6));
      let rows: Vec<Vec<i64>> =
        (0..r).map(|_| (0..c).map(|_| if next() > 0 { next() * 2 } else { next() }).collect()).collect();
      let m = IntMatrix::from_rows(&rows);
      assert_eq!(invariant_factors(&m), dense_smith(&m, false).invariant_factors, "{m:?}");
    }
  }

  #[test]
  fn diagonal_normalization() {
    let d = normalize_diagonal(vec![BigInt::from(4), BigInt::from(-6), BigInt::from(0), BigInt::from(1)]);
    assert_eq!(d, [1, 2, 12].map(BigInt::from));
  }

  #[test]
  fn transforms_reproduce_diagonal() {
    let a = IntMatrix::from_rows(&[vec![4i64, 6, 2], vec![8, -4, 0], vec![2, 2, 6]]);
    let snf = smith_normal_form(&a, true);
    let (u, v) = snf.transforms.clone().unwrap();
    let d = &(&u * &a) * &v;
    for i in 0..3 {
      for j in 0..3 {
        let expect = if i == j && i < snf.rank() { snf.invariant_factors[i].clone() } else { BigInt::zero() };
        assert_eq!(d[(i, j)], expect);
      }
    }
  }
}
