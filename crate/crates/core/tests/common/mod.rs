#![allow(dead_code)]

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wmorse::{BigInt, Simplex, SimplicialComplex, WeightedComplex};

pub fn s(v: &[u32]) -> Simplex {
  Simplex::new(v.to_vec()).unwrap()
}

pub fn big(x: i64) -> BigInt {
  BigInt::from(x)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
  ChaCha8Rng::seed_from_u64(seed)
}

/// Random complex on at most `max_vertices` vertices, built from a few random generators
/// of dimension at most `max_dim`.
pub fn random_complex(r: &mut impl Rng, max_vertices: u32, max_dim: usize) -> SimplicialComplex {
  let n = r.gen_range(1..=max_vertices);
  let gens = r.gen_range(1..=5);
  let mut all: Vec<u32> = (0..n).collect();
  let mut generators = Vec::new();
  for _ in 0..gens {
    all.shuffle(r);
    let d = r.gen_range(0..=max_dim.min(n as usize - 1));
    generators.push(Simplex::new(all[..=d].to_vec()).unwrap());
  }
  // Isolated vertices too.
  for v in 0..n {
    if r.gen_bool(0.2) {
      generators.push(Simplex::vertex(v));
    }
  }
  SimplicialComplex::closure(generators)
}

/// Weights assigned bottom-up so each simplex is a multiple of the lcm of its face weights,
/// with zeros and negative signs mixed in.
pub fn random_weights(r: &mut impl Rng, k: &SimplicialComplex, zeros: bool) -> WeightedComplex {
  let mut cells: Vec<&Simplex> = k.iter().collect();
  cells.sort_by_key(|s| s.dim());
  let mut w: BTreeMap<Simplex, BigInt> = BTreeMap::new();
  for s in cells {
    let faces = if s.dim() == 0 { Vec::new() } else { s.faces() };
    let forced_zero = faces.iter().any(|f| w[f] == BigInt::from(0));
    let value = if forced_zero || (zeros && r.gen_bool(0.08)) {
      BigInt::from(0)
    } else {
      let base = faces.iter().fold(BigInt::from(1), |acc, f| acc.lcm(&w[f]));
      let factor: i64 = *[1, 1, 1, 2, 3, -1, -2].choose(r).unwrap();
      base * factor
    };
    w.insert(s.clone(), value);
  }
  WeightedComplex::from_weight_map(w).expect("generator respects divisibility")
}

pub fn random_wsc(seed: u64, zeros: bool) -> WeightedComplex {
  let mut r = rng(seed);
  let k = random_complex(&mut r, 8, 3);
  random_weights(&mut r, &k, zeros)
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
  let n = m.len();
  if n == 0 {
    return 1;
  }
  if n == 1 {
    return m[0][0];
  }
  (0..n)
    .map(|j| {
      let minor: Vec<Vec<i128>> = m[1..].iter().map(|row| [&row[..j], &row[j + 1..]].concat()).collect();
      let sign = if j % 2 == 0 { 1 } else { -1 };
      sign * m[0][j] * det(&minor)
    })
    .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
  if k == 0 {
    return vec![vec![]];
  }
  if n < k {
    return vec![];
  }
  let mut out = subsets(n - 1, k);
  for mut rest in subsets(n - 1, k - 1) {
    rest.push(n - 1);
    out.push(rest);
  }
  out
}

/// gcd of all k×k minors (0 if every minor vanishes).
pub fn minor_gcd(m: &[Vec<i128>], k: usize) -> i128 {
  let rows = m.len();
  let cols = m.first().map_or(0, Vec::len);
  let mut g = 0i128;
  for rs in subsets(rows, k) {
    for cs in subsets(cols, k) {
      let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
      g = g.gcd(&det(&sub));
    }
  }
  g
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank_q(m: &[Vec<BigInt>]) -> usize {
  let mut a: Vec<Vec<BigInt>> = m.to_vec();
  let rows = a.len();
  let cols = a.first().map_or(0, Vec::len);
  let mut rank = 0;
  let zero = BigInt::from(0);
  for c in 0..cols {
    let Some(p) = (rank..rows).find(|&i| a[i][c] != zero) else {
      continue;
    };
    a.swap(rank, p);
    for i in rank + 1..rows {
      if a[i][c] == zero {
        continue;
      }
      let (top, lead) = (a[rank][c].clone(), a[i][c].clone());
      for j in c..cols {
        let v = &a[i][j] * &top - &a[rank][j] * &lead;
        a[i][j] = v;
      }
    }
    rank += 1;
  }
  rank
}

pub fn matrix_rows(m: &wmorse::IntMatrix) -> Vec<Vec<BigInt>> {
  (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect()).collect()
}

/// Boundary of the standard `n`-simplex on vertices `0..=n`.
pub fn sphere(n: usize) -> Vec<Simplex> {
  let top: Vec<u32> = (0..=n as u32 + 1).collect();
  Simplex::new(top).unwrap().faces()
}

pub fn full_simplex(n: usize) -> Vec<Simplex> {
  vec![Simplex::new((0..=n as u32).collect()).unwrap()]
}

/// Performs every available elementary collapse of `k` whose verdict guarantees
/// preservation and recomputes homology. Returns the number of collapses checked, or a
/// description of the first counterexample.
pub fn check_guaranteed_collapses(k: &WeightedComplex) -> Result<usize, String> {
  use wmorse::collapse::{check_preservation, elementary_collapse};
  use wmorse::homology::homology;
  let before = homology(k, k.dim());
  let mut checked = 0;
  for sigma in k.complex().iter() {
    let Ok((l, step)) = elementary_collapse(k, sigma) else {
      continue;
    };
    let verdict = check_preservation(k, &step);
    if !verdict.tag.guarantees_preservation() {
      continue;
    }
    let mut after = homology(&l, k.dim());
    after.resize(before.len(), wmorse::HomologyGroup::zero());
    if after != before {
      return Err(format!(
        "{:?} removing {} / {}: {:?} vs {:?}",
        verdict.tag, step.face, step.coface, before, after
      ));
    }
    checked += 1;
  }
  Ok(checked)
}

/// Removes `sigma` and compares the recomputed homology of `k` with the prediction made
/// from the smaller complex, plus a rational-rank oracle for the torsion test.
pub fn check_removal(k: &WeightedComplex, sigma: &Simplex) -> Result<(), String> {
  use wmorse::collapse::elementary_removal;
  use wmorse::homology::{boundary_matrices, homology};
  let (l, report) = elementary_removal(k, sigma).map_err(|e| e.to_string())?;
  let n = sigma.dim();
  let top = k.dim().unwrap();
  let mut actual = homology(k, Some(top));
  actual.resize(top + 1, wmorse::HomologyGroup::zero());
  let mut rest = homology(&l, Some(top));
  rest.resize(top + 1, wmorse::HomologyGroup::zero());
  for d in 0..=top {
    if d + 1 != n && d != n && actual[d] != rest[d] {
      return Err(format!("H{d} changed when removing {sigma}"));
    }
  }
  if n > 0 && actual[n - 1] != report.predicted_homology[n - 1] {
    return Err(format!("quotient mismatch in H{} for {sigma}", n - 1));
  }
  if n > 0 {
    // [∂σ] is torsion iff ∂σ lies in the rational span of the image of ∂_n(L).
    let b = boundary_matrices(&l).matrix(n);
    let with = b.with_column(&report.boundary);
    let torsion = rank_q(&matrix_rows(&with)) == rank_q(&matrix_rows(&b));
    if torsion != report.class_order.is_torsion() {
      return Err(format!("class order {} disagrees with rank oracle for {sigma}", report.class_order));
    }
  }
  let expect_n = if report.class_order.is_torsion() { rest[n].plus_free() } else { rest[n].clone() };
  if actual[n] != expect_n {
    return Err(format!("H{n} dichotomy fails for {sigma}: {:?} vs {:?}", actual[n], expect_n));
  }
  if actual != report.predicted_homology {
    return Err(format!("prediction mismatch for {sigma}"));
  }
  Ok(())
}

/// Maximal simplices of nonzero weight.
pub fn removable(k: &WeightedComplex) -> Vec<Simplex> {
  k.complex()
    .iter()
    .filter(|c| k.complex().is_maximal(c) && !k.weight(c).unwrap().is_zero())
    .cloned()
    .collect()
}
