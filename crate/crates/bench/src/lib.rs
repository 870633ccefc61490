//! Deterministic workloads for the benchmarks.

use wmorse::sequence::{Alphabet, LetterWeights, Sequence};
use wmorse::{BigInt, IntMatrix, Simplex, SimplicialComplex, WeightedComplex};

/// Entries in `-9..=9` from a fixed linear congruential stream.
pub fn matrix(rows: usize, cols: usize, seed: u64) -> IntMatrix {
  let mut x = seed;
  let mut next = || {
    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    ((x >> 33) % 19) as i64 - 9
  };
  let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| next()).collect()).collect();
  IntMatrix::from_rows(&data)
}

/// Boundary of the `(n+1)`-simplex with every weight `a`.
pub fn sphere(n: u32, a: i64) -> WeightedComplex {
  let top = Simplex::new((0..=n + 1).collect()).unwrap();
  WeightedComplex::constant(SimplicialComplex::closure(top.faces()), BigInt::from(a))
}

pub fn dna(text: &str) -> Sequence {
  Sequence::new(text, &Alphabet::dna()).unwrap()
}

pub fn codon_weights() -> LetterWeights {
  "A=1,C=2,G=3,T=4".parse().unwrap()
}
