use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wmorse::greedy_collapse;
use wmorse::homology::homology;
use wmorse::linalg::smith_normal_form;
use wmorse::sequence::{sequence_fingerprint, WocType};
use wmorse_bench::{codon_weights, dna, matrix, sphere};

fn snf(c: &mut Criterion) {
  let mut g = c.benchmark_group("smith");
  for n in [8usize, 16, 32] {
    let m = matrix(n, n, n as u64);
    g.bench_with_input(BenchmarkId::new("factors", n), &m, |b, m| {
      b.iter(|| smith_normal_form(black_box(m), false))
    });
    g.bench_with_input(BenchmarkId::new("transforms", n), &m, |b, m| {
      b.iter(|| smith_normal_form(black_box(m), true))
    });
  }
  g.finish();
}

fn spheres(c: &mut Criterion) {
  let mut g = c.benchmark_group("sphere");
  for n in [2u32, 4, 6] {
    let k = sphere(n, 6);
    g.bench_with_input(BenchmarkId::new("homology", n), &k, |b, k| b.iter(|| homology(black_box(k), None)));
    g.bench_with_input(BenchmarkId::new("greedy_collapse", n), &k, |b, k| {
      b.iter(|| greedy_collapse(black_box(k)))
    });
  }
  g.finish();
}

fn fingerprints(c: &mut Criterion) {
  let mut g = c.benchmark_group("fingerprint");
  let w = codon_weights();
  for text in ["CTC", "GATTACA", "ACGTACGTAC"] {
    let seq = dna(text);
    g.bench_with_input(BenchmarkId::new("type2", text), &seq, |b, s| {
      b.iter(|| sequence_fingerprint(black_box(s), &w, WocType::Type2, None))
    });
  }
  g.finish();
}

criterion_group!(benches, snf, spheres, fingerprints);
criterion_main!(benches);
