//! Weighted simplicial complexes over ℤ: weighted homology, elementary collapses, discrete
//! Morse functions and weighted order complexes of symbol sequences.

pub mod collapse;
pub mod complex;
pub mod homology;
pub mod linalg;
pub mod morse;
pub mod sequence;

pub use collapse::{
  check_preservation, collapse_sequence, elementary_collapse, elementary_removal, greedy_collapse,
  CollapseError, CollapseStep, CollapseTrace, Preservation, PreservationVerdict, RemovalReport,
};
pub use complex::{ComplexError, Simplex, SimplicialComplex, Vertex, WeightedComplex};
pub use homology::{homology, homology_class_order, ClassOrder, HomologyGroup};
pub use linalg::{smith_normal_form, IntMatrix, SmithDecomposition};
pub use morse::{
  classify, critical_window, level_subcomplex, morse_collapse, parse_value, validate_morse, MorseError,
  MorseFunction,
};
pub use sequence::{
  build_woc, sequence_fingerprint, Alphabet, LetterWeights, Sequence, SequenceError, WocType,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
