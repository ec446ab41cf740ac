//! Independent routes to the same numbers, used to certify the main formulas
//! on small instances.
//!
//! - [`brute`]: the character of `S^k(A)` by listing every monomial, and its
//!   decomposition into irreducibles by highest-weight stripping.
//! - [`freudenthal`]: weight multiplicities of irreducible modules, the
//!   Weyl dimension formula, and the alternating sum `E_lambda`.
//! - [`binary`]: the classical count for binary forms via Gaussian binomials.

pub mod binary;
pub mod brute;
pub mod freudenthal;

pub use binary::{bounded_partitions, classical_binary_nu};
pub use brute::{brute_character, strip_decompose, CharacterTable};
pub use freudenthal::{
    e_lambda, freudenthal_multiplicity, weyl_dimension, IrreducibleModule, ModuleWeights,
};
