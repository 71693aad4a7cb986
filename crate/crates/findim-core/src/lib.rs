//! Exact homological algebra over the rationals for finite-dimensional
//! associative algebras given by multiplication tables.
//!
//! The crate computes projective resolutions, syzygies, Ext/Tor dimensions,
//! widths of complexes, and finitistic/global dimension brackets, and it
//! evaluates a family of upper-bound formulas for finitistic dimensions of
//! triangular matrix rings, corner rings, trivial extensions and quotient
//! constructions.  All arithmetic is exact (arbitrary-precision rationals);
//! every certified answer is backed by a finite linear-algebra witness.
//!
//! `no_std` with `alloc` is supported; the companion CLI crate carries the
//! file formats and command line front end.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod complex;
pub mod context;
pub mod dimension;
pub mod endo;
pub mod linalg;
pub mod module;
pub mod presets;
pub mod tensor;

pub use linalg::{Mat, Rat};

use rand::SeedableRng;

/// Deterministic RNG behind every randomized search in the crate.  Same seed,
/// same run: results of the searches are reproducible by construction.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
