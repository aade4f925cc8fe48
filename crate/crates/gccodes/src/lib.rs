//! Cyclic codes over GF(q^r) with exact GC-content enumerators and DNA code
//! constructions.
//!
//! The crate builds cyclic codes whose generator polynomial is coprime to
//! all of its Galois conjugates, counts their words by GF(q)-weight (the
//! GC-content for GF(4) over GF(2)) both in closed form and by exhaustive
//! enumeration, and turns reversible codes into DNA codebooks with constant
//! GC-content and reverse-complement distance guarantees.
//!
//! The pieces, bottom up:
//!
//! * [`field`] — exact GF(p^M) arithmetic with canonical deterministic
//!   moduli, Frobenius maps, traces, and primitive roots of unity.
//! * [`poly`] — dense polynomial arithmetic, gcd/lcm, the coefficientwise
//!   Frobenius sigma and psi = sigma - id, reciprocals.
//! * [`cyclotomic`] — orbit tables on Z/nZ, block validation and
//!   enumeration, completeness/reversibility/self-duality predicates.
//! * [`code`] — code construction from blocks, idempotents, quaternary
//!   block duality, affine automorphisms, extended-code duality.
//! * [`weights`] — weight enumerators: closed forms, brute-force oracles,
//!   the subset-rank nullspace formula, minimum distances.
//! * [`gf4`] — packed GF(4) words and the fast exhaustive scanner.
//! * [`dna`] — DNA words, codebook constructions, verification, bounds.
//! * [`cli`] — the JSON-speaking command layer behind the `gccodes` binary.
//!
//! Every runnable capability has a matching example under `examples/`.

pub mod cli;
pub mod code;
pub mod cyclotomic;
pub mod dna;
pub mod error;
pub mod field;
pub mod gf4;
pub mod poly;
pub mod weights;

pub use code::{CyclicCode, SplittingField};
pub use cyclotomic::{Block, BlockFilters, OrbitTable};
pub use dna::{DnaCodebook, DnaWord};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use gf4::Gf4Word;
pub use poly::Polynomial;
pub use weights::WeightEnumerator;
