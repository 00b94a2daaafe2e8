//! Exact computations with dendriform, pre-Lie and restricted Lie algebras
//! over a prime field `F_p`.
//!
//! The free dendriform algebra is spanned by planar binary trees with
//! labelled internal vertices ([`trees`], [`freedend`]). Finite-dimensional
//! algebras are given by structure constants ([`scalg`]), and every identity
//! is checked exactly by [`laws`], which reports counterexamples instead of
//! tolerances. [`envelope`] computes truncated dendriform enveloping
//! algebras of pre-Lie algebras by sparse row reduction over `F_p`.
//!
//! ```
//! use dendriform_fp::field::Modulus;
//! use dendriform_fp::freedend::FreeDend;
//!
//! let alg = FreeDend::new(Modulus::new(2).unwrap(), 1);
//! let y = alg.generator(0).unwrap();
//! // Y ⋆ Y is the sum of the two trees of degree 2
//! assert_eq!(alg.star(&y, &y).unwrap().len(), 2);
//! ```

pub mod cli;
pub mod envelope;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod freedend;
pub mod jacobson;
pub mod laws;
pub mod linalg;
pub mod scalg;
pub mod structure;
pub mod trees;

pub use error::{Error, Result};
