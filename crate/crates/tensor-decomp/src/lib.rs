//! Exact-arithmetic engine for decomposing tensor representations of
//! symmetric groups into irreducibles.
//!
//! Fix a valence k and partitions μ,ν ⊢ k. Inside the k-th tensor power of
//! the permutation module of 𝔖_n, the tensors whose index multiset has type
//! μ and whose 𝔖_k symmetry type is ν carry a representation ρ_{μ,ν} of 𝔖_n.
//! This crate computes that representation exactly — through a length-l(μ)
//! representation Π(μ,ν) assembled from wreath-product plethysms and a Pieri
//! induction step — together with its stable decomposition symbol for large
//! n and the matching infinite-symmetric-group coefficients.
//!
//! Every formula-path result is validated against an independent brute-force
//! oracle that counts fixed index tuples over conjugacy classes, and against
//! a suite of exact characteristic identities. All arithmetic is over exact
//! big rationals; integrality is asserted wherever representation theory
//! promises it.
//!
//! The companion `tensor-decomp-cli` crate exposes everything on the command
//! line.

pub mod cache;
pub mod characters;
pub mod decomp;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod symfunc;

pub use error::Error;
pub use partitions::Partition;
pub use symfunc::{Basis, SymFunc};

/// Schema tag carried by every JSON document this project emits (CLI output
/// and cache files).
pub const SCHEMA: &str = "tensor-decomp/1";
