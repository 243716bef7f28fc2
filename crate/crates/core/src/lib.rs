//! Exact computational group theory for certifying non-binary witnesses and
//! beautiful subsets of primitive permutation actions.
//!
//! The crate is layered:
//! - [`perm`], [`group`], [`backtrack`]: the permutation engine (elements,
//!   stabilizer chains, orbits, transporters, set-wise stabilizers).
//! - [`action`]: standard induced actions (k-subsets, uniform partitions,
//!   coset actions, restriction to a subset).
//! - [`binary`]: subtuple completeness, non-binary witness search and
//!   certification.
//! - [`beautiful`]: beautiful-subset certification and search, including the
//!   Frobenius-orbit construction.
//! - [`altconstruct`]: explicit named configurations inside symmetric-group
//!   actions (Fano-type subsets and partitions, Petersen matchings, affine
//!   line orbits).
//! - [`gf`], [`linalg`], [`classical`]: finite fields, matrices, formed
//!   spaces, classical groups and their subspace actions.
//! - [`catalog`]: the case catalog with replayable verification reports.

pub mod perm;
pub mod group;
pub mod backtrack;
pub mod action;
pub mod binary;
pub mod beautiful;
pub mod altconstruct;
pub mod gf;
pub mod linalg;
pub mod classical;
pub mod catalog;

pub use group::{PermutationGroup, StabilizerChain};
pub use perm::Permutation;
