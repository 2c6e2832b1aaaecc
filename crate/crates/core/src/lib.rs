//! Symmetric complete (l,1)-sum-free sets in Z_n and the C_{l+1}-saturated
//! Cayley graphs they generate.
//!
//! The crate has three layers:
//!
//! - construction: for even `l >= 4` and admissible `n`, derive parameters
//!   and build an explicit symmetric complete (l,1)-sum-free set, with the
//!   key-lemma closed form for its l-fold sumset exposed for testing;
//! - verification: set-level certificates (symmetric / complete / sum-free /
//!   restricted-sumset hypotheses) and an independent graph-level checker
//!   for C_k-freeness and C_k-saturation;
//! - search: exhaustive computation of psi_l(n), the minimum size of such a
//!   set, with monotone pruning, a worker pool, and a persistent result log.

pub mod construction;
pub mod error;
pub mod graph;
pub mod residue;
pub mod search;
pub mod sumset;
pub mod verify;

pub use error::{Error, Result};
pub use graph::CayleyGraph;
pub use residue::{IntSet, Modulus, Parity, ParityInterval, ResidueSet};
pub use search::{SearchOptions, SearchOutcome, SearchResult};
pub use verify::VerificationReport;
