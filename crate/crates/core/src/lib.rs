//! Symmetry computations on finite graphs: automorphism groups, bases,
//! distinguishing sets, greedy stabilizer chains, a finite simulation of the
//! nested-set construction of continuum many automorphisms, and the
//! permutation ultrametric.

pub mod aut;
pub mod cli;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod limit;
pub mod perm;
pub mod topology;

pub use error::{Error, ParseError, Result};
pub use graph::{Family, Graph, TruncatedFamily};
pub use perm::{PermGroup, Permutation};
