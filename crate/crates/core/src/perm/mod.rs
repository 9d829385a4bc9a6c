//! Permutations and permutation groups: orbits, Schreier–Sims, membership,
//! point and set stabilizers.

mod bsgs;
mod group;
mod permutation;
mod search;

pub use group::PermGroup;
pub use permutation::Permutation;
