//! Bases, determining number, distinguishing sets and cost, motion, and the
//! greedy stabilizer chain that turns a finite base into a distinguishing set.
//!
//! Every function takes the automorphism group `A` of the graph in question.
//! Subset searches go by size, then lexicographically, so the first hit is
//! the least witness of minimum size.

mod bounds;
mod chain;

pub use bounds::{bounds, longest_subgroup_chain, Bounds};
pub use chain::{greedy_distinguishing_chain, reducing_vertex, Reduction, StabilizerChain};

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// Groups up to this order are enumerated outright when computing motion.
pub const MOTION_ENUMERATION_LIMIT: u64 = 100_000;

pub const DEFAULT_SUBSET_BUDGET: u64 = 10_000_000;

/// Cap on the number of subsets an exhaustive search may test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub subsets: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { subsets: DEFAULT_SUBSET_BUDGET }
    }
}

impl Budget {
    pub fn new(subsets: u64) -> Self {
        Budget { subsets }
    }

    /// Reads `HALINKIT_BUDGET`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var("HALINKIT_BUDGET").ok().and_then(|s| s.trim().parse().ok()).map(Budget::new).unwrap_or_default()
    }
}

/// A minimum-size set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetWitness {
    pub size: usize,
    pub witness: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Motion {
    pub motion: usize,
    pub witness: Permutation,
    /// True if found by enumerating the group rather than by tree search.
    pub enumerated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdegree {
    pub vertex: usize,
    pub max_orbit: usize,
}

/// True iff the pointwise stabilizer of `s` is trivial.
pub fn is_base(a: &PermGroup, s: &BTreeSet<usize>) -> Result<bool> {
    Ok(a.point_stabilizer(s)?.is_trivial())
}

/// True iff the setwise stabilizer of `s` is trivial.
pub fn is_distinguishing(a: &PermGroup, s: &BTreeSet<usize>) -> Result<bool> {
    Ok(a.set_stabilizer(s)?.is_trivial())
}

/// Least base of minimum size. The trivial group gives `0` and `∅`.
pub fn determining_number(a: &PermGroup, budget: Budget) -> Result<SetWitness> {
    Ok(first_subset(a.degree(), budget, |s| is_base(a, s))?.expect("the full vertex set is a base"))
}

/// Least distinguishing set of minimum size, or `None` if no subset is
/// distinguishing.
pub fn distinguishing_cost(a: &PermGroup, budget: Budget) -> Result<Option<SetWitness>> {
    first_subset(a.degree(), budget, |s| is_distinguishing(a, s))
}

fn first_subset(
    n: usize,
    budget: Budget,
    mut accept: impl FnMut(&BTreeSet<usize>) -> Result<bool>,
) -> Result<Option<SetWitness>> {
    let mut tested = 0u64;
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            if tested == budget.subsets {
                return Err(Error::BudgetExhausted { budget: budget.subsets });
            }
            tested += 1;
            let s: BTreeSet<usize> = combo.into_iter().collect();
            if accept(&s)? {
                return Ok(Some(SetWitness { size, witness: s }));
            }
        }
    }
    Ok(None)
}

/// Number of points moved by `p`.
pub fn motion_of(p: &Permutation) -> usize {
    p.motion()
}

/// Minimum motion of a nontrivial element, with the least witness by image
/// array among elements attaining it.
pub fn motion(a: &PermGroup) -> Result<Motion> {
    if a.is_trivial() {
        return Err(Error::MotionUndefined);
    }
    if a.order_u64().is_some_and(|o| o <= MOTION_ENUMERATION_LIMIT) {
        let elements = a.elements(MOTION_ENUMERATION_LIMIT)?;
        let (motion, witness) =
            elements.into_iter().filter(|p| !p.is_identity()).map(|p| (p.motion(), p)).min().expect("nontrivial group");
        return Ok(Motion { motion, witness, enumerated: true });
    }
    let (motion, witness) = a.min_motion_search().expect("nontrivial group");
    Ok(Motion { motion, witness, enumerated: false })
}

/// For each vertex, the largest orbit of its stabilizer.
pub fn subdegree_report(a: &PermGroup) -> Vec<Subdegree> {
    (0..a.degree())
        .map(|v| {
            let stab = a.point_stabilizer(&BTreeSet::from([v])).expect("in range");
            let max_orbit = stab.orbits().iter().map(BTreeSet::len).max().unwrap_or(0);
            Subdegree { vertex: v, max_orbit }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::graph::{generate, Family};

    fn aut(f: Family) -> PermGroup {
        automorphism_group(&generate(f).unwrap())
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn bases() {
        assert!(is_base(&aut(Family::Path(5)), &set(&[0])).unwrap());
        assert!(!is_base(&aut(Family::Cycle(6)), &set(&[0])).unwrap());
        assert!(is_base(&aut(Family::Petersen), &set(&(0..10).collect::<Vec<_>>())).unwrap());
        assert!(is_base(&aut(Family::Path(3)), &set(&[7])).is_err());
    }

    #[test]
    fn determining_numbers() {
        assert_eq!(determining_number(&aut(Family::Complete(4)), Budget::default()).unwrap().size, 3);
        let c6 = determining_number(&aut(Family::Cycle(6)), Budget::default()).unwrap();
        assert_eq!(c6, SetWitness { size: 2, witness: set(&[0, 1]) });
        let trivial = determining_number(&PermGroup::trivial(4), Budget::default()).unwrap();
        assert_eq!(trivial, SetWitness { size: 0, witness: set(&[]) });
    }

    #[test]
    fn distinguishing() {
        let c8 = aut(Family::Cycle(8));
        assert!(!is_distinguishing(&c8, &set(&[0, 1])).unwrap());
        assert!(is_distinguishing(&c8, &set(&[0, 1, 3])).unwrap());
        assert!(is_distinguishing(&aut(Family::Path(5)), &set(&[0])).unwrap());
    }

    #[test]
    fn distinguishing_costs() {
        assert_eq!(distinguishing_cost(&aut(Family::Path(5)), Budget::default()).unwrap().unwrap().size, 1);
        assert_eq!(distinguishing_cost(&aut(Family::Complete(4)), Budget::default()).unwrap(), None);
        let c6 = distinguishing_cost(&aut(Family::Cycle(6)), Budget::default()).unwrap().unwrap();
        assert_eq!(c6, SetWitness { size: 3, witness: set(&[0, 1, 3]) });
    }

    #[test]
    fn budget_is_enforced() {
        let err = distinguishing_cost(&aut(Family::Complete(4)), Budget::new(5)).unwrap_err();
        assert_eq!(err, Error::BudgetExhausted { budget: 5 });
    }

    #[test]
    fn motions() {
        assert_eq!(motion(&aut(Family::Complete(5))).unwrap().motion, 2);
        let c6 = motion(&aut(Family::Cycle(6))).unwrap();
        assert_eq!(c6.motion, 4);
        assert_eq!(c6.witness.images(), &[0, 5, 4, 3, 2, 1]);
        assert_eq!(motion_of(&Permutation::identity(4)), 0);
        assert_eq!(motion(&PermGroup::trivial(3)), Err(Error::MotionUndefined));
    }

    #[test]
    fn motion_search_agrees_with_enumeration() {
        for f in [Family::Cycle(7), Family::Petersen, Family::CompleteBipartite(2, 4), Family::BinaryTree(3)] {
            let a = aut(f);
            let enumerated = motion(&a).unwrap();
            let (m, w) = a.min_motion_search().unwrap();
            assert_eq!((m, w), (enumerated.motion, enumerated.witness));
        }
    }

    #[test]
    fn subdegrees() {
        assert!(subdegree_report(&aut(Family::Cycle(8))).iter().all(|r| r.max_orbit == 2));
        assert!(subdegree_report(&aut(Family::Complete(4))).iter().all(|r| r.max_orbit == 3));
        assert!(subdegree_report(&PermGroup::trivial(3)).iter().all(|r| r.max_orbit == 1));
    }
}
