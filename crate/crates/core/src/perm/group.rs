use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::bsgs::Bsgs;
use super::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators, with a lazily built BSGS.
///
/// The BSGS is built at most once, on first query, and is read-only
/// afterwards; a built group can be shared across threads.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: OnceLock<Bsgs>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PermGroupWire {
    degree: usize,
    generators: Vec<Permutation>,
}

impl Serialize for PermGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermGroupWire { degree: self.degree, generators: self.generators.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PermGroupWire::deserialize(d)?;
        PermGroup::new(wire.degree, wire.generators).map_err(serde::de::Error::custom)
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        Ok(PermGroup { degree, generators, bsgs: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), bsgs: OnceLock::new() }
    }

    /// `Sym(degree)`, generated by a transposition and an `n`-cycle.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).expect("valid"));
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).expect("valid"));
        }
        PermGroup { degree, generators: gens, bsgs: OnceLock::new() }
    }

    pub(crate) fn from_bsgs(bsgs: Bsgs) -> Self {
        let generators = bsgs.top_generators();
        let cell = OnceLock::new();
        let degree = bsgs.degree;
        let _ = cell.set(bsgs);
        PermGroup { degree, generators, bsgs: cell }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Bsgs::build(self.degree, &self.generators, &[]))
    }

    /// Builds and caches the BSGS, returning the same group.
    pub fn build_bsgs(self) -> Self {
        self.bsgs();
        self
    }

    pub fn is_bsgs_built(&self) -> bool {
        self.bsgs.get().is_some()
    }

    pub fn base(&self) -> Vec<usize> {
        self.bsgs().base()
    }

    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity) || self.order().is_one()
    }

    /// Exact membership by sifting. Permutations of another degree are never members.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.bsgs().contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub(crate) fn check_point(&self, x: usize) -> Result<()> {
        if x < self.degree {
            Ok(())
        } else {
            Err(Error::PointOutOfRange { point: x, degree: self.degree })
        }
    }

    pub(crate) fn check_set(&self, set: &BTreeSet<usize>) -> Result<()> {
        set.iter().try_for_each(|&x| self.check_point(x))
    }

    /// `{g(x) : g in G}` by closure under the generators.
    pub fn orbit(&self, x: usize) -> Result<BTreeSet<usize>> {
        self.check_point(x)?;
        let mut seen = BTreeSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for g in &self.generators {
                let z = g.apply(y);
                if seen.insert(z) {
                    queue.push_back(z);
                }
            }
        }
        Ok(seen)
    }

    /// All orbits, ordered by least element.
    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !assigned[x] {
                let orbit = self.orbit(x).expect("in range");
                for &y in &orbit {
                    assigned[y] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// The images of `set` under the group, i.e. its orbit in the action on subsets.
    pub fn set_orbit(&self, set: &BTreeSet<usize>) -> Result<BTreeSet<BTreeSet<usize>>> {
        self.check_set(set)?;
        let mut seen = BTreeSet::from([set.clone()]);
        let mut queue = VecDeque::from([set.clone()]);
        while let Some(s) = queue.pop_front() {
            for g in &self.generators {
                let image = g.image_set(&s);
                if !seen.contains(&image) {
                    seen.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }
        Ok(seen)
    }

    /// Points moved by some element.
    pub fn support(&self) -> BTreeSet<usize> {
        self.generators.iter().flat_map(|g| g.support()).collect()
    }

    /// The subgroup fixing every point of `set`, from a BSGS whose base
    /// begins with `set` in ascending order.
    pub fn point_stabilizer(&self, set: &BTreeSet<usize>) -> Result<PermGroup> {
        self.check_set(set)?;
        if set.is_empty() {
            return Ok(self.clone());
        }
        let prefix: Vec<usize> = set.iter().copied().collect();
        let bsgs = Bsgs::build(self.degree, &self.generators, &prefix);
        Ok(PermGroup::from_bsgs(bsgs.suffix(prefix.len())))
    }

    /// A uniformly distributed element: one random transversal element per
    /// BSGS level, multiplied in level order.
    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        self.bsgs().levels.iter().fold(Permutation::identity(self.degree), |acc, level| {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            acc.compose(level.rep(b).expect("orbit point"))
        })
    }

    /// Every element exactly once, sorted by image array. Refuses groups
    /// larger than `limit`.
    pub fn elements(&self, limit: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(limit) {
            return Err(Error::TooLarge { order: order.to_string(), limit });
        }
        Ok(self.bsgs().elements())
    }
}
