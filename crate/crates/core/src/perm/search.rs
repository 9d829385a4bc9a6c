//! Backtrack searches over the transversal tree of a BSGS.
//!
//! An element factors uniquely as `u_0 ∘ u_1 ∘ ... ∘ u_m` with `u_i` drawn from
//! the transversal of level `i`. After choosing `u_0..u_i` the images of
//! `base[0..=i]` are fixed, so a prefix of the base that lists the points of
//! interest lets every tree level test one of them.

use std::collections::BTreeSet;

use super::bsgs::{Bsgs, Level};
use super::{PermGroup, Permutation};
use crate::error::Result;

impl PermGroup {
    /// The subgroup mapping `set` onto itself.
    ///
    /// The base starts with `set`; a branch dies as soon as a point of `set`
    /// leaves `set`. Leaves are coset representatives of the pointwise
    /// stabilizer and only those outside the group found so far are kept as
    /// generators.
    pub fn set_stabilizer(&self, set: &BTreeSet<usize>) -> Result<PermGroup> {
        self.check_set(set)?;
        if set.is_empty() || set.len() == self.degree() {
            return Ok(self.clone());
        }
        let prefix: Vec<usize> = set.iter().copied().collect();
        let bsgs = Bsgs::build(self.degree(), self.generators(), &prefix);
        let pointwise = PermGroup::from_bsgs(bsgs.suffix(prefix.len()));
        let mut found = FoundGroup { degree: self.degree(), gens: pointwise.generators().to_vec(), group: pointwise };
        let levels = &bsgs.levels[..prefix.len()];
        descend(levels, 0, Permutation::identity(self.degree()), &mut |level, partial| match level {
            Step::Node(point) => set.contains(&point),
            Step::Leaf => {
                found.offer(partial);
                true
            }
        });
        Ok(found.group)
    }

    /// Some `g` with `y ∩ g(z) = ∅`, searching images of `z` in ascending order.
    pub fn disjoint_translate(&self, y: &BTreeSet<usize>, z: &BTreeSet<usize>) -> Result<Option<Permutation>> {
        self.check_set(y)?;
        self.check_set(z)?;
        let prefix: Vec<usize> = z.iter().copied().collect();
        let bsgs = Bsgs::build(self.degree(), self.generators(), &prefix);
        let mut hit = None;
        descend(
            &bsgs.levels[..prefix.len()],
            0,
            Permutation::identity(self.degree()),
            &mut |level, partial| match level {
                Step::Node(point) => !y.contains(&point),
                Step::Leaf => {
                    hit = Some(partial.clone());
                    false
                }
            },
        );
        Ok(hit)
    }

    /// Coset representatives of the stabilizer of `x`, one per orbit point in
    /// ascending order, together with that stabilizer.
    pub(crate) fn point_transversal(&self, x: usize) -> Result<(Vec<(usize, Permutation)>, PermGroup)> {
        self.check_point(x)?;
        let bsgs = Bsgs::build(self.degree(), self.generators(), &[x]);
        let level = &bsgs.levels[0];
        let reps = level.sorted_orbit().into_iter().map(|b| (b, level.rep(b).expect("orbit point").clone())).collect();
        Ok((reps, PermGroup::from_bsgs(bsgs.suffix(1))))
    }

    /// Minimum motion over non-identity elements and the least witness (by
    /// image array), by branch and bound over the BSGS tree. Points outside the
    /// support of the remaining stabilizer have known images, which bounds the
    /// motion of every element below a node. `None` for the trivial group.
    pub fn min_motion_search(&self) -> Option<(usize, Permutation)> {
        let bsgs = self.bsgs();
        let levels = &bsgs.levels;
        let n = self.degree();
        // free[i]: points some element of G_i moves
        let mut free: Vec<Vec<bool>> = vec![vec![false; n]; levels.len() + 1];
        for (i, level) in levels.iter().enumerate() {
            for g in &level.gens {
                for x in g.support() {
                    free[i][x] = true;
                }
            }
        }
        let mut best: Option<(usize, Permutation)> = None;
        motion_dfs(levels, &free, 0, Permutation::identity(n), &mut best);
        best
    }
}

enum Step {
    /// Image of the current level's base point under the partial product.
    Node(usize),
    Leaf,
}

/// Visits the transversal tree of `levels`. The callback returns `false` to
/// prune a node, or, at a leaf, to stop the whole search. Returns `false`
/// once stopped.
fn descend(
    levels: &[Level],
    depth: usize,
    partial: Permutation,
    visit: &mut impl FnMut(Step, &Permutation) -> bool,
) -> bool {
    if depth == levels.len() {
        return visit(Step::Leaf, &partial);
    }
    let level = &levels[depth];
    for beta in level.sorted_orbit() {
        let image = partial.apply(beta);
        if !visit(Step::Node(image), &partial) {
            continue;
        }
        let next = partial.compose(level.rep(beta).expect("orbit point"));
        if !descend(levels, depth + 1, next, visit) {
            return false;
        }
    }
    true
}

struct FoundGroup {
    degree: usize,
    gens: Vec<Permutation>,
    group: PermGroup,
}

impl FoundGroup {
    fn offer(&mut self, p: &Permutation) {
        if !self.group.contains(p) {
            self.gens.push(p.clone());
            self.group = PermGroup::new(self.degree, self.gens.clone()).expect("equal degrees");
        }
    }
}

fn motion_dfs(
    levels: &[Level],
    free: &[Vec<bool>],
    depth: usize,
    partial: Permutation,
    best: &mut Option<(usize, Permutation)>,
) {
    let fixed_part = (0..partial.degree()).filter(|&x| !free[depth][x] && partial.apply(x) != x).count();
    if let Some((m, _)) = best {
        if fixed_part > *m {
            return;
        }
    }
    if depth == levels.len() {
        if partial.is_identity() {
            return;
        }
        let m = partial.motion();
        let better = match best {
            None => true,
            Some((bm, bp)) => m < *bm || (m == *bm && partial < *bp),
        };
        if better {
            *best = Some((m, partial));
        }
        return;
    }
    let level = &levels[depth];
    for beta in level.sorted_orbit() {
        let next = partial.compose(level.rep(beta).expect("orbit point"));
        motion_dfs(levels, free, depth + 1, next, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: usize) -> PermGroup {
        let rot = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap();
        let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        PermGroup::new(n, vec![rot, refl]).unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn set_stabilizer_in_cycle_eight() {
        let stab = dihedral(8).set_stabilizer(&set(&[0, 1])).unwrap();
        assert_eq!(stab.order_u64(), Some(2));
        let swap = Permutation::from_images((0..8).map(|i| (9 - i) % 8).collect()).unwrap();
        assert!(stab.contains(&swap));
        assert_eq!(dihedral(8).set_stabilizer(&set(&(0..8).collect::<Vec<_>>())).unwrap().order_u64(), Some(16));
        assert!(dihedral(8).set_stabilizer(&set(&[0, 1, 3])).unwrap().is_trivial());
    }

    #[test]
    fn set_stabilizer_in_symmetric_four() {
        let stab = PermGroup::symmetric(4).set_stabilizer(&set(&[0, 1])).unwrap();
        assert_eq!(stab.order_u64(), Some(4));
    }

    #[test]
    fn disjoint_translates() {
        let d8 = dihedral(8);
        let a = d8.disjoint_translate(&set(&[0]), &set(&[0])).unwrap().unwrap();
        assert_ne!(a.apply(0), 0);
        let b = d8.disjoint_translate(&set(&[0, 1]), &set(&[0, 1])).unwrap().unwrap();
        assert!(b.image_set(&set(&[0, 1])).is_disjoint(&set(&[0, 1])));
        let all = set(&[0, 1, 2, 3]);
        assert_eq!(PermGroup::symmetric(4).disjoint_translate(&all, &all).unwrap(), None);
        assert_eq!(d8.disjoint_translate(&set(&[0]), &set(&[])).unwrap(), Some(Permutation::identity(8)));
    }

    #[test]
    fn min_motion() {
        assert_eq!(PermGroup::symmetric(5).min_motion_search().unwrap().0, 2);
        assert_eq!(dihedral(6).min_motion_search().unwrap().0, 4);
        assert!(PermGroup::trivial(3).min_motion_search().is_none());
    }
}
