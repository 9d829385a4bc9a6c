//! Deterministic Schreier–Sims.
//!
//! Level `i` holds the strong generators `S_i` of `G_i`, the pointwise
//! stabilizer of `base[..i]`, together with the orbit of `base[i]` under `S_i`
//! and a transversal `u_b` with `u_b(base[i]) = b` for each orbit point `b`.
//! Every suffix `levels[k..]` is itself a BSGS of `G_k`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use super::Permutation;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub base_point: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
    pos: HashMap<usize, usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let id = Permutation::identity(degree);
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            reps: vec![id.clone()],
            reps_inv: vec![id],
            pos: HashMap::from([(base_point, 0)]),
        }
    }

    /// Closes the orbit under the current generators, keeping existing
    /// transversal entries.
    fn extend_orbit(&mut self) {
        let mut idx = 0;
        while idx < self.orbit.len() {
            let beta = self.orbit[idx];
            for g in &self.gens {
                let gamma = g.apply(beta);
                if !self.pos.contains_key(&gamma) {
                    let rep = g.compose(&self.reps[idx]);
                    self.pos.insert(gamma, self.orbit.len());
                    self.orbit.push(gamma);
                    self.reps_inv.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            idx += 1;
        }
    }

    /// Transversal element sending the base point to `b`.
    pub fn rep(&self, b: usize) -> Option<&Permutation> {
        self.pos.get(&b).map(|&i| &self.reps[i])
    }

    fn rep_inv(&self, b: usize) -> Option<&Permutation> {
        self.pos.get(&b).map(|&i| &self.reps_inv[i])
    }

    /// Orbit points in ascending order.
    pub fn sorted_orbit(&self) -> Vec<usize> {
        let mut o = self.orbit.clone();
        o.sort_unstable();
        o
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Bsgs {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl Bsgs {
    /// Builds a BSGS for `<gens>` whose base starts with `prefix`. Further base
    /// points are the least point moved by the element that forces them.
    pub fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Bsgs {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = base
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let mut level = Level::new(b, degree);
                level.gens = gens.iter().filter(|g| base[..i].iter().all(|&p| g.apply(p) == p)).cloned().collect();
                level.extend_orbit();
                level
            })
            .collect();

        let mut checked: Vec<HashSet<(usize, usize)>> = vec![HashSet::new(); levels.len()];
        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut descended = false;
            'scan: for oi in 0..levels[lvl].orbit.len() {
                for gi in 0..levels[lvl].gens.len() {
                    if !checked[lvl].insert((oi, gi)) {
                        continue;
                    }
                    let level = &levels[lvl];
                    let beta = level.orbit[oi];
                    let x = &level.gens[gi];
                    let image = x.apply(beta);
                    let schreier = level.rep_inv(image).expect("orbit is closed").compose(&x.compose(&level.reps[oi]));
                    let (residue, drop) = strip(&levels, schreier, lvl + 1);
                    if drop == levels.len() && residue.is_identity() {
                        continue;
                    }
                    if drop == levels.len() {
                        let b = residue.first_moved().expect("non-identity residue");
                        levels.push(Level::new(b, degree));
                        checked.push(HashSet::new());
                    }
                    for level in &mut levels[lvl + 1..=drop] {
                        level.gens.push(residue.clone());
                        level.extend_orbit();
                    }
                    i = drop as isize;
                    descended = true;
                    break 'scan;
                }
            }
            if !descended {
                i -= 1;
            }
        }
        Bsgs { degree, levels }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let (residue, drop) = strip(&self.levels, p.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    /// The BSGS of the stabilizer of the first `k` base points.
    pub fn suffix(&self, k: usize) -> Bsgs {
        Bsgs { degree: self.degree, levels: self.levels[k.min(self.levels.len())..].to_vec() }
    }

    /// Generators of the top level, which generate the whole group.
    pub fn top_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// All elements as products `u_0 ∘ u_1 ∘ ... ∘ u_m`, sorted by image array.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut current = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            current = level.reps.iter().flat_map(|u| current.iter().map(move |e| u.compose(e))).collect();
        }
        current.sort();
        current
    }
}

/// Sifts `g` through `levels[from..]`, returning the residue and the index of
/// the level where it dropped out (`levels.len()` if it sifted through).
fn strip(levels: &[Level], mut g: Permutation, from: usize) -> (Permutation, usize) {
    for (j, level) in levels.iter().enumerate().skip(from) {
        let beta = g.apply(level.base_point);
        match level.rep_inv(beta) {
            Some(inv) => g = inv.compose(&g),
            None => return (g, j),
        }
    }
    (g, levels.len())
}
