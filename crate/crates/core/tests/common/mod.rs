//! Brute-force oracles. Everything here works from the full element list of
//! a group, obtained by filtering all of Sym(n), and never touches a BSGS.

#![allow(dead_code)]

use std::collections::BTreeSet;

use halinkit::{Graph, Permutation};
use itertools::Itertools;

/// All of Sym(n) in lexicographic order of image lists.
pub fn symmetric(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Adjacency-preserving permutations of `g`, found by testing every element
/// of Sym(n).
pub fn brute_automorphisms(g: &Graph, sym: &[Vec<usize>]) -> Vec<Permutation> {
    let n = g.n();
    let mut adj = vec![false; n * n];
    for (a, b) in g.edges() {
        adj[a * n + b] = true;
        adj[b * n + a] = true;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    sym.iter()
        .filter(|p| edges.iter().all(|&(a, b)| adj[p[a] * n + p[b]]))
        .map(|p| Permutation::from_images(p.clone()).unwrap())
        .collect()
}

fn subsets_by_size(n: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0..=n).flat_map(move |k| (0..n).combinations(k).map(|c| c.into_iter().collect()))
}

/// Least size of a set fixed pointwise only by the identity.
pub fn brute_determining_number(n: usize, elements: &[Permutation]) -> usize {
    subsets_by_size(n)
        .find(|s| elements.iter().all(|p| p.is_identity() || !p.fixes_pointwise(s)))
        .map(|s| s.len())
        .expect("the full vertex set is always a base")
}

/// Least size of a set stabilized only by the identity, if any.
pub fn brute_distinguishing_cost(n: usize, elements: &[Permutation]) -> Option<usize> {
    subsets_by_size(n).find(|s| elements.iter().all(|p| p.is_identity() || !p.stabilizes(s))).map(|s| s.len())
}

/// Least support size of a nonidentity element; `None` for a trivial group.
pub fn brute_motion(elements: &[Permutation]) -> Option<usize> {
    elements.iter().filter(|p| !p.is_identity()).map(|p| p.support().len()).min()
}

pub fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}
