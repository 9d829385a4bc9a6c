//! Automorphism groups by individualization and refinement.
//!
//! The first path individualizes the least vertex of the first largest
//! non-singleton cell until the partition is discrete. Then, deepest level
//! first, every other vertex `w` of the target cell whose orbit under the
//! generators found so far does not yet contain the first-path choice is
//! explored for a leaf that differs from the first leaf by an automorphism.
//! Such a leaf gives a coset representative fixing the earlier first-path
//! choices and sending the current one to `w`, so the collected generators
//! generate the full group.

mod partition;

pub use partition::{refine, ColoredPartition};

use std::collections::{BTreeSet, VecDeque};

use crate::graph::Graph;
use crate::perm::{PermGroup, Permutation};

type Signature = Vec<(usize, Vec<(usize, usize)>)>;

struct FirstPath {
    /// Partition at each depth before individualization, with its target cell.
    nodes: Vec<(ColoredPartition, usize)>,
    /// Quotient signatures at each depth, the leaf included.
    signatures: Vec<Signature>,
    leaf: Vec<usize>,
}

pub fn automorphism_group(g: &Graph) -> PermGroup {
    let n = g.n();
    if n <= 1 {
        return PermGroup::trivial(n);
    }
    let path = first_path(g);
    let mut gens: Vec<Permutation> = Vec::new();
    for (depth, (node, target)) in path.nodes.iter().enumerate().rev() {
        let cell = &node.cells()[*target];
        let chosen = cell[0];
        let mut orbit = closure(chosen, &gens);
        for &w in &cell[1..] {
            if orbit.contains(&w) {
                continue;
            }
            let child = refine(g, &node.individualize(w));
            if let Some(gamma) = search_subtree(g, &path, child, depth + 1) {
                debug_assert_eq!(gamma.apply(chosen), w);
                gens.push(gamma);
                orbit = closure(chosen, &gens);
            }
        }
    }
    PermGroup::new(n, gens).expect("generators have degree n")
}

fn first_path(g: &Graph) -> FirstPath {
    let mut node = refine(g, &ColoredPartition::unit(g.n()));
    let mut nodes = Vec::new();
    let mut signatures = Vec::new();
    while let Some(target) = node.target_cell() {
        signatures.push(node.quotient_signature(g));
        let v = node.cells()[target][0];
        let next = refine(g, &node.individualize(v));
        nodes.push((node, target));
        node = next;
    }
    signatures.push(node.quotient_signature(g));
    FirstPath { nodes, signatures, leaf: node.leaf_order() }
}

fn search_subtree(g: &Graph, path: &FirstPath, node: ColoredPartition, depth: usize) -> Option<Permutation> {
    if path.signatures.get(depth) != Some(&node.quotient_signature(g)) {
        return None;
    }
    match node.target_cell() {
        None => {
            let leaf = node.leaf_order();
            let mut images = vec![0; g.n()];
            for (pos, &v) in path.leaf.iter().enumerate() {
                images[v] = leaf[pos];
            }
            let gamma = Permutation::from_images(images).expect("two discrete partitions give a bijection");
            g.is_automorphism(&gamma).then_some(gamma)
        }
        Some(target) => node.cells()[target]
            .iter()
            .find_map(|&w| search_subtree(g, path, refine(g, &node.individualize(w)), depth + 1)),
    }
}

fn closure(x: usize, gens: &[Permutation]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        for g in gens {
            let z = g.apply(y);
            if seen.insert(z) {
                queue.push_back(z);
            }
        }
    }
    seen
}
