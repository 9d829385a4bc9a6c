use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::ParseError;

/// Named graph families with a documented vertex numbering.
///
/// * `Path(n)`: endpoints `0` and `n-1`.
/// * `Cycle(n)`: `i` adjacent to `i±1 mod n`, `n >= 3`.
/// * `CompleteBipartite(a, b)`: sides `0..a` and `a..a+b`.
/// * `Petersen`: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
/// * `BinaryTree(d)`: breadth-first from the root `0`; children of `i` are `2i+1`, `2i+2`.
/// * `Comb(d)`: spine `0, 3, 6, ..., 3d`; spine vertex `3i` carries the two
///   teeth `3i+1`, `3i+2`. This numbering is breadth-first from `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    BinaryTree(usize),
    Comb(usize),
}

pub fn generate(family: Family) -> Result<Graph, ParseError> {
    let invalid = |msg: &str| Err(ParseError::Invalid(msg.to_string()));
    match family {
        Family::Path(n) => {
            if n == 0 {
                return invalid("path needs n >= 1");
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            if n == 0 {
                return invalid("complete graph needs n >= 1");
            }
            Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return invalid("complete bipartite graph needs both sides >= 1");
            }
            Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
        Family::BinaryTree(d) => TruncatedFamily::binary_tree(d).map(|t| t.graph),
        Family::Comb(d) => TruncatedFamily::comb(d).map(|t| t.graph),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    BinaryTree,
    Comb,
    Custom,
}

/// A finite depth-`depth` prefix of an infinite graph. Every vertex carries
/// the label `depth=<k>`; the boundary is the set of depth-`depth` vertices.
#[derive(Debug, Clone)]
pub struct TruncatedFamily {
    pub kind: FamilyKind,
    pub depth: usize,
    pub boundary: BTreeSet<usize>,
    pub graph: Graph,
}

impl TruncatedFamily {
    pub fn binary_tree(depth: usize) -> Result<Self, ParseError> {
        if depth == 0 {
            return Err(ParseError::Invalid("binary tree needs depth >= 1".into()));
        }
        if depth > 24 {
            return Err(ParseError::Invalid("binary tree depth capped at 24".into()));
        }
        let n = (1usize << (depth + 1)) - 1;
        let graph = Graph::new(n, (1..n).map(|i| ((i - 1) / 2, i)))?;
        let depths = (0..n).map(tree_depth);
        Self::from_depths(FamilyKind::BinaryTree, depth, graph, depths)
    }

    pub fn comb(depth: usize) -> Result<Self, ParseError> {
        if depth == 0 {
            return Err(ParseError::Invalid("comb needs depth >= 1".into()));
        }
        let n = 3 * (depth + 1);
        let spine = (1..=depth).map(|i| (3 * (i - 1), 3 * i));
        let teeth = (0..=depth).flat_map(|i| [(3 * i, 3 * i + 1), (3 * i, 3 * i + 2)]);
        let graph = Graph::new(n, spine.chain(teeth))?;
        Self::from_depths(FamilyKind::Comb, depth, graph, (0..n).map(|v| v / 3))
    }

    /// Wraps a user graph whose labels read `depth=<k>`.
    pub fn custom(graph: Graph, depth: usize) -> Result<Self, ParseError> {
        let labels =
            graph.labels().ok_or_else(|| ParseError::Invalid("custom truncation needs depth labels".into()))?;
        let depths = labels
            .iter()
            .map(|l| {
                l.strip_prefix("depth=")
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| ParseError::Invalid(format!("label {l:?} is not depth=<k>")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !graph.is_connected() {
            return Err(ParseError::Invalid("truncated family must be connected".into()));
        }
        let boundary = depths.iter().enumerate().filter(|(_, &d)| d == depth).map(|(v, _)| v).collect();
        Ok(TruncatedFamily { kind: FamilyKind::Custom, depth, boundary, graph })
    }

    fn from_depths(
        kind: FamilyKind,
        depth: usize,
        graph: Graph,
        depths: impl Iterator<Item = usize>,
    ) -> Result<Self, ParseError> {
        let depths: Vec<usize> = depths.collect();
        let boundary = depths.iter().enumerate().filter(|(_, &d)| d == depth).map(|(v, _)| v).collect();
        let graph = graph.with_labels(depths.iter().map(|d| format!("depth={d}")).collect())?;
        Ok(TruncatedFamily { kind, depth, boundary, graph })
    }

    pub fn vertex_depth(&self, v: usize) -> usize {
        match self.kind {
            FamilyKind::BinaryTree => tree_depth(v),
            FamilyKind::Comb => v / 3,
            FamilyKind::Custom => self.graph.labels().expect("custom families are labelled")[v]
                .strip_prefix("depth=")
                .and_then(|d| d.parse().ok())
                .expect("labels validated on construction"),
        }
    }
}

fn tree_depth(v: usize) -> usize {
    (usize::BITS - 1 - (v + 1).leading_zeros()) as usize
}

/// A corpus entry.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

/// Connected graph on `n` vertices drawn from G(n, p), resampled until connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = BTreeSet::new();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    edges.insert((i, j));
                }
            }
        }
        let g = Graph::from_normalized(n, edges);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every connected path, cycle, complete and complete bipartite graph on at
/// most `max_n` vertices, followed by `random` seeded random connected graphs
/// on 2..=`max_n` vertices.
pub fn corpus(max_n: usize, random: usize, seed: u64) -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let mut push = |name: String, family: Family| {
        out.push(CorpusGraph { name, graph: generate(family).expect("corpus sizes are valid") });
    };
    for n in 1..=max_n {
        push(format!("path({n})"), Family::Path(n));
    }
    for n in 3..=max_n {
        push(format!("cycle({n})"), Family::Cycle(n));
    }
    for n in 1..=max_n {
        push(format!("complete({n})"), Family::Complete(n));
    }
    for a in 1..=max_n {
        for b in a..=max_n - a {
            push(format!("complete_bipartite({a},{b})"), Family::CompleteBipartite(a, b));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let n = rng.gen_range(2..=max_n.max(2));
        let p = rng.gen_range(0.2..0.8);
        let graph = random_connected(&mut rng, n, p);
        out.push(CorpusGraph { name: format!("random#{i}(n={n})"), graph });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_four() {
        let g = generate(Family::Cycle(4)).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn binary_tree_depth_two() {
        let t = TruncatedFamily::binary_tree(2).unwrap();
        assert_eq!(t.graph.n(), 7);
        assert_eq!(t.graph.edge_count(), 6);
        assert_eq!(t.boundary, BTreeSet::from([3, 4, 5, 6]));
        assert_eq!(t.graph.labels().unwrap()[4], "depth=2");
    }

    #[test]
    fn single_vertex_path() {
        let g = generate(Family::Path(1)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(generate(Family::Cycle(5)).unwrap().is_connected());
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = generate(Family::Petersen).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn comb_shape() {
        let t = TruncatedFamily::comb(3).unwrap();
        assert_eq!(t.graph.n(), 12);
        assert_eq!(t.graph.edge_count(), 11);
        assert_eq!(t.boundary, BTreeSet::from([9, 10, 11]));
        assert!(t.graph.is_connected());
    }

    #[test]
    fn custom_reads_depth_labels() {
        let g = generate(Family::Path(3))
            .unwrap()
            .with_labels(vec!["depth=1".into(), "depth=0".into(), "depth=1".into()])
            .unwrap();
        let t = TruncatedFamily::custom(g, 1).unwrap();
        assert_eq!(t.boundary, BTreeSet::from([0, 2]));
        assert_eq!(t.vertex_depth(1), 0);
    }

    #[test]
    fn invalid_sizes() {
        assert!(generate(Family::Cycle(2)).is_err());
        assert!(generate(Family::Path(0)).is_err());
        assert!(generate(Family::BinaryTree(0)).is_err());
    }

    #[test]
    fn corpus_is_connected_and_seeded() {
        let a = corpus(8, 20, 7);
        let b = corpus(8, 20, 7);
        assert!(a.iter().all(|c| c.graph.is_connected() && c.graph.n() <= 8));
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph));
    }
}
