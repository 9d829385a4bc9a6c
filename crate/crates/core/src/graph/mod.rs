//! Finite simple undirected graphs.
//!
//! Vertex `k` is the `k`-th vertex of the fixed enumeration `v_0, v_1, ...`;
//! every other module reads vertex indices that way.

mod families;
mod graph6;
mod json;

pub use families::{corpus, generate, random_connected, CorpusGraph, Family, FamilyKind, TruncatedFamily};
pub use graph6::{encode_graph6, parse_graph6};
pub use json::{parse_edge_list_json, to_edge_list_json, EdgeListJson};

use std::collections::{BTreeSet, VecDeque};

use crate::error::ParseError;
use crate::perm::Permutation;

/// Simple undirected graph on vertices `0..n`.
///
/// Equality compares the vertex count and the edge set; labels are provenance
/// only.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints `>= n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, ParseError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(ParseError::Invalid(format!("edge ({a},{b}) has an endpoint >= {n}")));
            }
            if a == b {
                return Err(ParseError::Invalid(format!("self-loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(ParseError::Invalid(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(Self::from_normalized(n, set))
    }

    pub(crate) fn from_normalized(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, labels: None }
    }

    /// Attaches per-vertex labels; the label count must equal `n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ParseError> {
        if labels.len() != self.n {
            return Err(ParseError::Invalid(format!("{} labels given for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// True iff the graph has exactly one component. The single-vertex graph
    /// is connected; the graph with no vertices is not.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// True iff `p` maps edges onto edges. Since `p` is a bijection and the
    /// edge set is finite, this also maps non-edges onto non-edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.n && self.edges.iter().all(|&(a, b)| self.has_edge(p.apply(a), p.apply(b)))
    }

    /// The graph obtained by renaming vertex `v` to `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p.apply(a), p.apply(b));
                (x.min(y), x.max(y))
            })
            .collect();
        Graph::from_normalized(self.n, edges)
    }
}
