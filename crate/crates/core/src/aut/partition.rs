use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;

/// Ordered partition of the vertex set. Cells keep their vertices in
/// ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredPartition {
    cells: Vec<Vec<usize>>,
    #[serde(skip)]
    cell_of: Vec<usize>,
}

impl ColoredPartition {
    /// The single-cell partition of `0..n`.
    pub fn unit(n: usize) -> Self {
        if n == 0 {
            return ColoredPartition { cells: Vec::new(), cell_of: Vec::new() };
        }
        ColoredPartition { cells: vec![(0..n).collect()], cell_of: vec![0; n] }
    }

    /// Builds a partition from explicit cells. Returns `None` unless the cells
    /// are nonempty, disjoint and cover `0..n`.
    pub fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Option<Self> {
        let mut cell_of = vec![usize::MAX; n];
        let mut cells = cells;
        for (c, cell) in cells.iter_mut().enumerate() {
            if cell.is_empty() {
                return None;
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n || cell_of[v] != usize::MAX {
                    return None;
                }
                cell_of[v] = c;
            }
        }
        if cell_of.contains(&usize::MAX) {
            return None;
        }
        Some(ColoredPartition { cells, cell_of })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// First cell of maximum size among the non-singleton cells.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, c) in self.cells.iter().enumerate() {
            if c.len() > 1 && best.is_none_or(|b| c.len() > self.cells[b].len()) {
                best = Some(i);
            }
        }
        best
    }

    /// Splits `v` off its cell, placing `{v}` immediately before the rest.
    pub fn individualize(&self, v: usize) -> Self {
        let c = self.cell_of[v];
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..c]);
        cells.push(vec![v]);
        cells.push(self.cells[c].iter().copied().filter(|&w| w != v).collect());
        cells.extend_from_slice(&self.cells[c + 1..]);
        Self::with_cells(self.cell_of.len(), cells)
    }

    fn with_cells(n: usize, cells: Vec<Vec<usize>>) -> Self {
        let mut cell_of = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        ColoredPartition { cells, cell_of }
    }

    /// For a discrete partition, the vertex in each cell position.
    pub fn leaf_order(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c[0]).collect()
    }

    /// Cell sizes and, per cell, the neighbour counts of its first vertex in
    /// every cell. For an equitable partition this is a label-free
    /// description of the quotient graph.
    pub(crate) fn quotient_signature(&self, g: &Graph) -> Vec<(usize, Vec<(usize, usize)>)> {
        self.cells.iter().map(|cell| (cell.len(), self.neighbor_counts(g, cell[0]))).collect()
    }

    fn neighbor_counts(&self, g: &Graph, v: usize) -> Vec<(usize, usize)> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &w in g.neighbors(v) {
            *counts.entry(self.cell_of[w]).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// True iff every vertex of a cell has the same number of neighbours in
    /// each cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        self.cells.iter().all(|cell| {
            let first = self.neighbor_counts(g, cell[0]);
            cell.iter().all(|&v| self.neighbor_counts(g, v) == first)
        })
    }

    /// True iff every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &ColoredPartition) -> bool {
        self.cells.iter().all(|cell| cell.iter().all(|&v| coarser.cell_of[v] == coarser.cell_of[cell[0]]))
    }
}

/// Coarsest equitable refinement of `p`.
///
/// Each round splits every cell by the neighbour-count profile of its
/// vertices over the current cells; fragments stay in the position of their
/// parent cell, ordered by profile. Since the order depends only on counts
/// and cell positions, refinement commutes with relabelling.
pub fn refine(g: &Graph, p: &ColoredPartition) -> ColoredPartition {
    let n = g.n();
    let mut current = p.clone();
    loop {
        let mut cells = Vec::with_capacity(current.cells.len());
        for cell in &current.cells {
            if cell.len() == 1 {
                cells.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(current.neighbor_counts(g, v)).or_default().push(v);
            }
            cells.extend(groups.into_values());
        }
        if cells.len() == current.cells.len() {
            return current;
        }
        current = ColoredPartition::with_cells(n, cells);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn path_three_splits_by_degree() {
        let g = generate(Family::Path(3)).unwrap();
        let r = refine(&g, &ColoredPartition::unit(3));
        assert_eq!(r.cells(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn complete_graph_is_already_equitable() {
        let g = generate(Family::Complete(4)).unwrap();
        let r = refine(&g, &ColoredPartition::unit(4));
        assert_eq!(r, ColoredPartition::unit(4));
    }

    #[test]
    fn discrete_input_unchanged() {
        let g = generate(Family::Path(4)).unwrap();
        let p = ColoredPartition::from_cells(4, vec![vec![2], vec![0], vec![3], vec![1]]).unwrap();
        assert_eq!(refine(&g, &p), p);
    }

    #[test]
    fn individualize_then_refine_cycle() {
        let g = generate(Family::Cycle(6)).unwrap();
        let r = refine(&g, &ColoredPartition::unit(6).individualize(0));
        assert_eq!(r.cells(), &[vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert!(r.is_equitable(&g));
        assert_eq!(r.target_cell(), Some(1));
    }

    #[test]
    fn from_cells_validates() {
        assert!(ColoredPartition::from_cells(3, vec![vec![0, 1]]).is_none());
        assert!(ColoredPartition::from_cells(3, vec![vec![0, 1], vec![1, 2]]).is_none());
        assert!(ColoredPartition::from_cells(2, vec![vec![0], vec![]]).is_none());
    }
}
