//! Greedy growth of a base into a distinguishing set.
//!
//! For `Y` with at least two vertices, let `D` be the elements `α` with
//! `α(Y) ∩ Y ≠ ∅` and `X` the union of the `α(Y)`, `α ∈ D`. Any `γ`
//! stabilizing `Y ∪ {v}` with `v ∉ X` must stabilize `Y`: otherwise `v ∈ γ(Y)`
//! while `γ(Y)` meets `Y`, so `v ∈ X`. If some element of the stabilizer of
//! `Y` moves `v` as well, adding `v` shrinks the stabilizer strictly.

use std::collections::BTreeSet;

use serde::Serialize;

use super::bounds::{bounds, Bounds};
use super::is_base;
use crate::error::{Error, Result};
use crate::perm::PermGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Reduction {
    Vertex {
        vertex: usize,
        /// Whether `vertex` came from the candidate filter outside `X`.
        via_filter: bool,
        /// Order of the stabilizer of `Y ∪ {vertex}`.
        order: u64,
    },
    Stalled,
}

/// `X = ∪ { α(Y) : α ∈ A, α(Y) ∩ Y ≠ ∅ }`.
///
/// Each such `α` sends some `y1 ∈ Y` to some `y2 ∈ Y`, so `α = t ∘ h` with
/// `t` the transversal element for `y1 ↦ y2` and `h` fixing `y1`. The images
/// `h(Y)` sweep out the orbits of `Y` under the stabilizer of `y1`.
pub(crate) fn translate_hull(a: &PermGroup, y: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    let mut hull = BTreeSet::new();
    for &y1 in y {
        let (reps, stab) = a.point_transversal(y1)?;
        let mut swept = BTreeSet::new();
        for &p in y {
            swept.extend(stab.orbit(p)?);
        }
        for (y2, t) in reps.iter().filter(|(y2, _)| y.contains(y2)) {
            debug_assert_eq!(t.apply(y1), *y2);
            hull.extend(t.image_set(&swept));
        }
    }
    Ok(hull)
}

fn order_u64(g: &PermGroup) -> Result<u64> {
    g.order_u64().ok_or_else(|| Error::Precondition(format!("stabilizer order {} exceeds 64 bits", g.order())))
}

/// Least vertex whose addition to `y` gives a proper subgroup of the
/// stabilizer of `y`. The candidates outside `X` that some stabilizing
/// element moves are tried first; if there are none every vertex outside `y`
/// is tried in order.
pub fn reducing_vertex(a: &PermGroup, y: &BTreeSet<usize>) -> Result<Reduction> {
    a.check_set(y)?;
    if y.len() < 2 {
        return Err(Error::Precondition("reducing vertex needs at least two vertices".into()));
    }
    let stab = a.set_stabilizer(y)?;
    if stab.is_trivial() {
        return Err(Error::Precondition("the set stabilizer is already trivial".into()));
    }
    let order = stab.order();
    let hull = translate_hull(a, y)?;
    let moved = stab.support();
    let proper = |v: usize| -> Result<Option<u64>> {
        let mut bigger = y.clone();
        bigger.insert(v);
        let next = a.set_stabilizer(&bigger)?;
        (next.is_subgroup_of(&stab) && next.order() < order).then(|| order_u64(&next)).transpose()
    };
    if let Some(v) = moved.iter().copied().find(|v| !hull.contains(v)) {
        let o = proper(v)?.expect("a vertex outside X moved by the stabilizer always reduces it");
        return Ok(Reduction::Vertex { vertex: v, via_filter: true, order: o });
    }
    for v in (0..a.degree()).filter(|v| !y.contains(v)) {
        if let Some(o) = proper(v)? {
            return Ok(Reduction::Vertex { vertex: v, via_filter: false, order: o });
        }
    }
    Ok(Reduction::Stalled)
}

/// The sets `Y_i = B ∪ {v_1..v_i}` with strictly decreasing stabilizers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerChain {
    pub base: BTreeSet<usize>,
    pub added: Vec<usize>,
    /// Order of the stabilizer of each `Y_i`, starting with `Y_0 = B`.
    pub orders: Vec<u64>,
    /// Per added vertex, whether it came from the candidate filter.
    pub via_filter: Vec<bool>,
    pub stalled: bool,
    /// `None` for an empty base.
    pub bounds: Option<Bounds>,
}

impl StabilizerChain {
    pub fn completed(&self) -> bool {
        self.orders.last() == Some(&1)
    }

    pub fn final_set(&self) -> BTreeSet<usize> {
        self.base.iter().chain(&self.added).copied().collect()
    }

    pub fn length(&self) -> usize {
        self.added.len()
    }

    /// The final set is within the cost bound and the chain within the chain
    /// bound. Vacuously true for an empty base.
    pub fn within_bound(&self) -> bool {
        match self.bounds {
            None => true,
            Some(b) => self.final_set().len() <= b.cost_bound && self.length() <= b.chain_bound,
        }
    }
}

/// Repeats [`reducing_vertex`] from `Y_0 = b` until the stabilizer is trivial
/// or no vertex reduces it.
pub fn greedy_distinguishing_chain(a: &PermGroup, b: &BTreeSet<usize>) -> Result<StabilizerChain> {
    if !is_base(a, b)? {
        return Err(Error::Precondition("the starting set is not a base".into()));
    }
    let bounds = if b.is_empty() { None } else { Some(bounds(b.len())?) };
    let first = order_u64(&a.set_stabilizer(b)?)?;
    let mut chain = StabilizerChain {
        base: b.clone(),
        added: Vec::new(),
        orders: vec![first],
        via_filter: Vec::new(),
        stalled: false,
        bounds,
    };
    // A single base point is fixed by its own stabilizer, which is therefore trivial.
    if b.len() <= 1 {
        debug_assert_eq!(first, 1);
        return Ok(chain);
    }
    let mut y = b.clone();
    while chain.orders.last() != Some(&1) {
        match reducing_vertex(a, &y)? {
            Reduction::Vertex { vertex, via_filter, order } => {
                y.insert(vertex);
                chain.added.push(vertex);
                chain.via_filter.push(via_filter);
                chain.orders.push(order);
            }
            Reduction::Stalled => {
                chain.stalled = true;
                break;
            }
        }
    }
    Ok(chain)
}
