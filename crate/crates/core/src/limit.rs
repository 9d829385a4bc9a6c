//! Finite simulation of the nested-set construction of continuum many
//! automorphisms on truncations of infinite graphs.
//!
//! Round `k` records a finite set `F_k`, an automorphism `φ_k` fixing `F_k`
//! pointwise and a vertex `x_k` it moves. With `α_k^ε = φ_0^{ε_0} ∘ … ∘
//! φ_k^{ε_k}` and `α_k^{-ε} = φ_k^{-ε_k} ∘ … ∘ φ_0^{-ε_0}`, the next set is
//! exactly `α_k^E(F_k) ∪ α_k^{-E}(F_k) ∪ {x_k, v_{k+1}}`. The enumeration
//! `v_0, v_1, …` is breadth-first from the root, which for the supported
//! families is vertex index order.
//!
//! After the last round the state also stores the closing set `F_K`, so that
//! every vertex whose image is fixed by `K` bits is covered.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FamilyKind, TruncatedFamily};
use crate::perm::Permutation;

/// A finite prefix `(ε_0, …, ε_K)` of a 0/1 sequence. Written as a bit string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct EpsilonWord {
    bits: Vec<bool>,
}

impl EpsilonWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Precondition("an epsilon word has at least one bit".into()));
        }
        Ok(EpsilonWord { bits })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![false; len])
    }

    /// The word of length `len` whose bit `i` is bit `i` of `code`.
    pub fn from_index(code: u64, len: usize) -> Result<Self> {
        Self::new((0..len).map(|i| i < 64 && code >> i & 1 == 1).collect())
    }

    /// All `2^len` words, by increasing [`EpsilonWord::from_index`] code.
    pub fn all(len: usize) -> Result<Vec<Self>> {
        if len >= 32 {
            return Err(Error::Precondition(format!("2^{len} words is too many to list")));
        }
        (0..1u64 << len).map(|c| Self::from_index(c, len)).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// First index where the two words differ.
    pub fn first_difference(&self, other: &EpsilonWord) -> Option<usize> {
        self.bits.iter().zip(&other.bits).position(|(a, b)| a != b)
    }
}

impl fmt::Display for EpsilonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.iter().try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

impl FromStr for EpsilonWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Precondition(format!("epsilon word {s:?} must consist of 0 and 1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

impl TryFrom<String> for EpsilonWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<EpsilonWord> for String {
    fn from(w: EpsilonWord) -> String {
        w.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Round {
    pub f: BTreeSet<usize>,
    pub phi: Permutation,
    pub x: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionState {
    pub kind: FamilyKind,
    pub depth: usize,
    pub degree: usize,
    pub requested: usize,
    pub rounds: Vec<Round>,
    /// `F_K` for `K` completed rounds; `None` if even that could not be formed.
    pub closing: Option<BTreeSet<usize>>,
    /// Largest `m` with `v_0, …, v_{m-1}` all in the last recorded set.
    pub exhausted_prefix: usize,
    /// Why the run stopped short of `requested` rounds.
    pub exhausted: Option<String>,
}

/// A nontrivial automorphism of the truncation fixing `f` pointwise, or
/// `None` when the truncation leaves no room for one.
///
/// Binary tree: swap the two child subtrees of the least (hence shallowest)
/// non-boundary vertex whose subtree avoids `f`. Comb: swap the two teeth of
/// the least non-boundary spine vertex whose teeth avoid `f`.
pub fn fixing_oracle(family: &TruncatedFamily, f: &BTreeSet<usize>) -> Result<Option<Permutation>> {
    let n = family.graph.n();
    if let Some(&v) = f.iter().find(|&&v| v >= n) {
        return Err(Error::PointOutOfRange { point: v, degree: n });
    }
    if let Some(v) = f.intersection(&family.boundary).next() {
        return Err(Error::Precondition(format!("vertex {v} lies on the truncation boundary")));
    }
    let d = family.depth;
    match family.kind {
        FamilyKind::BinaryTree => {
            let interior = (1usize << d) - 1;
            Ok((0..interior).find(|&u| subtree_avoids(u, n, f)).map(|u| swap_children(u, n)))
        }
        FamilyKind::Comb => Ok((0..d)
            .find(|&i| !f.contains(&(3 * i + 1)) && !f.contains(&(3 * i + 2)))
            .map(|i| Permutation::from_cycles(n, &[&[3 * i + 1, 3 * i + 2]]).expect("two distinct teeth"))),
        FamilyKind::Custom => Err(Error::Precondition("no fixing oracle for custom families".into())),
    }
}

fn subtree_avoids(u: usize, n: usize, f: &BTreeSet<usize>) -> bool {
    // the subtree of u meets each level in a contiguous run of indices
    let (mut lo, mut hi) = (u, u);
    while lo < n {
        if f.range(lo..=hi.min(n - 1)).next().is_some() {
            return false;
        }
        lo = 2 * lo + 1;
        hi = 2 * hi + 2;
    }
    true
}

/// Exchanges the subtrees rooted at the children `2u+1` and `2u+2`.
fn swap_children(u: usize, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    let (mut left, mut right, mut width) = (2 * u + 1, 2 * u + 2, 1);
    while right + width <= n {
        for i in 0..width {
            images[left + i] = right + i;
            images[right + i] = left + i;
        }
        left = 2 * left + 1;
        right = 2 * right + 1;
        width *= 2;
    }
    Permutation::from_images(images).expect("swapping disjoint blocks")
}

/// `α_k^E(f)`: images of `f` under every `φ_0^{ε_0} ∘ … ∘ φ_k^{ε_k}`.
fn forward_closure(phis: &[Permutation], f: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut cur = f.clone();
    for phi in phis.iter().rev() {
        let moved = phi.image_set(&cur);
        cur.extend(moved);
    }
    cur
}

/// `α_k^{-E}(f)`: images of `f` under every `φ_k^{-ε_k} ∘ … ∘ φ_0^{-ε_0}`.
fn backward_closure(phis: &[Permutation], f: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut cur = f.clone();
    for phi in phis {
        let moved = phi.inverse().image_set(&cur);
        cur.extend(moved);
    }
    cur
}

fn next_set(phis: &[Permutation], f: &BTreeSet<usize>, x: usize, next_vertex: usize) -> BTreeSet<usize> {
    let mut out = forward_closure(phis, f);
    out.extend(backward_closure(phis, f));
    out.insert(x);
    out.insert(next_vertex);
    out
}

/// Runs `k` rounds with minimal sets, stopping early (and saying why) when
/// the truncation runs out.
pub fn run_construction(family: &TruncatedFamily, k: usize) -> Result<ConstructionState> {
    if k == 0 {
        return Err(Error::Precondition("at least one round is required".into()));
    }
    if family.kind == FamilyKind::Custom {
        return Err(Error::Precondition("no fixing oracle for custom families".into()));
    }
    let n = family.graph.n();
    let mut state = ConstructionState {
        kind: family.kind,
        depth: family.depth,
        degree: n,
        requested: k,
        rounds: Vec::new(),
        closing: None,
        exhausted_prefix: 0,
        exhausted: None,
    };
    let mut f = BTreeSet::from([0]);
    let mut phis: Vec<Permutation> = Vec::new();
    for round in 0..k {
        if let Some(v) = f.intersection(&family.boundary).next() {
            state.exhausted = Some(format!("F_{round} reaches boundary vertex {v}"));
            break;
        }
        let Some(phi) = fixing_oracle(family, &f)? else {
            state.exhausted = Some(format!("no automorphism fixes F_{round} at depth {}", family.depth));
            break;
        };
        let x = phi.first_moved().expect("the oracle returns a nontrivial automorphism");
        phis.push(phi.clone());
        let next_vertex = round + 1;
        state.rounds.push(Round { f: f.clone(), phi, x });
        if next_vertex >= n {
            state.exhausted = Some(format!("enumeration ends before v_{next_vertex}"));
            break;
        }
        f = next_set(&phis, &f, x, next_vertex);
    }
    if state.exhausted.is_none() {
        state.closing = Some(f);
    }
    let last = state.closing.as_ref().or(state.rounds.last().map(|r| &r.f));
    state.exhausted_prefix = last.map_or(0, |s| (0..).take_while(|v| s.contains(v)).count());
    Ok(state)
}

/// A truncation depth that supports `k` rounds: `k` for the comb and
/// `2⌈log2(k+1)⌉` for the binary tree, where two more levels roughly double
/// the number of rounds that fit.
pub fn depth_budget(kind: FamilyKind, k: usize) -> Result<usize> {
    match kind {
        FamilyKind::BinaryTree => Ok(2 * (usize::BITS - k.leading_zeros()) as usize),
        FamilyKind::Comb => Ok(k.max(1)),
        FamilyKind::Custom => Err(Error::Precondition("no depth budget for custom families".into())),
    }
}

/// Least depth at which `k` rounds complete, by running the construction.
pub fn minimal_depth(kind: FamilyKind, k: usize, max_depth: usize) -> Result<Option<usize>> {
    for d in 1..=max_depth {
        let family = match kind {
            FamilyKind::BinaryTree => TruncatedFamily::binary_tree(d)?,
            FamilyKind::Comb => TruncatedFamily::comb(d)?,
            FamilyKind::Custom => return Err(Error::Precondition("no fixing oracle for custom families".into())),
        };
        if run_construction(&family, k)?.completed() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

impl ConstructionState {
    pub fn completed(&self) -> bool {
        self.exhausted.is_none() && self.rounds.len() == self.requested
    }

    pub fn phis(&self) -> Vec<Permutation> {
        self.rounds.iter().map(|r| r.phi.clone()).collect()
    }

    /// `F_j` for `j ≤ rounds`, the closing set included.
    pub fn set(&self, j: usize) -> Option<&BTreeSet<usize>> {
        match j.cmp(&self.rounds.len()) {
            std::cmp::Ordering::Less => Some(&self.rounds[j].f),
            std::cmp::Ordering::Equal => self.closing.as_ref(),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// `F_0 ⊂ F_1 ⊂ …`, ending with the closing set when present.
    pub fn sets(&self) -> Vec<BTreeSet<usize>> {
        (0..=self.rounds.len()).filter_map(|j| self.set(j).cloned()).collect()
    }

    /// `α_k^ε` as a permutation, using bits `0..=k` of `word`.
    pub fn alpha_k(&self, word: &EpsilonWord, k: usize) -> Result<Permutation> {
        self.check_prefix(word, k + 1)?;
        Ok(self.rounds[..=k]
            .iter()
            .zip(word.bits())
            .fold(Permutation::identity(self.degree), |acc, (r, &b)| acc.compose(&r.phi.power_bit(b))))
    }

    /// `α_k^{-ε} = φ_k^{-ε_k} ∘ … ∘ φ_0^{-ε_0}`.
    pub fn alpha_k_inverse(&self, word: &EpsilonWord, k: usize) -> Result<Permutation> {
        self.check_prefix(word, k + 1)?;
        Ok(self.rounds[..=k]
            .iter()
            .zip(word.bits())
            .fold(Permutation::identity(self.degree), |acc, (r, &b)| r.phi.power_bit(b).inverse().compose(&acc)))
    }

    fn check_prefix(&self, word: &EpsilonWord, needed: usize) -> Result<()> {
        if needed > self.rounds.len() {
            return Err(Error::Precondition(format!("{needed} rounds needed, {} recorded", self.rounds.len())));
        }
        if needed > word.len() {
            return Err(Error::Precondition(format!("{needed} bits needed, word {word} has {}", word.len())));
        }
        Ok(())
    }

    /// Least `j` with `v ∈ F_j`.
    pub fn entry_round(&self, v: usize) -> Option<usize> {
        (0..=self.rounds.len()).find(|&j| self.set(j).is_some_and(|s| s.contains(&v)))
    }

    /// The limit map `α^ε` at `v`. For `v ∈ F_j` every `φ_i` with `i ≥ j`
    /// fixes `v`, so `α_{j-1}^ε(v)` is already the limit value.
    pub fn alpha(&self, word: &EpsilonWord, v: usize) -> Result<usize> {
        if v >= self.degree {
            return Err(Error::PointOutOfRange { point: v, degree: self.degree });
        }
        let j =
            self.entry_round(v).ok_or_else(|| Error::Precondition(format!("vertex {v} is not in any recorded F_j")))?;
        if j == 0 {
            return Ok(v);
        }
        self.check_prefix(word, j)?;
        Ok(self.rounds[..j]
            .iter()
            .zip(&word.bits()[..j])
            .rev()
            .fold(v, |y, (r, &b)| if b { r.phi.apply(y) } else { y }))
    }

    /// `α^ε` on the last recorded set, in ascending vertex order.
    pub fn image_table(&self, word: &EpsilonWord) -> Result<Vec<usize>> {
        let domain = self.sets().pop().unwrap_or_default();
        domain.iter().map(|&v| self.alpha(word, v)).collect()
    }

    /// Finitary agreement on a tuple: the limit images agree with `α_m^ε` for every
    /// recorded `m` past the largest enumeration index in the tuple.
    pub fn verify_finitary(&self, tuple: &[usize], word: &EpsilonWord) -> Result<bool> {
        let Some(&big_n) = tuple.iter().max() else {
            return Ok(true);
        };
        if big_n + 1 >= self.rounds.len() {
            return Err(Error::Precondition(format!(
                "tuple reaches v_{big_n}, which needs more than {} rounds",
                self.rounds.len()
            )));
        }
        let limit: Vec<usize> = tuple.iter().map(|&w| self.alpha(word, w)).collect::<Result<_>>()?;
        for m in big_n + 1..self.rounds.len() {
            let a = self.alpha_k(word, m)?;
            if tuple.iter().map(|&w| a.apply(w)).ne(limit.iter().copied()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For all pairs of distinct words of length `k`, a vertex of
    /// `F_{i+1}` moved by `φ_i`, `i` the first differing bit, whose limit
    /// images differ. The witness is `x_i`.
    pub fn verify_distinctness(&self, k: usize) -> Result<DistinctnessReport> {
        if k > self.rounds.len() || self.set(k).is_none() {
            return Err(Error::Precondition(format!("{k} rounds and F_{k} are needed")));
        }
        let words = EpsilonWord::all(k)?;
        let tables: Vec<Vec<usize>> = words.iter().map(|w| self.image_table(w)).collect::<Result<_>>()?;
        let mut report = DistinctnessReport { words: words.len(), pairs: 0, witnessed: 0, witnesses: Vec::new() };
        for a in 0..words.len() {
            for b in a + 1..words.len() {
                report.pairs += 1;
                let i = words[a].first_difference(&words[b]).expect("distinct words");
                let v = self.rounds[i].x;
                let (ia, ib) = (self.alpha(&words[a], v)?, self.alpha(&words[b], v)?);
                if ia != ib && tables[a] != tables[b] {
                    report.witnessed += 1;
                    report.witnesses.push(PairWitness {
                        a: words[a].clone(),
                        b: words[b].clone(),
                        first_difference: i,
                        vertex: v,
                        images: [ia, ib],
                    });
                }
            }
        }
        Ok(report)
    }

    /// `α_k^{-ε} ∘ α_k^ε` is the identity for every word of length
    /// `rounds` and every `k`.
    pub fn inverse_consistent(&self) -> Result<bool> {
        let k = self.rounds.len();
        for word in EpsilonWord::all(k)? {
            for i in 0..k {
                if !self.alpha_k_inverse(&word, i)?.compose(&self.alpha_k(&word, i)?).is_identity() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks the recorded data against the construction's requirements.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let phis = self.phis();
        for (k, r) in self.rounds.iter().enumerate() {
            if !r.f.contains(&k) {
                return Err(format!("v_{k} not in F_{k}"));
            }
            if !r.phi.fixes_pointwise(&r.f) {
                return Err(format!("φ_{k} moves a vertex of F_{k}"));
            }
            if r.phi.apply(r.x) == r.x {
                return Err(format!("φ_{k} fixes x_{k}"));
            }
            if let Some(next) = self.set(k + 1) {
                if !r.f.is_subset(next) {
                    return Err(format!("F_{k} is not inside F_{}", k + 1));
                }
                if *next != next_set(&phis[..=k], &r.f, r.x, k + 1) {
                    return Err(format!("F_{} is not the minimal required set", k + 1));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub a: EpsilonWord,
    pub b: EpsilonWord,
    pub first_difference: usize,
    pub vertex: usize,
    pub images: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinctnessReport {
    pub words: usize,
    pub pairs: usize,
    pub witnessed: usize,
    pub witnesses: Vec<PairWitness>,
}

impl DistinctnessReport {
    pub fn all_witnessed(&self) -> bool {
        self.pairs == self.witnessed && self.pairs == self.words * self.words.saturating_sub(1) / 2
    }
}
