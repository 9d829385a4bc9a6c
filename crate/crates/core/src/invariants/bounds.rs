use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// Size bound for a greedy distinguishing set grown from a base of size `n`,
/// and the bound on the length of a subgroup chain in `Sym(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub n: usize,
    /// Number of ones in the binary expansion of `n`.
    pub popcount: usize,
    /// `⌈5n/2⌉ − b(n) − 1`
    pub cost_bound: usize,
    /// `⌈3n/2⌉ − b(n) − 1`
    pub chain_bound: usize,
}

pub fn bounds(n: usize) -> Result<Bounds> {
    if n == 0 {
        return Err(Error::Precondition("bounds need a nonempty base".into()));
    }
    let b = n.count_ones() as usize;
    Ok(Bounds { n, popcount: b, cost_bound: (5 * n).div_ceil(2) - b - 1, chain_bound: (3 * n).div_ceil(2) - b - 1 })
}

/// Length of the longest strictly decreasing chain of subgroups of `Sym(n)`,
/// by enumerating the whole subgroup lattice. Only `1 ≤ n ≤ 5`.
pub fn longest_subgroup_chain(n: usize) -> Result<usize> {
    if !(1..=5).contains(&n) {
        return Err(Error::Precondition(format!("subgroup lattice of Sym({n}) is only enumerated for 1 <= n <= 5")));
    }
    let elements: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let m = elements.len();
    // mul[a][b] = a ∘ b
    let mul: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let prod: Vec<usize> = (0..n).map(|x| elements[a][elements[b][x]]).collect();
                    index[prod.as_slice()]
                })
                .collect()
        })
        .collect();
    let identity = index[(0..n).collect::<Vec<_>>().as_slice()];

    // In a finite group the closure of {id} under right multiplication by
    // the generators is the generated subgroup.
    let generate = |gens: &[usize]| -> u128 {
        let mut bits = 1u128 << identity;
        let mut stack = vec![identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = mul[x][g];
                if bits & (1 << y) == 0 {
                    bits |= 1 << y;
                    stack.push(y);
                }
            }
        }
        bits
    };

    let mut seen: HashSet<u128> = HashSet::from([1u128 << identity]);
    let mut subgroups: Vec<(u128, Vec<usize>)> = vec![(1u128 << identity, Vec::new())];
    let mut next = 0;
    while next < subgroups.len() {
        let (bits, gens) = subgroups[next].clone();
        next += 1;
        for g in 0..m {
            if bits & (1 << g) != 0 {
                continue;
            }
            let mut more = gens.clone();
            more.push(g);
            let h = generate(&more);
            if seen.insert(h) {
                subgroups.push((h, more));
            }
        }
    }

    let mut groups: Vec<u128> = subgroups.into_iter().map(|(b, _)| b).collect();
    groups.sort_by_key(|b| b.count_ones());
    let mut longest = vec![0usize; groups.len()];
    for i in 0..groups.len() {
        for j in 0..i {
            let (h, k) = (groups[i], groups[j]);
            if k != h && k & h == k {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    Ok(*longest.last().expect("Sym(n) itself"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_arithmetic() {
        let b = |n| {
            let x = bounds(n).unwrap();
            (x.popcount, x.cost_bound, x.chain_bound)
        };
        assert_eq!(b(1), (1, 1, 0));
        assert_eq!(b(2), (1, 3, 1));
        assert_eq!(b(4), (1, 8, 4));
        assert_eq!(b(5), (2, 10, 5));
        assert!(bounds(0).is_err());
    }

    #[test]
    fn chains_in_small_symmetric_groups() {
        let lengths: Vec<usize> = (1..=5).map(|n| longest_subgroup_chain(n).unwrap()).collect();
        assert_eq!(lengths, vec![0, 1, 2, 4, 5]);
        for n in 1..=5 {
            assert_eq!(longest_subgroup_chain(n).unwrap(), bounds(n).unwrap().chain_bound);
        }
        assert!(longest_subgroup_chain(6).is_err());
        assert!(longest_subgroup_chain(0).is_err());
    }
}
