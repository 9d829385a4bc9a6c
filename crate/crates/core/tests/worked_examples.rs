//! Small worked cases, each checked against an enumeration of the group
//! elements or an independent decoder rather than against stored numbers.

mod common;

use std::collections::BTreeSet;

use halinkit::aut::{automorphism_group, refine, ColoredPartition};
use halinkit::graph::{generate, parse_graph6, Family};
use halinkit::invariants::{self, bounds, Budget};
use halinkit::{Graph, Permutation};

use common::*;

fn elements(f: Family) -> (Graph, Vec<Permutation>) {
    let g = generate(f).unwrap();
    let all = brute_automorphisms(&g, &symmetric(g.n()));
    (g, all)
}

/// Plain bit-by-bit graph6 reader for short inputs.
fn naive_graph6(text: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = text.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..].iter().flat_map(|b| (0..6).rev().map(move |i| (b - 63) >> i & 1 == 1)).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    (n, edges)
}

#[test]
fn graph6_small_star() {
    let g = parse_graph6("D?{").unwrap();
    let (n, edges) = naive_graph6("D?{");
    assert_eq!(g.n(), n);
    assert_eq!(g.edges().collect::<Vec<_>>(), edges);
    assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
}

#[test]
fn petersen_order_against_sym10() {
    let (g, all) = elements(Family::Petersen);
    assert_eq!(all.len(), 120);
    assert_eq!(automorphism_group(&g).order_u64(), Some(all.len() as u64));
}

#[test]
fn cycle_eight_stabilizers() {
    let (g, all) = elements(Family::Cycle(8));
    assert_eq!(all.len(), 16);
    let a = automorphism_group(&g);
    let count = |keep: &dyn Fn(&Permutation) -> bool| all.iter().filter(|p| keep(p)).count() as u64;

    let s0 = set(&[0]);
    let stab0 = a.point_stabilizer(&s0).unwrap();
    assert_eq!(stab0.order_u64(), Some(count(&|p| p.fixes_pointwise(&s0))));
    let orbit: BTreeSet<usize> = all.iter().filter(|p| p.apply(0) == 0).map(|p| p.apply(1)).collect();
    assert_eq!(stab0.orbit(1).unwrap(), orbit);
    assert_eq!(orbit, set(&[1, 7]));

    let s01 = set(&[0, 1]);
    assert_eq!(a.point_stabilizer(&s01).unwrap().order_u64(), Some(count(&|p| p.fixes_pointwise(&s01))));
    assert_eq!(a.set_stabilizer(&s01).unwrap().order_u64(), Some(count(&|p| p.stabilizes(&s01))));
    assert_eq!(count(&|p| p.stabilizes(&s01)), 2);

    let t = a.disjoint_translate(&s01, &s01).unwrap().expect("rotation by 4 exists");
    assert!(t.image_set(&s01).is_disjoint(&s01));
    let rot4 = Permutation::from_images((0..8).map(|i| (i + 4) % 8).collect()).unwrap();
    assert!(all.contains(&rot4) && rot4.image_set(&s01).is_disjoint(&s01));

    for s in invariants::subdegree_report(&a) {
        let brute = (0..8)
            .map(|x| {
                all.iter().filter(|p| p.apply(s.vertex) == s.vertex).map(|p| p.apply(x)).collect::<BTreeSet<_>>().len()
            })
            .max()
            .unwrap();
        assert_eq!(s.max_orbit, brute);
        assert_eq!(s.max_orbit, 2);
    }
}

#[test]
fn refinement_of_a_path() {
    let g = generate(Family::Path(3)).unwrap();
    let p = refine(&g, &ColoredPartition::unit(3));
    let cells: BTreeSet<BTreeSet<usize>> = p.cells().iter().map(|c| c.iter().copied().collect()).collect();
    assert_eq!(cells, [set(&[0, 2]), set(&[1])].into());
    assert!(p.is_equitable(&g));
}

#[test]
fn cycle_invariants_against_dihedral_elements() {
    let (g6, d6) = elements(Family::Cycle(6));
    let a6 = automorphism_group(&g6);
    let not_base = set(&[0]);
    assert_eq!(
        invariants::is_base(&a6, &not_base).unwrap(),
        d6.iter().filter(|p| p.fixes_pointwise(&not_base)).count() == 1
    );
    assert!(!invariants::is_base(&a6, &not_base).unwrap());
    assert_eq!(invariants::determining_number(&a6, Budget::default()).unwrap().size, brute_determining_number(6, &d6));
    assert_eq!(brute_determining_number(6, &d6), 2);
    assert_eq!(invariants::distinguishing_cost(&a6, Budget::default()).unwrap().unwrap().size, 3);
    assert_eq!(brute_distinguishing_cost(6, &d6), Some(3));
    assert_eq!(invariants::motion(&a6).unwrap().motion, 4);
    assert_eq!(brute_motion(&d6), Some(4));

    let (g8, d8) = elements(Family::Cycle(8));
    let a8 = automorphism_group(&g8);
    for (s, expect) in [(set(&[0, 1]), false), (set(&[0, 1, 3]), true)] {
        let brute = d8.iter().filter(|p| p.stabilizes(&s)).count() == 1;
        assert_eq!(brute, expect);
        assert_eq!(invariants::is_distinguishing(&a8, &s).unwrap(), expect);
    }
}

#[test]
fn greedy_on_cycle_eight_against_enumeration() {
    let (g, d8) = elements(Family::Cycle(8));
    let a = automorphism_group(&g);
    let chain = invariants::greedy_distinguishing_chain(&a, &set(&[0, 1])).unwrap();
    let fin = chain.final_set();
    assert_eq!(d8.iter().filter(|p| p.stabilizes(&fin)).count(), 1);
    // {0,1,2} is not distinguishing, so 2 cannot end the chain
    assert_eq!(d8.iter().filter(|p| p.stabilizes(&set(&[0, 1, 2]))).count(), 2);
    assert_eq!(fin.len(), 3);
    assert!(fin.len() <= chain.bounds.unwrap().cost_bound);
}

#[test]
fn bound_arithmetic() {
    for (n, pop, cost, len) in [(2, 1, 3, 1), (4, 1, 8, 4), (5, 2, 10, 5)] {
        let b = bounds(n).unwrap();
        assert_eq!((b.popcount, b.cost_bound, b.chain_bound), (pop, cost, len), "n={n}");
    }
}
