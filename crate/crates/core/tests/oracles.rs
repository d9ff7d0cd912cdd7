mod common;

use common::*;
use tdgame_core::enumerate::{count_trees, forests, trees};
use tdgame_core::graph::named;
use tdgame_core::{gamma_t, Graph, Mover, Solver, VertexSet};

#[test]
fn gamma_t_matches_subset_search_on_trees() {
    for n in 2..=12 {
        for (code, t) in trees(n).unwrap() {
            assert_eq!(gamma_t(&t).unwrap(), gamma_t_bruteforce(&t), "{code}");
        }
    }
}

#[test]
fn gamma_t_matches_subset_search_on_larger_trees() {
    // every 97th class keeps the 2^n sweep affordable
    for n in 13..=16 {
        for (code, t) in trees(n).unwrap().step_by(97) {
            assert_eq!(gamma_t(&t).unwrap(), gamma_t_bruteforce(&t), "{code}");
        }
    }
}

#[test]
fn gamma_t_matches_subset_search_on_named_graphs() {
    let graphs = [named::cycle(8), named::complete(5), named::f10(), named::double_star(3, 4), named::cycle(11)];
    for g in graphs {
        assert_eq!(gamma_t(&g).unwrap(), gamma_t_bruteforce(&g));
    }
}

#[test]
fn memoized_solver_matches_plain_recursion() {
    for n in 2..=8 {
        for (code, t) in trees(n).unwrap() {
            let mut s = Solver::new(&t).unwrap();
            for mask in [0u64, 1, 0b101, (1 << n) - 2] {
                let mask = mask & ((1 << n) - 1);
                let d = VertexSet(mask);
                assert_eq!(s.dtg(d), minimax(&t, mask, true), "{code} {mask:b}");
                assert_eq!(s.stg(d), minimax(&t, mask, false), "{code} {mask:b}");
            }
        }
    }
    for g in [named::cycle(8), named::complete(4)] {
        let mut s = Solver::new(&g).unwrap();
        assert_eq!(s.dtg(VertexSet::EMPTY), minimax(&g, 0, true));
        assert_eq!(s.stg(VertexSet::EMPTY), minimax(&g, 0, false));
    }
}

#[test]
fn move_ordering_never_changes_values() {
    for n in 2..=9 {
        for (code, t) in trees(n).unwrap() {
            let mut fast = Solver::with_ordering(&t, true).unwrap();
            let mut plain = Solver::with_ordering(&t, false).unwrap();
            for mask in 0..1u64 << n {
                for m in [Mover::Dominator, Mover::Staller] {
                    assert_eq!(fast.value(VertexSet(mask), m), plain.value(VertexSet(mask), m), "{code}");
                }
            }
        }
    }
}

#[test]
fn generator_matches_pruefer_classes() {
    for n in 1..=8 {
        let ours: Vec<_> = trees(n).unwrap().collect();
        let reference = pruefer_classes(n);
        assert_eq!(ours.len(), reference.len(), "n={n}");
        let mapped: std::collections::BTreeSet<String> =
            ours.iter().map(|(_, g)| any_root_code(n, &g.edges())).collect();
        assert_eq!(mapped, reference, "n={n}");
    }
}

#[test]
fn tree_counts_match_otter() {
    let t = free_tree_counts(20);
    for (n, &expected) in t.iter().enumerate().take(17).skip(1) {
        assert_eq!(count_trees(n).unwrap() as u128, expected, "n={n}");
    }
    assert_eq!(t[20], 823_065);
}

#[test]
fn forest_counts_match_euler_transform() {
    let f = forest_counts(12);
    for (n, &expected) in f.iter().enumerate().skip(2) {
        assert_eq!(forests(n).unwrap().len() as u128, expected, "n={n}");
    }
}

#[test]
fn order_twenty_trees_enumerate() {
    assert_eq!(count_trees(20).unwrap(), 823_065);
    let first: Vec<Graph> = trees(18).unwrap().take(3).map(|(_, g)| g).collect();
    assert!(first.iter().all(Graph::is_tree));
}
