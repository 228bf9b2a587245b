mod common;

use rand::Rng;

use common::{ceil_div3, random_corpus, Matrix};
use vizbound::graph::{cycle, grid, path};
use vizbound::solver::{
    enumerate_minimum_dominating_sets, gamma_bb, gamma_oracle, gamma_restricted,
    is_minimal_dominating, shrink_to_minimal, SolverLimits,
};
use vizbound::VertexSet;

fn limits() -> SolverLimits {
    SolverLimits::default()
}

#[test]
fn oracle_agrees_with_matrix_reference() {
    for g in random_corpus(60, 1, 10, 1) {
        let m = Matrix::of(&g);
        let r = gamma_oracle(&g).unwrap();
        assert_eq!(
            r.witness.to_vec(),
            m.min_from(&(0..m.n).collect::<Vec<_>>())
        );
    }
}

#[test]
fn bb_agrees_with_oracle_on_random_graphs() {
    for g in random_corpus(200, 1, 12, 2) {
        let bb = gamma_bb(&g, &limits()).unwrap();
        let oracle = gamma_oracle(&g).unwrap();
        assert_eq!(bb, oracle, "{g:?}");
        assert!(g.is_dominating(&bb.witness));
    }
}

#[test]
fn paths_and_cycles_closed_form() {
    for n in 1..=12 {
        let g = path(n).unwrap();
        assert_eq!(gamma_bb(&g, &limits()).unwrap().gamma, ceil_div3(n));
        assert_eq!(gamma_oracle(&g).unwrap().gamma, ceil_div3(n));
    }
    for n in 3..=12 {
        let g = cycle(n).unwrap();
        assert_eq!(gamma_bb(&g, &limits()).unwrap().gamma, ceil_div3(n));
        assert_eq!(gamma_oracle(&g).unwrap().gamma, ceil_div3(n));
    }
}

#[test]
fn grid_values_against_oracle() {
    // 4x4 is the largest grid within the default oracle guard
    for (m, n) in [(2, 2), (2, 5), (3, 3), (3, 5), (4, 4)] {
        let g = grid(m, n).unwrap();
        assert_eq!(gamma_bb(&g, &limits()).unwrap(), gamma_oracle(&g).unwrap());
    }
    assert_eq!(gamma_bb(&grid(4, 4).unwrap(), &limits()).unwrap().gamma, 4);
}

#[test]
fn restricted_full_candidates_equal_unrestricted() {
    for g in random_corpus(200, 1, 12, 2) {
        let full = gamma_restricted(&g, &g.vertices(), &limits()).unwrap();
        assert_eq!(full, gamma_bb(&g, &limits()).unwrap());
    }
}

#[test]
fn restricted_agrees_with_pool_oracle() {
    let mut r = common::rng(3);
    let mut checked = 0;
    for g in random_corpus(300, 1, 11, 4) {
        let n = g.vertex_count();
        let pool: Vec<usize> = (0..n).filter(|_| r.random_bool(0.6)).collect();
        let cand = VertexSet::from_vertices(n, pool.iter().copied()).unwrap();
        let m = Matrix::of(&g);
        if !m.dominates(&pool) {
            assert!(gamma_restricted(&g, &cand, &limits()).is_err());
            continue;
        }
        let got = gamma_restricted(&g, &cand, &limits()).unwrap();
        assert_eq!(got.witness.to_vec(), m.min_from(&pool));
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn enumeration_matches_brute_force() {
    for g in random_corpus(80, 1, 10, 5) {
        let all = enumerate_minimum_dominating_sets(&g, 1 << 20).unwrap();
        let m = Matrix::of(&g);
        let expected = m.all_minimum();
        let got: Vec<Vec<usize>> = all.sets.iter().map(VertexSet::to_vec).collect();
        assert_eq!(got, expected);
        assert!(!all.truncated);
        for s in &all.sets {
            assert!(g.is_dominating(s));
            assert_eq!(s.len(), all.gamma);
        }
    }
    let p4 = enumerate_minimum_dominating_sets(&path(4).unwrap(), 100).unwrap();
    assert_eq!(p4.sets.len(), 4);
}

#[test]
fn shrink_output_is_minimal() {
    let mut r = common::rng(6);
    for g in random_corpus(150, 1, 12, 7) {
        let n = g.vertex_count();
        let mut s = VertexSet::from_vertices(n, (0..n).filter(|_| r.random_bool(0.5))).unwrap();
        s.union_with(&gamma_bb(&g, &limits()).unwrap().witness);
        let shrunk = shrink_to_minimal(&g, &s).unwrap();
        assert!(shrunk.is_subset(&s));
        assert!(is_minimal_dominating(&g, &shrunk));
        assert!(Matrix::of(&g).minimal(&shrunk.to_vec()));
    }
}

#[test]
fn minimality_agrees_with_reference() {
    for g in random_corpus(40, 1, 8, 8) {
        let n = g.vertex_count();
        let m = Matrix::of(&g);
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let set = VertexSet::from_vertices(n, s.iter().copied()).unwrap();
            assert_eq!(is_minimal_dominating(&g, &set), m.minimal(&s));
        }
    }
}

#[test]
fn adding_an_edge_never_increases_gamma() {
    let mut r = common::rng(9);
    let corpus = random_corpus(400, 2, 12, 10);
    let mut checked = 0;
    for g in corpus {
        let n = g.vertex_count();
        let (u, v) = (r.random_range(0..n), r.random_range(0..n));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let bigger = g.with_edge(u, v).unwrap();
        assert!(
            gamma_bb(&bigger, &limits()).unwrap().gamma <= gamma_bb(&g, &limits()).unwrap().gamma
        );
        checked += 1;
        if checked == 100 {
            break;
        }
    }
    assert_eq!(checked, 100);
}

#[test]
fn larger_instances_solve_within_budget() {
    let g = grid(6, 6).unwrap();
    assert_eq!(gamma_bb(&g, &limits()).unwrap().gamma, 10);
    let g = cycle(40).unwrap();
    assert_eq!(gamma_bb(&g, &limits()).unwrap().gamma, 14);
}
