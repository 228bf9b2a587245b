//! Reference oracles and random corpora shared by the integration tests.
//!
//! The oracles work on plain adjacency matrices built from the edge list, so
//! they share no code path with the bit-row solver beyond `Graph::edges`.

#![allow(dead_code)]

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vizbound::graph::{random_gnp, Graph};
use vizbound::product::cartesian_product;
use vizbound::solver::shrink_to_minimal;
use vizbound::VertexSet;

pub struct Matrix {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Matrix {
        let n = g.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    pub fn dominates(&self, set: &[usize]) -> bool {
        (0..self.n).all(|w| set.iter().any(|&s| s == w || self.adj[s][w]))
    }

    pub fn minimal(&self, set: &[usize]) -> bool {
        self.dominates(set)
            && (0..set.len()).all(|i| {
                let rest: Vec<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v)
                    .collect();
                !self.dominates(&rest)
            })
    }

    /// Smallest dominating subset of `pool`, lexicographically first.
    pub fn min_from(&self, pool: &[usize]) -> Vec<usize> {
        for k in 1..=pool.len() {
            if let Some(c) = pool
                .iter()
                .copied()
                .combinations(k)
                .find(|c| self.dominates(c))
            {
                return c;
            }
        }
        panic!("pool does not dominate");
    }

    pub fn gamma(&self) -> usize {
        self.min_from(&(0..self.n).collect::<Vec<_>>()).len()
    }

    /// Every minimum dominating set in lexicographic order.
    pub fn all_minimum(&self) -> Vec<Vec<usize>> {
        let k = self.gamma();
        (0..self.n)
            .combinations(k)
            .filter(|c| self.dominates(c))
            .collect()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seeded `G(n, p)` graphs with `n` in `lo..=hi` and `p` cycling through
/// `0.1, 0.2, ..., 0.9`.
pub fn random_corpus(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.random_range(lo..=hi);
            let p = ((i % 9) + 1) as f64 / 10.0;
            random_gnp(n, p, r.random()).unwrap()
        })
        .collect()
}

/// A valid trace input: random factors on at most `max_n` vertices and a
/// minimal dominating set of their product obtained by completing and then
/// shrinking a random subset.
pub fn random_trace_input(r: &mut ChaCha8Rng, max_n: usize) -> (Graph, Graph, VertexSet) {
    let gen = |r: &mut ChaCha8Rng| {
        let n = r.random_range(1..=max_n);
        let p = r.random_range(1..=9) as f64 / 10.0;
        random_gnp(n, p, r.random()).unwrap()
    };
    let g = gen(r);
    let h = gen(r);
    let d = random_dominating_set(r, &g, &h);
    let pg = cartesian_product(&g, &h).unwrap();
    let d = shrink_to_minimal(pg.graph(), &d).unwrap();
    (g, h, d)
}

/// Random subset of the product, completed to a dominating set by adding
/// uncovered vertices in random order.
pub fn random_dominating_set(r: &mut ChaCha8Rng, g: &Graph, h: &Graph) -> VertexSet {
    let pg = cartesian_product(g, h).unwrap();
    let n = pg.vertex_count();
    let density = r.random_range(0.0..0.5);
    let mut d = VertexSet::empty(n);
    for v in 0..n {
        if r.random_bool(density) {
            d.insert(v);
        }
    }
    loop {
        let uncovered: Vec<usize> = pg
            .graph()
            .closed_neighborhood_set(&d)
            .unwrap()
            .complement()
            .to_vec();
        if uncovered.is_empty() {
            return d;
        }
        d.insert(uncovered[r.random_range(0..uncovered.len())]);
    }
}

pub fn ceil_div3(n: usize) -> usize {
    n.div_ceil(3)
}
