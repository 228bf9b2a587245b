//! Simple undirected graphs over vertex ids `0..n`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Immutable simple graph with bit-row adjacency.
///
/// `adj[v]` is the open neighborhood of `v`, `closed[v]` additionally
/// contains `v`. Rows are symmetric and irreflexive by construction.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    edge_count: usize,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges in
    /// either orientation collapse into one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::BadEdge { u, v, n });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    fn from_rows(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph {
            n,
            adj,
            closed,
            edge_count,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Open neighborhood row; panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood row; panics if `v >= n`.
    #[inline]
    pub fn closed_row(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::BadVertex { v, n: self.n });
        }
        Ok(self.closed[v].clone())
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::UniverseMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    /// `N[s]`: union of the closed neighborhoods of the members of `s`.
    pub fn closed_neighborhood_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.cover(s))
    }

    /// Unchecked `N[s]`; `s` must share the graph's universe.
    pub(crate) fn cover(&self, s: &VertexSet) -> VertexSet {
        let mut acc = VertexSet::empty(self.n);
        for v in s {
            acc.union_with(&self.closed[v]);
        }
        acc
    }

    /// True iff every vertex lies in `N[s]`. A set over another universe
    /// never dominates.
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        s.universe() == self.n && self.cover(s).is_full()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.cover(&frontier);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.is_full()
    }

    /// Copy with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::BadEdge { u, v, n: self.n });
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        let mut g = Self::from_rows(adj);
        g.name = self.name.clone();
        Ok(g)
    }

    /// Image of the graph under the vertex relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::BadParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::empty(self.n);
        for &p in perm {
            if p >= self.n || !seen.insert(p) {
                return Err(Error::BadParameter("not a permutation".into()));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Parses the edge-list text format: an `n m` header followed by `m`
    /// lines `u v`. Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::BadEdgeList {
            line: 1,
            reason: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            if u >= n || v >= n || u == v {
                return Err(Error::BadEdgeList {
                    line,
                    reason: format!("bad edge ({u}, {v}) for {n} vertices"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::BadEdgeList {
                line: hline,
                reason: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |reason: &str| Error::BadEdgeList {
        line,
        reason: reason.to_string(),
    };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not an integer"))?;
    let b = b.parse().map_err(|_| bad("not an integer"))?;
    Ok((a, b))
}

/// Structural equality: same vertex count and edge set. Names are ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?.with_name(format!("path:{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("cycle needs n >= 3".into()));
    }
    Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?.with_name(format!("cycle:{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("complete:{n}")))
}

/// Star on `n` vertices: center 0 joined to leaves `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("star needs n >= 1".into()));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (0, v)))?.with_name(format!("star:{n}")))
}

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("empty graph needs n >= 1".into()));
    }
    Ok(Graph::from_edges(n, [])?.with_name(format!("empty:{n}")))
}

/// `m x n` grid, row-major: vertex `(r, c)` has id `r * n + c`. Identical to
/// the Cartesian product of `path(m)` and `path(n)`.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter("grid needs m, n >= 1".into()));
    }
    let id = |r: usize, c: usize| r * n + c;
    let mut edges = Vec::new();
    for r in 0..m {
        for c in 0..n {
            if c + 1 < n {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < m {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(Graph::new(m * n, &edges)?.with_name(format!("grid:{m}x{n}")))
}

/// Erdős–Rényi `G(n, p)`; the same seed always yields the same graph.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("gnp needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!(
            "probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("gnp:{n}:{p}:{seed}")))
}
