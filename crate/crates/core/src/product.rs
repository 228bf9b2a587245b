//! Cartesian products and projections.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest product built unless a caller raises the limit.
pub const DEFAULT_MAX_VERTICES: usize = 4096;

/// `G □ H` with the fixed index map `(u, v) -> u * n_h + v`.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    n_g: usize,
    n_h: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n_g(&self) -> usize {
        self.n_g
    }

    pub fn n_h(&self) -> usize {
        self.n_h
    }

    pub fn vertex_count(&self) -> usize {
        self.n_g * self.n_h
    }

    #[inline]
    pub fn index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n_g && v < self.n_h);
        u * self.n_h + v
    }

    #[inline]
    pub fn coords(&self, id: usize) -> (usize, usize) {
        (id / self.n_h, id % self.n_h)
    }

    /// Product vertex set from a list of `(u, v)` pairs.
    pub fn set_from_pairs<I>(&self, pairs: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = VertexSet::empty(self.vertex_count());
        for (u, v) in pairs {
            if u >= self.n_g {
                return Err(Error::BadVertex { v: u, n: self.n_g });
            }
            if v >= self.n_h {
                return Err(Error::BadVertex { v, n: self.n_h });
            }
            s.insert(self.index(u, v));
        }
        Ok(s)
    }

    pub fn pairs(&self, s: &VertexSet) -> Vec<(usize, usize)> {
        s.iter().map(|id| self.coords(id)).collect()
    }

    /// `{u : (u, v) in s for some v}`.
    pub fn project_onto_g(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n_g);
        for id in s {
            out.insert(id / self.n_h);
        }
        out
    }

    /// `{v : (u, v) in s for some u}`.
    pub fn project_onto_h(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n_h);
        for id in s {
            out.insert(id % self.n_h);
        }
        out
    }

    /// `a × b` as a product vertex set.
    pub fn rectangle(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.vertex_count());
        for u in a {
            for v in b {
                out.insert(self.index(u, v));
            }
        }
        out
    }

    /// The layer `V(G) × {v}`.
    pub fn g_layer(&self, v: usize) -> VertexSet {
        self.rectangle(
            &VertexSet::full(self.n_g),
            &VertexSet::singleton(self.n_h, v),
        )
    }

    /// The column `{u} × V(H)`.
    pub fn h_column(&self, u: usize) -> VertexSet {
        self.rectangle(
            &VertexSet::singleton(self.n_g, u),
            &VertexSet::full(self.n_h),
        )
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    cartesian_product_with_limit(g, h, DEFAULT_MAX_VERTICES)
}

pub fn cartesian_product_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<ProductGraph> {
    let (n_g, n_h) = (g.vertex_count(), h.vertex_count());
    let vertices = n_g.checked_mul(n_h).ok_or(Error::SizeOverflow {
        vertices: usize::MAX,
        limit,
    })?;
    if vertices > limit {
        return Err(Error::SizeOverflow { vertices, limit });
    }
    let id = |u: usize, v: usize| u * n_h + v;
    let mut edges = Vec::with_capacity(n_g * h.edge_count() + n_h * g.edge_count());
    for u in 0..n_g {
        for (a, b) in h.edges() {
            edges.push((id(u, a), id(u, b)));
        }
    }
    for v in 0..n_h {
        for (a, b) in g.edges() {
            edges.push((id(a, v), id(b, v)));
        }
    }
    let mut graph = Graph::new(vertices, &edges)?;
    if let (Some(a), Some(b)) = (g.name(), h.name()) {
        graph = graph.with_name(format!("{a} x {b}"));
    }
    Ok(ProductGraph { graph, n_g, n_h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, grid, path};

    #[test]
    fn identity_factor() {
        let h = cycle(5).unwrap();
        let p = cartesian_product(&path(1).unwrap(), &h).unwrap();
        assert_eq!(p.graph(), &h);
        let p = cartesian_product(&h, &path(1).unwrap()).unwrap();
        assert_eq!(p.graph(), &h);
    }

    #[test]
    fn unit_square_is_c4() {
        let p = cartesian_product(&path(2).unwrap(), &path(2).unwrap()).unwrap();
        // ids 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1); C4 as 0-1-3-2-0
        let c4 = cycle(4).unwrap().relabel(&[0, 1, 3, 2]).unwrap();
        assert_eq!(p.graph(), &c4);
    }

    #[test]
    fn p4_squared() {
        let p = cartesian_product(&path(4).unwrap(), &path(4).unwrap()).unwrap();
        assert_eq!(p.vertex_count(), 16);
        assert_eq!(p.graph().edge_count(), 24);
        assert_eq!(p.graph(), &grid(4, 4).unwrap());
    }

    #[test]
    fn size_limit() {
        let k = complete(10).unwrap();
        assert_eq!(
            cartesian_product_with_limit(&k, &k, 99).unwrap_err(),
            Error::SizeOverflow {
                vertices: 100,
                limit: 99
            }
        );
    }

    #[test]
    fn projections() {
        let p = cartesian_product(&path(3).unwrap(), &path(4).unwrap()).unwrap();
        let s = p.set_from_pairs([(0, 0), (0, 3)]).unwrap();
        assert_eq!(p.project_onto_g(&s).to_vec(), vec![0]);
        assert_eq!(p.project_onto_h(&s).to_vec(), vec![0, 3]);
        let e = VertexSet::empty(12);
        assert!(p.project_onto_g(&e).is_empty());
        assert!(p.project_onto_h(&e).is_empty());
        let all = VertexSet::full(12);
        assert!(p.project_onto_g(&all).is_full());
        assert!(p.project_onto_h(&all).is_full());
        assert!(p.set_from_pairs([(3, 0)]).is_err());
    }

    #[test]
    fn layers_and_columns() {
        let p = cartesian_product(&path(3).unwrap(), &path(2).unwrap()).unwrap();
        assert_eq!(p.g_layer(1).to_vec(), vec![1, 3, 5]);
        assert_eq!(p.h_column(2).to_vec(), vec![4, 5]);
        assert_eq!(p.coords(5), (2, 1));
    }
}
