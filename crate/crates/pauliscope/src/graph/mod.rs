//! Exact finite-graph toolkit: construction, invariants, search and
//! isomorphism for graphs up to a few hundred vertices.
//!
//! Every operation either computes an exact answer or refuses; nothing is
//! approximated. Graphs are immutable once built and cheap to share.

mod cliques;
mod coloring;
mod export;
mod independence;
mod invariants;
mod iso;

pub use cliques::maximal_cliques;
pub use coloring::{chromatic_number, CHROMATIC_VERTEX_CAP};
pub use export::{graph_from_json, to_dot, to_json};
pub use independence::{max_independent_sets, min_vertex_cover, IndependenceReport};
pub use invariants::{
    bfs_distances, connected_components, girth, invariants, triangle_count, Girth, GraphInvariants,
};
pub use iso::{is_isomorphic, isomorphism, ISO_VERTEX_CAP};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Undirected loop-free graph with packed-bit adjacency rows and optional
/// vertex labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    v: usize,
    labels: Option<Vec<String>>,
    adj: Vec<BitSet>,
}

/// Subset of the vertices of a parent graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    bits: BitSet,
}

impl VertexSet {
    pub fn from_indices(parent_v: usize, indices: &[usize]) -> Self {
        VertexSet {
            bits: BitSet::from_indices(parent_v, indices),
        }
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.to_vec()
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }
}

impl Graph {
    /// Edgeless graph on `v` vertices.
    pub fn new(v: usize) -> Self {
        Graph {
            v,
            labels: None,
            adj: vec![BitSet::new(v); v],
        }
    }

    pub fn from_edges(v: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(v);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Attaches vertex labels; the list must match the vertex count and be
    /// duplicate-free.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.v, "label list must have length v");
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            assert!(seen.insert(l.clone()), "duplicate vertex label {l:?}");
        }
        self.labels = Some(labels);
        self
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.v && b < self.v && a != b, "bad edge ({a},{b})");
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn e(&self) -> usize {
        self.adj.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == label))
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.e());
        for a in 0..self.v {
            for b in self.adj[a].iter() {
                if b > a {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Subgraph induced by `s`; labels are carried over.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        let verts = s.to_vec();
        if let Some(&bad) = verts.iter().find(|&&x| x >= self.v) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                v: self.v,
            });
        }
        let mut g = Graph::new(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        if self.labels.is_some() {
            g.labels = Some(verts.iter().map(|&a| self.label_of(a)).collect());
        }
        Ok(g)
    }

    pub fn induced(&self, indices: &[usize]) -> Result<Graph> {
        if let Some(&bad) = indices.iter().find(|&&x| x >= self.v) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                v: self.v,
            });
        }
        self.induced_subgraph(&VertexSet::from_indices(self.v, indices))
    }

    /// Complement graph; labels are preserved.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.v);
        for a in 0..self.v {
            for b in (a + 1)..self.v {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Line graph: one vertex per edge, adjacency by shared endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut g = Graph::new(edges.len());
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        g.labels = Some(
            edges
                .iter()
                .map(|&(a, b)| format!("{}-{}", self.label_of(a), self.label_of(b)))
                .collect(),
        );
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut g = Graph::new(m + n);
        for a in 0..m {
            for b in 0..n {
                g.add_edge(a, m + b);
            }
        }
        g
    }

    /// Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    /// `dim`-dimensional hypercube: vertices are bit strings, edges flip
    /// one bit.
    pub fn hypercube(dim: usize) -> Graph {
        let n = 1usize << dim;
        let mut g = Graph::new(n);
        for a in 0..n {
            for bit in 0..dim {
                let b = a ^ (1 << bit);
                if b > a {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Rook's graph on an `n` x `n` board: cells adjacent when they share a
    /// row or column.
    pub fn rook(n: usize) -> Graph {
        let mut g = Graph::new(n * n);
        for a in 0..n * n {
            for b in (a + 1)..n * n {
                if a / n == b / n || a % n == b % n {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Friendship graph: `k` triangles sharing one common vertex.
    pub fn friendship(k: usize) -> Graph {
        let mut g = Graph::new(2 * k + 1);
        for i in 0..k {
            let (a, b) = (1 + 2 * i, 2 + 2 * i);
            g.add_edge(0, a);
            g.add_edge(0, b);
            g.add_edge(a, b);
        }
        g
    }

    /// Adjacency matrix with entries 0/1.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.v)
            .map(|a| (0..self.v).map(|b| self.has_edge(a, b) as i64).collect())
            .collect()
    }

    /// All vertices as a `VertexSet`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet {
            bits: BitSet::full(self.v),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(v={}, e={})", self.v, self.e())
    }
}
