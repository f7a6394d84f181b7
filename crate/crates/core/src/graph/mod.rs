//! Simple graphs attached to residuated lattices and their exact
//! invariants.

mod coloring;
mod invariants;
mod iso;
mod planar;
mod shapes;

pub use coloring::{chromatic_number, clique_number, is_proper_coloring, maximum_clique};
pub use invariants::{diameter, girth, invariants, invariants_with_partition, Extended, GraphInvariants};
pub use iso::{
    canonical_graph_form, canonical_graph_labeling, embeds_as_subgraph, graph_isomorphic, is_embedding, GraphLabeling,
};
pub use planar::is_planar;
pub use shapes::{shape_name, shape_name_of_form};

use crate::algebra::ResiduatedLattice;
use crate::filters::{idempotent_generator, is_comaximal, Filter, FilterLattice};

/// Maximum number of vertices of a [`LabeledGraph`].
pub const MAX_VERTICES: usize = 64;

/// What a vertex stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    Filter(Filter),
    Element(usize),
    Plain(usize),
}

/// A simple undirected graph with labeled vertices, stored as bit-mask
/// adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<VertexLabel>,
    adj: Vec<u64>,
}

impl LabeledGraph {
    /// Unlabeled graph on `n` vertices with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = LabeledGraph::with_labels((0..n).map(VertexLabel::Plain).collect());
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn with_labels(labels: Vec<VertexLabel>) -> Self {
        assert!(labels.len() <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        let n = labels.len();
        LabeledGraph {
            labels,
            adj: vec![0; n],
        }
    }

    /// Adds the edge `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_null(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|u| bits(self.adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Subgraph induced on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> LabeledGraph {
        let mut g = LabeledGraph::with_labels(keep.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

pub(crate) fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(v)
        }
    })
}

/// Comaximal filter graph: vertices are the proper filters not contained
/// in the radical (in canonical filter order), adjacent when their join is
/// the whole algebra.
pub fn comaximal_filter_graph(a: &ResiduatedLattice, fl: &FilterLattice) -> LabeledGraph {
    let rad = fl.radical();
    let vertices: Vec<Filter> = fl
        .all
        .iter()
        .filter(|f| f.is_proper() && !f.is_subset(rad))
        .copied()
        .collect();
    let mut g = LabeledGraph::with_labels(vertices.iter().copied().map(VertexLabel::Filter).collect());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if is_comaximal(a, &vertices[i], &vertices[j]).comaximal {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Zero-divisor graph: vertices are the elements `x` with `x ⊙ y = 0` for
/// some `y ≠ 0` (so `0` itself is a vertex once `n ≥ 2`), adjacent when
/// distinct with zero product.
pub fn zero_divisor_graph(a: &ResiduatedLattice) -> LabeledGraph {
    let n = a.size();
    let vertices: Vec<usize> = (0..n).filter(|&x| (1..n).any(|y| a.mult(x, y) == 0)).collect();
    let mut g = LabeledGraph::with_labels(vertices.iter().map(|&x| VertexLabel::Element(x)).collect());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if a.mult(vertices[i], vertices[j]) == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The zero-divisor graph restricted to its nonzero vertices.
pub fn nonzero_zero_divisor_graph(a: &ResiduatedLattice) -> LabeledGraph {
    let g = zero_divisor_graph(a);
    let keep: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.label(v) != &VertexLabel::Element(0))
        .collect();
    g.induced(&keep)
}

/// Splits the vertices of a comaximal filter graph by the first maximal
/// filter (in canonical order) containing them. Returns one class per
/// maximal filter, as vertex indices.
pub fn maximal_partition(fl: &FilterLattice, g: &LabeledGraph) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); fl.maximal.len()];
    for v in 0..g.vertex_count() {
        let VertexLabel::Filter(f) = g.label(v) else {
            continue;
        };
        if let Some(i) = fl.maximal_filters().position(|m| f.is_subset(m)) {
            classes[i].push(v);
        }
    }
    classes
}

/// Maps each vertex of the comaximal filter graph to the index, in `zd`,
/// of its idempotent generator. `None` if some generator is not a vertex
/// of `zd`.
pub fn generator_map(a: &ResiduatedLattice, cf: &LabeledGraph, zd: &LabeledGraph) -> Option<Vec<usize>> {
    (0..cf.vertex_count())
        .map(|v| {
            let VertexLabel::Filter(f) = cf.label(v) else {
                return None;
            };
            let e = idempotent_generator(a, f);
            zd.labels().iter().position(|l| l == &VertexLabel::Element(e))
        })
        .collect()
}

/// Human-readable vertex name: filter member list or element name.
pub fn vertex_name(a: Option<&ResiduatedLattice>, label: &VertexLabel) -> String {
    match (label, a) {
        (VertexLabel::Filter(f), Some(a)) => f.display(a.names()),
        (VertexLabel::Filter(f), None) => format!("{:?}", f.members().to_vec()),
        (VertexLabel::Element(x), Some(a)) => a.name(*x).to_string(),
        (VertexLabel::Element(x), None) => x.to_string(),
        (VertexLabel::Plain(v), _) => v.to_string(),
    }
}
