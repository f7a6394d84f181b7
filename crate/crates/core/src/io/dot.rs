//! Graphviz DOT export.

use std::fmt::Write as _;

use crate::algebra::ResiduatedLattice;
use crate::filters::idempotent_generator;
use crate::graph::{vertex_name, LabeledGraph, VertexLabel};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// Renders `g` as an undirected DOT graph. Vertices appear in the graph's
/// own order as `n0`, `n1`, …; edges list the smaller endpoint first, in
/// sorted order. With an algebra, filter vertices are labeled by their
/// member lists and carry their idempotent generator as an attribute.
pub fn export_dot(g: &LabeledGraph, algebra: Option<&ResiduatedLattice>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let label = g.label(v);
        write!(out, "  n{v} [label={}", quote(&vertex_name(algebra, label))).unwrap();
        if let (VertexLabel::Filter(f), Some(a)) = (label, algebra) {
            let e = idempotent_generator(a, f);
            write!(out, ", generator={}", quote(a.name(e))).unwrap();
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  n{u} -- n{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_graph_has_empty_body() {
        let g = LabeledGraph::from_edges(0, &[]);
        assert_eq!(export_dot(&g, None), "graph G {\n}\n");
    }

    #[test]
    fn edges_are_ordered() {
        let g = LabeledGraph::from_edges(3, &[(2, 0), (1, 0)]);
        let dot = export_dot(&g, None);
        assert_eq!(
            dot,
            "graph G {\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n2 [label=\"2\"];\n  n0 -- n1;\n  n0 -- n2;\n}\n"
        );
    }

    #[test]
    fn labels_are_escaped() {
        assert_eq!(quote("a\"b\\"), "\"a\\\"b\\\\\"");
    }
}
