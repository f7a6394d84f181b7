use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coloring::{chromatic_number, clique_number};
use super::planar::is_planar;
use super::LabeledGraph;

/// A nonnegative integer or infinity (used for diameter and girth).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u64(*v as u64),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Extended::Finite(v as usize)),
            Raw::Str(s) if s == "inf" => Ok(Extended::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "expected a number or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// Exact invariants of a finite simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub diameter: Extended,
    pub girth: Extended,
    pub clique_number: usize,
    pub chromatic_number: usize,
    /// Number of maximal filters, when the graph is a comaximal filter
    /// graph.
    pub max_filter_count: Option<usize>,
    pub planar: bool,
    /// A proper coloring: the maximal-filter partition for comaximal
    /// filter graphs, an optimal coloring otherwise.
    pub partite_classes: Vec<Vec<usize>>,
}

fn bfs(g: &LabeledGraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        let d = dist[u].unwrap();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

/// Largest distance between two vertices; infinite if disconnected. The
/// graph with no vertices has diameter 0.
pub fn diameter(g: &LabeledGraph) -> Extended {
    let mut diam = 0;
    for s in 0..g.vertex_count() {
        for d in bfs(g, s) {
            match d {
                Some(d) => diam = diam.max(d),
                None => return Extended::Infinite,
            }
        }
    }
    Extended::Finite(diam)
}

/// Length of a shortest cycle; infinite for a forest.
pub fn girth(g: &LabeledGraph) -> Extended {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extended::Infinite
    } else {
        Extended::Finite(best)
    }
}

/// Invariants of an arbitrary graph; the partite classes are an optimal
/// coloring.
pub fn invariants(g: &LabeledGraph) -> GraphInvariants {
    compute(g, None, None)
}

/// Invariants of a comaximal filter graph, seeding the coloring search
/// with the maximal-filter partition.
pub fn invariants_with_partition(
    g: &LabeledGraph,
    partition: &[Vec<usize>],
    max_filter_count: usize,
) -> GraphInvariants {
    compute(g, Some(partition), Some(max_filter_count))
}

fn compute(g: &LabeledGraph, partition: Option<&[Vec<usize>]>, max_filters: Option<usize>) -> GraphInvariants {
    let diameter = diameter(g);
    let (chi, coloring) = chromatic_number(g, partition);
    let partite_classes = match partition {
        Some(p) => p.to_vec(),
        None => coloring,
    };
    GraphInvariants {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        connected: diameter != Extended::Infinite,
        diameter,
        girth: girth(g),
        clique_number: clique_number(g),
        chromatic_number: chi,
        max_filter_count: max_filters,
        planar: is_planar(g),
        partite_classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle() {
        let p4 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(diameter(&p4), Extended::Finite(3));
        assert_eq!(girth(&p4), Extended::Infinite);
        let c4 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(diameter(&c4), Extended::Finite(2));
        assert_eq!(girth(&c4), Extended::Finite(4));
    }

    #[test]
    fn odd_girth() {
        let c5 = LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(girth(&c5), Extended::Finite(5));
        let tri_tail = LabeledGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        assert_eq!(girth(&tri_tail), Extended::Finite(3));
    }

    #[test]
    fn disconnected_graph() {
        let g = LabeledGraph::from_edges(3, &[(0, 1)]);
        let inv = invariants(&g);
        assert!(!inv.connected);
        assert_eq!(inv.diameter, Extended::Infinite);
    }

    #[test]
    fn null_graph() {
        let g = LabeledGraph::from_edges(0, &[]);
        let inv = invariants(&g);
        assert!(inv.connected);
        assert_eq!(inv.diameter, Extended::Finite(0));
        assert_eq!(inv.girth, Extended::Infinite);
        assert_eq!(inv.chromatic_number, 0);
        assert!(inv.planar);
    }

    #[test]
    fn infinity_serializes_as_string() {
        assert_eq!(serde_json::to_string(&Extended::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Extended::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::from_str::<Extended>("\"inf\"").unwrap(), Extended::Infinite);
        assert_eq!(serde_json::from_str::<Extended>("2").unwrap(), Extended::Finite(2));
    }
}
