//! Conventional names for small graph shapes.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::{canonical_graph_form, LabeledGraph};

fn complete(n: usize) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    LabeledGraph::from_edges(n, &edges)
}

fn path(n: usize) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    LabeledGraph::from_edges(n, &edges)
}

fn cycle(n: usize) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    LabeledGraph::from_edges(n, &edges)
}

fn bipartite(m: usize, n: usize) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))).collect();
    LabeledGraph::from_edges(m + n, &edges)
}

fn table() -> &'static HashMap<Vec<u8>, String> {
    static NAMES: OnceLock<HashMap<Vec<u8>, String>> = OnceLock::new();
    NAMES.get_or_init(|| {
        let mut named: Vec<(String, LabeledGraph)> = Vec::new();
        // earlier entries win when two names describe the same graph
        for m in 2..=4 {
            for n in m..=4 {
                named.push((format!("K{m},{n}"), bipartite(m, n)));
            }
        }
        for n in 3..=8 {
            named.push((format!("K1,{n}"), bipartite(1, n)));
        }
        for n in 1..=8 {
            named.push((format!("K{n}"), complete(n)));
        }
        for n in 3..=8 {
            named.push((format!("P{n}"), path(n)));
        }
        for n in 5..=8 {
            named.push((format!("C{n}"), cycle(n)));
        }
        let mut map = HashMap::new();
        for (name, g) in named {
            map.entry(canonical_graph_form(&g)).or_insert(name);
        }
        map
    })
}

/// Name of a graph shape given its canonical form: `K2`, `P3`, `K2,2`,
/// `K1,3`, `C5`, … for complete, path, complete bipartite and cycle
/// graphs, otherwise `G(v=…,e=…):<hex form>`.
pub fn shape_name_of_form(form: &[u8]) -> String {
    if let Some(name) = table().get(form) {
        return name.clone();
    }
    let v = form.first().copied().unwrap_or(0) as usize;
    let e: u32 = form.iter().skip(1).map(|b| b.count_ones()).sum();
    format!("G(v={v},e={e}):{}", hex::encode(form))
}

pub fn shape_name(g: &LabeledGraph) -> String {
    shape_name_of_form(&canonical_graph_form(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn common_names() {
        assert_eq!(shape_name(&complete(2)), "K2");
        assert_eq!(shape_name(&path(3)), "P3");
        assert_eq!(shape_name(&cycle(4)), "K2,2");
        assert_eq!(shape_name(&bipartite(1, 4)), "K1,4");
        assert_eq!(shape_name(&complete(3)), "K3");
        let odd = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(
            shape_name(&odd),
            format!("G(v=4,e=4):{}", hex::encode(canonical_graph_form(&odd)))
        );
    }
}
