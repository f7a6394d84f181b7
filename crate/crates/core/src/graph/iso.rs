//! Canonical labeling by partition refinement and individualization,
//! with lexicographic pruning on the adjacency encoding and twin
//! pruning among candidates.

use super::{bits, LabeledGraph};

/// A canonical labeling: `order[pos]` is the vertex placed at `pos`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLabeling {
    pub order: Vec<usize>,
    pub form: Vec<u8>,
}

type Partition = Vec<Vec<usize>>;

/// Refines an ordered partition until every cell is equitable with
/// respect to every other. Split cells are ordered by neighbor count, so
/// the result commutes with isomorphisms.
fn refine(g: &LabeledGraph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let mask: u64 = cells[w].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Partition = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| ((g.row(v) & mask).count_ones(), v)).collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
                cells = next;
            } else {
                w += 1;
            }
        }
        if !changed {
            return cells;
        }
    }
}

fn individualize(cells: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, c) in cells.iter().enumerate() {
        if i == cell {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&u| u != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    out
}

/// Column code of position `k`: adjacency to positions `0..k`, MSB first.
fn column(g: &LabeledGraph, order: &[usize], k: usize) -> u64 {
    let v = order[k];
    let mut code = 0u64;
    for (j, &u) in order[..k].iter().enumerate() {
        if g.has_edge(u, v) {
            code |= 1 << (63 - j);
        }
    }
    code
}

fn are_twins(g: &LabeledGraph, u: usize, v: usize) -> bool {
    let mask = !(1u64 << u | 1u64 << v);
    g.row(u) & mask == g.row(v) & mask
}

struct Canon<'a> {
    g: &'a LabeledGraph,
    best_cols: Vec<u64>,
    best_order: Option<Vec<usize>>,
}

impl Canon<'_> {
    /// Leading singleton cells are fixed positions; compares their
    /// columns against the best leaf so far.
    fn compare_prefix(&mut self, cells: &Partition) -> std::cmp::Ordering {
        let order: Vec<usize> = cells.iter().take_while(|c| c.len() == 1).map(|c| c[0]).collect();
        for k in 0..order.len() {
            let col = column(self.g, &order, k);
            match col.cmp(&self.best_cols[k]) {
                std::cmp::Ordering::Equal => {}
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }

    fn search(&mut self, cells: Partition) {
        if self.best_order.is_some() && self.compare_prefix(&cells) == std::cmp::Ordering::Greater {
            return;
        }
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cols: Vec<u64> = (0..order.len()).map(|k| column(self.g, &order, k)).collect();
            if self.best_order.is_none() || cols < self.best_cols {
                self.best_cols = cols;
                self.best_order = Some(order);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let next = refine(self.g, individualize(&cells, target, v));
            self.search(next);
        }
    }
}

/// Canonical labeling and form of a graph.
pub fn canonical_graph_labeling(g: &LabeledGraph) -> GraphLabeling {
    let n = g.vertex_count();
    if n == 0 {
        return GraphLabeling {
            order: Vec::new(),
            form: vec![0],
        };
    }
    let mut c = Canon {
        g,
        best_cols: vec![u64::MAX; n],
        best_order: None,
    };
    let initial = refine(g, vec![(0..n).collect()]);
    c.search(initial);
    let order = c.best_order.expect("search reaches a leaf");
    let mut form = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (k, &col) in c.best_cols.iter().enumerate() {
        for j in 0..k {
            acc = acc << 1 | (col >> (63 - j) & 1) as u8;
            filled += 1;
            if filled == 8 {
                form.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        form.push(acc << (8 - filled));
    }
    GraphLabeling { order, form }
}

/// Byte string equal for two graphs exactly when they are isomorphic.
pub fn canonical_graph_form(g: &LabeledGraph) -> Vec<u8> {
    canonical_graph_labeling(g).form
}

/// An adjacency-preserving bijection `G → H` (vertex of `G` → vertex of
/// `H`), or `None`.
pub fn graph_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> Option<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let lg = canonical_graph_labeling(g);
    let lh = canonical_graph_labeling(h);
    if lg.form != lh.form {
        return None;
    }
    let mut map = vec![0; g.vertex_count()];
    for (pos, &v) in lg.order.iter().enumerate() {
        map[v] = lh.order[pos];
    }
    Some(map)
}

/// True if `map` is injective and carries every edge of `g` to an edge of
/// `h`.
pub fn is_embedding(g: &LabeledGraph, h: &LabeledGraph, map: &[usize]) -> bool {
    if map.len() != g.vertex_count() || map.iter().any(|&v| v >= h.vertex_count()) {
        return false;
    }
    let mut seen = 0u64;
    for &v in map {
        if seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    g.edges().into_iter().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// An injective map sending edges of `g` to edges of `h` (not necessarily
/// induced), or `None`.
pub fn embeds_as_subgraph(g: &LabeledGraph, h: &LabeledGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n > h.vertex_count() || g.edge_count() > h.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    // high degree first, then neighbors of already ordered vertices
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut placed = Vec::with_capacity(n);
    let mut rest = order;
    while !rest.is_empty() {
        let idx = rest
            .iter()
            .position(|&v| placed.iter().any(|&u| g.has_edge(u, v)))
            .unwrap_or(0);
        placed.push(rest.remove(idx));
    }
    let mut map = vec![usize::MAX; n];
    if embed_rec(g, h, &placed, 0, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

fn embed_rec(g: &LabeledGraph, h: &LabeledGraph, order: &[usize], k: usize, map: &mut [usize], used: u64) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    let all = if h.vertex_count() == 64 {
        u64::MAX
    } else {
        (1u64 << h.vertex_count()) - 1
    };
    let mut candidates = all & !used;
    for u in g.neighbors(v) {
        if map[u] != usize::MAX {
            candidates &= h.row(map[u]);
        }
    }
    for w in bits(candidates) {
        if h.degree(w) < g.degree(v) {
            continue;
        }
        map[v] = w;
        if embed_rec(g, h, order, k + 1, map, used | 1 << w) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}
