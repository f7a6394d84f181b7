//! Exact planarity testing.
//!
//! The graph is split into biconnected blocks; each block that survives the
//! edge-count screens is embedded face by face with the
//! Demoucron–Malgrange–Pertuiset fragment method.

use super::{bits, LabeledGraph};

pub fn is_planar(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    let e = g.edge_count();
    if n <= 4 || e <= 8 {
        return true;
    }
    if e > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|block| block_is_planar(&block))
}

/// Edge sets of the biconnected blocks, as adjacency rows over the
/// original vertex indices.
fn blocks(g: &LabeledGraph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let mut st = BlockState {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == usize::MAX {
            st.dfs(v, usize::MAX);
        }
    }
    st.out
}

struct BlockState<'a> {
    g: &'a LabeledGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<Vec<u64>>,
}

impl BlockState<'_> {
    fn dfs(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for v in self.g.neighbors(u) {
            if self.disc[v] == usize::MAX {
                self.stack.push((u, v));
                self.dfs(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut rows = vec![0u64; self.g.vertex_count()];
                    while let Some((a, b)) = self.stack.pop() {
                        rows[a] |= 1 << b;
                        rows[b] |= 1 << a;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.out.push(rows);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

fn block_is_planar(adj: &[u64]) -> bool {
    let verts: u64 = adj
        .iter()
        .enumerate()
        .filter(|(_, r)| **r != 0)
        .fold(0, |m, (v, _)| m | 1 << v);
    let nv = verts.count_ones() as usize;
    let ne = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    if nv <= 4 || ne <= 8 {
        return true;
    }
    if ne > 3 * nv - 6 {
        return false;
    }

    let n = adj.len();
    let cycle = find_cycle(adj, verts.trailing_zeros() as usize);
    let mut in_h = 0u64;
    let mut h_adj = vec![0u64; n];
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        in_h |= 1 << v;
        h_adj[v] |= 1 << w;
        h_adj[w] |= 1 << v;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(adj, &h_adj, in_h, verts);
        if fragments.is_empty() {
            return true;
        }
        let mut chosen: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fmask = f.iter().fold(0u64, |m, &v| m | 1 << v);
                    frag.attachments & !fmask == 0
                })
                .map(|(k, _)| k)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment");
        let path = fragment_path(adj, in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_adj[w[0]] |= 1 << w[1];
            h_adj[w[1]] |= 1 << w[0];
        }
        for &v in &path {
            in_h |= 1 << v;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
}

/// A simple cycle through the DFS tree, found from the first back edge.
fn find_cycle(adj: &[u64], start: usize) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![start];
    depth[start] = 0;
    while let Some(u) = stack.pop() {
        for v in bits(adj[u]) {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    // any non-tree edge closes a cycle through the tree paths to the LCA
    for u in 0..n {
        for v in bits(adj[u]) {
            if v > u && parent[u] != v && parent[v] != u {
                let (mut a, mut b) = (u, v);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return left;
            }
        }
    }
    unreachable!("a block with more than one edge contains a cycle")
}

struct Fragment {
    /// Vertices outside the embedded subgraph (empty for a single chord).
    inner: u64,
    attachments: u64,
    /// For a chord, its two endpoints.
    chord: Option<(usize, usize)>,
}

fn fragments(adj: &[u64], h_adj: &[u64], in_h: u64, verts: u64) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in bits(in_h) {
        for v in bits(adj[u] & in_h & !h_adj[u]) {
            if v > u {
                out.push(Fragment {
                    inner: 0,
                    attachments: 1 << u | 1 << v,
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut unseen = verts & !in_h;
    while unseen != 0 {
        let s = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= adj[v] & !in_h & !comp;
            }
            comp |= next;
            frontier = next;
        }
        unseen &= !comp;
        let attachments = bits(comp).fold(0u64, |m, v| m | (adj[v] & in_h));
        out.push(Fragment {
            inner: comp,
            attachments,
            chord: None,
        });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(adj: &[u64], in_h: u64, frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments.trailing_zeros() as usize;
    let targets = frag.attachments & !(1u64 << a);
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for v in bits(adj[a] & frag.inner) {
        parent[v] = a;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if let Some(b) = bits(adj[u] & targets & in_h).next() {
            let mut path = vec![b, u];
            let mut x = u;
            while parent[x] != a {
                x = parent[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for v in bits(adj[u] & frag.inner) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// Splits a face cycle along a path joining two of its vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let m = face.len();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let interior = &path[1..path.len() - 1];

    // a → … → b along the face, then back through the path interior
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % m;
    }
    f1.extend(interior.iter().rev());

    // b → … → a along the face, then forward through the path interior
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % m;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> LabeledGraph {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        LabeledGraph::from_edges(n, &edges)
    }

    fn k33() -> LabeledGraph {
        let edges: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        LabeledGraph::from_edges(6, &edges)
    }

    #[test]
    fn kuratowski_graphs() {
        assert!(is_planar(&complete(4)));
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&k33()));
    }

    #[test]
    fn petersen_is_not_planar() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ];
        assert!(!is_planar(&LabeledGraph::from_edges(10, &edges)));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // K3,3 with every edge subdivided once: sparse, passes Euler's bound
        let mut edges = Vec::new();
        let mut next = 6;
        for i in 0..3 {
            for j in 3..6 {
                edges.push((i, next));
                edges.push((next, j));
                next += 1;
            }
        }
        assert!(!is_planar(&LabeledGraph::from_edges(next, &edges)));
    }

    #[test]
    fn cube_and_octahedron_are_planar() {
        let cube = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ];
        assert!(is_planar(&LabeledGraph::from_edges(8, &cube)));
        // K6 minus a perfect matching
        let oct: Vec<(usize, usize)> = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .filter(|&(i, j)| j != i + 3)
            .collect();
        assert!(is_planar(&LabeledGraph::from_edges(6, &oct)));
    }

    #[test]
    fn two_k5_sharing_a_vertex() {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
                edges.push((i + 4, j + 4));
            }
        }
        assert!(!is_planar(&LabeledGraph::from_edges(9, &edges)));
    }

    #[test]
    fn wheel_is_planar() {
        let mut edges: Vec<(usize, usize)> = (1..9).map(|i| (0, i)).collect();
        edges.extend((1..9).map(|i| (i, i % 8 + 1)));
        assert!(is_planar(&LabeledGraph::from_edges(9, &edges)));
    }
}
