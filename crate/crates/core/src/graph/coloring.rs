use super::{bits, LabeledGraph};

/// Vertices of a largest clique, found with pivoted Bron–Kerbosch over
/// bit-set rows.
pub fn maximum_clique(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0u64;
    bron_kerbosch(g, 0, all, 0, &mut best);
    bits(best).collect()
}

fn bron_kerbosch(g: &LabeledGraph, r: u64, mut p: u64, mut x: u64, best: &mut u64) {
    if p == 0 && x == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (g.row(u) & p).count_ones())
        .expect("p ∪ x is nonempty");
    for v in bits(p & !g.row(pivot)) {
        let nv = g.row(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub fn clique_number(g: &LabeledGraph) -> usize {
    maximum_clique(g).len()
}

/// True if `classes` partition the vertices into independent sets.
pub fn is_proper_coloring(g: &LabeledGraph, classes: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for class in classes {
        for &v in class {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        for (i, &u) in class.iter().enumerate() {
            if class[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return false;
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Exact chromatic number with an optimal coloring (as color classes).
///
/// `seed` is an optional proper coloring used as the initial upper
/// bound; the clique number is the lower bound, and each intermediate
/// value is decided by backtracking in saturation order.
pub fn chromatic_number(g: &LabeledGraph, seed: Option<&[Vec<usize>]>) -> (usize, Vec<Vec<usize>>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut best = greedy_coloring(g);
    if let Some(seed) = seed {
        let seed: Vec<Vec<usize>> = seed.iter().filter(|c| !c.is_empty()).cloned().collect();
        if is_proper_coloring(g, &seed) && seed.len() < best.len() {
            best = seed;
        }
    }
    let lower = clique_number(g).max(1);
    let mut k = best.len();
    while k > lower {
        match k_coloring(g, k - 1) {
            Some(c) => {
                best = c;
                k -= 1;
            }
            None => break,
        }
    }
    (best.len(), best)
}

fn classes_from(colors: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        classes[c].push(v);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

fn greedy_coloring(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for v in order {
        let taken: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    classes_from(&colors, used)
}

fn k_coloring(g: &LabeledGraph, k: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    if color_rec(g, k, &mut colors, 0, 0) {
        Some(classes_from(&colors, k))
    } else {
        None
    }
}

fn color_rec(g: &LabeledGraph, k: usize, colors: &mut [usize], colored: usize, max_used: usize) -> bool {
    let n = g.vertex_count();
    if colored == n {
        return true;
    }
    // most saturated uncolored vertex, ties by degree
    let v = (0..n)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let sat: u64 = g
                .neighbors(v)
                .filter(|&u| colors[u] != usize::MAX)
                .fold(0, |acc, u| acc | 1 << colors[u]);
            (sat.count_ones(), g.degree(v))
        })
        .unwrap();
    let taken: u64 = g
        .neighbors(v)
        .filter(|&u| colors[u] != usize::MAX)
        .fold(0, |acc, u| acc | 1 << colors[u]);
    // colors beyond the first unused one are interchangeable
    for c in 0..k.min(max_used + 1) {
        if taken >> c & 1 == 1 {
            continue;
        }
        colors[v] = c;
        if color_rec(g, k, colors, colored + 1, max_used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
