use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::select;
use reslat::canon::{are_isomorphic, canonical_form, is_isomorphism};
use reslat::enumerate::{complete_to_residuated, enumerate_skeletons};
use reslat::graph::{canonical_graph_form, graph_isomorphic, LabeledGraph};
use reslat::io::{parse_algebra, serialize_algebra};
use reslat::ResiduatedLattice;

fn pool() -> &'static [ResiduatedLattice] {
    static POOL: OnceLock<Vec<ResiduatedLattice>> = OnceLock::new();
    POOL.get_or_init(|| {
        (1..=6)
            .flat_map(|n| {
                enumerate_skeletons(n)
                    .into_iter()
                    .flat_map(|s| complete_to_residuated(&s))
            })
            .collect()
    })
}

/// A permutation of `0..n` fixing both ends.
fn inner_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    let middle: Vec<usize> = (1..n.saturating_sub(1)).collect();
    Just(middle).prop_shuffle().prop_map(move |m| {
        if n == 1 {
            return vec![0];
        }
        let mut p = vec![0];
        p.extend(m);
        p.push(n - 1);
        p
    })
}

fn algebra_and_perm() -> impl Strategy<Value = (ResiduatedLattice, Vec<usize>)> {
    select(pool().to_vec()).prop_flat_map(|a| {
        let n = a.size();
        (Just(a), inner_perm(n))
    })
}

fn graph_and_perm() -> impl Strategy<Value = (LabeledGraph, Vec<usize>)> {
    (1usize..12).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                (LabeledGraph::from_edges(n, &edges), perm)
            })
    })
}

fn small_graph(n: usize) -> impl Strategy<Value = LabeledGraph> {
    proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
        LabeledGraph::from_edges(n, &edges)
    })
}

fn brute_isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    fn extend(g: &LabeledGraph, h: &LabeledGraph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == g.vertex_count() {
            return true;
        }
        for w in 0..h.vertex_count() {
            if map.contains(&w) || (0..k).any(|u| g.has_edge(u, k) != h.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            if extend(g, h, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    g.vertex_count() == h.vertex_count() && extend(g, h, &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relabeling_keeps_the_canonical_form((a, perm) in algebra_and_perm()) {
        let b = a.relabel(&perm);
        prop_assert_eq!(canonical_form(&a), canonical_form(&b));
        let map = are_isomorphic(&a, &b).unwrap();
        prop_assert!(is_isomorphism(&a, &b, &map));
    }

    #[test]
    fn graph_form_is_a_relabeling_invariant((g, perm) in graph_and_perm()) {
        let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = LabeledGraph::from_edges(g.vertex_count(), &edges);
        prop_assert_eq!(canonical_graph_form(&g), canonical_graph_form(&h));
        let map = graph_isomorphic(&g, &h).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn parse_inverts_serialize((a, perm) in algebra_and_perm()) {
        let a = a.relabel(&perm);
        let text = serialize_algebra(&a);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.names(), a.names());
        prop_assert_eq!(serialize_algebra(&back), text);
    }

    #[test]
    fn equal_graph_forms_mean_isomorphic((g, h) in (2usize..7).prop_flat_map(|n| (small_graph(n), small_graph(n)))) {
        let same = canonical_graph_form(&g) == canonical_graph_form(&h);
        prop_assert_eq!(same, brute_isomorphic(&g, &h));
    }
}
