#![allow(dead_code)]

//! Structural laws every finite residuated lattice and its comaximal
//! filter graph must satisfy. Shared by the property tests and the
//! acceptance suite.

use reslat::filters::{all_filters, filter_join, idempotent_generator, is_comaximal};
use reslat::graph::{
    clique_number, comaximal_filter_graph, embeds_as_subgraph, generator_map, girth, invariants_with_partition,
    is_embedding, is_proper_coloring, maximal_partition, zero_divisor_graph, Extended,
};
use reslat::ResiduatedLattice;

/// Every violated law, as a short message. Empty means all laws hold.
pub fn violations(a: &ResiduatedLattice) -> Vec<String> {
    let mut bad = Vec::new();
    let n = a.size();
    let fl = all_filters(a);
    let g = comaximal_filter_graph(a, &fl);
    let max = fl.maximal.len();
    let part = maximal_partition(&fl, &g);
    let inv = invariants_with_partition(&g, &part, max);

    // the one-element algebra has no proper filters at all
    if n >= 2 && g.is_null() != fl.is_local() {
        bad.push(format!("null={} but local={}", g.is_null(), fl.is_local()));
    }
    if !inv.connected || inv.diameter > Extended::Finite(3) {
        bad.push(format!("diameter {}", inv.diameter));
    }
    let gi = girth(&g);
    let girth_ok = match max {
        0 | 1 => gi == Extended::Infinite,
        2 => gi == Extended::Finite(4) || gi == Extended::Infinite,
        _ => gi == Extended::Finite(3),
    };
    if !girth_ok {
        bad.push(format!("girth {gi} with |Max| = {max}"));
    }
    if !g.is_null() && (inv.chromatic_number != max || clique_number(&g) != max) {
        bad.push(format!(
            "chi {} omega {} |Max| {max}",
            inv.chromatic_number, inv.clique_number
        ));
    }
    if part.len() != max || !is_proper_coloring(&g, &part) || (!g.is_null() && part.iter().any(|c| c.is_empty())) {
        bad.push("maximal partition is not a proper |Max|-coloring".into());
    }

    let zd = zero_divisor_graph(a);
    match generator_map(a, &g, &zd) {
        Some(m) if is_embedding(&g, &zd, &m) => {}
        _ => bad.push("idempotent generators do not embed the graph in the zero-divisor graph".into()),
    }
    if !g.is_null() && embeds_as_subgraph(&g, &zd).is_none() {
        bad.push("no subgraph embedding into the zero-divisor graph".into());
    }

    for (i, f) in fl.all.iter().enumerate() {
        let e = idempotent_generator(a, f);
        if !a.is_idempotent(e) || reslat::filters::generated_filter(a, reslat::ElemSet::singleton(e)) != *f {
            bad.push(format!("filter F{} has no idempotent generator", i + 1));
        }
        for h in &fl.all[i..] {
            let c = is_comaximal(a, f, h);
            if c.comaximal != !filter_join(a, f, h).is_proper() {
                bad.push("zero-product witness disagrees with the filter join".into());
            }
        }
    }

    // for any family of at most four primes covering F, one of them contains F
    let primes: Vec<_> = fl.prime_filters().copied().collect();
    let p = primes.len();
    for f in &fl.all {
        for mask in 1u32..(1 << p) {
            if mask.count_ones() > 4 {
                continue;
            }
            let family: Vec<_> = (0..p).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
            let union = family
                .iter()
                .fold(reslat::ElemSet::default(), |u, q| u.union(q.members()));
            if f.members().is_subset(union) && !family.iter().any(|q| f.is_subset(q)) {
                bad.push("prime avoidance fails".into());
            }
        }
    }

    if n >= 2 && g.vertex_count() + 2 > fl.all.len() {
        bad.push(format!("|V| = {} but |F| = {}", g.vertex_count(), fl.all.len()));
    }
    if !inv.planar {
        bad.push("graph is not planar".into());
    }

    for x in 0..n {
        for y in 0..n {
            if !a.leq(a.mult(x, a.imp(x, y)), y) || !a.leq(x, a.imp(y, a.mult(x, y))) {
                bad.push(format!("adjunction corollary fails at ({x},{y})"));
            }
        }
    }
    let derived = reslat::algebra::derive_implication(a.lattice(), &a.mult_table());
    if derived.as_ref().ok() != Some(&a.imp_table()) {
        bad.push("stored implication differs from the derived residuum".into());
    }
    let flags = a.classify();
    if flags.godel && !flags.heyting {
        bad.push("Gödel but not Heyting".into());
    }
    if flags.mv && !flags.involutive {
        bad.push("MV but not involutive".into());
    }
    bad
}
