//! Bounded lattices up to isomorphism, by orderly generation.
//!
//! Elements are added one at a time as new maximal elements, so every
//! prefix is a down-closed meet-semilattice listed in linear-extension
//! order. A prefix survives only if its listing is the canonical one, which
//! makes each isomorphism class appear exactly once: the canonical listing
//! of a poset restricts to the canonical listing of each of its prefixes.
//! A lattice of size `n` is such a semilattice of size `n - 1` plus a top.

use crate::canon::{is_canonical_order, min_order_labelings, pack_columns};
use crate::elements::ElemSet;
use crate::lattice::Lattice;

/// A bounded lattice in canonical labeling, with the automorphism group
/// expressed as labelings (`labeling[pos]` = element placed at `pos`).
#[derive(Clone, Debug)]
pub struct LatticeSkeleton {
    pub lattice: Lattice,
    pub key: Vec<u8>,
    pub automorphisms: Vec<Vec<u8>>,
}

impl LatticeSkeleton {
    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        self.lattice.leq_matrix()
    }

    fn from_strict_down(strict: &[ElemSet]) -> Self {
        let lattice = Lattice::from_strict_down(strict).expect("generated posets are lattices");
        let order = min_order_labelings(strict);
        let mut key = vec![strict.len() as u8];
        pack_columns(&order.columns, &mut key);
        LatticeSkeleton {
            lattice,
            key,
            automorphisms: order.labelings,
        }
    }
}

/// Every bounded lattice with `n` elements, one per isomorphism class,
/// sorted by canonical key.
pub fn enumerate_skeletons(n: usize) -> Vec<LatticeSkeleton> {
    assert!((1..=crate::elements::MAX_SIZE).contains(&n), "size out of range");
    if n == 1 {
        return vec![LatticeSkeleton::from_strict_down(&[ElemSet::EMPTY])];
    }
    let mut semilattices = Vec::new();
    let mut prefix = vec![ElemSet::EMPTY];
    extend(&mut prefix, n - 1, &mut semilattices);
    let mut out: Vec<LatticeSkeleton> = semilattices
        .into_iter()
        .map(|mut strict| {
            strict.push(ElemSet::full(n - 1));
            LatticeSkeleton::from_strict_down(&strict)
        })
        .collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

fn extend(prefix: &mut Vec<ElemSet>, target: usize, out: &mut Vec<Vec<ElemSet>>) {
    let k = prefix.len();
    if k == target {
        out.push(prefix.clone());
        return;
    }
    let down: Vec<ElemSet> = (0..k).map(|x| prefix[x].with(x)).collect();
    // nonempty down-closed subsets of the prefix always contain 0, so
    // enumerate subsets of 1..k and add 0
    for bits in 0u32..1 << (k - 1) {
        let d = ElemSet::from_bits(bits << 1 | 1);
        if !d.iter().all(|x| prefix[x].is_subset(d)) {
            continue;
        }
        // the new element needs a meet with every old one
        let has_meets = (0..k).all(|j| {
            let common = d.intersection(down[j]);
            common.iter().any(|m| common.is_subset(down[m]))
        });
        if !has_meets {
            continue;
        }
        prefix.push(d);
        if is_canonical_order(prefix) {
            extend(prefix, target, out);
        }
        prefix.pop();
    }
}
