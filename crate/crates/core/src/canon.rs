//! Canonical forms and isomorphism for finite residuated lattices.
//!
//! Labelings are restricted to linear extensions of the order (so bottom
//! stays first and top last). The order is encoded column by column: for
//! position `k`, the bits `[σ(j) < σ(k)]` for `j < k`. The lexicographically
//! least column sequence selects a coset of the lattice automorphism
//! group; the multiplication table is then minimized over that coset.

use crate::algebra::ResiduatedLattice;
use crate::elements::ElemSet;
use crate::lattice::Lattice;

/// Column code for position `pos` whose strict down-set occupies the
/// positions in `below` (bit `j` for position `j`). Position 0 is the most
/// significant bit so numeric order is lexicographic order.
fn column_code(below_positions: u32) -> u32 {
    below_positions.reverse_bits()
}

/// Result of the lexicographic minimization over linear extensions.
#[derive(Clone, Debug)]
pub(crate) struct OrderLabelings {
    /// Minimal column codes, one per position.
    pub columns: Vec<u32>,
    /// Every labeling achieving them; `labeling[pos]` is the element
    /// placed at `pos`.
    pub labelings: Vec<Vec<u8>>,
}

struct Search<'a> {
    strict_down: &'a [ElemSet],
    best: Vec<u32>,
    found: Vec<Vec<u8>>,
    labeling: Vec<u8>,
    position_of: Vec<u8>,
    /// Stop as soon as a labeling beats `best` (canonicity check).
    abort_on_better: bool,
    beaten: bool,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, placed: ElemSet) {
        let n = self.strict_down.len();
        if self.beaten {
            return;
        }
        if pos == n {
            self.found.push(self.labeling.clone());
            return;
        }
        let mut best_col = u32::MAX;
        let mut candidates: Vec<(usize, u32)> = Vec::new();
        for x in ElemSet::full(n).difference(placed) {
            if !self.strict_down[x].is_subset(placed) {
                continue;
            }
            let mut below = 0u32;
            for y in self.strict_down[x] {
                below |= 1 << self.position_of[y];
            }
            let col = column_code(below);
            if col < best_col {
                best_col = col;
                candidates.clear();
            }
            if col == best_col {
                candidates.push((x, col));
            }
        }
        // The current prefix always equals the best prefix found so far.
        if best_col > self.best[pos] {
            return;
        }
        if best_col < self.best[pos] {
            if self.abort_on_better {
                self.beaten = true;
                return;
            }
            self.best[pos] = best_col;
            for b in &mut self.best[pos + 1..] {
                *b = u32::MAX;
            }
            self.found.clear();
        }
        for (x, _) in candidates {
            self.labeling.push(x as u8);
            self.position_of[x] = pos as u8;
            self.run(pos + 1, placed.with(x));
            self.labeling.pop();
            if self.beaten {
                return;
            }
        }
    }
}

/// All linear-extension labelings of a poset (given by strict down-sets)
/// with lexicographically least column encoding.
pub(crate) fn min_order_labelings(strict_down: &[ElemSet]) -> OrderLabelings {
    let n = strict_down.len();
    let mut s = Search {
        strict_down,
        best: vec![u32::MAX; n],
        found: Vec::new(),
        labeling: Vec::with_capacity(n),
        position_of: vec![0; n],
        abort_on_better: false,
        beaten: false,
    };
    s.run(0, ElemSet::EMPTY);
    OrderLabelings {
        columns: s.best,
        labelings: s.found,
    }
}

/// True if the identity labeling of a poset already listed in
/// linear-extension order is its lexicographically least labeling.
pub(crate) fn is_canonical_order(strict_down: &[ElemSet]) -> bool {
    let n = strict_down.len();
    let identity_cols: Vec<u32> = (0..n).map(|k| column_code(strict_down[k].bits())).collect();
    let mut s = Search {
        strict_down,
        best: identity_cols,
        found: Vec::new(),
        labeling: Vec::with_capacity(n),
        position_of: vec![0; n],
        abort_on_better: true,
        beaten: false,
    };
    s.run(0, ElemSet::EMPTY);
    !s.beaten
}

pub(crate) fn strict_down_sets(lattice: &Lattice) -> Vec<ElemSet> {
    (0..lattice.size())
        .map(|x| {
            let mut d = lattice.down_set(x);
            d.remove(x);
            d
        })
        .collect()
}

/// Packs column codes into bytes: column `k` contributes its top `k` bits.
pub(crate) fn pack_columns(columns: &[u32], out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for (k, &col) in columns.iter().enumerate() {
        for j in 0..k {
            let bit = (col >> (31 - j)) & 1;
            acc = acc << 1 | bit as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
}

/// Upper triangle (with diagonal) of the multiplication table relabeled by
/// `labeling` (position → old element).
pub(crate) fn mult_code(mult: impl Fn(usize, usize) -> usize, labeling: &[u8], out: &mut Vec<u8>) {
    let n = labeling.len();
    let mut inv = [0u8; 32];
    for (pos, &x) in labeling.iter().enumerate() {
        inv[x as usize] = pos as u8;
    }
    out.clear();
    for i in 0..n {
        for j in i..n {
            out.push(inv[mult(labeling[i] as usize, labeling[j] as usize)]);
        }
    }
}

/// Canonical form with the labeling that produces it.
#[derive(Clone, Debug)]
pub struct CanonicalAlgebra {
    pub key: Vec<u8>,
    /// `labeling[pos]` is the element of the input placed at `pos`.
    pub labeling: Vec<usize>,
}

fn canonicalize(a: &ResiduatedLattice) -> CanonicalAlgebra {
    let strict = strict_down_sets(a.lattice());
    let order = min_order_labelings(&strict);
    let mut best: Option<(Vec<u8>, usize)> = None;
    let mut code = Vec::new();
    for (i, lab) in order.labelings.iter().enumerate() {
        mult_code(|x, y| a.mult(x, y), lab, &mut code);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code.clone(), i));
        }
    }
    let (mult_bytes, idx) = best.expect("every finite poset has a linear extension");
    let mut key = vec![a.size() as u8];
    pack_columns(&order.columns, &mut key);
    key.extend_from_slice(&mult_bytes);
    CanonicalAlgebra {
        key,
        labeling: order.labelings[idx].iter().map(|&x| x as usize).collect(),
    }
}

/// Isomorphism-invariant byte encoding of an algebra: equal for two
/// algebras exactly when they are isomorphic.
pub fn canonical_form(a: &ResiduatedLattice) -> Vec<u8> {
    canonicalize(a).key
}

pub fn canonical_labeling(a: &ResiduatedLattice) -> CanonicalAlgebra {
    canonicalize(a)
}

/// An isomorphism `A → B` as a vector mapping each element of `A` to its
/// image in `B`, or `None` when the algebras are not isomorphic.
pub fn are_isomorphic(a: &ResiduatedLattice, b: &ResiduatedLattice) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let ca = canonicalize(a);
    let cb = canonicalize(b);
    if ca.key != cb.key {
        return None;
    }
    let mut map = vec![0usize; a.size()];
    for (pos, &x) in ca.labeling.iter().enumerate() {
        map[x] = cb.labeling[pos];
    }
    Some(map)
}

/// Checks that `map` is an isomorphism `A → B` (bijective, preserves `≤`
/// and `⊙`).
pub fn is_isomorphism(a: &ResiduatedLattice, b: &ResiduatedLattice, map: &[usize]) -> bool {
    let n = a.size();
    if b.size() != n || map.len() != n {
        return false;
    }
    let image: ElemSet = map.iter().copied().collect();
    if image.len() != n || map.iter().any(|&y| y >= n) {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| a.leq(x, y) == b.leq(map[x], map[y]) && map[a.mult(x, y)] == b.mult(map[x], map[y])))
}

/// Automorphisms of a lattice as permutations (old → new).
pub fn lattice_automorphisms(lattice: &Lattice) -> Vec<Vec<usize>> {
    let strict = strict_down_sets(lattice);
    let order = min_order_labelings(&strict);
    let base = &order.labelings[0];
    let n = lattice.size();
    // σ_i ∘ σ_0⁻¹ runs over the automorphism group
    order
        .labelings
        .iter()
        .map(|lab| {
            let mut perm = vec![0usize; n];
            for pos in 0..n {
                perm[base[pos] as usize] = lab[pos] as usize;
            }
            perm
        })
        .collect()
}
