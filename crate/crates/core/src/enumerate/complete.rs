//! Residuated multiplications on a fixed lattice, one per orbit of the
//! lattice automorphism group.
//!
//! On a finite lattice, a commutative monoid operation with unit top is
//! residuated exactly when it preserves binary joins and `x ⊙ 0 = 0`. So
//! only cells `(x, y)` with both arguments join-irreducible are chosen
//! freely; a cell with a join-reducible argument is the join of the cells
//! at its lower covers. Cells are filled in order of the larger index, so
//! the cells they depend on are already set.

use crate::algebra::ResiduatedLattice;
use crate::canon::mult_code;
use crate::elements::ElemSet;
use crate::lattice::Lattice;

use super::skeleton::LatticeSkeleton;

const UNSET: u8 = u8::MAX;

#[derive(Clone, Copy, Debug)]
enum CellKind {
    Free,
    /// Join of `m(x, c)` over the lower covers `c` of `y`.
    FromCoversOfY,
    /// Join of `m(c, y)` over the lower covers `c` of `x`.
    FromCoversOfX,
}

struct Search<'a> {
    n: usize,
    lattice: &'a Lattice,
    cells: Vec<(usize, usize, CellKind)>,
    lower_covers: Vec<ElemSet>,
    /// Pairs `(y, z)` with `y ≤ z` (as indices) and `y ∨ z = s`, per `s`.
    decompositions: Vec<Vec<(usize, usize)>>,
    m: Vec<u8>,
    automorphisms: &'a [Vec<u8>],
    found: Vec<Vec<u8>>,
    code: Vec<u8>,
    other_code: Vec<u8>,
}

impl Search<'_> {
    fn get(&self, x: usize, y: usize) -> u8 {
        self.m[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: u8) {
        let n = self.n;
        self.m[x * n + y] = v;
        self.m[y * n + x] = v;
    }

    fn join(&self, a: u8, b: u8) -> u8 {
        self.lattice.join(a as usize, b as usize) as u8
    }

    fn leq(&self, a: u8, b: u8) -> bool {
        self.lattice.leq(a as usize, b as usize)
    }

    fn run(&mut self, idx: usize) {
        if idx == self.cells.len() {
            self.leaf();
            return;
        }
        let (x, y, kind) = self.cells[idx];
        match kind {
            CellKind::FromCoversOfY => {
                let v = self.lower_covers[y]
                    .iter()
                    .fold(0u8, |acc, c| self.join(acc, self.get(x, c)));
                self.try_value(idx, x, y, v);
            }
            CellKind::FromCoversOfX => {
                let v = self.lower_covers[x]
                    .iter()
                    .fold(0u8, |acc, c| self.join(acc, self.get(c, y)));
                self.try_value(idx, x, y, v);
            }
            CellKind::Free => {
                let mut low = 0u8;
                for c in self.lower_covers[y] {
                    low = self.join(low, self.get(x, c));
                }
                for c in self.lower_covers[x] {
                    low = self.join(low, self.get(c, y));
                }
                let cap = self.lattice.meet(x, y);
                let candidates = self
                    .lattice
                    .down_set(cap)
                    .intersection(self.lattice.up_set(low as usize));
                for v in candidates {
                    self.try_value(idx, x, y, v as u8);
                }
            }
        }
    }

    fn try_value(&mut self, idx: usize, x: usize, y: usize, v: u8) {
        if !self.leq(v, self.lattice.meet(x, y) as u8) {
            return;
        }
        self.set(x, y, v);
        if self.consistent(x, y) {
            self.run(idx + 1);
        }
        self.set(x, y, UNSET);
    }

    /// Checks every monotonicity, join-preservation and associativity
    /// constraint whose cells are all set and which involves `(x, y)`.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let v = self.get(x, y);
        for c in self.lower_covers[y] {
            if !self.leq(self.get(x, c), v) {
                return false;
            }
        }
        for c in self.lower_covers[x] {
            if !self.leq(self.get(c, y), v) {
                return false;
            }
        }
        let rows: &[(usize, usize)] = if x == y { &[(x, y)] } else { &[(x, y), (y, x)] };
        for &(r, s) in rows {
            if !self.row_preserves_joins(r, s) {
                return false;
            }
        }
        self.associative_around(x, y)
    }

    fn row_preserves_joins(&self, r: usize, s: usize) -> bool {
        let n = self.n;
        let rs = self.get(r, s);
        for z in 0..n {
            let rz = self.get(r, z);
            if rz == UNSET {
                continue;
            }
            let w = self.lattice.join(s, z);
            let rw = self.get(r, w);
            if rw != UNSET && rw != self.join(rs, rz) {
                return false;
            }
        }
        for &(a, b) in &self.decompositions[s] {
            let (ra, rb) = (self.get(r, a), self.get(r, b));
            if ra != UNSET && rb != UNSET && rs != self.join(ra, rb) {
                return false;
            }
        }
        true
    }

    /// `(a ⊙ b) ⊙ c = a ⊙ (b ⊙ c)`, or `None` if some product is unset.
    fn assoc(&self, a: usize, b: usize, c: usize) -> Option<bool> {
        let ab = self.get(a, b);
        let bc = self.get(b, c);
        if ab == UNSET || bc == UNSET {
            return None;
        }
        let l = self.get(ab as usize, c);
        let r = self.get(a, bc as usize);
        if l == UNSET || r == UNSET {
            return None;
        }
        Some(l == r)
    }

    fn associative_around(&self, p: usize, q: usize) -> bool {
        let n = self.n;
        let fails = |t: Option<bool>| t == Some(false);
        for c in 0..n {
            // (p, q) as an inner product
            if fails(self.assoc(p, q, c)) || fails(self.assoc(q, p, c)) {
                return false;
            }
            if fails(self.assoc(c, p, q)) || fails(self.assoc(c, q, p)) {
                return false;
            }
        }
        // (p, q) as an outer product: (a ⊙ b) ⊙ c with a ⊙ b ∈ {p, q}
        for a in 0..n {
            for b in a..n {
                let ab = self.get(a, b) as usize;
                if ab == p || ab == q {
                    let c = if ab == p { q } else { p };
                    if fails(self.assoc(a, b, c)) || fails(self.assoc(b, a, c)) {
                        return false;
                    }
                    if fails(self.assoc(c, a, b)) || fails(self.assoc(c, b, a)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Keeps a complete table when it is the least in its automorphism
    /// orbit.
    fn leaf(&mut self) {
        let n = self.n;
        let m = &self.m;
        let identity: Vec<u8> = (0..n as u8).collect();
        mult_code(|x, y| m[x * n + y] as usize, &identity, &mut self.code);
        for lab in self.automorphisms {
            mult_code(|x, y| m[x * n + y] as usize, lab, &mut self.other_code);
            if self.other_code < self.code {
                return;
            }
        }
        self.found.push(self.m.clone());
    }
}

/// A completed algebra with its canonical key.
#[derive(Clone, Debug)]
pub struct Completion {
    pub algebra: ResiduatedLattice,
    pub key: Vec<u8>,
}

/// Every residuated multiplication on the skeleton, up to lattice
/// automorphism, as validated algebras with their canonical keys, in
/// key order.
pub fn completions(skeleton: &LatticeSkeleton) -> Vec<Completion> {
    let lattice = &skeleton.lattice;
    let n = lattice.size();
    let top = n - 1;
    let mut m = vec![UNSET; n * n];
    for x in 0..n {
        m[x] = 0;
        m[x * n] = 0;
        m[top * n + x] = x as u8;
        m[x * n + top] = x as u8;
    }
    let lower_covers: Vec<ElemSet> = (0..n).map(|x| lattice.lower_covers(x)).collect();
    let reducible = |x: usize| lower_covers[x].len() >= 2;
    let mut cells = Vec::new();
    for y in 1..top {
        for x in 1..=y {
            let kind = if reducible(y) {
                CellKind::FromCoversOfY
            } else if reducible(x) {
                CellKind::FromCoversOfX
            } else {
                CellKind::Free
            };
            cells.push((x, y, kind));
        }
    }
    let mut decompositions = vec![Vec::new(); n];
    for a in 0..n {
        for b in a..n {
            decompositions[lattice.join(a, b)].push((a, b));
        }
    }
    let mut search = Search {
        n,
        lattice,
        cells,
        lower_covers,
        decompositions,
        m,
        automorphisms: &skeleton.automorphisms,
        found: Vec::new(),
        code: Vec::new(),
        other_code: Vec::new(),
    };
    search.run(0);

    let mut out: Vec<Completion> = search
        .found
        .into_iter()
        .map(|table| {
            let identity: Vec<u8> = (0..n as u8).collect();
            let mut code = Vec::new();
            mult_code(|x, y| table[x * n + y] as usize, &identity, &mut code);
            let mut key = skeleton.key.clone();
            key.extend_from_slice(&code);
            let algebra = ResiduatedLattice::from_parts(lattice.clone(), table, None)
                .unwrap_or_else(|r| panic!("search produced an invalid table: {r}"));
            Completion { algebra, key }
        })
        .collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

/// Every residuated multiplication on the skeleton, one per orbit of its
/// automorphism group.
pub fn complete_to_residuated(skeleton: &LatticeSkeleton) -> Vec<ResiduatedLattice> {
    completions(skeleton).into_iter().map(|c| c.algebra).collect()
}
