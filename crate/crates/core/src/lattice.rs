//! Bounded lattice orders on `{0, …, n-1}` with element 0 as bottom and
//! element `n-1` as top.

use crate::algebra::{Axiom, Violation};
use crate::elements::{ElemSet, MAX_SIZE};

/// A finite bounded lattice given by its order relation, with meet and
/// join tables computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    size: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    meet: Vec<u8>,
    join: Vec<u8>,
}

impl Lattice {
    /// Builds a lattice from an order matrix (`leq[x][y]` iff `x ≤ y`).
    ///
    /// Every failed order or lattice axiom is collected; the lattice
    /// tables are only computed when the relation is a partial order.
    pub fn from_leq(leq: &[Vec<bool>]) -> Result<Self, Vec<Violation>> {
        let n = leq.len();
        let mut violations = Vec::new();
        if n == 0 || n > MAX_SIZE {
            violations.push(Violation::new(Axiom::Shape, vec![n]));
            return Err(violations);
        }
        for (x, row) in leq.iter().enumerate() {
            if row.len() != n {
                violations.push(Violation::new(Axiom::Shape, vec![x]));
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        for x in 0..n {
            if !leq[x][x] {
                violations.push(Violation::new(Axiom::Reflexive, vec![x]));
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x][y] && leq[y][x] {
                    violations.push(Violation::new(Axiom::Antisymmetric, vec![x, y]));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq[x][y] {
                    continue;
                }
                for z in 0..n {
                    if leq[y][z] && !leq[x][z] {
                        violations.push(Violation::new(Axiom::Transitive, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            if !leq[0][x] {
                violations.push(Violation::new(Axiom::Bottom, vec![x]));
            }
            if !leq[x][n - 1] {
                violations.push(Violation::new(Axiom::Top, vec![x]));
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let mut up = vec![ElemSet::EMPTY; n];
        let mut down = vec![ElemSet::EMPTY; n];
        for x in 0..n {
            for y in 0..n {
                if leq[x][y] {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        let (meet, join) = lattice_tables(&up, &down, &mut violations);
        if !violations.is_empty() {
            return Err(violations);
        }
        Ok(Lattice {
            size: n,
            up,
            down,
            meet,
            join,
        })
    }

    /// Builds a lattice from the strict down-sets of a poset already known
    /// to be a bounded lattice in linear-extension order. Returns `None`
    /// if some pair lacks a meet or join.
    pub(crate) fn from_strict_down(strict_down: &[ElemSet]) -> Option<Self> {
        let n = strict_down.len();
        let down: Vec<ElemSet> = (0..n).map(|x| strict_down[x].with(x)).collect();
        let mut up = vec![ElemSet::EMPTY; n];
        for y in 0..n {
            for x in down[y] {
                up[x].insert(y);
            }
        }
        let mut violations = Vec::new();
        let (meet, join) = lattice_tables(&up, &down, &mut violations);
        violations.is_empty().then_some(Lattice {
            size: n,
            up,
            down,
            meet,
            join,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.size - 1
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y] as usize
    }

    /// `{y : x ≤ y}`.
    pub fn up_set(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    /// `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> ElemSet {
        self.down[x]
    }

    /// Join of a set of elements; the empty join is bottom.
    pub fn join_all(&self, set: ElemSet) -> usize {
        set.iter().fold(0, |acc, x| self.join(acc, x))
    }

    /// Meet of a set of elements; the empty meet is top.
    pub fn meet_all(&self, set: ElemSet) -> usize {
        set.iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// Upward closure of a set.
    pub fn up_closure(&self, set: ElemSet) -> ElemSet {
        set.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    /// Elements covered by `x`.
    pub fn lower_covers(&self, x: usize) -> ElemSet {
        let strict = self.down[x].difference(ElemSet::singleton(x));
        strict
            .iter()
            .filter(|&y| {
                // y is a cover if no z lies strictly between y and x
                strict.intersection(self.up[y]) == ElemSet::singleton(y)
            })
            .collect()
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> ElemSet {
        let strict = self.up[x].difference(ElemSet::singleton(x));
        strict
            .iter()
            .filter(|&y| strict.intersection(self.down[y]) == ElemSet::singleton(y))
            .collect()
    }

    /// True when `x` is neither bottom nor the join of two strictly smaller
    /// elements.
    pub fn is_join_irreducible(&self, x: usize) -> bool {
        x != 0 && self.lower_covers(x).len() == 1
    }

    /// Length of a longest chain from bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        let mut h = vec![0usize; self.size];
        // Elements are not necessarily in linear-extension order, so relax
        // over down-set sizes, which do respect the order.
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&y| self.down[y].len());
        for &y in &order {
            h[y] = self.lower_covers(y).iter().map(|c| h[c] + 1).max().unwrap_or(0);
        }
        h[x]
    }

    /// The order matrix.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|x| (0..self.size).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// True if the order is total.
    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.leq(x, y) || self.leq(y, x)))
    }
}

fn lattice_tables(up: &[ElemSet], down: &[ElemSet], violations: &mut Vec<Violation>) -> (Vec<u8>, Vec<u8>) {
    let n = up.len();
    let mut meet = vec![0u8; n * n];
    let mut join = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            let lower = down[x].intersection(down[y]);
            match lower.iter().find(|&m| lower.is_subset(down[m])) {
                Some(m) => meet[x * n + y] = m as u8,
                None => {
                    if x < y {
                        violations.push(Violation::new(Axiom::Meet, vec![x, y]));
                    }
                }
            }
            let upper = up[x].intersection(up[y]);
            match upper.iter().find(|&j| upper.is_subset(up[j])) {
                Some(j) => join[x * n + y] = j as u8,
                None => {
                    if x < y {
                        violations.push(Violation::new(Axiom::Join, vec![x, y]));
                    }
                }
            }
        }
    }
    (meet, join)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect()
    }

    fn diamond() -> Vec<Vec<bool>> {
        // 0 < a, b < 1 with a, b incomparable
        let rel = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 3), (2, 2), (2, 3), (3, 3)];
        let mut m = vec![vec![false; 4]; 4];
        for (x, y) in rel {
            m[x][y] = true;
        }
        m
    }

    #[test]
    fn chain_tables() {
        let l = Lattice::from_leq(&chain(4)).unwrap();
        assert_eq!(l.meet(1, 2), 1);
        assert_eq!(l.join(1, 2), 2);
        assert!(l.is_chain());
        assert_eq!(l.lower_covers(3).to_vec(), vec![2]);
        assert_eq!(l.height(3), 3);
    }

    #[test]
    fn diamond_tables() {
        let l = Lattice::from_leq(&diamond()).unwrap();
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert!(!l.is_join_irreducible(3));
        assert!(l.is_join_irreducible(1));
        assert_eq!(l.lower_covers(3).to_vec(), vec![1, 2]);
        assert_eq!(l.upper_covers(0).to_vec(), vec![1, 2]);
    }

    #[test]
    fn missing_join_is_reported() {
        // 0 < a, b < c, d < 1: a ∨ b has two minimal upper bounds
        let n = 6;
        let mut m = vec![vec![false; n]; n];
        for x in 0..n {
            m[x][x] = true;
            m[0][x] = true;
            m[x][n - 1] = true;
        }
        for (x, y) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
            m[x][y] = true;
        }
        let errs = Lattice::from_leq(&m).unwrap_err();
        assert!(errs.iter().any(|v| v.axiom == Axiom::Join && v.witness == vec![1, 2]));
        assert!(errs.iter().any(|v| v.axiom == Axiom::Meet && v.witness == vec![3, 4]));
    }

    #[test]
    fn non_poset_is_reported() {
        let mut m = chain(3);
        m[2][1] = true;
        let errs = Lattice::from_leq(&m).unwrap_err();
        assert!(errs.iter().any(|v| v.axiom == Axiom::Antisymmetric));
    }
}
