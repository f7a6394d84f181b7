//! Finite commutative bounded integral residuated lattices.
//!
//! Elements are indexed `0..n`; index 0 is the bottom and index `n-1` the
//! top (and the monoid unit). The residuum is derived once at build time
//! and stored.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elements::ElemSet;
use crate::lattice::Lattice;

/// An axiom that a candidate algebra can violate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Tables are not square or of mismatched dimension.
    Shape,
    /// A table entry does not name an element.
    Range,
    Reflexive,
    Antisymmetric,
    Transitive,
    Bottom,
    Top,
    Meet,
    Join,
    Commutative,
    Associative,
    Unit,
    Integral,
    /// `{a : x ⊙ a ≤ y}` has no greatest element.
    Residual,
    Adjunction,
    /// A supplied implication entry differs from the derived residuum.
    ImplicationMismatch,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Shape => "table shape",
            Axiom::Range => "element range",
            Axiom::Reflexive => "reflexivity",
            Axiom::Antisymmetric => "antisymmetry",
            Axiom::Transitive => "transitivity",
            Axiom::Bottom => "bottom element",
            Axiom::Top => "top element",
            Axiom::Meet => "meet existence",
            Axiom::Join => "join existence",
            Axiom::Commutative => "commutativity",
            Axiom::Associative => "associativity",
            Axiom::Unit => "unit law",
            Axiom::Integral => "integrality",
            Axiom::Residual => "residual existence",
            Axiom::Adjunction => "adjunction",
            Axiom::ImplicationMismatch => "implication table",
        }
    }
}

/// One failed axiom together with the elements witnessing the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: Axiom, witness: Vec<usize>) -> Self {
        Violation { axiom, witness }
    }

    /// Renders the violation with element names, e.g.
    /// `unit law violated at (a,1)`.
    pub fn describe(&self, names: &[String]) -> String {
        let wit: Vec<String> = self
            .witness
            .iter()
            .map(|&x| names.get(x).cloned().unwrap_or_else(|| x.to_string()))
            .collect();
        format!("{} violated at ({})", self.axiom.name(), wit.join(","))
    }
}

/// Every axiom violation found while validating a candidate algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Error)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom, witness: &[usize]) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom && v.witness == witness)
    }

    pub fn describe(&self, names: &[String]) -> Vec<String> {
        self.violations.iter().map(|v| v.describe(names)).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} axiom violation(s)", self.violations.len())?;
        if let Some(v) = self.violations.first() {
            write!(f, ", first: {:?} at {:?}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

/// The residuum of `x` and `y` does not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("no residual for ({x},{y})")]
pub struct ResidualMissing {
    pub x: usize,
    pub y: usize,
}

/// Subvariety membership of a residuated lattice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassFlags {
    pub prelinear: bool,
    pub divisible: bool,
    pub involutive: bool,
    pub idempotent: bool,
    pub mtl: bool,
    pub bl: bool,
    pub godel: bool,
    pub mv: bool,
    pub heyting: bool,
}

impl ClassFlags {
    /// Fills in the derived classes from the four base identities.
    pub fn from_identities(prelinear: bool, divisible: bool, involutive: bool, idempotent: bool) -> Self {
        let bl = prelinear && divisible;
        ClassFlags {
            prelinear,
            divisible,
            involutive,
            idempotent,
            mtl: prelinear,
            bl,
            godel: bl && idempotent,
            mv: bl && involutive,
            heyting: idempotent,
        }
    }
}

/// A validated finite residuated lattice. Immutable after construction.
#[derive(Clone, Debug)]
pub struct ResiduatedLattice {
    lattice: Lattice,
    mult: Vec<u8>,
    imp: Vec<u8>,
    names: Vec<String>,
}

impl PartialEq for ResiduatedLattice {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.mult == other.mult && self.imp == other.imp
    }
}

impl Eq for ResiduatedLattice {}

/// Conventional element names: `0`, `a`, `b`, …, `1`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|x| {
            if x == 0 {
                "0".to_string()
            } else if x == n - 1 {
                "1".to_string()
            } else if x <= 26 {
                ((b'a' + (x - 1) as u8) as char).to_string()
            } else {
                format!("e{x}")
            }
        })
        .collect()
}

impl ResiduatedLattice {
    /// Validates the tables and builds the algebra. The implication table
    /// is derived from `leq` and `mult`; if `imp` is supplied it is
    /// cross-checked against the derived one.
    pub fn build(leq: &[Vec<bool>], mult: &[Vec<usize>], imp: Option<&[Vec<usize>]>) -> Result<Self, ValidationReport> {
        let n = leq.len();
        let mut violations = Vec::new();
        if mult.len() != n || mult.iter().any(|r| r.len() != n) {
            violations.push(Violation::new(Axiom::Shape, vec![mult.len()]));
        }
        if let Some(imp) = imp {
            if imp.len() != n || imp.iter().any(|r| r.len() != n) {
                violations.push(Violation::new(Axiom::Shape, vec![imp.len()]));
            }
        }
        let tables_range = |t: &[Vec<usize>], out: &mut Vec<Violation>| {
            for (x, row) in t.iter().enumerate() {
                for (y, &v) in row.iter().enumerate() {
                    if v >= n {
                        out.push(Violation::new(Axiom::Range, vec![x, y]));
                    }
                }
            }
        };
        tables_range(mult, &mut violations);
        if let Some(imp) = imp {
            tables_range(imp, &mut violations);
        }
        let lattice = match Lattice::from_leq(leq) {
            Ok(l) => Some(l),
            Err(mut errs) => {
                violations.append(&mut errs);
                None
            }
        };
        let (Some(lattice), true) = (lattice, violations.is_empty()) else {
            return Err(ValidationReport { violations });
        };
        let flat: Vec<u8> = mult.iter().flatten().map(|&v| v as u8).collect();
        let imp_flat: Option<Vec<u8>> = imp.map(|t| t.iter().flatten().map(|&v| v as u8).collect());
        Self::from_parts(lattice, flat, imp_flat.as_deref())
    }

    /// Validates a multiplication table over an already valid lattice.
    pub(crate) fn from_parts(
        lattice: Lattice,
        mult: Vec<u8>,
        supplied_imp: Option<&[u8]>,
    ) -> Result<Self, ValidationReport> {
        let n = lattice.size();
        let m = |x: usize, y: usize| mult[x * n + y] as usize;
        let top = n - 1;
        let mut violations = Vec::new();

        for x in 0..n {
            for y in x + 1..n {
                if m(x, y) != m(y, x) {
                    violations.push(Violation::new(Axiom::Commutative, vec![x, y]));
                }
            }
        }
        for x in 0..n {
            if m(x, top) != x {
                violations.push(Violation::new(Axiom::Unit, vec![x, top]));
            }
            if m(top, x) != x && x != top {
                violations.push(Violation::new(Axiom::Unit, vec![top, x]));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        violations.push(Violation::new(Axiom::Associative, vec![x, y, z]));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !lattice.leq(m(x, y), lattice.meet(x, y)) {
                    violations.push(Violation::new(Axiom::Integral, vec![x, y]));
                }
            }
        }

        let imp = derive_all_residuals(&lattice, &mult, &mut violations);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if lattice.leq(m(x, y), z) != lattice.leq(x, imp[y * n + z] as usize) {
                        violations.push(Violation::new(Axiom::Adjunction, vec![x, y, z]));
                    }
                }
            }
        }
        if let Some(sup) = supplied_imp {
            for x in 0..n {
                for y in 0..n {
                    if sup[x * n + y] != imp[x * n + y] {
                        violations.push(Violation::new(Axiom::ImplicationMismatch, vec![x, y]));
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(ValidationReport { violations });
        }
        let names = default_names(n);
        Ok(ResiduatedLattice {
            lattice,
            mult,
            imp,
            names,
        })
    }

    /// Replaces the display names. Panics if the count does not match.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size(), "one name per element");
        self.names = names;
        self
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.lattice.leq(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.lattice.meet(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.lattice.join(x, y)
    }

    pub fn mult(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.size() + y] as usize
    }

    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.size() + y] as usize
    }

    /// `¬x = x → 0`.
    pub fn negation(&self, x: usize) -> usize {
        self.imp(x, 0)
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mult(x, x) == x
    }

    /// All idempotent elements.
    pub fn idempotents(&self) -> ElemSet {
        (0..self.size()).filter(|&x| self.is_idempotent(x)).collect()
    }

    /// Product of all members of a set; the empty product is top.
    pub fn product(&self, set: ElemSet) -> usize {
        set.iter().fold(self.top(), |acc, x| self.mult(acc, x))
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        self.lattice.leq_matrix()
    }

    pub fn mult_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|x| (0..n).map(|y| self.mult(x, y)).collect()).collect()
    }

    pub fn imp_table(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        (0..n).map(|x| (0..n).map(|y| self.imp(x, y)).collect()).collect()
    }

    /// Determines which of the listed identities hold.
    pub fn classify(&self) -> ClassFlags {
        let n = self.size();
        let top = self.top();
        let all_pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
        let prelinear = all_pairs().all(|(x, y)| self.join(self.imp(x, y), self.imp(y, x)) == top);
        let divisible = all_pairs().all(|(x, y)| self.meet(x, y) == self.mult(x, self.imp(x, y)));
        let involutive = (0..n).all(|x| self.negation(self.negation(x)) == x);
        let idempotent = (0..n).all(|x| self.is_idempotent(x));
        ClassFlags::from_identities(prelinear, divisible, involutive, idempotent)
    }

    /// The algebra transported along `perm` (old index → new index).
    /// `perm` must fix bottom and top.
    pub fn relabel(&self, perm: &[usize]) -> ResiduatedLattice {
        let n = self.size();
        assert_eq!(perm.len(), n);
        assert!(
            perm[0] == 0 && perm[n - 1] == n - 1,
            "relabeling must fix bottom and top"
        );
        let mut inv = vec![0usize; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| self.leq(inv[x], inv[y])).collect())
            .collect();
        let mult: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| perm[self.mult(inv[x], inv[y])]).collect())
            .collect();
        let names = (0..n).map(|x| self.names[inv[x]].clone()).collect();
        ResiduatedLattice::build(&leq, &mult, None)
            .expect("relabeling preserves validity")
            .with_names(names)
    }
}

/// Derives `x → y = ⋁{a : x ⊙ a ≤ y}` for every pair, failing on the first
/// pair whose candidate join is not itself in the set.
///
/// `mult` is a row-major `n × n` table over the elements of `lattice`.
pub fn derive_implication(lattice: &Lattice, mult: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, ResidualMissing> {
    let n = lattice.size();
    let mut imp = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            imp[x][y] = residual(lattice, |a| mult[x][a], x, y)?;
        }
    }
    Ok(imp)
}

fn residual(lattice: &Lattice, row: impl Fn(usize) -> usize, x: usize, y: usize) -> Result<usize, ResidualMissing> {
    let below = lattice.down_set(y);
    let set: ElemSet = (0..lattice.size()).filter(|&a| below.contains(row(a))).collect();
    let t = lattice.join_all(set);
    if below.contains(row(t)) {
        Ok(t)
    } else {
        Err(ResidualMissing { x, y })
    }
}

fn derive_all_residuals(lattice: &Lattice, mult: &[u8], violations: &mut Vec<Violation>) -> Vec<u8> {
    let n = lattice.size();
    let mut imp = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            match residual(lattice, |a| mult[x * n + a] as usize, x, y) {
                Ok(t) => imp[x * n + y] = t as u8,
                Err(_) => {
                    violations.push(Violation::new(Axiom::Residual, vec![x, y]));
                    // keep the join so adjunction checks can still run
                    let below = lattice.down_set(y);
                    let set: ElemSet = (0..n).filter(|&a| below.contains(mult[x * n + a] as usize)).collect();
                    imp[x * n + y] = lattice.join_all(set) as u8;
                }
            }
        }
    }
    imp
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_leq(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect()
    }

    fn meet_mult(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect()
    }

    #[test]
    fn two_element_boolean_algebra() {
        let a = ResiduatedLattice::build(&chain_leq(2), &meet_mult(2), None).unwrap();
        assert_eq!(a.imp(0, 0), 1);
        assert_eq!(a.imp(1, 0), 0);
        assert_eq!(a.negation(0), 1);
        assert_eq!(a.negation(1), 0);
        let f = a.classify();
        assert!(f.prelinear && f.divisible && f.involutive && f.idempotent);
        assert!(f.mtl && f.bl && f.godel && f.mv && f.heyting);
    }

    #[test]
    fn trivial_algebra() {
        let a = ResiduatedLattice::build(&[vec![true]], &[vec![0]], None).unwrap();
        assert_eq!(a.size(), 1);
        assert_eq!(a.imp(0, 0), 0);
        assert_eq!(a.names(), &["0".to_string()]);
    }

    #[test]
    fn lukasiewicz_three_chain_is_mv_not_heyting() {
        // 0 < a < 1 with a ⊙ a = 0
        let mult = vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]];
        let a = ResiduatedLattice::build(&chain_leq(3), &mult, None).unwrap();
        assert_eq!(a.negation(1), 1);
        let f = a.classify();
        assert!(f.mv && f.bl && f.involutive);
        assert!(!f.idempotent && !f.heyting && !f.godel);
    }

    #[test]
    fn implication_top_is_identity() {
        let a = ResiduatedLattice::build(&chain_leq(4), &meet_mult(4), None).unwrap();
        for y in 0..4 {
            assert_eq!(a.imp(3, y), y);
        }
    }

    #[test]
    fn supplied_implication_is_cross_checked() {
        let mut imp = vec![vec![1, 1], vec![0, 1]];
        assert!(ResiduatedLattice::build(&chain_leq(2), &meet_mult(2), Some(&imp)).is_ok());
        imp[1][0] = 1;
        let report = ResiduatedLattice::build(&chain_leq(2), &meet_mult(2), Some(&imp)).unwrap_err();
        assert!(report.has(Axiom::ImplicationMismatch, &[1, 0]));
    }

    #[test]
    fn non_unital_and_non_associative_tables_are_reported() {
        let mut mult = meet_mult(3);
        mult[1][2] = 0;
        mult[2][1] = 0;
        let report = ResiduatedLattice::build(&chain_leq(3), &mult, None).unwrap_err();
        assert!(report.has(Axiom::Unit, &[1, 2]));
        assert!(report.has(Axiom::Unit, &[2, 1]));
        assert!(!report.ok());
    }

    #[test]
    fn missing_residual_is_reported() {
        // Diamond 0 < a, b < 1 with a ⊙ b = a, b ⊙ a = a: commutative only if
        // symmetric; use a ⊙ a = 0, b ⊙ b = b, a ⊙ b = 0 but a ⊙ (a ∨ b) = a
        // breaks join preservation and hence residuation of a → 0.
        let mut leq = vec![vec![false; 4]; 4];
        for (x, y) in [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 3), (2, 2), (2, 3), (3, 3)] {
            leq[x][y] = true;
        }
        let mult = vec![vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]];
        let lattice = Lattice::from_leq(&leq).unwrap();
        let err = derive_implication(&lattice, &mult).unwrap_err();
        assert_eq!(err, ResidualMissing { x: 1, y: 0 });
        let report = ResiduatedLattice::build(&leq, &mult, None).unwrap_err();
        assert!(report.violations.iter().any(|v| v.axiom == Axiom::Residual));
    }

    #[test]
    fn default_names_follow_convention() {
        assert_eq!(default_names(4), vec!["0", "a", "b", "1"]);
    }
}
