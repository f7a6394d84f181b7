//! Filters of a finite residuated lattice and the lattice they form.

use std::cmp::Ordering;

use crate::algebra::ResiduatedLattice;
use crate::elements::ElemSet;

/// An upward-closed, `⊙`-closed set of elements containing top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Filter {
    members: ElemSet,
    algebra_size: usize,
}

impl Filter {
    pub(crate) fn from_members(members: ElemSet, algebra_size: usize) -> Self {
        Filter { members, algebra_size }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn algebra_size(&self) -> usize {
        self.algebra_size
    }

    /// A filter is proper when it is not the whole algebra.
    pub fn is_proper(&self) -> bool {
        self.members != ElemSet::full(self.algebra_size)
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.is_subset(other.members)
    }

    /// Member names in index order, formatted as `{a,c,e,1}`.
    pub fn display(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.members.iter().map(|x| names[x].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Canonical filter order: cardinality first, then the sorted member lists
/// compared lexicographically.
pub fn filter_order(a: &Filter, b: &Filter) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.members.iter().cmp(b.members.iter()))
}

/// Checks the defining conditions: nonempty, `⊙`-closed and upward closed.
pub fn is_filter(a: &ResiduatedLattice, set: ElemSet) -> bool {
    if set.is_empty() {
        return false;
    }
    set.iter()
        .all(|x| a.lattice().up_set(x).is_subset(set) && set.iter().all(|y| set.contains(a.mult(x, y))))
}

/// Checks the deductive-system characterization: nonempty, contains top,
/// and `x ∈ S`, `x → y ∈ S` imply `y ∈ S`.
pub fn is_deductive_system(a: &ResiduatedLattice, set: ElemSet) -> bool {
    if set.is_empty() || !set.contains(a.top()) {
        return false;
    }
    let n = a.size();
    set.iter()
        .all(|x| (0..n).all(|y| !set.contains(a.imp(x, y)) || set.contains(y)))
}

/// The smallest filter containing `generators`: the upward closure of
/// all finite products of generators. An empty generator set yields
/// `{1}`.
pub fn generated_filter(a: &ResiduatedLattice, generators: ElemSet) -> Filter {
    let mut products = generators.with(a.top());
    loop {
        let mut next = products;
        for x in products {
            for g in generators {
                next.insert(a.mult(x, g));
            }
        }
        if next == products {
            break;
        }
        products = next;
    }
    Filter::from_members(a.lattice().up_closure(products), a.size())
}

/// `F ⊻ G = {z : z ≥ x ⊙ y, x ∈ F, y ∈ G}`.
pub fn filter_join(a: &ResiduatedLattice, f: &Filter, g: &Filter) -> Filter {
    let mut products = ElemSet::EMPTY;
    for x in f.members {
        for y in g.members {
            products.insert(a.mult(x, y));
        }
    }
    Filter::from_members(a.lattice().up_closure(products), a.size())
}

fn filter_meet(f: &Filter, g: &Filter) -> Filter {
    Filter::from_members(f.members.intersection(g.members), f.algebra_size)
}

/// An idempotent `e` with `⟨e⟩ = F`: the product of all members of `F`.
pub fn idempotent_generator(a: &ResiduatedLattice, f: &Filter) -> usize {
    let e = a.product(f.members);
    debug_assert!(a.is_idempotent(e));
    e
}

/// Result of a comaximality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comaximality {
    pub comaximal: bool,
    /// `(x, y)` with `x ∈ F`, `y ∈ G` and `x ⊙ y = 0`, when one exists.
    pub witness: Option<(usize, usize)>,
}

/// Smallest-index pair `(x, y) ∈ F × G` with `x ⊙ y = 0`.
pub fn zero_product_witness(a: &ResiduatedLattice, f: &Filter, g: &Filter) -> Option<(usize, usize)> {
    f.members
        .iter()
        .flat_map(|x| g.members.iter().map(move |y| (x, y)))
        .find(|&(x, y)| a.mult(x, y) == 0)
}

/// Decides `F ⊻ G = A`. The witness route is authoritative; debug builds
/// also compute the join and assert that both routes agree.
pub fn is_comaximal(a: &ResiduatedLattice, f: &Filter, g: &Filter) -> Comaximality {
    let witness = zero_product_witness(a, f, g);
    debug_assert_eq!(
        witness.is_some(),
        !filter_join(a, f, g).is_proper(),
        "zero-product witness and filter join disagree"
    );
    Comaximality {
        comaximal: witness.is_some(),
        witness,
    }
}

/// Every filter of an algebra with its maximal filters, radical and prime
/// filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterLattice {
    /// All filters in canonical order.
    pub all: Vec<Filter>,
    /// Indices into `all` of the maximal filters, ascending.
    pub maximal: Vec<usize>,
    /// Index into `all` of the radical.
    pub radical: usize,
    /// Indices into `all` of the prime filters, ascending.
    pub primes: Vec<usize>,
}

impl FilterLattice {
    pub fn maximal_filters(&self) -> impl Iterator<Item = &Filter> {
        self.maximal.iter().map(|&i| &self.all[i])
    }

    pub fn radical(&self) -> &Filter {
        &self.all[self.radical]
    }

    pub fn prime_filters(&self) -> impl Iterator<Item = &Filter> {
        self.primes.iter().map(|&i| &self.all[i])
    }

    pub fn is_local(&self) -> bool {
        self.maximal.len() == 1
    }

    pub fn index_of(&self, f: &Filter) -> Option<usize> {
        self.all.iter().position(|g| g == f)
    }
}

/// Enumerates all filters: the principal filters of idempotents, closed
/// under intersection and join until nothing new appears.
pub fn all_filters(a: &ResiduatedLattice) -> FilterLattice {
    let mut all: Vec<Filter> = Vec::new();
    let push = |all: &mut Vec<Filter>, f: Filter| {
        if !all.contains(&f) {
            all.push(f);
        }
    };
    for e in a.idempotents() {
        push(&mut all, generated_filter(a, ElemSet::singleton(e)));
    }
    loop {
        let len = all.len();
        for i in 0..len {
            for j in i + 1..len {
                let (f, g) = (all[i], all[j]);
                push(&mut all, filter_meet(&f, &g));
                push(&mut all, filter_join(a, &f, &g));
            }
        }
        if all.len() == len {
            break;
        }
    }
    all.sort_by(filter_order);

    let maximal: Vec<usize> = (0..all.len())
        .filter(|&i| all[i].is_proper() && !all.iter().any(|g| g.is_proper() && g != &all[i] && all[i].is_subset(g)))
        .collect();
    let radical_members = maximal
        .iter()
        .fold(ElemSet::full(a.size()), |acc, &i| acc.intersection(all[i].members));
    let radical = all
        .iter()
        .position(|f| f.members == radical_members)
        .expect("an intersection of filters is a filter");
    let primes = (0..all.len()).filter(|&i| is_prime(a, &all[i])).collect();
    FilterLattice {
        all,
        maximal,
        radical,
        primes,
    }
}

/// Proper filters maximal under inclusion.
pub fn maximal_filters(a: &ResiduatedLattice) -> Vec<Filter> {
    let fl = all_filters(a);
    fl.maximal_filters().copied().collect()
}

/// Intersection of all maximal filters (the whole algebra when there are
/// none, which happens only for the one-element algebra).
pub fn radical(a: &ResiduatedLattice) -> Filter {
    *all_filters(a).radical()
}

pub fn is_local(a: &ResiduatedLattice) -> bool {
    all_filters(a).is_local()
}

/// Proper filters `P` with `x ∨ y ∈ P ⟹ x ∈ P or y ∈ P`.
pub fn prime_filters(a: &ResiduatedLattice) -> Vec<Filter> {
    let fl = all_filters(a);
    fl.prime_filters().copied().collect()
}

fn is_prime(a: &ResiduatedLattice, f: &Filter) -> bool {
    if !f.is_proper() {
        return false;
    }
    let n = a.size();
    (0..n).all(|x| (x..n).all(|y| !f.contains(a.join(x, y)) || f.contains(x) || f.contains(y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> ResiduatedLattice {
        let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect();
        let mult: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
        ResiduatedLattice::build(&leq, &mult, None).unwrap()
    }

    #[test]
    fn two_chain_filters() {
        let a = chain(2);
        let fl = all_filters(&a);
        let sets: Vec<Vec<usize>> = fl.all.iter().map(|f| f.members.to_vec()).collect();
        assert_eq!(sets, vec![vec![1], vec![0, 1]]);
        assert_eq!(fl.maximal, vec![0]);
        assert!(fl.is_local());
        assert_eq!(fl.primes, vec![0]);
    }

    #[test]
    fn empty_generators_give_top_filter() {
        let a = chain(3);
        assert_eq!(generated_filter(&a, ElemSet::EMPTY).members().to_vec(), vec![2]);
        assert_eq!(generated_filter(&a, ElemSet::singleton(2)).members().to_vec(), vec![2]);
    }

    #[test]
    fn chains_have_only_prime_proper_filters() {
        let a = chain(5);
        let fl = all_filters(&a);
        let proper = fl.all.iter().filter(|f| f.is_proper()).count();
        assert_eq!(fl.primes.len(), proper);
    }

    #[test]
    fn trivial_algebra_has_no_maximal_filters() {
        let a = ResiduatedLattice::build(&[vec![true]], &[vec![0]], None).unwrap();
        let fl = all_filters(&a);
        assert_eq!(fl.all.len(), 1);
        assert!(fl.maximal.is_empty());
        assert!(!fl.radical().is_proper());
        assert!(!fl.is_local());
    }

    #[test]
    fn comaximal_with_itself_is_false_for_proper() {
        let a = chain(3);
        let f = generated_filter(&a, ElemSet::singleton(1));
        let c = is_comaximal(&a, &f, &f);
        assert!(!c.comaximal);
        assert_eq!(c.witness, None);
    }

    #[test]
    fn filter_order_is_size_then_lexicographic() {
        let f = |v: &[usize]| Filter::from_members(v.iter().copied().collect(), 8);
        let mut v = [f(&[5, 7]), f(&[1, 3, 5, 7]), f(&[3, 7]), f(&[7])];
        v.sort_by(filter_order);
        let got: Vec<Vec<usize>> = v.iter().map(|x| x.members().to_vec()).collect();
        assert_eq!(got, vec![vec![7], vec![3, 7], vec![5, 7], vec![1, 3, 5, 7]]);
    }
}
