//! Finite permutation groups at desk scale.
//!
//! Every group carries a generating set and materializes its full element set
//! on demand by breadth-first closure. Subgroup computations (normal closures,
//! joins, the normal-subgroup lattice) run in the index space of the ambient
//! group's element list, with subgroups held as bitsets.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Perm;

/// Default ceiling on the number of elements a closure may produce.
pub const DEFAULT_CAP: usize = 2_000_000;

/// Default largest group order for which the normal-subgroup lattice is built.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// The materialized elements of a group, with a reverse index.
#[derive(Debug)]
pub struct ElementSet {
    list: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl ElementSet {
    fn new(list: Vec<Perm>) -> ElementSet {
        let index = list.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        ElementSet { list, index }
    }

    pub fn as_slice(&self) -> &[Perm] {
        &self.list
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.list[a].compose(&self.list[b])]
    }

    #[inline]
    fn conj(&self, a: usize, by: &Perm) -> usize {
        self.index[&self.list[a].conjugate_by(by)]
    }

    fn identity(&self) -> usize {
        self.list.iter().position(Perm::is_identity).expect("groups contain the identity")
    }
}

/// A finitely generated permutation group on `0..degree`.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: OnceLock<Arc<ElementSet>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
        }
        Ok(PermGroup { degree, generators, elements: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, generators: Vec::new(), elements: OnceLock::new() }
    }

    /// A group whose element set is already known. `elements` must be a
    /// subgroup generated by `generators`.
    fn from_parts(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> PermGroup {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(ElementSet::new(elements)));
        PermGroup { degree, generators, elements: cell }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn element_set_with_cap(&self, cap: usize) -> Result<&Arc<ElementSet>> {
        if let Some(set) = self.elements.get() {
            return Ok(set);
        }
        let list = close(self.degree, &self.generators, cap)?;
        Ok(self.elements.get_or_init(|| Arc::new(ElementSet::new(list))))
    }

    pub fn element_set(&self) -> Result<&Arc<ElementSet>> {
        self.element_set_with_cap(DEFAULT_CAP)
    }

    pub fn elements(&self) -> Result<&[Perm]> {
        Ok(self.element_set()?.as_slice())
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.get().is_some()
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.element_set()?.len())
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        Ok(p.degree() == self.degree && self.element_set()?.contains(p))
    }

    pub fn sorted_elements(&self) -> Result<Vec<Perm>> {
        let mut v = self.elements()?.to_vec();
        v.sort_unstable();
        Ok(v)
    }

    /// Element-set equality.
    pub fn same_elements(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree || self.order()? != other.order()? {
            return Ok(false);
        }
        let theirs = other.element_set()?;
        Ok(self.elements()?.iter().all(|p| theirs.contains(p)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(false);
        }
        let theirs = other.element_set()?;
        Ok(self.generators.iter().all(|g| theirs.contains(g)))
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Perm::is_identity)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![point];
        seen[point] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Orbits on points, computed from the generators alone.
    pub fn orbits(&self) -> Partition {
        let mut label = vec![usize::MAX; self.degree];
        let mut next = 0;
        for x in 0..self.degree {
            if label[x] != usize::MAX {
                continue;
            }
            for y in self.orbit(x) {
                label[y] = next;
            }
            next += 1;
        }
        Partition::from_labels(label)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        let set = self.element_set()?;
        let idx: Vec<usize> = (0..set.len()).filter(|&i| set.list[i].fixes(point)).collect();
        Ok(subgroup_from_indices(self.degree, set, &idx))
    }

    /// Only the identity fixes a point.
    pub fn is_semiregular(&self) -> Result<bool> {
        let order = self.order()?;
        Ok(self.orbits().cells().iter().all(|c| c.len() == order))
    }

    pub fn is_regular(&self) -> Result<bool> {
        Ok(self.is_transitive() && self.is_semiregular()?)
    }

    /// Elements fixing every cell of `partition` setwise.
    pub fn kernel_on_partition(&self, partition: &Partition) -> Result<PermGroup> {
        if partition.points() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: partition.points() });
        }
        for g in &self.generators {
            partition.induced(g)?;
        }
        let set = self.element_set()?;
        let idx: Vec<usize> = (0..set.len())
            .filter(|&i| {
                let g = &set.list[i];
                partition
                    .cells()
                    .iter()
                    .enumerate()
                    .all(|(c, cell)| partition.cell_of(g.image(cell[0])) == c)
            })
            .collect();
        Ok(subgroup_from_indices(self.degree, set, &idx))
    }

    /// Element-set intersection, regenerated from a small generating set.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let set = self.element_set()?;
        let theirs = other.element_set()?;
        let idx: Vec<usize> = (0..set.len()).filter(|&i| theirs.contains(&set.list[i])).collect();
        Ok(subgroup_from_indices(self.degree, set, &idx))
    }

    /// Join, by re-closing the union of the generating sets.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        PermGroup::new(self.degree, gens)
    }

    /// Whether `sub` is normal in `self`: every conjugate of a generator of
    /// `sub` by a generator of `self` lies in `sub`.
    pub fn has_normal_subgroup(&self, sub: &PermGroup) -> Result<bool> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: sub.degree });
        }
        let set = self.element_set()?;
        if !sub.generators.iter().all(|h| set.contains(h)) {
            return Err(Error::NotSubgroup);
        }
        let sub_set = sub.element_set()?;
        Ok(sub
            .generators
            .iter()
            .all(|h| self.generators.iter().all(|x| sub_set.contains(&h.conjugate_by(x)))))
    }

    /// Smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &Perm) -> Result<PermGroup> {
        let set = self.element_set()?;
        let s = set.index_of(seed).ok_or(Error::NotSubgroup)?;
        let lattice = Lattice::new(self, set);
        let sub = lattice.normal_closure(s);
        Ok(lattice.to_group(&sub))
    }

    pub fn normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        self.normal_subgroups_bounded(DEFAULT_ORDER_BOUND)
    }

    /// Every normal subgroup, as the join-closure of the normal closures of
    /// all elements together with the trivial group. Sorted by order, then by
    /// sorted element list.
    pub fn normal_subgroups_bounded(&self, bound: usize) -> Result<Vec<PermGroup>> {
        let set = self.element_set_with_cap(bound.max(1).saturating_add(1))
            .map_err(|e| match e {
                Error::CapExceeded { .. } => Error::BoundExceeded { order: bound + 1, bound },
                other => other,
            })?;
        if set.len() > bound {
            return Err(Error::BoundExceeded { order: set.len(), bound });
        }
        let lattice = Lattice::new(self, set);
        let subs = lattice.normal_subgroups();
        let mut groups: Vec<(Vec<Perm>, PermGroup)> = subs
            .iter()
            .map(|s| {
                let g = lattice.to_group(s);
                (g.sorted_elements().expect("materialized"), g)
            })
            .collect();
        groups.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(groups.into_iter().map(|(_, g)| g).collect())
    }

    /// Conjugacy classes as index lists into `elements()`, ordered by the
    /// least index in each class.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<usize>>> {
        let set = self.element_set()?;
        Ok(Lattice::new(self, set).classes())
    }
}

/// Breadth-first closure of `generators` under right multiplication, starting
/// at the identity. Generators are sorted and deduplicated first, so the
/// discovery order is a function of the generating set only.
pub fn close(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let mut gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
    gens.sort_unstable();
    gens.dedup();
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in &gens {
            let p = out[i].compose(g);
            if !seen.contains(&p) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(p.clone());
                out.push(p);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Greedy generating set: scan the subgroup's elements in sorted order and
/// keep each one not already generated by the earlier picks.
fn subgroup_from_indices(degree: usize, set: &ElementSet, idx: &[usize]) -> PermGroup {
    let mut order: Vec<usize> = idx.to_vec();
    order.sort_unstable_by(|&a, &b| set.list[a].cmp(&set.list[b]));
    let mut sub = Sub::trivial(set);
    for &i in &order {
        if !sub.bits.contains(i) {
            sub.extend(set, &[i]);
        }
    }
    debug_assert_eq!(sub.members.len(), idx.len());
    let gens = sub.gens.iter().map(|&i| set.list[i].clone()).collect();
    let mut elements: Vec<Perm> = idx.iter().map(|&i| set.list[i].clone()).collect();
    elements.sort_unstable();
    PermGroup::from_parts(degree, gens, elements)
}

/// A subgroup of the ambient group in index space.
#[derive(Clone)]
struct Sub {
    bits: FixedBitSet,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl Sub {
    fn trivial(set: &ElementSet) -> Sub {
        let mut bits = FixedBitSet::with_capacity(set.len());
        let id = set.identity();
        bits.insert(id);
        Sub { bits, members: vec![id], gens: Vec::new() }
    }

    /// Adds `new_gens` and re-closes. Existing members only need the new
    /// generators applied; newly found members need all of them.
    fn extend(&mut self, set: &ElementSet, new_gens: &[usize]) {
        let fresh: Vec<usize> = new_gens.iter().copied().filter(|g| !self.gens.contains(g)).collect();
        if fresh.is_empty() {
            return;
        }
        self.gens.extend(&fresh);
        let old = self.members.len();
        let mut i = 0;
        while i < self.members.len() {
            let m = self.members[i];
            let gens: &[usize] = if i < old { &fresh } else { &self.gens };
            for &g in gens {
                let p = set.mul(m, g);
                if !self.bits.contains(p) {
                    self.bits.insert(p);
                    self.members.push(p);
                }
            }
            i += 1;
        }
    }
}

struct Lattice<'a> {
    degree: usize,
    set: &'a ElementSet,
    group_gens: &'a [Perm],
}

impl<'a> Lattice<'a> {
    fn new(group: &'a PermGroup, set: &'a ElementSet) -> Lattice<'a> {
        Lattice { degree: group.degree, set, group_gens: &group.generators }
    }

    fn classes(&self) -> Vec<Vec<usize>> {
        let n = self.set.len();
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut class = vec![start];
            let mut q = VecDeque::from([start]);
            while let Some(a) = q.pop_front() {
                for x in self.group_gens {
                    let b = self.set.conj(a, x);
                    if !assigned[b] {
                        assigned[b] = true;
                        class.push(b);
                        q.push_back(b);
                    }
                }
            }
            class.sort_unstable();
            out.push(class);
        }
        out
    }

    fn normal_closure(&self, seed: usize) -> Sub {
        let mut sub = Sub::trivial(self.set);
        sub.extend(self.set, &[seed]);
        let mut k = 0;
        while k < sub.gens.len() {
            let h = sub.gens[k];
            for x in self.group_gens {
                let c = self.set.conj(h, x);
                if !sub.bits.contains(c) {
                    sub.extend(self.set, &[c]);
                }
            }
            k += 1;
        }
        sub
    }

    fn normal_subgroups(&self) -> Vec<Sub> {
        let mut found: Vec<Sub> = Vec::new();
        let mut keys: HashSet<FixedBitSet> = HashSet::new();
        let mut push = |s: Sub, found: &mut Vec<Sub>| {
            if keys.insert(s.bits.clone()) {
                found.push(s);
            }
        };
        push(Sub::trivial(self.set), &mut found);
        for class in self.classes() {
            let s = self.normal_closure(class[0]);
            push(s, &mut found);
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let (a, b) = (&found[j], &found[i]);
                if a.bits.is_subset(&b.bits) || b.bits.is_subset(&a.bits) {
                    continue;
                }
                let mut joined = a.clone();
                let extra = b.gens.clone();
                joined.extend(self.set, &extra);
                push(joined, &mut found);
            }
            i += 1;
        }
        found
    }

    fn to_group(&self, sub: &Sub) -> PermGroup {
        let gens = sub.gens.iter().map(|&i| self.set.list[i].clone()).collect();
        let mut elements: Vec<Perm> = sub.members.iter().map(|&i| self.set.list[i].clone()).collect();
        elements.sort_unstable();
        PermGroup::from_parts(self.degree, gens, elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> PermGroup {
        PermGroup::new(n, vec![Perm::from_fn(n, |x| (x + 1) % n)]).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let t = Perm::from_fn(n, |x| match x {
            0 => 1,
            1 => 0,
            _ => x,
        });
        PermGroup::new(n, vec![t, Perm::from_fn(n, |x| (x + 1) % n)]).unwrap()
    }

    #[test]
    fn empty_generating_set_gives_identity() {
        let g = PermGroup::new(4, vec![]).unwrap();
        assert_eq!(g.elements().unwrap(), &[Perm::identity(4)]);
        assert!(g.is_semiregular().unwrap());
        assert_eq!(g.orbits().len(), 4);
    }

    #[test]
    fn degree_mismatch_rejected() {
        assert!(matches!(
            PermGroup::new(3, vec![Perm::identity(4)]),
            Err(Error::DegreeMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(symmetric(5).element_set_with_cap(50).unwrap_err(), Error::CapExceeded { cap: 50 });
        assert_eq!(symmetric(5).order().unwrap(), 120);
    }

    #[test]
    fn closure_is_deterministic() {
        let a = symmetric(4);
        let b = PermGroup::new(4, a.generators().iter().rev().cloned().collect()).unwrap();
        assert_eq!(a.elements().unwrap(), b.elements().unwrap());
    }

    #[test]
    fn prime_cyclic_group_has_two_normal_subgroups() {
        for p in [2, 3, 5, 7, 11] {
            let subs = cyclic(p).normal_subgroups().unwrap();
            let orders: Vec<usize> = subs.iter().map(|s| s.order().unwrap()).collect();
            assert_eq!(orders, vec![1, p]);
        }
    }

    #[test]
    fn s4_normal_subgroups() {
        // 1, V4, A4, S4.
        let orders: Vec<usize> =
            symmetric(4).normal_subgroups().unwrap().iter().map(|s| s.order().unwrap()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
    }

    #[test]
    fn bound_exceeded() {
        assert!(matches!(
            symmetric(5).normal_subgroups_bounded(100),
            Err(Error::BoundExceeded { bound: 100, .. })
        ));
    }

    #[test]
    fn kernel_rejects_non_invariant_partition() {
        let p = Partition::from_labels([0, 0, 1, 1, 2]);
        assert_eq!(cyclic(5).kernel_on_partition(&p).unwrap_err(), Error::NotInvariant);
    }

    #[test]
    fn orbit_stabilizer_on_s4() {
        let g = symmetric(4);
        for x in 0..4 {
            assert_eq!(g.orbit(x).len() * g.stabilizer(x).unwrap().order().unwrap(), 24);
        }
    }
}
