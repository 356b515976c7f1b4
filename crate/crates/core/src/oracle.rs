//! Brute-force normal-subgroup enumeration over a multiplication table.
//!
//! Shares nothing with the lattice code in `group` beyond permutation
//! products: elements are re-enumerated, conjugacy classes are computed by
//! conjugating with every element, and subgroups are grown by adding whole
//! classes and closing under products until nothing new appears.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const ORACLE_LIMIT: usize = 200;

/// The normal subgroups of ⟨generators⟩, each as a sorted element list,
/// the whole list sorted by size and then lexicographically.
pub fn normal_subgroups_oracle(degree: usize, generators: &[Perm]) -> Result<Vec<Vec<Perm>>> {
    let elements = enumerate(degree, generators)?;
    let n = elements.len();
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mul: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let identity = elements.iter().position(Perm::is_identity).expect("identity");
    let inv: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| mul[a][b] == identity).expect("inverse")).collect();

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let members: BTreeSet<usize> = (0..n).map(|g| mul[mul[inv[g]][a]][g]).collect();
        for &m in &members {
            class_of[m] = classes.len();
        }
        classes.push(members.into_iter().collect());
    }

    let close = |seed: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut set = seed.clone();
        set.insert(identity);
        loop {
            let current: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &current {
                for &b in &current {
                    set.insert(mul[a][b]);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    };

    let trivial: BTreeSet<usize> = [identity].into_iter().collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(trivial.iter().copied().collect());
    let mut queue = VecDeque::from([trivial]);
    while let Some(sub) = queue.pop_front() {
        for class in &classes {
            if sub.contains(&class[0]) {
                continue;
            }
            let mut seed = sub.clone();
            seed.extend(class.iter().copied());
            let next = close(&seed);
            let key: Vec<usize> = next.iter().copied().collect();
            if seen.insert(key) {
                queue.push_back(next);
            }
        }
    }

    for sub in &seen {
        let is_normal = sub.iter().all(|&a| classes[class_of[a]].iter().all(|b| sub.binary_search(b).is_ok()));
        if !is_normal {
            return Err(Error::AssertionFailed("oracle produced a non-normal subgroup".into()));
        }
    }
    let mut out: Vec<Vec<Perm>> = seen
        .into_iter()
        .map(|s| {
            let mut v: Vec<Perm> = s.into_iter().map(|i| elements[i].clone()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Depth-first enumeration with left multiplication, capped at the oracle
/// limit.
fn enumerate(degree: usize, generators: &[Perm]) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashMap<Perm, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut stack = vec![id];
    let mut out = Vec::new();
    while let Some(p) = stack.pop() {
        out.push(p.clone());
        for g in generators {
            let q = g.compose(&p);
            if !seen.contains_key(&q) {
                if seen.len() >= ORACLE_LIMIT {
                    return Err(Error::BoundExceeded { order: seen.len() + 1, bound: ORACLE_LIMIT });
                }
                seen.insert(q.clone(), ());
                stack.push(q);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_s4() {
        let a = Perm::from_images(vec![1, 0, 2, 3]).unwrap();
        let b = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        let sizes: Vec<usize> = normal_subgroups_oracle(4, &[a, b]).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);
    }

    #[test]
    fn abelian_groups_have_every_subgroup_normal() {
        // Z2 × Z4 has 8 subgroups.
        let a = Perm::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap();
        let b = Perm::from_images(vec![0, 1, 3, 4, 5, 2]).unwrap();
        assert_eq!(normal_subgroups_oracle(6, &[a, b]).unwrap().len(), 8);
    }
}
