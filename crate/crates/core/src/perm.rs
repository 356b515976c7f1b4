use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image table.
///
/// Products act on the right: `g.compose(h)` sends `x` to `(x^g)^h`, so the
/// left factor is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Perm(Box<[u32]>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotBijection { degree: n });
            }
            seen[x] = true;
        }
        Ok(Perm(images.into_boxed_slice()))
    }

    /// Builds the permutation `x ↦ f(x)`.
    ///
    /// Panics if `f` is not a bijection; use [`Perm::from_images`] for
    /// untrusted input.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Perm {
        let images = (0..degree).map(|x| f(x) as u32).collect();
        Perm::from_images(images).expect("from_fn: map is not a bijection")
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv.into_boxed_slice())
    }

    /// `other⁻¹ · self · other`, written `self^other` in exponent notation.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        let mut out = vec![0u32; self.degree()];
        for (x, &y) in self.0.iter().enumerate() {
            out[other.0[x] as usize] = other.0[y as usize];
        }
        Perm(out.into_boxed_slice())
    }

    pub fn pow(&self, exp: i64) -> Perm {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.image(x) == x
    }

    pub fn has_fixed_point(&self) -> bool {
        (0..self.degree()).any(|x| self.fixes(x))
    }

    /// Cycles including fixed points, each starting at its least point, in
    /// ascending order of that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, lcm)
    }
}

impl TryFrom<Vec<u32>> for Perm {
    type Error = Error;
    fn try_from(images: Vec<u32>) -> Result<Perm> {
        Perm::from_images(images)
    }
}

impl From<Perm> for Vec<u32> {
    fn from(p: Perm) -> Vec<u32> {
        p.0.into_vec()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation, omitting fixed points.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
        assert!(Perm::from_images(vec![]).is_ok());
    }

    #[test]
    fn composition_applies_left_first() {
        let a = Perm::from_images(vec![1, 2, 0]).unwrap(); // x -> x+1
        let b = Perm::from_images(vec![0, 2, 1]).unwrap(); // swap 1,2
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).image(0), 2);
        assert_eq!(b.compose(&a).image(0), 1);
    }

    #[test]
    fn display_and_order() {
        let p = Perm::from_images(vec![1, 0, 3, 4, 2, 5]).unwrap();
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
            prop_assert_eq!(a.conjugate_by(&b), b.inverse().compose(&a).compose(&b));
            prop_assert!(a.pow(a.order() as i64).is_identity());
            prop_assert_eq!(a.pow(-2), a.inverse().compose(&a.inverse()));
        }
    }
}
