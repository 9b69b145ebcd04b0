//! Permutations of `{0, …, n-1}` acting on the right.
//!
//! `i^(ab) = (i^a)^b`, so `a * b` means "apply `a`, then `b`".

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image list {:?} is not a bijection",
                    images
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation of the given degree from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let a = a as usize;
                if a >= degree || touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {:?} invalid on {} points",
                        cycles, degree
                    )));
                }
                touched[a] = true;
                images[a] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
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

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[j as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start as u32];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cyc.push(j as u32);
                j = self.image(j);
            }
            out.push(cyc);
        }
        out
    }

    /// Element order: lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i as u32 != j)
            .map(|(i, _)| i)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.images[i] as usize == i
    }

    /// Image of a point set given as a sorted list.
    pub fn image_of_set(&self, set: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = set.iter().map(|&i| self.images[i as usize]).collect();
        out.sort_unstable();
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// 1-based cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, a) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", a + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, cs: &[&[u32]]) -> Permutation {
        let cs: Vec<Vec<u32>> = cs.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    #[test]
    fn composition_acts_on_the_right() {
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).image(0), 2);
        assert_eq!(format!("{}", &a * &b), "(1,3,2)");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn orders_and_cycles() {
        let g = cyc(7, &[&[0, 1, 2], &[3, 4, 5, 6]]);
        assert_eq!(g.order(), 12);
        assert!(g.pow(12).is_identity());
        assert_eq!(g.pow(-1), g.inverse());
        assert_eq!(format!("{}", Permutation::identity(4)), "()");
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in perm_strategy(9), b in perm_strategy(9), c in perm_strategy(9)) {
            prop_assert_eq!((&(&a * &b)) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
        }
    }
}
