//! Matrix groups over prime fields acting on row vectors (`v -> vM`).

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::combinat::{self, ConcealedReport};
use crate::error::{bound, Error, Result};
use crate::gf::PrimeField;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

pub type Matrix = Vec<Vec<u64>>;

static MAX_VECTORS: AtomicU64 = AtomicU64::new(729);

/// Largest `p^n` for which the natural module is enumerated.
pub fn vector_bound() -> u64 {
    MAX_VECTORS.load(Ordering::Relaxed)
}

pub fn set_vector_bound(limit: u64) {
    MAX_VECTORS.store(limit, Ordering::Relaxed);
}

#[derive(Clone, Debug)]
pub struct MatGroup {
    dim: usize,
    prime: u64,
    generators: Vec<Matrix>,
    perm: OnceLock<PermGroup>,
}

/// One orbit on the natural module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VectorOrbit {
    pub representative: Vec<u64>,
    pub size: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalReport {
    pub p: u64,
    pub order: String,
    pub order_divisible: bool,
    pub exceptional: bool,
    pub orbit_sizes: Vec<u64>,
    /// Representative of an orbit of size divisible by `p`.
    pub offending: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ImprimitiveReport {
    pub num_parts: usize,
    /// Image of each generator on the parts (0-based).
    pub part_action: Vec<Vec<usize>>,
    pub stabilizer_transitive: bool,
    pub induced_order: String,
    pub induced_primitive: bool,
    pub induced_concealed: ConcealedReport,
}

impl MatGroup {
    pub fn new(dim: usize, prime: u64, generators: Vec<Matrix>) -> Result<Self> {
        if !arith::is_prime(prime) || prime >= 256 {
            return Err(Error::InvalidArgument(format!(
                "{} is not a prime below 256",
                prime
            )));
        }
        let f = PrimeField::new(prime);
        for m in &generators {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(Error::DegreeMismatch {
                    expected: dim,
                    actual: m.len(),
                });
            }
            if m.iter().flatten().any(|&x| x >= prime) {
                return Err(Error::InvalidArgument(format!(
                    "matrix entry outside 0..{}",
                    prime
                )));
            }
            if f.determinant(m) == 0 {
                return Err(Error::SingularMatrix(prime as u32));
            }
        }
        Ok(MatGroup {
            dim,
            prime,
            generators,
            perm: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }

    /// `p^n`, checked against [`vector_bound`].
    pub fn num_vectors(&self) -> Result<u64> {
        let size = (self.prime as u128)
            .checked_pow(self.dim as u32)
            .unwrap_or(u128::MAX);
        if size > vector_bound() as u128 {
            return Err(bound("natural module size", vector_bound(), size));
        }
        Ok(size as u64)
    }

    /// Index of a vector, coordinate 0 most significant.
    pub fn encode(&self, v: &[u64]) -> usize {
        v.iter()
            .fold(0, |acc, &x| acc * self.prime as usize + x as usize)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        for x in v.iter_mut().rev() {
            *x = (idx % self.prime as usize) as u64;
            idx /= self.prime as usize;
        }
        v
    }

    pub fn apply(&self, v: &[u64], m: &Matrix) -> Vec<u64> {
        let f = self.field();
        (0..self.dim)
            .map(|j| {
                v.iter()
                    .zip(m)
                    .fold(0, |acc, (&x, row)| f.add(acc, f.mul(x, row[j])))
            })
            .collect()
    }

    /// The action on all `p^n` vectors; vector `i` is point `i`.
    pub fn as_perm_group(&self) -> Result<PermGroup> {
        if let Some(g) = self.perm.get() {
            return Ok(g.clone());
        }
        let size = self.num_vectors()? as usize;
        let gens = self
            .generators
            .iter()
            .map(|m| {
                let images = (0..size)
                    .map(|i| self.encode(&self.apply(&self.decode(i), m)) as u32)
                    .collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        let g = PermGroup::new(size, gens)?;
        Ok(self.perm.get_or_init(|| g).clone())
    }

    pub fn order(&self) -> Result<BigUint> {
        Ok(self.as_perm_group()?.order())
    }

    /// Orbits on the natural module sorted by size then representative; each
    /// representative is the smallest vector of its orbit.
    pub fn vector_orbits(&self) -> Result<Vec<VectorOrbit>> {
        let g = self.as_perm_group()?;
        let mut out: Vec<VectorOrbit> = g
            .orbits()
            .into_iter()
            .map(|o| VectorOrbit {
                representative: self.decode(o[0]),
                size: o.len() as u64,
            })
            .collect();
        out.sort_by(|a, b| {
            a.size.cmp(&b.size).then_with(|| {
                self.encode(&a.representative)
                    .cmp(&self.encode(&b.representative))
            })
        });
        Ok(out)
    }

    /// `p` divides `|G|` and every orbit on the natural module has `p'`-size.
    pub fn is_p_exceptional(&self) -> Result<ExceptionalReport> {
        let p = self.prime;
        let order = self.order()?;
        let order_divisible = arith::valuation_big(&order, p) > 0;
        let orbits = self.vector_orbits()?;
        let offending = orbits
            .iter()
            .find(|o| o.size % p == 0)
            .map(|o| o.representative.clone());
        Ok(ExceptionalReport {
            p,
            order: order.to_string(),
            order_divisible,
            exceptional: order_divisible && offending.is_none(),
            orbit_sizes: orbits.iter().map(|o| o.size).collect(),
            offending,
        })
    }

    /// Echelon basis of the smallest invariant subspace containing `vs`.
    pub fn spin(&self, vs: &[Vec<u64>]) -> Matrix {
        let f = self.field();
        let mut basis: Matrix = vs.to_vec();
        f.rref(&mut basis);
        let mut frontier = basis.clone();
        while let Some(v) = frontier.pop() {
            for m in &self.generators {
                let w = self.apply(&v, m);
                let mut trial = basis.clone();
                trial.push(w.clone());
                if f.rank(&trial) > basis.len() {
                    basis.push(w.clone());
                    f.rref(&mut basis);
                    frontier.push(w);
                }
            }
        }
        basis
    }

    /// No proper nonzero invariant subspace, by spinning every line.
    pub fn is_irreducible(&self) -> Result<bool> {
        let p = self.prime;
        let lines = ((p as u128).pow(self.dim as u32) - 1) / (p as u128 - 1);
        if lines > vector_bound() as u128 {
            return Err(bound("projective points", vector_bound(), lines));
        }
        // lines are represented by vectors whose first nonzero coordinate is 1
        let total = (p as usize).pow(self.dim as u32);
        for idx in 1..total {
            let v = self.decode(idx);
            if v.iter().find(|&&x| x != 0) != Some(&1) {
                continue;
            }
            if self.spin(&[v]).len() < self.dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Check a direct-sum decomposition `V = V_1 + ... + V_r` (each part a
    /// list of spanning vectors) permuted by the group.
    pub fn check_imprimitive_decomposition(
        &self,
        parts: &[Vec<Vec<u64>>],
    ) -> Result<ImprimitiveReport> {
        let f = self.field();
        let mut echelon = Vec::new();
        for part in parts {
            let mut b = part.clone();
            f.rref(&mut b);
            if b.is_empty() || b.iter().any(|r| r.len() != self.dim) {
                return Err(Error::Decomposition("empty or malformed part".into()));
            }
            echelon.push(b);
        }
        let all: Matrix = echelon.iter().flatten().cloned().collect();
        if all.len() != self.dim || f.rank(&all) != self.dim {
            return Err(Error::Decomposition(format!(
                "part dimensions sum to {} with rank {}, need {}",
                all.len(),
                f.rank(&all),
                self.dim
            )));
        }
        let contains = |space: &Matrix, v: &[u64]| {
            let mut trial = space.clone();
            trial.push(v.to_vec());
            f.rank(&trial) == space.len()
        };
        let mut part_action = Vec::new();
        for m in &self.generators {
            let mut images = Vec::new();
            for part in &echelon {
                let img: Matrix = part.iter().map(|v| self.apply(v, m)).collect();
                let target = echelon
                    .iter()
                    .position(|q| q.len() == part.len() && img.iter().all(|v| contains(q, v)))
                    .ok_or(Error::NotPermuted)?;
                images.push(target);
            }
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != images.len() {
                return Err(Error::NotPermuted);
            }
            part_action.push(images);
        }
        let perms = part_action
            .iter()
            .map(|im| Permutation::from_images(im.iter().map(|&x| x as u32).collect()))
            .collect::<Result<Vec<_>>>()?;
        let induced = PermGroup::new(parts.len(), perms)?;

        // stabilizer of V_1 acting on V_1 \ {0}
        let g = self.as_perm_group()?;
        let total = self.num_vectors()? as usize;
        let v1: Vec<usize> = (0..total)
            .filter(|&i| contains(&echelon[0], &self.decode(i)))
            .collect();
        let stab = g.setwise_stabilizer(&v1);
        let stabilizer_transitive = stab.orbit(v1[1]).len() == v1.len() - 1;

        let induced_primitive = induced.is_transitive() && combinat::is_primitive(&induced)?;
        let induced_concealed = combinat::is_p_concealed(&induced, self.prime)?;
        Ok(ImprimitiveReport {
            num_parts: parts.len(),
            part_action,
            stabilizer_transitive,
            induced_order: induced.order().to_string(),
            induced_primitive,
            induced_concealed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    fn orbit_sizes(m: &MatGroup) -> Vec<u64> {
        m.vector_orbits().unwrap().iter().map(|o| o.size).collect()
    }

    #[test]
    fn gl23_is_3_exceptional() {
        let g = b::gl_mat(2, 3).unwrap();
        assert_eq!(g.order().unwrap(), BigUint::from(48u32));
        assert_eq!(orbit_sizes(&g), vec![1, 8]);
        assert!(g.is_p_exceptional().unwrap().exceptional);
        assert!(g.is_irreducible().unwrap());
    }

    #[test]
    fn transvection_is_not_exceptional() {
        let t = MatGroup::new(2, 3, vec![vec![vec![1, 1], vec![0, 1]]]).unwrap();
        assert_eq!(t.order().unwrap(), BigUint::from(3u32));
        let r = t.is_p_exceptional().unwrap();
        assert!(!r.exceptional);
        assert_eq!(
            r.offending.map(|v| t.apply(&v, &t.generators()[0]) != v),
            Some(true)
        );
        assert!(!t.is_irreducible().unwrap());
    }

    #[test]
    fn identity_group_orbits() {
        let t = MatGroup::new(2, 3, vec![]).unwrap();
        assert_eq!(orbit_sizes(&t), vec![1; 9]);
        assert!(t.as_perm_group().unwrap().is_trivial());
    }

    #[test]
    fn perm_group_orders() {
        assert_eq!(
            b::gl_mat(2, 2)
                .unwrap()
                .as_perm_group()
                .unwrap()
                .order_u64(),
            Some(6)
        );
        let sl = b::sl_mat(2, 3).unwrap().as_perm_group().unwrap();
        assert_eq!((sl.degree(), sl.order_u64()), (9, Some(24)));
    }

    #[test]
    fn singular_rejected() {
        assert!(matches!(
            MatGroup::new(2, 3, vec![vec![vec![1, 1], vec![1, 1]]]),
            Err(Error::SingularMatrix(3))
        ));
    }

    #[test]
    fn diagonal_is_reducible() {
        let d = MatGroup::new(
            2,
            3,
            vec![vec![vec![2, 0], vec![0, 1]], vec![vec![1, 0], vec![0, 2]]],
        )
        .unwrap();
        assert!(!d.is_irreducible().unwrap());
    }

    #[test]
    fn monomial_decomposition() {
        // GL1(3) wr S2: diagonal sign changes and the coordinate swap
        let m = MatGroup::new(
            2,
            3,
            vec![vec![vec![2, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]],
        )
        .unwrap();
        let r = m
            .check_imprimitive_decomposition(&[vec![vec![1, 0]], vec![vec![0, 1]]])
            .unwrap();
        assert_eq!(r.part_action, vec![vec![0, 1], vec![1, 0]]);
        assert!(r.stabilizer_transitive);
        assert!(r.induced_primitive);

        let gl = b::gl_mat(2, 3).unwrap();
        assert!(matches!(
            gl.check_imprimitive_decomposition(&[vec![vec![1, 0]], vec![vec![0, 1]]]),
            Err(Error::NotPermuted)
        ));
        assert!(matches!(
            gl.check_imprimitive_decomposition(&[vec![vec![1, 0]], vec![vec![2, 0]]]),
            Err(Error::Decomposition(_))
        ));
    }
}
