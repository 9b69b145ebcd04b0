//! Finite permutation groups with exact structural queries.
//!
//! Anything that needs the full element list (classes, normal subgroups,
//! centralizers, Sylow subgroups) is gated by [`enumeration_bound`].

mod action;
mod chain;
mod classes;
mod normal;
mod structure;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{bound, Error, Result};
use crate::perm::Permutation;

pub use action::{ActionHom, CosetAction};
pub use chain::StabChain;
pub use classes::ConjugacyClassData;
pub use normal::{ClassSet, NormalSubgroup};
pub use structure::{FactorKind, SubnormalSeries};

static ENUMERATION_BOUND: AtomicU64 = AtomicU64::new(1_000_000);

/// Largest group order for which element enumeration is allowed.
pub fn enumeration_bound() -> u64 {
    ENUMERATION_BOUND.load(Ordering::Relaxed)
}

pub fn set_enumeration_bound(limit: u64) {
    ENUMERATION_BOUND.store(limit, Ordering::Relaxed);
}

/// Every element of a group together with a reverse index.
#[derive(Debug)]
pub struct ElementIndex {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl ElementIndex {
    fn new(elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        ElementIndex { elements, index }
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Arc<ElementIndex>>,
    classes: OnceLock<Arc<ConjugacyClassData>>,
    normals: OnceLock<Arc<Vec<NormalSubgroup>>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// A group from generators; identity generators are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    actual: g.degree(),
                });
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Self::from_parts(degree, gens, None))
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, chain: Option<StabChain>) -> Self {
        let cell = OnceLock::new();
        if let Some(c) = chain {
            let _ = cell.set(c);
        }
        PermGroup {
            degree,
            generators,
            chain: cell,
            elements: OnceLock::new(),
            classes: OnceLock::new(),
            normals: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), None)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::from_generators(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64`; `None` if it does not fit.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    /// Order, failing if it exceeds `limit`.
    pub fn order_within(&self, what: &'static str, limit: u64) -> Result<u64> {
        let n = self.order();
        match n.to_u64() {
            Some(k) if k <= limit => Ok(k),
            _ => Err(bound(what, limit, n)),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as subgroups of `Sym(degree)`.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.contains_group(other)
    }

    /// Subgroup generated by `elements` (which need not lie in `self`).
    pub fn subgroup(&self, elements: Vec<Permutation>) -> Result<PermGroup> {
        PermGroup::new(self.degree, elements)
    }

    /// Element list, identity first, deterministic order.
    pub fn element_index(&self) -> Result<Arc<ElementIndex>> {
        if let Some(e) = self.elements.get() {
            return Ok(e.clone());
        }
        self.order_within("element enumeration", enumeration_bound())?;
        Ok(self
            .elements
            .get_or_init(|| Arc::new(ElementIndex::new(self.chain().elements())))
            .clone())
    }

    pub fn elements(&self) -> Result<Vec<Permutation>> {
        Ok(self.element_index()?.elements().to_vec())
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(point, &self.generators, |&x, g| g.image(x))
    }

    /// Orbits in order of their smallest point; each orbit sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orb = self.orbit(start);
            for &x in &orb {
                seen[x] = true;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a * b == b * a))
    }

    /// Stabilizer of a point in an arbitrary action, via Schreier generators.
    pub fn action_stabilizer<T, F>(&self, start: T, act: F) -> PermGroup
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &Permutation) -> T,
    {
        let mut transversal: HashMap<T, Permutation> = HashMap::new();
        transversal.insert(start.clone(), self.identity());
        let mut queue = VecDeque::from([start]);
        let mut chain = StabChain::new(self.degree);
        let mut gens = Vec::new();
        while let Some(x) = queue.pop_front() {
            let u = transversal[&x].clone();
            for g in &self.generators {
                let y = act(&x, g);
                let ug = u.compose(g);
                match transversal.get(&y) {
                    None => {
                        transversal.insert(y.clone(), ug);
                        queue.push_back(y);
                    }
                    Some(v) => {
                        let s = ug.compose(&v.inverse());
                        if chain.add_generator(s.clone()) {
                            gens.push(s);
                        }
                    }
                }
            }
        }
        PermGroup::from_parts(self.degree, gens, Some(chain))
    }

    pub fn point_stabilizer(&self, point: usize) -> PermGroup {
        self.action_stabilizer(point, |&x, g| g.image(x))
    }

    /// Setwise stabilizer of `set`.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> PermGroup {
        let mut s: Vec<u32> = set.iter().map(|&x| x as u32).collect();
        s.sort_unstable();
        s.dedup();
        self.action_stabilizer(s, |x, g| g.image_of_set(x))
    }

    /// Subgroup of elements of `self` satisfying `pred`, by enumeration.
    pub fn filter_subgroup<F>(&self, pred: F) -> Result<PermGroup>
    where
        F: Fn(&Permutation) -> bool,
    {
        let elems = self.element_index()?;
        let mut chain = StabChain::new(self.degree);
        let mut gens = Vec::new();
        for g in elems.elements() {
            if pred(g) && chain.add_generator(g.clone()) {
                gens.push(g.clone());
            }
        }
        Ok(PermGroup::from_parts(self.degree, gens, Some(chain)))
    }

    pub fn centralizer_of_element(&self, x: &Permutation) -> Result<PermGroup> {
        self.filter_subgroup(|g| g * x == x * g)
    }

    /// `C_self(H)` for any group `H` on the same points.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h.generators.clone();
        self.filter_subgroup(|g| gens.iter().all(|x| g * x == x * g))
    }

    /// `N_self(H)`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        self.filter_subgroup(|g| h.generators.iter().all(|x| h.contains(&x.conjugate_by(g))))
    }

    pub fn center(&self) -> Result<PermGroup> {
        self.centralizer(self)
    }

    /// Smallest subgroup of `self` containing `h` and normalised by `self`.
    pub fn normal_closure(&self, h: &[Permutation]) -> PermGroup {
        let mut chain = StabChain::new(self.degree);
        let mut gens = Vec::new();
        let mut queue: VecDeque<Permutation> = h.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            if chain.add_generator(x.clone()) {
                for s in &self.generators {
                    queue.push_back(x.conjugate_by(s));
                }
                gens.push(x);
            }
        }
        PermGroup::from_parts(self.degree, gens, Some(chain))
    }

    pub fn is_normal_subgroup(&self, n: &PermGroup) -> bool {
        self.contains_group(n)
            && n.generators.iter().all(|x| {
                self.generators
                    .iter()
                    .all(|s| n.contains(&x.conjugate_by(s)))
            })
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let g = &self.generators;
        let comms: Vec<Permutation> = g
            .iter()
            .enumerate()
            .flat_map(|(i, a)| g[i + 1..].iter().map(move |b| a.commutator(b)))
            .collect();
        self.normal_closure(&comms)
    }

    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order().is_one()
    }

    /// Whether the order is a power of `p`.
    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        let pb = BigUint::from(p);
        while !n.is_one() {
            if !(&n % &pb).is_zero() {
                return false;
            }
            n /= &pb;
        }
        true
    }

    /// Exponent: lcm of element orders (enumerates classes).
    pub fn exponent(&self) -> Result<u64> {
        let cl = self.conjugacy_classes()?;
        Ok(cl
            .element_orders()
            .iter()
            .fold(1, |acc, &o| crate::arith::lcm(acc, o)))
    }
}

/// Orbit of `start` under `gens` in breadth-first order.
pub(crate) fn orbit_of<T, F>(start: T, gens: &[Permutation], act: F) -> Vec<T>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &Permutation) -> T,
{
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = act(&out[i], g);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    #[test]
    fn orders() {
        assert_eq!(PermGroup::trivial(3).order_u64(), Some(1));
        assert_eq!(b::sym(4).order_u64(), Some(24));
        assert_eq!(b::psl2(7).unwrap().order_u64(), Some(168));
    }

    #[test]
    fn psl27_order_by_brute_force_closure() {
        // independent oracle: closure under generator multiplication
        let g = b::psl2(7).unwrap();
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![g.identity()];
        seen.insert(g.identity());
        while let Some(x) = frontier.pop() {
            for s in g.generators() {
                let y = &x * s;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        assert_eq!(seen.len(), 168);
    }

    #[test]
    fn stabilizers() {
        let s5 = b::sym(5);
        assert_eq!(s5.point_stabilizer(0).order_u64(), Some(24));
        assert_eq!(s5.setwise_stabilizer(&[0, 1]).order_u64(), Some(12));
        let d8 = b::dihedral(8).unwrap();
        // {0, 2} is a block of the square: its stabilizer has index 2
        assert_eq!(d8.setwise_stabilizer(&[0, 2]).order_u64(), Some(4));
        assert_eq!(d8.setwise_stabilizer(&[0, 1]).order_u64(), Some(2));
    }

    #[test]
    fn normalizer_of_four_cycle() {
        let s4 = b::sym(4);
        let c4 = s4
            .subgroup(vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()
            ])
            .unwrap();
        assert_eq!(s4.normalizer(&c4).unwrap().order_u64(), Some(8));
    }

    #[test]
    fn solvability() {
        assert!(b::sym(4).is_solvable());
        assert!(!b::alt(5).is_solvable());
        assert!(b::sym(3).derived_subgroup().order_u64() == Some(3));
        assert!(b::quaternion(8).unwrap().is_p_group(2));
        assert!(!b::sym(3).is_p_group(2));
    }

    #[test]
    fn center_and_abelian() {
        let q8 = b::quaternion(8).unwrap();
        assert_eq!(q8.center().unwrap().order_u64(), Some(2));
        assert!(!q8.is_abelian());
        assert!(b::elementary_abelian(2, 3).unwrap().is_abelian());
    }
}
