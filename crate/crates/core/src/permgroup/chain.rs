//! Deterministic incremental Schreier–Sims.
//!
//! A level is created for the smallest point moved by the generator that
//! forces it, so base and strong generators depend only on the order in
//! which generators are added.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `transversal[pt] = (u, u^-1)` with `base^u = pt`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u32],
            transversal,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators<'a>(
        degree: usize,
        gens: impl IntoIterator<Item = &'a Permutation>,
    ) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.add_generator(g.clone());
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `g` to the group; returns whether the group grew.
    pub fn add_generator(&mut self, g: Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        if self.contains_from(0, &g) {
            return false;
        }
        self.add_at(0, g);
        true
    }

    fn add_at(&mut self, i: usize, g: Permutation) {
        if self.contains_from(i, &g) {
            return;
        }
        if i == self.levels.len() {
            let base = g
                .smallest_moved_point()
                .expect("non-member is never the identity");
            self.levels.push(Level::new(self.degree, base));
        }
        self.levels[i].gens.push(g.clone());

        // Old orbit points only need the new generator; new points need all.
        let old: Vec<u32> = self.levels[i].orbit.clone();
        let mut pending: Vec<(u32, Option<Permutation>)> =
            old.into_iter().map(|pt| (pt, Some(g.clone()))).collect();
        let mut cursor = 0;
        while cursor < pending.len() {
            let (pt, only) = pending[cursor].clone();
            cursor += 1;
            let gens: Vec<Permutation> = match only {
                Some(h) => vec![h],
                None => self.levels[i].gens.clone(),
            };
            for h in gens {
                let img = h.image(pt as usize);
                let u = self.levels[i].transversal[pt as usize]
                    .as_ref()
                    .expect("orbit point has a transversal element")
                    .0
                    .compose(&h);
                match &self.levels[i].transversal[img] {
                    None => {
                        let inv = u.inverse();
                        self.levels[i].transversal[img] = Some((u, inv));
                        self.levels[i].orbit.push(img as u32);
                        pending.push((img as u32, None));
                    }
                    Some((_, vinv)) => {
                        let schreier = u.compose(vinv);
                        if !schreier.is_identity() {
                            self.add_at(i + 1, schreier);
                        }
                    }
                }
            }
        }
    }

    /// Sifts `g` from level `start`; returns the residue and whether every
    /// level accepted it.
    fn sift_from(&self, start: usize, g: &Permutation) -> (Permutation, bool) {
        let mut h = g.clone();
        for level in &self.levels[start.min(self.levels.len())..] {
            let pt = h.image(level.base);
            match &level.transversal[pt] {
                Some((_, uinv)) => h = h.compose(uinv),
                None => return (h, false),
            }
        }
        (h, true)
    }

    fn contains_from(&self, start: usize, g: &Permutation) -> bool {
        let (h, ok) = self.sift_from(start, g);
        ok && h.is_identity()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.contains_from(0, g)
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// All elements, identity first. Caller bounds the order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut list = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(list.len() * level.orbit.len());
            for &pt in &level.orbit {
                let u = &level.transversal[pt as usize].as_ref().unwrap().0;
                for x in &list {
                    next.push(x.compose(u));
                }
            }
            list = next;
        }
        list
    }
}
