use std::collections::BTreeMap;
use std::sync::Arc;

use super::PermGroup;
use crate::arith;
use crate::error::Result;

/// A set of conjugacy-class indices, as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSet(Vec<u64>);

impl ClassSet {
    pub fn empty(k: usize) -> Self {
        ClassSet(vec![0; k.div_ceil(64)])
    }

    pub fn insert(&mut self, c: usize) {
        self.0[c / 64] |= 1 << (c % 64);
    }

    pub fn contains(&self, c: usize) -> bool {
        self.0[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn is_subset(&self, other: &ClassSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// A normal subgroup together with the classes it is a union of.
#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    pub group: PermGroup,
    pub classes: ClassSet,
    pub order: u64,
}

impl PermGroup {
    fn class_set_of(&self, n: &PermGroup) -> Result<ClassSet> {
        let cl = self.conjugacy_classes()?;
        let mut set = ClassSet::empty(cl.len());
        for (c, rep) in cl.representatives().iter().enumerate() {
            if n.contains(rep) {
                set.insert(c);
            }
        }
        Ok(set)
    }

    fn wrap_normal(&self, n: PermGroup) -> Result<NormalSubgroup> {
        let classes = self.class_set_of(&n)?;
        let order = arith::to_u64(&n.order()).expect("subgroup of an enumerable group");
        Ok(NormalSubgroup {
            group: n,
            classes,
            order,
        })
    }

    /// All normal subgroups, sorted by order then class set.
    pub fn normal_subgroups(&self) -> Result<Arc<Vec<NormalSubgroup>>> {
        if let Some(n) = self.normals.get() {
            return Ok(n.clone());
        }
        let cl = self.conjugacy_classes()?;
        let mut found: BTreeMap<ClassSet, NormalSubgroup> = BTreeMap::new();
        let trivial = self.wrap_normal(PermGroup::trivial(self.degree))?;
        found.insert(trivial.classes.clone(), trivial);
        let mut closures = Vec::new();
        for rep in cl.representatives().iter().skip(1) {
            let n = self.wrap_normal(self.normal_closure(std::slice::from_ref(rep)))?;
            if !found.contains_key(&n.classes) {
                found.insert(n.classes.clone(), n.clone());
                closures.push(n);
            }
        }
        // Every normal subgroup is a join of class closures.
        let mut frontier: Vec<NormalSubgroup> = found.values().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &closures {
                    if b.classes.is_subset(&a.classes) {
                        continue;
                    }
                    let mut gens = a.group.generators().to_vec();
                    gens.extend(b.group.generators().iter().cloned());
                    let joined = self.normal_closure(&gens);
                    let j = self.wrap_normal(joined)?;
                    if !found.contains_key(&j.classes) {
                        found.insert(j.classes.clone(), j.clone());
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<NormalSubgroup> = found.into_values().collect();
        all.sort_by(|a, b| {
            a.order
                .cmp(&b.order)
                .then_with(|| a.classes.cmp(&b.classes))
        });
        Ok(self.normals.get_or_init(|| Arc::new(all)).clone())
    }

    pub fn minimal_normal_subgroups(&self) -> Result<Vec<PermGroup>> {
        let all = self.normal_subgroups()?;
        let nontrivial: Vec<&NormalSubgroup> = all.iter().filter(|n| n.order > 1).collect();
        Ok(nontrivial
            .iter()
            .filter(|n| {
                !nontrivial
                    .iter()
                    .any(|m| m.order < n.order && m.classes.is_subset(&n.classes))
            })
            .map(|n| n.group.clone())
            .collect())
    }

    /// Largest normal subgroup `M >= base` with `|M : base|` satisfying `pred`.
    pub(crate) fn largest_normal_over<F>(
        &self,
        base: &ClassSet,
        base_order: u64,
        pred: F,
    ) -> Result<NormalSubgroup>
    where
        F: Fn(u64) -> bool,
    {
        let all = self.normal_subgroups()?;
        let best = all
            .iter()
            .filter(|m| base.is_subset(&m.classes) && pred(m.order / base_order))
            .max_by_key(|m| m.order)
            .expect("base itself qualifies");
        Ok(best.clone())
    }

    /// `O_p(G)`.
    pub fn p_core(&self, p: u64) -> Result<PermGroup> {
        let triv = self.class_set_of(&PermGroup::trivial(self.degree))?;
        Ok(self
            .largest_normal_over(&triv, 1, |k| arith::is_p_power(k, p))?
            .group)
    }

    /// `O_{p'}(G)`.
    pub fn p_prime_core(&self, p: u64) -> Result<PermGroup> {
        let triv = self.class_set_of(&PermGroup::trivial(self.degree))?;
        Ok(self.largest_normal_over(&triv, 1, |k| k % p != 0)?.group)
    }

    /// `O^{p'}(G)`: normal closure of a Sylow `p`-subgroup.
    pub fn p_residual(&self, p: u64) -> Result<PermGroup> {
        let s = self.sylow(p)?;
        Ok(self.normal_closure(s.generators()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;
    use crate::perm::Permutation;

    fn orders(list: &[NormalSubgroup]) -> Vec<u64> {
        list.iter().map(|n| n.order).collect()
    }

    #[test]
    fn normal_subgroups_of_small_groups() {
        assert_eq!(
            orders(&b::sym(4).normal_subgroups().unwrap()),
            vec![1, 4, 12, 24]
        );
        assert_eq!(orders(&b::alt(5).normal_subgroups().unwrap()), vec![1, 60]);
        assert_eq!(
            orders(
                &b::elementary_abelian(2, 2)
                    .unwrap()
                    .normal_subgroups()
                    .unwrap()
            ),
            vec![1, 2, 2, 2, 4]
        );
    }

    #[test]
    fn normal_subgroups_match_brute_force_on_d8_and_q8() {
        // oracle: every subset closed under products and conjugation
        for g in [b::dihedral(8).unwrap(), b::quaternion(8).unwrap()] {
            let els = g.elements().unwrap();
            let mut count = 0;
            for mask in 0u32..(1 << els.len()) {
                if mask & 1 == 0 {
                    continue;
                }
                let sub: Vec<&Permutation> = (0..els.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| &els[i])
                    .collect();
                let inside = |x: &Permutation| sub.contains(&x);
                let closed = sub.iter().all(|a| sub.iter().all(|b| inside(&(*a * *b))));
                let normal = sub
                    .iter()
                    .all(|a| els.iter().all(|t| inside(&a.conjugate_by(t))));
                if closed && normal {
                    count += 1;
                }
            }
            assert_eq!(g.normal_subgroups().unwrap().len(), count);
        }
    }

    #[test]
    fn minimal_normals() {
        let s4 = b::sym(4).minimal_normal_subgroups().unwrap();
        assert_eq!(s4.len(), 1);
        assert_eq!(s4[0].order_u64(), Some(4));
        let c6 = b::cyclic(6).unwrap().minimal_normal_subgroups().unwrap();
        let mut o: Vec<u64> = c6.iter().map(|n| n.order_u64().unwrap()).collect();
        o.sort();
        assert_eq!(o, vec![2, 3]);
        assert_eq!(
            b::alt(5).minimal_normal_subgroups().unwrap()[0].order_u64(),
            Some(60)
        );
    }

    #[test]
    fn cores() {
        let s4 = b::sym(4);
        assert_eq!(s4.p_core(2).unwrap().order_u64(), Some(4));
        assert_eq!(s4.p_prime_core(2).unwrap().order_u64(), Some(1));
        let a4c3 = b::direct_product(&b::alt(4), &b::cyclic(3).unwrap());
        assert_eq!(a4c3.p_prime_core(2).unwrap().order_u64(), Some(3));
    }

    #[test]
    fn residuals() {
        assert_eq!(b::sym(3).p_residual(3).unwrap().order_u64(), Some(3));
        assert_eq!(b::sym(4).p_residual(2).unwrap().order_u64(), Some(24));
        assert_eq!(
            b::cyclic(6).unwrap().p_residual(2).unwrap().order_u64(),
            Some(2)
        );
    }
}
