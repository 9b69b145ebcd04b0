use std::sync::Arc;

use super::{ElementIndex, PermGroup};
use crate::error::Result;
use crate::perm::Permutation;

/// Conjugacy classes of a group, identity class first.
///
/// Classes are ordered by element order, then size, then by the position
/// of their first element in the deterministic element list.
#[derive(Debug)]
pub struct ConjugacyClassData {
    elements: Arc<ElementIndex>,
    representatives: Vec<Permutation>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    /// Class index of every element, by element position.
    class_of: Vec<u32>,
    /// Element positions of each class, ascending.
    members: Vec<Vec<u32>>,
}

impl ConjugacyClassData {
    fn compute(group: &PermGroup, elements: Arc<ElementIndex>) -> Self {
        let n = elements.len();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw_members: Vec<Vec<u32>> = Vec::new();
        let gens = group.generators();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = raw_members.len() as u32;
            raw_class[start] = id;
            let mut orbit = vec![start as u32];
            let mut i = 0;
            while i < orbit.len() {
                let x = &elements.elements()[orbit[i] as usize];
                for s in gens {
                    let y = x.conjugate_by(s);
                    let j = elements.index_of(&y).expect("group is closed");
                    if raw_class[j] == u32::MAX {
                        raw_class[j] = id;
                        orbit.push(j as u32);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            raw_members.push(orbit);
        }

        let raw_orders: Vec<u64> = raw_members
            .iter()
            .map(|m| elements.elements()[m[0] as usize].order())
            .collect();
        let mut perm: Vec<usize> = (0..raw_members.len()).collect();
        perm.sort_by_key(|&c| (raw_orders[c], raw_members[c].len(), raw_members[c][0]));
        let mut rank = vec![0u32; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            rank[old] = new as u32;
        }

        let class_of = raw_class.iter().map(|&c| rank[c as usize]).collect();
        let members: Vec<Vec<u32>> = perm.iter().map(|&c| raw_members[c].clone()).collect();
        let representatives = members
            .iter()
            .map(|m| elements.elements()[m[0] as usize].clone())
            .collect();
        let sizes = members.iter().map(|m| m.len() as u64).collect();
        let orders = perm.iter().map(|&c| raw_orders[c]).collect();
        ConjugacyClassData {
            elements,
            representatives,
            sizes,
            orders,
            class_of,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn representatives(&self) -> &[Permutation] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn group_order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn element_index(&self) -> &ElementIndex {
        &self.elements
    }

    /// Element positions (into the group's element list) of class `c`.
    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[c]
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    /// Class containing `g`, or `None` if `g` is not in the group.
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.class_of[i] as usize)
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let g = self.representatives[c].pow(k);
        self.class_of(&g).expect("powers stay in the group")
    }

    /// Class of `g^-1` for `g` in class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    /// Explicit `x` with `rep(c)^x == g`, if `g` lies in class `c`.
    pub fn conjugator(&self, group: &PermGroup, c: usize, g: &Permutation) -> Option<Permutation> {
        if self.class_of(g) != Some(c) {
            return None;
        }
        let rep = &self.representatives[c];
        let mut found: Vec<(Permutation, Permutation)> = vec![(rep.clone(), group.identity())];
        let mut seen = std::collections::HashSet::new();
        seen.insert(rep.clone());
        let mut i = 0;
        while i < found.len() {
            let (x, conj) = found[i].clone();
            if &x == g {
                return Some(conj);
            }
            for s in group.generators() {
                let y = x.conjugate_by(s);
                if seen.insert(y.clone()) {
                    found.push((y, conj.compose(s)));
                }
            }
            i += 1;
        }
        None
    }
}

impl PermGroup {
    pub fn conjugacy_classes(&self) -> Result<Arc<ConjugacyClassData>> {
        if let Some(c) = self.classes.get() {
            return Ok(c.clone());
        }
        let elements = self.element_index()?;
        Ok(self
            .classes
            .get_or_init(|| Arc::new(ConjugacyClassData::compute(self, elements)))
            .clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    fn brute_force_class_count(g: &PermGroup) -> usize {
        let els = g.elements().unwrap();
        let mut seen = std::collections::HashSet::new();
        let mut count = 0;
        for x in &els {
            if seen.contains(x) {
                continue;
            }
            count += 1;
            for y in &els {
                seen.insert(x.conjugate_by(y));
            }
        }
        count
    }

    #[test]
    fn sym3_classes() {
        let cl = b::sym(3).conjugacy_classes().unwrap();
        assert_eq!(cl.sizes(), &[1, 3, 2]);
        assert!(cl.representatives()[0].is_identity());
    }

    #[test]
    fn class_counts_match_brute_force() {
        for g in [
            b::quaternion(8).unwrap(),
            b::elementary_abelian(2, 3).unwrap(),
            b::sym(5),
            b::psl2(7).unwrap(),
        ] {
            let cl = g.conjugacy_classes().unwrap();
            assert_eq!(cl.len(), brute_force_class_count(&g));
            assert_eq!(cl.sizes().iter().sum::<u64>(), g.order_u64().unwrap());
            for &s in cl.sizes() {
                assert_eq!(cl.group_order() % s, 0);
            }
        }
        assert_eq!(
            b::quaternion(8).unwrap().conjugacy_classes().unwrap().len(),
            5
        );
        assert_eq!(
            b::elementary_abelian(2, 3)
                .unwrap()
                .conjugacy_classes()
                .unwrap()
                .len(),
            8
        );
    }

    #[test]
    fn conjugators_are_explicit() {
        let g = b::sym(4);
        let cl = g.conjugacy_classes().unwrap();
        for c in 0..cl.len() {
            for &i in cl.members(c) {
                let x = &cl.element_index().elements()[i as usize];
                let t = cl.conjugator(&g, c, x).unwrap();
                assert_eq!(&cl.representatives()[c].conjugate_by(&t), x);
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let big = b::sym(11);
        assert!(matches!(
            big.conjugacy_classes(),
            Err(crate::error::Error::BoundExceeded { .. })
        ));
    }
}
