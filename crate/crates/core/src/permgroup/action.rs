use std::sync::Arc;

use super::{ElementIndex, PermGroup};
use crate::error::{bound, Error, Result};
use crate::perm::Permutation;

/// A homomorphism from a group onto a permutation group on cosets, given by
/// the coset label of every element.
#[derive(Clone, Debug)]
pub struct ActionHom {
    elements: Arc<ElementIndex>,
    coset_of: Vec<u32>,
    representatives: Vec<Permutation>,
}

impl ActionHom {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// Coset label of an element of the source group.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.index_of(g).map(|i| self.coset_of[i] as usize)
    }

    /// Image of an element of the source group.
    pub fn apply(&self, g: &Permutation) -> Option<Permutation> {
        let mut images = Vec::with_capacity(self.index());
        for r in &self.representatives {
            images.push(self.coset_of(&r.compose(g))? as u32);
        }
        Some(Permutation::from_images_unchecked(images))
    }
}

/// `G/N` realized on the cosets of `N`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub image: PermGroup,
    /// Images of the source generators, in order.
    pub generator_images: Vec<Permutation>,
    pub hom: ActionHom,
}

impl PermGroup {
    /// Faithful permutation representation of `G/N` on the right cosets of
    /// the normal subgroup `N`.
    pub fn coset_action(&self, n: &PermGroup) -> Result<CosetAction> {
        if !self.is_normal_subgroup(n) {
            return Err(Error::NotNormal);
        }
        let elements = self.element_index()?;
        let limit = super::enumeration_bound();
        let order = elements.len() as u64;
        let n_elems = n.elements()?;
        let index = order / n_elems.len() as u64;
        if index > limit {
            return Err(bound("coset action index", limit, index));
        }
        let mut coset_of = vec![u32::MAX; elements.len()];
        let mut representatives = Vec::new();
        for (i, g) in elements.elements().iter().enumerate() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let label = representatives.len() as u32;
            for x in &n_elems {
                let j = elements.index_of(&x.compose(g)).expect("closed");
                coset_of[j] = label;
            }
            representatives.push(g.clone());
        }
        let hom = ActionHom {
            elements,
            coset_of,
            representatives,
        };
        let generator_images: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| hom.apply(g).expect("generator lies in the group"))
            .collect();
        let image = PermGroup::new(hom.index(), generator_images.clone())?;
        Ok(CosetAction {
            image,
            generator_images,
            hom,
        })
    }

    /// Permutation group induced on the images of `points` (a list of
    /// hashable objects closed under the action).
    pub fn induced_action<T, F>(&self, points: &[T], act: F) -> Result<PermGroup>
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &Permutation) -> T,
    {
        let pos: std::collections::HashMap<&T, u32> = points
            .iter()
            .enumerate()
            .map(|(i, x)| (x, i as u32))
            .collect();
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut images = Vec::with_capacity(points.len());
            for x in points {
                let y = act(x, g);
                match pos.get(&y) {
                    Some(&j) => images.push(j),
                    None => return Err(Error::NotPermuted),
                }
            }
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::new(points.len(), gens)
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog::builders as b;
    use crate::error::Error;

    #[test]
    fn quotients() {
        let s4 = b::sym(4);
        let v4 = s4.p_core(2).unwrap();
        let q = s4.coset_action(&v4).unwrap();
        assert_eq!(q.image.order_u64(), Some(6));
        assert!(!q.image.is_abelian());
        let a4 = s4.derived_subgroup();
        assert_eq!(s4.coset_action(&a4).unwrap().image.order_u64(), Some(2));
        assert_eq!(s4.coset_action(&s4).unwrap().image.order_u64(), Some(1));
    }

    #[test]
    fn quotient_order_times_kernel() {
        let g = b::sl2(3).unwrap();
        for n in g.normal_subgroups().unwrap().iter() {
            let q = g.coset_action(&n.group).unwrap();
            assert_eq!(q.image.order_u64().unwrap() * n.order, 24);
        }
    }

    #[test]
    fn rejects_non_normal() {
        let s4 = b::sym(4);
        let h = s4.point_stabilizer(0);
        assert!(matches!(s4.coset_action(&h), Err(Error::NotNormal)));
    }
}
