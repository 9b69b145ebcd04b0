use std::fmt;

use serde::Serialize;

use crate::error::{bound, Result};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Largest number of `k`-colourings scanned by the regular-orbit search.
const MAX_ASSIGNMENTS: u64 = 1 << 26;

/// An ordered `k`-tuple of disjoint subsets covering `{0,...,n-1}`; parts may
/// be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrderedSetPartition {
    pub parts: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Build from a part label per point.
    pub fn from_labels(labels: &[u8], k: usize) -> Self {
        let mut parts = vec![Vec::new(); k];
        for (x, &l) in labels.iter().enumerate() {
            parts[l as usize].push(x);
        }
        OrderedSetPartition { parts }
    }

    pub fn labels(&self) -> Vec<u8> {
        let n = self.parts.iter().map(Vec::len).sum();
        let mut out = vec![0u8; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &x in part {
                out[x] = i as u8;
            }
        }
        out
    }

    /// Whether `g` maps every part onto itself.
    pub fn is_fixed_by(&self, g: &Permutation) -> bool {
        let labels = self.labels();
        (0..labels.len()).all(|x| labels[g.image(x)] == labels[x])
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let pts: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One generator for each subgroup of prime order. A subgroup acts with
/// trivial stabilizer iff none of these fixes the point.
fn prime_order_generators(g: &PermGroup) -> Result<Vec<Permutation>> {
    let elems = g.element_index()?;
    let mut covered = vec![false; elems.len()];
    let mut out = Vec::new();
    for (i, x) in elems.elements().iter().enumerate() {
        if covered[i] || x.is_identity() {
            continue;
        }
        let ord = x.order();
        if !crate::arith::is_prime(ord) {
            continue;
        }
        for k in 1..ord {
            if let Some(j) = elems.index_of(&x.pow(k as i64)) {
                covered[j] = true;
            }
        }
        out.push(x.clone());
    }
    Ok(out)
}

/// First ordered `k`-part partition (lexicographic in the `k`-ary label
/// string, point 0 most significant) whose stabilizer in `p` is trivial.
pub fn regular_orbit_on_partitions(p: &PermGroup, k: usize) -> Result<Option<OrderedSetPartition>> {
    let n = p.degree();
    let total = (k as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= MAX_ASSIGNMENTS);
    let Some(total) = total else {
        return Err(bound(
            "ordered set partitions",
            MAX_ASSIGNMENTS,
            format!("{}^{}", k, n),
        ));
    };
    if k == 0 {
        return Ok(None);
    }
    let gens = prime_order_generators(p)?;
    let images: Vec<&[u32]> = gens.iter().map(|g| g.images()).collect();
    let mut labels = vec![0u8; n];
    for _ in 0..total {
        let regular = images
            .iter()
            .all(|im| (0..n).any(|x| labels[im[x] as usize] != labels[x]));
        if regular {
            return Ok(Some(OrderedSetPartition::from_labels(&labels, k)));
        }
        // increment, last point least significant
        for x in (0..n).rev() {
            labels[x] += 1;
            if (labels[x] as usize) < k {
                break;
            }
            labels[x] = 0;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    fn brute_force_regular(p: &PermGroup, part: &OrderedSetPartition) -> bool {
        p.elements()
            .unwrap()
            .iter()
            .all(|g| g.is_identity() || !part.is_fixed_by(g))
    }

    #[test]
    fn three_cycle_has_regular_two_partition() {
        let c3 = b::cyclic(3).unwrap();
        let w = regular_orbit_on_partitions(&c3, 2).unwrap().unwrap();
        assert!(brute_force_regular(&c3, &w));
        assert_eq!(w.parts.len(), 2);
    }

    #[test]
    fn dihedral_eight() {
        let d8 = b::dihedral(8).unwrap();
        assert_eq!(regular_orbit_on_partitions(&d8, 2).unwrap(), None);
        let w = regular_orbit_on_partitions(&d8, 3).unwrap().unwrap();
        assert!(brute_force_regular(&d8, &w));
    }

    #[test]
    fn display_is_one_based() {
        let w = OrderedSetPartition::from_labels(&[0, 1, 2, 2], 3);
        assert_eq!(w.to_string(), "({1},{2},{3,4})");
        assert_eq!(w.labels(), vec![0, 1, 2, 2]);
    }

    #[test]
    fn too_many_assignments() {
        assert!(regular_orbit_on_partitions(&b::sym(20), 3).is_err());
    }
}
