use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith;
use crate::error::{bound, Result};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Largest degree for power-set enumeration.
pub const MAX_POINTS: usize = 24;

/// Byte-wise lookup tables mapping a subset bitmask through a permutation.
struct MaskMap {
    tables: Vec<[u32; 256]>,
}

impl MaskMap {
    fn new(g: &Permutation) -> Self {
        let n = g.degree();
        let tables = (0..n.div_ceil(8))
            .map(|byte| {
                let mut t = [0u32; 256];
                for (v, slot) in t.iter_mut().enumerate() {
                    for bit in 0..8 {
                        let pt = byte * 8 + bit;
                        if v >> bit & 1 == 1 && pt < n {
                            *slot |= 1 << g.image(pt);
                        }
                    }
                }
                t
            })
            .collect();
        MaskMap { tables }
    }

    #[inline]
    fn apply(&self, mask: u32) -> u32 {
        self.tables
            .iter()
            .enumerate()
            .fold(0, |acc, (i, t)| acc | t[(mask >> (8 * i) & 0xff) as usize])
    }
}

/// Orbits of `g` on all subsets of its points: `(representative mask, size)`
/// with the representative the smallest mask in its orbit, ascending.
pub fn subset_orbit_sizes(g: &PermGroup) -> Result<Vec<(u32, u64)>> {
    let n = g.degree();
    if n > MAX_POINTS {
        return Err(bound("power-set degree", MAX_POINTS as u64, n));
    }
    let maps: Vec<MaskMap> = g.generators().iter().map(MaskMap::new).collect();
    let total = 1usize << n;
    let mut seen = vec![0u64; total.div_ceil(64)];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..total {
        if seen[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        seen[start / 64] |= 1 << (start % 64);
        stack.push(start as u32);
        let mut size = 0u64;
        while let Some(m) = stack.pop() {
            size += 1;
            for map in &maps {
                let y = map.apply(m) as usize;
                if seen[y / 64] >> (y % 64) & 1 == 0 {
                    seen[y / 64] |= 1 << (y % 64);
                    stack.push(y as u32);
                }
            }
        }
        out.push((start as u32, size));
    }
    Ok(out)
}

/// Outcome of the `p`-concealed test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcealedReport {
    pub p: u64,
    pub order_divisible: bool,
    pub concealed: bool,
    /// A subset (0-based points) whose orbit size is divisible by `p`.
    pub offending_subset: Option<Vec<usize>>,
    pub offending_orbit_size: Option<u64>,
    /// Orbit size -> number of orbits of that size.
    pub orbit_size_counts: BTreeMap<u64, u64>,
}

/// `p` divides `|G|` and every orbit on the power set has `p'`-size.
pub fn is_p_concealed(g: &PermGroup, p: u64) -> Result<ConcealedReport> {
    let order_divisible = arith::valuation_big(&g.order(), p) > 0;
    let orbits = subset_orbit_sizes(g)?;
    let mut counts = BTreeMap::new();
    for &(_, s) in &orbits {
        *counts.entry(s).or_insert(0) += 1;
    }
    let bad = orbits.iter().find(|&&(_, s)| s % p == 0);
    Ok(ConcealedReport {
        p,
        order_divisible,
        concealed: order_divisible && bad.is_none(),
        offending_subset: bad.map(|&(m, _)| (0..g.degree()).filter(|i| m >> i & 1 == 1).collect()),
        offending_orbit_size: bad.map(|&(_, s)| s),
        orbit_size_counts: counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    #[test]
    fn orbit_sizes_sum_to_power_set() {
        let g = b::sym(5);
        let orbits = subset_orbit_sizes(&g).unwrap();
        assert_eq!(orbits.len(), 6);
        assert_eq!(orbits.iter().map(|o| o.1).sum::<u64>(), 32);
    }

    #[test]
    fn sym5_is_not_2_concealed() {
        let r = is_p_concealed(&b::sym(5), 2).unwrap();
        assert!(!r.concealed);
        assert_eq!(r.offending_orbit_size, Some(10));
    }

    #[test]
    fn d10_is_2_concealed() {
        let d10 = b::dihedral(10).unwrap();
        assert!(is_p_concealed(&d10, 2).unwrap().concealed);
        // not 5-concealed: the orbit of a point has size 5
        assert!(!is_p_concealed(&d10, 5).unwrap().concealed);
    }
}
