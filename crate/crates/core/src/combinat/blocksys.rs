use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::concealed::{is_p_concealed, ConcealedReport};
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        Some((lo, hi))
    }
}

/// Smallest block of `g` containing all of `seed` (sorted).
pub fn minimal_block(g: &PermGroup, seed: &[usize]) -> Vec<usize> {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    for w in seed.windows(2) {
        if let Some(pair) = uf.union(w[0], w[1]) {
            queue.push(pair);
        }
    }
    while let Some((a, b)) = queue.pop() {
        for s in g.generators() {
            if let Some(pair) = uf.union(s.image(a), s.image(b)) {
                queue.push(pair);
            }
        }
    }
    let Some(&first) = seed.first() else {
        return Vec::new();
    };
    let root = uf.find(first);
    (0..n).filter(|&x| uf.find(x) == root).collect()
}

/// Whether a transitive group has only the trivial block systems.
pub fn is_primitive(g: &PermGroup) -> Result<bool> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = g.degree();
    Ok((1..n).all(|b| minimal_block(g, &[0, b]).len() == n))
}

/// Every proper block containing point 0, smallest first.
fn blocks_through_zero(g: &PermGroup) -> Vec<Vec<usize>> {
    let n = g.degree();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut stack = vec![vec![0]];
    seen.insert(vec![0]);
    while let Some(block) = stack.pop() {
        for c in 0..n {
            if block.binary_search(&c).is_ok() {
                continue;
            }
            let mut seed = block.clone();
            seed.push(c);
            let bigger = minimal_block(g, &seed);
            if bigger.len() < n && seen.insert(bigger.clone()) {
                stack.push(bigger);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().filter(|b| b.len() > 1).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// System of imprimitivity from a block of largest order, the kernel of the
/// action on it, and the induced permutation group on the blocks.
#[derive(Clone, Debug)]
pub struct BlockSystem {
    /// Blocks sorted by smallest point; block 0 contains point 0.
    pub blocks: Vec<Vec<usize>>,
    pub kernel: PermGroup,
    pub induced: PermGroup,
}

pub fn maximal_block_system(g: &PermGroup) -> Result<BlockSystem> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let all = blocks_through_zero(g);
    let largest = all.iter().map(Vec::len).max().ok_or(Error::Primitive)?;
    let delta = all
        .into_iter()
        .find(|b| b.len() == largest)
        .expect("nonempty");
    let as_u32 = |b: &[usize]| b.iter().map(|&x| x as u32).collect::<Vec<u32>>();
    let mut translates: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack = vec![as_u32(&delta)];
    translates.insert(as_u32(&delta));
    while let Some(b) = stack.pop() {
        for s in g.generators() {
            let img = s.image_of_set(&b);
            if translates.insert(img.clone()) {
                stack.push(img);
            }
        }
    }
    let blocks32: Vec<Vec<u32>> = translates.into_iter().collect();
    let induced = g.induced_action(&blocks32, |b, s| s.image_of_set(b))?;
    let mut kernel = g.clone();
    for b in &blocks32 {
        let b: Vec<usize> = b.iter().map(|&x| x as usize).collect();
        kernel = kernel.setwise_stabilizer(&b);
    }
    let blocks = blocks32
        .into_iter()
        .map(|b| b.into_iter().map(|x| x as usize).collect())
        .collect();
    Ok(BlockSystem {
        blocks,
        kernel,
        induced,
    })
}

/// Implication test: if `g` is `p`-concealed, so is its induced action on a
/// maximal block system.
#[derive(Clone, Debug, Serialize)]
pub struct Lemma24cReport {
    pub p: u64,
    pub num_blocks: usize,
    pub block_size: usize,
    pub g_concealed: ConcealedReport,
    pub induced_concealed: ConcealedReport,
    pub induced_primitive: bool,
    /// The implication as stated, including `p | |G/L|`.
    pub holds: bool,
    /// The implication for the orbit condition alone: every orbit of `G/L`
    /// on sets of blocks has size prime to `p`.
    pub orbit_condition_holds: bool,
}

pub fn lemma24c_check(g: &PermGroup, p: u64) -> Result<Lemma24cReport> {
    let sys = maximal_block_system(g)?;
    let g_concealed = is_p_concealed(g, p)?;
    let induced_concealed = is_p_concealed(&sys.induced, p)?;
    let induced_primitive = is_primitive(&sys.induced)?;
    let holds = !g_concealed.concealed || induced_concealed.concealed;
    let orbit_condition_holds = !g_concealed.concealed
        || induced_concealed
            .orbit_size_counts
            .keys()
            .all(|&s| s % p != 0);
    Ok(Lemma24cReport {
        p,
        num_blocks: sys.blocks.len(),
        block_size: sys.blocks[0].len(),
        g_concealed,
        induced_concealed,
        induced_primitive,
        holds,
        orbit_condition_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    #[test]
    fn primitivity() {
        assert!(is_primitive(&b::sym(4)).unwrap());
        assert!(!is_primitive(&b::dihedral(8).unwrap()).unwrap());
        assert!(is_primitive(&b::cyclic(5).unwrap()).unwrap());
        assert!(!is_primitive(&b::cyclic(6).unwrap()).unwrap());
        let intrans = b::direct_product(&b::cyclic(2).unwrap(), &b::cyclic(2).unwrap());
        assert!(matches!(is_primitive(&intrans), Err(Error::NotTransitive)));
    }

    #[test]
    fn dihedral_block_system() {
        let sys = maximal_block_system(&b::dihedral(8).unwrap()).unwrap();
        assert_eq!(sys.blocks, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(sys.induced.order_u64(), Some(2));
        assert_eq!(sys.kernel.order_u64(), Some(4));
    }

    #[test]
    fn cyclic_six_takes_largest_blocks() {
        let sys = maximal_block_system(&b::cyclic(6).unwrap()).unwrap();
        assert_eq!(sys.blocks.len(), 2);
        assert_eq!(sys.blocks[0], vec![0, 2, 4]);
        assert!(is_primitive(&sys.induced).unwrap());
    }

    #[test]
    fn primitive_group_has_no_system() {
        assert!(matches!(
            maximal_block_system(&b::sym(4)),
            Err(Error::Primitive)
        ));
    }

    #[test]
    fn kernel_acts_trivially_on_blocks() {
        let g = b::wreath(&b::cyclic(2).unwrap(), &b::dihedral(10).unwrap()).unwrap();
        let sys = maximal_block_system(&g).unwrap();
        let n = g.order_u64().unwrap();
        assert_eq!(
            sys.kernel.order_u64().unwrap() * sys.induced.order_u64().unwrap(),
            n
        );
        let r = lemma24c_check(&g, 2).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn induced_order_can_be_prime_to_p() {
        // both factors of A5 x A5 are 3-concealed; the swap of the two blocks
        // has orbits of size 1 and 2 but order 2
        let g = b::wreath(&b::alt(5), &b::cyclic(2).unwrap()).unwrap();
        let r = lemma24c_check(&g, 3).unwrap();
        assert!(r.g_concealed.concealed);
        assert!(!r.induced_concealed.order_divisible);
        assert!(!r.holds);
        assert!(r.orbit_condition_holds);
    }
}
