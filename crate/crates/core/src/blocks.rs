//! `p`-blocks of irreducible characters, defects, heights and the minimal
//! heights `mh(B_0)` and `mh(D)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith;
use crate::chartab::{self, CharacterTable};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::gf::{ExtElem, ExtField};
use crate::permgroup::PermGroup;

/// A ring homomorphism `Z[ζ_e] -> F_{p^m}` sending `ζ_e` to `γ^t`, where
/// `γ` has order `e'` (the `p'`-part of `e`).
#[derive(Clone, Debug)]
pub struct Reduction {
    p: u64,
    conductor: u64,
    field: ExtField,
    /// Image of `ζ_e^i` for `0 <= i < φ(e)`.
    basis_images: Vec<ExtElem>,
}

impl Reduction {
    pub fn new(p: u64, e: u64) -> Self {
        Self::twisted(p, e, 1)
    }

    /// The reduction composed with `ζ ↦ ζ^t`; different `t` prime to `e'`
    /// and not in `<p> mod e'` give different prime ideals over `p`.
    pub fn twisted(p: u64, e: u64, t: u64) -> Self {
        let e_prime = e / arith::p_part(e, p);
        assert_eq!(arith::gcd(t, e_prime), 1);
        let m = arith::multiplicative_order(p % e_prime.max(1), e_prime).max(1) as usize;
        let field = ExtField::new(p, m);
        let gamma = if e_prime == 1 {
            field.one()
        } else {
            field.pow(&field.element_of_order(e_prime), t)
        };
        let phi = arith::euler_phi(e) as usize;
        let mut basis_images = Vec::with_capacity(phi);
        let mut cur = field.one();
        for _ in 0..phi {
            basis_images.push(cur.clone());
            cur = field.mul(&cur, &gamma);
        }
        Reduction {
            p,
            conductor: e,
            field,
            basis_images,
        }
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    /// Image of an algebraic integer given by integral power-basis
    /// coefficients.
    pub fn reduce_coeffs(&self, coeffs: &[BigInt]) -> ExtElem {
        let pb = BigInt::from(self.p);
        let mut acc = self.field.zero();
        for (c, img) in coeffs.iter().zip(&self.basis_images) {
            let r = ((c % &pb) + &pb) % &pb;
            let r = r.to_u64().unwrap();
            if r != 0 {
                acc = self.field.add(&acc, &self.field.scale(img, r));
            }
        }
        acc
    }

    pub fn reduce(&self, x: &Cyclotomic) -> ExtElem {
        assert_eq!(x.conductor(), self.conductor);
        assert!(x.is_integral(), "reduction of a non-integral element");
        let coeffs: Vec<BigInt> = x.coeffs().iter().map(|q| q.to_integer()).collect();
        self.reduce_coeffs(&coeffs)
    }
}

/// Assignment of the rows of a character table to `p`-blocks.
///
/// Blocks are numbered by their first row, so the principal block is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    pub p: u64,
    /// `|G|_p = p^a`.
    pub a: u32,
    pub block_of: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    pub defects: Vec<u32>,
    pub principal_id: usize,
}

impl BlockPartition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn principal_block(&self) -> &[usize] {
        &self.blocks[self.principal_id]
    }
}

/// Central character values `ω_χ(K_j) = |K_j| χ(g_j) / χ(1)` as integral
/// power-basis coefficients.
pub fn central_character(table: &CharacterTable, chi: usize) -> Vec<Vec<BigInt>> {
    let d = BigInt::from(table.degrees()[chi]);
    (0..table.num_classes())
        .map(|j| {
            let size = BigInt::from(table.classes().sizes()[j]);
            table
                .value(chi, j)
                .coeffs()
                .iter()
                .map(|q| {
                    let num = q.to_integer() * &size;
                    assert!((&num % &d).is_zero(), "central character is not integral");
                    num / &d
                })
                .collect()
        })
        .collect()
}

pub fn block_distribution(table: &CharacterTable, p: u64) -> BlockPartition {
    block_distribution_with(table, &Reduction::new(p, table.conductor()))
}

pub fn block_distribution_with(table: &CharacterTable, red: &Reduction) -> BlockPartition {
    let p = red.p;
    let k = table.num_classes();
    let a = arith::valuation(table.group_order(), p);
    let images: Vec<Vec<ExtElem>> = (0..k)
        .map(|chi| {
            central_character(table, chi)
                .iter()
                .map(|c| red.reduce_coeffs(c))
                .collect()
        })
        .collect();
    let mut block_of = vec![usize::MAX; k];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for chi in 0..k {
        if block_of[chi] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let members: Vec<usize> = (chi..k)
            .filter(|&psi| block_of[psi] == usize::MAX && images[psi] == images[chi])
            .collect();
        for &m in &members {
            block_of[m] = id;
        }
        blocks.push(members);
    }
    let defects = blocks
        .iter()
        .map(|b| {
            let min_v = b
                .iter()
                .map(|&chi| arith::valuation(table.degrees()[chi], p))
                .min()
                .unwrap();
            a - min_v
        })
        .collect();
    BlockPartition {
        p,
        a,
        block_of,
        blocks,
        defects,
        principal_id: 0,
    }
}

/// Heights of all rows and the two minimal heights (`None` = infinity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightProfile {
    pub heights: Vec<u32>,
    pub mh_b0: Option<u32>,
    pub mh_d: Option<u32>,
}

/// `mh` of a `p`-group from its degrees: least `log_p φ(1)` over `φ(1) > 1`.
pub fn mh_of_degrees(degrees: &[u64], p: u64) -> Option<u32> {
    degrees
        .iter()
        .filter(|&&d| d > 1)
        .map(|&d| arith::valuation(d, p))
        .min()
}

pub fn height_profile(
    table: &CharacterTable,
    part: &BlockPartition,
    sylow_table: &CharacterTable,
) -> HeightProfile {
    let mut profile = heights(table, part);
    profile.mh_d = mh_of_degrees(sylow_table.degrees(), part.p);
    profile
}

/// Heights and `mh(B_0)`; `mh_d` is left unset.
pub fn heights(table: &CharacterTable, part: &BlockPartition) -> HeightProfile {
    let heights: Vec<u32> = (0..table.num_classes())
        .map(|chi| {
            let b = part.block_of[chi];
            arith::valuation(table.degrees()[chi], part.p) - (part.a - part.defects[b])
        })
        .collect();
    let mh_b0 = part
        .principal_block()
        .iter()
        .map(|&chi| heights[chi])
        .filter(|&h| h > 0)
        .min();
    HeightProfile {
        heights,
        mh_b0,
        mh_d: None,
    }
}

/// Pairs `(B, b)` such that the block `B` of `G` covers the block `b` of
/// the normal subgroup `N`.
pub fn covering_blocks(
    g: &CharacterTable,
    g_part: &BlockPartition,
    n: &CharacterTable,
    n_part: &BlockPartition,
) -> Result<Vec<(usize, usize)>> {
    let m = chartab::restriction_constituents(g, n)?;
    let mut pairs = std::collections::BTreeSet::new();
    for (chi, row) in m.iter().enumerate() {
        for (theta, &mult) in row.iter().enumerate() {
            if mult > 0 {
                pairs.insert((g_part.block_of[chi], n_part.block_of[theta]));
            }
        }
    }
    Ok(pairs.into_iter().collect())
}

/// Outcome of the covering test for a normal subgroup `N` with Sylow `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringCheck {
    /// `C_G(Q) <= N`.
    pub hypothesis: bool,
    /// Blocks of `G` covering `B_0(N)`.
    pub covering_principal: Vec<usize>,
    /// `Irr(G/N)` is contained in `Irr(B_0(G))`.
    pub quotient_in_principal: bool,
}

impl CoveringCheck {
    /// The implication "hypothesis ⇒ B_0(G) alone covers B_0(N)".
    pub fn holds(&self) -> bool {
        !self.hypothesis || (self.covering_principal == [0] && self.quotient_in_principal)
    }
}

pub fn principal_covering_check(g: &PermGroup, n: &PermGroup, p: u64) -> Result<CoveringCheck> {
    if !g.is_normal_subgroup(n) {
        return Err(Error::NotNormal);
    }
    let q = n.sylow(p)?;
    let c = g.centralizer(&q)?;
    let hypothesis = n.contains_group(&c);
    let tg = chartab::character_table(g)?;
    let tn = chartab::character_table(n)?;
    let pg = block_distribution(&tg, p);
    let pn = block_distribution(&tn, p);
    let covering_principal = covering_blocks(&tg, &pg, &tn, &pn)?
        .into_iter()
        .filter(|&(_, b)| b == pn.principal_id)
        .map(|(bg, _)| bg)
        .collect();
    let quotient_in_principal = tg
        .characters_with_kernel_containing(n)
        .iter()
        .all(|&chi| pg.block_of[chi] == pg.principal_id);
    Ok(CoveringCheck {
        hypothesis,
        covering_principal,
        quotient_in_principal,
    })
}

/// `(O_{p'}(G) = 1 and C_G(O_p(G)) <= O_p(G), single block)`; the second
/// entry is evaluated only when the first holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstrainedCheck {
    pub hypothesis: bool,
    pub single_block: Option<bool>,
}

pub fn is_p_constrained_single_block(g: &PermGroup, p: u64) -> Result<ConstrainedCheck> {
    let opp = g.p_prime_core(p)?;
    let op = g.p_core(p)?;
    let hypothesis = opp.is_trivial() && op.contains_group(&g.centralizer(&op)?);
    let single_block = if hypothesis {
        let t = chartab::character_table(g)?;
        Some(block_distribution(&t, p).num_blocks() == 1)
    } else {
        None
    };
    Ok(ConstrainedCheck {
        hypothesis,
        single_block,
    })
}

/// JSON block report: rows per block, defects, heights and minimal heights.
pub fn block_report_json(
    table: &CharacterTable,
    part: &BlockPartition,
    profile: &HeightProfile,
) -> serde_json::Value {
    let blocks: Vec<serde_json::Value> = part
        .blocks
        .iter()
        .enumerate()
        .map(|(id, rows)| {
            serde_json::json!({
                "id": id,
                "principal": id == part.principal_id,
                "defect": part.defects[id],
                "rows": rows,
                "degrees": rows.iter().map(|&r| table.degrees()[r]).collect::<Vec<_>>(),
                "heights": rows.iter().map(|&r| profile.heights[r]).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "p": part.p,
        "order": table.group_order(),
        "sylow_exponent": part.a,
        "blocks": blocks,
        "mh_b0": profile.mh_b0,
        "mh_d": profile.mh_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;
    use crate::chartab::character_table;

    fn partition(g: &PermGroup, p: u64) -> (CharacterTable, BlockPartition) {
        let t = character_table(g).unwrap();
        let part = block_distribution(&t, p);
        (t, part)
    }

    /// Oracle: blocks by brute force on rational central characters.
    /// Valid when all values are rational integers.
    fn rational_blocks(t: &CharacterTable, p: u64) -> Vec<Vec<usize>> {
        let k = t.num_classes();
        let om: Vec<Vec<i64>> = (0..k)
            .map(|chi| {
                (0..k)
                    .map(|j| {
                        let v = t.value(chi, j).to_integer().unwrap();
                        let w = v * t.classes().sizes()[j] as i64 / t.degrees()[chi] as i64;
                        w.to_i64().unwrap().rem_euclid(p as i64)
                    })
                    .collect()
            })
            .collect();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for chi in 0..k {
            if let Some(b) = out.iter_mut().find(|b| om[b[0]] == om[chi]) {
                b.push(chi);
            } else {
                out.push(vec![chi]);
            }
        }
        out
    }

    #[test]
    fn sym3_and_sym4() {
        let (t, part) = partition(&b::sym(3), 2);
        assert_eq!(part.num_blocks(), 2);
        let two = t.degrees().iter().position(|&d| d == 2).unwrap();
        let b2 = part.block_of[two];
        assert_eq!(part.blocks[b2], vec![two]);
        assert_eq!(part.defects[b2], 0);
        assert_eq!(partition(&b::sym(3), 3).1.num_blocks(), 1);
        let (t4, p4) = partition(&b::sym(4), 2);
        assert_eq!(p4.num_blocks(), 1);
        assert_eq!(p4.blocks, rational_blocks(&t4, 2));
    }

    #[test]
    fn rational_oracle_agrees() {
        for (g, p) in [
            (b::sym(5), 2),
            (b::sym(5), 3),
            (b::sym(5), 5),
            (b::sym(6), 3),
        ] {
            let (t, part) = partition(&g, p);
            assert_eq!(part.blocks, rational_blocks(&t, p));
        }
    }

    #[test]
    fn heights_of_sym4() {
        let s4 = b::sym(4);
        let (t, part) = partition(&s4, 2);
        let st = character_table(&s4.sylow(2).unwrap()).unwrap();
        let h = height_profile(&t, &part, &st);
        assert_eq!(h.heights, vec![0, 0, 1, 0, 0]);
        assert_eq!(h.mh_b0, Some(1));
        assert_eq!(h.mh_d, Some(1));
    }

    #[test]
    fn sl2_3_at_two() {
        let g = b::sl2(3).unwrap();
        let (t, part) = partition(&g, 2);
        assert_eq!(part.num_blocks(), 1);
        let st = character_table(&g.sylow(2).unwrap()).unwrap();
        let h = height_profile(&t, &part, &st);
        for (chi, &d) in t.degrees().iter().enumerate() {
            if d == 2 {
                assert_eq!(h.heights[chi], 1);
            }
        }
        assert_eq!((h.mh_b0, h.mh_d), (Some(1), Some(1)));
    }

    #[test]
    fn partition_does_not_depend_on_prime_ideal() {
        for (g, p) in [
            (b::psl2(7).unwrap(), 2),
            (b::alt(5), 2),
            (b::psl2(11).unwrap(), 3),
        ] {
            let t = character_table(&g).unwrap();
            let e = t.conductor();
            let e_prime = e / arith::p_part(e, p);
            let twist = (2..e_prime)
                .find(|&s| {
                    arith::gcd(s, e_prime) == 1
                        && (0..e_prime).all(|i| arith::mod_pow(p, i, e_prime) != s)
                })
                .unwrap_or(1);
            let a = block_distribution_with(&t, &Reduction::new(p, e));
            let b2 = block_distribution_with(&t, &Reduction::twisted(p, e, twist));
            assert_eq!(a, b2);
        }
    }

    #[test]
    fn covering_examples() {
        let s4 = b::sym(4);
        let v4 = s4.p_core(2).unwrap();
        let tg = character_table(&s4).unwrap();
        let tn = character_table(&v4).unwrap();
        let pg = block_distribution(&tg, 2);
        let pn = block_distribution(&tn, 2);
        let rel = covering_blocks(&tg, &pg, &tn, &pn).unwrap();
        assert!((0..pg.num_blocks()).all(|bg| rel.contains(&(bg, 0))));

        let s3 = b::sym(3);
        let a3 = s3.derived_subgroup();
        let c = principal_covering_check(&s3, &a3, 3).unwrap();
        assert!(c.hypothesis);
        assert_eq!(c.covering_principal, vec![0]);
        assert!(c.holds());

        let same = principal_covering_check(&s4, &s4, 2).unwrap();
        assert!(same.holds());
    }

    #[test]
    fn constrained() {
        let c = is_p_constrained_single_block(&b::sym(4), 2).unwrap();
        assert_eq!(
            c,
            ConstrainedCheck {
                hypothesis: true,
                single_block: Some(true)
            }
        );
        let a5 = is_p_constrained_single_block(&b::alt(5), 2).unwrap();
        assert!(!a5.hypothesis);
        let q8 = is_p_constrained_single_block(&b::quaternion(8).unwrap(), 2).unwrap();
        assert_eq!(q8.single_block, Some(true));
    }
}
