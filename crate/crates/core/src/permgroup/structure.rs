use serde::Serialize;

use super::PermGroup;
use crate::arith;
use crate::error::Result;

impl PermGroup {
    /// A Sylow `p`-subgroup, grown one factor `p` at a time inside
    /// successive normalizers.
    pub fn sylow(&self, p: u64) -> Result<PermGroup> {
        let n = self.order_within("sylow", super::enumeration_bound())?;
        let target = arith::p_part(n, p);
        let mut current = PermGroup::trivial(self.degree);
        let mut size = 1u64;
        while size < target {
            let normalizer = if size == 1 {
                self.clone()
            } else {
                self.normalizer(&current)?
            };
            let elems = normalizer.element_index()?;
            // Some x of N(P) outside P has x^p in P, because |N(P)/P| is
            // divisible by p whenever P is not yet Sylow.
            let x = elems
                .elements()
                .iter()
                .find(|x| !current.contains(x) && current.contains(&x.pow(p as i64)))
                .expect("Cauchy's theorem in N(P)/P")
                .clone();
            let mut gens = current.generators().to_vec();
            gens.push(x);
            current = PermGroup::new(self.degree, gens)?;
            size *= p;
            debug_assert_eq!(current.order_u64(), Some(size));
        }
        Ok(current)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorKind {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "p'")]
    PPrime,
}

/// The ascending `(p,p')`-series `1 <= O_p <= O_{p,p'} <= ...` with trivial
/// factors dropped.
///
/// `terms[0]` is the trivial group; factor `terms[i+1] / terms[i]` has kind
/// `kinds[i]`.
#[derive(Clone, Debug)]
pub struct SubnormalSeries {
    pub p: u64,
    pub terms: Vec<PermGroup>,
    pub kinds: Vec<FactorKind>,
    pub reaches_group: bool,
    pub p_length: Option<usize>,
}

impl PermGroup {
    pub fn pp_series(&self, p: u64) -> Result<SubnormalSeries> {
        let all = self.normal_subgroups()?;
        let full = all.last().expect("the group itself is normal").clone();
        let mut current = all[0].clone();
        let mut terms = vec![current.group.clone()];
        let mut kinds = Vec::new();
        let mut stalled = 0;
        let mut kind = FactorKind::P;
        while stalled < 2 && current.order < full.order {
            let next = match kind {
                FactorKind::PPrime => {
                    self.largest_normal_over(&current.classes, current.order, |k| k % p != 0)?
                }
                FactorKind::P => {
                    self.largest_normal_over(&current.classes, current.order, |k| {
                        arith::is_p_power(k, p)
                    })?
                }
            };
            if next.order > current.order {
                terms.push(next.group.clone());
                kinds.push(kind);
                current = next;
                stalled = 0;
            } else {
                stalled += 1;
            }
            kind = match kind {
                FactorKind::P => FactorKind::PPrime,
                FactorKind::PPrime => FactorKind::P,
            };
        }
        let reaches_group = current.order == full.order;
        let p_length = reaches_group.then(|| kinds.iter().filter(|&&k| k == FactorKind::P).count());
        Ok(SubnormalSeries {
            p,
            terms,
            kinds,
            reaches_group,
            p_length,
        })
    }

    pub fn is_p_solvable(&self, p: u64) -> Result<bool> {
        let n = self.order();
        if arith::valuation_big(&n, p) == 0 || self.is_solvable() {
            return Ok(true);
        }
        Ok(self.pp_series(p)?.reaches_group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    fn term_orders(s: &SubnormalSeries) -> Vec<u64> {
        s.terms.iter().map(|t| t.order_u64().unwrap()).collect()
    }

    #[test]
    fn sylow_orders() {
        let s4 = b::sym(4);
        let p2 = s4.sylow(2).unwrap();
        assert_eq!(p2.order_u64(), Some(8));
        assert!(!p2.is_abelian());
        assert!(s4.contains_group(&p2));
        assert_eq!(s4.sylow(3).unwrap().order_u64(), Some(3));
        assert_eq!(b::alt(5).sylow(5).unwrap().order_u64(), Some(5));
        assert_eq!(b::alt(5).sylow(7).unwrap().order_u64(), Some(1));
        assert_eq!(b::sym(8).sylow(2).unwrap().order_u64(), Some(128));
    }

    #[test]
    fn pp_series_examples() {
        let s = b::sym(4).pp_series(2).unwrap();
        assert_eq!(term_orders(&s), vec![1, 4, 12, 24]);
        assert_eq!(
            s.kinds,
            vec![FactorKind::P, FactorKind::PPrime, FactorKind::P]
        );
        assert_eq!(s.p_length, Some(2));

        let q = b::quaternion(8).unwrap().pp_series(2).unwrap();
        assert_eq!(term_orders(&q), vec![1, 8]);
        assert_eq!(q.p_length, Some(1));

        let a5 = b::alt(5).pp_series(2).unwrap();
        assert_eq!(term_orders(&a5), vec![1]);
        assert!(!a5.reaches_group);
        assert!(!b::alt(5).is_p_solvable(2).unwrap());
        assert!(b::alt(5).is_p_solvable(7).unwrap());
    }

    #[test]
    fn series_terms_are_normal_with_pure_factors() {
        for (g, p) in [(b::sym(4), 3), (b::sl2(3).unwrap(), 2), (b::sym(5), 5)] {
            let s = g.pp_series(p).unwrap();
            for (i, k) in s.kinds.iter().enumerate() {
                assert!(g.is_normal_subgroup(&s.terms[i + 1]));
                let idx = s.terms[i + 1].order_u64().unwrap() / s.terms[i].order_u64().unwrap();
                match k {
                    FactorKind::P => assert!(arith::is_p_power(idx, p)),
                    FactorKind::PPrime => assert_ne!(idx % p, 0),
                }
            }
            assert_eq!(s.reaches_group, g.is_p_solvable(p).unwrap());
        }
    }
}
