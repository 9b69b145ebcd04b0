//! Exact ordinary character tables.

mod dixon;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith;
use crate::cyclotomic::{Cyclotomic, CyclotomicField, RootSum};
use crate::error::{bound, Error, Result};
use crate::permgroup::{ConjugacyClassData, PermGroup};

pub use dixon::ClassMultiplication;

static MAX_ORDER: AtomicU64 = AtomicU64::new(20_000);
static MAX_CLASSES: AtomicU64 = AtomicU64::new(60);

/// Current `(max group order, max class count)` for table builds.
pub fn table_limits() -> (u64, u64) {
    (
        MAX_ORDER.load(Ordering::Relaxed),
        MAX_CLASSES.load(Ordering::Relaxed),
    )
}

pub fn set_table_limits(max_order: u64, max_classes: u64) {
    MAX_ORDER.store(max_order, Ordering::Relaxed);
    MAX_CLASSES.store(max_classes, Ordering::Relaxed);
}

pub fn class_mult_coefficients(classes: &ConjugacyClassData) -> ClassMultiplication {
    ClassMultiplication::compute(classes)
}

/// Irreducible characters of a group as class functions.
///
/// Row 0 is the trivial character; rows are sorted by degree. Values are
/// kept as integer combinations of `e`-th roots of unity (`e` = exponent).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: PermGroup,
    classes: Arc<ConjugacyClassData>,
    conductor: u64,
    working_prime: u64,
    degrees: Vec<u64>,
    values: Vec<Vec<RootSum>>,
}

/// Character degree data: the multiset, `cd(G)` and `b(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeData {
    pub degrees: Vec<u64>,
    pub cd: BTreeSet<u64>,
    pub b: u64,
}

/// Result of the exact orthogonality checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub rows_ok: bool,
    pub columns_ok: bool,
    pub sum_of_squares_ok: bool,
    pub square: bool,
}

impl OrthogonalityReport {
    pub fn all_ok(&self) -> bool {
        self.rows_ok && self.columns_ok && self.sum_of_squares_ok && self.square
    }
}

pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    let (max_order, max_classes) = table_limits();
    let n = group.order_within("character table group order", max_order)?;
    let classes = group.conjugacy_classes()?;
    if classes.len() as u64 > max_classes {
        return Err(bound(
            "character table class count",
            max_classes,
            classes.len(),
        ));
    }
    let e = classes
        .element_orders()
        .iter()
        .fold(1, |acc, &o| arith::lcm(acc, o));
    let mult = ClassMultiplication::compute(&classes);
    let raw = dixon::build(&classes, &mult, e);
    debug_assert_eq!(raw.degrees.iter().map(|d| d * d).sum::<u64>(), n);

    let mut order: Vec<usize> = (0..raw.degrees.len()).collect();
    // the trivial character has every value `1 = ζ^0`, so it sorts first
    // among the linear ones
    order.sort_by(|&a, &b| {
        raw.degrees[a]
            .cmp(&raw.degrees[b])
            .then_with(|| raw.values[a].cmp(&raw.values[b]))
    });
    let degrees = order.iter().map(|&i| raw.degrees[i]).collect();
    let values = order.iter().map(|&i| raw.values[i].clone()).collect();
    Ok(CharacterTable {
        group: group.clone(),
        classes,
        conductor: e,
        working_prime: raw.ell,
        degrees,
        values,
    })
}

impl CharacterTable {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &Arc<ConjugacyClassData> {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The prime `l` used for the eigenvector computation.
    pub fn working_prime(&self) -> u64 {
        self.working_prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn root_sum(&self, chi: usize, class: usize) -> &RootSum {
        &self.values[chi][class]
    }

    pub fn row_root_sums(&self, chi: usize) -> &[RootSum] {
        &self.values[chi]
    }

    pub fn value(&self, chi: usize, class: usize) -> Cyclotomic {
        self.values[chi][class].to_cyclotomic()
    }

    pub fn row(&self, chi: usize) -> Vec<Cyclotomic> {
        (0..self.num_classes())
            .map(|c| self.value(chi, c))
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.num_classes()).map(|i| self.row(i)).collect()
    }

    pub fn degree_data(&self) -> DegreeData {
        let mut degrees = self.degrees.clone();
        degrees.sort_unstable();
        let cd: BTreeSet<u64> = degrees.iter().copied().collect();
        let b = *degrees.last().unwrap();
        DegreeData { degrees, cd, b }
    }

    /// `Σ_j w_j f(j) conj(g(j))` as an integer, or `None` if it is not one.
    fn weighted_sum<F>(&self, terms: F) -> Option<BigInt>
    where
        F: Fn(&mut [i128]),
    {
        let field = CyclotomicField::get(self.conductor);
        let mut acc = vec![0i128; self.conductor as usize];
        terms(&mut acc);
        field.integer_value(&acc)
    }

    /// `|G| ⟨χ, ψ⟩` for two rows, exactly.
    pub fn scaled_inner_product(&self, chi: usize, psi: usize) -> Option<BigInt> {
        self.weighted_sum(|acc| {
            for j in 0..self.num_classes() {
                let a = &self.values[chi][j];
                let b = self.values[psi][j].conj();
                RootSum::accumulate_product(acc, self.classes.sizes()[j] as i128, a, &b);
            }
        })
    }

    /// `⟨f, ψ⟩` for an arbitrary class function given as root sums of this
    /// table's conductor, if it is an integer.
    pub fn multiplicity(&self, f: &[RootSum], psi: usize) -> Option<BigInt> {
        let n = BigInt::from(self.group_order());
        let s = self.weighted_sum(|acc| {
            for (j, fj) in f.iter().enumerate() {
                let b = self.values[psi][j].conj();
                RootSum::accumulate_product(acc, self.classes.sizes()[j] as i128, fj, &b);
            }
        })?;
        (&s % &n).is_zero().then(|| s / n)
    }

    /// Exact checks of both orthogonality relations and `Σ χ(1)^2 = |G|`.
    pub fn check_orthogonality(&self) -> OrthogonalityReport {
        let k = self.num_classes();
        let n = self.group_order();
        let square = self.values.len() == k && self.values.iter().all(|r| r.len() == k);
        let sum_of_squares_ok = self.degrees.iter().map(|&d| d * d).sum::<u64>() == n;
        let mut rows_ok = true;
        for chi in 0..k {
            for psi in chi..k {
                let expect = if chi == psi { n } else { 0 };
                if self.scaled_inner_product(chi, psi) != Some(BigInt::from(expect)) {
                    rows_ok = false;
                }
            }
        }
        let conj: Vec<Vec<RootSum>> = self
            .values
            .iter()
            .map(|r| r.iter().map(|v| v.conj()).collect())
            .collect();
        let mut columns_ok = true;
        for i in 0..k {
            for j in i..k {
                let s = self.weighted_sum(|acc| {
                    for chi in 0..k {
                        RootSum::accumulate_product(acc, 1, &self.values[chi][i], &conj[chi][j]);
                    }
                });
                let expect = if i == j {
                    n / self.classes.sizes()[i]
                } else {
                    0
                };
                if s != Some(BigInt::from(expect)) {
                    columns_ok = false;
                }
            }
        }
        OrthogonalityReport {
            rows_ok,
            columns_ok,
            sum_of_squares_ok,
            square,
        }
    }

    /// Rows whose kernel contains the normal subgroup `n`: `Irr(G/N)`.
    pub fn characters_with_kernel_containing(&self, n: &PermGroup) -> Vec<usize> {
        let inside: Vec<usize> = (0..self.num_classes())
            .filter(|&c| n.contains(&self.classes.representatives()[c]))
            .collect();
        (0..self.num_classes())
            .filter(|&chi| {
                let d = Cyclotomic::from_integer(self.conductor, self.degrees[chi] as i64);
                inside.iter().all(|&c| self.value(chi, c) == d)
            })
            .collect()
    }

    /// Kernel of a row as a subgroup.
    pub fn kernel(&self, chi: usize) -> PermGroup {
        let d = Cyclotomic::from_integer(self.conductor, self.degrees[chi] as i64);
        let gens: Vec<_> = (0..self.num_classes())
            .filter(|&c| self.value(chi, c) == d)
            .map(|c| self.classes.representatives()[c].clone())
            .collect();
        self.group.normal_closure(&gens)
    }

    /// Canonical JSON: degrees, class data and power-basis coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ClassJson {
            size: u64,
            element_order: u64,
            representative: String,
        }
        #[derive(Serialize)]
        struct TableJson {
            order: u64,
            conductor: u64,
            classes: Vec<ClassJson>,
            degrees: Vec<u64>,
            values: Vec<Vec<Vec<i64>>>,
        }
        let classes = (0..self.num_classes())
            .map(|c| ClassJson {
                size: self.classes.sizes()[c],
                element_order: self.classes.element_orders()[c],
                representative: self.classes.representatives()[c].to_string(),
            })
            .collect();
        let values = (0..self.num_classes())
            .map(|chi| {
                (0..self.num_classes())
                    .map(|c| {
                        self.value(chi, c)
                            .coeffs()
                            .iter()
                            .map(|q| q.to_integer().to_i64().expect("character values are small"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(TableJson {
            order: self.group_order(),
            conductor: self.conductor,
            classes,
            degrees: self.degrees.clone(),
            values,
        })
        .expect("plain data serializes")
    }
}

/// Multiplicities `m[χ][θ] = ⟨χ|_N, θ⟩_N` for a normal subgroup `N`.
pub fn restriction_constituents(g: &CharacterTable, n: &CharacterTable) -> Result<Vec<Vec<u64>>> {
    if !g.group().is_normal_subgroup(n.group()) {
        return Err(Error::NotNormal);
    }
    let fusion = class_fusion(g, n)?;
    let e = g.conductor();
    if e % n.conductor() != 0 {
        return Err(Error::InvalidArgument(
            "subgroup exponent does not divide".into(),
        ));
    }
    let field = CyclotomicField::get(e);
    let order_n = BigInt::from(n.group_order());
    let mut out = vec![vec![0u64; n.num_classes()]; g.num_classes()];
    for chi in 0..g.num_classes() {
        for theta in 0..n.num_classes() {
            let mut acc = vec![0i128; e as usize];
            for c in 0..n.num_classes() {
                let a = g.root_sum(chi, fusion[c]);
                let b = n.root_sum(theta, c).lift_to(e).conj();
                RootSum::accumulate_product(&mut acc, n.classes().sizes()[c] as i128, a, &b);
            }
            let s = field
                .integer_value(&acc)
                .expect("inner products of characters are rational");
            assert!(
                (&s % &order_n).is_zero(),
                "restriction multiplicity is an integer"
            );
            out[chi][theta] = (s / &order_n).to_u64().expect("non-negative multiplicity");
        }
    }
    Ok(out)
}

/// Class of `G` containing each class of the subgroup `N`.
pub fn class_fusion(g: &CharacterTable, n: &CharacterTable) -> Result<Vec<usize>> {
    n.classes()
        .representatives()
        .iter()
        .map(|x| {
            g.classes()
                .class_of(x)
                .ok_or_else(|| Error::InvalidArgument("subgroup element outside the group".into()))
        })
        .collect()
}

/// Plain-text table in the usual layout: class sizes, element orders, rows.
impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.num_classes();
        let cells: Vec<Vec<String>> = (0..k)
            .map(|chi| (0..k).map(|c| self.value(chi, c).to_string()).collect())
            .collect();
        let mut width = vec![1usize; k];
        for c in 0..k {
            width[c] = width[c]
                .max(self.classes.sizes()[c].to_string().len())
                .max(format!("{}", self.classes.element_orders()[c]).len());
            for row in &cells {
                width[c] = width[c].max(row[c].len());
            }
        }
        let label = format!("X.{}", k).len().max(5);
        let line = |f: &mut fmt::Formatter<'_>, head: &str, items: Vec<String>| -> fmt::Result {
            write!(f, "{:<label$}", head)?;
            for (c, s) in items.iter().enumerate() {
                write!(f, "  {:>w$}", s, w = width[c])?;
            }
            writeln!(f)
        };
        line(
            f,
            "size",
            self.classes.sizes().iter().map(|s| s.to_string()).collect(),
        )?;
        line(
            f,
            "order",
            self.classes
                .element_orders()
                .iter()
                .map(|s| s.to_string())
                .collect(),
        )?;
        writeln!(f)?;
        for (chi, row) in cells.into_iter().enumerate() {
            line(f, &format!("X.{}", chi + 1), row)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builders as b;

    fn degrees(g: &PermGroup) -> Vec<u64> {
        character_table(g).unwrap().degree_data().degrees
    }

    #[test]
    fn small_tables() {
        let c2 = character_table(&b::cyclic(2).unwrap()).unwrap();
        assert_eq!(c2.row(0), vec![Cyclotomic::from_integer(2, 1); 2]);
        assert_eq!(c2.value(1, 1), Cyclotomic::from_integer(2, -1));
        assert_eq!(degrees(&b::sym(4)), vec![1, 1, 2, 3, 3]);
        assert_eq!(degrees(&b::quaternion(8).unwrap()), vec![1, 1, 1, 1, 2]);
        let a5 = character_table(&b::alt(5)).unwrap();
        assert_eq!(a5.degrees(), &[1, 3, 3, 4, 5]);
        assert!(a5.check_orthogonality().all_ok());
    }

    #[test]
    fn class_mult_examples() {
        let s3 = b::sym(3);
        let cl = s3.conjugacy_classes().unwrap();
        let a = class_mult_coefficients(&cl);
        // classes of S3: identity, transpositions, 3-cycles; every
        // transposition x has x^-1 z a transposition for a 3-cycle z
        assert_eq!(a.get(1, 1, 2), 3);
        assert_eq!(a.get(2, 2, 0), 2);
        let brute = |i: usize, j: usize, l: usize| {
            let z = &cl.representatives()[l];
            let ki: Vec<_> = cl
                .members(i)
                .iter()
                .map(|&x| &cl.element_index().elements()[x as usize])
                .collect();
            let kj: Vec<_> = cl
                .members(j)
                .iter()
                .map(|&x| &cl.element_index().elements()[x as usize])
                .collect();
            ki.iter()
                .flat_map(|x| kj.iter().map(move |y| *x * *y))
                .filter(|xy| xy == z)
                .count() as u32
        };
        for i in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    assert_eq!(a.get(i, j, l), brute(i, j, l));
                }
            }
        }
        for j in 0..3 {
            for l in 0..3 {
                assert_eq!(a.get(0, j, l), (j == l) as u32);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                let s: u64 = (0..3).map(|l| a.get(i, j, l) as u64 * cl.sizes()[l]).sum();
                assert_eq!(s, cl.sizes()[i] * cl.sizes()[j]);
            }
        }
    }

    #[test]
    fn coefficients_do_not_depend_on_representative() {
        let g = b::psl2(7).unwrap();
        let cl = g.conjugacy_classes().unwrap();
        let a = class_mult_coefficients(&cl);
        let k = cl.len();
        for l in 0..k {
            let last = *cl.members(l).last().unwrap() as usize;
            let z = &cl.element_index().elements()[last];
            let col = ClassMultiplication::column(&cl, z);
            for i in 0..k {
                for j in 0..k {
                    assert_eq!(col[i * k + j], a.get(i, j, l));
                }
            }
        }
    }

    #[test]
    fn degree_sets() {
        let d8 = character_table(&b::dihedral(8).unwrap())
            .unwrap()
            .degree_data();
        assert_eq!(d8.cd.iter().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d8.b, 2);
        let e27 = b::extraspecial(3, b::ExtraspecialType::ExponentP).unwrap();
        let cd: Vec<u64> = character_table(&e27)
            .unwrap()
            .degree_data()
            .cd
            .into_iter()
            .collect();
        assert_eq!(cd, vec![1, 3]);
        let ab = character_table(&b::elementary_abelian(3, 2).unwrap())
            .unwrap()
            .degree_data();
        assert_eq!(ab.b, 1);
    }

    #[test]
    fn restrictions() {
        let s3 = b::sym(3);
        let a3 = s3.derived_subgroup();
        let tg = character_table(&s3).unwrap();
        let tn = character_table(&a3).unwrap();
        let m = restriction_constituents(&tg, &tn).unwrap();
        let two = tg.degrees().iter().position(|&d| d == 2).unwrap();
        assert_eq!(m[two], vec![0, 1, 1]);
        assert_eq!(m[0], vec![1, 0, 0]);

        let q8 = b::quaternion(8).unwrap();
        let z = q8.center().unwrap();
        let tq = character_table(&q8).unwrap();
        let tz = character_table(&z).unwrap();
        let m = restriction_constituents(&tq, &tz).unwrap();
        assert_eq!(m[4], vec![0, 2]);
        for (chi, row) in m.iter().enumerate() {
            let total: u64 = row.iter().zip(tz.degrees()).map(|(a, b)| a * b).sum();
            assert_eq!(total, tq.degrees()[chi]);
        }
    }

    #[test]
    fn kernels_and_quotients() {
        let s4 = b::sym(4);
        let t = character_table(&s4).unwrap();
        let v4 = s4.p_core(2).unwrap();
        let rows = t.characters_with_kernel_containing(&v4);
        let ds: Vec<u64> = rows.iter().map(|&r| t.degrees()[r]).collect();
        assert_eq!(ds, vec![1, 1, 2]);
        let a4 = s4.derived_subgroup();
        assert_eq!(t.characters_with_kernel_containing(&a4).len(), 2);
        assert_eq!(
            t.characters_with_kernel_containing(&PermGroup::trivial(4))
                .len(),
            5
        );
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            character_table(&b::sym(8)),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
