//! Finite property suites, one per lemma. Each suite enumerates its
//! instances and records every instance whose conclusion fails.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::blocks;
use crate::catalog::{self, builders as b, CatalogEntry};
use crate::chartab;
use crate::combinat::{self, Partition};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matgroup::{self, MatGroup};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

use super::check_theorem_a;

pub const SUITES: &[&str] = &[
    "ti-sylow",
    "extension",
    "solvable",
    "orbit-p",
    "ordered-partitions",
    "hooks",
    "concealed",
    "exceptional",
    "imprimitive",
    "block-systems",
    "covering",
    "p-constrained",
];

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn record<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.instances += 1;
                self.failures.push(format!("{}: {}", what, e));
                None
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub large: bool,
    /// Catalog groups above this order are skipped by the catalog-driven
    /// suites.
    pub max_order: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            large: false,
            max_order: 2000,
        }
    }
}

/// Never lowers the current limit.
fn raise_table_limit(order: u64) {
    let (limit, classes) = chartab::table_limits();
    if limit < order {
        chartab::set_table_limits(order, classes);
    }
}

pub fn run_suite(name: &str, catalog: &[CatalogEntry], opts: &SuiteOptions) -> Result<SuiteReport> {
    match name {
        "ti-sylow" => Ok(ti_sylow_suite()),
        "extension" => Ok(extension_suite()),
        "solvable" => Ok(solvable_suite(catalog, opts)),
        "orbit-p" => Ok(orbit_p_suite()),
        "ordered-partitions" => Ok(ordered_partitions_suite()),
        "hooks" => Ok(hooks_suite()),
        "concealed" => Ok(concealed_suite()),
        "exceptional" => Ok(exceptional_suite(opts)),
        "imprimitive" => Ok(imprimitive_suite()),
        "block-systems" => Ok(block_systems_suite(catalog)),
        "covering" => Ok(covering_suite(catalog, opts)),
        "p-constrained" => Ok(p_constrained_suite(catalog, opts)),
        other => Err(Error::InvalidArgument(format!("unknown suite {}", other))),
    }
}

pub fn run_all(catalog: &[CatalogEntry], opts: &SuiteOptions) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, catalog, opts).expect("known suite"))
        .collect()
}

fn sorted_elements(g: &PermGroup) -> Result<Vec<Permutation>> {
    let mut e = g.elements()?;
    e.sort();
    Ok(e)
}

/// Sylow `p`-subgroups of `SL_2(q)`/`PSL_2(q)` are TI, and any element
/// outside `N_S(R)` generates `S` together with `R`.
pub fn ti_sylow_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("ti-sylow");
    let mut cases: Vec<(String, Result<PermGroup>, u64)> = Vec::new();
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        cases.push((format!("PSL2({})", q), b::psl2(q), arith::factorize(q)[0].0));
    }
    for q in [4u64, 5, 7, 8, 9] {
        cases.push((format!("SL2({})", q), b::sl2(q), arith::factorize(q)[0].0));
    }
    for (name, g, p) in cases {
        let Some(s) = rep.record(&name, g) else {
            continue;
        };
        let res = (|| -> Result<(bool, usize, bool)> {
            let r = s.sylow(p)?;
            let re = sorted_elements(&r)?;
            let mut conjugates: BTreeSet<Vec<Permutation>> = BTreeSet::new();
            let mut stack = vec![re.clone()];
            conjugates.insert(re);
            while let Some(c) = stack.pop() {
                for x in s.generators() {
                    let mut img: Vec<Permutation> = c.iter().map(|y| y.conjugate_by(x)).collect();
                    img.sort();
                    if conjugates.insert(img.clone()) {
                        stack.push(img);
                    }
                }
            }
            let all: Vec<BTreeSet<&Permutation>> =
                conjugates.iter().map(|c| c.iter().collect()).collect();
            let ti = all
                .iter()
                .enumerate()
                .all(|(i, a)| all[i + 1..].iter().all(|b| a.intersection(b).count() == 1));
            let norm = s.normalizer(&r)?;
            let order = s.order();
            let mut generates = true;
            for g in s.elements()? {
                if norm.contains(&g) {
                    continue;
                }
                let mut gens = r.generators().to_vec();
                gens.push(g);
                if PermGroup::new(s.degree(), gens)?.order() != order {
                    generates = false;
                    break;
                }
            }
            Ok((ti, conjugates.len(), generates))
        })();
        let Some((ti, n, generates)) = rep.record(&name, res) else {
            continue;
        };
        rep.check(ti, || format!("{}: Sylow {}-subgroups are not TI", name, p));
        rep.check(generates, || format!("{}: some <R,g> is proper", name));
        rep.notes
            .push(format!("{} p={}: {} Sylow subgroups", name, p, n));
    }
    rep
}

/// `k` with `value == ζ_e^k`.
fn root_exponent(value: &Cyclotomic, e: u64) -> Option<u64> {
    (0..e).find(|&k| Cyclotomic::zeta_power(e, k as i64) == *value)
}

struct SemidirectCase {
    name: &'static str,
    g: PermGroup,
    n: PermGroup,
    h: PermGroup,
}

fn normal_of_order(g: &PermGroup, order: u64) -> Result<PermGroup> {
    g.normal_subgroups()?
        .iter()
        .find(|s| s.order == order)
        .map(|s| s.group.clone())
        .ok_or_else(|| Error::InvalidArgument(format!("no normal subgroup of order {}", order)))
}

fn semidirect_cases() -> Result<Vec<SemidirectCase>> {
    let mut out = Vec::new();
    let s4 = b::sym(4);
    out.push(SemidirectCase {
        name: "S4 = V4:S3",
        n: normal_of_order(&s4, 4)?,
        h: s4.point_stabilizer(3),
        g: s4,
    });
    let a4 = b::alt(4);
    out.push(SemidirectCase {
        name: "A4 = V4:C3",
        n: normal_of_order(&a4, 4)?,
        h: a4.sylow(3)?,
        g: a4,
    });
    let factors = |name: &'static str, x: &PermGroup, y: &PermGroup| {
        let (dx, dy) = (x.degree(), y.degree());
        SemidirectCase {
            name,
            g: b::direct_product(x, y),
            n: b::direct_product(x, &PermGroup::trivial(dy)),
            h: b::direct_product(&PermGroup::trivial(dx), y),
        }
    };
    out.push(factors(
        "C3 x C4 with N = C3",
        &b::cyclic(3)?,
        &b::cyclic(4)?,
    ));
    out.push(factors(
        "Q8 x C3 with N = Q8",
        &b::quaternion(8)?,
        &b::cyclic(3)?,
    ));
    out.push(factors(
        "C3 x Q8 with N = C3",
        &b::cyclic(3)?,
        &b::quaternion(8)?,
    ));
    out.push(factors(
        "D8 x C3 with N = D8",
        &b::dihedral(8)?,
        &b::cyclic(3)?,
    ));
    out.push(factors("S3 x S3 with N = S3", &b::sym(3), &b::sym(3)));
    let dic = b::metacyclic(3, 4, 2)?;
    out.push(SemidirectCase {
        name: "C3:C4",
        n: normal_of_order(&dic, 3)?,
        h: dic.sylow(2)?,
        g: dic,
    });
    let f20 = b::agl1(5)?;
    out.push(SemidirectCase {
        name: "AGL1(5) = C5:C4",
        n: normal_of_order(&f20, 5)?,
        h: f20.point_stabilizer(0),
        g: f20,
    });
    Ok(out)
}

/// Counts of invariant linear characters and how many extended.
fn check_semidirect(case: &SemidirectCase, rep: &mut SuiteReport) -> Result<()> {
    let SemidirectCase { name, g, n, h } = case;
    let (og, on, oh) = (g.order(), n.order(), h.order());
    if !g.is_normal_subgroup(n) || &on * &oh != og || !g.contains_group(h) {
        return Err(Error::InvalidArgument(format!(
            "{}: not a semidirect decomposition",
            name
        )));
    }
    let tn = chartab::character_table(n)?;
    let tg = chartab::character_table(g)?;
    let (en, eg) = (tn.conductor(), tg.conductor());
    if eg % en != 0 {
        return Err(Error::InvalidArgument(format!(
            "{}: exponents do not divide",
            name
        )));
    }
    let cls_n = tn.classes();
    let h_elems = h.elements()?;
    let g_elems = g.elements()?;
    let mut invariant = 0;
    for lam in (0..tn.num_classes()).filter(|&l| tn.degrees()[l] == 1) {
        let exps: Vec<u64> = (0..tn.num_classes())
            .map(|c| {
                root_exponent(&tn.value(lam, c), en).expect("linear values are roots of unity")
            })
            .collect();
        let is_inv = h.generators().iter().all(|x| {
            cls_n.representatives().iter().enumerate().all(|(c, r)| {
                exps[cls_n.class_of(&r.conjugate_by(x)).expect("N normal")] == exps[c]
            })
        });
        if !is_inv {
            continue;
        }
        invariant += 1;
        let scale = eg / en;
        // λ̃(hn) = λ(n)
        let ext = |x: &Permutation| -> u64 {
            let nn = h_elems
                .iter()
                .map(|hh| &hh.inverse() * x)
                .find(|y| n.contains(y))
                .expect("G = HN");
            exps[cls_n.class_of(&nn).expect("in N")] * scale % eg
        };
        let table: HashMap<&Permutation, u64> = g_elems.iter().map(|x| (x, ext(x))).collect();
        let hom = g_elems.iter().all(|x| {
            g.generators()
                .iter()
                .all(|s| table[&(x * s)] == (table[x] + table[s]) % eg)
        });
        let restricts = cls_n
            .representatives()
            .iter()
            .enumerate()
            .all(|(c, r)| table[r] == exps[c] * scale % eg);
        let in_table = (0..tg.num_classes())
            .filter(|&chi| tg.degrees()[chi] == 1)
            .any(|chi| {
                tg.classes()
                    .representatives()
                    .iter()
                    .enumerate()
                    .all(|(c, r)| tg.value(chi, c) == Cyclotomic::zeta_power(eg, table[r] as i64))
            });
        rep.check(hom && restricts && in_table, || {
            format!("{}: extension of linear character {} fails", name, lam)
        });
    }
    rep.notes.push(format!(
        "{}: {} invariant linear characters extended",
        name, invariant
    ));
    Ok(())
}

/// Invariant linear characters of `N` extend to `G = HN` by `λ̃(hn) = λ(n)`.
pub fn extension_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("extension");
    let Some(cases) = rep.record("constructing cases", semidirect_cases()) else {
        return rep;
    };
    for case in &cases {
        let r = check_semidirect(case, &mut rep);
        rep.record(case.name, r);
    }
    rep
}

/// Solvable instances: the witness lies in `Irr(G/O_{p'}(G))`, which is
/// `Irr(B_0(G))`.
pub fn solvable_suite(catalog: &[CatalogEntry], opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("solvable");
    for e in catalog
        .iter()
        .filter(|e| e.group.is_solvable() && e.order() <= opts.max_order)
    {
        for p in arith::prime_divisors(e.order()) {
            let what = format!("{} p={}", e.name, p);
            let Some(r) = rep.record(&what, check_theorem_a(&e.name, &e.group, p)) else {
                continue;
            };
            if !r.hypothesis_holds {
                continue;
            }
            rep.check(
                r.theorem_holds
                    && r.witness_in_pprime_quotient == Some(true)
                    && r.principal_is_pprime_quotient == Some(true),
                || format!("{}: {:?}", what, r),
            );
        }
    }
    rep
}

/// Solvable linear groups with `O_p(G) = 1` and abelian Sylow `P` in
/// characteristic `p`: some `P`-orbit has size `p`, and `P` has a regular
/// orbit.
pub fn orbit_p_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("orbit-p");
    let mut cases: Vec<(&str, Result<MatGroup>)> = vec![
        ("GL2(2)", b::gl_mat(2, 2)),
        ("GL2(3)", b::gl_mat(2, 3)),
        ("SL2(3)", b::sl_mat(2, 3)),
    ];
    let mono = {
        let mut swap = vec![vec![0; 3]; 3];
        swap[0][1] = 1;
        swap[1][0] = 1;
        swap[2][2] = 1;
        let mut cyc = vec![vec![0; 3]; 3];
        cyc[0][1] = 1;
        cyc[1][2] = 1;
        cyc[2][0] = 1;
        let mut neg = b::identity_matrix(3);
        neg[0][0] = 2;
        MatGroup::new(3, 3, vec![swap, cyc, neg])
    };
    cases.push(("GL1(3) wr S3", mono));
    for (name, m) in cases {
        let Some(m) = rep.record(name, m) else {
            continue;
        };
        let res = (|| -> Result<(bool, Vec<u64>)> {
            let p = m.prime();
            let g = m.as_perm_group()?;
            let sylow = g.sylow(p)?;
            let hyp = g.is_solvable()
                && g.order_u64().is_some_and(|o| o % p == 0)
                && g.p_core(p)?.is_trivial()
                && sylow.is_abelian()
                && m.is_irreducible()?;
            let sizes: Vec<u64> = sylow.orbits().iter().map(|o| o.len() as u64).collect();
            Ok((hyp, sizes))
        })();
        let Some((hyp, sizes)) = rep.record(name, res) else {
            continue;
        };
        let p = m.prime();
        let pord = arith::p_part(
            m.order().ok().and_then(|o| arith::to_u64(&o)).unwrap_or(1),
            p,
        );
        rep.check(hyp, || format!("{}: hypotheses do not hold", name));
        rep.check(sizes.contains(&p), || {
            format!("{}: no P-orbit of size {}", name, p)
        });
        rep.check(sizes.contains(&pord), || {
            format!("{}: no regular P-orbit", name)
        });
    }
    rep
}

/// All subgroups of a finite group, by closure under adjoining elements.
fn all_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let elems = g.elements()?;
    let mut seen: BTreeMap<Vec<Permutation>, PermGroup> = BTreeMap::new();
    let triv = PermGroup::trivial(g.degree());
    seen.insert(sorted_elements(&triv)?, triv);
    let mut stack = vec![PermGroup::trivial(g.degree())];
    while let Some(h) = stack.pop() {
        for x in &elems {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.generators().to_vec();
            gens.push(x.clone());
            let k = PermGroup::new(g.degree(), gens)?;
            let key = sorted_elements(&k)?;
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(k.clone());
                stack.push(k);
            }
        }
    }
    Ok(seen.into_values().collect())
}

/// Regular orbits of `p`-subgroups of `S_n` (`n <= 6`) on ordered
/// partitions: two parts for odd `p`, three for `p = 2`. Four parts are
/// reported too.
pub fn ordered_partitions_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("ordered-partitions");
    let mut k4 = (0usize, 0usize);
    for n in 2..=6usize {
        for p in [2u64, 3, 5] {
            if p as usize > n {
                continue;
            }
            let what = format!("S{} p={}", n, p);
            let Some(subs) = rep.record(&what, b::sym(n).sylow(p).and_then(|s| all_subgroups(&s)))
            else {
                continue;
            };
            let k = if p == 2 { 3 } else { 2 };
            for q in subs.iter().filter(|q| !q.is_trivial()) {
                let w = combinat::regular_orbit_on_partitions(q, k);
                let Some(w) = rep.record(&what, w) else {
                    continue;
                };
                rep.check(w.is_some(), || {
                    format!(
                        "{}: subgroup of order {} has no regular orbit with {} parts",
                        what,
                        q.order(),
                        k
                    )
                });
                if let Ok(w4) = combinat::regular_orbit_on_partitions(q, 4) {
                    k4.0 += 1;
                    k4.1 += w4.is_some() as usize;
                }
            }
        }
    }
    let d8 = b::dihedral(8).and_then(|d| combinat::regular_orbit_on_partitions(&d, 2));
    if let Some(w) = rep.record("D8 two parts", d8) {
        rep.check(w.is_none(), || {
            "D8 on 4 points has a regular orbit on subsets".into()
        });
    }
    rep.notes.push(format!(
        "four parts: {} of {} subgroups have a regular orbit",
        k4.1, k4.0
    ));
    rep
}

/// Standard Young tableaux of shape `λ`, by removing corners.
pub fn count_syt(parts: &[u32], memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
    if parts.iter().sum::<u32>() <= 1 {
        return BigUint::from(1u32);
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = BigUint::from(0u32);
    for i in 0..parts.len() {
        let corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += count_syt(&smaller, memo);
        }
    }
    memo.insert(parts.to_vec(), total.clone());
    total
}

pub fn hooks_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("hooks");
    for p in [3u32, 5, 7] {
        for n in p..p * p {
            let Ok(lambda) = combinat::lemma42_partition(n, p) else {
                continue;
            };
            let d = combinat::hook_degree(&lambda);
            rep.check(arith::valuation_big(&d, p as u64) == 1, || {
                format!("n={} p={}: {:?} has degree {}", n, p, lambda.parts(), d)
            });
            if n <= 12 {
                let exists = Partition::all(n)
                    .iter()
                    .any(|l| arith::valuation_big(&combinat::hook_degree(l), p as u64) == 1);
                rep.check(exists, || {
                    format!("n={} p={}: no degree with p-part p", n, p)
                });
            }
        }
    }
    let mut memo = HashMap::new();
    for n in 1..=12 {
        for l in Partition::all(n) {
            let ok = combinat::hook_degree(&l) == count_syt(l.parts(), &mut memo);
            rep.check(ok, || {
                format!(
                    "hook formula differs from tableaux count at {:?}",
                    l.parts()
                )
            });
        }
    }
    rep
}

fn has_degree_with_p_part(g: &PermGroup, p: u64) -> Result<bool> {
    let t = chartab::character_table(g)?;
    Ok(t.degrees().iter().any(|&d| arith::p_part(d, p) == p))
}

/// Concealed fixtures, with a character of `p`-part exactly `p` where the
/// group is concealed.
pub fn concealed_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("concealed");
    raise_table_limit(40320);
    let cases: Vec<(&str, Result<PermGroup>, u64, bool)> = vec![
        ("D10 < S5", catalog::fixtures::perm_fixture("d10"), 2, true),
        ("AGL3(2) < S8", b::agl(3, 2), 3, true),
        ("AGammaL1(8) < S8", b::agaml1(8), 3, true),
        ("A5", Ok(b::alt(5)), 3, true),
        ("S5", Ok(b::sym(5)), 3, true),
        ("A8", Ok(b::alt(8)), 3, true),
        ("S8", Ok(b::sym(8)), 3, true),
        ("S5 natural", Ok(b::sym(5)), 2, false),
    ];
    for (name, g, p, expected) in cases {
        let Some(g) = rep.record(name, g) else {
            continue;
        };
        let Some(c) = rep.record(name, combinat::is_p_concealed(&g, p)) else {
            continue;
        };
        rep.check(c.concealed == expected, || {
            format!(
                "{} p={}: concealed = {}, expected {}",
                name, p, c.concealed, expected
            )
        });
        if expected {
            if let Some(ok) = rep.record(name, has_degree_with_p_part(&g, p)) {
                rep.check(ok, || format!("{}: no degree with {}-part {}", name, p, p));
            }
        }
    }
    rep
}

/// Shipped exceptional linear groups reproduce their recorded orbit sizes.
pub fn exceptional_suite(opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("exceptional");
    if opts.large && matgroup::vector_bound() < 1 << 11 {
        matgroup::set_vector_bound(1 << 11);
    }
    for f in catalog::fixtures::LINEAR_FIXTURES {
        if f.large && !opts.large {
            rep.notes.push(format!("{} skipped (large)", f.name));
            continue;
        }
        let Some(m) = rep.record(f.name, f.load()) else {
            continue;
        };
        let Some(r) = rep.record(f.name, m.is_p_exceptional()) else {
            continue;
        };
        rep.check(r.exceptional && r.orbit_sizes == f.orbit_sizes, || {
            format!(
                "{}: exceptional = {}, orbits {:?}",
                f.name, r.exceptional, r.orbit_sizes
            )
        });
    }
    rep
}

/// `GL_2(2) wr S_3 < GL_6(2)` as an imprimitive exceptional group.
pub fn imprimitive_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("imprimitive");
    let res = (|| -> Result<(bool, bool, crate::matgroup::ImprimitiveReport)> {
        let m = catalog::fixtures::linear_fixture("gl2_2_wr_s3_gl6_2")?.load()?;
        let g = m.as_perm_group()?;
        let p = m.prime();
        let generated_by_p = g.p_residual(p)?.order() == g.order();
        let exceptional = m.is_p_exceptional()?.exceptional && m.is_irreducible()?;
        let unit = |i: usize| {
            let mut v = vec![0u64; 6];
            v[i] = 1;
            v
        };
        let parts: Vec<Vec<Vec<u64>>> =
            (0..3).map(|j| vec![unit(2 * j), unit(2 * j + 1)]).collect();
        Ok((
            generated_by_p,
            exceptional,
            m.check_imprimitive_decomposition(&parts)?,
        ))
    })();
    if let Some((gen, exc, r)) = rep.record("GL2(2) wr S3", res) {
        rep.check(gen && exc, || "hypotheses fail".into());
        rep.check(r.stabilizer_transitive, || {
            "part stabilizer not transitive on nonzero vectors".into()
        });
        rep.check(r.induced_primitive, || {
            "induced action on parts not primitive".into()
        });
        rep.check(r.induced_concealed.concealed, || {
            "induced action not 2-concealed".into()
        });
    }
    rep
}

/// The induced action on a maximal block system is primitive, and a
/// concealed action induces one whose orbits on sets of blocks all have
/// size prime to `p`. Instances where `p` does not divide the order of the
/// induced group are reported as notes.
pub fn block_systems_suite(catalog: &[CatalogEntry]) -> SuiteReport {
    let mut rep = SuiteReport::new("block-systems");
    let mut groups: Vec<(String, PermGroup)> = catalog
        .iter()
        .filter(|e| e.group.degree() <= 16 && e.group.is_transitive())
        .map(|e| (e.name.clone(), e.group.clone()))
        .collect();
    if let Some(g) = rep.record("c2_wr_d10", catalog::fixtures::perm_fixture("c2_wr_d10")) {
        groups.push(("C2 wr D10 fixture".into(), g));
    }
    let wreaths = [
        ("A5 wr C2", b::alt(5)),
        ("S5 wr C2", b::sym(5)),
        ("A5 wr C3", b::alt(5)),
    ];
    for (i, (name, base)) in wreaths.into_iter().enumerate() {
        let top = b::cyclic(if i == 2 { 3 } else { 2 });
        if let Some(g) = rep.record(name, top.and_then(|t| b::wreath(&base, &t))) {
            groups.push((name.into(), g));
        }
    }
    let mut concealed_instances = 0;
    for (name, g) in groups {
        if combinat::is_primitive(&g).unwrap_or(true) {
            continue;
        }
        let Some(order) = g.order_u64() else { continue };
        for p in arith::prime_divisors(order) {
            let what = format!("{} p={}", name, p);
            let Some(r) = rep.record(&what, combinat::lemma24c_check(&g, p)) else {
                continue;
            };
            concealed_instances += r.g_concealed.concealed as usize;
            rep.check(r.orbit_condition_holds && r.induced_primitive, || {
                format!("{}: {:?}", what, r)
            });
            if !r.holds {
                rep.notes.push(format!(
                    "{}: concealed, induced orbits prime to p, but p does not divide the induced order",
                    what
                ));
            }
        }
    }
    rep.notes.push(format!(
        "{} instances with a concealed action",
        concealed_instances
    ));
    rep
}

/// When `C_G(Q) <= N`, the principal block is the only block covering
/// `B_0(N)`.
pub fn covering_suite(catalog: &[CatalogEntry], opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("covering");
    let bound = opts.max_order.min(200);
    let mut applicable = 0;
    for e in catalog.iter().filter(|e| e.order() <= bound) {
        let Some(normals) = rep.record(&e.name, e.group.normal_subgroups()) else {
            continue;
        };
        for p in arith::prime_divisors(e.order()) {
            for n in normals.iter() {
                let what = format!("{} p={} |N|={}", e.name, p, n.order);
                let Some(c) = rep.record(
                    &what,
                    blocks::principal_covering_check(&e.group, &n.group, p),
                ) else {
                    continue;
                };
                applicable += c.hypothesis as usize;
                rep.check(c.holds(), || format!("{}: {:?}", what, c));
            }
        }
    }
    rep.notes.push(format!(
        "{} instances satisfy the centralizer hypothesis",
        applicable
    ));
    rep
}

/// `p`-constrained groups with `O_{p'}(G) = 1` have a single `p`-block.
pub fn p_constrained_suite(catalog: &[CatalogEntry], opts: &SuiteOptions) -> SuiteReport {
    let mut rep = SuiteReport::new("p-constrained");
    let mut applicable = 0;
    for e in catalog.iter().filter(|e| e.order() <= opts.max_order) {
        for p in arith::prime_divisors(e.order()) {
            let what = format!("{} p={}", e.name, p);
            let Some(c) = rep.record(&what, blocks::is_p_constrained_single_block(&e.group, p))
            else {
                continue;
            };
            applicable += c.hypothesis as usize;
            rep.check(c.single_block != Some(false), || {
                format!("{}: more than one block", what)
            });
        }
    }
    rep.notes
        .push(format!("{} p-constrained instances", applicable));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syt_counts() {
        let mut memo = HashMap::new();
        assert_eq!(count_syt(&[2, 1], &mut memo), BigUint::from(2u32));
        assert_eq!(count_syt(&[3, 2], &mut memo), BigUint::from(5u32));
        assert_eq!(count_syt(&[5, 1, 1, 1], &mut memo), BigUint::from(35u32));
    }

    #[test]
    fn subgroups_of_d8() {
        assert_eq!(all_subgroups(&b::dihedral(8).unwrap()).unwrap().len(), 10);
        assert_eq!(all_subgroups(&b::cyclic(6).unwrap()).unwrap().len(), 4);
    }

    #[test]
    fn small_suites_pass() {
        for r in [
            extension_suite(),
            orbit_p_suite(),
            ordered_partitions_suite(),
            hooks_suite(),
            imprimitive_suite(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &[], &SuiteOptions::default()).is_err());
    }
}
