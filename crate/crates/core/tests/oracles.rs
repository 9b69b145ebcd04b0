//! Independent oracles: Murnaghan-Nakayama character values and p-cores for
//! symmetric groups, stabilizer counting for subset orbits, tableau
//! counting for the hook formula.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;

use minheight::catalog::{builders as b, fixtures};
use minheight::combinat::{self, Partition};
use minheight::{arith, blocks, chartab, PermGroup, Permutation};

/// Beta-set of `λ` with `k` beads, largest first.
fn beta(parts: &[u32], k: usize) -> Vec<i64> {
    (0..k)
        .map(|i| parts.get(i).copied().unwrap_or(0) as i64 + (k - 1 - i) as i64)
        .collect()
}

fn from_beta(mut beads: Vec<i64>) -> Vec<u32> {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let k = beads.len();
    beads
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - (k - 1 - i) as i64) as u32)
        .filter(|&x| x > 0)
        .collect()
}

/// `χ^λ` on cycle type `μ` by removing rim hooks on the abacus.
fn mn_value(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return lambda.is_empty() as i64;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0] as i64;
    let beads = beta(lambda, lambda.len());
    let mut total = 0;
    for (i, &x) in beads.iter().enumerate() {
        let y = x - r;
        if y < 0 || beads.contains(&y) {
            continue;
        }
        let between = beads.iter().filter(|&&z| z > y && z < x).count();
        let mut moved = beads.clone();
        moved[i] = y;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&from_beta(moved), &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

fn p_core(lambda: &[u32], p: i64) -> Vec<u32> {
    let mut beads = beta(lambda, lambda.len());
    loop {
        let mut moved = false;
        for i in 0..beads.len() {
            let y = beads[i] - p;
            if y >= 0 && !beads.contains(&y) {
                beads[i] = y;
                moved = true;
            }
        }
        if !moved {
            return from_beta(beads);
        }
    }
}

fn cycle_type(g: &Permutation) -> Vec<u32> {
    let mut t: Vec<u32> = g
        .cycles()
        .iter()
        .map(|c| c.len() as u32)
        .filter(|&l| l > 1)
        .collect();
    let moved: u32 = t.iter().sum();
    t.extend(std::iter::repeat_n(1, g.degree() - moved as usize));
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// Partition labelling each row of the computed table of `S_n`.
fn label_rows(n: usize) -> (minheight::CharacterTable, Vec<Vec<u32>>) {
    let t = chartab::character_table(&b::sym(n)).unwrap();
    let types: Vec<Vec<u32>> = t
        .classes()
        .representatives()
        .iter()
        .map(cycle_type)
        .collect();
    let mut memo = HashMap::new();
    let by_values: BTreeMap<Vec<i64>, Vec<u32>> = Partition::all(n as u32)
        .into_iter()
        .map(|l| {
            let vals = types
                .iter()
                .map(|mu| mn_value(l.parts(), mu, &mut memo))
                .collect();
            (vals, l.parts().to_vec())
        })
        .collect();
    assert_eq!(by_values.len(), t.num_classes());
    let labels = (0..t.num_classes())
        .map(|chi| {
            let row: Vec<i64> = (0..t.num_classes())
                .map(|c| {
                    i64::try_from(t.value(chi, c).to_integer().expect("rational table")).unwrap()
                })
                .collect();
            by_values
                .get(&row)
                .unwrap_or_else(|| panic!("S{} row {:?} is not a Murnaghan-Nakayama row", n, row))
                .clone()
        })
        .collect();
    (t, labels)
}

#[test]
fn symmetric_tables_match_murnaghan_nakayama() {
    for n in 2..=7 {
        let (t, labels) = label_rows(n);
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(
            sorted.len(),
            t.num_classes(),
            "S{}: rows must be distinct",
            n
        );
        for (chi, l) in labels.iter().enumerate() {
            let hook = combinat::hook_degree(&Partition::new(l.clone()).unwrap());
            assert_eq!(BigUint::from(t.degrees()[chi]), hook);
        }
    }
}

#[test]
fn symmetric_blocks_are_p_core_classes() {
    for n in 3..=7 {
        let (t, labels) = label_rows(n);
        for p in arith::prime_divisors(arith::to_u64(&arith::factorial(n as u64)).unwrap()) {
            let part = blocks::block_distribution(&t, p);
            for i in 0..labels.len() {
                for j in 0..labels.len() {
                    let same_block = part.block_of[i] == part.block_of[j];
                    let same_core = p_core(&labels[i], p as i64) == p_core(&labels[j], p as i64);
                    assert_eq!(
                        same_block, same_core,
                        "S{} p={}: {:?} vs {:?}",
                        n, p, labels[i], labels[j]
                    );
                }
            }
        }
    }
}

#[test]
fn nakayama_oracle_sanity() {
    assert_eq!(p_core(&[2, 1], 2), vec![2, 1]);
    assert_eq!(p_core(&[3], 3), Vec::<u32>::new());
    assert_eq!(p_core(&[3, 1], 2), Vec::<u32>::new());
    let mut memo = HashMap::new();
    assert_eq!(mn_value(&[2, 1], &[3], &mut memo), -1);
    assert_eq!(mn_value(&[2, 1], &[2, 1], &mut memo), 0);
    assert_eq!(mn_value(&[2, 2], &[1, 1, 1, 1], &mut memo), 2);
}

/// Orbit size of each subset as `|G| / |Stab(S)|`, stabilizers counted
/// element by element.
fn stabilizer_orbit_sizes(g: &PermGroup) -> Vec<u64> {
    let n = g.degree();
    let elems = g.elements().unwrap();
    let order = elems.len() as u64;
    (0u32..1 << n)
        .map(|mask| {
            let stab = elems
                .iter()
                .filter(|x| (0..n).all(|i| (mask >> i) & 1 == (mask >> x.image(i)) & 1))
                .count() as u64;
            order / stab
        })
        .collect()
}

fn burnside_orbit_count(g: &PermGroup) -> u64 {
    let elems = g.elements().unwrap();
    let fixed: u64 = elems.iter().map(|x| 1u64 << x.cycles().len()).sum();
    fixed / elems.len() as u64
}

#[test]
fn concealed_agrees_with_stabilizer_counting() {
    let mut cases: Vec<(&str, PermGroup)> = vec![
        ("S5", b::sym(5)),
        ("A5", b::alt(5)),
        ("S4", b::sym(4)),
        ("D8", b::dihedral(8).unwrap()),
        ("C7", b::cyclic(7).unwrap()),
        ("AGL1(5)", b::agl1(5).unwrap()),
        ("PSL2(7)", b::psl2(7).unwrap()),
        ("AGL3(2)", b::agl(3, 2).unwrap()),
        ("AGammaL1(8)", b::agaml1(8).unwrap()),
        ("A8", b::alt(8)),
        ("M11", b::mathieu11()),
    ];
    cases.push(("D10 fixture", fixtures::perm_fixture("d10").unwrap()));
    cases.push(("C2 wr D10", fixtures::perm_fixture("c2_wr_d10").unwrap()));
    for (name, g) in cases {
        let sizes = stabilizer_orbit_sizes(&g);
        let orbits = combinat::subset_orbit_sizes(&g).unwrap();
        assert_eq!(orbits.len() as u64, burnside_orbit_count(&g), "{}", name);
        for &(mask, size) in &orbits {
            assert_eq!(sizes[mask as usize], size, "{} subset {:#b}", name, mask);
        }
        let order = g.order_u64().unwrap();
        for p in [2u64, 3, 5, 7, 11] {
            let expected = order % p == 0 && sizes.iter().all(|s| s % p != 0);
            let got = combinat::is_p_concealed(&g, p).unwrap().concealed;
            assert_eq!(got, expected, "{} p={}", name, p);
        }
    }
}

/// Standard Young tableaux of shape `λ`, counted by placing `1..n` one cell
/// at a time.
fn count_tableaux(shape: &[u32], filled: &mut Vec<u32>) -> u64 {
    if filled.iter().zip(shape).all(|(f, s)| f == s) {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let can = filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i]);
        if can {
            filled[i] += 1;
            total += count_tableaux(shape, filled);
            filled[i] -= 1;
        }
    }
    total
}

#[test]
fn hook_formula_matches_tableau_count() {
    for n in 1..=12 {
        for l in Partition::all(n) {
            let mut filled = vec![0; l.parts().len()];
            let count = count_tableaux(l.parts(), &mut filled);
            assert_eq!(
                combinat::hook_degree(&l),
                BigUint::from(count),
                "{:?}",
                l.parts()
            );
        }
    }
}

#[test]
fn sylow_orders_match_p_parts() {
    for g in [
        b::sym(7),
        b::psl2(11).unwrap(),
        b::mathieu11(),
        b::agl(3, 2).unwrap(),
    ] {
        let n = g.order_u64().unwrap();
        for p in arith::prime_divisors(n) {
            let s = g.sylow(p).unwrap();
            assert_eq!(s.order_u64().unwrap(), arith::p_part(n, p));
            assert!(s.is_p_group(p) && g.contains_group(&s));
        }
    }
}
