//! Dixon–Schneider: common eigenvectors of the class-multiplication
//! matrices over `F_l`, then exact lifting of values to roots of unity.

use std::sync::Arc;

use crate::arith;
use crate::cyclotomic::RootSum;
use crate::gf::PrimeField;
use crate::permgroup::ConjugacyClassData;

/// Class multiplication coefficients `a[i][j][l] = #{(x, y) ∈ K_i × K_j :
/// xy = z_l}` for the fixed representative `z_l` of class `l`.
#[derive(Clone, Debug)]
pub struct ClassMultiplication {
    k: usize,
    data: Vec<u32>,
}

impl ClassMultiplication {
    pub fn compute(classes: &ConjugacyClassData) -> Self {
        let k = classes.len();
        let mut data = vec![0u32; k * k * k];
        for (l, z) in classes.representatives().iter().enumerate() {
            let col = Self::column(classes, z);
            for (ij, &c) in col.iter().enumerate() {
                data[ij * k + l] = c;
            }
        }
        ClassMultiplication { k, data }
    }

    /// Counts `(i, j) -> #{(x, y) ∈ K_i × K_j : xy = z}` for an arbitrary
    /// element `z`, flattened row-major.
    pub fn column(classes: &ConjugacyClassData, z: &crate::perm::Permutation) -> Vec<u32> {
        let k = classes.len();
        let mut col = vec![0u32; k * k];
        for (xi, x) in classes.element_index().elements().iter().enumerate() {
            let i = classes.class_of_index(xi);
            let y = x.inverse().compose(z);
            let j = classes.class_of(&y).expect("group is closed");
            col[i * k + j] += 1;
        }
        col
    }

    pub fn num_classes(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, l: usize) -> u32 {
        self.data[(i * self.k + j) * self.k + l]
    }
}

/// Raw output of the table builder, before sorting and packaging.
pub(crate) struct RawTable {
    pub ell: u64,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<RootSum>>,
}

pub(crate) fn build(
    classes: &Arc<ConjugacyClassData>,
    mult: &ClassMultiplication,
    e: u64,
) -> RawTable {
    let k = classes.len();
    let n = classes.group_order();
    let ell = arith::prime_congruent_one(e, 2 * arith::integer_sqrt_ceil(n));
    let f = PrimeField::new(ell);

    let eigvecs = common_eigenvectors(&f, mult);
    assert_eq!(eigvecs.len(), k, "eigenspace splitting failed");

    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s % ell).collect();
    let inverse: Vec<usize> = (0..k).map(|c| classes.inverse_class(c)).collect();
    let max_degree = (n as f64).sqrt() as u64 + 1;

    // root of unity of order e in F_l
    let z = f.pow(f.primitive_root(), (ell - 1) / e);
    let orders = classes.element_orders();
    let power_maps: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            (0..orders[c])
                .map(|s| classes.power_class(c, s as i64))
                .collect()
        })
        .collect();

    let mut degrees = Vec::with_capacity(k);
    let mut values = Vec::with_capacity(k);
    for v in eigvecs {
        let inv0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, inv0)).collect();
        // χ(1)^2 Σ_j ω_j ω_{j*} / |K_j| = |G|
        let s = (0..k).fold(0, |acc, j| {
            let t = f.mul(f.mul(omega[j], omega[inverse[j]]), f.inv(sizes[j]));
            f.add(acc, t)
        });
        let d2 = f.mul(n % ell, f.inv(s));
        let d = (1..=max_degree)
            .find(|&d| (d * d) % ell == d2)
            .expect("degree squared is a square below the bound");
        let chi: Vec<u64> = (0..k)
            .map(|j| f.mul(f.mul(omega[j], d % ell), f.inv(sizes[j])))
            .collect();

        let mut row = Vec::with_capacity(k);
        for j in 0..k {
            let o = orders[j];
            let step = e / o;
            let eps = f.pow(z, step);
            let inv_o = f.inv(o % ell);
            let mut terms = Vec::new();
            for t in 0..o {
                let eps_neg_t = f.inv(f.pow(eps, t));
                let mut acc = 0;
                let mut w = 1;
                for s in 0..o {
                    acc = f.add(acc, f.mul(chi[power_maps[j][s as usize]], w));
                    w = f.mul(w, eps_neg_t);
                }
                let m = f.mul(acc, inv_o);
                assert!(m <= d, "eigenvalue multiplicity exceeds the degree");
                if m != 0 {
                    terms.push((t * step, m as i64));
                }
            }
            row.push(RootSum {
                conductor: e,
                terms,
            });
        }
        degrees.push(d);
        values.push(row);
    }
    RawTable {
        ell,
        degrees,
        values,
    }
}

/// One eigenvector per irreducible character: `v_l = ω_χ(K_l)` up to
/// scaling, found by splitting `F_l^k` with the matrices `M_i[j][l] =
/// a[i][j][l]` in class order.
fn common_eigenvectors(f: &PrimeField, mult: &ClassMultiplication) -> Vec<Vec<u64>> {
    let k = mult.num_classes();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut r = vec![0; k];
            r[i] = 1;
            r
        })
        .collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> = (0..k)
            .map(|j| {
                (0..k)
                    .map(|l| mult.get(i, j, l) as u64 % f.modulus())
                    .collect()
            })
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split(f, &m, space));
            }
        }
        spaces = next;
    }
    spaces
        .into_iter()
        .map(|mut s| {
            assert_eq!(s.len(), 1, "class matrices failed to separate characters");
            s.pop().unwrap()
        })
        .collect()
}

/// Splits the `m`-invariant space with RREF basis `basis` into eigenspaces.
fn split(f: &PrimeField, m: &[Vec<u64>], mut basis: Vec<Vec<u64>>) -> Vec<Vec<Vec<u64>>> {
    let pivots = f.rref(&mut basis);
    let d = basis.len();
    let images: Vec<Vec<u64>> = basis.iter().map(|w| f.mat_vec(m, w)).collect();
    // b[s][t] = coordinate s of m w_t
    let b: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
        .collect();
    let roots = f.roots(&f.charpoly(&b));
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = b
            .iter()
            .enumerate()
            .map(|(s, row)| {
                row.iter()
                    .enumerate()
                    .map(|(t, &x)| if s == t { f.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let coords = f.nullspace(&shifted, d);
        let mut vecs: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (t, &ct) in c.iter().enumerate() {
                    if ct != 0 {
                        for (x, &w) in v.iter_mut().zip(&basis[t]) {
                            *x = f.add(*x, f.mul(ct, w));
                        }
                    }
                }
                v
            })
            .collect();
        f.rref(&mut vecs);
        total += vecs.len();
        out.push(vecs);
    }
    assert_eq!(total, d, "class matrix is not diagonalizable over F_l");
    out
}
