//! Constructors for the standard families used by the verification catalog.

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{ExtField, PrimeField};
use crate::matgroup::{MatGroup, Matrix};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("builder produces bijections")
}

fn cycle(degree: usize, pts: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[pts.to_vec()]).expect("builder produces valid cycles")
}

fn group(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens).expect("builder generators share a degree")
}

fn check_order(name: &str, g: &PermGroup, expected: u64) -> Result<()> {
    if g.order_u64() != Some(expected) {
        return Err(Error::OrderMismatch {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: g.order().to_string(),
        });
    }
    Ok(())
}

fn arg(msg: String) -> Error {
    Error::InvalidArgument(msg)
}

pub fn sym(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    let mut gens = vec![cycle(n, &[0, 1])];
    if n > 2 {
        gens.push(cycle(n, &all));
    }
    group(n, gens)
}

pub fn alt(n: usize) -> PermGroup {
    let gens = (2..n as u32).map(|i| cycle(n, &[0, 1, i])).collect();
    group(n, gens)
}

/// Regular cyclic group on `n` points.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(arg("cyclic group of order 0".into()));
    }
    let all: Vec<u32> = (0..n as u32).collect();
    Ok(group(n, vec![cycle(n, &all)]))
}

/// Dihedral group of order `order` acting on `order / 2` points.
pub fn dihedral(order: usize) -> Result<PermGroup> {
    if order % 2 != 0 || order < 6 {
        return Err(arg(format!(
            "dihedral order {} must be even and at least 6",
            order
        )));
    }
    let n = order / 2;
    let all: Vec<u32> = (0..n as u32).collect();
    let reflection = perm((0..n).map(|i| ((n - i) % n) as u32).collect());
    Ok(group(n, vec![cycle(n, &all), reflection]))
}

/// Generalized quaternion group of order `2^k >= 8`, regular action.
pub fn quaternion(order: usize) -> Result<PermGroup> {
    if order < 8 || !order.is_power_of_two() {
        return Err(arg(format!(
            "quaternion order {} must be a power of 2, at least 8",
            order
        )));
    }
    let m = order / 2;
    // element a^i b^j is point i + m j; right multiplication by a and by b
    let times_a = (0..order)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            let i2 = if j == 0 { (i + 1) % m } else { (i + m - 1) % m };
            (i2 + m * j) as u32
        })
        .collect();
    let times_b = (0..order)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            if j == 0 {
                (i + m) as u32
            } else {
                ((i + m / 2) % m) as u32
            }
        })
        .collect();
    Ok(group(order, vec![perm(times_a), perm(times_b)]))
}

/// `C_p^k` as `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: u64, k: usize) -> Result<PermGroup> {
    if !arith::is_prime(p) {
        return Err(arg(format!("{} is not prime", p)));
    }
    let p = p as u32;
    let n = p as usize * k;
    let gens = (0..k as u32)
        .map(|b| cycle(n, &(b * p..(b + 1) * p).collect::<Vec<_>>()))
        .collect();
    Ok(group(n, gens))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialType {
    /// Heisenberg group of unitriangular 3x3 matrices.
    ExponentP,
    /// `C_{p^2} : C_p`.
    ExponentPSquared,
}

/// Extraspecial group of order `p^3` for odd `p`.
pub fn extraspecial(p: u64, ty: ExtraspecialType) -> Result<PermGroup> {
    if p == 2 || !arith::is_prime(p) {
        return Err(arg(format!(
            "extraspecial builder needs an odd prime, got {}",
            p
        )));
    }
    let g = match ty {
        ExtraspecialType::ExponentP => {
            let mut x: Matrix = identity_matrix(3);
            x[0][1] = 1;
            let mut y: Matrix = identity_matrix(3);
            y[1][2] = 1;
            MatGroup::new(3, p, vec![x, y])?.as_perm_group()?
        }
        ExtraspecialType::ExponentPSquared => {
            let m = (p * p) as usize;
            let all: Vec<u32> = (0..m as u32).collect();
            let mult = perm((0..m).map(|x| (x * (1 + p as usize) % m) as u32).collect());
            group(m, vec![cycle(m, &all), mult])
        }
    };
    check_order("extraspecial", &g, p * p * p)?;
    Ok(g)
}

/// `A x B` acting on the disjoint union of the two domains.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (da, db) = (a.degree(), b.degree());
    let n = da + db;
    let mut gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| {
            perm(
                (0..n)
                    .map(|x| if x < da { g.image(x) as u32 } else { x as u32 })
                    .collect(),
            )
        })
        .collect();
    gens.extend(b.generators().iter().map(|g| {
        perm(
            (0..n)
                .map(|x| {
                    if x < da {
                        x as u32
                    } else {
                        (da + g.image(x - da)) as u32
                    }
                })
                .collect(),
        )
    }));
    group(n, gens)
}

/// Imprimitive wreath product `A wr B`: `b` copies of the domain of `A`,
/// point `i` of copy `j` being `j * a + i`.
pub fn wreath(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (da, db) = (a.degree(), b.degree());
    if da == 0 || db == 0 {
        return Err(arg("wreath product of groups of degree 0".into()));
    }
    let n = da * db;
    let mut gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| {
            perm(
                (0..n)
                    .map(|x| if x < da { g.image(x) as u32 } else { x as u32 })
                    .collect(),
            )
        })
        .collect();
    gens.extend(b.generators().iter().map(|h| {
        perm(
            (0..n)
                .map(|x| (h.image(x / da) * da + x % da) as u32)
                .collect(),
        )
    }));
    Ok(group(n, gens))
}

pub fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn elementary(n: usize, i: usize, j: usize, c: u64) -> Matrix {
    let mut m = identity_matrix(n);
    m[i][j] = c;
    m
}

/// `SL_n(p)`, generated by the elementary transvections.
pub fn sl_mat(n: usize, p: u64) -> Result<MatGroup> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                gens.push(elementary(n, i, j, 1));
            }
        }
    }
    MatGroup::new(n, p, gens)
}

/// `GL_n(p)`: `SL_n(p)` together with `diag(w, 1, ..., 1)`, `w` a
/// primitive root.
pub fn gl_mat(n: usize, p: u64) -> Result<MatGroup> {
    let sl = sl_mat(n, p)?;
    let mut gens = sl.generators().to_vec();
    if p > 2 {
        let mut d = identity_matrix(n);
        d[0][0] = PrimeField::new(p).primitive_root();
        gens.push(d);
    }
    MatGroup::new(n, p, gens)
}

/// Affine group `AGL_n(p)` on the `p^n` vectors.
pub fn agl(n: usize, p: u64) -> Result<PermGroup> {
    affine(&gl_mat(n, p)?)
}

/// `ASL_n(p)` on the `p^n` vectors.
pub fn asl(n: usize, p: u64) -> Result<PermGroup> {
    affine(&sl_mat(n, p)?)
}

/// Translations of `F_p^n` extended by a linear group.
pub fn affine(lin: &MatGroup) -> Result<PermGroup> {
    let (n, p) = (lin.dim(), lin.prime());
    let mut gens = lin.as_perm_group()?.generators().to_vec();
    let size = lin.num_vectors()? as usize;
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let images = (0..size)
            .map(|x| {
                let v = lin.decode(x);
                let w: Vec<u64> = v.iter().zip(&e).map(|(a, b)| (a + b) % p).collect();
                lin.encode(&w) as u32
            })
            .collect();
        gens.push(perm(images));
    }
    Ok(group(size, gens))
}

/// Addition and multiplication tables of `F_q` on indices `0..q`; index `i`
/// is the element whose coefficients are the base-`p` digits of `i`.
struct SmallField {
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    ext: ExtField,
}

impl SmallField {
    fn new(q: u64) -> Result<Self> {
        let f = arith::factorize(q);
        if f.len() != 1 {
            return Err(arg(format!("{} is not a prime power", q)));
        }
        let (p, m) = f[0];
        let ext = ExtField::new(p, m as usize);
        let q = q as usize;
        let elems: Vec<Vec<u64>> = (0..q as u64).map(|i| ext.from_index(i)).collect();
        let index = |v: &[u64]| {
            v.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        let table = |op: &dyn Fn(&[u64], &[u64]) -> Vec<u64>| -> Vec<Vec<usize>> {
            (0..q)
                .map(|a| (0..q).map(|b| index(&op(&elems[a], &elems[b]))).collect())
                .collect()
        };
        let add = table(&|a, b| ext.add(a, b));
        let mul = table(&|a, b| ext.mul(a, b));
        Ok(SmallField { q, add, mul, ext })
    }

    fn index_of(&self, v: &[u64]) -> usize {
        let p = self.ext.characteristic() as usize;
        v.iter().rev().fold(0usize, |acc, &c| acc * p + c as usize)
    }

    fn inv(&self, a: usize) -> usize {
        (1..self.q)
            .find(|&b| self.mul[a][b] == 1)
            .expect("nonzero element")
    }

    /// Row vector `(x, y)` times the 2x2 matrix `m`.
    fn apply(&self, (x, y): (usize, usize), m: &[[usize; 2]; 2]) -> (usize, usize) {
        (
            self.add[self.mul[x][m[0][0]]][self.mul[y][m[1][0]]],
            self.add[self.mul[x][m[0][1]]][self.mul[y][m[1][1]]],
        )
    }

    /// Transvections `[[1,t],[0,1]]` and `[[1,0],[t,1]]` for all `t != 0`.
    fn sl2_generators(&self) -> Vec<[[usize; 2]; 2]> {
        (1..self.q)
            .flat_map(|t| [[[1, t], [0, 1]], [[1, 0], [t, 1]]])
            .collect()
    }
}

fn prime_power_in_range(q: u64) -> Result<()> {
    if !(2..=13).contains(&q) || arith::factorize(q).len() != 1 {
        return Err(arg(format!("q = {} must be a prime power at most 13", q)));
    }
    Ok(())
}

/// `PSL_2(q)` on the `q + 1` points of the projective line.
pub fn psl2(q: u64) -> Result<PermGroup> {
    prime_power_in_range(q)?;
    let f = SmallField::new(q)?;
    let n = f.q + 1;
    // (x : 1) is point x, (1 : 0) is point q
    let normalize = |(x, y): (usize, usize)| {
        if y == 0 {
            f.q
        } else {
            f.mul[x][f.inv(y)]
        }
    };
    let gens = f
        .sl2_generators()
        .iter()
        .map(|m| {
            perm(
                (0..n)
                    .map(|pt| {
                        let v = if pt == f.q { (1, 0) } else { (pt, 1) };
                        normalize(f.apply(v, m)) as u32
                    })
                    .collect(),
            )
        })
        .collect();
    let g = group(n, gens);
    check_order("PSL2", &g, q * (q * q - 1) / arith::gcd(2, q - 1))?;
    Ok(g)
}

/// `SL_2(q)` on the `q^2 - 1` nonzero vectors of `F_q^2`.
pub fn sl2(q: u64) -> Result<PermGroup> {
    prime_power_in_range(q)?;
    let f = SmallField::new(q)?;
    let n = f.q * f.q - 1;
    let gens = f
        .sl2_generators()
        .iter()
        .map(|m| {
            perm(
                (1..=n)
                    .map(|i| {
                        let (x, y) = f.apply((i % f.q, i / f.q), m);
                        (x + f.q * y - 1) as u32
                    })
                    .collect(),
            )
        })
        .collect();
    let g = group(n, gens);
    check_order("SL2", &g, q * (q * q - 1))?;
    Ok(g)
}

/// `AGL_1(q)` on `F_q`.
pub fn agl1(q: u64) -> Result<PermGroup> {
    let f = SmallField::new(q)?;
    let w = f.index_of(&f.ext.element_of_order(q - 1));
    let gens = vec![
        perm((0..f.q).map(|x| f.add[x][1] as u32).collect()),
        perm((0..f.q).map(|x| f.mul[x][w] as u32).collect()),
    ];
    let g = group(f.q, gens);
    check_order("AGL1", &g, q * (q - 1))?;
    Ok(g)
}

/// `AGammaL_1(q)` on `F_q`: `AGL_1(q)` extended by the Frobenius map.
pub fn agaml1(q: u64) -> Result<PermGroup> {
    let f = SmallField::new(q)?;
    let p = f.ext.characteristic();
    let mut gens = agl1(q)?.generators().to_vec();
    let frob = (0..f.q)
        .map(|x| f.index_of(&f.ext.pow(&f.ext.from_index(x as u64), p)) as u32)
        .collect();
    gens.push(perm(frob));
    let g = group(f.q, gens);
    check_order("AGammaL1", &g, q * (q - 1) * f.ext.degree() as u64)?;
    Ok(g)
}

/// `C_m : C_n` with a generator of `C_n` acting by `x -> r x`, on
/// `m * n` points (regular action).
pub fn metacyclic(m: u64, n: u64, r: u64) -> Result<PermGroup> {
    if arith::mod_pow(r, n, m) != 1 % m || arith::gcd(r, m) != 1 {
        return Err(arg(format!(
            "{} does not have order dividing {} mod {}",
            r, n, m
        )));
    }
    let (m, n) = (m as usize, n as usize);
    // element a^i b^j is point i + m j, with b a b^-1 = a^r
    let times_a = (0..m * n)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            // a^i b^j a = a^(i + r^j) b^j
            let rj = arith::mod_pow(r, j as u64, m as u64) as usize;
            ((i + rj) % m + m * j) as u32
        })
        .collect();
    let times_b = (0..m * n)
        .map(|x| {
            let (i, j) = (x % m, x / m);
            (i + m * ((j + 1) % n)) as u32
        })
        .collect();
    let g = group(m * n, vec![perm(times_a), perm(times_b)]);
    check_order("metacyclic", &g, (m * n) as u64)?;
    Ok(g)
}

/// `M_11` on 11 points.
pub fn mathieu11() -> PermGroup {
    let g = group(
        11,
        vec![
            cycle(11, &(0..11).collect::<Vec<_>>()),
            Permutation::from_cycles(11, &[vec![2, 6, 10, 7], vec![3, 9, 4, 5]]).expect("valid"),
        ],
    );
    debug_assert_eq!(g.order_u64(), Some(7920));
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_order_formulas() {
        assert_eq!(sym(5).order_u64(), Some(120));
        assert_eq!(alt(6).order_u64(), Some(360));
        assert_eq!(sym(1).order_u64(), Some(1));
        assert_eq!(dihedral(10).unwrap().order_u64(), Some(10));
        assert_eq!(quaternion(16).unwrap().order_u64(), Some(16));
        assert_eq!(elementary_abelian(3, 3).unwrap().order_u64(), Some(27));
        assert_eq!(
            wreath(&sym(3), &cyclic(2).unwrap()).unwrap().order_u64(),
            Some(72)
        );
        assert_eq!(agl(3, 2).unwrap().order_u64(), Some(1344));
        assert_eq!(agaml1(8).unwrap().order_u64(), Some(168));
        assert_eq!(mathieu11().order_u64(), Some(7920));
        assert_eq!(gl_mat(3, 2).unwrap().order().unwrap().to_string(), "168");
        for q in [4, 5, 7, 8, 9, 11, 13] {
            let g = psl2(q).unwrap();
            assert_eq!(g.degree() as u64, q + 1);
        }
        assert_eq!(sl2(9).unwrap().order_u64(), Some(720));
        assert!(psl2(6).is_err());
        assert!(psl2(16).is_err());
    }

    #[test]
    fn quaternion_structure() {
        let q8 = quaternion(8).unwrap();
        assert!(!q8.is_abelian());
        assert_eq!(q8.center().unwrap().order_u64(), Some(2));
        // a unique involution
        let invs = q8
            .elements()
            .unwrap()
            .iter()
            .filter(|g| g.order() == 2)
            .count();
        assert_eq!(invs, 1);
    }

    #[test]
    fn extraspecial_types_differ_in_exponent() {
        for p in [3, 5] {
            let a = extraspecial(p, ExtraspecialType::ExponentP).unwrap();
            let b = extraspecial(p, ExtraspecialType::ExponentPSquared).unwrap();
            assert_eq!(a.exponent().unwrap(), p);
            assert_eq!(b.exponent().unwrap(), p * p);
            assert_eq!(a.center().unwrap().order_u64(), Some(p));
            assert_eq!(b.center().unwrap().order_u64(), Some(p));
        }
        assert!(extraspecial(2, ExtraspecialType::ExponentP).is_err());
    }

    #[test]
    fn metacyclic_groups() {
        let dic12 = metacyclic(3, 4, 2).unwrap();
        assert!(!dic12.is_abelian());
        assert_eq!(dic12.center().unwrap().order_u64(), Some(2));
        let f21 = metacyclic(7, 3, 2).unwrap();
        assert_eq!(f21.center().unwrap().order_u64(), Some(1));
        assert!(metacyclic(7, 3, 3).is_err());
    }
}
