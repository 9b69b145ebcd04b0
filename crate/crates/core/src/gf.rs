//! Arithmetic and linear algebra over prime fields, and small extension
//! fields `F_{p^m}` in a polynomial basis.

use crate::arith::{self, mod_inv, mod_pow};

/// The prime field `F_p` (`p < 2^32`), elements as reduced `u64`s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        debug_assert!(arith::is_prime(p) && p < 1 << 32);
        PrimeField { p }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.p as i128) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        mod_inv(a, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        mod_pow(a, e, self.p)
    }

    /// Smallest primitive root.
    pub fn primitive_root(&self) -> u64 {
        let p = self.p;
        if p == 2 {
            return 1;
        }
        let qs = arith::prime_divisors(p - 1);
        (2..p)
            .find(|&g| qs.iter().all(|&q| self.pow(g, (p - 1) / q) != 1))
            .expect("prime fields have primitive roots")
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        if y != 0 {
                            *x = self.sub(*x, self.mul(f, y));
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    pub fn rank(&self, m: &[Vec<u64>]) -> usize {
        let mut m = m.to_vec();
        self.rref(&mut m).len()
    }

    /// Basis of `{x : m x = 0}` for a `rows x cols` matrix.
    pub fn nullspace(&self, m: &[Vec<u64>], cols: usize) -> Vec<Vec<u64>> {
        let mut r = m.to_vec();
        let pivots = self.rref(&mut r);
        let mut out = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = self.neg(row[free]);
            }
            out.push(v);
        }
        out
    }

    pub fn mat_mul(&self, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|row| {
                let mut out = vec![0u64; n];
                for (k, &x) in row.iter().enumerate() {
                    if x != 0 {
                        for (o, &y) in out.iter_mut().zip(&b[k]) {
                            *o = (*o + x * y) % self.p;
                        }
                    }
                }
                out
            })
            .collect()
    }

    /// `m * v` for a column vector `v`.
    pub fn mat_vec(&self, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
        m.iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    pub fn determinant(&self, m: &[Vec<u64>]) -> u64 {
        let n = m.len();
        let mut a = m.to_vec();
        let mut det = 1;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if pr != c {
                a.swap(pr, c);
                det = self.neg(det);
            }
            det = self.mul(det, a[c][c]);
            let inv = self.inv(a[c][c]);
            for i in c + 1..n {
                if a[i][c] != 0 {
                    let f = self.mul(a[i][c], inv);
                    for j in c..n {
                        let t = self.mul(f, a[c][j]);
                        a[i][j] = self.sub(a[i][j], t);
                    }
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(xI - m)`, coefficients low to high,
    /// via reduction to upper Hessenberg form.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h = m.to_vec();
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = (c + 1..n).find(|&i| h[i][c] != 0) else {
                continue;
            };
            if pr != c + 1 {
                h.swap(pr, c + 1);
                for row in h.iter_mut() {
                    row.swap(pr, c + 1);
                }
            }
            let inv = self.inv(h[c + 1][c]);
            for i in c + 2..n {
                if h[i][c] == 0 {
                    continue;
                }
                let f = self.mul(h[i][c], inv);
                // row_i -= f row_{c+1}; col_{c+1} += f col_i
                for j in 0..n {
                    let t = self.mul(f, h[c + 1][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(f, row[i]);
                    row[c + 1] = self.add(row[c + 1], t);
                }
            }
        }
        // p_k = char poly of the leading k x k block.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i
            let mut next = vec![0u64; k + 2];
            for (d, &c) in polys[k].iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[k][k], c));
            }
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                if prod == 0 {
                    break;
                }
                let f = self.mul(h[i][k], prod);
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(f, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Horner evaluation of a low-to-high polynomial.
    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p`, ascending, by exhaustive evaluation.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

/// Polynomials over `F_p`, coefficients low to high, no trailing zeros.
mod poly {
    use super::PrimeField;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn rem(f: &PrimeField, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let lead_inv = f.inv(*m.last().unwrap());
        while r.len() >= m.len() {
            let shift = r.len() - m.len();
            let c = f.mul(*r.last().unwrap(), lead_inv);
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, mi));
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(f: &PrimeField, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        rem(f, &out, m)
    }

    pub fn pow_mod(f: &PrimeField, a: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = rem(f, &[1], m);
        let mut base = rem(f, a, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(f, &acc, &base, m);
            }
            base = mul_mod(f, &base, &base, m);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(f: &PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(f, &a, &b);
            a = b;
            b = r;
        }
        a
    }
}

/// Rabin's irreducibility test for a monic polynomial of degree `m`.
fn is_irreducible(f: &PrimeField, modulus: &[u64]) -> bool {
    let m = modulus.len() - 1;
    let p = f.modulus();
    let x = vec![0, 1];
    // x^(p^k) mod modulus
    let frob = |k: usize| {
        let mut y = x.clone();
        for _ in 0..k {
            y = poly::pow_mod(f, &y, p, modulus);
        }
        y
    };
    if !poly::sub(f, &frob(m), &poly::rem(f, &x, modulus)).is_empty() {
        return false;
    }
    for q in arith::prime_divisors(m as u64) {
        let d = poly::sub(f, &frob(m / q as usize), &x);
        if poly::gcd(f, modulus, &d).len() > 1 {
            return false;
        }
    }
    true
}

/// `F_{p^m}` as `F_p[x] / (f)` for the lexicographically smallest monic
/// irreducible `f` of degree `m` (coefficients compared from the constant
/// term upward).
#[derive(Clone, Debug)]
pub struct ExtField {
    base: PrimeField,
    degree: usize,
    modulus: Vec<u64>,
}

/// Element of an [`ExtField`]: exactly `degree` coefficients, low to high.
pub type ExtElem = Vec<u64>;

impl ExtField {
    pub fn new(p: u64, degree: usize) -> Self {
        assert!(degree >= 1);
        let base = PrimeField::new(p);
        let mut low = vec![0u64; degree];
        loop {
            let mut modulus = low.clone();
            modulus.push(1);
            if degree == 1 || (modulus[0] != 0 && is_irreducible(&base, &modulus)) {
                return ExtField {
                    base,
                    degree,
                    modulus,
                };
            }
            // next coefficient vector, constant term least significant
            let mut i = 0;
            loop {
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
                assert!(i < degree, "an irreducible polynomial exists");
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn size(&self) -> u64 {
        self.characteristic().pow(self.degree as u32)
    }

    fn pad(&self, mut v: Vec<u64>) -> ExtElem {
        v.resize(self.degree, 0);
        v
    }

    pub fn zero(&self) -> ExtElem {
        vec![0; self.degree]
    }

    pub fn one(&self) -> ExtElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i128) -> ExtElem {
        let mut v = self.zero();
        v[0] = self.base.reduce(n);
        v
    }

    /// Element with coefficient vector given by the base-`p` digits of `n`.
    pub fn from_index(&self, mut n: u64) -> ExtElem {
        let p = self.characteristic();
        let mut v = self.zero();
        for c in v.iter_mut() {
            *c = n % p;
            n /= p;
        }
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect()
    }

    pub fn scale(&self, a: &[u64], c: u64) -> ExtElem {
        a.iter().map(|&x| self.base.mul(x, c)).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> ExtElem {
        self.pad(poly::mul_mod(
            &self.base,
            &poly::trim(a.to_vec()),
            &poly::trim(b.to_vec()),
            &self.modulus,
        ))
    }

    pub fn pow(&self, a: &[u64], e: u64) -> ExtElem {
        self.pad(poly::pow_mod(
            &self.base,
            &poly::trim(a.to_vec()),
            e,
            &self.modulus,
        ))
    }

    pub fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&x| x == 0)
    }

    pub fn has_order(&self, a: &[u64], n: u64) -> bool {
        self.is_one(&self.pow(a, n))
            && arith::prime_divisors(n)
                .into_iter()
                .all(|q| !self.is_one(&self.pow(a, n / q)))
    }

    /// An element of multiplicative order exactly `n` (`n | p^m - 1`):
    /// `x^((p^m-1)/n)` for the first `x` in index order for which this
    /// power has order `n`.
    pub fn element_of_order(&self, n: u64) -> ExtElem {
        let q1 = self.size() - 1;
        assert_eq!(q1 % n, 0, "order must divide the unit group order");
        (1..=q1)
            .map(|i| self.pow(&self.from_index(i), q1 / n))
            .find(|y| self.has_order(y, n))
            .expect("the unit group is cyclic")
    }
}
