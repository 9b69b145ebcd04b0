//! Exact arithmetic in cyclotomic fields `Q(ζ_e)`.
//!
//! [`Cyclotomic`] is the canonical form: rational coefficients on the power
//! basis `1, ζ, …, ζ^(φ(e)-1)`. [`RootSum`] is an integer combination of
//! `e`-th roots of unity, the shape character values come out of the
//! table builder in; it supports fast exact inner products by accumulating
//! in `Z[x]/(x^e - 1)` and reducing modulo `Φ_e` once.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;

/// Data for one conductor: `Φ_e` and the reductions of `x^k`, `k < e`.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u64,
    phi: usize,
    /// `Φ_e`, coefficients low to high.
    poly: Vec<i64>,
    /// `x^k mod Φ_e` for `0 <= k < e`.
    powers: Vec<Vec<i64>>,
}

fn mobius(n: u64) -> i32 {
    let f = arith::factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Φ_e = Π_{d | e} (x^d - 1)^μ(e/d)`.
fn cyclotomic_poly(e: u64) -> Vec<i64> {
    let divisors: Vec<u64> = (1..=e).filter(|d| e % d == 0).collect();
    let mut poly = vec![1i64];
    for &d in &divisors {
        if mobius(e / d) == 1 {
            let mut next = vec![0i64; poly.len() + d as usize];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d as usize] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(e / d) == -1 {
            // exact division by x^d - 1, from the top
            let d = d as usize;
            let mut r = poly.clone();
            let mut q = vec![0i64; r.len() - d];
            for s in (0..q.len()).rev() {
                let c = r[s + d];
                q[s] = c;
                r[s + d] -= c;
                r[s] += c;
            }
            debug_assert!(r.iter().all(|&x| x == 0));
            poly = q;
        }
    }
    poly
}

impl CyclotomicField {
    fn build(e: u64) -> Self {
        let poly = cyclotomic_poly(e);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by x and reduce using the monic Φ_e
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * poly[i];
            }
            cur[0] = -top * poly[0];
        }
        CyclotomicField {
            conductor: e,
            phi,
            poly,
            powers,
        }
    }

    /// Shared field data for conductor `e`.
    pub fn get(e: u64) -> Arc<CyclotomicField> {
        assert!(e >= 1);
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&e) {
            return f.clone();
        }
        let f = Arc::new(CyclotomicField::build(e));
        cache.lock().unwrap().entry(e).or_insert(f).clone()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn minimal_polynomial(&self) -> &[i64] {
        &self.poly
    }

    /// Power-basis coefficients of `ζ^k`.
    pub fn power(&self, k: u64) -> &[i64] {
        &self.powers[(k % self.conductor) as usize]
    }

    /// Whether `Σ_k v[k] x^k` (with `v.len() == e`) vanishes at `ζ_e`.
    pub fn vanishes(&self, v: &[i128]) -> bool {
        debug_assert_eq!(v.len() as u64, self.conductor);
        match self.reduce_i128(v) {
            Some(r) => r.iter().all(|&x| x == 0),
            None => self.reduce_big(v).iter().all(|x| x.is_zero()),
        }
    }

    /// Power-basis coefficients of `Σ_k v[k] ζ^k`.
    pub fn reduce(&self, v: &[i128]) -> Vec<BigInt> {
        match self.reduce_i128(v) {
            Some(r) => r.into_iter().map(BigInt::from).collect(),
            None => self.reduce_big(v),
        }
    }

    /// `Σ_k v[k] ζ^k` as an integer, if it is one.
    pub fn integer_value(&self, v: &[i128]) -> Option<BigInt> {
        let r = self.reduce(v);
        r[1..].iter().all(|x| x.is_zero()).then(|| r[0].clone())
    }

    fn reduce_i128(&self, v: &[i128]) -> Option<Vec<i128>> {
        let mut r = v.to_vec();
        let phi = self.phi;
        for s in (phi..r.len()).rev() {
            let c = r[s];
            if c == 0 {
                continue;
            }
            for (i, &d) in self.poly.iter().enumerate().take(phi) {
                if d != 0 {
                    let t = c.checked_mul(d as i128)?;
                    r[s - phi + i] = r[s - phi + i].checked_sub(t)?;
                }
            }
            r[s] = 0;
        }
        r.truncate(phi);
        Some(r)
    }

    fn reduce_big(&self, v: &[i128]) -> Vec<BigInt> {
        let mut r: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let phi = self.phi;
        for s in (phi..r.len()).rev() {
            let c = std::mem::take(&mut r[s]);
            if c.is_zero() {
                continue;
            }
            for (i, &d) in self.poly.iter().enumerate().take(phi) {
                if d != 0 {
                    r[s - phi + i] -= &c * d;
                }
            }
        }
        r.truncate(phi);
        r
    }
}

/// An element of `Q(ζ_e)` in canonical power-basis form.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn zero(e: u64) -> Self {
        let field = CyclotomicField::get(e);
        let coeffs = vec![BigRational::zero(); field.phi];
        Cyclotomic { field, coeffs }
    }

    pub fn from_integer(e: u64, n: i64) -> Self {
        Self::from_rational(e, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(e: u64, q: BigRational) -> Self {
        let mut z = Self::zero(e);
        z.coeffs[0] = q;
        z
    }

    /// `ζ_e^k`.
    pub fn zeta_power(e: u64, k: i64) -> Self {
        let mut z = Self::zero(e);
        let k = k.rem_euclid(e as i64) as u64;
        for (c, &x) in z.coeffs.iter_mut().zip(z.field.power(k)) {
            *c = BigRational::from_integer(x.into());
        }
        z
    }

    /// Builds `Σ c_k ζ^k` from `(k, c_k)` terms, `k` taken modulo `e`.
    pub fn from_terms(e: u64, terms: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let field = CyclotomicField::get(e);
        let mut acc = vec![0i128; field.phi];
        for (k, c) in terms {
            for (a, &x) in acc.iter_mut().zip(field.power(k)) {
                *a += c as i128 * x as i128;
            }
        }
        let coeffs = acc
            .into_iter()
            .map(|x| BigRational::from_integer(x.into()))
            .collect();
        Cyclotomic { field, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn is_rational_integer(&self) -> bool {
        self.is_rational() && self.coeffs[0].is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Whether every power-basis coefficient is an integer, i.e. whether the
    /// element is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn reduce_dense(field: Arc<CyclotomicField>, dense: Vec<BigRational>) -> Self {
        let phi = field.phi;
        let mut r = dense;
        for s in (phi..r.len()).rev() {
            let c = std::mem::replace(&mut r[s], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for (i, &d) in field.poly.iter().enumerate().take(phi) {
                if d != 0 {
                    r[s - phi + i] -= &c * BigRational::from_integer(d.into());
                }
            }
        }
        r.resize(phi, BigRational::zero());
        Cyclotomic { field, coeffs: r }
    }

    /// Image under `ζ ↦ ζ^k` (`gcd(k, e) = 1`).
    pub fn galois(&self, k: i64) -> Self {
        let e = self.conductor();
        debug_assert_eq!(arith::gcd(k.rem_euclid(e as i64) as u64, e), 1);
        let mut out = Self::zero(e);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = (i as i64 * k).rem_euclid(e as i64) as u64;
            for (o, &x) in out.coeffs.iter_mut().zip(self.field.power(idx)) {
                if x != 0 {
                    *o += c * BigRational::from_integer(x.into());
                }
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Numeric approximation, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * i as f64 / e;
            re += x * t.cos();
            im += x * t.sin();
        }
        (re, im)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor(), rhs.conductor());
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor(), rhs.conductor());
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor(), rhs.conductor());
        let n = self.coeffs.len();
        let mut dense = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce_dense(self.field.clone(), dense)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sum of terms `c*E(e)^k`; plain integers for rational values.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", fmt_rational(&q));
        }
        let e = self.conductor();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("E({})", e),
                _ => format!("E({})^{}", e, i),
            };
            if i == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", root)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), root)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// `Σ m_k ζ_e^k` with integer multiplicities, sparse, sorted by `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSum {
    pub conductor: u64,
    pub terms: Vec<(u64, i64)>,
}

impl RootSum {
    pub fn integer(e: u64, n: i64) -> Self {
        RootSum {
            conductor: e,
            terms: if n == 0 { Vec::new() } else { vec![(0, n)] },
        }
    }

    pub fn new(e: u64, terms: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut dense: std::collections::BTreeMap<u64, i64> = Default::default();
        for (k, c) in terms {
            *dense.entry(k % e).or_default() += c;
        }
        RootSum {
            conductor: e,
            terms: dense.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        let e = self.conductor;
        RootSum::new(e, self.terms.iter().map(|&(k, c)| ((e - k) % e, c)))
    }

    /// The same number viewed in conductor `f`, a multiple of this one.
    pub fn lift_to(&self, f: u64) -> Self {
        assert_eq!(f % self.conductor, 0);
        let s = f / self.conductor;
        RootSum {
            conductor: f,
            terms: self.terms.iter().map(|&(k, c)| (k * s, c)).collect(),
        }
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::from_terms(self.conductor, self.terms.iter().copied())
    }

    /// Adds `weight * a * b` into a dense accumulator of length `e`.
    pub fn accumulate_product(acc: &mut [i128], weight: i128, a: &RootSum, b: &RootSum) {
        let e = acc.len() as u64;
        debug_assert!(a.conductor == e && b.conductor == e);
        for &(i, x) in &a.terms {
            for &(j, y) in &b.terms {
                acc[((i + j) % e) as usize] += weight * x as i128 * y as i128;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_poly(105).contains(&-2));
    }

    #[test]
    fn roots_of_unity() {
        for e in [1u64, 2, 3, 8, 12, 15] {
            let z = Cyclotomic::zeta_power(e, 1);
            let mut acc = Cyclotomic::from_integer(e, 1);
            for _ in 0..e {
                acc = &acc * &z;
            }
            assert_eq!(acc, Cyclotomic::from_integer(e, 1));
            let sum = (0..e as i64).fold(Cyclotomic::zero(e), |s, k| {
                &s + &Cyclotomic::zeta_power(e, k)
            });
            assert_eq!(sum.is_zero(), e > 1);
        }
    }

    #[test]
    fn conjugation_and_display() {
        // ζ_3 + ζ_3^2 = -1
        let z = Cyclotomic::zeta_power(3, 1);
        assert_eq!(&z + &z.conj(), Cyclotomic::from_integer(3, -1));
        assert!((&z * &z.conj()).is_rational_integer());
        assert_eq!(
            format!("{}", Cyclotomic::from_terms(8, [(1, 2), (3, -1)])),
            "2*E(8)-E(8)^3"
        );
        assert_eq!(format!("{}", Cyclotomic::from_integer(8, -3)), "-3");
    }

    #[test]
    fn vanishing_in_group_ring() {
        let f = CyclotomicField::get(6);
        // 1 + ζ^2 + ζ^4 = 0 for ζ = ζ_6
        assert!(f.vanishes(&[1, 0, 1, 0, 1, 0]));
        assert!(!f.vanishes(&[1, 0, 0, 0, 0, 0]));
    }

    proptest! {
        #[test]
        fn ring_laws(e in 1u64..30, a in proptest::collection::vec((0u64..30, -5i64..5), 0..6),
                     b in proptest::collection::vec((0u64..30, -5i64..5), 0..6)) {
            let x = Cyclotomic::from_terms(e, a.clone());
            let y = Cyclotomic::from_terms(e, b.clone());
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            // group-ring product agrees with field product
            let rx = RootSum::new(e, a);
            let ry = RootSum::new(e, b);
            let mut acc = vec![0i128; e as usize];
            RootSum::accumulate_product(&mut acc, 1, &rx, &ry);
            let prod = Cyclotomic::from_terms(e, acc.iter().enumerate().map(|(k, &c)| (k as u64, c as i64)));
            prop_assert_eq!(prod, &x * &y);
        }
    }
}
