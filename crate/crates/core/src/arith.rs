//! Small integer helpers: primes, factorisations, valuations, modular powers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// p-adic valuation; `valuation(0, p)` is 0 by convention.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    if n == 0 {
        return 0;
    }
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn valuation_big(n: &BigUint, p: u64) -> u32 {
    if n.is_zero() {
        return 0;
    }
    let pb = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// The p-part of `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    p.pow(valuation(n, p))
}

pub fn is_p_power(n: u64, p: u64) -> bool {
    n >= 1 && n == p_part(n, p)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime `m`.
pub fn mod_inv(a: u64, m: u64) -> u64 {
    debug_assert!(a % m != 0);
    mod_pow(a, m - 2, m)
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut k = 1;
    let mut x = a % m;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

/// Smallest prime `l > lower` with `l ≡ 1 (mod e)`.
pub fn prime_congruent_one(e: u64, lower: u64) -> u64 {
    let mut l = lower / e * e + 1;
    if l <= lower {
        l += e;
    }
    while !is_prime(l) {
        l += e;
    }
    l
}

pub fn integer_sqrt_ceil(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert!(is_prime(2) && is_prime(421) && !is_prime(1) && !is_prime(91));
        assert_eq!(factorize(5040), vec![(2, 4), (3, 2), (5, 1), (7, 1)]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(24, 2), 3);
        assert_eq!(p_part(5040, 3), 9);
        assert!(is_p_power(27, 3) && is_p_power(1, 5) && !is_p_power(12, 2));
        assert_eq!(valuation_big(&factorial(10), 2), 8);
    }

    #[test]
    fn congruent_prime() {
        assert_eq!(prime_congruent_one(420, 142), 421);
        assert_eq!(prime_congruent_one(2, 10), 11);
        assert_eq!(multiplicative_order(2, 105), 12);
        assert_eq!(euler_phi(420), 96);
    }

    #[test]
    fn sqrt_ceil() {
        assert_eq!(integer_sqrt_ceil(5040), 71);
        assert_eq!(integer_sqrt_ceil(16), 4);
        assert_eq!(integer_sqrt_ceil(1), 1);
    }
}
