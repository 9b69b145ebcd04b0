use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not a weakly decreasing list of positive parts",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&r| r > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let cols = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (cols.parts[j as usize] - i as u32 - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for first in (1..=n.min(max)).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Degree of the irreducible character of `S_n` labelled by `λ`:
/// `n!` over the product of hook lengths.
pub fn hook_degree(lambda: &Partition) -> BigUint {
    let prod = lambda
        .hook_lengths()
        .iter()
        .flatten()
        .fold(BigUint::from(1u32), |acc, &h| acc * h);
    arith::factorial(lambda.size() as u64) / prod
}

/// For odd `p` with `p <= n < p^2`, `n > 4`, `(n, p) != (6, 3)`, and
/// `n = ap + b` (`0 <= b < p`): `(ap, 1^b)` if `b > 0`, else `(ap-2, 2)`.
/// The resulting degree has `p`-part exactly `p`.
pub fn lemma42_partition(n: u32, p: u32) -> Result<Partition> {
    if p == 2 || !arith::is_prime(p as u64) {
        return Err(Error::Hypothesis(format!("p = {} is not an odd prime", p)));
    }
    if n < p || n >= p * p || n <= 4 {
        return Err(Error::Hypothesis(format!(
            "need p <= n < p^2 and n > 4, got n = {}, p = {}",
            n, p
        )));
    }
    if (n, p) == (6, 3) {
        return Err(Error::Hypothesis("(n, p) = (6, 3) is excluded".into()));
    }
    let (a, b) = (n / p, n % p);
    let parts = if b != 0 {
        std::iter::once(a * p)
            .chain(std::iter::repeat_n(1, b as usize))
            .collect()
    } else {
        vec![a * p - 2, 2]
    };
    Partition::new(parts)
}
