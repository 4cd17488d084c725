use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Isomorphism type of a finitely generated abelian group:
/// `Z/d_1 + ... + Z/d_k + Z^free_rank` with `1 < d_1 | d_2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct AbelianInvariants {
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_factors([BigInt::from(n)], 0)
    }

    /// Normalizes an arbitrary list of cyclic orders (zeros count as free
    /// summands, units are dropped) into invariant-factor form.
    pub fn from_factors<I: IntoIterator<Item = BigInt>>(factors: I, free_rank: usize) -> Self {
        let mut free = free_rank;
        // Split into prime powers, then regroup.
        let mut prime_powers: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
        for f in factors {
            let f = f.abs();
            if f.is_zero() {
                free += 1;
                continue;
            }
            for (p, pk) in prime_power_parts(&f) {
                match prime_powers.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, v)) => v.push(pk),
                    None => prime_powers.push((p, vec![pk])),
                }
            }
        }
        let len = prime_powers.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); len];
        for (_, mut v) in prime_powers {
            v.sort();
            // Largest powers go to the last invariant factors.
            let off = len - v.len();
            for (i, pk) in v.into_iter().enumerate() {
                torsion[off + i] *= pk;
            }
        }
        AbelianInvariants { torsion, free_rank: free }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().fold(BigInt::one(), |a, b| a * b))
    }

    /// Direct sum.
    pub fn sum(&self, other: &Self) -> Self {
        Self::from_factors(
            self.torsion.iter().chain(&other.torsion).cloned(),
            self.free_rank + other.free_rank,
        )
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|d| u64::try_from(d).unwrap_or(u64::MAX)).collect()
    }
}

fn prime_power_parts(n: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut n = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            let mut pk = BigInt::one();
            while n.is_multiple_of(&p) {
                n /= &p;
                pk *= &p;
            }
            out.push((p.clone(), pk));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n.clone(), n));
    }
    out
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(v: &[u64]) -> AbelianInvariants {
        AbelianInvariants::from_factors(v.iter().map(|&x| BigInt::from(x)), 0)
    }

    #[test]
    fn normalization() {
        assert_eq!(inv(&[2, 3]).torsion_u64(), vec![6]);
        assert_eq!(inv(&[2, 2]).torsion_u64(), vec![2, 2]);
        assert_eq!(inv(&[4, 6]).torsion_u64(), vec![2, 12]);
        assert_eq!(inv(&[1, 1]), AbelianInvariants::trivial());
        assert_eq!(format!("{}", inv(&[2, 4])), "Z/2 + Z/4");
    }
}
