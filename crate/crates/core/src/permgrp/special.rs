//! Explicit subgroups used by the Sha computations.

use serde::{Deserialize, Serialize};

use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecialSubgroup {
    /// `<alpha, beta>` built from the blocks of `p` consecutive points, `n = p k`.
    AlphaBeta { n: usize, p: usize },
    /// `<sigma, pi>` on `p^2` points, rows and columns of a `p x p` square.
    SigmaPi { p: usize },
    /// `alpha_beta(n, 2)` for even `n >= 6`.
    EvenPairs { n: usize },
    /// A Sylow 2-subgroup of the alternating group on `n = 2^a` points.
    Sylow2Alt { n: usize },
}

impl SpecialSubgroup {
    pub fn build(self) -> Result<PermGroup> {
        match self {
            SpecialSubgroup::AlphaBeta { n, p } => alpha_beta(n, p),
            SpecialSubgroup::SigmaPi { p } => sigma_pi(p),
            SpecialSubgroup::EvenPairs { n } => even_pairs(n),
            SpecialSubgroup::Sylow2Alt { n } => sylow2_alt(n),
        }
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The `p`-cycle on block `i` (1-based), i.e. on points `(i-1)p .. ip-1`.
fn sigma(n: usize, p: usize, i: usize) -> Perm {
    Perm::from_cycles(n, &[((i - 1) * p..i * p).collect()]).unwrap()
}

/// Elementary abelian group of rank 2 whose cyclic subgroups all have fixed
/// points while the whole group has none.
///
/// Requires `n = p k` with `k >= p + 1`. When `k = p` the block construction
/// degenerates (it yields a cyclic group), so the transitive `sigma_pi(p)`
/// group is returned instead.
pub fn alpha_beta(n: usize, p: usize) -> Result<PermGroup> {
    if !is_prime(p) || !n.is_multiple_of(p) {
        return Err(Error::BadParams(format!("alpha_beta needs a prime p dividing n, got n={n}, p={p}")));
    }
    let k = n / p;
    if k == p {
        return Ok(sigma_pi(p)?.with_name(format!("alpha_beta({n},{p})")));
    }
    if k < p + 1 {
        return Err(Error::BadParams(format!("alpha_beta needs n/p >= p, got n={n}, p={p}")));
    }
    let mut alpha = Perm::identity(n);
    for i in 1..k {
        alpha = alpha.mul(&sigma(n, p, i));
    }
    let mut beta = Perm::identity(n);
    for i in 1..p {
        beta = beta.mul(&sigma(n, p, i).pow(-(i as i64)));
    }
    for i in p + 1..=k {
        beta = beta.mul(&sigma(n, p, i));
    }
    PermGroup::named(n, vec![alpha, beta], format!("alpha_beta({n},{p})"))
}

/// `C_p x C_p` acting regularly on `p^2` points.
pub fn sigma_pi(p: usize) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::BadParams(format!("sigma_pi needs a prime, got {p}")));
    }
    let n = p * p;
    let mut s = Perm::identity(n);
    let mut pi = Perm::identity(n);
    for i in 1..=p {
        s = s.mul(&sigma(n, p, i));
        let col: Vec<usize> = (0..p).map(|j| (i - 1) + j * p).collect();
        pi = pi.mul(&Perm::from_cycles(n, &[col]).unwrap());
    }
    PermGroup::named(n, vec![s, pi], format!("sigma_pi({p})"))
}

/// `<(1,2)(3,4)...(n-3,n-2), (1,2)(5,6)...(n-1,n)>` for even `n >= 6`.
pub fn even_pairs(n: usize) -> Result<PermGroup> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::BadParams(format!("even_pairs needs even n >= 6, got {n}")));
    }
    Ok(alpha_beta(n, 2)?.with_name(format!("even_pairs({n})")))
}

/// Iterated-wreath Sylow 2-subgroup of `S_n`, `n = 2^a`: the swaps of the two
/// halves of `[0, 2^j)` for `j = 1..a`.
pub fn sylow2_sym(n: usize) -> Result<PermGroup> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::BadParams(format!("sylow2 needs a power of two, got {n}")));
    }
    let mut gens = Vec::new();
    let mut half = 1;
    while 2 * half <= n {
        let mut img: Vec<usize> = (0..n).collect();
        for i in 0..half {
            img[i] = i + half;
            img[i + half] = i;
        }
        gens.push(Perm::from_images(img)?);
        half *= 2;
    }
    PermGroup::named(n, gens, format!("sylow2_sym({n})"))
}

/// Even part of [`sylow2_sym`], generated by Schreier generators for the
/// transversal `{1, t}` with `t` the first (odd) generator. The order is
/// checked against the 2-part of `|A_n|`.
pub fn sylow2_alt(n: usize) -> Result<PermGroup> {
    if n < 4 {
        return Err(Error::BadParams(format!("sylow2_alt needs n = 2^a >= 4, got {n}")));
    }
    let w = sylow2_sym(n)?;
    let t = w.generators()[0].clone();
    debug_assert!(!t.is_even());
    let mut gens = Vec::new();
    for s in w.generators() {
        for r in [Perm::identity(n), t.clone()] {
            let rs = r.mul(s);
            let g = if rs.is_even() { rs } else { rs.mul(&t.inverse()) };
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    let g = PermGroup::named(n, gens, format!("sylow2_alt({n})"))?;
    let two_part = {
        let mut v = 0u32;
        for k in 3..=n {
            v += (k as u64).trailing_zeros();
        }
        1u128 << v
    };
    let order = g.order()?;
    if order != two_part {
        return Err(Error::BadParams(format!("sylow2_alt({n}) has order {order}, expected {two_part}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_orbits() {
        let h = alpha_beta(6, 2).unwrap();
        assert_eq!(h.order().unwrap(), 4);
        assert_eq!(h.orbit_sizes(), vec![2, 2, 2]);
        let h = sigma_pi(3).unwrap();
        assert_eq!(h.order().unwrap(), 9);
        assert!(h.is_transitive());
        let t = sylow2_alt(4).unwrap();
        assert_eq!(t.order().unwrap(), 4);
        assert!(t.generators().iter().all(|g| g.is_even()));
        assert_eq!(sylow2_alt(8).unwrap().order().unwrap(), 64);
        assert_eq!(alpha_beta(4, 2).unwrap().order().unwrap(), 4);
        assert!(alpha_beta(4, 3).is_err());
        assert!(alpha_beta(6, 4).is_err());
        assert!(even_pairs(4).is_err());
    }

    #[test]
    fn even_pairs_generators() {
        let h = even_pairs(6).unwrap();
        let a = Perm::from_cycles_1based(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = Perm::from_cycles_1based(6, &[vec![1, 2], vec![5, 6]]).unwrap();
        assert_eq!(h.generators(), &[a, b]);
    }
}
