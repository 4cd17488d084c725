//! Restriction maps and Sha groups.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::bar::Bar;
use super::hbar::{h_bar_capped, CohomGroup, Coeffs, Path};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::intlin::{self, AbelianInvariants, IntMat, SnfTracking};
use crate::permgrp::PermGroup;

/// A restriction map `H^i(H, M) -> H^i(C, M)` on the chosen generators.
#[derive(Debug, Clone)]
pub struct Restriction {
    /// Column `j` holds the coordinates of the image of generator `j`.
    pub matrix: IntMat,
    pub target: CohomGroup,
}

fn embedding(small: &Bar, big: &Bar) -> Result<Vec<usize>> {
    small
        .elems
        .list()
        .iter()
        .map(|p| big.elems.index_of(p).ok_or_else(|| Error::NotSubgroup(format!("{p} is not in the source group"))))
        .collect()
}

/// Restricts the representative cocycles of `source` to `c` and reads off
/// their classes in `H^i(C, M)`.
pub fn restriction(source: &CohomGroup, c: &PermGroup, caps: &Caps) -> Result<Restriction> {
    c.require_subgroup_of(&source.group)?;
    let target = h_bar_capped(source.degree, c, source.coefficients.clone(), caps)?;
    let k = source.orders.len();
    let mut matrix = IntMat::zeros(target.orders.len(), k);
    if !target.is_trivial() {
        let embed = embedding(target.bar(), source.bar())?;
        for (j, z) in source.cocycle_reps.iter().enumerate() {
            let zc = target.bar().restrict_from(source.bar(), &embed, source.degree, z);
            for (l, v) in target.coordinates(&zc)?.into_iter().enumerate() {
                matrix[(l, j)] = v;
            }
        }
    }
    Ok(Restriction { matrix, target })
}

/// Matrix of the restriction map over the invariant-factor presentations.
pub fn restriction_map(source: &CohomGroup, c: &PermGroup) -> Result<IntMat> {
    Ok(restriction(source, c, &Caps::default())?.matrix)
}

/// `Sha^i(H, M)` with witnesses.
#[derive(Debug, Clone)]
pub struct ShaGroup {
    pub degree: usize,
    pub group: PermGroup,
    pub coefficients: String,
    pub invariants: AbelianInvariants,
    /// Cocycles generating Sha, with their orders.
    pub witnesses: Vec<Vec<BigInt>>,
    pub witness_orders: Vec<BigInt>,
    pub cohomology: CohomGroup,
    /// Number of cyclic subgroups whose restriction kernels were intersected.
    pub cyclic_checked: usize,
    pub path: Path,
}

pub fn sha(i: usize, h: &PermGroup, coeffs: impl Into<Coeffs>) -> Result<ShaGroup> {
    sha_capped(i, h, coeffs, &Caps::default())
}

/// Intersection of the kernels of restriction to every cyclic subgroup.
pub fn sha_capped(i: usize, h: &PermGroup, coeffs: impl Into<Coeffs>, caps: &Caps) -> Result<ShaGroup> {
    let coeffs = coeffs.into();
    let name = coeffs.name();
    let hc = h_bar_capped(i, h, coeffs, caps)?;
    let cyclic: Vec<PermGroup> = h
        .cyclic_subgroup_reps(caps.bar(i))?
        .into_iter()
        .filter(|c| !c.generators().is_empty())
        .collect();
    let k = hc.orders.len();
    let (witnesses, witness_orders) = if k == 0 {
        (Vec::new(), Vec::new())
    } else {
        let maps = cyclic.par_iter().map(|c| restriction(&hc, c, caps)).collect::<Result<Vec<_>>>()?;
        sha_kernel(&hc, &maps)
    };
    Ok(ShaGroup {
        degree: i,
        group: h.clone(),
        coefficients: name,
        invariants: AbelianInvariants::from_factors(witness_orders.iter().cloned(), 0),
        witnesses,
        witness_orders,
        cohomology: hc,
        cyclic_checked: cyclic.len(),
        path: Path::Bar,
    })
}

/// Kernel of `(+) Z/s_j -> (+)_C H^i(C, M)` as a subgroup with generators.
fn sha_kernel(hc: &CohomGroup, maps: &[Restriction]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let k = hc.orders.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut mods: Vec<BigInt> = Vec::new();
    for r in maps {
        for (l, t) in r.target.orders.iter().enumerate() {
            rows.push((0..k).map(|j| r.matrix[(l, j)].clone()).collect());
            mods.push(t.clone());
        }
    }
    let lg = if rows.is_empty() {
        IntMat::identity(k)
    } else {
        // x with R x = 0 modulo the target orders.
        let q = rows.len();
        let mut m = IntMat::zeros(q, k + q);
        for (l, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m[(l, j)] = v.clone();
            }
            m[(l, k + l)] = mods[l].clone();
        }
        let ker = intlin::kernel_basis(&m);
        let idx: Vec<usize> = (0..k).collect();
        ker.select_rows(&idx)
    };
    let diag = IntMat::from_vec(
        k,
        k,
        (0..k * k).map(|x| if x / k == x % k { hc.orders[x / k].clone() } else { BigInt::zero() }).collect(),
    );
    let lb = intlin::lattice_basis(&IntMat::hstack(&[&lg, &diag]));
    let c = intlin::solve_linear(&lb, &diag).expect("orders kill the cohomology");
    let s = intlin::snf_with(&c, SnfTracking { u: true, v: false, left: false, right: false });
    let u = s.u.expect("tracked");
    let mut witnesses = Vec::new();
    let mut orders = Vec::new();
    for j in 0..k {
        let d = s.s[(j, j)].clone();
        if d == BigInt::from(1) {
            continue;
        }
        let x = lb.mul(&IntMat::column(u.col(j))).col(0);
        witnesses.push(hc.combine(&x));
        orders.push(d);
    }
    (witnesses, orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{aug_kernel, natural};
    use crate::permgrp::alpha_beta;

    #[test]
    fn sha_examples() {
        let s4 = PermGroup::symmetric(4);
        let a = aug_kernel(&natural(&s4)).unwrap();
        assert!(sha(1, &s4, &a).unwrap().invariants.is_trivial());
        let c4 = PermGroup::cyclic(4);
        let a4 = aug_kernel(&natural(&c4)).unwrap();
        assert!(sha(1, &c4, &a4).unwrap().invariants.is_trivial());
        let h = alpha_beta(6, 2).unwrap();
        let s6 = PermGroup::symmetric(6);
        let a5 = aug_kernel(&natural(&s6)).unwrap();
        let s = sha(1, &h, &a5).unwrap();
        assert_eq!(s.invariants.torsion_u64(), vec![2]);
        // Witnesses restrict to coboundaries on every cyclic subgroup.
        for c in h.cyclic_subgroup_reps(1000).unwrap() {
            let r = restriction(&s.cohomology, &c, &Caps::default()).unwrap();
            let wc = r.target.bar().restrict_from(
                s.cohomology.bar(),
                &r.target.bar().elems.list().iter().map(|p| s.cohomology.bar().elems.index_of(p).unwrap()).collect::<Vec<_>>(),
                1,
                &s.witnesses[0],
            );
            assert!(r.target.coordinates(&wc).unwrap().iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn restriction_from_sn_to_long_cycle_is_iso() {
        let s4 = PermGroup::symmetric(4);
        let a = aug_kernel(&natural(&s4)).unwrap();
        let h = h_bar_capped(1, &s4, &a, &Caps::default()).unwrap();
        let c = PermGroup::from_cycles_1based(4, &[vec![vec![1, 2, 3, 4]]], None).unwrap();
        let m = restriction_map(&h, &c).unwrap();
        assert_eq!(m.rows(), 1);
        let v = &m[(0, 0)];
        assert!(num_integer::Integer::gcd(v, &BigInt::from(4)) == BigInt::from(1));
        assert_eq!(restriction_map(&h, &PermGroup::trivial(4)).unwrap().rows(), 0);
    }
}
