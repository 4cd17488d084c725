//! Tate groups in degrees 0 and -1, and the closed forms built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::glat::{dual, fixed_points, GLattice};
use crate::intlin::{self, AbelianInvariants, IntMat};
use crate::permgrp::PermGroup;

fn norm_matrix(m: &GLattice) -> Result<IntMat> {
    let t = m.element_matrices()?;
    let mut n = IntMat::zeros(m.rank(), m.rank());
    for g in t.iter() {
        n = n.add(g);
    }
    Ok(n)
}

/// Quotient of `Z^cols(basis)` by the coordinates of `sub` in `basis`.
fn relative_cokernel(basis: &IntMat, sub: &IntMat) -> AbelianInvariants {
    if basis.cols() == 0 {
        return AbelianInvariants::trivial();
    }
    let x = intlin::solve_linear(basis, sub).expect("sublattice of the ambient lattice");
    intlin::cokernel_invariants(&x)
}

/// `Ĥ^0(H, M) = M^H / N_H M`.
pub fn tate_h0(h: &PermGroup, m: &GLattice) -> Result<AbelianInvariants> {
    let m = m.restrict(h)?;
    let f = fixed_points(&m, h)?;
    let n = norm_matrix(&m)?;
    Ok(relative_cokernel(&f, &n))
}

/// `Ĥ^-1(H, M) = ker N_H / I_H M`.
pub fn tate_hm1(h: &PermGroup, m: &GLattice) -> Result<AbelianInvariants> {
    let m = m.restrict(h)?;
    let n = norm_matrix(&m)?;
    let k = intlin::kernel_basis(&n);
    let id = IntMat::identity(m.rank());
    let parts: Vec<IntMat> = m.generator_matrices().iter().map(|g| g.sub(&id)).collect();
    if parts.is_empty() {
        return Ok(relative_cokernel(&k, &IntMat::zeros(m.rank(), 0)));
    }
    let refs: Vec<&IntMat> = parts.iter().collect();
    Ok(relative_cokernel(&k, &IntMat::hstack(&refs)))
}

/// `H^1(H, M)` through `Ĥ^-1(H, M*)`.
pub fn h1_dual_fast(h: &PermGroup, m: &GLattice) -> Result<AbelianInvariants> {
    tate_hm1(h, &dual(m))
}

/// `Z / gcd(orbit sizes)`.
pub fn h1_aug_formula(h: &PermGroup) -> AbelianInvariants {
    AbelianInvariants::from_factors([orbit_gcd(h)], 0)
}

fn orbit_gcd(h: &PermGroup) -> BigInt {
    h.orbit_sizes().iter().fold(BigInt::zero(), |a, &s| a.gcd(&BigInt::from(s)))
}

/// `Z / (d_H / L)`, with `L` the lcm of `d_C` over cyclic subgroups `C`.
pub fn sha1_aug_fast(h: &PermGroup) -> Result<AbelianInvariants> {
    sha1_aug_fast_capped(h, &Caps::default())
}

pub fn sha1_aug_fast_capped(h: &PermGroup, caps: &Caps) -> Result<AbelianInvariants> {
    let dh = orbit_gcd(h);
    if dh.is_zero() {
        return Err(Error::BadParams("group acts on no points".into()));
    }
    let mut l = BigInt::one();
    for c in h.cyclic_subgroup_reps(caps.closure)? {
        l = l.lcm(&orbit_gcd(&c));
    }
    Ok(AbelianInvariants::from_factors([dh / l], 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{aug_kernel, natural, sign_lattice, trivial_lattice};

    #[test]
    fn tate_examples() {
        let c2 = PermGroup::symmetric(2);
        assert_eq!(tate_h0(&c2, &trivial_lattice(&c2, 1)).unwrap().torsion_u64(), vec![2]);
        assert_eq!(tate_hm1(&c2, &sign_lattice(&c2)).unwrap().torsion_u64(), vec![2]);
        assert!(tate_h0(&c2, &natural(&c2)).unwrap().is_trivial());
        let s3 = PermGroup::symmetric(3);
        let t = PermGroup::trivial(3);
        assert!(tate_hm1(&t, &natural(&s3)).unwrap().is_trivial());
        for h in crate::permgrp::subgroups_up_to_conjugacy(&s3, 200).unwrap().members.iter() {
            assert!(tate_hm1(h, &natural(&s3)).unwrap().is_trivial());
        }
    }

    #[test]
    fn dual_fast_on_s4() {
        let s4 = PermGroup::symmetric(4);
        let a = aug_kernel(&natural(&s4)).unwrap();
        assert_eq!(h1_dual_fast(&s4, &a).unwrap().torsion_u64(), vec![4]);
        let c2 = PermGroup::symmetric(2);
        assert!(h1_dual_fast(&c2, &trivial_lattice(&c2, 1)).unwrap().is_trivial());
    }

    #[test]
    fn closed_forms() {
        let s5 = PermGroup::symmetric(5);
        assert_eq!(h1_aug_formula(&s5).torsion_u64(), vec![5]);
        assert!(h1_aug_formula(&PermGroup::trivial(4)).is_trivial());
        assert_eq!(sha1_aug_fast(&PermGroup::alternating(8)).unwrap().torsion_u64(), vec![2]);
        assert_eq!(sha1_aug_fast(&PermGroup::alternating(4)).unwrap().torsion_u64(), vec![2]);
        assert!(sha1_aug_fast(&PermGroup::cyclic(5)).unwrap().is_trivial());
        let sp = crate::permgrp::sigma_pi(3).unwrap();
        assert_eq!(sha1_aug_fast(&sp).unwrap().torsion_u64(), vec![3]);
    }
}
