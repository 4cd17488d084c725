//! Fixed points, equivariant homomorphisms and bounded isomorphism search.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::finmod::FinModule;
use super::lattice::GLattice;
use crate::error::{Error, Result};
use crate::intlin::{self, IntMat};
use crate::permgrp::PermGroup;

fn stacked_minus_identity(gens: &[IntMat], r: usize) -> IntMat {
    let id = IntMat::identity(r);
    let blocks: Vec<IntMat> = gens.iter().map(|g| g.sub(&id)).collect();
    let refs: Vec<&IntMat> = blocks.iter().collect();
    if refs.is_empty() {
        IntMat::zeros(0, r)
    } else {
        IntMat::vstack(&refs)
    }
}

/// Saturated basis (as columns) of `M^H`.
pub fn fixed_points(m: &GLattice, h: &PermGroup) -> Result<IntMat> {
    let m = m.restrict(h)?;
    let r = m.rank();
    if m.generator_matrices().is_empty() {
        return Ok(IntMat::identity(r));
    }
    Ok(intlin::kernel_basis(&stacked_minus_identity(m.generator_matrices(), r)))
}

/// Columns span the lattice `{y : (h - 1) y = 0 mod m for all h}`, which
/// contains `m Z^r`; its image mod `m` is `M^H`.
pub fn fixed_points_mod(fm: &FinModule, h: &PermGroup) -> Result<IntMat> {
    let fm = fm.restrict(h)?;
    let r = fm.rank();
    let gens = fm.generator_matrices();
    let (x, _) = intlin::kernel_mod(&stacked_minus_identity(&gens, r), fm.modulus());
    Ok(x)
}

/// Coefficient matrix of `F -> rho_N(g) F - F rho_M(g)` on row-major `vec(F)`.
fn sylvester(a: &IntMat, b: &IntMat) -> IntMat {
    let (rn, rm) = (a.rows(), b.rows());
    a.kron(&IntMat::identity(rm)).sub(&IntMat::identity(rn).kron(&b.transpose()))
}

/// Z-basis of `Hom_G(M, N)`; each element is a `rank(N) x rank(M)` matrix.
pub fn equivariant_homs(m: &GLattice, n: &GLattice) -> Result<Vec<IntMat>> {
    m.same_group(n)?;
    let (rm, rn) = (m.rank(), n.rank());
    if rm == 0 || rn == 0 {
        return Ok(Vec::new());
    }
    let blocks: Vec<IntMat> =
        m.generator_matrices().iter().zip(n.generator_matrices()).map(|(a, b)| sylvester(b, a)).collect();
    let k = if blocks.is_empty() {
        IntMat::identity(rm * rn)
    } else {
        let refs: Vec<&IntMat> = blocks.iter().collect();
        intlin::kernel_basis(&IntMat::vstack(&refs))
    };
    Ok((0..k.cols()).map(|c| IntMat::from_vec(rn, rm, k.col(c))).collect())
}

/// Largest number of candidate combinations tried per bound.
pub const ISO_SEARCH_BUDGET: u64 = 4_000_000;

/// Searches `sum c_i F_i` with `|c_i| <= bound`, by increasing max-norm, for
/// a map with determinant `+-1`.
pub fn find_iso_bounded(m: &GLattice, n: &GLattice, bound: i64) -> Result<Option<IntMat>> {
    m.same_group(n)?;
    if m.rank() != n.rank() {
        return Ok(None);
    }
    if m.rank() == 0 {
        return Ok(Some(IntMat::zeros(0, 0)));
    }
    let basis = equivariant_homs(m, n)?;
    let k = basis.len();
    if k == 0 {
        return Ok(None);
    }
    let mut tried = 0u64;
    for b in 1..=bound {
        let mut c = vec![-b; k];
        loop {
            if c.iter().any(|x| x.abs() == b) {
                tried += 1;
                if tried > ISO_SEARCH_BUDGET {
                    return Ok(None);
                }
                let mut f = IntMat::zeros(n.rank(), m.rank());
                for (ci, bi) in c.iter().zip(&basis) {
                    if *ci != 0 {
                        f = f.add(&bi.scale(&BigInt::from(*ci)));
                    }
                }
                if intlin::det(&f).abs().is_one() {
                    return Ok(Some(f));
                }
            }
            // Odometer step.
            let mut i = 0;
            while i < k && c[i] == b {
                c[i] = -b;
                i += 1;
            }
            if i == k {
                break;
            }
            c[i] += 1;
        }
    }
    Ok(None)
}

/// Bounded isomorphism search with coefficient bound 3, widened to 5.
/// `None` does not prove non-isomorphism.
pub fn find_iso(m: &GLattice, n: &GLattice) -> Result<Option<IntMat>> {
    if let Some(f) = find_iso_bounded(m, n, 3)? {
        return Ok(Some(f));
    }
    find_iso_bounded(m, n, 5)
}

/// Checks that `f` is an equivariant isomorphism `M -> N`.
pub fn verify_iso(f: &IntMat, m: &GLattice, n: &GLattice) -> bool {
    GLattice::is_equivariant(f, m, n) && f.is_square() && intlin::is_unimodular(f)
}

/// The G-stable sublattice spanned by the (independent) columns of `basis`,
/// in that basis.
pub fn sublattice(m: &GLattice, basis: &IntMat) -> Result<GLattice> {
    let q = basis.cols();
    let gens = m
        .generator_matrices()
        .iter()
        .map(|g| {
            intlin::solve_linear(basis, &g.mul(basis))
                .ok_or_else(|| Error::BadParams("sublattice is not G-stable".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GLattice::raw(m.group(), q, gens, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{aug_kernel, natural, trivial_lattice};

    #[test]
    fn hom_ranks() {
        let s4 = PermGroup::symmetric(4);
        let z = trivial_lattice(&s4, 1);
        let u = natural(&s4);
        let a = aug_kernel(&u).unwrap();
        assert_eq!(equivariant_homs(&z, &z).unwrap().len(), 1);
        assert_eq!(equivariant_homs(&z, &a).unwrap().len(), 0);
        assert_eq!(equivariant_homs(&u, &u).unwrap().len(), 2);
        assert_eq!(fixed_points(&u, &s4).unwrap().cols(), 1);
        assert_eq!(fixed_points(&a, &s4).unwrap().cols(), 0);
        let f = find_iso(&a, &a).unwrap().unwrap();
        assert!(verify_iso(&f, &a, &a));
    }
}
