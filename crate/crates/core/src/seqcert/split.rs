//! Equivariant sections and the pull-back splice.

use num_bigint::BigInt;
use num_traits::Zero;

use super::seq::{ExactSeq, Term};
use crate::error::{Error, Result};
use crate::flasque::{is_coflasque, Verdict};
use crate::glat::{dsum, equivariant_homs, sublattice, GLattice};
use crate::intlin::{self, IntMat};
use crate::permgrp::SubgroupCatalog;

/// An equivariant `s : Q -> E` with `f s = id`, if one exists. `None` is
/// definitive: the section equations are linear over `Z`.
pub fn find_splitting(f: &IntMat, e: &GLattice, q: &GLattice) -> Result<Option<IntMat>> {
    e.same_group(q)?;
    if !GLattice::is_equivariant(f, e, q) {
        return Err(Error::NotEquivariant { index: 0 });
    }
    let rq = q.rank();
    if rq == 0 {
        return Ok(Some(IntMat::zeros(e.rank(), 0)));
    }
    let basis = equivariant_homs(q, e)?;
    if basis.is_empty() {
        return Ok(None);
    }
    // Columns: vec(f B_i); right-hand side vec(I).
    let cols: Vec<Vec<BigInt>> = basis.iter().map(|b| f.mul(b).data().to_vec()).collect();
    let sys = IntMat::from_cols(rq * rq, &cols);
    let rhs = IntMat::column(IntMat::identity(rq).data().to_vec());
    let Some(c) = intlin::solve_linear(&sys, &rhs) else {
        return Ok(None);
    };
    let mut s = IntMat::zeros(e.rank(), rq);
    for (ci, b) in c.col(0).iter().zip(&basis) {
        if !ci.is_zero() {
            s = s.add(&b.scale(ci));
        }
    }
    debug_assert_eq!(f.mul(&s), IntMat::identity(rq));
    Ok(Some(s))
}

/// Output of [`splice_pullback`].
#[derive(Debug, Clone)]
pub struct Splice {
    /// `0 -> M -> P (+) Q -> Q -> 0`.
    pub seq: ExactSeq,
    /// The pull-back `X = P x_(Q/aQ) Q`, in its own basis.
    pub pullback: GLattice,
    /// Isomorphism `P (+) Q -> X` in the basis of `X`.
    pub iso: IntMat,
}

/// From `0 -> M -> P -> Q/aQ -> 0` (the last map given by an integral lift
/// `pi : P -> Q`), with `P` permutation and `Q` coflasque, builds
/// `0 -> M -> P (+) Q -> Q -> 0`.
pub fn splice_pullback(
    m: &GLattice,
    p: &GLattice,
    q: &GLattice,
    alpha: &IntMat,
    iota: &IntMat,
    pi: &IntMat,
    cat: &SubgroupCatalog,
) -> Result<Splice> {
    let fail = |s: &str| Err(Error::HypothesisFailed(s.to_string()));
    m.same_group(p)?;
    p.same_group(q)?;
    let (rp, rq) = (p.rank(), q.rank());
    if !p.is_permutation_basis() {
        return fail("P is not a permutation lattice");
    }
    if !GLattice::is_equivariant(alpha, q, q) || intlin::det(alpha).is_zero() {
        return fail("alpha is not an injective equivariant endomorphism");
    }
    if !GLattice::is_equivariant(iota, m, p) || intlin::rank(iota) != m.rank() {
        return fail("M -> P is not an injective equivariant map");
    }
    for (a, b) in p.generator_matrices().iter().zip(q.generator_matrices()) {
        let diff = b.mul(pi).sub(&pi.mul(a));
        if !diff.is_zero() && !intlin::in_lattice(alpha, &diff) {
            return fail("P -> Q/aQ is not equivariant");
        }
    }
    let pa = IntMat::hstack(&[pi, alpha]);
    if !intlin::cokernel_invariants(&pa).is_trivial() {
        return fail("P -> Q/aQ is not onto");
    }
    let ker = intlin::kernel_basis(&pa).select_rows(&(0..rp).collect::<Vec<_>>());
    if ker.cols() > 0 && !intlin::in_lattice(iota, &ker) {
        return fail("given sequence is not exact at P");
    }
    if !intlin::in_lattice(alpha, &pi.mul(iota)) {
        return fail("composite M -> Q/aQ is not zero");
    }
    match is_coflasque(q, cat)?.verdict {
        Verdict::Yes => {}
        v => return Err(Error::HypothesisFailed(format!("Q coflasque verdict is {v:?}"))),
    }
    // X = {(x, pi x + alpha z)} inside P (+) Q.
    let pq = dsum(p, q)?;
    let mut b = IntMat::zeros(rp + rq, rp + rq);
    for i in 0..rp {
        b[(i, i)] = BigInt::from(1);
    }
    for i in 0..rq {
        for j in 0..rp {
            b[(rp + i, j)] = pi[(i, j)].clone();
        }
        for j in 0..rq {
            b[(rp + i, rp + j)] = alpha[(i, j)].clone();
        }
    }
    let x = sublattice(&pq, &b)?.with_name(format!("X({})", m.name()));
    let to_p = IntMat::hstack(&[&IntMat::identity(rp), &IntMat::zeros(rp, rq)]);
    let Some(sigma) = find_splitting(&to_p, &x, p)? else {
        return fail("pull-back does not split over P");
    };
    let mut q_in = IntMat::zeros(rp + rq, rq);
    for i in 0..rq {
        q_in[(rp + i, i)] = BigInt::from(1);
    }
    let iso = IntMat::hstack(&[&sigma, &q_in]);
    let iso_inv = intlin::inverse_unimodular(&iso).ok_or_else(|| Error::HypothesisFailed("splitting is not unimodular".into()))?;
    // M -> X is m -> (iota m, 0) in P (+) Q coordinates.
    let m_in_pq = IntMat::vstack(&[iota, &IntMat::zeros(rq, m.rank())]);
    let m_in_x = intlin::solve_linear(&b, &m_in_pq).expect("M lands in the pull-back");
    let f1 = iso_inv.mul(&m_in_x);
    let f2 = pa.mul(&iso);
    let seq = ExactSeq::verified(
        format!("splice({})", m.name()),
        vec![Term::Lattice(m.clone()), Term::Lattice(pq), Term::Lattice(q.clone())],
        vec![f1, f2],
    )?;
    Ok(Splice { seq, pullback: x, iso })
}
