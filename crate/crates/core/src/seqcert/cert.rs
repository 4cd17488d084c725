//! Certificates for `M ~ N`: two exact sequences with a common middle term
//! and permutation cokernels.

use super::seq::{ExactSeq, Term};
use crate::error::{Error, Result};
use crate::glat::{aug_inclusion, aug_kernel, augmentation, dsum, natural, trivial_lattice, GLattice};
use crate::intlin::{self, IntMat};
use crate::permgrp::PermGroup;

#[derive(Debug, Clone)]
pub struct EquivCertificate {
    pub m: GLattice,
    pub n: GLattice,
    pub middle: GLattice,
    /// `0 -> M -> E -> P -> 0`
    pub seq_m: ExactSeq,
    /// `0 -> N -> E -> Q -> 0`
    pub seq_n: ExactSeq,
}

fn same_action(a: &GLattice, b: &GLattice) -> bool {
    a.group().same_as(b.group()) && a.rank() == b.rank() && a.generator_matrices() == b.generator_matrices()
}

fn lattice_at(s: &ExactSeq, i: usize) -> Result<GLattice> {
    s.lattice(i).cloned().ok_or_else(|| Error::WitnessInvalid("certificate terms must be lattices".into()))
}

impl EquivCertificate {
    /// Checks both sequences and packages them.
    pub fn new(seq_m: ExactSeq, seq_n: ExactSeq) -> Result<Self> {
        for s in [&seq_m, &seq_n] {
            if !s.is_verified() {
                return Err(Error::SequenceNotVerified);
            }
            if s.terms().len() != 3 {
                return Err(Error::WitnessInvalid("certificate sequences have three terms".into()));
            }
            if !lattice_at(s, 2)?.is_permutation_basis() {
                return Err(Error::WitnessInvalid(format!("cokernel of {} is not a permutation lattice", s.name)));
            }
        }
        let middle = lattice_at(&seq_m, 1)?;
        if !same_action(&middle, &lattice_at(&seq_n, 1)?) {
            return Err(Error::WitnessInvalid("middle terms differ".into()));
        }
        Ok(EquivCertificate { m: lattice_at(&seq_m, 0)?, n: lattice_at(&seq_n, 0)?, middle, seq_m, seq_n })
    }

    pub fn group(&self) -> &PermGroup {
        self.m.group()
    }

    /// Re-verifies both sequences from their matrices.
    pub fn check(&self) -> Result<()> {
        let re = |s: &ExactSeq| ExactSeq::verified(s.name.clone(), s.terms().to_vec(), s.maps().to_vec());
        EquivCertificate::new(re(&self.seq_m)?, re(&self.seq_n)?).map(|_| ())
    }

    /// The same certificate read as `N ~ M`.
    pub fn swap(&self) -> EquivCertificate {
        EquivCertificate {
            m: self.n.clone(),
            n: self.m.clone(),
            middle: self.middle.clone(),
            seq_m: self.seq_n.clone(),
            seq_n: self.seq_m.clone(),
        }
    }
}

fn zero(g: &PermGroup) -> GLattice {
    trivial_lattice(g, 0).with_name("0")
}

fn seq3(name: String, a: &GLattice, b: &GLattice, c: &GLattice, f: IntMat, g: IntMat) -> Result<ExactSeq> {
    ExactSeq::verified(name, vec![Term::Lattice(a.clone()), Term::Lattice(b.clone()), Term::Lattice(c.clone())], vec![f, g])
}

/// `M ~ M`.
pub fn cert_identity(m: &GLattice) -> Result<EquivCertificate> {
    let z = zero(m.group());
    let r = m.rank();
    let s = seq3(format!("id({})", m.name()), m, m, &z, IntMat::identity(r), IntMat::zeros(0, r))?;
    EquivCertificate::new(s.clone(), s)
}

/// `P ~ 0` for a permutation lattice `P`.
pub fn cert_permutation_zero(p: &GLattice) -> Result<EquivCertificate> {
    if !p.is_permutation_basis() {
        return Err(Error::WitnessInvalid(format!("{} has no permutation basis", p.name())));
    }
    let z = zero(p.group());
    let r = p.rank();
    let sm = seq3(format!("id({})", p.name()), p, p, &z, IntMat::identity(r), IntMat::zeros(0, r))?;
    let sn = seq3(format!("0->{}", p.name()), &z, p, p, IntMat::zeros(r, 0), IntMat::identity(r))?;
    EquivCertificate::new(sm, sn)
}

/// `A ~ 0` from `0 -> A -> U -> Z -> 0`.
pub fn cert_aug_zero(g: &PermGroup) -> Result<EquivCertificate> {
    let u = natural(g);
    let a = aug_kernel(&u)?;
    let n = u.rank();
    let zl = trivial_lattice(g, 1).with_name("Z");
    let z = zero(g);
    let sm = seq3(format!("aug({n})"), &a, &u, &zl, aug_inclusion(n), augmentation(n))?;
    let sn = seq3(format!("0->{}", u.name()), &z, &u, &u, IntMat::zeros(n, 0), IntMat::identity(n))?;
    EquivCertificate::new(sm, sn)
}

fn dsum_seq(a: &ExactSeq, b: &ExactSeq) -> Result<ExactSeq> {
    let terms = (0..3)
        .map(|i| Ok(Term::Lattice(dsum(&lattice_at(a, i)?, &lattice_at(b, i)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let maps = (0..2).map(|i| IntMat::block_diag(&[&a.maps()[i], &b.maps()[i]])).collect();
    ExactSeq::verified(format!("{}+{}", a.name, b.name), terms, maps)
}

/// `M (+) M' ~ N (+) N'` from `M ~ N` and `M' ~ N'`.
pub fn cert_dsum(c1: &EquivCertificate, c2: &EquivCertificate) -> Result<EquivCertificate> {
    c1.m.same_group(&c2.m)?;
    EquivCertificate::new(dsum_seq(&c1.seq_m, &c2.seq_m)?, dsum_seq(&c1.seq_n, &c2.seq_n)?)
}

/// A witness that `S` is stably permutation: an equivariant isomorphism
/// `S (+) P -> Q` with `P`, `Q` permutation lattices.
#[derive(Debug, Clone)]
pub struct StableWitness {
    pub s: GLattice,
    pub p: GLattice,
    pub q: GLattice,
    pub iso: IntMat,
}

impl StableWitness {
    pub fn verify(&self) -> Result<()> {
        if !self.p.is_permutation_basis() || !self.q.is_permutation_basis() {
            return Err(Error::WitnessInvalid("P and Q must be permutation lattices".into()));
        }
        let sp = dsum(&self.s, &self.p)?;
        if !self.iso.is_square() || self.iso.rows() != self.q.rank() || self.iso.cols() != sp.rank() {
            return Err(Error::WitnessInvalid("isomorphism has the wrong shape".into()));
        }
        if !GLattice::is_equivariant(&self.iso, &sp, &self.q) {
            return Err(Error::WitnessInvalid("isomorphism is not equivariant".into()));
        }
        if !intlin::is_unimodular(&self.iso) {
            return Err(Error::WitnessInvalid("isomorphism is not unimodular".into()));
        }
        Ok(())
    }
}

/// `M ~ N` from `0 -> M -> N -> S -> 0` with `S` stably permutation.
pub fn cert_from_quotient(s: &ExactSeq, w: &StableWitness) -> Result<EquivCertificate> {
    if !s.is_verified() {
        return Err(Error::SequenceNotVerified);
    }
    if s.terms().len() != 3 {
        return Err(Error::BadParams("need a short exact sequence".into()));
    }
    w.verify()?;
    let m = lattice_at(s, 0)?;
    let n = lattice_at(s, 1)?;
    let st = lattice_at(s, 2)?;
    if !same_action(&st, &w.s) {
        return Err(Error::WitnessInvalid("witness is for a different quotient".into()));
    }
    let (rm, rn, rp) = (m.rank(), n.rank(), w.p.rank());
    let np = dsum(&n, &w.p)?;
    let iota = IntMat::vstack(&[&s.maps()[0], &IntMat::zeros(rp, rm)]);
    let to_q = w.iso.mul(&IntMat::block_diag(&[&s.maps()[1], &IntMat::identity(rp)]));
    let sm = seq3(format!("{}->{}", m.name(), np.name()), &m, &np, &w.q, iota, to_q)?;
    let incl = IntMat::vstack(&[&IntMat::identity(rn), &IntMat::zeros(rp, rn)]);
    let proj = IntMat::hstack(&[&IntMat::zeros(rp, rn), &IntMat::identity(rp)]);
    let sn = seq3(format!("{}->{}", n.name(), np.name()), &n, &np, &w.p, incl, proj)?;
    EquivCertificate::new(sm, sn)
}

/// The witness `S (+) P -> Q` obtained from a split sequence
/// `0 -> S (+) P0 -> Q -> P1 -> 0` with section `sigma`, where `P = P0 (+) P1`.
pub fn witness_from_split(seq: &ExactSeq, s: &GLattice, p0: &GLattice, sigma: &IntMat) -> Result<StableWitness> {
    let q = lattice_at(seq, 1)?;
    let p1 = lattice_at(seq, 2)?;
    let iso = IntMat::hstack(&[&seq.maps()[0], sigma]);
    let w = StableWitness { s: s.clone(), p: dsum(p0, &p1)?, q, iso };
    w.verify()?;
    Ok(w)
}

