//! Exact sequences `0 -> T_0 -> T_1 -> ... -> T_k -> 0`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::glat::{FinModule, GLattice};
use crate::intlin::{self, IntMat};
use crate::permgrp::PermGroup;

/// A term of a sequence: a lattice, or a finite module `(Z/m)^r`.
#[derive(Clone, Debug)]
pub enum Term {
    Lattice(GLattice),
    Finite(FinModule),
}

impl Term {
    pub fn rank(&self) -> usize {
        match self {
            Term::Lattice(m) => m.rank(),
            Term::Finite(m) => m.rank(),
        }
    }

    pub fn group(&self) -> &PermGroup {
        match self {
            Term::Lattice(m) => m.group(),
            Term::Finite(m) => m.group(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Term::Lattice(m) => m.name(),
            Term::Finite(m) => m.name(),
        }
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            Term::Lattice(_) => None,
            Term::Finite(m) => Some(m.modulus()),
        }
    }

    pub fn as_lattice(&self) -> Option<&GLattice> {
        match self {
            Term::Lattice(m) => Some(m),
            Term::Finite(_) => None,
        }
    }

    fn generators(&self) -> Vec<IntMat> {
        match self {
            Term::Lattice(m) => m.generator_matrices().to_vec(),
            Term::Finite(m) => m.generator_matrices(),
        }
    }

    fn restrict(&self, h: &PermGroup) -> Result<Term> {
        Ok(match self {
            Term::Lattice(m) => Term::Lattice(m.restrict(h)?),
            Term::Finite(m) => Term::Finite(m.restrict(h)?),
        })
    }
}

impl From<GLattice> for Term {
    fn from(m: GLattice) -> Self {
        Term::Lattice(m)
    }
}

impl From<FinModule> for Term {
    fn from(m: FinModule) -> Self {
        Term::Finite(m)
    }
}

/// Terms `T_0..T_k` and maps `f_i : T_i -> T_(i+1)`, with zeros implied at
/// both ends. Only the last term may be finite.
#[derive(Clone, Debug)]
pub struct ExactSeq {
    pub name: String,
    terms: Vec<Term>,
    maps: Vec<IntMat>,
    verified: bool,
}

impl ExactSeq {
    pub fn new(name: impl Into<String>, terms: Vec<Term>, maps: Vec<IntMat>) -> Result<Self> {
        if terms.is_empty() || maps.len() + 1 != terms.len() {
            return Err(Error::BadParams("need k+1 terms and k maps".into()));
        }
        for (i, f) in maps.iter().enumerate() {
            if f.cols() != terms[i].rank() || f.rows() != terms[i + 1].rank() {
                return Err(Error::BadParams(format!("map {i} has the wrong shape")));
            }
        }
        if terms[..terms.len() - 1].iter().any(|t| matches!(t, Term::Finite(_))) {
            return Err(Error::BadParams("only the last term may be finite".into()));
        }
        Ok(ExactSeq { name: name.into(), terms, maps, verified: false })
    }

    /// Builds and verifies.
    pub fn verified(name: impl Into<String>, terms: Vec<Term>, maps: Vec<IntMat>) -> Result<Self> {
        verify_exact(Self::new(name, terms, maps)?)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn maps(&self) -> &[IntMat] {
        &self.maps
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn group(&self) -> &PermGroup {
        self.terms[0].group()
    }

    pub fn lattice(&self, i: usize) -> Option<&GLattice> {
        self.terms.get(i).and_then(Term::as_lattice)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(Term::rank).collect()
    }

    /// Restriction to a subgroup, re-verified.
    pub fn restrict(&self, h: &PermGroup) -> Result<ExactSeq> {
        let terms = self.terms.iter().map(|t| t.restrict(h)).collect::<Result<Vec<_>>>()?;
        ExactSeq::verified(self.name.clone(), terms, self.maps.clone())
    }
}

fn reduce(a: &IntMat, m: Option<&BigInt>) -> IntMat {
    match m {
        Some(m) => a.reduce_mod(m),
        None => a.clone(),
    }
}

fn is_zero_mod(a: &IntMat, m: Option<&BigInt>) -> bool {
    reduce(a, m).is_zero()
}

fn not_exact(position: usize, reason: impl Into<String>) -> Error {
    Error::NotExact { position, reason: reason.into() }
}

/// Checks equivariance, zero compositions and exactness at every term.
pub fn verify_exact(mut s: ExactSeq) -> Result<ExactSeq> {
    let g = s.terms[0].group().clone();
    if s.terms.iter().any(|t| !t.group().same_as(&g)) {
        return Err(Error::GroupMismatch);
    }
    let gens: Vec<Vec<IntMat>> = s.terms.iter().map(Term::generators).collect();
    for (i, f) in s.maps.iter().enumerate() {
        let m = s.terms[i + 1].modulus();
        for (a, b) in gens[i].iter().zip(&gens[i + 1]) {
            if !is_zero_mod(&b.mul(f).sub(&f.mul(a)), m) {
                return Err(Error::NotEquivariant { index: i });
            }
        }
    }
    for i in 1..s.maps.len() {
        if !is_zero_mod(&s.maps[i].mul(&s.maps[i - 1]), s.terms[i + 1].modulus()) {
            return Err(not_exact(i, "composition is not zero"));
        }
    }
    let k = s.terms.len() - 1;
    // Injectivity at the first term.
    let r0 = s.terms[0].rank();
    if k == 0 {
        if r0 != 0 {
            return Err(not_exact(0, "a lone nonzero term"));
        }
    } else if intlin::rank(&s.maps[0]) != r0 {
        return Err(not_exact(0, "first map is not injective"));
    }
    // Image equals kernel at interior terms.
    for i in 1..k {
        let out = &s.maps[i];
        let ker = match s.terms[i + 1].modulus() {
            None => intlin::kernel_basis(out),
            Some(m) => intlin::kernel_mod(out, m).0,
        };
        let prev = &s.maps[i - 1];
        let covered = if prev.cols() == 0 { ker.is_zero() } else { intlin::in_lattice(prev, &ker) };
        if ker.cols() > 0 && !covered {
            return Err(not_exact(i, "kernel is larger than the image"));
        }
    }
    // Surjectivity at the last term.
    if k > 0 {
        let f = &s.maps[k - 1];
        let rk = s.terms[k].rank();
        let coker = match s.terms[k].modulus() {
            None => intlin::cokernel_invariants(f),
            Some(m) => intlin::cokernel_invariants(&IntMat::hstack(&[f, &IntMat::scalar(rk, m.clone())])),
        };
        if !coker.is_trivial() {
            return Err(not_exact(k, format!("last map has cokernel {coker}")));
        }
    }
    s.verified = true;
    Ok(s)
}

/// `0 -> M -> M -> 0` by the identity.
pub fn identity_seq(m: &GLattice) -> ExactSeq {
    ExactSeq::verified(format!("id({})", m.name()), vec![m.clone().into(), m.clone().into()], vec![IntMat::identity(m.rank())])
        .expect("identity is exact")
}

