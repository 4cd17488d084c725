use super::hbar::{Coeffs, Path};
use super::sha::{sha_capped, ShaGroup};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::glat::{verify_iso, GLattice};
use crate::intlin::IntMat;
use crate::permgrp::PermGroup;
use crate::seqcert::{ExactSeq, Term};

/// `Sha^2(H, M)` as `Sha^1(H, N)` from a verified `0 -> M -> P -> N -> 0`
/// whose middle term acts by permutation matrices.
pub fn sha2_via_sequence(h: &PermGroup, seq: &ExactSeq) -> Result<ShaGroup> {
    sha2_via_sequence_capped(h, seq, &Caps::default())
}

pub fn sha2_via_sequence_capped(h: &PermGroup, seq: &ExactSeq, caps: &Caps) -> Result<ShaGroup> {
    sha2_via_sequence_with(h, seq, None, caps)
}

/// As [`sha2_via_sequence`], where the middle term may instead be certified
/// permutation by `witness = (Q, f)` with `f: Q -> P` an equivariant
/// isomorphism from a lattice `Q` with a permutation basis.
pub fn sha2_via_sequence_with(
    h: &PermGroup,
    seq: &ExactSeq,
    witness: Option<(&GLattice, &IntMat)>,
    caps: &Caps,
) -> Result<ShaGroup> {
    if !seq.is_verified() {
        return Err(Error::SequenceNotVerified);
    }
    if seq.terms().len() != 3 {
        return Err(Error::BadParams("need a short exact sequence".into()));
    }
    let p = seq.lattice(1).ok_or_else(|| Error::BadParams("middle term must be a lattice".into()))?;
    let permutation = match witness {
        None => p.is_permutation_basis(),
        Some((q, f)) => {
            if !verify_iso(f, q, p) {
                return Err(Error::WitnessInvalid(format!("not an isomorphism {} -> {}", q.name(), p.name())));
            }
            q.is_permutation_basis()
        }
    };
    if !permutation {
        return Err(Error::HypothesisFailed(format!("{} is not a permutation lattice", p.name())));
    }
    let m_name = seq.terms()[0].name();
    let n: Coeffs = match &seq.terms()[2] {
        Term::Lattice(l) => l.into(),
        Term::Finite(f) => f.into(),
    };
    let mut s = sha_capped(1, h, n, caps)?;
    s.degree = 2;
    s.coefficients = m_name;
    s.path = Path::Sequence;
    Ok(s)
}
