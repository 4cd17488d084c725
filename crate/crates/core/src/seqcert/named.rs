//! Explicit builders for the standard sequences over a group of degree `n`.
//!
//! Bases: `U` is `u_1..u_n`; `A` is `a_i = u_i - u_n`; `W` is the pairs
//! `{i,j}`, `i<j`, in lexicographic order; `Sym^2` and `wedge^2` use the
//! lexicographic pair bases of the underlying lattice; tensors use
//! `(i, j) -> i * rank + j`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::seq::{ExactSeq, Term};
use crate::error::{Error, Result};
use crate::glat::{
    antisym_embedding, aug_inclusion, aug_kernel, augmentation, dsum, dsum_all, mod_m, natural, ordered_pairs, pair_index,
    pair_subsets, sublattice, sym2, sym2_basis, sym2_map, symmetrization, tensor, trivial_lattice, unordered_pairs,
    wedge2, wedge2_basis, wedge2_map, GLattice,
};
use crate::intlin::{self, IntMat};
use crate::permgrp::PermGroup;

/// Largest degree accepted by the builders.
pub const MAX_NAMED_DEGREE: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSeq {
    /// `0 -> A(x)A -> U(x)A -> A -> 0`
    Gn,
    /// `0 -> wedge^2 A -> A(x)A -> Sym^2 A -> 0`
    Square,
    /// `Sym^2 U -> U (+) W`, an isomorphism.
    Sym2U,
    /// `0 -> ker -> Sym^2 U -> U -> Z/2 -> 0` with `u_i u_j -> u_i + u_j`.
    Rho,
    /// `0 -> Sym^2 A -> W -> A/2A -> 0`
    Sym2Seq,
    /// `0 -> wedge^2 A -> wedge^2 U -> A -> 0`
    Koszul,
    /// `0 -> Sym^2 A (+) Z -> W (+) Z (+) U -> U -> 0`, needs an odd orbit.
    NewExact,
}

impl NamedSeq {
    pub const ALL: [NamedSeq; 7] = [
        NamedSeq::Gn,
        NamedSeq::Square,
        NamedSeq::Sym2U,
        NamedSeq::Rho,
        NamedSeq::Sym2Seq,
        NamedSeq::Koszul,
        NamedSeq::NewExact,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NamedSeq::Gn => "gn",
            NamedSeq::Square => "square",
            NamedSeq::Sym2U => "sym2U",
            NamedSeq::Rho => "rho",
            NamedSeq::Sym2Seq => "sym2seq",
            NamedSeq::Koszul => "koszul",
            NamedSeq::NewExact => "newexact",
        }
    }
}

impl fmt::Display for NamedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NamedSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedSeq::ALL
            .iter()
            .find(|x| x.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown sequence '{s}'")))
    }
}

/// Named sequence over `S_n`.
pub fn build_named(name: NamedSeq, n: usize) -> Result<ExactSeq> {
    if !(2..=MAX_NAMED_DEGREE).contains(&n) {
        return Err(Error::BadParams(format!("degree {n} outside 2..={MAX_NAMED_DEGREE}")));
    }
    build_named_on(name, &PermGroup::symmetric(n))
}

/// Named sequence over an arbitrary permutation group, from its natural action.
pub fn build_named_on(name: NamedSeq, g: &PermGroup) -> Result<ExactSeq> {
    let n = g.degree();
    if n < 2 {
        return Err(Error::BadParams("degree must be at least 2".into()));
    }
    let u = natural(g);
    let a = aug_kernel(&u)?;
    let mut seq = match name {
        NamedSeq::Gn => gn(&u, &a)?,
        NamedSeq::Square => square(&a)?,
        NamedSeq::Sym2U => sym2u(&u)?,
        NamedSeq::Rho => rho(&u)?,
        NamedSeq::Sym2Seq => sym2seq(&u, &a)?,
        NamedSeq::Koszul => koszul(&u, &a)?,
        NamedSeq::NewExact => newexact(&u, &a)?,
    };
    seq.name = format!("{name}({n})");
    Ok(seq)
}

fn gn(u: &GLattice, a: &GLattice) -> Result<ExactSeq> {
    let n = u.rank();
    let id = IntMat::identity(n - 1);
    ExactSeq::verified(
        "gn",
        vec![tensor(a, a)?.into(), tensor(u, a)?.into(), a.clone().into()],
        vec![aug_inclusion(n).kron(&id), augmentation(n).kron(&id)],
    )
}

/// Permutation basis for the middle term of `gn`: the isomorphism
/// `V -> U (x) A`, `(i, j) -> u_i (x) (u_j - u_i)`, from the ordered-pairs
/// lattice.
pub fn gn_middle_witness(g: &PermGroup) -> Result<(GLattice, IntMat)> {
    let n = g.degree();
    if n < 2 {
        return Err(Error::BadParams("degree must be at least 2".into()));
    }
    let v = ordered_pairs(g);
    let r = n - 1;
    let mut f = IntMat::zeros(n * r, n * (n - 1));
    let mut c = 0;
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            // u_j - u_i = a_j - a_i with a_n = 0.
            if j < r {
                f[(i * r + j, c)] += BigInt::from(1);
            }
            if i < r {
                f[(i * r + i, c)] -= BigInt::from(1);
            }
            c += 1;
        }
    }
    Ok((v, f))
}

/// `0 -> wedge^2 M -> M (x) M -> Sym^2 M -> 0` for any lattice.
pub fn square(m: &GLattice) -> Result<ExactSeq> {
    let r = m.rank();
    ExactSeq::verified(
        "square",
        vec![wedge2(m).into(), tensor(m, m)?.into(), sym2(m).into()],
        vec![antisym_embedding(r), symmetrization(r)],
    )
}

/// `Sym^2 U -> U (+) W`: squares to `U`, products of distinct points to `W`.
pub fn sym2u_matrix(n: usize) -> IntMat {
    let basis = sym2_basis(n);
    let mut f = IntMat::zeros(basis.len(), basis.len());
    for (c, &(i, j)) in basis.iter().enumerate() {
        let row = if i == j { i } else { n + pair_index(n, i, j) };
        f[(row, c)] = BigInt::from(1);
    }
    f
}

fn sym2u(u: &GLattice) -> Result<ExactSeq> {
    let n = u.rank();
    let w = unordered_pairs(u.group());
    ExactSeq::verified("sym2U", vec![sym2(u).into(), dsum(u, &w)?.into()], vec![sym2u_matrix(n)])
}

/// `u_i u_j -> u_i + u_j` on `Sym^2 U`.
pub fn rho_matrix(n: usize) -> IntMat {
    let basis = sym2_basis(n);
    let mut f = IntMat::zeros(n, basis.len());
    for (c, &(i, j)) in basis.iter().enumerate() {
        f[(i, c)] += 1;
        f[(j, c)] += 1;
    }
    f
}

/// `{i,j} -> u_i + u_j` on `W`.
pub fn rho_w_matrix(n: usize) -> IntMat {
    let pairs = pair_subsets(n);
    let mut f = IntMat::zeros(n, pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        f[(i, c)] = BigInt::from(1);
        f[(j, c)] = BigInt::from(1);
    }
    f
}

fn rho(u: &GLattice) -> Result<ExactSeq> {
    let n = u.rank();
    let s = sym2(u);
    let r = rho_matrix(n);
    let kb = intlin::kernel_basis(&r);
    let k = sublattice(&s, &kb)?.with_name(format!("ker rho({n})"));
    let z2 = mod_m(&trivial_lattice(u.group(), 1), 2)?;
    ExactSeq::verified(
        "rho",
        vec![k.into(), s.into(), u.clone().into(), Term::Finite(z2)],
        vec![kb, r, augmentation(n)],
    )
}

/// Projection `Sym^2 U -> W` forgetting squares.
fn sym2u_to_w(n: usize) -> IntMat {
    let basis = sym2_basis(n);
    let mut f = IntMat::zeros(n * (n - 1) / 2, basis.len());
    for (c, &(i, j)) in basis.iter().enumerate() {
        if i != j {
            f[(pair_index(n, i, j), c)] = BigInt::from(1);
        }
    }
    f
}

/// Squares part `Sym^2 U -> U`.
fn sym2u_diag(n: usize) -> IntMat {
    let basis = sym2_basis(n);
    let mut f = IntMat::zeros(n, basis.len());
    for (c, &(i, j)) in basis.iter().enumerate() {
        if i == j {
            f[(i, c)] = BigInt::from(1);
        }
    }
    f
}

/// `W -> A/2A`, `{i,j} -> a_i + a_j` with `a_n = 0`.
fn w_to_abar(n: usize) -> IntMat {
    let pairs = pair_subsets(n);
    let mut f = IntMat::zeros(n - 1, pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        for x in [i, j] {
            if x < n - 1 {
                f[(x, c)] = BigInt::from(1);
            }
        }
    }
    f
}

fn sym2seq(u: &GLattice, a: &GLattice) -> Result<ExactSeq> {
    let n = u.rank();
    let w = unordered_pairs(u.group());
    let abar = mod_m(a, 2)?;
    let f1 = sym2u_to_w(n).mul(&sym2_map(&aug_inclusion(n)));
    ExactSeq::verified("sym2seq", vec![sym2(a).into(), w.into(), Term::Finite(abar)], vec![f1, w_to_abar(n)])
}

fn koszul(u: &GLattice, a: &GLattice) -> Result<ExactSeq> {
    let n = u.rank();
    let pairs = wedge2_basis(n);
    let mut pi = IntMat::zeros(n - 1, pairs.len());
    for (c, &(i, j)) in pairs.iter().enumerate() {
        if i < n - 1 {
            pi[(i, c)] += 1;
        }
        if j < n - 1 {
            pi[(j, c)] -= 1;
        }
    }
    ExactSeq::verified(
        "koszul",
        vec![wedge2(a).into(), wedge2(u).into(), a.clone().into()],
        vec![wedge2_map(&aug_inclusion(n)), pi],
    )
}

/// Indicator vector of the first orbit of odd length.
pub fn odd_orbit_sum(g: &PermGroup) -> Result<Vec<BigInt>> {
    let o = g
        .orbits()
        .iter()
        .find(|o| o.len() % 2 == 1)
        .ok_or_else(|| Error::BadParams(format!("{} has no orbit of odd length", g.label())))?;
    let mut v = vec![BigInt::from(0); g.degree()];
    for &x in o {
        v[x] = BigInt::from(1);
    }
    Ok(v)
}

fn newexact(u: &GLattice, a: &GLattice) -> Result<ExactSeq> {
    let g = u.group();
    let n = u.rank();
    let o = odd_orbit_sum(g)?;
    let z = trivial_lattice(g, 1).with_name("Z");
    let w = unordered_pairs(g);
    let s = sym2_map(&aug_inclusion(n));
    let ds = s.cols();
    let nw = n * (n - 1) / 2;
    // (m, t) -> (proj_W m, 2t, diag(m) - t O)
    let top = sym2u_to_w(n).mul(&s);
    let diag = sym2u_diag(n).mul(&s);
    let mut f1 = IntMat::zeros(nw + 1 + n, ds + 1);
    for r in 0..nw {
        for c in 0..ds {
            f1[(r, c)] = top[(r, c)].clone();
        }
    }
    f1[(nw, ds)] = BigInt::from(2);
    for r in 0..n {
        for c in 0..ds {
            f1[(nw + 1 + r, c)] = diag[(r, c)].clone();
        }
        f1[(nw + 1 + r, ds)] = -o[r].clone();
    }
    // (w, s, u) -> rho(w) + s O + 2u
    let rw = rho_w_matrix(n);
    let mut f2 = IntMat::zeros(n, nw + 1 + n);
    for r in 0..n {
        for c in 0..nw {
            f2[(r, c)] = rw[(r, c)].clone();
        }
        f2[(r, nw)] = o[r].clone();
        f2[(r, nw + 1 + r)] = BigInt::from(2);
    }
    ExactSeq::verified(
        "newexact",
        vec![
            dsum(&sym2(a), &z)?.into(),
            dsum_all(&[&w, &z, u])?.into(),
            u.clone().into(),
        ],
        vec![f1, f2],
    )
}
