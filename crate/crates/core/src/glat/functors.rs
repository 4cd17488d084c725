//! Duals, sums, tensor squares and induction.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::lattice::{Evaluator, GLattice};
use super::permlat::CosetSpace;
use crate::error::Result;
use crate::intlin::{self, IntMat};
use crate::permgrp::{Perm, PermGroup};

/// Applies a multiplicative matrix functor to a lattice.
fn map_lattice(m: &GLattice, rank: usize, f: impl Fn(&IntMat) -> IntMat + Send + Sync + 'static) -> GLattice {
    match m.evaluator() {
        Some(e) => {
            let e = e.clone();
            let eval: Evaluator = Arc::new(move |p: &Perm| f(&e(p)));
            GLattice::from_evaluator(m.group(), rank, eval)
        }
        None => {
            let gens = m.generator_matrices().iter().map(&f).collect();
            GLattice::raw(m.group(), rank, gens, None)
        }
    }
}

fn map_pair(
    m: &GLattice,
    n: &GLattice,
    rank: usize,
    f: impl Fn(&IntMat, &IntMat) -> IntMat + Send + Sync + 'static,
) -> GLattice {
    match (m.evaluator(), n.evaluator()) {
        (Some(a), Some(b)) => {
            let (a, b) = (a.clone(), b.clone());
            let eval: Evaluator = Arc::new(move |p: &Perm| f(&a(p), &b(p)));
            GLattice::from_evaluator(m.group(), rank, eval)
        }
        _ => {
            let gens = m.generator_matrices().iter().zip(n.generator_matrices()).map(|(a, b)| f(a, b)).collect();
            GLattice::raw(m.group(), rank, gens, None)
        }
    }
}

/// `M* = Hom(M, Z)`: `g` acts by the inverse transpose.
pub fn dual(m: &GLattice) -> GLattice {
    let out = match m.evaluator() {
        Some(e) => {
            let e = e.clone();
            let eval: Evaluator = Arc::new(move |p: &Perm| e(&p.inverse()).transpose());
            GLattice::from_evaluator(m.group(), m.rank(), eval)
        }
        None => {
            let gens = m
                .generator_matrices()
                .iter()
                .map(|g| intlin::inverse_unimodular(g).expect("generators are unimodular").transpose())
                .collect();
            GLattice::raw(m.group(), m.rank(), gens, None)
        }
    };
    let labels = m.labels_or_default().iter().map(|l| format!("{l}*")).collect();
    out.with_labels(labels).with_name(format!("{}*", m.name()))
}

pub fn dsum(m: &GLattice, n: &GLattice) -> Result<GLattice> {
    m.same_group(n)?;
    let out = map_pair(m, n, m.rank() + n.rank(), |a, b| IntMat::block_diag(&[a, b]));
    let mut labels = m.labels_or_default();
    labels.extend(n.labels_or_default());
    Ok(out.with_labels(labels).with_name(format!("{}+{}", m.name(), n.name())))
}

/// Direct sum of several lattices over one group.
pub fn dsum_all(parts: &[&GLattice]) -> Result<GLattice> {
    let mut it = parts.iter();
    let first = it.next().expect("at least one summand");
    let mut acc = (*first).clone();
    for p in it {
        acc = dsum(&acc, p)?;
    }
    Ok(acc)
}

/// `M (x) N` with basis `(i, j) -> i * rank(N) + j`.
pub fn tensor(m: &GLattice, n: &GLattice) -> Result<GLattice> {
    m.same_group(n)?;
    let out = map_pair(m, n, m.rank() * n.rank(), |a, b| a.kron(b));
    let (lm, ln) = (m.labels_or_default(), n.labels_or_default());
    let labels = lm.iter().flat_map(|a| ln.iter().map(move |b| format!("{a}⊗{b}"))).collect();
    Ok(out.with_labels(labels).with_name(format!("{}⊗{}", m.name(), n.name())))
}

/// Basis of `Sym^2`: pairs `i <= j` in lexicographic order.
pub fn sym2_basis(r: usize) -> Vec<(usize, usize)> {
    (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect()
}

/// Basis of `wedge^2`: pairs `i < j` in lexicographic order.
pub fn wedge2_basis(r: usize) -> Vec<(usize, usize)> {
    (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect()
}

/// Matrix of `Sym^2 g` on the basis `m_i m_j`.
pub fn sym2_matrix(g: &IntMat) -> IntMat {
    sym2_map(g)
}

/// `Sym^2 f : Sym^2 Z^cols -> Sym^2 Z^rows`.
pub fn sym2_map(g: &IntMat) -> IntMat {
    let src = sym2_basis(g.cols());
    let dst = sym2_basis(g.rows());
    let mut out = IntMat::zeros(dst.len(), src.len());
    for (c, &(i, j)) in src.iter().enumerate() {
        for (row, &(k, l)) in dst.iter().enumerate() {
            let v = if k == l {
                &g[(k, i)] * &g[(k, j)]
            } else {
                &g[(k, i)] * &g[(l, j)] + &g[(l, i)] * &g[(k, j)]
            };
            if !v.is_zero() {
                out[(row, c)] = v;
            }
        }
    }
    out
}

/// Matrix of `wedge^2 g` on the basis `m_i ^ m_j`.
pub fn wedge2_matrix(g: &IntMat) -> IntMat {
    wedge2_map(g)
}

/// `wedge^2 f : wedge^2 Z^cols -> wedge^2 Z^rows`.
pub fn wedge2_map(g: &IntMat) -> IntMat {
    let src = wedge2_basis(g.cols());
    let dst = wedge2_basis(g.rows());
    let mut out = IntMat::zeros(dst.len(), src.len());
    for (c, &(i, j)) in src.iter().enumerate() {
        for (row, &(k, l)) in dst.iter().enumerate() {
            let v = &g[(k, i)] * &g[(l, j)] - &g[(l, i)] * &g[(k, j)];
            if !v.is_zero() {
                out[(row, c)] = v;
            }
        }
    }
    out
}

pub fn sym2(m: &GLattice) -> GLattice {
    let r = m.rank();
    let basis = sym2_basis(r);
    let l = m.labels_or_default();
    let labels = basis.iter().map(|&(i, j)| format!("{}·{}", l[i], l[j])).collect();
    map_lattice(m, basis.len(), sym2_matrix).with_labels(labels).with_name(format!("Sym2({})", m.name()))
}

pub fn wedge2(m: &GLattice) -> GLattice {
    let r = m.rank();
    let basis = wedge2_basis(r);
    let l = m.labels_or_default();
    let labels = basis.iter().map(|&(i, j)| format!("{}∧{}", l[i], l[j])).collect();
    map_lattice(m, basis.len(), wedge2_matrix).with_labels(labels).with_name(format!("Wedge2({})", m.name()))
}

/// `m_i ^ m_j -> m_i (x) m_j - m_j (x) m_i`.
pub fn antisym_embedding(r: usize) -> IntMat {
    let basis = wedge2_basis(r);
    let mut out = IntMat::zeros(r * r, basis.len());
    for (c, &(i, j)) in basis.iter().enumerate() {
        out[(i * r + j, c)] = BigInt::from(1);
        out[(j * r + i, c)] = BigInt::from(-1);
    }
    out
}

/// `m_i (x) m_j -> m_i m_j`.
pub fn symmetrization(r: usize) -> IntMat {
    let basis = sym2_basis(r);
    let mut out = IntMat::zeros(basis.len(), r * r);
    for (row, &(i, j)) in basis.iter().enumerate() {
        out[(row, i * r + j)] = BigInt::from(1);
        out[(row, j * r + i)] = BigInt::from(1);
    }
    out
}

/// `Z[G] (x)_{Z[H]} M`, blocks indexed by BFS-minimal coset representatives.
pub fn induce(m: &GLattice, g: &PermGroup) -> Result<GLattice> {
    let h = m.group().clone();
    let cs = Arc::new(CosetSpace::new(g, &h)?);
    let k = cs.len();
    let r = m.rank();
    // Force the element table so the evaluator never fails.
    if m.evaluator().is_none() {
        m.element_matrices()?;
    }
    let inner = m.clone();
    let reps_inv: Arc<Vec<Perm>> = Arc::new(cs.reps.iter().map(|p| p.inverse()).collect());
    let cs2 = cs.clone();
    let eval: Evaluator = Arc::new(move |p: &Perm| {
        let mut out = IntMat::zeros(k * r, k * r);
        for i in 0..k {
            let x = p.mul(&cs2.reps[i]);
            let j = cs2.coset_of(&x);
            let hh = reps_inv[j].mul(&x);
            let block = inner.matrix_of(&hh).expect("element of the subgroup");
            for a in 0..r {
                for b in 0..r {
                    out[(j * r + a, i * r + b)] = block[(a, b)].clone();
                }
            }
        }
        out
    });
    let ml = m.labels_or_default();
    let labels = (0..k).flat_map(|i| ml.iter().map(move |l| format!("[{i}]{l}"))).collect();
    Ok(GLattice::from_evaluator(g, k * r, eval)
        .with_labels(labels)
        .with_name(format!("Ind({})", m.name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{aug_kernel, natural, sign_lattice};

    #[test]
    fn ranks() {
        let s4 = PermGroup::symmetric(4);
        let a = aug_kernel(&natural(&s4)).unwrap();
        assert_eq!(sym2(&a).rank(), 6);
        assert_eq!(wedge2(&a).rank(), 3);
        assert_eq!(tensor(&a, &a).unwrap().rank(), 9);
        assert!(sym2(&a).check_homomorphism().unwrap());
        assert!(wedge2(&a).check_homomorphism().unwrap());
        assert!(dual(&a).check_homomorphism().unwrap());
    }

    #[test]
    fn small_examples() {
        let s2 = PermGroup::symmetric(2);
        let a1 = aug_kernel(&natural(&s2)).unwrap();
        assert!(tensor(&a1, &a1).unwrap().is_trivial_action());
        let s3 = PermGroup::symmetric(3);
        let w = wedge2(&aug_kernel(&natural(&s3)).unwrap());
        assert_eq!(w.rank(), 1);
        let z = sign_lattice(&s3);
        for p in s3.elements().unwrap().list() {
            assert_eq!(w.matrix_of(p).unwrap(), z.matrix_of(p).unwrap());
        }
        assert_eq!(wedge2(&sign_lattice(&s3)).rank(), 0);
    }
}
