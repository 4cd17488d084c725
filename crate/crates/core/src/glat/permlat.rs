//! Permutation lattices `Z[X]` and augmentation kernels.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::lattice::{Evaluator, GLattice};
use crate::error::{Error, Result};
use crate::intlin::IntMat;
use crate::permgrp::{Perm, PermGroup};

/// Action of a permutation on the points of a G-set.
pub type PointAction = Arc<dyn Fn(&Perm, usize) -> usize + Send + Sync>;

/// `Z[X]` for a G-set given by a point action: `g e_x = e_{g x}`.
pub fn perm_lattice_from_action(g: &PermGroup, size: usize, act: PointAction, labels: Vec<String>) -> GLattice {
    let eval: Evaluator = Arc::new(move |p: &Perm| {
        let mut m = IntMat::zeros(size, size);
        for x in 0..size {
            m[(act(p, x), x)] = BigInt::from(1);
        }
        m
    });
    GLattice::from_evaluator(g, size, eval).with_labels(labels)
}

/// `U_n = Z[{1..n}]` with the natural action.
pub fn natural(g: &PermGroup) -> GLattice {
    let n = g.degree();
    perm_lattice_from_action(g, n, Arc::new(|p: &Perm, x| p.apply(x)), (1..=n).map(|i| format!("u{i}")).collect())
        .with_name(format!("U{n}"))
}

/// Ordered pairs `(i, j)`, `i != j`, in lexicographic order.
pub fn ordered_pairs(g: &PermGroup) -> GLattice {
    let n = g.degree();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let labels = pairs.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect();
    let pairs = Arc::new(pairs);
    let act: PointAction = Arc::new(move |p: &Perm, x| {
        let (i, j) = pairs[x];
        index[&(p.apply(i), p.apply(j))]
    });
    perm_lattice_from_action(g, n * (n - 1), act, labels).with_name(format!("V{n}"))
}

/// Two-element subsets `{i, j}`, `i < j`, in lexicographic order.
pub fn pair_subsets(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Index of `{i, j}` in [`pair_subsets`].
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// `W = Z[P_2(X)]`, unordered pairs of points.
pub fn unordered_pairs(g: &PermGroup) -> GLattice {
    let n = g.degree();
    let pairs = Arc::new(pair_subsets(n));
    let labels = pairs.iter().map(|(i, j)| format!("{{{},{}}}", i + 1, j + 1)).collect();
    let pp = pairs.clone();
    let act: PointAction = Arc::new(move |p: &Perm, x| {
        let (i, j) = pp[x];
        pair_index(n, p.apply(i), p.apply(j))
    });
    perm_lattice_from_action(g, pairs.len(), act, labels).with_name(format!("W{n}"))
}

/// Permutation lattice on the cosets `G/H`, with BFS-minimal coset
/// representatives.
pub fn coset_lattice(g: &PermGroup, h: &PermGroup) -> Result<GLattice> {
    let cs = CosetSpace::new(g, h)?;
    let labels = (0..cs.reps.len()).map(|i| format!("{}H", cs.reps[i])).collect();
    let k = cs.reps.len();
    let cs = Arc::new(cs);
    let act: PointAction = Arc::new(move |p: &Perm, x| cs.coset_of(&p.mul(&cs.reps[x])));
    Ok(perm_lattice_from_action(g, k, act, labels).with_name(format!("Z[G/{}]", h.label())))
}

/// Left cosets `gH` of a subgroup.
#[derive(Debug)]
pub struct CosetSpace {
    pub reps: Vec<Perm>,
    coset: HashMap<Perm, usize>,
}

impl CosetSpace {
    pub fn new(g: &PermGroup, h: &PermGroup) -> Result<Self> {
        h.require_subgroup_of(g)?;
        let e = g.elements()?;
        let he = h.elements()?;
        let mut coset = HashMap::with_capacity(e.len());
        let mut reps = Vec::new();
        for x in e.list() {
            if coset.contains_key(x) {
                continue;
            }
            let id = reps.len();
            reps.push(x.clone());
            for y in he.list() {
                coset.insert(x.mul(y), id);
            }
        }
        Ok(CosetSpace { reps, coset })
    }

    pub fn coset_of(&self, p: &Perm) -> usize {
        self.coset[p]
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// The augmentation map `Z[X] -> Z` as a `1 x n` matrix.
pub fn augmentation(n: usize) -> IntMat {
    IntMat::from_vec(1, n, vec![BigInt::from(1); n])
}

/// Inclusion `A -> Z[X]`, column `i` equal to `e_i - e_{n-1}`.
pub fn aug_inclusion(n: usize) -> IntMat {
    let mut j = IntMat::zeros(n, n - 1);
    for i in 0..n - 1 {
        j[(i, i)] = BigInt::from(1);
        j[(n - 1, i)] = BigInt::from(-1);
    }
    j
}

/// Coordinates in the basis `a_i = e_i - e_{n-1}` of a vector with zero
/// coordinate sum: drop the last entry.
pub fn aug_projection(n: usize) -> IntMat {
    let mut p = IntMat::zeros(n - 1, n);
    for i in 0..n - 1 {
        p[(i, i)] = BigInt::from(1);
    }
    p
}

/// Augmentation kernel of a permutation lattice, on the basis `a_i = x_i - x_n`.
pub fn aug_kernel(u: &GLattice) -> Result<GLattice> {
    let n = u.rank();
    if n < 2 {
        return Err(Error::RankTooSmall(format!("augmentation kernel needs rank >= 2, got {n}")));
    }
    if !u.is_permutation_basis() {
        return Err(Error::BadParams("augmentation kernel needs a permutation basis".into()));
    }
    let j = aug_inclusion(n);
    let pi = aug_projection(n);
    let labels = u.labels_or_default();
    let labels: Vec<String> = (0..n - 1).map(|i| format!("{}-{}", labels[i], labels[n - 1])).collect();
    let name = match u.name().strip_prefix('U') {
        Some(k) if k.parse::<usize>().is_ok() => format!("A{}", n - 1),
        _ => format!("ker({})", u.name()),
    };
    let l = match u.evaluator() {
        Some(f) => {
            let f = f.clone();
            let eval: Evaluator = Arc::new(move |p: &Perm| pi.mul(&f(p)).mul(&j));
            GLattice::from_evaluator(u.group(), n - 1, eval)
        }
        None => {
            let gens = u.generator_matrices().iter().map(|m| pi.mul(m).mul(&j)).collect();
            GLattice::raw(u.group(), n - 1, gens, None)
        }
    };
    Ok(l.with_labels(labels).with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_matches_enumeration() {
        for n in 2..7 {
            for (k, &(i, j)) in pair_subsets(n).iter().enumerate() {
                assert_eq!(pair_index(n, i, j), k);
                assert_eq!(pair_index(n, j, i), k);
            }
        }
    }

    #[test]
    fn small_lattices() {
        let s2 = PermGroup::symmetric(2);
        let a1 = aug_kernel(&natural(&s2)).unwrap();
        assert_eq!(a1.generator_matrices()[0], IntMat::from_i64(&[&[-1]]));
        let s4 = PermGroup::symmetric(4);
        assert_eq!(aug_kernel(&natural(&s4)).unwrap().rank(), 3);
        assert_eq!(ordered_pairs(&s4).rank(), 12);
        assert_eq!(unordered_pairs(&s4).rank(), 6);
        assert!(ordered_pairs(&s4).check_homomorphism().unwrap());
        let s3 = PermGroup::symmetric(3);
        let s2in3 = s3.subgroup(vec![Perm::from_cycles(3, &[vec![0, 1]]).unwrap()], None).unwrap();
        let c = coset_lattice(&s3, &s2in3).unwrap();
        assert_eq!(c.rank(), 3);
        assert!(c.is_permutation_basis());
        assert!(c.check_homomorphism().unwrap());
        assert!(matches!(aug_kernel(&natural(&PermGroup::trivial(1))), Err(Error::RankTooSmall(_))));
    }
}
