use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::intlin::{self, IntMat};
use crate::permgrp::{Perm, PermGroup};

/// Computes the action matrix of an arbitrary group element.
pub type Evaluator = Arc<dyn Fn(&Perm) -> IntMat + Send + Sync>;

/// A G-lattice: `Z^rank` with one unimodular matrix per group generator.
///
/// Matrices act on column vectors. Lattices built by functorial
/// constructions also carry an evaluator that produces the matrix of any
/// element directly.
#[derive(Clone)]
pub struct GLattice {
    group: PermGroup,
    rank: usize,
    gens: Vec<IntMat>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    eval: Option<Evaluator>,
    table: Arc<OnceLock<std::result::Result<Arc<Vec<IntMat>>, Error>>>,
}

impl GLattice {
    /// Lattice from generator matrices; checks shapes and unimodularity.
    pub fn new(group: &PermGroup, gens: Vec<IntMat>) -> Result<Self> {
        let rank = gens.first().map_or(0, |m| m.rows());
        if gens.len() != group.generators().len() {
            return Err(Error::BadParams(format!(
                "{} matrices for {} generators",
                gens.len(),
                group.generators().len()
            )));
        }
        for m in &gens {
            if m.rows() != rank || m.cols() != rank {
                return Err(Error::BadParams("generator matrices must be square of equal size".into()));
            }
            if !intlin::is_unimodular(m) {
                return Err(Error::BadParams("generator matrix is not unimodular".into()));
            }
        }
        Ok(Self::raw(group, rank, gens, None))
    }

    /// Rank-`rank` lattice with trivial action if `group` has no generators.
    pub fn with_rank(group: &PermGroup, rank: usize, gens: Vec<IntMat>) -> Result<Self> {
        if gens.is_empty() {
            return Ok(Self::raw(group, rank, gens, None));
        }
        let l = Self::new(group, gens)?;
        if l.rank != rank {
            return Err(Error::BadParams("rank mismatch".into()));
        }
        Ok(l)
    }

    /// Lattice defined by an evaluator; generator matrices are evaluated.
    pub fn from_evaluator(group: &PermGroup, rank: usize, eval: Evaluator) -> Self {
        let gens = group.generators().iter().map(|g| eval(g)).collect();
        Self::raw(group, rank, gens, Some(eval))
    }

    pub(crate) fn raw(group: &PermGroup, rank: usize, gens: Vec<IntMat>, eval: Option<Evaluator>) -> Self {
        GLattice {
            group: group.clone(),
            rank,
            gens,
            labels: None,
            name: None,
            eval,
            table: Arc::new(OnceLock::new()),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank, "one label per basis vector");
        self.labels = Some(labels);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator_matrices(&self) -> &[IntMat] {
        &self.gens
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Labels, falling back to `e1, e2, ...`.
    pub fn labels_or_default(&self) -> Vec<String> {
        match &self.labels {
            Some(l) => l.clone(),
            None => (1..=self.rank).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("lattice(rank {})", self.rank))
    }

    pub fn evaluator(&self) -> Option<&Evaluator> {
        self.eval.as_ref()
    }

    pub fn same_group(&self, other: &GLattice) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Matrices of all elements, in the closure order of the group.
    pub fn element_matrices(&self) -> Result<Arc<Vec<IntMat>>> {
        self.table
            .get_or_init(|| {
                let e = self.group.elements()?;
                let mut out: Vec<IntMat> = Vec::with_capacity(e.len());
                out.push(IntMat::identity(self.rank));
                for i in 1..e.len() {
                    let (p, g) = e.parent(i);
                    out.push(self.gens[g].mul(&out[p]));
                }
                Ok(Arc::new(out))
            })
            .clone()
    }

    /// Action matrix of an element of the group.
    pub fn matrix_of(&self, p: &Perm) -> Result<IntMat> {
        if let Some(f) = &self.eval {
            return Ok(f(p));
        }
        let e = self.group.elements()?;
        let i = e
            .index_of(p)
            .ok_or_else(|| Error::NotSubgroup(format!("{p} is not in {}", self.group.label())))?;
        Ok(self.element_matrices()?[i].clone())
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, h: &PermGroup) -> Result<GLattice> {
        if h.same_as(&self.group) {
            return Ok(self.clone());
        }
        h.require_subgroup_of(&self.group)?;
        let gens = h.generators().iter().map(|p| self.matrix_of(p)).collect::<Result<Vec<_>>>()?;
        let mut l = Self::raw(h, self.rank, gens, self.eval.clone());
        l.labels = self.labels.clone();
        l.name = self.name.clone();
        Ok(l)
    }

    /// Checks `table(gh) = table(g) table(h)` on all pairs (or a sample for
    /// large groups).
    pub fn check_homomorphism(&self) -> Result<bool> {
        let e = self.group.elements()?;
        let t = self.element_matrices()?;
        let n = e.len();
        let pairs: Vec<(usize, usize)> = if n <= 48 {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        } else {
            (0..200).map(|k| ((k * 7919) % n, (k * 104729 + 13) % n)).collect()
        };
        for (i, j) in pairs {
            if t[e.mul(i, j)] != t[i].mul(&t[j]) {
                return Ok(false);
            }
        }
        if let Some(f) = &self.eval {
            for (i, p) in e.list().iter().enumerate().step_by(1 + n / 64) {
                if f(p) != t[i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every generator acts by a permutation matrix.
    pub fn is_permutation_basis(&self) -> bool {
        self.gens.iter().all(|m| m.is_permutation())
    }

    /// True iff every generator acts by a signed permutation matrix.
    pub fn is_monomial_basis(&self) -> bool {
        self.gens.iter().all(|m| m.is_signed_permutation())
    }

    /// True iff every generator acts trivially.
    pub fn is_trivial_action(&self) -> bool {
        self.gens.iter().all(|m| *m == IntMat::identity(self.rank))
    }

    /// Checks that `f` (rows = target rank, cols = source rank) intertwines
    /// the generator actions.
    pub fn is_equivariant(f: &IntMat, src: &GLattice, dst: &GLattice) -> bool {
        src.group.same_as(&dst.group)
            && f.rows() == dst.rank
            && f.cols() == src.rank
            && src.gens.iter().zip(&dst.gens).all(|(a, b)| b.mul(f) == f.mul(a))
    }
}

impl fmt::Debug for GLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GLattice({}, rank {}, over {})", self.name(), self.rank, self.group.label())
    }
}

/// A homomorphism `G -> {+-1}` given by its values on generators.
#[derive(Debug, Clone)]
pub struct Character {
    group: PermGroup,
    values: Vec<i8>,
}

impl Character {
    /// Validates the values against the element closure.
    pub fn new(group: &PermGroup, values: Vec<i8>) -> Result<Self> {
        if values.len() != group.generators().len() || values.iter().any(|v| *v != 1 && *v != -1) {
            return Err(Error::BadParams("character needs one value +-1 per generator".into()));
        }
        let e = group.elements()?;
        // Value along BFS words, then check consistency on every edge.
        let mut val = vec![1i8; e.len()];
        for i in 1..e.len() {
            let (p, g) = e.parent(i);
            val[i] = values[g] * val[p];
        }
        for i in 0..e.len() {
            for (g, s) in group.generators().iter().enumerate() {
                let j = e.index_of(&s.mul(e.get(i))).expect("closed");
                if val[j] != values[g] * val[i] {
                    return Err(Error::NotHomomorphism);
                }
            }
        }
        Ok(Character { group: group.clone(), values })
    }

    pub fn trivial(group: &PermGroup) -> Self {
        Character { group: group.clone(), values: vec![1; group.generators().len()] }
    }

    pub fn sign(group: &PermGroup) -> Self {
        Character { group: group.clone(), values: group.generators().iter().map(|g| g.sign() as i8).collect() }
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| *v == 1)
    }
}

/// Rank-one lattice on which each generator acts by its character value.
pub fn rank1_twist(phi: &Character) -> GLattice {
    let gens = phi.values.iter().map(|&v| IntMat::from_i64(&[&[v as i64]])).collect();
    let name = if phi.is_trivial() { "Z" } else { "Z_phi" };
    GLattice::raw(&phi.group, 1, gens, None).with_labels(vec!["z".into()]).with_name(name)
}

/// The sign lattice `Z^-`.
pub fn sign_lattice(g: &PermGroup) -> GLattice {
    let eval: Evaluator = Arc::new(|p: &Perm| IntMat::from_i64(&[&[p.sign()]]));
    GLattice::from_evaluator(g, 1, eval).with_labels(vec!["z".into()]).with_name("sign")
}

/// Trivial lattice `Z^rank`.
pub fn trivial_lattice(g: &PermGroup, rank: usize) -> GLattice {
    let eval: Evaluator = Arc::new(move |_: &Perm| IntMat::identity(rank));
    let name = if rank == 1 { "Z".to_string() } else { format!("Z^{rank}") };
    GLattice::from_evaluator(g, rank, eval).with_name(name)
}
