use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::lattice::GLattice;
use crate::error::{Error, Result};
use crate::intlin::{self, IntMat};
use crate::permgrp::PermGroup;

/// A finite module `(Z/m)^rank` with a group action, stored through an
/// integral lift of the generator matrices.
#[derive(Clone)]
pub struct FinModule {
    lift: GLattice,
    modulus: BigInt,
}

impl FinModule {
    /// Module from generator matrices over `Z/m`; each must be invertible mod `m`.
    pub fn new(group: &PermGroup, rank: usize, gens: Vec<IntMat>, modulus: BigInt) -> Result<Self> {
        if modulus < BigInt::from(2) {
            return Err(Error::BadParams("modulus must be at least 2".into()));
        }
        if gens.len() != group.generators().len() {
            return Err(Error::BadParams("one matrix per generator".into()));
        }
        for g in &gens {
            if g.rows() != rank || g.cols() != rank || !intlin::det(g).gcd(&modulus).is_one() {
                return Err(Error::BadParams("generator matrix not invertible mod m".into()));
            }
        }
        let gens = gens.iter().map(|g| g.reduce_mod(&modulus)).collect();
        Ok(FinModule { lift: GLattice::raw(group, rank, gens, None), modulus })
    }

    /// Reduction `M / mM`.
    pub fn from_lattice(m: &GLattice, modulus: &BigInt) -> Result<Self> {
        if *modulus < BigInt::from(2) {
            return Err(Error::BadParams("modulus must be at least 2".into()));
        }
        Ok(FinModule { lift: m.clone().with_name(format!("{}/{}", m.name(), modulus)), modulus: modulus.clone() })
    }

    pub fn group(&self) -> &PermGroup {
        self.lift.group()
    }

    pub fn rank(&self) -> usize {
        self.lift.rank()
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn name(&self) -> String {
        self.lift.name()
    }

    /// The integral lift of the action (not reduced).
    pub fn lift(&self) -> &GLattice {
        &self.lift
    }

    pub fn generator_matrices(&self) -> Vec<IntMat> {
        self.lift.generator_matrices().iter().map(|g| g.reduce_mod(&self.modulus)).collect()
    }

    pub fn element_matrices(&self) -> Result<Arc<Vec<IntMat>>> {
        let t = self.lift.element_matrices()?;
        Ok(Arc::new(t.iter().map(|g| g.reduce_mod(&self.modulus)).collect()))
    }

    pub fn restrict(&self, h: &PermGroup) -> Result<FinModule> {
        Ok(FinModule { lift: self.lift.restrict(h)?, modulus: self.modulus.clone() })
    }

    /// Order of the module, `m^rank`.
    pub fn order(&self) -> BigInt {
        num_traits::pow(self.modulus.clone(), self.rank())
    }
}

impl fmt::Debug for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinModule({}, rank {} mod {})", self.name(), self.rank(), self.modulus)
    }
}

/// `M / mM`.
pub fn mod_m(m: &GLattice, modulus: u64) -> Result<FinModule> {
    FinModule::from_lattice(m, &BigInt::from(modulus))
}
