//! `H^1` and `H^2` through the normalized bar complex.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::bar::{hnf_mod_stream, Bar};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::glat::{FinModule, GLattice};
use crate::intlin::{self, AbelianInvariants, IntMat, SnfTracking};
use crate::permgrp::PermGroup;

/// Coefficient module: a lattice or a finite `(Z/m)^r` module.
#[derive(Clone, Debug)]
pub enum Coeffs {
    Lattice(GLattice),
    Finite(FinModule),
}

impl From<&GLattice> for Coeffs {
    fn from(m: &GLattice) -> Self {
        Coeffs::Lattice(m.clone())
    }
}

impl From<GLattice> for Coeffs {
    fn from(m: GLattice) -> Self {
        Coeffs::Lattice(m)
    }
}

impl From<&FinModule> for Coeffs {
    fn from(m: &FinModule) -> Self {
        Coeffs::Finite(m.clone())
    }
}

impl From<FinModule> for Coeffs {
    fn from(m: FinModule) -> Self {
        Coeffs::Finite(m)
    }
}

impl Coeffs {
    pub fn name(&self) -> String {
        match self {
            Coeffs::Lattice(m) => m.name(),
            Coeffs::Finite(m) => m.name(),
        }
    }

    pub fn group(&self) -> &PermGroup {
        match self {
            Coeffs::Lattice(m) => m.group(),
            Coeffs::Finite(m) => m.group(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Coeffs::Lattice(m) => m.rank(),
            Coeffs::Finite(m) => m.rank(),
        }
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            Coeffs::Lattice(_) => None,
            Coeffs::Finite(m) => Some(m.modulus()),
        }
    }

    /// Element matrices of the restriction to `h`, in `h`'s closure order.
    fn matrices_on(&self, h: &PermGroup) -> Result<Arc<Vec<IntMat>>> {
        match self {
            Coeffs::Lattice(m) => m.restrict(h)?.element_matrices(),
            Coeffs::Finite(m) => m.restrict(h)?.element_matrices(),
        }
    }
}

/// Which computation produced a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    Bar,
    Formula,
    DualFast,
    Tate,
    Sequence,
    Rho,
    /// Equivariant linear solve (isomorphisms, splittings, certificates).
    Solver,
}

impl Path {
    pub fn as_str(&self) -> &'static str {
        match self {
            Path::Bar => "bar",
            Path::Formula => "formula",
            Path::DualFast => "dual-fast",
            Path::Tate => "tate",
            Path::Sequence => "sequence",
            Path::Rho => "rho",
            Path::Solver => "solver",
        }
    }
}

/// Data needed to read off the class of a cocycle.
#[derive(Debug)]
enum Solver {
    Trivial,
    /// Lattice coefficients: `Z^i = D X / N` with `X = {x : D x = 0 mod N}`,
    /// `D = d_(i-1)`, `N = |H|`; classes live in `Z^k / col(A)` in the
    /// coordinates `y = T x / N`.
    Lattice { d: IntMat, t: IntMat, n: BigInt, left: IntMat },
    /// Finite coefficients mod `m`: `Z^i = col(X)`, `X = m T^-1`, class
    /// coordinates `y = T z / m`.
    Finite { t: IntMat, m: BigInt, left: IntMat },
}

/// A computed `H^i(H, M)`: invariants plus representative cocycles.
#[derive(Debug, Clone)]
pub struct CohomGroup {
    pub degree: usize,
    pub group: PermGroup,
    pub coefficients: Coeffs,
    pub invariants: AbelianInvariants,
    /// Order of each representative, a divisor chain.
    pub orders: Vec<BigInt>,
    /// One flat cochain per generator of the group.
    pub cocycle_reps: Vec<Vec<BigInt>>,
    pub path: Path,
    bar: Arc<Bar>,
    solver: Arc<Solver>,
    /// Positions of the nontrivial factors in the Smith form.
    slots: Vec<usize>,
}

impl std::fmt::Debug for Bar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bar(|H|={}, rank {})", self.n, self.r)
    }
}

impl CohomGroup {
    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    /// Class of a cocycle, as coordinates modulo [`CohomGroup::orders`].
    pub fn coordinates(&self, z: &[BigInt]) -> Result<Vec<BigInt>> {
        let y = match &*self.solver {
            Solver::Trivial => return Ok(Vec::new()),
            Solver::Lattice { d, t, n, left } => {
                let nz = IntMat::column(z.iter().map(|v| v * n).collect());
                let x = intlin::solve_linear(d, &nz)
                    .ok_or_else(|| Error::BadParams("not a cocycle".into()))?;
                left.mul(&intlin::div_exact(&t.mul(&x), n))
            }
            Solver::Finite { t, m, left } => {
                let zc = IntMat::column(z.iter().map(|v| ((v % m) + m) % m).collect());
                let tz = t.mul(&zc);
                if tz.data().iter().any(|v| !(v % m).is_zero()) {
                    return Err(Error::BadParams("not a cocycle".into()));
                }
                left.mul(&intlin::div_exact(&tz, m))
            }
        };
        Ok(self
            .slots
            .iter()
            .zip(&self.orders)
            .map(|(&j, s)| {
                let v = &y[(j, 0)];
                ((v % s) + s) % s
            })
            .collect())
    }

    /// Linear combination of the representatives.
    pub fn combine(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let len = self.bar.dim(self.degree);
        let mut out = vec![BigInt::zero(); len];
        for (c, z) in coeffs.iter().zip(&self.cocycle_reps) {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(z) {
                *o += c * v;
            }
        }
        if let Some(m) = self.coefficients.modulus() {
            for o in &mut out {
                *o = ((&*o % m) + m) % m;
            }
        }
        out
    }

    /// Applies the next coboundary `d_i` to a cochain (small groups only).
    pub fn coboundary(&self, z: &[BigInt]) -> Vec<BigInt> {
        let d = self.bar.d(self.degree);
        let mut v = d.mul_vec(z);
        if let Some(m) = self.coefficients.modulus() {
            for x in &mut v {
                *x = ((&*x % m) + m) % m;
            }
        }
        v
    }

    pub(crate) fn bar(&self) -> &Bar {
        &self.bar
    }
}

/// `H^i(H, M)` by the bar complex with the default caps.
pub fn h_bar(i: usize, h: &PermGroup, coeffs: impl Into<Coeffs>) -> Result<CohomGroup> {
    h_bar_capped(i, h, coeffs, &Caps::default())
}

pub fn h_bar_capped(i: usize, h: &PermGroup, coeffs: impl Into<Coeffs>, caps: &Caps) -> Result<CohomGroup> {
    let coeffs = coeffs.into();
    if !(1..=2).contains(&i) {
        return Err(Error::BadParams(format!("bar cohomology only in degrees 1 and 2, got {i}")));
    }
    let cap = caps.bar(i);
    let elems = h.close_elements(cap).map_err(|e| match e {
        Error::CapExceeded { needed, .. } => Error::cap(format!("bar complex H^{i}({})", h.label()), needed, cap),
        other => other,
    })?;
    let mats = coeffs.matrices_on(h)?;
    let bar = Arc::new(Bar::new(elems, mats, coeffs.rank()));
    let (solver, factors, reps) = if bar.dim(i) == 0 {
        (Solver::Trivial, Vec::new(), Vec::new())
    } else {
        match coeffs.modulus() {
            None => lattice_cohomology(&bar, i),
            Some(m) => finite_cohomology(&bar, i, m),
        }
    };
    let slots: Vec<usize> = factors.iter().map(|(j, _)| *j).collect();
    let orders: Vec<BigInt> = factors.into_iter().map(|(_, s)| s).collect();
    let invariants = AbelianInvariants::from_factors(orders.iter().cloned(), 0);
    Ok(CohomGroup {
        degree: i,
        group: h.clone(),
        coefficients: coeffs,
        invariants,
        orders,
        cocycle_reps: reps,
        path: Path::Bar,
        bar,
        solver: Arc::new(solver),
        slots,
    })
}

type Presented = (Solver, Vec<(usize, BigInt)>, Vec<Vec<BigInt>>);

/// Smith form of a presentation `Z^k / col(a)`: nontrivial factors with
/// their positions, the left transform and `u = left^-1`.
fn present(a: &IntMat) -> (Vec<(usize, BigInt)>, IntMat, IntMat) {
    let s = intlin::snf_with(a, SnfTracking { u: true, v: false, left: true, right: false });
    let k = a.rows();
    let mut factors = Vec::new();
    for j in 0..k {
        let d = if j < a.cols() { s.s[(j, j)].clone() } else { BigInt::zero() };
        assert!(!d.is_zero(), "cohomology of a finite group is torsion");
        if !d.is_one() {
            factors.push((j, d));
        }
    }
    (factors, s.left.expect("tracked"), s.u.expect("tracked"))
}

struct SatLevel {
    d: IntMat,
    t: IntMat,
    /// Generators (columns) of the cocycles `Z^i = D X / N`.
    zgens: IntMat,
}

fn sat_level(d: IntMat, n: &BigInt) -> SatLevel {
    let t = intlin::row_hnf_mod(&d, n);
    let x = intlin::scaled_inverse(&t, n);
    let zgens = intlin::div_exact(&d.mul(&x), n);
    SatLevel { d, t, zgens }
}

/// Lattice coefficients: `H^i` is the torsion of `C^i / B^i`, since the
/// cocycles are the saturation of the coboundaries.
fn lattice_cohomology(bar: &Bar, i: usize) -> Presented {
    let n = BigInt::from(bar.n);
    let d0 = bar.d(0);
    let (level, kernel_prev) = if i == 1 {
        let g = intlin::kernel_basis(&d0);
        (sat_level(d0, &n), g)
    } else {
        let l1 = sat_level(d0, &n);
        (sat_level(bar.d(1), &n), l1.zgens)
    };
    let SatLevel { d, t, zgens } = level;
    let tg = intlin::div_exact(&t.mul(&kernel_prev), &n);
    let a = IntMat::hstack(&[&t, &tg]);
    let (factors, left, u) = present(&a);
    let reps = factors.iter().map(|&(j, _)| zgens.mul(&IntMat::column(u.col(j))).col(0)).collect();
    (Solver::Lattice { d, t, n, left }, factors, reps)
}

/// Finite coefficients: cocycles from a modular kernel of `d_i`, coboundaries
/// from `d_(i-1)`.
fn finite_cohomology(bar: &Bar, i: usize, m: &BigInt) -> Presented {
    let k = bar.dim(i);
    let t = if i == 1 {
        // A 1-cochain is a crossed homomorphism as soon as the cocycle
        // identity holds with a generator in front.
        let mut gens: Vec<usize> = Vec::new();
        for g in 1..bar.n {
            let (p, _) = bar.elems.parent(g);
            if p == 0 {
                gens.push(g);
            }
        }
        hnf_mod_stream(k, m, gens.into_iter().map(|g| reduce(bar.d_rows(1, g), m)))
    } else {
        hnf_mod_stream(k, m, (1..bar.n).map(|g| reduce(bar.d_rows(i, g), m)))
    };
    let x = intlin::scaled_inverse(&t, m);
    let prev = bar.d(i - 1);
    let tp = intlin::div_exact(&t.mul(&prev), m);
    let a = IntMat::hstack(&[&tp, &t]);
    let (factors, left, u) = present(&a);
    let reps = factors
        .iter()
        .map(|&(j, _)| x.mul(&IntMat::column(u.col(j))).reduce_mod(m).col(0))
        .collect();
    (Solver::Finite { t, m: m.clone(), left }, factors, reps)
}

fn reduce(a: IntMat, m: &BigInt) -> IntMat {
    a.reduce_mod(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{aug_kernel, mod_m, natural, sign_lattice, trivial_lattice};

    fn inv(c: &CohomGroup) -> Vec<u64> {
        c.invariants.torsion_u64()
    }

    #[test]
    fn h1_examples() {
        let s3 = PermGroup::symmetric(3);
        let a = aug_kernel(&natural(&s3)).unwrap();
        assert_eq!(inv(&h_bar(1, &s3, &a).unwrap()), vec![3]);
        let c2 = PermGroup::symmetric(2);
        assert_eq!(inv(&h_bar(1, &c2, sign_lattice(&c2)).unwrap()), vec![2]);
        assert!(h_bar(1, &PermGroup::trivial(3), trivial_lattice(&PermGroup::trivial(3), 2)).unwrap().is_trivial());
        assert!(h_bar(1, &s3, natural(&s3)).unwrap().is_trivial());
    }

    #[test]
    fn h2_of_trivial_lattice_is_abelianization() {
        let cases: Vec<(PermGroup, Vec<u64>)> = vec![
            (PermGroup::symmetric(2), vec![2]),
            (PermGroup::cyclic(3), vec![3]),
            (PermGroup::symmetric(3), vec![2]),
            (PermGroup::symmetric(4), vec![2]),
            (PermGroup::alternating(4), vec![3]),
            (PermGroup::from_cycles_1based(4, &[vec![vec![1, 2]], vec![vec![3, 4]]], None).unwrap(), vec![2, 2]),
        ];
        for (g, expect) in cases {
            let z = trivial_lattice(&g, 1);
            assert_eq!(inv(&h_bar(2, &g, &z).unwrap()), expect, "{}", g.label());
        }
    }

    #[test]
    fn representatives_are_cocycles() {
        let s3 = PermGroup::symmetric(3);
        for i in 1..=2 {
            let a = aug_kernel(&natural(&s3)).unwrap();
            let c = h_bar(i, &s3, &a).unwrap();
            for (z, o) in c.cocycle_reps.iter().zip(&c.orders) {
                assert!(c.coboundary(z).iter().all(|v| v.is_zero()));
                let coords = c.coordinates(z).unwrap();
                assert_eq!(coords.iter().filter(|v| !v.is_zero()).count(), 1, "order {o}");
            }
        }
    }

    #[test]
    fn finite_coefficients() {
        let c2 = PermGroup::symmetric(2);
        let z2 = mod_m(&trivial_lattice(&c2, 1), 2).unwrap();
        assert_eq!(inv(&h_bar(1, &c2, &z2).unwrap()), vec![2]);
        assert_eq!(inv(&h_bar(2, &c2, &z2).unwrap()), vec![2]);
        let s3 = PermGroup::symmetric(3);
        let z3 = mod_m(&trivial_lattice(&s3, 1), 3).unwrap();
        assert!(h_bar(1, &s3, &z3).unwrap().is_trivial());
        let z2 = mod_m(&trivial_lattice(&s3, 1), 2).unwrap();
        let c = h_bar(1, &s3, &z2).unwrap();
        assert_eq!(inv(&c), vec![2]);
        for z in &c.cocycle_reps {
            assert!(c.coboundary(z).iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = PermGroup::symmetric(5);
        let z = trivial_lattice(&s5, 1);
        assert!(h_bar(2, &s5, &z).unwrap_err().is_cap());
    }
}
