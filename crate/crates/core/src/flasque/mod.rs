//! Flasque and coflasque lattices, resolutions and `H^1` of `rho(M)`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::cohom::{h1_dual_fast, h_bar_capped, tate_hm1, Path};
use crate::error::{Error, Result};
use crate::glat::{coset_lattice, dsum_all, dual, fixed_points, sublattice, CosetSpace, GLattice};
use crate::intlin::{self, AbelianInvariants, IntMat};
use crate::permgrp::{PermGroup, SubgroupCatalog};
use crate::seqcert::{ExactSeq, Term};

/// Three-valued answer relative to a subgroup catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
    /// Every listed subgroup passed but the catalog is not known complete.
    Unknown,
}

#[derive(Debug, Clone)]
pub struct PredicateReport {
    pub verdict: Verdict,
    /// Subgroups with nonzero cohomology, with the group found.
    pub failures: Vec<(String, AbelianInvariants)>,
    pub catalog_hash: String,
    pub catalog_complete: bool,
    /// Which computation was used for each member, in catalog order.
    pub paths: Vec<Path>,
}

fn check_catalog(m: &GLattice, cat: &SubgroupCatalog) -> Result<()> {
    if cat.parent.same_as(m.group()) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

fn predicate(
    m: &GLattice,
    cat: &SubgroupCatalog,
    test: impl Fn(&PermGroup) -> Result<(AbelianInvariants, Path)> + Sync,
) -> Result<PredicateReport> {
    check_catalog(m, cat)?;
    let results = cat.members.par_iter().map(&test).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut paths = Vec::new();
    for (h, (inv, path)) in cat.members.iter().zip(results) {
        paths.push(path);
        if !inv.is_trivial() {
            failures.push((h.label(), inv));
        }
    }
    let verdict = if !failures.is_empty() {
        Verdict::No
    } else if cat.is_complete() {
        Verdict::Yes
    } else {
        Verdict::Unknown
    };
    Ok(PredicateReport { verdict, failures, catalog_hash: cat.hash(), catalog_complete: cat.is_complete(), paths })
}

/// `H^1(H, M)`: bar complex under the cap, the dual Tate form above it.
pub fn h1_any(h: &PermGroup, m: &GLattice, caps: &Caps) -> Result<(AbelianInvariants, Path)> {
    match h_bar_capped(1, h, m, caps) {
        Ok(c) => Ok((c.invariants, Path::Bar)),
        Err(e) if e.is_cap() => Ok((h1_dual_fast(h, m)?, Path::DualFast)),
        Err(e) => Err(e),
    }
}

/// `H^1(H, M) = 0` for every member of the catalog.
pub fn is_coflasque(m: &GLattice, cat: &SubgroupCatalog) -> Result<PredicateReport> {
    let caps = Caps::default();
    predicate(m, cat, |h| h1_any(h, m, &caps))
}

/// `Ĥ^-1(H, M) = 0` for every member of the catalog.
pub fn is_flasque(m: &GLattice, cat: &SubgroupCatalog) -> Result<PredicateReport> {
    predicate(m, cat, |h| Ok((tate_hm1(h, m)?, Path::Tate)))
}

/// `0 -> Q -> P -> M -> 0` with `P` permutation and `Q` coflasque.
#[derive(Debug, Clone)]
pub struct CoflasqueResolution {
    pub seq: ExactSeq,
    /// Summands `Z[G/H]` of `P`, each with the vector of `M^H` it maps to.
    pub summands: Vec<(PermGroup, Vec<BigInt>)>,
    pub catalog_hash: String,
}

impl CoflasqueResolution {
    pub fn q(&self) -> &GLattice {
        self.seq.lattice(0).expect("lattice")
    }

    pub fn p(&self) -> &GLattice {
        self.seq.lattice(1).expect("lattice")
    }
}

struct Builder<'a> {
    m: &'a GLattice,
    g: PermGroup,
    summands: Vec<(PermGroup, Vec<BigInt>)>,
    lattices: Vec<GLattice>,
    eval_cols: Vec<Vec<BigInt>>,
}

impl Builder<'_> {
    fn add(&mut self, h: &PermGroup, v: Vec<BigInt>) -> Result<()> {
        let cs = CosetSpace::new(&self.g, h)?;
        for rep in &cs.reps {
            self.eval_cols.push(self.m.matrix_of(rep)?.mul_vec(&v));
        }
        self.lattices.push(coset_lattice(&self.g, h)?);
        self.summands.push((h.clone(), v));
        Ok(())
    }

    fn eval(&self) -> IntMat {
        IntMat::from_cols(self.m.rank(), &self.eval_cols)
    }

    fn p(&self) -> Result<GLattice> {
        if self.lattices.is_empty() {
            return Ok(crate::glat::trivial_lattice(&self.g, 0));
        }
        let refs: Vec<&GLattice> = self.lattices.iter().collect();
        dsum_all(&refs)
    }

    /// Image of `P^K` in `M`, spanned by the images of `K`-orbit sums.
    fn fixed_image(&self, k: &PermGroup) -> Result<IntMat> {
        let p = self.p()?;
        if p.rank() == 0 {
            return Ok(IntMat::zeros(self.m.rank(), 0));
        }
        let pk = p.restrict(k)?;
        let orbits = permutation_orbits(pk.generator_matrices(), p.rank());
        let e = self.eval();
        let cols: Vec<Vec<BigInt>> = orbits
            .iter()
            .map(|o| {
                let mut v = vec![BigInt::from(0); self.m.rank()];
                for &x in o {
                    for (vi, ei) in v.iter_mut().zip(e.col(x)) {
                        *vi += ei;
                    }
                }
                v
            })
            .collect();
        Ok(IntMat::from_cols(self.m.rank(), &cols))
    }
}

fn permutation_orbits(gens: &[IntMat], n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for g in gens {
        for c in 0..n {
            let r = (0..n).find(|&r| g[(r, c)] != BigInt::from(0)).expect("permutation matrix");
            let (a, b) = (find(&mut parent, c), find(&mut parent, r));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut root_index = std::collections::HashMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        let i = *root_index.entry(r).or_insert_with(|| {
            out.push(Vec::new());
            out.len() - 1
        });
        out[i].push(x);
    }
    out
}

fn covers(image: &IntMat, v: &IntMat) -> bool {
    if image.cols() == 0 {
        v.is_zero()
    } else {
        intlin::in_lattice(image, v)
    }
}

/// Builds `P` from summands `Z[G/K]` so that `P^K -> M^K` is onto for every
/// `K` in the catalog (largest subgroups first), then takes `Q` as the kernel.
pub fn coflasque_resolution(m: &GLattice, cat: &SubgroupCatalog) -> Result<CoflasqueResolution> {
    check_catalog(m, cat)?;
    let g = m.group().clone();
    let mut order: Vec<&PermGroup> = cat.members.iter().collect();
    let sizes: Vec<u128> = order.iter().map(|h| h.order()).collect::<Result<_>>()?;
    let mut idx: Vec<usize> = (0..order.len()).collect();
    idx.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
    order = idx.iter().map(|&i| order[i]).collect();
    let trivial = PermGroup::trivial(g.degree());
    if !order.iter().any(|h| h.generators().is_empty()) {
        order.push(&trivial);
    }
    let mut b = Builder { m, g: g.clone(), summands: Vec::new(), lattices: Vec::new(), eval_cols: Vec::new() };
    for k in order {
        let f = fixed_points(m, k)?;
        for c in 0..f.cols() {
            let v = IntMat::column(f.col(c));
            let image = b.fixed_image(k)?;
            if !covers(&image, &v) {
                b.add(k, f.col(c))?;
            }
        }
        debug_assert!(covers(&b.fixed_image(k)?, &f));
    }
    let p = b.p()?;
    let e = b.eval();
    let kb = intlin::kernel_basis(&e);
    let q = sublattice(&p, &kb)?.with_name(format!("Q({})", m.name()));
    let seq = ExactSeq::verified(
        format!("coflasque({})", m.name()),
        vec![Term::Lattice(q), Term::Lattice(p), Term::Lattice(m.clone())],
        vec![kb, e],
    )?;
    Ok(CoflasqueResolution { seq, summands: b.summands, catalog_hash: cat.hash() })
}

/// `0 -> M -> P -> F -> 0` with `P` permutation and `F` flasque.
#[derive(Debug, Clone)]
pub struct FlasqueResolution {
    pub m: GLattice,
    pub p: GLattice,
    pub f: GLattice,
    pub m_to_p: IntMat,
    pub p_to_f: IntMat,
    pub seq: ExactSeq,
    pub catalog_hash: String,
    pub flasque_check: PredicateReport,
}

/// Dual of a coflasque resolution of `M*`.
pub fn flasque_resolution(m: &GLattice, cat: &SubgroupCatalog) -> Result<FlasqueResolution> {
    let cr = coflasque_resolution(&dual(m), cat)?;
    let p = dual(cr.p()).with_name(format!("P({})", m.name()));
    let f = dual(cr.q()).with_name(format!("F({})", m.name()));
    let m_to_p = cr.seq.maps()[1].transpose();
    let p_to_f = cr.seq.maps()[0].transpose();
    let seq = ExactSeq::verified(
        format!("flasque({})", m.name()),
        vec![Term::Lattice(m.clone()), Term::Lattice(p.clone()), Term::Lattice(f.clone())],
        vec![m_to_p.clone(), p_to_f.clone()],
    )?;
    let flasque_check = is_flasque(&f, cat)?;
    if flasque_check.verdict == Verdict::No {
        return Err(Error::HypothesisFailed(format!("{} is not flasque", f.name())));
    }
    Ok(FlasqueResolution { m: m.clone(), p, f, m_to_p, p_to_f, seq, catalog_hash: cat.hash(), flasque_check })
}

/// `H^1(H, rho(M))` from a flasque resolution over the catalog's group.
pub fn rho_h1(h: &PermGroup, m: &GLattice, cat: &SubgroupCatalog) -> Result<AbelianInvariants> {
    let r = flasque_resolution(m, cat)?;
    Ok(h1_any(h, &r.f, &Caps::default())?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::{fixture, natural, sign_lattice, trivial_lattice};
    use crate::permgrp::subgroups_up_to_conjugacy;

    #[test]
    fn predicates() {
        let s4 = PermGroup::symmetric(4);
        let cat = subgroups_up_to_conjugacy(&s4, 200).unwrap();
        assert_eq!(is_coflasque(&natural(&s4), &cat).unwrap().verdict, Verdict::Yes);
        assert_eq!(is_flasque(&natural(&s4), &cat).unwrap().verdict, Verdict::Yes);
        assert_eq!(is_coflasque(&fixture("A", &s4).unwrap(), &cat).unwrap().verdict, Verdict::No);
        assert_eq!(is_coflasque(&fixture("Sym2A", &s4).unwrap(), &cat).unwrap().verdict, Verdict::Yes);
        let s2 = PermGroup::symmetric(2);
        let c2 = subgroups_up_to_conjugacy(&s2, 200).unwrap();
        assert_eq!(is_flasque(&sign_lattice(&s2), &c2).unwrap().verdict, Verdict::No);
        assert_eq!(is_flasque(&trivial_lattice(&s2, 1), &c2).unwrap().verdict, Verdict::Yes);
        let user = SubgroupCatalog::user_supplied(&s4, vec![s4.clone()]).unwrap();
        assert_eq!(is_flasque(&natural(&s4), &user).unwrap().verdict, Verdict::Unknown);
    }

    #[test]
    fn resolutions_on_s4() {
        let s4 = PermGroup::symmetric(4);
        let cat = subgroups_up_to_conjugacy(&s4, 200).unwrap();
        let a = fixture("A", &s4).unwrap();
        let cr = coflasque_resolution(&a, &cat).unwrap();
        assert_eq!(is_coflasque(cr.q(), &cat).unwrap().verdict, Verdict::Yes);
        let fr = flasque_resolution(&a, &cat).unwrap();
        assert_eq!(fr.flasque_check.verdict, Verdict::Yes);
        // A is quasi-permutation, so rho(A) has no H^1.
        for h in &cat.members {
            assert!(rho_h1(h, &a, &cat).unwrap().is_trivial());
        }
        let z = trivial_lattice(&s4, 1);
        assert!(rho_h1(&s4, &z, &cat).unwrap().is_trivial());
    }
}
