use glattice::cohom::{sha, sha2_via_sequence, sha2_via_sequence_with};
use glattice::flasque::{coflasque_resolution, flasque_resolution, h1_any, is_coflasque, is_flasque, rho_h1, Verdict};
use glattice::glat::{coset_lattice, dsum, find_iso, fixture, natural, trivial_lattice, verify_iso};
use glattice::permgrp::{subgroups_up_to_conjugacy, PermGroup, SubgroupCatalog};
use glattice::seqcert::{build_named, cert_from_quotient, gn_middle_witness, square, NamedSeq, StableWitness};
use glattice::{AbelianInvariants, Caps, Error};

fn s4() -> (PermGroup, SubgroupCatalog) {
    let g = PermGroup::symmetric(4);
    let cat = subgroups_up_to_conjugacy(&g, 200).unwrap();
    (g, cat)
}

fn klein_normal() -> PermGroup {
    PermGroup::from_cycles_1based(4, &[vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]], None).unwrap()
}

fn dihedral() -> PermGroup {
    PermGroup::from_cycles_1based(4, &[vec![vec![1, 2, 3, 4]], vec![vec![1, 3]]], Some("D8".into())).unwrap()
}

#[test]
fn root_lattice_is_not_coflasque() {
    for n in 3..=5 {
        let g = PermGroup::symmetric(n);
        let cat = subgroups_up_to_conjugacy(&g, 200).unwrap();
        let r = is_coflasque(&fixture("A", &g).unwrap(), &cat).unwrap();
        assert_eq!(r.verdict, Verdict::No);
        assert!(r.failures.iter().any(|(_, inv)| *inv == AbelianInvariants::cyclic(n as u64)));
    }
}

#[test]
fn permutation_lattices_are_flasque_and_coflasque() {
    let (g, cat) = s4();
    let lattices = [natural(&g), fixture("W", &g).unwrap(), fixture("V", &g).unwrap(), coset_lattice(&g, &dihedral()).unwrap()];
    for m in &lattices {
        assert_eq!(is_coflasque(m, &cat).unwrap().verdict, Verdict::Yes, "{}", m.name());
        assert_eq!(is_flasque(m, &cat).unwrap().verdict, Verdict::Yes, "{}", m.name());
    }
}

#[test]
fn resolution_of_trivial_lattice_uses_the_whole_group() {
    let (g, cat) = s4();
    let cr = coflasque_resolution(&trivial_lattice(&g, 1), &cat).unwrap();
    assert!(cr.summands.iter().any(|(k, _)| k.order().unwrap() == 24));
    assert_eq!(cr.p().rank(), 1);
    assert_eq!(cr.q().rank(), 0);
}

#[test]
fn flasque_class_of_permutation_lattice_has_no_h1() {
    let (g, cat) = s4();
    let fr = flasque_resolution(&fixture("W", &g).unwrap(), &cat).unwrap();
    assert!(fr.seq.is_verified());
    assert!(fr.p.is_permutation_basis());
    for h in &cat.members {
        assert!(h1_any(h, &fr.f, &Caps::default()).unwrap().0.is_trivial());
    }
}

#[test]
fn rho_h1_matches_gn_sequence_on_klein_four() {
    let (g, cat) = s4();
    let v4 = klein_normal();
    let a2 = fixture("A2", &g).unwrap();
    let rho = rho_h1(&v4, &a2, &cat).unwrap();
    assert_eq!(rho.torsion_u64(), vec![2]);
    let gn = build_named(NamedSeq::Gn, 4).unwrap();
    assert!(matches!(sha2_via_sequence(&v4, &gn), Err(Error::HypothesisFailed(_))));
    let (v, f) = gn_middle_witness(&g).unwrap();
    assert!(verify_iso(&f, &v, gn.lattice(1).unwrap()));
    let via = sha2_via_sequence_with(&v4, &gn, Some((&v, &f)), &Caps::default()).unwrap();
    assert_eq!(via.invariants, rho);
    assert_eq!(sha(2, &v4, &a2).unwrap().invariants, rho);
}

#[test]
fn rho_h1_is_additive() {
    let (g, cat) = s4();
    let a2 = fixture("A2", &g).unwrap();
    let w2 = fixture("Wedge2A", &g).unwrap();
    let sum = dsum(&a2, &w2).unwrap();
    for h in &cat.members {
        let whole = rho_h1(h, &sum, &cat).unwrap();
        let parts = rho_h1(h, &a2, &cat).unwrap().sum(&rho_h1(h, &w2, &cat).unwrap());
        assert_eq!(whole, parts, "{}", h.label());
    }
}

#[test]
fn quasi_permutation_lattices_have_trivial_rho() {
    for n in 3..=5 {
        let g = PermGroup::symmetric(n);
        let cat = subgroups_up_to_conjugacy(&g, 200).unwrap();
        let a = fixture("A", &g).unwrap();
        assert!(rho_h1(&g, &a, &cat).unwrap().is_trivial());
    }
}

#[test]
fn sym2_root_lattice_stably_permutation_at_four() {
    // Sym^2 A_3 (+) Z ~= U_4 (+) Z[S_4 / D_8]
    let (g, _) = s4();
    let z = trivial_lattice(&g, 1);
    let s = fixture("Sym2A", &g).unwrap();
    let q = dsum(&natural(&g), &coset_lattice(&g, &dihedral()).unwrap()).unwrap();
    let lhs = dsum(&s, &z).unwrap();
    let iso = find_iso(&lhs, &q).unwrap().expect("bounded search finds the witness");
    let w = StableWitness { s, p: z, q, iso };
    w.verify().unwrap();
    let cert = cert_from_quotient(&square(&fixture("A", &g).unwrap()).unwrap(), &w).unwrap();
    cert.check().unwrap();
    assert_eq!(cert.m.rank(), 3);
    assert_eq!(cert.n.rank(), 9);
}
