use std::time::Instant;

use glattice::cohom::{h1_aug_formula, h1_dual_fast, h_bar, sha, sha1_aug_fast, tate_hm1};
use glattice::glat::{fixture, natural};
use glattice::permgrp::{alpha_beta, subgroups_up_to_conjugacy, PermGroup};

#[test]
fn sha2_of_tensor_square_on_s4() {
    let s4 = PermGroup::symmetric(4);
    let a2 = fixture("A2", &s4).unwrap();
    let t = Instant::now();
    let h = h_bar(2, &s4, &a2).unwrap();
    eprintln!("H^2(S4, A(x)A) = {} in {:?}", h.invariants, t.elapsed());
    let s = sha(2, &s4, &a2).unwrap();
    eprintln!("Sha^2(S4, A(x)A) = {} in {:?}", s.invariants, t.elapsed());
    assert!(s.invariants.is_trivial());
}

#[test]
fn h1_orbit_gcd_formula_on_small_symmetric_groups() {
    for n in 3..=5 {
        let g = PermGroup::symmetric(n);
        let a = fixture("A", &g).unwrap();
        for h in subgroups_up_to_conjugacy(&g, 200).unwrap().members.iter() {
            let bar = h_bar(1, h, &a).unwrap();
            assert_eq!(bar.invariants, h1_aug_formula(h), "{}", h.label());
            assert_eq!(h1_dual_fast(h, &a).unwrap(), bar.invariants, "{}", h.label());
        }
    }
}

#[test]
fn dual_fast_matches_bar_on_s4_grid() {
    let s4 = PermGroup::symmetric(4);
    let cat = subgroups_up_to_conjugacy(&s4, 200).unwrap();
    for name in ["A", "A2", "Sym2A", "Wedge2A", "U", "sign", "Wedge2U"] {
        let m = fixture(name, &s4).unwrap();
        for h in cat.members.iter() {
            let bar = h_bar(1, h, &m).unwrap();
            assert_eq!(h1_dual_fast(h, &m).unwrap(), bar.invariants, "{name} over {}", h.label());
        }
    }
}

#[test]
fn permutation_lattices_have_no_h1() {
    for n in 2..=5 {
        let g = PermGroup::symmetric(n);
        let u = natural(&g);
        for h in subgroups_up_to_conjugacy(&g, 200).unwrap().members.iter() {
            assert!(h_bar(1, h, &u).unwrap().is_trivial());
        }
    }
}

#[test]
fn cyclic_periodicity() {
    let s4 = PermGroup::symmetric(4);
    for h in s4.cyclic_subgroup_reps(1000).unwrap() {
        for name in ["A", "A2", "Sym2A", "sign"] {
            let m = fixture(name, &s4).unwrap();
            assert_eq!(h_bar(1, &h, &m).unwrap().invariants, tate_hm1(&h, &m).unwrap());
        }
    }
}

#[test]
fn sha1_fast_path_agrees_with_bar() {
    let mut groups = vec![alpha_beta(4, 2).unwrap(), alpha_beta(6, 2).unwrap(), PermGroup::alternating(4)];
    let s4 = PermGroup::symmetric(4);
    groups.extend(subgroups_up_to_conjugacy(&s4, 200).unwrap().members.iter().cloned());
    for h in groups {
        let a = fixture("A", &PermGroup::symmetric(h.degree())).unwrap();
        let s = sha(1, &h, &a).unwrap();
        assert_eq!(s.invariants, sha1_aug_fast(&h).unwrap(), "{}", h.label());
    }
}
