use std::collections::{BTreeSet, HashSet};

use glattice::permgrp::{
    alpha_beta, cycle_type_rep, partitions, subgroups_up_to_conjugacy, Perm, PermGroup, DEFAULT_SUBGROUP_CAP,
};
use proptest::prelude::*;

fn conj_key(elems: &[Perm], set: &BTreeSet<Perm>) -> BTreeSet<Perm> {
    elems
        .iter()
        .map(|g| set.iter().map(|h| g.conjugate(h)).collect::<BTreeSet<_>>())
        .min()
        .unwrap()
}

fn close_set(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut set = BTreeSet::from([Perm::identity(n)]);
    let mut frontier = vec![Perm::identity(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.mul(&x);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

#[test]
fn s3_catalog_matches_subset_brute_force() {
    let s3 = PermGroup::symmetric(3);
    let elems = s3.elements().unwrap().list().to_vec();
    let mut classes = HashSet::new();
    for mask in 1u32..(1 << elems.len()) {
        let set: BTreeSet<Perm> = (0..elems.len()).filter(|i| mask >> i & 1 == 1).map(|i| elems[i].clone()).collect();
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(&a.mul(b))));
        if closed {
            classes.insert(conj_key(&elems, &set));
        }
    }
    assert_eq!(classes.len(), 4);
    assert_eq!(subgroups_up_to_conjugacy(&s3, DEFAULT_SUBGROUP_CAP).unwrap().len(), classes.len());
}

#[test]
fn s4_catalog_matches_two_generated_brute_force() {
    let s4 = PermGroup::symmetric(4);
    let elems = s4.elements().unwrap().list().to_vec();
    let mut classes = HashSet::new();
    for a in &elems {
        for b in &elems {
            classes.insert(conj_key(&elems, &close_set(4, &[a.clone(), b.clone()])));
        }
    }
    let cat = subgroups_up_to_conjugacy(&s4, DEFAULT_SUBGROUP_CAP).unwrap();
    assert_eq!(classes.len(), 11);
    assert_eq!(cat.len(), 11);
    let got: HashSet<_> =
        cat.members.iter().map(|m| conj_key(&elems, &close_set(4, m.generators()))).collect();
    assert_eq!(got, classes);
    assert!(cat.is_complete());
}

#[test]
fn a8_closure() {
    let a8 = PermGroup::new(8, PermGroup::alternating(8).generators().to_vec()).unwrap();
    let e = a8.close_elements(25_000).unwrap();
    assert_eq!(e.len(), 20160);
    // Closed and contains inverses (spot check).
    for i in (0..e.len()).step_by(997) {
        assert!(e.index_of(&e.get(i).inverse()).is_some());
        assert!(e.index_of(&e.get(i).mul(e.get((i * 7) % e.len()))).is_some());
    }
    // |G| divides 8!
    assert_eq!(40320 % e.len(), 0);
}

#[test]
fn cycle_type_reps_cover_sn_once() {
    for n in 1..=6 {
        let sn = PermGroup::symmetric(n);
        let reps: Vec<Perm> = partitions(n).iter().map(|l| cycle_type_rep(n, l)).collect();
        for g in sn.elements().unwrap().list() {
            let hits = reps.iter().filter(|r| r.cycle_type() == g.cycle_type()).count();
            assert_eq!(hits, 1);
            // Cycle type is a complete conjugacy invariant in S_n: find a conjugator.
            let r = reps.iter().find(|r| r.cycle_type() == g.cycle_type()).unwrap();
            assert!(sn.elements().unwrap().list().iter().any(|x| &x.conjugate(r) == g));
        }
    }
}

#[test]
fn alpha_beta_fixed_point_structure() {
    for (n, p) in [(6, 2), (8, 2), (12, 3), (4, 2), (9, 3)] {
        let h = alpha_beta(n, p).unwrap();
        // No global fixed point.
        assert!(h.orbit_sizes().iter().all(|&s| s > 1));
        if n / p > p {
            for c in h.cyclic_subgroup_reps(10_000).unwrap() {
                assert!(c.generators().iter().all(|g| g.fixed_points() > 0), "{n},{p}: {c:?}");
            }
        }
    }
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn orbits_of_cyclic_group_are_cycles(g in arb_perm(9)) {
        let grp = PermGroup::new(9, vec![g.clone()]).unwrap();
        let mut sizes = grp.orbit_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(sizes, g.cycle_type());
    }

    #[test]
    fn closure_is_a_group(a in arb_perm(5), b in arb_perm(5)) {
        let grp = PermGroup::new(5, vec![a, b]).unwrap();
        let e = grp.elements().unwrap();
        prop_assert_eq!(120 % e.len(), 0);
        for x in e.list() {
            prop_assert!(e.index_of(&x.inverse()).is_some());
            for y in e.list().iter().take(10) {
                prop_assert!(e.index_of(&x.mul(y)).is_some());
            }
        }
    }
}
