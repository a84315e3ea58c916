mod common;

use common::*;
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylgraph::families::{complete, edgeless, kneser, quadric_graph, Sign};
use weylgraph::iso::{are_isomorphic, automorphism_group, canonical_form, is_isomorphism, Certificate};
use weylgraph::perm::Permutation;
use weylgraph::recognition::twisted_wf4;
use weylgraph::roots::{root_system, RootType};
use weylgraph::{BichromaticGraph, Color};

fn petersen_from_pentagons() -> BichromaticGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    BichromaticGraph::monochromatic(10, Color::Long, &edges).unwrap()
}

#[test]
fn petersen_two_ways() {
    let k = kneser(5, 2).unwrap();
    assert_eq!(canonical_form(&k).unwrap(), canonical_form(&petersen_from_pentagons()).unwrap());
}

#[test]
fn certificates_survive_shuffles() {
    let f4 = weyl(RootType::F, 4);
    let reference = canonical_form(&f4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let p = random_permutation(&mut rng, f4.len());
        assert_eq!(canonical_form(&f4.permuted(&p).unwrap()).unwrap(), reference);
    }
    assert_ne!(canonical_form(&twisted_wf4().unwrap()).unwrap(), reference);
    let bytes = Certificate::from_hex(&reference.to_hex()).unwrap();
    assert_eq!(bytes, reference.encoding());
}

#[test]
fn classical_identities() {
    let a4 = weyl(RootType::A, 4);
    let map = are_isomorphic(&a4, &kneser(5, 2).unwrap()).unwrap().unwrap();
    assert!(is_isomorphism(&a4, &kneser(5, 2).unwrap(), &map));
    assert!(are_isomorphic(&weyl(RootType::E, 6), &quadric_graph(3, Sign::Minus).unwrap()).unwrap().is_some());
    assert!(are_isomorphic(&complete(3).unwrap(), &edgeless(3).unwrap()).unwrap().is_none());
}

#[test]
fn petersen_automorphisms_match_brute_force_and_s5() {
    let k = kneser(5, 2).unwrap();
    let aut = automorphism_group(&k).unwrap();
    assert_eq!(aut.order, BigUint::from(brute_force_automorphisms(&k)));
    assert_eq!(aut.order, BigUint::from(120u32));
    assert_eq!(automorphism_group(&complete(4).unwrap()).unwrap().order, BigUint::from(24u32));
}

#[test]
fn wf4_group_is_the_reflection_group_mod_centre() {
    let phi = root_system(RootType::F, 4).unwrap();
    let w = reflection_group_order(&phi);
    assert_eq!(w, 1152);
    let aut = automorphism_group(&weyl(RootType::F, 4)).unwrap();
    assert_eq!(aut.order, BigUint::from(w / 2));
}

#[test]
fn random_graphs_against_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..150 {
        let n = 1 + round % 8;
        let g = random_graph(&mut rng, n, 0.45, round % 2 == 0);
        let aut = automorphism_group(&g).unwrap();
        assert_eq!(aut.order, BigUint::from(brute_force_automorphisms(&g)), "{g:?}");
        let h = random_graph(&mut rng, n, 0.45, round % 2 == 0);
        let ours = are_isomorphic(&g, &h).unwrap();
        assert_eq!(ours.is_some(), brute_force_isomorphic(&g, &h));
        if let Some(map) = ours {
            assert!(is_isomorphism(&g, &h, &map));
        }
    }
}

#[test]
fn relabelled_copies_compose_to_automorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in [weyl(RootType::B, 4), weyl(RootType::E, 6), kneser(6, 2).unwrap(), twisted_wf4().unwrap()] {
        let sigma = random_permutation(&mut rng, g.len());
        let h = g.permuted(&sigma).unwrap();
        let map = are_isomorphic(&g, &h).unwrap().unwrap();
        // map: g -> h, sigma^-1: h -> g
        let sigma_inv = Permutation::from_images(sigma.clone()).unwrap().inverse();
        let composite: Vec<usize> = map.iter().map(|&v| sigma_inv.image(v)).collect();
        assert!(is_isomorphism(&g, &g, &composite));
    }
}

#[test]
fn orbit_structure() {
    let mut factorial = BigUint::from(1u32);
    let g = weyl(RootType::B, 5);
    for k in 1..=g.len() {
        factorial *= BigUint::from(k);
    }
    let aut = automorphism_group(&g).unwrap();
    assert_eq!(&factorial % &aut.order, BigUint::from(0u32));
    for orbit in &aut.orbits {
        let c = g.color(orbit.first().unwrap());
        assert!(orbit.iter().all(|v| g.color(v) == c));
        assert_eq!(&aut.order % BigUint::from(orbit.len()), BigUint::from(0u32));
    }
    assert_eq!(aut.orbit_sizes(), vec![5, 20]);
    for p in &aut.generators {
        assert!(is_isomorphism(&g, &g, p.images()));
    }
}

#[test]
fn exceptional_orders() {
    let e7 = automorphism_group(&weyl(RootType::E, 7)).unwrap();
    assert_eq!(e7.order, BigUint::from(1_451_520u64));
    let e8 = automorphism_group(&weyl(RootType::E, 8)).unwrap();
    assert_eq!(e8.order, BigUint::from(348_364_800u64));
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]

    // canonical forms are relabeling invariants, and the returned map is a
    // genuine isomorphism
    #[test]
    fn canonical_form_is_a_relabeling_invariant(seed in 0u64..u64::MAX, n in 1usize..14, p in 0.1f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p, true);
        let perm = random_permutation(&mut rng, n);
        let h = g.permuted(&perm).unwrap();
        proptest::prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let map = are_isomorphic(&g, &h).unwrap().expect("relabeled copy");
        proptest::prop_assert!(is_isomorphism(&g, &h, &map));
        let aut = automorphism_group(&g).unwrap();
        proptest::prop_assert_eq!(aut.order, automorphism_group(&h).unwrap().order);
    }
}
