mod common;

use common::{all_small_graphs, arb_graph, brute_has_minor};
use cutnorm::minors::{self, find_minor, k4, k5, k5_minus_edge, minor_profile};
use cutnorm::{parse_named, Budget};
use proptest::prelude::*;

#[test]
fn exhaustive_agreement_on_small_hosts() {
    let patterns = [k4(), k5_minus_edge(), k5(), parse_named("K3").unwrap(), parse_named("C4").unwrap()];
    for g in all_small_graphs(5) {
        for h in &patterns {
            let w = find_minor(&g, h, &Budget::unlimited()).unwrap();
            assert_eq!(w.is_some(), brute_has_minor(&g, h), "{g} / {h}");
            if let Some(w) = w {
                w.validate(&g, h).unwrap();
            }
        }
    }
}

#[test]
fn catalog_profiles() {
    let p = |n: &str| minor_profile(&parse_named(n).unwrap());
    let v8 = p("V8");
    assert!(v8.k5_free && !v8.k5e_free && !v8.k4_free);
    assert!(p("K3,3").k5e_free);
    assert!(!p("K5").k5_free);
    assert!(p("W7").k5e_free);
    assert!(p("C7").k4_free);
    let oct = p("octahedron");
    assert!(oct.k5_free && !oct.k5e_free);
    assert!(!p("K3,3").k4_free);
}

#[test]
fn v8_has_no_k5_minor_by_brute_force() {
    let v8 = parse_named("V8").unwrap();
    assert!(!brute_has_minor(&v8, &k5()));
    assert!(brute_has_minor(&v8, &k5_minus_edge()));
}

#[test]
fn tiny_budget_is_reported_not_guessed() {
    // V8 has no K5 minor, so a refutation has to exhaust the search
    let g = parse_named("V8").unwrap();
    assert!(find_minor(&g, &k5(), &Budget::new(3)).is_err());
    assert!(minors::k5_minor(&g, &Budget::unlimited()).unwrap().is_none());
    // planar
    let ico = parse_named("icosahedron").unwrap();
    assert!(minors::k5_minor(&ico, &Budget::unlimited()).unwrap().is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn random_hosts_agree_with_brute_force(g in arb_graph(5, 7)) {
        for h in [k4(), k5_minus_edge(), k5()] {
            let w = find_minor(&g, &h, &Budget::unlimited()).unwrap();
            prop_assert_eq!(w.is_some(), brute_has_minor(&g, &h));
            if let Some(w) = w {
                prop_assert!(w.validate(&g, &h).is_ok());
            }
        }
    }

    #[test]
    fn profile_respects_implications(g in arb_graph(1, 7)) {
        let p = minor_profile(&g);
        prop_assert!(!p.k4_free || p.k5e_free);
        prop_assert!(!p.k5e_free || p.k5_free);
    }
}
