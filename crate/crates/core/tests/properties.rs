mod common;

use proptest::prelude::*;
use seidel_core::graph6::{from_graph6, to_graph6};
use seidel_core::invariants::seidel_char_poly;
use seidel_core::iso::{automorphisms, canonical_form, find_isomorphism, is_isomorphic};
use seidel_core::iss::{is_iss, iss_family};
use seidel_core::switching::{
    check_complement_commutes, check_complement_switch, check_full_set, check_symmetric_difference,
    switch_set,
};
use seidel_core::{Graph, Permutation, VertexSet};

use common::{graph6_reference, switch_by_definition};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn with_set(max_order: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..1u64 << n).prop_map(move |(g, m)| (g, VertexSet::from_mask(n, m).unwrap()))
    })
}

fn with_two_sets(max_order: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..1u64 << n, 0..1u64 << n).prop_map(move |(g, s, t)| {
            (g, VertexSet::from_mask(n, s).unwrap(), VertexSet::from_mask(n, t).unwrap())
        })
    })
}

fn with_permutation(max_order: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, image)| (g, Permutation::new(image).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph(30)) {
        let text = to_graph6(&g);
        prop_assert_eq!(&text, &graph6_reference(&g));
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn switch_matches_definition((g, s) in with_set(20)) {
        prop_assert_eq!(switch_set(&g, &s).unwrap(), switch_by_definition(&g, s.mask()));
    }

    #[test]
    fn switch_is_involution((g, s) in with_set(20)) {
        prop_assert_eq!(switch_set(&switch_set(&g, &s).unwrap(), &s).unwrap(), g);
    }

    #[test]
    fn switching_identities((g, s, t) in with_two_sets(16)) {
        prop_assert!(check_symmetric_difference(&g, &s, &t).unwrap().is_ok());
        prop_assert!(check_complement_switch(&g, &s).unwrap().is_ok());
        prop_assert!(check_complement_commutes(&g, &s).unwrap().is_ok());
        prop_assert!(check_full_set(&g).is_ok());
    }

    #[test]
    fn degree_sum((g, s) in with_set(20)) {
        let h = switch_set(&g, &s).unwrap();
        for x in [&g, &h] {
            let total: usize = x.degrees().iter().sum();
            prop_assert_eq!(total, 2 * x.edge_count());
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, p) in with_permutation(12)) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let iso = find_isomorphism(&g, &h).unwrap().expect("relabelling is an isomorphism");
        prop_assert!(iso.is_isomorphism(&g, &h));
    }

    #[test]
    fn canonical_form_round_trips(g in graph(12)) {
        let form = canonical_form(&g).unwrap();
        prop_assert!(is_isomorphic(&g, &form.to_graph()).unwrap());
        prop_assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }

    #[test]
    fn polynomial_invariants((g, s) in with_set(10)) {
        let p = seidel_char_poly(&g).unwrap();
        prop_assert_eq!(p.degree(), g.order());
        // Zero diagonal: the x^(n-1) coefficient is minus the trace.
        prop_assert!(p.coefficient(g.order() - 1) == 0.into());
        prop_assert_eq!(seidel_char_poly(&switch_set(&g, &s).unwrap()).unwrap(), p);
    }

    #[test]
    fn polynomial_ignores_labels((g, p) in with_permutation(10)) {
        prop_assert_eq!(seidel_char_poly(&g).unwrap(), seidel_char_poly(&g.relabel(&p).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn iss_family_is_automorphism_and_complement_closed(g in graph(7)) {
        let family = iss_family(&g).unwrap();
        let n = g.order();
        prop_assert!(family.contains(&VertexSet::empty(n)));
        prop_assert!(family.contains(&VertexSet::full(n)));
        let group = automorphisms(&g).unwrap();
        for s in &family.members {
            prop_assert!(family.contains(&s.complement()));
            prop_assert!(is_iss(&g, s).unwrap());
            for a in group.elements() {
                prop_assert!(family.contains(&a.apply_set(s)));
            }
        }
    }
}
