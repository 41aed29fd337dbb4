use coadjoint_core::graph::{emit_graph6, parse_graph6};
use coadjoint_core::oracles::{coadjoint_via_z, count_colorings};
use coadjoint_core::tutte::{specialize_chromatic, tutte_dc, tutte_subset};
use coadjoint_core::{exp_type_check, family_poly, FamilyKind, IntPoly, MultiGraph, SimpleGraph};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| *p).collect();
            SimpleGraph::from_edges(n, &edges).expect("valid edges")
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

fn multigraph() -> impl Strategy<Value = MultiGraph> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=9).prop_map(move |edges| {
            let mut m = MultiGraph::new(n).expect("small");
            for (a, b) in edges {
                m.add_edge(a, b).expect("in range");
            }
            m
        })
    })
}

fn disjoint_union(a: &SimpleGraph, b: &SimpleGraph) -> SimpleGraph {
    let shift = a.n();
    let edges: Vec<(usize, usize)> = a
        .edges()
        .iter()
        .map(|e| (e.u(), e.v()))
        .chain(b.edges().iter().map(|e| (e.u() + shift, e.v() + shift)))
        .collect();
    SimpleGraph::from_edges(a.n() + b.n(), &edges).expect("fits")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_everything((g, perm) in graph_with_perm(7)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(g.canonical_key().unwrap(), h.canonical_key().unwrap());
        for kind in FamilyKind::ALL {
            prop_assert_eq!(family_poly(&g, kind).unwrap(), family_poly(&h, kind).unwrap());
        }
    }

    #[test]
    fn disjoint_union_multiplies(a in graph(4), b in graph(4)) {
        let u = disjoint_union(&a, &b);
        for kind in FamilyKind::ALL {
            let prod = &family_poly(&a, kind).unwrap() * &family_poly(&b, kind).unwrap();
            prop_assert_eq!(family_poly(&u, kind).unwrap(), prod);
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn coadjoint_matches_partition_function(g in graph(7)) {
        prop_assert_eq!(family_poly(&g, FamilyKind::CoAdjoint).unwrap(), coadjoint_via_z(&g).unwrap());
    }

    #[test]
    fn polynomial_is_monic_of_degree_n(g in graph(8)) {
        for kind in FamilyKind::ALL {
            let p = family_poly(&g, kind).unwrap();
            prop_assert_eq!(p.degree(), Some(g.n()));
            prop_assert_eq!(p.coeff(g.n()), BigInt::from(1));
        }
    }

    #[test]
    fn chromatic_counts_colorings(g in graph(5), q in 0u64..=4) {
        let p = family_poly(&g, FamilyKind::Chromatic).unwrap();
        prop_assert_eq!(p.eval_int(&BigInt::from(q)), BigInt::from(count_colorings(&g, q).unwrap()));
        prop_assert_eq!(specialize_chromatic(&g).unwrap(), p);
    }

    #[test]
    fn tutte_routes_agree(m in multigraph()) {
        let t = tutte_dc(&m).unwrap();
        prop_assert_eq!(&t, &tutte_subset(&m).unwrap());
        let two = BigInt::from(2);
        let at_two = t.eval_y(&two).eval_int(&two);
        prop_assert_eq!(at_two, BigInt::from(2).pow(m.edge_count() as u32));
    }

    #[test]
    fn exponential_type_on_random_graphs(g in graph(6)) {
        for kind in FamilyKind::ALL {
            prop_assert!(exp_type_check(&g, kind).unwrap());
        }
    }

    #[test]
    fn reflect_negate_is_involution(g in graph(6)) {
        let p: IntPoly = family_poly(&g, FamilyKind::CoAdjoint).unwrap();
        prop_assert_eq!(p.reflect_negate().reflect_negate(), p);
    }
}
