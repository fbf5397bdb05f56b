mod common;

use common::{validate_dot, Dense};
use glover::io::{from_json, to_dot, to_json};
use glover::{
    build_graph, build_layering, gen_random_oriented, gen_tournament, run_dnsa, seymour_oracle, ArcClass,
    HaltReason, NodeId, OrientedGraph,
};
use proptest::prelude::*;

/// Arbitrary oriented graph: each unordered pair absent or oriented either way.
fn oriented_graph(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(0u8..3, pairs).prop_map(move |choice| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    match choice[k] {
                        1 => arcs.push((u, v)),
                        2 => arcs.push((v, u)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            build_graph(n, &arcs).unwrap()
        })
    })
}

fn rooted(max_n: usize) -> impl Strategy<Value = (OrientedGraph, NodeId)> {
    oriented_graph(max_n).prop_flat_map(|g| {
        let n = g.node_count() as u32;
        (Just(g), (0..n).prop_map(NodeId))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn second_neighborhood_matches_bfs(g in oriented_graph(25)) {
        let d = Dense::new(&g);
        for v in g.nodes() {
            let lib: Vec<usize> = g.second_out_neighbors(v).unwrap().iter().map(NodeId::index).collect();
            prop_assert_eq!(lib, d.second(v.index()));
        }
    }

    #[test]
    fn square_degrees_match_bfs(g in oriented_graph(25)) {
        let d = Dense::new(&g);
        let sq = g.square_graph();
        let lib: Vec<usize> = g.nodes().map(|v| sq.out_degree(v)).collect();
        prop_assert_eq!(lib, d.square_out_degrees());
        let seymour: Vec<usize> = seymour_oracle(&g).seymour_set.iter().map(NodeId::index).collect();
        prop_assert_eq!(seymour, d.seymour_set());
    }

    #[test]
    fn layering_matches_bfs((g, root) in rooted(30)) {
        let l = build_layering(&g, root).unwrap();
        prop_assert_eq!(l.validate(), Ok(()));
        let dist = Dense::new(&g).bfs(root.index());
        for v in g.nodes() {
            prop_assert_eq!(l.dist(v), dist[v.index()]);
        }
        for (u, v) in g.arcs() {
            // No arc jumps forward more than one layer.
            if let (Some(du), Some(dv)) = (dist[u.index()], dist[v.index()]) {
                prop_assert!(dv <= du + 1);
            }
            let class = l.arc_class(u, v).unwrap();
            prop_assert_eq!(class.to_string(), common::class_of(&dist, u.index(), v.index()));
        }
    }

    #[test]
    fn partition_is_total_and_disjoint((g, root) in rooted(30)) {
        let l = build_layering(&g, root).unwrap();
        for (u, v) in l.parent_child_arcs() {
            let p = l.neighbor_partition(u, v).unwrap();
            let out = g.out_neighbors(v).unwrap();
            prop_assert!(p.interior.is_disjoint(&p.exterior));
            prop_assert!(p.interior.is_disjoint(&p.back));
            prop_assert!(p.exterior.is_disjoint(&p.back));
            prop_assert_eq!(p.interior.union(&p.exterior).union(&p.back), out);
        }
        for (u, v) in g.arcs() {
            if l.arc_class(u, v).unwrap() != ArcClass::Forward {
                prop_assert!(l.neighbor_partition(u, v).is_err());
            }
        }
    }

    #[test]
    fn dnsa_is_deterministic_and_never_halts_on_size(g in oriented_graph(30)) {
        let a = run_dnsa(&g, None).unwrap();
        prop_assert_eq!(&a, &run_dnsa(&g, None).unwrap());
        prop_assert_ne!(a.halt_reason, HaltReason::Size);
        for root in g.nodes() {
            let r = run_dnsa(&g, Some(root)).unwrap();
            prop_assert_ne!(r.halt_reason, HaltReason::Size);
            prop_assert_eq!(r.root, root);
            if let Some(m) = r.marked_node {
                prop_assert_eq!(r.path_from_root.first(), Some(&root));
                prop_assert_eq!(r.path_from_root.last(), Some(&m));
            }
        }
    }

    #[test]
    fn json_round_trip((g, root) in rooted(30)) {
        let text = to_json(&g, None);
        let parsed = from_json(&text).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(to_json(&parsed.graph, None), text);
        let l = build_layering(&g, root).unwrap();
        let labelled = to_json(&g, Some(&l));
        let parsed = from_json(&labelled).unwrap();
        prop_assert_eq!(parsed.declared_labels.len(), g.node_count());
        prop_assert_eq!(to_json(&parsed.graph, Some(&l)), labelled);
    }

    #[test]
    fn dot_is_well_formed((g, root) in rooted(20)) {
        prop_assert_eq!(validate_dot(&to_dot(&g, None)), Ok(()));
        let l = build_layering(&g, root).unwrap();
        let dot = to_dot(&g, Some(&l));
        prop_assert_eq!(validate_dot(&dot), Ok(()));
        prop_assert_eq!(dot.matches("subgraph cluster_").count(), l.layer_count());
        prop_assert_eq!(dot.matches("->").count(), g.arc_count());
    }

    #[test]
    fn generators_are_seeded(n in 0usize..40, p in 0.0f64..=1.0, seed: u64) {
        let g = gen_random_oriented(n, p, seed);
        prop_assert_eq!(&g, &gen_random_oriented(n, p, seed));
        prop_assert!(g.is_antisymmetric());
        let t = gen_tournament(n, seed);
        prop_assert_eq!(t.arc_count(), n * n.saturating_sub(1) / 2);
    }
}

#[test]
fn dot_validator_rejects_garbage() {
    assert!(validate_dot("digraph G {\n}\n").is_ok());
    assert!(validate_dot("digraph G { 0 -> }").is_err());
    assert!(validate_dot("digraph G { 0 [style=] }").is_err());
    assert!(validate_dot("graph G { }").is_err());
    assert!(validate_dot("digraph G { subgraph cluster_R0 { 0; }").is_err());
}
