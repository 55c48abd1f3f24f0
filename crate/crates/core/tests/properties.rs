mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zf_core::forcing::{all_reversals, enumerate_min_zfs, reverse_trace, trace};
use zf_core::graph::{
    cartesian_product, connected_components, contains_induced_c3_or_c4, disjoint_union,
    max_clique_size, shape_predicates,
};
use zf_core::reconfig::build_zfg;
use zf_core::{closure, families, is_isomorphic, is_zero_forcing_set, Graph, Limits, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_sets(max_n: usize) -> impl Strategy<Value = (Graph, u64, u64)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let full = if g.order() == 0 { 0 } else { u64::MAX >> (64 - g.order()) };
        (Just(g), any::<u64>().prop_map(move |m| m & full), any::<u64>().prop_map(move |m| m & full))
    })
}

fn set(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::from_mask(g.order(), mask)
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.order(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_is_monotone_and_idempotent((g, a, b) in graph_and_sets(10)) {
        let small = set(&g, a & b);
        let large = set(&g, a);
        let cs = closure(&g, &small);
        let cl = closure(&g, &large);
        prop_assert!(cs.iter().all(|v| cl.contains(v)));
        prop_assert_eq!(closure(&g, &cl), cl.clone());
        prop_assert!(large.iter().all(|v| cl.contains(v)));
    }

    #[test]
    fn closure_matches_synchronous_rounds((g, a, _b) in graph_and_sets(10)) {
        let s = set(&g, a);
        let oracle = common::closure_rounds(&g, s.members());
        let got = closure(&g, &s);
        for (v, &blue) in oracle.iter().enumerate() {
            prop_assert_eq!(got.contains(v), blue);
        }
    }

    #[test]
    fn traces_are_valid_and_reverse((g, a, _b) in graph_and_sets(9)) {
        let s = set(&g, a);
        let t = trace(&g, &s);
        prop_assert!(t.check_against(&g).is_ok());
        prop_assert_eq!(&t.final_set, &closure(&g, &s));
        let chained: usize = t.chains.iter().map(Vec::len).sum();
        prop_assert_eq!(chained, t.final_set.len());
        if t.is_complete() {
            prop_assert_eq!(t.reversal.len(), s.len());
            let r = reverse_trace(&t).unwrap();
            prop_assert!(r.check_against(&g).is_ok());
            prop_assert_eq!(&r.reversal, &s);
            prop_assert!(is_zero_forcing_set(&g, &t.reversal));
            prop_assert!(all_reversals(&g, &s).unwrap().contains(&t.reversal));
        } else {
            prop_assert!(reverse_trace(&t).is_err());
        }
    }

    #[test]
    fn isomorphism_agrees_with_permutation_oracle(g in graph_strategy(7), h in graph_strategy(7)) {
        prop_assert_eq!(is_isomorphic(&g, &h).unwrap(), common::isomorphic_oracle(&g, &h));
    }

    #[test]
    fn isomorphism_is_reflexive_symmetric_and_relabel_invariant(
        g in graph_strategy(12),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        prop_assert!(is_isomorphic(&g, &g).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert!(is_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn product_edge_count(g in graph_strategy(6), h in graph_strategy(6)) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.size(), g.size() * h.order() + g.order() * h.size());
    }

    #[test]
    fn components_partition_into_connected_parts(g in graph_strategy(12)) {
        let comps = connected_components(&g);
        let mut seen = vec![false; g.order()];
        for c in &comps {
            prop_assert!(g.induced_subgraph(c.members()).is_connected());
            for v in c.iter() {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        let leasts: Vec<usize> = comps.iter().map(|c| c.members()[0]).collect();
        prop_assert!(leasts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn clique_and_c3c4_match_brute_force(g in graph_strategy(10)) {
        prop_assert_eq!(max_clique_size(&g, &Limits::default()).unwrap(), common::clique_oracle(&g));
        prop_assert_eq!(contains_induced_c3_or_c4(&g), common::induced_c3_c4_oracle(&g));
    }

    #[test]
    fn enumeration_matches_subset_oracle(g in graph_strategy(9)) {
        let cat = enumerate_min_zfs(&g).unwrap();
        let (z, sets) = common::min_zfs_oracle(&g);
        prop_assert_eq!(cat.z, z);
        let got: Vec<Vec<usize>> = cat.sets.iter().map(|s| s.members().to_vec()).collect();
        prop_assert_eq!(got, sets);
    }

    #[test]
    fn union_catalog_is_product_of_catalogs(g in graph_strategy(5), h in graph_strategy(5)) {
        let cg = enumerate_min_zfs(&g).unwrap();
        let ch = enumerate_min_zfs(&h).unwrap();
        let cu = enumerate_min_zfs(&disjoint_union(&g, &h)).unwrap();
        prop_assert_eq!(cu.z, cg.z + ch.z);
        let mut joined: Vec<VertexSet> = Vec::new();
        for x in &cg.sets {
            for y in &ch.sets {
                let m = x.iter().chain(y.iter().map(|v| v + g.order()));
                joined.push(VertexSet::new(g.order() + h.order(), m).unwrap());
            }
        }
        joined.sort();
        prop_assert_eq!(joined, cu.sets);
    }

    #[test]
    fn zero_forcing_graph_invariants(g in graph_strategy(8)) {
        let r = build_zfg(&g).unwrap();
        prop_assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(r.nodes.iter().all(|s| s.len() == r.z));
        for i in 0..r.nodes.len() {
            prop_assert!(!r.graph.has_edge(i, i));
            for j in 0..r.nodes.len() {
                let want = i != j && r.nodes[i].symmetric_difference_len(&r.nodes[j]) == 2;
                prop_assert_eq!(r.graph.has_edge(i, j), want);
                prop_assert_eq!(r.graph.has_edge(i, j), r.graph.has_edge(j, i));
            }
        }
        prop_assert!(g.min_degree() <= r.z || g.order() == 0);
    }

    #[test]
    fn neighbor_trades_are_adjacent(g in graph_strategy(8)) {
        let r = build_zfg(&g).unwrap();
        for (i, b) in r.nodes.iter().enumerate() {
            for traded in zf_core::neighbor_trade(&g, b).unwrap() {
                let j = r.node_index(&traded);
                prop_assert!(j.is_some(), "{} is not minimum", traded);
                prop_assert!(r.graph.has_edge(i, j.unwrap()));
            }
        }
    }
}

#[test]
fn closure_is_schedule_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..200 {
        let n = 1 + round % 10;
        let g = common::random_graph(n, 0.35, &mut rng);
        let start: Vec<usize> = (0..n).filter(|_| rand::Rng::gen_bool(&mut rng, 0.3)).collect();
        let want = closure(&g, &VertexSet::new(n, start.iter().copied()).unwrap());
        for _ in 0..5 {
            let got = common::closure_random_schedule(&g, &start, &mut rng);
            for (v, &blue) in got.iter().enumerate() {
                assert_eq!(blue, want.contains(v), "graph {g:?} start {start:?}");
            }
        }
    }
}

#[test]
fn shape_predicates_agree_with_families() {
    let limits = Limits::default();
    for n in 1..=10 {
        let p = families::path(n).unwrap();
        let k = families::complete(n).unwrap();
        assert!(shape_predicates(&p, &limits).unwrap().is_path);
        assert!(shape_predicates(&k, &limits).unwrap().is_complete);
        if n >= 3 {
            let c = families::cycle(n).unwrap();
            let s = shape_predicates(&c, &limits).unwrap();
            assert!(s.is_cycle && !s.is_path);
        }
        if n >= 2 {
            let s = families::star(n).unwrap();
            assert!(shape_predicates(&s, &limits).unwrap().is_star);
        }
    }
    for d in 0..=4 {
        let q = zf_core::graph::hypercube(d);
        assert_eq!(shape_predicates(&q, &limits).unwrap().hypercube_dimension, Some(d));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=8);
        let g = common::random_graph(n, 0.4, &mut rng);
        let s = shape_predicates(&g, &limits).unwrap();
        assert_eq!(s.is_path, is_isomorphic(&g, &families::path(n).unwrap()).unwrap());
        assert_eq!(s.is_complete, is_isomorphic(&g, &families::complete(n).unwrap()).unwrap());
        if n >= 3 {
            assert_eq!(s.is_cycle, is_isomorphic(&g, &families::cycle(n).unwrap()).unwrap());
        }
        if n >= 2 {
            assert_eq!(s.is_star, is_isomorphic(&g, &families::star(n).unwrap()).unwrap());
        }
    }
}
