//! Property-based invariants over randomly generated semi-graphs.

use proptest::prelude::*;
use std::collections::BTreeSet;

use snarklab_core::factors;
use snarklab_core::gadgets;
use snarklab_core::invariants;
use snarklab_core::measure::BudgetMeter;
use snarklab_core::semigraph::{Element, JoinTarget, SemiGraph, Vertex};
use snarklab_core::{graph6, sgf};

/// Random semi-graph: up to `max_n` vertices, arbitrary simple edges, at
/// most one semi-edge per vertex, maximum degree capped at 3.
fn semi_graph(max_n: usize) -> impl Strategy<Value = SemiGraph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let edge_picks = proptest::collection::vec(any::<bool>(), pairs.len());
            let semi_picks = proptest::collection::vec(any::<bool>(), n);
            (Just(n), Just(pairs), edge_picks, semi_picks)
        })
        .prop_map(|(n, pairs, edge_picks, semi_picks)| {
            let mut degree = vec![0usize; n];
            let mut builder = SemiGraph::builder(n);
            for ((u, v), pick) in pairs.into_iter().zip(edge_picks) {
                if pick && degree[u] < 3 && degree[v] < 3 {
                    builder.edge(u, v).unwrap();
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
            for (v, pick) in semi_picks.into_iter().enumerate() {
                if pick && degree[v] < 3 {
                    builder.semi_edge(v).unwrap();
                    degree[v] += 1;
                }
            }
            builder.build().unwrap()
        })
}

proptest! {
    #[test]
    fn sgf_round_trip_is_identity(g in semi_graph(12)) {
        let text = sgf::emit(&g);
        let back = sgf::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(sgf::emit(&back), text);
    }

    #[test]
    fn graph6_round_trip_on_plain_graphs(g in semi_graph(12)) {
        // strip semi-edges: graph6 covers plain graphs only
        let mut builder = SemiGraph::builder(g.n());
        for &(u, v) in g.edges() {
            builder.edge(u, v).unwrap();
        }
        let plain = builder.build().unwrap();
        let s = graph6::emit(&plain).unwrap();
        let back = graph6::parse(&s).unwrap();
        prop_assert_eq!(back.edges(), plain.edges());
        prop_assert_eq!(back.n(), plain.n());
    }

    #[test]
    fn semi_girth_never_exceeds_girth(g in semi_graph(12)) {
        prop_assert!(invariants::semi_girth(&g) <= invariants::girth(&g));
        if g.is_graph() {
            prop_assert_eq!(invariants::semi_girth(&g), invariants::girth(&g));
        }
    }

    #[test]
    fn join_bookkeeping(g in semi_graph(10)) {
        let semis = g.semi().to_vec();
        prop_assume!(semis.len() >= 2);
        let (a, b) = (semis[0], semis[1]);
        prop_assume!(!g.has_edge(a, b));
        let degsum = |g: &SemiGraph| (0..g.n()).map(|v| g.degree(v)).sum::<usize>();
        let joined = g.join(Element::semi(a), JoinTarget::SemiEdge(b)).unwrap();
        prop_assert_eq!(joined.semi_count(), g.semi_count() - 2);
        prop_assert_eq!(degsum(&joined), degsum(&g));
        prop_assert!(joined.has_edge(a, b));
    }

    #[test]
    fn closure_output_has_no_semi_edges(g in semi_graph(10)) {
        // pair the semi-edges greedily; skip pairings that would double an edge
        let semis = g.semi().to_vec();
        let mut pairing = Vec::new();
        let mut used = BTreeSet::new();
        for (i, &a) in semis.iter().enumerate() {
            if used.contains(&a) {
                continue;
            }
            for &b in &semis[i + 1..] {
                if !used.contains(&b) && !g.has_edge(a, b) {
                    pairing.push((a, b));
                    used.insert(a);
                    used.insert(b);
                    break;
                }
            }
        }
        let leftovers = semis.iter().filter(|s| !used.contains(s)).count();
        prop_assume!(matches!(leftovers, 0 | 1 | 3));
        if let Ok(closed) = g.closure_to_graph(&pairing) {
            prop_assert!(closed.is_graph());
            let degsum: usize = (0..closed.n()).map(|v| closed.degree(v)).sum();
            prop_assert_eq!(degsum, 2 * closed.edge_count());
        }
    }

    #[test]
    fn every_enumerated_one_factor_is_one_regular(g in semi_graph(10)) {
        let mut meter = BudgetMeter::unlimited();
        factors::enumerate_one_factors(&g, &mut meter, |f| {
            f.validate(&g).unwrap();
            true
        }).unwrap();
    }

    #[test]
    fn cyclic_cut_witnesses_are_monotone_in_k(g in semi_graph(10), k in 2usize..=3) {
        if let Some(cut) = invariants::has_cyclic_cut_below(&g, k) {
            prop_assert!(cut.size < k);
            let bigger = invariants::has_cyclic_cut_below(&g, k + 1);
            prop_assert!(bigger.is_some());
            prop_assert!(bigger.unwrap().size <= cut.size);
        }
    }

    #[test]
    fn factor_triple_multiplicities_partition(i in 0usize..6, j in 0usize..6, k in 0usize..6) {
        let p = gadgets::petersen();
        let ms = factors::one_factors(&p).unwrap();
        let t = snarklab_core::defect::FactorTriple::new(
            ms[i].clone(), ms[j].clone(), ms[k].clone(),
        );
        let cd = snarklab_core::defect::classify_triple(&p, &t).unwrap();
        let total = cd.e0.len() + cd.e1.len() + cd.e2.len() + cd.e3.len();
        prop_assert_eq!(total, p.element_count());
        let weighted = cd.e1.len() + 2 * cd.e2.len() + 3 * cd.e3.len();
        let factor_sizes: usize = t.factors.iter().map(|m| m.elements.len()).sum();
        prop_assert_eq!(weighted, factor_sizes);
        prop_assert_eq!(cd.core.len(), cd.e0.len() + cd.e2.len() + cd.e3.len());
    }
}

proptest! {
    // endpoint-pair sets are isomorphism invariants: spot-check on random
    // relabellings of X
    #[test]
    fn hamiltonian_pairs_commute_with_relabelling(seed in any::<u64>()) {
        use rand::prelude::*;
        let x = gadgets::gadget_x().graph;
        let mut perm: Vec<Vertex> = (0..x.n()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let mut builder = SemiGraph::builder(x.n());
        for &(u, v) in x.edges() {
            builder.edge(perm[u], perm[v]).unwrap();
        }
        for &s in x.semi() {
            builder.semi_edge(perm[s]).unwrap();
        }
        let relabelled = builder.build().unwrap();
        let original = invariants::hamiltonian_path_endpoint_pairs(&x);
        let mapped: BTreeSet<(Vertex, Vertex)> = original
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        prop_assert_eq!(
            invariants::hamiltonian_path_endpoint_pairs(&relabelled),
            mapped
        );
    }
}
