//! Tuned and baseline variants on graphs beyond the brute-force oracles' reach.

use proptest::prelude::*;
use tunedfs::bcc::{articulation_points, bcc_baseline, bcc_tuned};
use tunedfs::corpus::{check_scc_all, scc_trial, sweep, verify_bcc, verify_scc, Execution};
use tunedfs::dfs::EngineKind;
use tunedfs::graph::{
    random_digraph, random_undirected, EdgeList, StaticDigraph, StaticUndirectedGraph,
};
use tunedfs::scc::{
    find_order_violation, partitions_equal, scc_cmg_baseline, scc_cmg_tuned, scc_kosaraju_sharir,
    scc_tarjan_baseline, scc_tarjan_tuned, Numbering,
};

#[test]
fn scc_variants_match_baseline_arrays() {
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 37) % 64;
        let el = random_digraph(n, (seed as usize * 11) % (3 * n + 1), seed).unwrap();
        let g = StaticDigraph::from_edge_list(&el).unwrap();
        let tarjan = scc_tarjan_baseline(&g, EngineKind::Iterative);
        let cmg = scc_cmg_baseline(&g, EngineKind::Iterative);
        for engine in EngineKind::ALL {
            assert_eq!(scc_tarjan_tuned(&g, engine), tarjan, "seed {seed}");
            assert_eq!(scc_cmg_tuned(&g, engine), cmg, "seed {seed}");
        }
        assert_eq!(cmg, tarjan, "seed {seed}");
    }
}

#[test]
fn bcc_tuned_matches_baseline_arrays() {
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 13) % 32;
        let m = (seed as usize * 29) % 97;
        let g =
            StaticUndirectedGraph::from_edge_list(&random_undirected(n, m, seed).unwrap()).unwrap();
        let base = bcc_baseline(&g, EngineKind::Iterative);
        for engine in EngineKind::ALL {
            let tuned = bcc_tuned(&g, engine);
            assert_eq!(tuned, base, "seed {seed} engine {engine}");
            assert_eq!(
                articulation_points(&g, &tuned),
                articulation_points(&g, &base)
            );
        }
    }
}

#[test]
fn mid_sized_graphs_agree_across_algorithms() {
    for (n, m) in [(5_000, 5_000), (5_000, 20_000), (20_000, 200_000)] {
        let g = StaticDigraph::from_edge_list(&random_digraph(n, m, n as u64 + m as u64).unwrap())
            .unwrap();
        let truth = scc_tarjan_baseline(&g, EngineKind::Iterative);
        let ks = scc_kosaraju_sharir(&g);
        assert!(partitions_equal(&ks, &truth).unwrap());
        assert_eq!(
            find_order_violation(&g, &ks, &truth, Numbering::Topological),
            None
        );
        let cmg = scc_cmg_tuned(&g, EngineKind::Iterative);
        assert_eq!(cmg, truth);
        assert_eq!(
            find_order_violation(&g, &cmg, &truth, Numbering::ReverseTopological),
            None
        );
    }
}

#[test]
fn sequential_and_parallel_sweeps_agree() {
    for exec in [Execution::Sequential, Execution::Parallel] {
        assert_eq!(verify_scc(300, 48, 5, exec), None);
        assert_eq!(verify_bcc(300, 10, 5, exec), None);
    }
    // a check that rejects some trials must report the same first failure
    let reject_big = |el: &EdgeList| {
        if el.n > 40 {
            Err("too big".to_string())
        } else {
            check_scc_all(el)
        }
    };
    let gen = |i| scc_trial(2, 64, i);
    let seq = sweep(500, Execution::Sequential, gen, reject_big);
    assert!(seq.is_some());
    assert_eq!(sweep(500, Execution::Parallel, gen, reject_big), seq);
}

fn edge_list() -> impl Strategy<Value = EdgeList> {
    (1usize..80).prop_flat_map(|n| {
        let node = 0..n as u32;
        proptest::collection::vec((node.clone(), node), 0..4 * n)
            .prop_map(move |edges| EdgeList::new(n, edges))
    })
}

proptest! {
    #[test]
    fn single_pass_labels_follow_edges_backwards(el in edge_list()) {
        let g = StaticDigraph::from_edge_list(&el).unwrap();
        let lab = scc_cmg_tuned(&g, EngineKind::Iterative);
        prop_assert!(lab.is_well_formed());
        prop_assert_eq!(find_order_violation(&g, &lab, &scc_kosaraju_sharir(&g), Numbering::ReverseTopological), None);
    }

    #[test]
    fn reversal_preserves_components(el in edge_list()) {
        let g = StaticDigraph::from_edge_list(&el).unwrap();
        let a = scc_tarjan_tuned(&g, EngineKind::Iterative);
        let b = scc_tarjan_tuned(&g.reverse(), EngineKind::Iterative);
        prop_assert!(partitions_equal(&a, &b).unwrap());
    }

    #[test]
    fn bcc_labels_are_well_formed(el in edge_list()) {
        let g = StaticUndirectedGraph::from_edge_list(&el).unwrap();
        let lab = bcc_tuned(&g, EngineKind::Iterative);
        prop_assert!(lab.is_well_formed());
        prop_assert_eq!(lab.edge_comp.len(), el.m());
        prop_assert_eq!(lab, bcc_baseline(&g, EngineKind::Recursive));
    }
}
