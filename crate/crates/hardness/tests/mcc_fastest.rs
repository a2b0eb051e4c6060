use std::collections::BTreeSet;

use tgr_core::{fastest_matrix, metric_matrix, DistanceMatrix, Finite, Metric, StaticGraph, Strictness};
use tgr_hardness::{
    gen_mcc_instance, lift_fastest_to_periodic, periodic_witness, reduce_mcc_to_fastest, witness_fastest,
    FastestLayout, MccInstance,
};

fn two_singletons() -> MccInstance {
    let mut g = StaticGraph::new(2);
    g.add_edge(0, 1).unwrap();
    MccInstance::new(g, 2, vec![0, 1]).unwrap()
}

/// Vertices of class `a` that share a neighbour in class `b` must have the
/// same neighbourhood in class `b`, and vice versa.
fn bicliques_by_neighbourhoods(inst: &MccInstance) -> bool {
    let nb = |u: usize, b: usize| -> BTreeSet<usize> {
        inst.graph.neighbors(u).iter().copied().filter(|&w| inst.class[w] == b).collect()
    };
    for a in 0..inst.k {
        for b in 0..inst.k {
            if a == b {
                continue;
            }
            let members = inst.members(a);
            for &u in &members {
                for &w in &members {
                    let (nu, nw) = (nb(u, b), nb(w, b));
                    if !nu.is_disjoint(&nw) && nu != nw {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn smallest_example() {
    let inst = two_singletons();
    let d = reduce_mcc_to_fastest(&inst).unwrap();
    let l = FastestLayout { k: 2, nv: 2 };
    assert_eq!(d.n(), 17);
    assert_eq!(d.get(FastestLayout::S, FastestLayout::T), Finite(6));
    assert_eq!(d.get(FastestLayout::T, FastestLayout::S), Finite(13));
    assert_eq!(d.get(l.v(0), l.v(1)), Finite(2));
    let values: BTreeSet<u64> = d.off_diagonal().map(|(_, _, e)| e.finite().unwrap()).collect();
    assert!(values.is_subset(&[1, 2, 6, 7, 13].into()));

    let g = witness_fastest(&inst, &[1, 0]).unwrap();
    assert_eq!(g.max_labels_per_edge(), 1);
    assert_eq!(fastest_matrix(&g, Strictness::Strict), d);

    let (same, period) = lift_fastest_to_periodic(&d).unwrap();
    assert_eq!(same, d);
    assert_eq!(period, 7515);
    let p = periodic_witness(&g, period).unwrap();
    assert_eq!(metric_matrix(&p, Metric::Fastest, Strictness::Strict, None), d);
}

#[test]
fn generator_reproduces_the_smallest_example() {
    let inst = gen_mcc_instance(2, 1, true, 0).unwrap();
    assert_eq!(inst.graph.edge_count(), 1);
    assert_eq!(reduce_mcc_to_fastest(&inst).unwrap(), reduce_mcc_to_fastest(&two_singletons()).unwrap());
}

#[test]
fn non_edges_get_the_long_entry() {
    let inst = gen_mcc_instance(3, 3, false, 4).unwrap();
    let d = reduce_mcc_to_fastest(&inst).unwrap();
    let l = FastestLayout { k: 3, nv: 9 };
    for u in 0..9 {
        for v in 0..9 {
            if u != v {
                let want = if inst.graph.has_edge(u, v) { 2 } else { 9 };
                assert_eq!(d.get(l.v(u), l.v(v)), Finite(want));
            }
        }
    }
}

#[test]
fn planted_instances_verify() {
    for seed in 0..20 {
        let k = 2 + seed as usize % 3;
        let size = 1 + seed as usize % 4;
        let inst = gen_mcc_instance(k, size, true, seed).unwrap();
        let clique = inst.planted.clone().unwrap();
        assert_eq!(inst.check_clique(&clique).unwrap(), clique);
        let d = reduce_mcc_to_fastest(&inst).unwrap();
        let g = witness_fastest(&inst, &clique).unwrap();
        assert_eq!(g.max_labels_per_edge(), 1);
        assert_eq!(fastest_matrix(&g, Strictness::Strict), d);
        assert_eq!(d.get(FastestLayout::S, FastestLayout::T), Finite(2 * k as u64 + 2));
        assert_eq!(d.get(FastestLayout::T, FastestLayout::S), Finite(4 * k as u64 + 5));
    }
}

#[test]
fn witness_uses_only_construction_edges() {
    let inst = gen_mcc_instance(3, 3, true, 9).unwrap();
    let d = reduce_mcc_to_fastest(&inst).unwrap();
    let g = witness_fastest(&inst, inst.planted.as_ref().unwrap()).unwrap();
    let ones: BTreeSet<(usize, usize)> =
        d.off_diagonal().filter(|&(u, v, e)| u < v && e == Finite(1)).map(|(u, v, _)| (u, v)).collect();
    let used: BTreeSet<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    assert_eq!(used, ones);
}

#[test]
fn biclique_checker_agrees_with_neighbourhood_test() {
    for seed in 0..100 {
        let inst = gen_mcc_instance(2 + seed as usize % 3, 1 + seed as usize % 5, seed % 2 == 0, seed).unwrap();
        assert!(inst.check_bicliques().is_ok());
        assert!(bicliques_by_neighbourhoods(&inst));
    }
    // A path a1 - b1 - a2 - b2 between two classes is not a biclique union.
    let mut g = StaticGraph::new(4);
    for (u, v) in [(0, 2), (2, 1), (1, 3)] {
        g.add_edge(u, v).unwrap();
    }
    let inst = MccInstance::new(g, 2, vec![0, 0, 1, 1]).unwrap();
    assert!(!bicliques_by_neighbourhoods(&inst));
    let err = inst.check_bicliques().unwrap_err().to_string();
    assert!(err.contains("classes 1 and 2"), "{err}");
    assert!(reduce_mcc_to_fastest(&inst).is_err());
}

#[test]
fn bad_cliques_are_refused() {
    let inst = gen_mcc_instance(3, 2, true, 5).unwrap();
    let clique = inst.planted.clone().unwrap();
    assert!(witness_fastest(&inst, &clique[..2]).is_err());
    let same_class = [clique[0], clique[0] ^ 1, clique[2]];
    assert!(witness_fastest(&inst, &same_class).unwrap_err().to_string().contains("both in class"));
    let mut g = StaticGraph::new(3);
    g.add_edge(0, 1).unwrap();
    let inst = MccInstance::new(g, 3, vec![0, 1, 2]).unwrap();
    let err = witness_fastest(&inst, &[0, 1, 2]).unwrap_err().to_string();
    assert!(err.contains("not adjacent"), "{err}");
}

#[test]
fn periodic_lift_formula() {
    let ones = DistanceMatrix::from_options(&[vec![Some(0), Some(1)], vec![Some(1), Some(0)]]).unwrap();
    assert_eq!(lift_fastest_to_periodic(&ones).unwrap().1, 9);
    let inst = gen_mcc_instance(3, 2, false, 1).unwrap();
    let d = reduce_mcc_to_fastest(&inst).unwrap();
    let (_, period) = lift_fastest_to_periodic(&d).unwrap();
    let n = d.n() as u64;
    assert!(period > n * n * d.max_finite().unwrap());
    assert!(lift_fastest_to_periodic(&DistanceMatrix::unreachable(3)).is_err());
}
