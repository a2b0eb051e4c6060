use std::collections::BTreeSet;

use tgr_core::{foremost_matrix, verify_realization, Metric, Strictness};
use tgr_hardness::gen_lower_bound_family;
use tgr_realize::{realize_foremost, CompatSearch};

fn distinct(n: usize) -> usize {
    (n - 1) + (n - 1) * (n - 2) / 2
}

#[test]
fn distinct_entry_count() {
    for n in 3..=12 {
        let (g, d) = gen_lower_bound_family(n).unwrap();
        let values: BTreeSet<u64> = d.off_diagonal().map(|(_, _, e)| e.finite().unwrap()).collect();
        assert_eq!(values.len(), distinct(n), "n = {n}");
        assert_eq!(g.label_count(), distinct(n));
        assert_eq!(foremost_matrix(&g, Strictness::Strict), d);
    }
}

#[test]
fn every_realization_pays_for_each_distinct_entry() {
    for n in [2, 3, 5, 8, 12, 20] {
        let (_, d) = gen_lower_bound_family(n).unwrap();
        for search in [CompatSearch::Naive, CompatSearch::Indexed] {
            let out = realize_foremost(&d, search).unwrap();
            let g = out.graph().expect("family is realizable");
            assert!(verify_realization(g, &d, Metric::Foremost, Strictness::Strict).unwrap().ok());
            assert!(g.label_count() >= distinct(n), "n = {n}: {} labels", g.label_count());
        }
    }
}
