use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tgr_core::{metric_matrix, oracle_metric, random, EnumerationGuard, Metric, Strictness, TemporalGraph};

const METRICS: [Metric; 3] = [Metric::Foremost, Metric::Fastest, Metric::Shortest];
const MODES: [Strictness; 2] = [Strictness::Strict, Strictness::NonStrict];

fn graph_strategy() -> impl Strategy<Value = TemporalGraph> {
    (1usize..=6, 0usize..=20, 1u64..=8, any::<u64>()).prop_map(|(n, labels, max, seed)| {
        random::temporal_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, labels, max, None)
    })
}

fn periodic_strategy() -> impl Strategy<Value = TemporalGraph> {
    (2usize..=4, 0usize..=6, 1u64..=4, any::<u64>()).prop_map(|(n, labels, p, seed)| {
        random::temporal_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, labels, p, Some(p))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn scanning_matches_path_enumeration(g in graph_strategy()) {
        for metric in METRICS {
            for mode in MODES {
                let fast = metric_matrix(&g, metric, mode, None);
                let slow = oracle_metric(&g, metric, mode, EnumerationGuard::default()).unwrap();
                prop_assert_eq!(fast, slow, "{:?} {:?}", metric, mode);
            }
        }
    }

    #[test]
    fn periodic_scanning_matches_path_enumeration(g in periodic_strategy()) {
        for metric in METRICS {
            for mode in MODES {
                let fast = metric_matrix(&g, metric, mode, None);
                let slow = oracle_metric(&g, metric, mode, EnumerationGuard::default()).unwrap();
                prop_assert_eq!(fast, slow, "{:?} {:?}", metric, mode);
            }
        }
    }

    #[test]
    fn metric_relations(g in graph_strategy()) {
        let n = g.n();
        for mode in MODES {
            let fo = metric_matrix(&g, Metric::Foremost, mode, None);
            let fa = metric_matrix(&g, Metric::Fastest, mode, None);
            let sh = metric_matrix(&g, Metric::Shortest, mode, None);
            for u in 0..n {
                prop_assert_eq!(fo.get(u, u), tgr_core::Finite(0));
                for v in 0..n {
                    prop_assert_eq!(fo.get(u, v).is_finite(), fa.get(u, v).is_finite());
                    prop_assert_eq!(fo.get(u, v).is_finite(), sh.get(u, v).is_finite());
                    prop_assert!(fa.get(u, v) <= fo.get(u, v));
                    if let Some(h) = sh.get(u, v).finite() {
                        prop_assert!(h < n as u64);
                    }
                }
            }
        }
        let strict = metric_matrix(&g, Metric::Foremost, Strictness::Strict, None);
        let loose = metric_matrix(&g, Metric::Foremost, Strictness::NonStrict, None);
        for u in 0..n {
            for v in 0..n {
                prop_assert!(loose.get(u, v) <= strict.get(u, v));
            }
        }
    }

    #[test]
    fn adding_a_label_never_delays_arrival(g in graph_strategy(), u in 0usize..6, v in 0usize..6, t in 1u64..10) {
        prop_assume!(u != v && u < g.n() && v < g.n());
        let mut h = g.clone();
        h.add_label(u, v, t).unwrap();
        for mode in MODES {
            let before = metric_matrix(&g, Metric::Foremost, mode, None);
            let after = metric_matrix(&h, Metric::Foremost, mode, None);
            for x in 0..g.n() {
                for y in 0..g.n() {
                    prop_assert!(after.get(x, y) <= before.get(x, y));
                }
            }
        }
    }

    #[test]
    fn tg_format_round_trips(g in graph_strategy()) {
        let text = tgr_core::io::write_tg(&g);
        let back = tgr_core::io::parse_tg(&text, std::path::Path::new("x.tg")).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(tgr_core::io::write_tg(&back), text);
    }

    #[test]
    fn dm_format_round_trips(g in graph_strategy()) {
        let d = metric_matrix(&g, Metric::Foremost, Strictness::Strict, None);
        let text = tgr_core::io::write_dm(&d);
        prop_assert_eq!(tgr_core::io::parse_dm(&text, std::path::Path::new("x.dm")).unwrap(), d);
    }
}

#[test]
fn explicit_horizon_truncates() {
    let mut g = TemporalGraph::new(2);
    g.add_label(0, 1, 7).unwrap();
    let d = metric_matrix(&g, Metric::Foremost, Strictness::Strict, Some(6));
    assert_eq!(d.get(0, 1), tgr_core::Inf);
    let d = metric_matrix(&g, Metric::Foremost, Strictness::Strict, Some(7));
    assert_eq!(d.get(0, 1), tgr_core::Finite(7));
}
