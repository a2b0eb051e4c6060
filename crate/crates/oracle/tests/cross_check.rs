//! The pruned searches against plain enumeration of every labeling.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tgr_core::{
    oracle_metric, verify_ranged, verify_realization, Assignment, CnfFormula, Dist, DistanceMatrix, EnumerationGuard,
    Finite, Inf, Metric, Range, RangeMatrix, Strictness, TemporalGraph,
};
use tgr_oracle::{
    oracle_foremost_realizable, oracle_ranged, oracle_single_label_foremost, sat_solve_brute, SearchBudget, Verdict,
};

const STRICTNESS: [Strictness; 2] = [Strictness::Strict, Strictness::NonStrict];

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Foremost matrices (as raw entries) of every graph on `n` vertices whose
/// label sets are drawn from `choices`, computed by path enumeration.
fn reachable_matrices(n: usize, choices: &[Vec<u64>], strictness: Strictness) -> HashSet<Vec<u64>> {
    let pairs = pairs(n);
    let mut pick = vec![0usize; pairs.len()];
    let mut out = HashSet::new();
    loop {
        let mut g = TemporalGraph::new(n);
        for (&(u, v), &p) in pairs.iter().zip(&pick) {
            for &t in &choices[p] {
                g.add_label(u, v, t).unwrap();
            }
        }
        let d = oracle_metric(&g, Metric::Foremost, strictness, EnumerationGuard::default()).unwrap();
        out.insert(d.to_raw());
        let Some(i) = (0..pick.len()).rev().find(|&i| pick[i] + 1 < choices.len()) else { return out };
        pick[i] += 1;
        pick[i + 1..].iter_mut().for_each(|p| *p = 0);
    }
}

fn subsets(universe: &[u64]) -> Vec<Vec<u64>> {
    (0u32..1 << universe.len())
        .map(|m| universe.iter().enumerate().filter(|&(i, _)| m >> i & 1 == 1).map(|(_, &t)| t).collect())
        .collect()
}

fn at_most_one(universe: &[u64]) -> Vec<Vec<u64>> {
    std::iter::once(vec![]).chain(universe.iter().map(|&t| vec![t])).collect()
}

/// Every off-diagonal filling of an n×n matrix from `values`.
fn all_matrices(n: usize, values: &[Dist]) -> Vec<DistanceMatrix> {
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let total = values.len().pow(cells.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut d = DistanceMatrix::unreachable(n);
            for &(u, v) in cells.iter().rev() {
                d.set(u, v, values[code % values.len()]);
                code /= values.len();
            }
            d
        })
        .collect()
}

fn values(max: u64) -> Vec<Dist> {
    (1..=max).map(Finite).chain([Inf]).collect()
}

fn check_witness(v: Verdict<TemporalGraph>, d: &DistanceMatrix, strictness: Strictness, expect: bool) {
    match v {
        Verdict::Yes(g) => {
            assert!(expect, "oracle accepted an unrealizable matrix\n{d:?}");
            let rep = verify_realization(&g, d, Metric::Foremost, strictness).unwrap();
            assert!(rep.ok(), "{rep}");
        }
        Verdict::No => assert!(!expect, "oracle rejected a realizable matrix\n{d:?}"),
        Verdict::BudgetExceeded => panic!("budget exceeded on\n{d:?}"),
    }
}

#[test]
fn desk_examples() {
    let yes = DistanceMatrix::from_options(&[vec![Some(0), Some(1)], vec![Some(1), Some(0)]]).unwrap();
    let no = DistanceMatrix::from_options(&[vec![Some(0), Some(1)], vec![Some(2), Some(0)]]).unwrap();
    for s in STRICTNESS {
        assert!(oracle_foremost_realizable(&yes, s, SearchBudget::default()).unwrap().is_yes());
        assert_eq!(oracle_foremost_realizable(&no, s, SearchBudget::default()).unwrap(), Verdict::No);
    }
    assert!(oracle_single_label_foremost(&yes, SearchBudget::default()).unwrap().is_yes());
    assert_eq!(oracle_single_label_foremost(&no, SearchBudget::default()).unwrap(), Verdict::No);
}

#[test]
fn every_3x3_matrix_over_four_values() {
    // Any realization can drop the labels that are not entries of its matrix,
    // so graphs labeled from {1..4} reach every realizable matrix here.
    let universe = [1, 2, 3, 4];
    for s in STRICTNESS {
        let reach = reachable_matrices(3, &subsets(&universe), s);
        let mut yes = 0;
        for d in all_matrices(3, &values(4)) {
            let expect = reach.contains(&d.to_raw());
            yes += usize::from(expect);
            check_witness(oracle_foremost_realizable(&d, s, SearchBudget::default()).unwrap(), &d, s, expect);
        }
        assert!(yes > 50, "only {yes} realizable matrices");
    }
}

#[test]
fn single_label_on_every_3x3_and_random_4x4() {
    let universe = [1, 2, 3, 4];
    let reach3 = reachable_matrices(3, &at_most_one(&universe), Strictness::Strict);
    for d in all_matrices(3, &values(4)) {
        let expect = reach3.contains(&d.to_raw());
        check_witness(
            oracle_single_label_foremost(&d, SearchBudget::default()).unwrap(),
            &d,
            Strictness::Strict,
            expect,
        );
    }
    let reach4 = reachable_matrices(4, &at_most_one(&universe), Strictness::Strict);
    let known: Vec<&Vec<u64>> = {
        let mut v: Vec<_> = reach4.iter().collect();
        v.sort();
        v
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let vals = values(4);
    for i in 0..400 {
        // Half of the instances are realizable ones, some of them perturbed.
        let mut d = if i % 2 == 0 {
            let raw = known[rng.gen_range(0..known.len())];
            let rows: Vec<Vec<Dist>> = raw.chunks(4).map(|r| r.iter().map(|&x| Dist::from_raw(x)).collect()).collect();
            DistanceMatrix::from_rows(rows).unwrap()
        } else {
            let mut d = DistanceMatrix::unreachable(4);
            for (u, v) in pairs(4) {
                d.set(u, v, vals[rng.gen_range(0..vals.len())]);
                d.set(v, u, vals[rng.gen_range(0..vals.len())]);
            }
            d
        };
        if i % 4 == 2 {
            let u = rng.gen_range(0..4);
            let v = (u + rng.gen_range(1..4)) % 4;
            d.set(u, v, vals[rng.gen_range(0..vals.len())]);
        }
        let expect = reach4.contains(&d.to_raw());
        check_witness(
            oracle_single_label_foremost(&d, SearchBudget::default()).unwrap(),
            &d,
            Strictness::Strict,
            expect,
        );
        if expect {
            // One label per edge is a special case of the general search.
            assert!(oracle_foremost_realizable(&d, Strictness::Strict, SearchBudget::default()).unwrap().is_yes());
        }
    }
}

#[test]
fn ranged_against_direct_determination() {
    let reach = reachable_matrices(3, &subsets(&[1, 2, 3, 4]), Strictness::Strict);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cells: Vec<(usize, usize)> =
        (0..3).flat_map(|u| (0..3).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    for _ in 0..300 {
        let mut r = RangeMatrix::from_matrix(&DistanceMatrix::unreachable(3));
        for &(u, v) in &cells {
            let range = match rng.gen_range(0..6) {
                0 => Range::exact(Inf),
                1 | 2 => Range::exact(Finite(rng.gen_range(1..=4))),
                _ => {
                    let lo = rng.gen_range(1..=3);
                    Range::new(Finite(lo), Finite(rng.gen_range(lo + 1..=4))).unwrap()
                }
            };
            r.set(u, v, range);
        }
        let expect = all_matrices(3, &values(4)).iter().any(|d| r.admits(d) && reach.contains(&d.to_raw()));
        match oracle_ranged(&r, SearchBudget::default()).unwrap() {
            Verdict::Yes((g, d)) => {
                assert!(expect);
                assert!(r.admits(&d));
                assert!(verify_ranged(&g, &r).unwrap().ok());
            }
            Verdict::No => assert!(!expect, "{r:?}"),
            Verdict::BudgetExceeded => panic!("budget exceeded"),
        }
    }
}

#[test]
fn ranged_desk_examples() {
    let r = |a: (u64, u64), b: (u64, u64)| {
        let e = |(lo, hi): (u64, u64)| {
            if lo == hi {
                Range::exact(Finite(lo))
            } else {
                Range::new(Finite(lo), Finite(hi)).unwrap()
            }
        };
        RangeMatrix::from_rows(vec![vec![Range::exact(Finite(0)), e(a)], vec![e(b), Range::exact(Finite(0))]]).unwrap()
    };
    assert!(oracle_ranged(&r((1, 2), (1, 2)), SearchBudget::default()).unwrap().is_yes());
    assert_eq!(oracle_ranged(&r((2, 3), (1, 1)), SearchBudget::default()).unwrap(), Verdict::No);
    // Singleton ranges reduce to the plain search.
    for d in all_matrices(3, &values(3)).iter().step_by(7) {
        let plain = oracle_foremost_realizable(d, Strictness::Strict, SearchBudget::default()).unwrap().is_yes();
        assert_eq!(oracle_ranged(&RangeMatrix::from_matrix(d), SearchBudget::default()).unwrap().is_yes(), plain);
    }
}

#[test]
fn budget_is_a_third_verdict() {
    let d = all_matrices(3, &values(3)).swap_remove(0);
    let tiny = SearchBudget { max_labelings: 1, ..SearchBudget::default() };
    assert_eq!(oracle_foremost_realizable(&d, Strictness::Strict, tiny).unwrap(), Verdict::BudgetExceeded);
    let small = SearchBudget { max_vertices: 2, ..SearchBudget::default() };
    assert_eq!(oracle_single_label_foremost(&d, small).unwrap(), Verdict::BudgetExceeded);
}

#[test]
fn sat_against_descending_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(1..=5 * n);
        let clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                (0..3)
                    .map(|_| {
                        let x = rng.gen_range(1..=n as i32);
                        if rng.gen_bool(0.5) {
                            x
                        } else {
                            -x
                        }
                    })
                    .collect()
            })
            .collect();
        let f = CnfFormula::new(n, clauses).unwrap();
        // Walk the assignments from all-true down, variable n most significant,
        // and keep the lexicographically smallest model.
        let mut best: Option<Vec<bool>> = None;
        for code in (0u32..1 << n).rev() {
            let a: Vec<bool> = (0..n).map(|i| code >> i & 1 == 1).collect();
            if f.satisfied_by(&Assignment(a.clone())) && best.as_ref().is_none_or(|b| a < *b) {
                best = Some(a);
            }
        }
        assert_eq!(sat_solve_brute(&f).unwrap().map(|a| a.0), best);
    }
}
