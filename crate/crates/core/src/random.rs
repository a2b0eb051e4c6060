//! Random instance generators shared by the test suites and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cnf::CnfFormula;
use crate::graph::{StaticGraph, TemporalGraph};

/// A graph on `n` vertices with up to `labels` labels drawn uniformly from
/// `1..=max_label` on uniformly random pairs. With `period`, labels are drawn
/// from `1..=period` instead.
pub fn temporal_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    labels: usize,
    max_label: u64,
    period: Option<u64>,
) -> TemporalGraph {
    let mut g = match period {
        Some(p) => TemporalGraph::periodic(n, p).expect("positive period"),
        None => TemporalGraph::new(n),
    };
    if n < 2 {
        return g;
    }
    let top = period.unwrap_or(max_label).max(1);
    for _ in 0..labels {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        g.add_label(u, v, rng.gen_range(1..=top)).expect("valid label");
    }
    g
}

/// A connected-ish random temporal graph: a random spanning tree plus
/// `extra` random labels, so that most entries of its matrices are finite.
pub fn dense_temporal_graph<R: Rng>(rng: &mut R, n: usize, extra: usize, max_label: u64) -> TemporalGraph {
    let mut g = temporal_graph(rng, n, extra, max_label, None);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_label(order[i], parent, rng.gen_range(1..=max_label)).expect("valid label");
    }
    g
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn static_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> StaticGraph {
    let mut g = StaticGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// A CNF formula whose clauses have 1..=`max_width` literals over distinct
/// variables, so no clause holds a variable in both polarities.
pub fn cnf<R: Rng>(rng: &mut R, num_vars: usize, num_clauses: usize, max_width: usize) -> CnfFormula {
    let vars: Vec<i32> = (1..=num_vars as i32).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let w = rng.gen_range(1..=max_width.min(num_vars).max(1));
            vars.choose_multiple(rng, w).map(|&x| if rng.gen_bool(0.5) { x } else { -x }).collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("literals are in range")
}
