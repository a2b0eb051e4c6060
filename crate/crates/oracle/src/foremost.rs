use tgr_core::{DistanceMatrix, Result, Strictness, TemporalGraph, TimeOrderedEdges};

use crate::budget::{Exhausted, Meter, SearchBudget, Verdict};

type Label = (u64, usize, usize);

fn foremost(n: usize, labels: &[Label], strictness: Strictness) -> Vec<u64> {
    TimeOrderedEdges::new(n, labels.to_vec()).foremost_raw(strictness)
}

fn to_graph(n: usize, labels: &[Label]) -> TemporalGraph {
    let mut g = TemporalGraph::new(n);
    for &(t, u, v) in labels {
        g.add_label(u, v, t).expect("labels come from a valid matrix");
    }
    g
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn size_ok(d: &DistanceMatrix, budget: &SearchBudget) -> bool {
    d.n() <= budget.max_vertices && d.finite_values().len() <= budget.max_universe
}

/// Searches the labels of a single time `t` on top of `fixed` (all earlier
/// labels). Pairs are decided in lexicographic order, leaving a pair out
/// before trying it in.
struct Level<'a> {
    n: usize,
    want: &'a [u64],
    t: u64,
    strictness: Strictness,
    cands: Vec<(usize, usize)>,
}

impl Level<'_> {
    fn too_early(&self, fo: &[u64]) -> bool {
        fo.iter().zip(self.want).any(|(a, b)| a < b)
    }

    /// After all labels up to `t`: entries due by `t` are exact, the rest
    /// are still unreached.
    fn settled(&self, fo: &[u64]) -> bool {
        fo.iter().zip(self.want).all(|(&a, &b)| if b <= self.t { a == b } else { a == u64::MAX })
    }

    /// Even with every remaining candidate switched on, some entry due at
    /// `t` is missed.
    fn hopeless(&self, labels: &mut Vec<Label>, from: usize) -> bool {
        let base = labels.len();
        labels.extend(self.cands[from..].iter().map(|&(u, v)| (self.t, u, v)));
        let fo = foremost(self.n, labels, self.strictness);
        labels.truncate(base);
        fo.iter().zip(self.want).any(|(&a, &b)| b == self.t && a > b)
    }

    fn search(&self, labels: &mut Vec<Label>, i: usize, meter: &mut Meter) -> std::result::Result<bool, Exhausted> {
        meter.tick()?;
        if i == self.cands.len() {
            return Ok(self.settled(&foremost(self.n, labels, self.strictness)));
        }
        if self.hopeless(labels, i) {
            return Ok(false);
        }
        if self.search(labels, i + 1, meter)? {
            return Ok(true);
        }
        let (u, v) = self.cands[i];
        labels.push((self.t, u, v));
        if !self.too_early(&foremost(self.n, labels, self.strictness)) && self.search(labels, i + 1, meter)? {
            return Ok(true);
        }
        labels.pop();
        Ok(false)
    }
}

/// Exhaustive search for a temporal graph whose foremost matrix is `d`.
///
/// Labels are drawn from the finite entries of `d`. The search goes through
/// those times in increasing order and, for each, tries every subset of
/// pairs. Once all labels up to `t` are fixed, every arrival at or before `t`
/// is final and everything later depends only on which entries have been
/// reached, which the matrix itself dictates. So any one subset that settles
/// time `t` correctly is as good as any other, and the search never needs to
/// revisit an earlier time.
pub fn oracle_foremost_realizable(
    d: &DistanceMatrix,
    strictness: Strictness,
    budget: SearchBudget,
) -> Result<Verdict<TemporalGraph>> {
    d.validate()?;
    if !size_ok(d, &budget) {
        return Ok(Verdict::BudgetExceeded);
    }
    let n = d.n();
    let want = d.to_raw();
    let mut meter = Meter::new(&budget);
    let mut labels: Vec<Label> = Vec::new();
    for t in d.finite_values() {
        // A label t on {u, v} alone brings u to v and v to u by t.
        let cands = pairs(n).into_iter().filter(|&(u, v)| want[u * n + v] <= t && want[v * n + u] <= t).collect();
        let level = Level { n, want: &want, t, strictness, cands };
        match level.search(&mut labels, 0, &mut meter) {
            Ok(true) => {}
            Ok(false) => return Ok(Verdict::No),
            Err(Exhausted) => return Ok(Verdict::BudgetExceeded),
        }
    }
    if foremost(n, &labels, strictness) != want {
        return Ok(Verdict::No);
    }
    Ok(Verdict::Yes(to_graph(n, &labels)))
}

/// Label `t` on `{v, w}` lets no source arrive early at either end.
fn compatible(d: &[u64], n: usize, v: usize, w: usize, t: u64) -> bool {
    (0..n).all(|x| {
        let (a, b) = (d[x * n + v], d[x * n + w]);
        (a >= t || b <= t) && (b >= t || a <= t)
    })
}

struct Single<'a> {
    n: usize,
    want: &'a [u64],
    pairs: Vec<(usize, usize)>,
    options: Vec<Vec<u64>>,
}

impl Single<'_> {
    fn search(&self, labels: &mut Vec<Label>, i: usize, meter: &mut Meter) -> std::result::Result<bool, Exhausted> {
        meter.tick()?;
        let fo = foremost(self.n, labels, Strictness::Strict);
        if fo.iter().zip(self.want).any(|(a, b)| a < b) {
            return Ok(false);
        }
        if i == self.pairs.len() {
            return Ok(fo == self.want);
        }
        // Relaxation: every remaining pair with all of its options at once.
        let base = labels.len();
        for (j, &(u, v)) in self.pairs.iter().enumerate().skip(i) {
            labels.extend(self.options[j].iter().map(|&t| (t, u, v)));
        }
        let best = foremost(self.n, labels, Strictness::Strict);
        labels.truncate(base);
        if best.iter().zip(self.want).any(|(a, b)| a > b) {
            return Ok(false);
        }
        if self.search(labels, i + 1, meter)? {
            return Ok(true);
        }
        let (u, v) = self.pairs[i];
        for &t in &self.options[i] {
            labels.push((t, u, v));
            if self.search(labels, i + 1, meter)? {
                return Ok(true);
            }
            labels.pop();
        }
        Ok(false)
    }
}

/// Exhaustive search for a strict foremost realization of `d` with at most
/// one label per pair. Pairs are decided in lexicographic order, each first
/// left empty and then given each compatible entry of `d` in increasing order.
pub fn oracle_single_label_foremost(d: &DistanceMatrix, budget: SearchBudget) -> Result<Verdict<TemporalGraph>> {
    d.validate()?;
    if !size_ok(d, &budget) {
        return Ok(Verdict::BudgetExceeded);
    }
    let n = d.n();
    let want = d.to_raw();
    let universe = d.finite_values();
    let pairs = pairs(n);
    let options = pairs
        .iter()
        .map(|&(u, v)| universe.iter().copied().filter(|&t| compatible(&want, n, u, v, t)).collect())
        .collect();
    let s = Single { n, want: &want, pairs, options };
    let mut labels = Vec::new();
    match s.search(&mut labels, 0, &mut Meter::new(&budget)) {
        Ok(true) => Ok(Verdict::Yes(to_graph(n, &labels))),
        Ok(false) => Ok(Verdict::No),
        Err(Exhausted) => Ok(Verdict::BudgetExceeded),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tgr_core::foremost_matrix;

    fn m(rows: &[&[Option<u64>]]) -> DistanceMatrix {
        DistanceMatrix::from_options(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn star_is_realizable() {
        let d = m(&[&[Some(0), Some(6), Some(9)], &[Some(6), Some(0), Some(9)], &[Some(9), Some(11), Some(0)]]);
        let Verdict::Yes(g) = oracle_foremost_realizable(&d, Strictness::Strict, SearchBudget::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(foremost_matrix(&g, Strictness::Strict), d);
        // One label per pair suffices if 3 reaches 2 directly at 11.
        let Verdict::Yes(g) = oracle_single_label_foremost(&d, SearchBudget::default()).unwrap() else { panic!() };
        assert_eq!(g.max_labels_per_edge(), 1);
        assert_eq!(g.labels(1, 2), &[11]);
        assert_eq!(foremost_matrix(&g, Strictness::Strict), d);
    }

    #[test]
    fn asymmetric_pair_is_not() {
        let d = m(&[&[Some(0), Some(1)], &[Some(2), Some(0)]]);
        assert_eq!(oracle_foremost_realizable(&d, Strictness::Strict, SearchBudget::default()).unwrap(), Verdict::No);
        assert_eq!(
            oracle_foremost_realizable(&d, Strictness::NonStrict, SearchBudget::default()).unwrap(),
            Verdict::No
        );
    }

    #[test]
    fn budget_is_enforced() {
        let d = m(&[&[Some(0), Some(1)], &[Some(1), Some(0)]]);
        let tiny = SearchBudget { max_labelings: 0, ..SearchBudget::default() };
        assert_eq!(oracle_foremost_realizable(&d, Strictness::Strict, tiny).unwrap(), Verdict::BudgetExceeded);
        let small = SearchBudget { max_vertices: 1, ..SearchBudget::default() };
        assert_eq!(oracle_single_label_foremost(&d, small).unwrap(), Verdict::BudgetExceeded);
    }
}
