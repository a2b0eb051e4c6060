//! Greedy realizers for foremost matrices and a direct test for periodic
//! shortest matrices.
//!
//! The core loop: for every finite entry `D[u][w]`, pick the first vertex v
//! that `u` reaches strictly earlier and whose pair `{v, w}` accepts the label
//! `D[u][w]`, and put that label there. If some entry has no such v the
//! matrix has no realization. Each pair gets at most n labels and the graph
//! at most n² in total.

use std::collections::VecDeque;

use tgr_core::{canonical_residue, DistanceMatrix, Error, Result, StaticGraph, Strictness, TemporalGraph};

use crate::compat::{non_strict_ok, periodic_ok, strict_ok, Raw};
use crate::interval::SortedColumns;

/// How the compatibility test is evaluated inside the greedy loop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CompatSearch {
    /// Scan all sources for every test: O(n) per test, O(n⁴) overall.
    Naive,
    /// One stabbing index per pair `{v, w}`, built on first use and queried
    /// in O(log n): O(n³ log n) overall.
    #[default]
    Indexed,
}

/// The verdict of a realizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes(TemporalGraph),
    /// No realization exists. `(u, w)` is the first entry (row-major) the
    /// algorithm could not serve.
    No {
        u: usize,
        w: usize,
    },
}

impl Outcome {
    pub fn graph(&self) -> Option<&TemporalGraph> {
        match self {
            Outcome::Yes(g) => Some(g),
            Outcome::No { .. } => None,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }
}

fn check_size(d: &DistanceMatrix, g: &StaticGraph) -> Result<()> {
    if g.n() != d.n() {
        return Err(Error::DimensionMismatch { expected: d.n(), got: g.n() });
    }
    Ok(())
}

/// Candidate middle vertices for target `w`: everything, or the neighbors of
/// `w` in a prescribed graph.
enum Candidates<'a> {
    All,
    Prescribed(&'a StaticGraph),
}

impl Candidates<'_> {
    /// The first candidate for `w` accepted by `f`.
    fn find(&self, w: usize, n: usize, f: impl FnMut(&usize) -> bool) -> Option<usize> {
        match self {
            Candidates::All => (0..n).filter(|&v| v != w).find(f),
            Candidates::Prescribed(g) => g.neighbors(w).iter().copied().find(f),
        }
    }
}

/// The greedy loop with the naive test, in row-major order.
fn greedy_naive(
    raw: &Raw,
    mut graph: TemporalGraph,
    cands: &Candidates,
    ok: impl Fn(usize, usize, u64) -> bool,
) -> Result<Outcome> {
    let n = raw.n;
    for u in 0..n {
        for w in 0..n {
            let t = raw.get(u, w);
            if u == w || t == u64::MAX {
                continue;
            }
            match cands.find(w, n, |&v| raw.get(u, v) < t && ok(v, w, t)) {
                Some(v) => {
                    graph.add_time(v, w, t)?;
                }
                None => return Ok(Outcome::No { u, w }),
            }
        }
    }
    Ok(Outcome::Yes(graph))
}

/// The same choices as [`greedy_naive`], column by column so that the
/// indexes for each `{v, w}` are built once per target `w` and shared by all
/// sources.
fn greedy_indexed(raw: &Raw, mut graph: TemporalGraph, cands: &Candidates, strictness: Strictness) -> Result<Outcome> {
    let n = raw.n;
    let cols = SortedColumns::new(raw, strictness);
    let mut first_failure: Option<(usize, usize)> = None;
    // Row v holds the index of pair (v, w), row n + v that of (w, v).
    let mut reach = vec![0u32; 2 * n * n];
    let mut built = vec![usize::MAX; n];
    for w in 0..n {
        for u in 0..n {
            let row = cols.row(u);
            let t = row[w];
            if u == w || t == u32::MAX {
                continue;
            }
            let k_w = cols.rank(w, t);
            let found = cands.find(w, n, |&v| {
                if row[v] >= t {
                    return false;
                }
                let (via_v, via_w) = reach.split_at_mut(n * n);
                let (via_v, via_w) = (&mut via_v[v * n..(v + 1) * n], &mut via_w[v * n..(v + 1) * n]);
                if built[v] != w {
                    cols.fill_reach(v, w, via_v);
                    cols.fill_reach(w, v, via_w);
                    built[v] = w;
                }
                !SortedColumns::stab(via_w, k_w, t) && !SortedColumns::stab(via_v, cols.rank(v, t), t)
            });
            match found {
                Some(v) => {
                    graph.add_time(v, w, raw.get(u, w))?;
                }
                None => {
                    // Keep going so the reported entry matches the row-major scan.
                    if first_failure.is_none_or(|f| (u, w) < f) {
                        first_failure = Some((u, w));
                    }
                }
            }
        }
    }
    Ok(match first_failure {
        Some((u, w)) => Outcome::No { u, w },
        None => Outcome::Yes(graph),
    })
}

fn run(d: &DistanceMatrix, cands: Candidates, strictness: Strictness, search: CompatSearch) -> Result<Outcome> {
    d.validate()?;
    let raw = Raw::new(d);
    let graph = TemporalGraph::new(d.n());
    match (search, strictness) {
        (CompatSearch::Indexed, _) => greedy_indexed(&raw, graph, &cands, strictness),
        (CompatSearch::Naive, Strictness::Strict) => {
            greedy_naive(&raw, graph, &cands, |v, w, t| strict_ok(&raw, v, w, t))
        }
        (CompatSearch::Naive, Strictness::NonStrict) => {
            greedy_naive(&raw, graph, &cands, |v, w, t| non_strict_ok(&raw, v, w, t))
        }
    }
}

/// Decides whether `d` is the strict foremost matrix of some temporal graph
/// and builds one if so.
pub fn realize_foremost(d: &DistanceMatrix, search: CompatSearch) -> Result<Outcome> {
    run(d, Candidates::All, Strictness::Strict, search)
}

/// Non-strict counterpart of [`realize_foremost`].
pub fn realize_ns_foremost(d: &DistanceMatrix, search: CompatSearch) -> Result<Outcome> {
    run(d, Candidates::All, Strictness::NonStrict, search)
}

/// Strict foremost realization where only pairs of `allowed` may carry labels.
pub fn realize_prescribed_foremost(d: &DistanceMatrix, allowed: &StaticGraph, search: CompatSearch) -> Result<Outcome> {
    check_size(d, allowed)?;
    run(d, Candidates::Prescribed(allowed), Strictness::Strict, search)
}

/// Strict foremost realization by a Δ-periodic graph. Labels are stored as
/// residues in `1..=Δ`.
pub fn realize_periodic_foremost(d: &DistanceMatrix, period: u64) -> Result<Outcome> {
    d.validate()?;
    let graph = TemporalGraph::periodic(d.n(), period)?;
    let raw = Raw::new(d);
    greedy_naive(&raw, graph, &Candidates::All, |v, w, t| periodic_ok(&raw, v, w, t, period))
}

/// Non-strict foremost realization where only pairs of `allowed` may carry
/// labels.
///
/// Values are handled in increasing order. Within one value `d`, a source u
/// may reach several targets at the same instant by chaining equal labels, so
/// targets that have an earlier-reached neighbor seed a breadth-first sweep
/// that hands the label on to every compatible neighbor with the same entry.
pub fn realize_prescribed_ns_foremost(d: &DistanceMatrix, allowed: &StaticGraph) -> Result<Outcome> {
    d.validate()?;
    check_size(d, allowed)?;
    let n = d.n();
    let raw = Raw::new(d);
    let mut graph = TemporalGraph::new(n);
    let mut marked = vec![false; n * n];
    for t in d.finite_values() {
        let layer: Vec<(usize, usize)> = d.off_diagonal().filter(|&(_, _, x)| x == t).map(|(u, w, _)| (u, w)).collect();
        for &(u, w) in &layer {
            if marked[u * n + w] {
                continue;
            }
            let seed =
                allowed.neighbors(w).iter().copied().find(|&v| raw.get(u, v) < t && non_strict_ok(&raw, v, w, t));
            let Some(v) = seed else { continue };
            marked[u * n + w] = true;
            graph.add_label(v, w, t)?;
            let mut queue = VecDeque::from([w]);
            while let Some(v) = queue.pop_front() {
                for &x in allowed.neighbors(v) {
                    if raw.get(u, x) == t && !marked[u * n + x] && non_strict_ok(&raw, v, x, t) {
                        marked[u * n + x] = true;
                        graph.add_label(v, x, t)?;
                        queue.push_back(x);
                    }
                }
            }
        }
        if let Some(&(u, w)) = layer.iter().find(|&&(u, w)| !marked[u * n + w]) {
            return Ok(Outcome::No { u, w });
        }
    }
    Ok(Outcome::Yes(graph))
}

/// Decides whether `d` is the shortest (hop count) matrix of a Δ-periodic
/// graph.
///
/// Entries equal to 1 in both directions are the only possible edges. Giving
/// each of them the label 1 makes every static path a temporal one, so the
/// answer is yes exactly when `d` is the hop distance of that graph.
pub fn realize_periodic_shortest(d: &DistanceMatrix, period: u64) -> Result<Outcome> {
    d.validate()?;
    let n = d.n();
    let mut base = StaticGraph::new(n);
    for (u, v, x) in d.off_diagonal() {
        if u < v && x == 1 && d.get(v, u) == 1 {
            base.add_edge(u, v)?;
        }
    }
    for s in 0..n {
        let mut hops = vec![u64::MAX; n];
        hops[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in base.neighbors(x) {
                if hops[y] == u64::MAX {
                    hops[y] = hops[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for (w, &h) in hops.iter().enumerate() {
            if d.get(s, w).raw() != h {
                return Ok(Outcome::No { u: s, w });
            }
        }
    }
    let mut graph = TemporalGraph::periodic(n, period)?;
    for (u, v) in base.edges() {
        graph.add_label(u, v, canonical_residue(1, period))?;
    }
    Ok(Outcome::Yes(graph))
}
