//! Static stabbing index over closed integer intervals.

use tgr_core::{DistanceMatrix, Strictness};

use crate::compat::Raw;

/// A fixed set of closed intervals answering "does any interval contain t?"
/// in O(log m) after an O(m log m) build.
///
/// Intervals are kept sorted by left end together with the running maximum
/// of right ends; `t` is stabbed iff some interval starting at or before `t`
/// ends at or after it, i.e. iff that running maximum reaches `t`.
#[derive(Clone, Debug, Default)]
pub struct IntervalIndex {
    starts: Vec<u64>,
    reach: Vec<u64>,
}

impl IntervalIndex {
    /// Empty intervals (`lo > hi`) are dropped.
    pub fn new(intervals: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut iv: Vec<(u64, u64)> = intervals.into_iter().filter(|&(lo, hi)| lo <= hi).collect();
        iv.sort_unstable();
        let mut starts = Vec::with_capacity(iv.len());
        let mut reach = Vec::with_capacity(iv.len());
        let mut best = 0;
        for (lo, hi) in iv {
            best = best.max(hi);
            starts.push(lo);
            reach.push(best);
        }
        IntervalIndex { starts, reach }
    }

    pub fn stab(&self, t: u64) -> bool {
        let k = self.starts.partition_point(|&s| s <= t);
        k > 0 && self.reach[k - 1] >= t
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }
}

/// The times at which a label on `{v, w}` lets some source x reach `w`
/// through `v` before `D[x][w]`: `[D[x][v]+1, D[x][w]-1]`, or
/// `[D[x][v], D[x][w]-1]` when labels may chain at equal times. A label at
/// `t` is compatible iff neither `violation_index(d, v, w, _)` nor
/// `violation_index(d, w, v, _)` stabs `t`.
pub fn violation_index(d: &DistanceMatrix, v: usize, w: usize, strictness: Strictness) -> IntervalIndex {
    let n = d.n();
    IntervalIndex::new((0..n).filter_map(|x| {
        let a = d.get(x, v).finite()?;
        let lo = match strictness {
            Strictness::Strict => a + 1,
            Strictness::NonStrict => a,
        };
        // An unreachable w stays ahead of every finite time.
        let hi = d.get(x, w).raw().checked_sub(1)?;
        Some((lo, hi))
    }))
}

/// Every column of a matrix sorted once, so that the violation intervals of
/// any pair come out already ordered by left end.
///
/// For a pair `(v, w)` the intervals are `(D[x][v], D[x][w])` over sources x:
/// a label on `{v, w}` in there lets x reach `w` through `v` before its
/// entry. Their left ends are column `v` sorted, shared by every `w`, so an
/// index for the pair is just the prefix maxima of the right ends in that
/// order.
///
/// Entries are replaced by their rank among the distinct values, which keeps
/// every comparison and halves the memory traffic.
pub(crate) struct SortedColumns {
    n: usize,
    strictness: Strictness,
    /// `ranked[x*n + c]`: rank of `D[x][c]`, `u32::MAX` for unreachable.
    ranked: Vec<u32>,
    /// `cols[c*n + x]`: the same, column-major.
    cols: Vec<u32>,
    /// Row indices of column c by increasing entry.
    order: Vec<u32>,
    /// Column c in increasing order.
    sorted: Vec<u32>,
}

impl SortedColumns {
    pub fn new(raw: &Raw, strictness: Strictness) -> Self {
        let n = raw.n;
        let mut values: Vec<u64> = raw.d.iter().copied().filter(|&x| x != u64::MAX).collect();
        values.sort_unstable();
        values.dedup();
        let ranked: Vec<u32> = raw
            .d
            .iter()
            .map(|&x| match values.binary_search(&x) {
                Ok(r) => u32::try_from(r).expect("fewer than 2^32 distinct entries"),
                Err(_) => u32::MAX,
            })
            .collect();
        let mut cols = vec![0; n * n];
        let mut order = Vec::with_capacity(n * n);
        let mut sorted = Vec::with_capacity(n * n);
        for c in 0..n {
            for x in 0..n {
                cols[c * n + x] = ranked[x * n + c];
            }
            let col = &cols[c * n..(c + 1) * n];
            let mut ord: Vec<u32> = (0..n as u32).collect();
            ord.sort_by_key(|&x| col[x as usize]);
            sorted.extend(ord.iter().map(|&x| col[x as usize]));
            order.extend(ord);
        }
        SortedColumns { n, strictness, ranked, cols, order, sorted }
    }

    /// Row `u` of the ranked matrix.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.ranked[u * self.n..(u + 1) * self.n]
    }

    /// How many intervals of a pair `(c, _)` start at or before rank `t`.
    pub fn rank(&self, c: usize, t: u32) -> usize {
        let col = &self.sorted[c * self.n..(c + 1) * self.n];
        match self.strictness {
            Strictness::Strict => col.partition_point(|&a| a < t),
            Strictness::NonStrict => col.partition_point(|&a| a <= t),
        }
    }

    /// Prefix maxima of the right ends for the pair `(v, w)`.
    pub fn fill_reach(&self, v: usize, w: usize, out: &mut [u32]) {
        let n = self.n;
        let col_w = &self.cols[w * n..(w + 1) * n];
        let mut best = 0;
        for (slot, &x) in out.iter_mut().zip(&self.order[v * n..(v + 1) * n]) {
            best = best.max(col_w[x as usize]);
            *slot = best;
        }
    }

    /// Whether rank `t` lies in an interval of the pair with the given
    /// prefix maxima, `k` being [`SortedColumns::rank`] of `t` in its first
    /// column.
    pub fn stab(reach: &[u32], k: usize, t: u32) -> bool {
        k > 0 && reach[k - 1] > t
    }
}
