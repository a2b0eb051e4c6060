//! Realization of matrices whose entries are ranges, by dynamic programming
//! over the set of undetermined entries.
//!
//! Times are processed in increasing order. The state after time τᵢ is the
//! subset of undetermined entries already realized; a transition picks which
//! further entries are realized exactly at τᵢ and checks, through range-aware
//! compatibility, that every entry due at τᵢ has a usable last edge. The
//! table has 2^k states and each step tries every split of the remaining
//! entries, so the running time grows like 3^k.

use tgr_core::{Dist, DistanceMatrix, Error, RangeMatrix, Result, StaticGraph, TemporalGraph};

use crate::foremost::{realize_foremost, CompatSearch, Outcome};

/// A set of matrix positions `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntrySet {
    n: usize,
    bits: Vec<bool>,
}

impl EntrySet {
    pub fn new(n: usize) -> Self {
        EntrySet { n, bits: vec![false; n * n] }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut s = Self::new(n);
        for (u, v) in pairs {
            s.insert(u, v);
        }
        s
    }

    pub fn insert(&mut self, u: usize, v: usize) {
        self.bits[u * self.n + v] = true;
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.n + v]
    }
}

/// One direction of the range-aware compatibility test: every x that reaches
/// `v` before `t` (its upper bound is below `t`, or it is in `before`) must
/// reach `w` by `t` (upper bound ≤ `t`, or it is in `before ∪ at`).
#[inline]
fn compat_dir(
    hi: &[u64],
    n: usize,
    v: usize,
    w: usize,
    t: u64,
    before: impl Fn(usize, usize) -> bool,
    by: impl Fn(usize, usize) -> bool,
) -> bool {
    (0..n).all(|x| !(hi[x * n + v] < t || before(x, v)) || hi[x * n + w] <= t || by(x, w))
}

fn upper_bounds(r: &RangeMatrix) -> Vec<u64> {
    let n = r.n();
    (0..n * n).map(|i| r.get(i / n, i % n).hi.raw()).collect()
}

/// Range-aware strict compatibility of a label `t` on `{v, w}`, given the
/// undetermined entries realized before `t` (`before`) and at `t` (`at`).
pub fn range_edge_compat(r: &RangeMatrix, v: usize, w: usize, t: u64, before: &EntrySet, at: &EntrySet) -> bool {
    let hi = upper_bounds(r);
    let n = r.n();
    let b = |x, y| before.contains(x, y);
    let by = |x, y| before.contains(x, y) || at.contains(x, y);
    compat_dir(&hi, n, v, w, t, b, by) && compat_dir(&hi, n, w, v, t, b, by)
}

/// Non-strict counterpart: for every x, reaching `v` by `t` and reaching `w`
/// by `t` coincide.
pub fn range_ns_edge_compat(r: &RangeMatrix, v: usize, w: usize, t: u64, before: &EntrySet, at: &EntrySet) -> bool {
    let n = r.n();
    let by = |x, y| r.get(x, y).hi <= t || before.contains(x, y) || at.contains(x, y);
    (0..n).all(|x| by(x, v) == by(x, w))
}

/// [`range_edge_compat`] restricted to pairs of `allowed`.
pub fn range_prescribed_edge_compat(
    r: &RangeMatrix,
    allowed: &StaticGraph,
    v: usize,
    w: usize,
    t: u64,
    before: &EntrySet,
    at: &EntrySet,
) -> bool {
    allowed.has_edge(v, w) && range_edge_compat(r, v, w, t, before, at)
}

#[derive(Clone, Copy, Debug)]
pub struct RangedOptions {
    /// Refuse inputs with more undetermined entries than this.
    pub max_undetermined: usize,
}

impl Default for RangedOptions {
    fn default() -> Self {
        RangedOptions { max_undetermined: 20 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RangedOutcome {
    /// A realization together with the matrix it realizes exactly.
    Yes {
        graph: TemporalGraph,
        determined: DistanceMatrix,
    },
    No,
}

struct Dp<'a> {
    n: usize,
    hi: Vec<u64>,
    /// Position of each undetermined entry in the bitmask, or `NONE`.
    slot: Vec<u32>,
    undet: &'a [(usize, usize)],
}

const NONE: u32 = u32::MAX;

impl Dp<'_> {
    #[inline]
    fn in_mask(&self, mask: u32, x: usize, v: usize) -> bool {
        let s = self.slot[x * self.n + v];
        s != NONE && mask >> s & 1 == 1
    }

    fn compatible(&self, v: usize, w: usize, t: u64, before: u32, at: u32) -> bool {
        let b = |x, y| self.in_mask(before, x, y);
        let by = |x, y| self.in_mask(before | at, x, y);
        compat_dir(&self.hi, self.n, v, w, t, b, by) && compat_dir(&self.hi, self.n, w, v, t, b, by)
    }

    /// Every entry due at `t` (the determined ones in `due`, the undetermined
    /// ones in `at`) has a last edge from something reached before `t`.
    fn exists(&self, due: &[(usize, usize)], t: u64, before: u32, at: u32) -> bool {
        let at_pairs = (0..self.undet.len()).filter(|&i| at >> i & 1 == 1).map(|i| self.undet[i]);
        due.iter().copied().chain(at_pairs).all(|(u, w)| {
            (0..self.n).any(|v| {
                v != w
                    && (self.hi[u * self.n + v] < t || self.in_mask(before, u, v))
                    && self.compatible(v, w, t, before, at)
            })
        })
    }
}

/// Decides whether some temporal graph has a strict foremost matrix inside
/// the ranges of `r`, and builds one if so.
///
/// A range `a..inf` admits every finite value from `a` on; only an exact
/// `inf` entry admits unreachability.
pub fn realize_ranged_foremost(r: &RangeMatrix, opts: RangedOptions) -> Result<RangedOutcome> {
    r.validate()?;
    let n = r.n();
    let undet = r.undetermined();
    let k = undet.len();
    if k > opts.max_undetermined || k > 30 {
        return Err(Error::Guard(format!("{k} undetermined entries, limit {}", opts.max_undetermined.min(30))));
    }
    let mut slot = vec![NONE; n * n];
    for (i, &(u, v)) in undet.iter().enumerate() {
        slot[u * n + v] = i as u32;
    }
    let dp = Dp { n, hi: upper_bounds(r), slot, undet: &undet };
    let times = r.candidate_times();
    let full: u32 = ((1u64 << k) - 1) as u32;

    let mut prev = vec![false; 1 << k];
    prev[0] = true;
    // For each time, the realized sets reached there and the subset added at
    // that time, sorted by set.
    let mut back: Vec<Vec<(u32, u32)>> = Vec::with_capacity(times.len());
    for &t in &times {
        let due: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |w| (u, w)))
            .filter(|&(u, w)| {
                let e = r.get(u, w);
                u != w && e.is_determined() && e.lo == Dist::Finite(t)
            })
            .collect();
        let open: u32 = undet
            .iter()
            .enumerate()
            .filter(|(_, &(u, w))| r.get(u, w).contains_time(t))
            .fold(0, |m, (i, _)| m | 1 << i);
        // Per reached set, the smallest subset realized at `t` that leads
        // there, i.e. entries are realized as early as possible.
        let mut cur = vec![NONE; 1 << k];
        for s in 0..=full {
            if !prev[s as usize] {
                continue;
            }
            let avail = open & !s;
            let mut at = 0u32;
            loop {
                let m = s | at;
                if at < cur[m as usize] && dp.exists(&due, t, s, at) {
                    cur[m as usize] = at;
                }
                if at == avail {
                    break;
                }
                // Next subset of `avail` in increasing order.
                at = (at.wrapping_sub(avail)) & avail;
            }
        }
        back.push((0..=full).filter(|&m| cur[m as usize] != NONE).map(|m| (m, cur[m as usize])).collect());
        prev = cur.iter().map(|&a| a != NONE).collect();
    }
    if !prev[full as usize] {
        return Ok(RangedOutcome::No);
    }

    let mut determined = DistanceMatrix::unreachable(n);
    for u in 0..n {
        for w in 0..n {
            let e = r.get(u, w);
            if u != w && e.is_determined() {
                determined.set(u, w, e.lo);
            }
        }
    }
    let mut mask = full;
    for (i, layer) in back.iter().enumerate().rev() {
        let pos = layer
            .binary_search_by_key(&mask, |&(m, _)| m)
            .map_err(|_| Error::Internal("dynamic programming trace is broken".into()))?;
        let at = layer[pos].1;
        for (j, &(u, w)) in undet.iter().enumerate() {
            if at >> j & 1 == 1 {
                determined.set(u, w, Dist::Finite(times[i]));
            }
        }
        mask ^= at;
    }
    debug_assert_eq!(mask, 0);
    match realize_foremost(&determined, CompatSearch::Indexed)? {
        Outcome::Yes(graph) => Ok(RangedOutcome::Yes { graph, determined }),
        Outcome::No { u, w } => {
            Err(Error::Internal(format!("chosen determination is not realizable at ({},{})", u + 1, w + 1)))
        }
    }
}
