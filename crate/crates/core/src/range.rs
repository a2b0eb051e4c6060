use std::fmt;

use crate::dist::{Dist, Finite, Inf};
use crate::error::{Error, Result};
use crate::matrix::DistanceMatrix;

/// A set of admissible values for one matrix entry.
///
/// `lo == hi` is a determined entry (possibly `Inf`). Otherwise `lo` is finite
/// and the range holds the finite integers in `lo..=hi`; an unbounded range
/// (`hi == Inf`) holds every finite integer ≥ `lo` but not `Inf` itself.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Range {
    pub lo: Dist,
    pub hi: Dist,
}

impl Range {
    pub fn exact(d: Dist) -> Self {
        Range { lo: d, hi: d }
    }

    pub fn new(lo: Dist, hi: Dist) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidMatrix(format!("empty range {lo}..{hi}")));
        }
        Ok(Range { lo, hi })
    }

    pub fn is_determined(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, d: Dist) -> bool {
        match d {
            Inf => self.lo == Inf,
            Finite(_) => self.lo <= d && d <= self.hi,
        }
    }

    pub fn contains_time(&self, t: u64) -> bool {
        self.contains(Finite(t))
    }

    /// Number of admissible values, `None` when unbounded.
    pub fn width(&self) -> Option<u64> {
        match (self.lo, self.hi) {
            (Inf, Inf) => Some(1),
            (Finite(a), Finite(b)) => Some(b - a + 1),
            _ => None,
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_determined() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// An n×n matrix of ranges. Diagonal entries are exactly 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RangeMatrix {
    n: usize,
    data: Vec<Range>,
}

impl RangeMatrix {
    pub fn from_rows(rows: Vec<Vec<Range>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (u, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {n}", u + 1, row.len())));
            }
            data.extend(row);
        }
        let m = RangeMatrix { n, data };
        m.validate()?;
        Ok(m)
    }

    pub fn from_matrix(d: &DistanceMatrix) -> Self {
        RangeMatrix { n: d.n(), data: d.entries().iter().map(|&x| Range::exact(x)).collect() }
    }

    pub fn validate(&self) -> Result<()> {
        for u in 0..self.n {
            for v in 0..self.n {
                let r = self.get(u, v);
                let at = format!("({},{})", u + 1, v + 1);
                if u == v {
                    if r != Range::exact(Dist::ZERO) {
                        return Err(Error::InvalidMatrix(format!("diagonal entry {at} is {r}, expected 0")));
                    }
                    continue;
                }
                if r.lo == Dist::ZERO {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry {at} admits 0")));
                }
                if r.lo > r.hi {
                    return Err(Error::InvalidMatrix(format!("entry {at} is an empty range {r}")));
                }
                if r.lo == Finite(u64::MAX) || r.hi == Finite(u64::MAX) {
                    return Err(Error::InvalidMatrix(format!("entry {at} is out of range")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Range {
        self.data[u * self.n + v]
    }

    pub fn set(&mut self, u: usize, v: usize, r: Range) {
        assert!(u != v, "diagonal entries are fixed at 0");
        self.data[u * self.n + v] = r;
    }

    /// Off-diagonal entries with `lo != hi`, row-major.
    pub fn undetermined(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !self.get(u, v).is_determined())
            .collect()
    }

    /// True when every entry of `d` lies in the matching range.
    pub fn admits(&self, d: &DistanceMatrix) -> bool {
        d.n() == self.n && (0..self.n).all(|u| (0..self.n).all(|v| self.get(u, v).contains(d.get(u, v))))
    }

    /// The times at which a realization may need labels: `lo + j` for every
    /// finite off-diagonal lower bound and `0 ≤ j ≤ k`, with `k` the number
    /// of undetermined entries. Sorted, deduplicated.
    pub fn candidate_times(&self) -> Vec<u64> {
        let k = self.undetermined().len() as u64;
        let mut times = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if u == v {
                    continue;
                }
                if let Finite(lo) = self.get(u, v).lo {
                    times.extend((0..=k).map(|j| lo + j));
                }
            }
        }
        times.sort_unstable();
        times.dedup();
        times
    }
}
