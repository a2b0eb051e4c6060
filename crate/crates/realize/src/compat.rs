//! Local conditions deciding whether a label `τ` may sit on a pair `{v, w}`
//! without letting some source arrive somewhere earlier than its matrix entry
//! allows.

use tgr_core::{DistanceMatrix, StaticGraph};

/// Row-major matrix with `Inf` as `u64::MAX`.
#[derive(Clone, Debug)]
pub(crate) struct Raw {
    pub n: usize,
    pub d: Vec<u64>,
}

impl Raw {
    pub fn new(d: &DistanceMatrix) -> Self {
        Raw { n: d.n(), d: d.to_raw() }
    }

    #[inline]
    pub fn get(&self, x: usize, v: usize) -> u64 {
        self.d[x * self.n + v]
    }
}

#[inline]
pub(crate) fn strict_ok(raw: &Raw, v: usize, w: usize, t: u64) -> bool {
    (0..raw.n).all(|x| {
        let a = raw.get(x, v);
        let b = raw.get(x, w);
        // Reaching one end before t lets the label carry on to the other at t.
        !(a < t && b > t) && !(b < t && a > t)
    })
}

#[inline]
pub(crate) fn non_strict_ok(raw: &Raw, v: usize, w: usize, t: u64) -> bool {
    (0..raw.n).all(|x| (raw.get(x, v) <= t) == (raw.get(x, w) <= t))
}

/// Smallest value `> a` congruent to `t` modulo `p`.
#[inline]
fn next_shift(a: u64, t: u64, p: u64) -> u64 {
    let from = a as i128 + 1;
    let off = (t as i128 - from).rem_euclid(p as i128);
    (from + off) as u64
}

pub(crate) fn periodic_ok(raw: &Raw, v: usize, w: usize, t: u64, p: u64) -> bool {
    (0..raw.n).all(|x| {
        let a = raw.get(x, v);
        let b = raw.get(x, w);
        (a == u64::MAX || b <= next_shift(a, t, p)) && (b == u64::MAX || a <= next_shift(b, t, p))
    })
}

/// For every source x: reaching v before `t` forces reaching w by `t`, and
/// the other way round. Requires `v != w`, `t ≥ 1`.
pub fn edge_compat(d: &DistanceMatrix, v: usize, w: usize, t: u64) -> bool {
    debug_assert!(v != w && t >= 1);
    (0..d.n()).all(|x| {
        let (a, b) = (d.get(x, v), d.get(x, w));
        (a >= t || b <= t) && (b >= t || a <= t)
    })
}

/// Non-strict variant: every source reaches v by `t` iff it reaches w by `t`.
pub fn ns_edge_compat(d: &DistanceMatrix, v: usize, w: usize, t: u64) -> bool {
    debug_assert!(v != w && t >= 1);
    (0..d.n()).all(|x| (d.get(x, v) <= t) == (d.get(x, w) <= t))
}

/// [`edge_compat`] at every positive time `t + iΔ`.
///
/// Only the first shift beyond each finite entry can fail: later shifts
/// only relax the bound on the other endpoint.
pub fn period_edge_compat(d: &DistanceMatrix, v: usize, w: usize, t: u64, period: u64) -> bool {
    debug_assert!(v != w && t >= 1 && period >= 1);
    periodic_ok(&Raw::new(d), v, w, t, period)
}

/// [`edge_compat`] restricted to pairs present in `allowed`.
pub fn prescribed_edge_compat(d: &DistanceMatrix, allowed: &StaticGraph, v: usize, w: usize, t: u64) -> bool {
    allowed.has_edge(v, w) && edge_compat(d, v, w, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tgr_core::Dist;

    fn star() -> DistanceMatrix {
        DistanceMatrix::from_options(&[
            vec![Some(0), Some(6), Some(9)],
            vec![Some(6), Some(0), Some(9)],
            vec![Some(9), Some(11), Some(0)],
        ])
        .unwrap()
    }

    #[test]
    fn star_pairs() {
        let d = star();
        assert!(edge_compat(&d, 0, 1, 6));
        assert!(edge_compat(&d, 0, 1, 11));
        assert!(edge_compat(&d, 0, 2, 9));
        // Vertex 2 reaches 1 at 6, so a label 9 on {2,3} would hand 3 over at 9 < 11.
        assert!(!edge_compat(&d, 1, 2, 9));
    }

    #[test]
    fn inf_counts_as_later_than_everything() {
        let d = DistanceMatrix::from_rows(vec![
            vec![Dist::ZERO, Dist::Finite(2), Dist::Inf],
            vec![Dist::Finite(2), Dist::ZERO, Dist::Inf],
            vec![Dist::Inf, Dist::Inf, Dist::ZERO],
        ])
        .unwrap();
        assert!(!edge_compat(&d, 1, 2, 3));
        assert!(edge_compat(&d, 0, 1, 2));
    }

    #[test]
    fn periodic_shift_is_the_first_one_past_the_entry() {
        assert_eq!(next_shift(0, 3, 5), 3);
        assert_eq!(next_shift(3, 3, 5), 8);
        assert_eq!(next_shift(7, 3, 5), 8);
        assert_eq!(next_shift(8, 13, 5), 13);
    }

    #[test]
    fn periodic_compat_matches_explicit_shifts() {
        let d = star();
        for p in 1..15 {
            for t in 1..=p {
                for (v, w) in [(0, 1), (0, 2), (1, 2)] {
                    let explicit = (0..20).map(|i| t + i * p).all(|s| edge_compat(&d, v, w, s));
                    assert_eq!(period_edge_compat(&d, v, w, t, p), explicit, "p={p} t={t} {v}{w}");
                }
            }
        }
    }
}
