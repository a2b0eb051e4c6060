use std::cmp::Ordering;
use std::fmt;

/// A metric value: a non-negative time, duration or hop count, or `Inf` for
/// "not reachable". `Inf` compares greater than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dist {
    Finite(u64),
    Inf,
}

pub use Dist::{Finite, Inf};

impl Dist {
    pub const ZERO: Dist = Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Finite(t) => Some(t),
            Inf => None,
        }
    }

    pub fn saturating_add(self, k: u64) -> Dist {
        match self {
            Finite(t) => t.checked_add(k).filter(|&s| s != u64::MAX).map_or(Inf, Finite),
            Inf => Inf,
        }
    }

    /// Dense encoding used in hot loops: `Inf` becomes `u64::MAX`, so finite
    /// values are kept strictly below it everywhere in this workspace.
    #[inline]
    pub fn raw(self) -> u64 {
        match self {
            Finite(t) => t,
            Inf => u64::MAX,
        }
    }

    #[inline]
    pub fn from_raw(t: u64) -> Dist {
        if t == u64::MAX {
            Inf
        } else {
            Finite(t)
        }
    }
}

impl Ord for Dist {
    fn cmp(&self, other: &Self) -> Ordering {
        self.raw().cmp(&other.raw())
    }
}

impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<u64> for Dist {
    fn eq(&self, other: &u64) -> bool {
        *self == Finite(*other)
    }
}

impl PartialOrd<u64> for Dist {
    fn partial_cmp(&self, other: &u64) -> Option<Ordering> {
        Some(self.cmp(&Finite(*other)))
    }
}

impl From<u64> for Dist {
    fn from(t: u64) -> Self {
        Finite(t)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(t) => write!(f, "{t}"),
            Inf => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inf_is_above_everything() {
        assert!(Finite(u64::MAX - 1) < Inf);
        assert!(Inf > 3);
        assert!(Finite(2) < 3);
        assert_eq!(Inf.saturating_add(1), Inf);
        assert_eq!(Finite(u64::MAX - 1).saturating_add(5), Inf);
        assert_eq!(Finite(4).saturating_add(5), Finite(9));
    }
}
