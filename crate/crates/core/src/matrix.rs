use std::fmt;

use crate::dist::{Dist, Finite, Inf};
use crate::error::{Error, Result};

/// An n×n matrix of metric values, 0-based in the library API.
///
/// Invariants: the diagonal is 0 and every off-diagonal entry is `Inf` or a
/// finite value ≥ 1. Rows are sources, columns are targets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Dist>,
}

impl DistanceMatrix {
    /// Diagonal 0, everything else `Inf`.
    pub fn unreachable(n: usize) -> Self {
        let mut data = vec![Inf; n * n];
        for i in 0..n {
            data[i * n + i] = Dist::ZERO;
        }
        DistanceMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<Dist>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (u, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!("row {} has {} entries, expected {n}", u + 1, row.len())));
            }
            data.extend(row);
        }
        let m = DistanceMatrix { n, data };
        m.validate()?;
        Ok(m)
    }

    /// Convenience for tests and generators: `None` is `Inf`.
    pub fn from_options(rows: &[Vec<Option<u64>>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|x| x.map_or(Inf, Finite)).collect()).collect())
    }

    pub fn validate(&self) -> Result<()> {
        for u in 0..self.n {
            for v in 0..self.n {
                let d = self.get(u, v);
                if u == v && d != Dist::ZERO {
                    return Err(Error::InvalidMatrix(format!(
                        "diagonal entry ({},{}) is {d}, expected 0",
                        u + 1,
                        v + 1
                    )));
                }
                if u != v && d == Dist::ZERO {
                    return Err(Error::InvalidMatrix(format!("off-diagonal entry ({},{}) is 0", u + 1, v + 1)));
                }
                if d == Finite(u64::MAX) {
                    return Err(Error::InvalidMatrix(format!("entry ({},{}) is out of range", u + 1, v + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.data[u * self.n + v]
    }

    /// Overwrites one off-diagonal entry. Panics on the diagonal or on 0.
    pub fn set(&mut self, u: usize, v: usize, d: Dist) {
        assert!(u != v, "diagonal entries are fixed at 0");
        assert!(d != Dist::ZERO && d != Finite(u64::MAX), "entry out of range");
        self.data[u * self.n + v] = d;
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn entries(&self) -> &[Dist] {
        &self.data
    }

    /// Row-major dense copy with `Inf` as `u64::MAX`.
    pub fn to_raw(&self) -> Vec<u64> {
        self.data.iter().map(|d| d.raw()).collect()
    }

    /// Distinct finite off-diagonal values, ascending.
    pub fn finite_values(&self) -> Vec<u64> {
        let mut vals: Vec<u64> = self.off_diagonal().filter_map(|(_, _, d)| d.finite()).collect();
        vals.sort_unstable();
        vals.dedup();
        vals
    }

    pub fn max_finite(&self) -> Option<u64> {
        self.off_diagonal().filter_map(|(_, _, d)| d.finite()).max()
    }

    /// `(u, v, D[u][v])` for u ≠ v in row-major order.
    pub fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, Dist)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v, self.get(u, v))))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.get(u, v) == self.get(v, u)))
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DistanceMatrix(n={})", self.n)?;
        for u in 0..self.n {
            let row: Vec<String> = self.row(u).iter().map(|d| d.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_diagonal_and_zero() {
        assert!(DistanceMatrix::from_options(&[vec![Some(1)]]).is_err());
        assert!(DistanceMatrix::from_options(&[vec![Some(0), Some(0)], vec![Some(1), Some(0)]]).is_err());
        assert!(DistanceMatrix::from_options(&[vec![Some(0), None], vec![Some(1), Some(0)]]).is_ok());
    }

    #[test]
    fn finite_values_are_sorted_and_distinct() {
        let m = DistanceMatrix::from_options(&[
            vec![Some(0), Some(6), Some(9)],
            vec![Some(6), Some(0), Some(9)],
            vec![Some(9), Some(11), Some(0)],
        ])
        .unwrap();
        assert_eq!(m.finite_values(), vec![6, 9, 11]);
        assert_eq!(m.max_finite(), Some(11));
    }
}
