use tgr_core::Strictness;
use tgr_core::{Dist, DistanceMatrix, RangeMatrix, Result, TemporalGraph};

use crate::budget::{SearchBudget, Verdict};
use crate::foremost::oracle_foremost_realizable;

/// Tries every determination of `r` in lexicographic order (undetermined
/// entries row-major, values ascending) and asks the exhaustive foremost
/// search about each. Unbounded ranges are cut down to the candidate times
/// of `r`, beyond which no realization needs to look.
pub fn oracle_ranged(r: &RangeMatrix, budget: SearchBudget) -> Result<Verdict<(TemporalGraph, DistanceMatrix)>> {
    r.validate()?;
    let n = r.n();
    let undet = r.undetermined();
    let times = r.candidate_times();
    let choices: Vec<Vec<u64>> = undet
        .iter()
        .map(|&(u, v)| {
            let e = r.get(u, v);
            match (e.lo, e.hi) {
                (Dist::Finite(a), Dist::Finite(b)) => (a..=b).collect(),
                _ => times.iter().copied().filter(|&t| e.contains_time(t)).collect(),
            }
        })
        .collect();
    let total = choices.iter().try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64));
    if total.is_none_or(|t| t > budget.max_determinations) || n > budget.max_vertices {
        return Ok(Verdict::BudgetExceeded);
    }
    let mut base = DistanceMatrix::unreachable(n);
    for (u, v, _) in DistanceMatrix::unreachable(n).off_diagonal() {
        let e = r.get(u, v);
        if e.is_determined() {
            base.set(u, v, e.lo);
        }
    }
    let mut pick = vec![0usize; undet.len()];
    let mut exceeded = false;
    loop {
        let mut d = base.clone();
        for (i, &(u, v)) in undet.iter().enumerate() {
            d.set(u, v, Dist::Finite(choices[i][pick[i]]));
        }
        match oracle_foremost_realizable(&d, Strictness::Strict, budget)? {
            Verdict::Yes(g) => return Ok(Verdict::Yes((g, d))),
            Verdict::BudgetExceeded => exceeded = true,
            Verdict::No => {}
        }
        // Odometer with the last undetermined entry turning fastest.
        let mut i = undet.len();
        loop {
            if i == 0 {
                return Ok(if exceeded { Verdict::BudgetExceeded } else { Verdict::No });
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tgr_core::{Finite, Range};

    #[test]
    fn picks_the_symmetric_value() {
        // D[1][2] = 2 and D[2][1] in 1..3: only 2 works.
        let rows = vec![
            vec![Range::exact(Finite(0)), Range::exact(Finite(2))],
            vec![Range::new(Finite(1), Finite(3)).unwrap(), Range::exact(Finite(0))],
        ];
        let r = RangeMatrix::from_rows(rows).unwrap();
        let Verdict::Yes((_, d)) = oracle_ranged(&r, SearchBudget::default()).unwrap() else { panic!() };
        assert_eq!(d.get(1, 0), Finite(2));
    }
}
