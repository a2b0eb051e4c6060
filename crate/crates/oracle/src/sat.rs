use tgr_core::{Assignment, CnfFormula, Error, Result};

/// The first satisfying assignment in lexicographic order (variable 1 most
/// significant, false before true), or `None`. At most 20 variables.
pub fn sat_solve_brute(f: &CnfFormula) -> Result<Option<Assignment>> {
    let n = f.num_vars();
    if n > 20 {
        return Err(Error::Guard(format!("{n} variables, limit 20")));
    }
    for code in 0u32..1 << n {
        let a = Assignment((0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect());
        if f.satisfied_by(&a) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_formulas() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        assert_eq!(sat_solve_brute(&f).unwrap(), Some(Assignment(vec![true])));
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(sat_solve_brute(&f).unwrap(), None);
        let f = CnfFormula::new(2, vec![vec![1, 2], vec![-1]]).unwrap();
        assert_eq!(sat_solve_brute(&f).unwrap(), Some(Assignment(vec![false, true])));
        assert!(sat_solve_brute(&CnfFormula::new(21, vec![]).unwrap()).is_err());
    }
}
