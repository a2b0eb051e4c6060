use crate::error::{Error, Result};

/// A CNF formula with DIMACS-style literals: variable `i` (1-based) appears
/// as `i` or `-i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (i, c) in clauses.iter().enumerate() {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidInput(format!(
                        "clause {} has literal {lit} outside 1..={num_vars}",
                        i + 1
                    )));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&lit| a.literal(lit)))
    }
}

/// Truth values indexed by 0-based variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }

    /// Value of a DIMACS literal.
    pub fn literal(&self, lit: i32) -> bool {
        let v = self.0[lit.unsigned_abs() as usize - 1];
        if lit > 0 {
            v
        } else {
            !v
        }
    }
}
