//! Reductions from CNF satisfiability to foremost realization with one
//! label per edge, to ranged foremost realization, and to shortest-path
//! realization.
//!
//! Constructed instances number their vertices as follows: ⊤, ⊥, then v*
//! (shortest reduction only), then the literals x₁, x̄₁, x₂, x̄₂, …, then the
//! clauses in input order.

use tgr_core::{
    foremost_matrix, shortest_matrix, verify_ranged, Assignment, CnfFormula, DistanceMatrix, Error, Finite, Range,
    RangeMatrix, Result, Strictness, TemporalGraph,
};

/// Vertex numbering of a constructed instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatLayout {
    num_vars: usize,
    num_clauses: usize,
    specials: usize,
}

impl SatLayout {
    /// Layout of the foremost and ranged reductions.
    pub fn plain(f: &CnfFormula) -> Self {
        SatLayout { num_vars: f.num_vars(), num_clauses: f.clauses().len(), specials: 2 }
    }

    /// Layout of the shortest reduction, which adds v*.
    pub fn with_vstar(f: &CnfFormula) -> Self {
        SatLayout { specials: 3, ..Self::plain(f) }
    }

    pub fn n(&self) -> usize {
        self.specials + 2 * self.num_vars + self.num_clauses
    }

    pub fn top(&self) -> usize {
        0
    }

    pub fn bot(&self) -> usize {
        1
    }

    pub fn vstar(&self) -> Option<usize> {
        (self.specials == 3).then_some(2)
    }

    /// Vertex of a DIMACS literal.
    pub fn literal(&self, lit: i32) -> usize {
        self.specials + 2 * (lit.unsigned_abs() as usize - 1) + usize::from(lit < 0)
    }

    pub fn clause(&self, j: usize) -> usize {
        self.specials + 2 * self.num_vars + j
    }

    /// All literals in vertex order.
    pub fn literals(&self) -> impl Iterator<Item = i32> {
        (1..=self.num_vars as i32).flat_map(|x| [x, -x])
    }
}

fn check_no_tautology(f: &CnfFormula) -> Result<()> {
    for (j, c) in f.clauses().iter().enumerate() {
        if let Some(&lit) = c.iter().find(|&&lit| c.contains(&-lit)) {
            let x = lit.unsigned_abs();
            return Err(Error::InvalidInput(format!("clause {} contains both x{x} and ¬x{x}", j + 1)));
        }
    }
    Ok(())
}

fn check_both_polarities(f: &CnfFormula) -> Result<()> {
    for x in 1..=f.num_vars() as i32 {
        for lit in [x, -x] {
            if !f.clauses().iter().any(|c| c.contains(&lit)) {
                let sign = if lit > 0 { "" } else { "¬" };
                return Err(Error::InvalidInput(format!(
                    "literal {sign}x{x} occurs in no clause; every variable must occur in both polarities"
                )));
            }
        }
    }
    Ok(())
}

fn check_assignment(f: &CnfFormula, a: &Assignment) -> Result<()> {
    if a.0.len() != f.num_vars() {
        return Err(Error::InvalidInput(format!(
            "assignment has {} variables, formula has {}",
            a.0.len(),
            f.num_vars()
        )));
    }
    for (j, c) in f.clauses().iter().enumerate() {
        if !c.iter().any(|&lit| a.literal(lit)) {
            let lits: Vec<String> = c.iter().map(i32::to_string).collect();
            return Err(Error::InvalidInput(format!(
                "assignment leaves clause {} ({}) unsatisfied",
                j + 1,
                lits.join(" ")
            )));
        }
    }
    Ok(())
}

fn sym(d: &mut DistanceMatrix, u: usize, v: usize, x: u64) {
    d.set(u, v, Finite(x));
    d.set(v, u, Finite(x));
}

fn filled(n: usize, x: u64) -> DistanceMatrix {
    let mut d = DistanceMatrix::unreachable(n);
    for u in 0..n {
        for v in 0..n {
            if u != v {
                d.set(u, v, Finite(x));
            }
        }
    }
    d
}

/// Foremost matrix with entries in {1,2,3,4} that is realizable with one
/// label per edge iff `f` is satisfiable.
pub fn reduce_sat_to_foremost_single(f: &CnfFormula) -> Result<DistanceMatrix> {
    check_no_tautology(f)?;
    let l = SatLayout::plain(f);
    let mut d = filled(l.n(), 4);
    sym(&mut d, l.top(), l.bot(), 1);
    for a in l.literals() {
        sym(&mut d, l.literal(a), l.top(), 2);
        sym(&mut d, l.literal(a), l.bot(), 2);
        for b in l.literals() {
            if a.abs() != b.abs() {
                d.set(l.literal(a), l.literal(b), Finite(2));
            }
        }
    }
    for x in 1..=f.num_vars() as i32 {
        sym(&mut d, l.literal(x), l.literal(-x), 1);
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cv = l.clause(j);
        d.set(cv, l.top(), Finite(3));
        for &lit in c {
            sym(&mut d, cv, l.literal(lit), 2);
            d.set(l.literal(-lit), cv, Finite(2));
        }
    }
    Ok(d)
}

/// One label per pair of the complete graph, read off a satisfying
/// assignment.
pub fn witness_foremost_single(f: &CnfFormula, a: &Assignment) -> Result<TemporalGraph> {
    let d = reduce_sat_to_foremost_single(f)?;
    check_assignment(f, a)?;
    let l = SatLayout::plain(f);
    let n = l.n();
    let mut lab = vec![4u64; n * n];
    let mut put = |u: usize, v: usize, t: u64| {
        lab[u * n + v] = t;
        lab[v * n + u] = t;
    };
    put(l.top(), l.bot(), 1);
    for x in l.literals() {
        for y in l.literals() {
            if x.abs() != y.abs() {
                put(l.literal(x), l.literal(y), 2);
            }
        }
        if x > 0 {
            put(l.literal(x), l.literal(-x), 1);
        }
        if a.literal(x) {
            put(l.literal(x), l.bot(), 2);
            put(l.literal(x), l.top(), 3);
        } else {
            put(l.literal(x), l.top(), 2);
        }
    }
    for (j, c) in f.clauses().iter().enumerate() {
        for &lit in c {
            put(l.clause(j), l.literal(lit), 2);
        }
    }
    let mut g = TemporalGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_label(u, v, lab[u * n + v])?;
        }
    }
    if foremost_matrix(&g, Strictness::Strict) != d {
        return Err(Error::Internal("single-label witness does not realize the reduction matrix".into()));
    }
    Ok(g)
}

/// Range matrix with widths at most two and values at most 5 that is
/// realizable iff `f` is satisfiable.
pub fn reduce_sat_to_ranged(f: &CnfFormula) -> Result<RangeMatrix> {
    check_no_tautology(f)?;
    let l = SatLayout::plain(f);
    let n = l.n();
    let d = reduce_sat_to_ranged_exact(f, &l);
    let mut rows: Vec<Vec<Range>> = (0..n).map(|u| (0..n).map(|v| Range::exact(d.get(u, v))).collect()).collect();
    for lit in l.literals() {
        let x = l.literal(lit);
        rows[l.top()][x] = Range::new(Finite(2), Finite(3))?;
        rows[l.bot()][x] = Range::new(Finite(3), Finite(4))?;
    }
    RangeMatrix::from_rows(rows)
}

/// The determined part of the ranged reduction; the ⊤ and ⊥ rows towards
/// literals are overwritten by ranges.
fn reduce_sat_to_ranged_exact(f: &CnfFormula, l: &SatLayout) -> DistanceMatrix {
    let mut d = filled(l.n(), 5);
    for x in 1..=f.num_vars() as i32 {
        sym(&mut d, l.literal(x), l.literal(-x), 1);
    }
    for lit in l.literals() {
        d.set(l.literal(lit), l.top(), Finite(2));
        d.set(l.literal(lit), l.bot(), Finite(3));
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cv = l.clause(j);
        d.set(cv, l.top(), Finite(2));
        d.set(cv, l.bot(), Finite(3));
        for &lit in c {
            sym(&mut d, cv, l.literal(lit), 1);
            d.set(cv, l.literal(-lit), Finite(2));
        }
    }
    d
}

pub fn witness_ranged(f: &CnfFormula, a: &Assignment) -> Result<TemporalGraph> {
    let r = reduce_sat_to_ranged(f)?;
    check_assignment(f, a)?;
    let l = SatLayout::plain(f);
    let n = l.n();
    let mut g = TemporalGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_label(u, v, 5)?;
        }
    }
    for x in 1..=f.num_vars() as i32 {
        for t in 1..=4 {
            g.add_label(l.literal(x), l.literal(-x), t)?;
        }
        let (yes, no) = if a.literal(x) { (x, -x) } else { (-x, x) };
        g.add_label(l.literal(yes), l.top(), 2)?;
        g.add_label(l.literal(no), l.bot(), 3)?;
    }
    for (j, c) in f.clauses().iter().enumerate() {
        for &lit in c {
            g.add_label(l.literal(lit), l.clause(j), 1)?;
        }
    }
    if !verify_ranged(&g, &r)?.ok() {
        return Err(Error::Internal("ranged witness leaves a range".into()));
    }
    Ok(g)
}

/// Shortest-path matrix (hop counts of foremost-respecting journeys) that is
/// realizable iff `f` is satisfiable, under strict and non-strict semantics.
pub fn reduce_sat_to_shortest(f: &CnfFormula) -> Result<DistanceMatrix> {
    check_no_tautology(f)?;
    check_both_polarities(f)?;
    let l = SatLayout::with_vstar(f);
    let (top, bot) = (l.top(), l.bot());
    let vs = l.vstar().expect("shortest layout has v*");
    let mut d = DistanceMatrix::unreachable(l.n());
    sym(&mut d, bot, top, 2);
    sym(&mut d, vs, bot, 3);
    d.set(vs, top, Finite(4));
    d.set(top, vs, Finite(3));
    for a in l.literals() {
        let x = l.literal(a);
        sym(&mut d, x, top, 1);
        sym(&mut d, x, bot, 1);
        sym(&mut d, x, vs, 2);
        for b in l.literals() {
            if a != b {
                d.set(x, l.literal(b), Finite(if a == -b { 1 } else { 2 }));
            }
        }
    }
    for (j, c) in f.clauses().iter().enumerate() {
        let cv = l.clause(j);
        d.set(cv, top, Finite(3));
        d.set(top, cv, Finite(2));
        sym(&mut d, cv, bot, 2);
        sym(&mut d, cv, vs, 1);
        for k in 0..f.clauses().len() {
            if k != j {
                d.set(cv, l.clause(k), Finite(2));
            }
        }
        for x in 1..=f.num_vars() as i32 {
            for lit in [x, -x] {
                let hops = if c.contains(&lit) {
                    1
                } else if c.contains(&-lit) {
                    2
                } else {
                    3
                };
                sym(&mut d, cv, l.literal(lit), hops);
            }
        }
    }
    debug_assert!(d.entries().iter().all(|e| e.is_finite()));
    Ok(d)
}

pub fn witness_shortest(f: &CnfFormula, a: &Assignment) -> Result<TemporalGraph> {
    let d = reduce_sat_to_shortest(f)?;
    check_assignment(f, a)?;
    let l = SatLayout::with_vstar(f);
    let vs = l.vstar().expect("shortest layout has v*");
    let mut g = TemporalGraph::new(l.n());
    let mut put = |u: usize, v: usize, ts: &[u64]| -> Result<()> {
        for &t in ts {
            g.add_label(u, v, t)?;
        }
        Ok(())
    };
    for lit in l.literals() {
        let x = l.literal(lit);
        put(x, l.bot(), &[1, 2, 7, 8])?;
        if lit > 0 {
            put(x, l.literal(-lit), &[1, 4, 7])?;
        }
        let (at_top, at_clause) = if a.literal(lit) { (2, 3) } else { (5, 6) };
        put(x, l.top(), &[at_top])?;
        for (j, c) in f.clauses().iter().enumerate() {
            if c.contains(&lit) {
                put(x, l.clause(j), &[at_clause])?;
            }
        }
    }
    for j in 0..f.clauses().len() {
        put(vs, l.clause(j), &[1, 2, 7, 8])?;
    }
    for s in [Strictness::Strict, Strictness::NonStrict] {
        if shortest_matrix(&g, s) != d {
            return Err(Error::Internal(format!("shortest witness fails under {s:?} semantics")));
        }
    }
    Ok(g)
}
