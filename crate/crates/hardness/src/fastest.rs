//! Reduction from multicolored clique (with every pair of classes inducing
//! disjoint bicliques) to fastest-path realization, and its periodic lift.
//!
//! Vertex order of the constructed instance: s, s′, s″, t, t′, t″, then
//! x₁..x_{k+1}, then ℓ*, ℓ**, ℓ₁, ℓ′₁, …, ℓ_k, ℓ′_k, then the vertices of the
//! input graph in their original order.

use std::collections::BTreeMap;

use tgr_core::{fastest_matrix, DistanceMatrix, Error, Finite, Result, StaticGraph, Strictness, TemporalGraph};

use crate::mcc::MccInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FastestLayout {
    pub k: usize,
    /// Vertices of the input graph.
    pub nv: usize,
}

impl FastestLayout {
    pub const S: usize = 0;
    pub const S1: usize = 1;
    pub const S2: usize = 2;
    pub const T: usize = 3;
    pub const T1: usize = 4;
    pub const T2: usize = 5;

    pub fn n(&self) -> usize {
        3 * self.k + 9 + self.nv
    }

    /// `x(0)` is x₁.
    pub fn x(&self, i: usize) -> usize {
        6 + i
    }

    pub fn l_star(&self) -> usize {
        self.k + 7
    }

    pub fn l_star2(&self) -> usize {
        self.k + 8
    }

    /// `l(0)` is ℓ₁.
    pub fn l(&self, i: usize) -> usize {
        self.k + 9 + 2 * i
    }

    pub fn l_prime(&self, i: usize) -> usize {
        self.k + 10 + 2 * i
    }

    /// Image of input vertex `v`.
    pub fn v(&self, v: usize) -> usize {
        3 * self.k + 9 + v
    }

    pub fn xs(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.k).map(|i| self.x(i))
    }

    pub fn ls(&self) -> impl Iterator<Item = usize> {
        self.k + 7..3 * self.k + 9
    }

    pub fn vs(&self) -> impl Iterator<Item = usize> {
        3 * self.k + 9..self.n()
    }
}

/// Edges of the constructed graph, i.e. the entries equal to 1.
fn underlying(l: &FastestLayout, inst: &MccInstance) -> Result<StaticGraph> {
    use FastestLayout as F;
    let n = l.n();
    let mut g = StaticGraph::new(n);
    let ls: Vec<usize> = l.ls().collect();
    for &a in &ls {
        for q in 0..n {
            if q != a && q != F::S && q != F::T {
                g.add_edge(a, q)?;
            }
        }
    }
    for (hub, far) in [(F::S1, F::T), (F::S2, F::T), (F::T1, F::S), (F::T2, F::S)] {
        for q in 0..n {
            if q != hub && q != far {
                g.add_edge(hub, q)?;
            }
        }
    }
    for v in 0..l.nv {
        let c = inst.class[v];
        g.add_edge(l.x(c), l.v(v))?;
        g.add_edge(l.x(c + 1), l.v(v))?;
    }
    g.add_edge(F::S, l.x(0))?;
    g.add_edge(F::T, l.x(l.k))?;
    Ok(g)
}

fn check(inst: &MccInstance) -> Result<FastestLayout> {
    inst.validate()?;
    inst.check_bicliques()?;
    Ok(FastestLayout { k: inst.k, nv: inst.graph.n() })
}

/// Fastest-path matrix with entries in {1, 2, 2k+2, 2k+3, 4k+5}, realizable
/// (with one label per edge) iff `inst` has a multicolored k-clique.
pub fn reduce_mcc_to_fastest(inst: &MccInstance) -> Result<DistanceMatrix> {
    use FastestLayout as F;
    let l = check(inst)?;
    let k = l.k as u64;
    let n = l.n();
    let g = underlying(&l, inst)?;
    let mut d = DistanceMatrix::unreachable(n);
    for u in 0..n {
        for v in 0..n {
            if u != v {
                d.set(u, v, Finite(if g.has_edge(u, v) { 1 } else { 2 }));
            }
        }
    }
    let mut sym = |u: usize, v: usize, x: u64| {
        d.set(u, v, Finite(x));
        d.set(v, u, Finite(x));
    };
    for q in [F::T1, F::T2].into_iter().chain(l.ls()) {
        sym(F::S, q, 2 * k + 3);
    }
    for q in [F::S1, F::S2].into_iter().chain(l.ls()) {
        sym(F::T, q, 2 * k + 3);
    }
    for u in 0..l.nv {
        for v in u + 1..l.nv {
            if !inst.graph.has_edge(u, v) {
                sym(l.v(u), l.v(v), 2 * k + 3);
            }
        }
    }
    d.set(F::S, F::T, Finite(2 * k + 2));
    d.set(F::T, F::S, Finite(4 * k + 5));
    Ok(d)
}

/// Labels handed out block by block; each edge gets exactly one.
struct Blocks<'a> {
    allowed: &'a StaticGraph,
    labels: BTreeMap<(usize, usize), u64>,
    width: u64,
    next: u64,
}

impl Blocks<'_> {
    /// Start of a fresh block.
    fn open(&mut self) -> u64 {
        let a = self.next;
        self.next += self.width;
        a
    }

    fn put(&mut self, u: usize, v: usize, t: u64) -> Result<()> {
        if !self.allowed.has_edge(u, v) {
            return Err(Error::Internal(format!("{{{},{}}} is not an edge of the construction", u + 1, v + 1)));
        }
        if self.labels.insert((u.min(v), u.max(v)), t).is_some() {
            return Err(Error::Internal(format!("{{{},{}}} labelled twice", u + 1, v + 1)));
        }
        Ok(())
    }
}

/// One label per edge, built from a multicolored clique given in any order.
pub fn witness_fastest(inst: &MccInstance, clique: &[usize]) -> Result<TemporalGraph> {
    use FastestLayout as F;
    let d = reduce_mcc_to_fastest(inst)?;
    let chosen = inst.check_clique(clique)?;
    let l = FastestLayout { k: inst.k, nv: inst.graph.n() };
    let k = l.k as u64;
    let g = underlying(&l, inst)?;
    let mut b = Blocks { allowed: &g, labels: BTreeMap::new(), width: 10 * k + 20, next: 1 };

    let a = b.open();
    b.put(F::S, F::S1, a + 1)?;
    b.put(F::T, F::T1, a + 1)?;
    b.put(F::S, F::S2, a + 4 * k + 5)?;
    b.put(F::T, F::T2, a + 4 * k + 5)?;
    for q in l.vs().chain(l.xs()) {
        b.put(F::S1, q, a + 2)?;
        b.put(F::T1, q, a + 2)?;
        b.put(F::S2, q, a + 4 * k + 4)?;
        b.put(F::T2, q, a + 4 * k + 4)?;
    }
    for (p, q) in [(F::S1, F::T1), (F::S1, F::T2), (F::S2, F::T1), (F::S2, F::T2)] {
        b.put(p, q, a + 2 * k + 3)?;
    }
    for z in [F::S1, F::T1, F::S2, F::T2] {
        for q in l.ls() {
            b.put(q, z, a + 2 * k + 3)?;
        }
    }

    let a = b.open();
    let mut path = vec![F::S];
    for (i, &v) in chosen.iter().enumerate() {
        path.extend([l.x(i), l.v(v)]);
    }
    path.extend([l.x(l.k), F::T]);
    for (i, w) in path.windows(2).enumerate() {
        b.put(w[0], w[1], a + i as u64)?;
    }

    let a = b.open();
    for v in l.vs() {
        b.put(v, l.l_star(), a + 1)?;
        b.put(v, l.l_star2(), a + 2 * k + 3)?;
    }
    for x in l.xs() {
        b.put(x, l.l_star(), a)?;
        b.put(x, l.l_star2(), a + 2 * k + 4)?;
    }
    b.put(l.l_star(), l.l_star2(), a + 2)?;

    for i in 0..=l.k {
        let hub = if i < l.k { l.l(i) } else { l.l_prime(0) };
        let a = b.open();
        b.put(l.x(i), hub, a)?;
        for x in l.xs().filter(|&x| x != l.x(i)) {
            b.put(hub, x, a + 1)?;
        }
    }

    for i in 0..l.k {
        for p in 0..l.k {
            for q in p + 1..l.k {
                if (p + q) % l.k != i {
                    continue;
                }
                for (left, right) in inst.components(p, q) {
                    for (hub, first, second) in [(l.l(i), &left, &right), (l.l_prime(i), &right, &left)] {
                        let a = b.open();
                        for &v in first {
                            b.put(l.v(v), hub, a)?;
                        }
                        for &v in second {
                            b.put(l.v(v), hub, a + 1)?;
                        }
                    }
                }
            }
        }
    }

    let a = b.open();
    for (u, v) in g.edges() {
        if !b.labels.contains_key(&(u, v)) {
            b.put(u, v, a)?;
        }
    }

    let mut out = TemporalGraph::new(l.n());
    for (&(u, v), &t) in &b.labels {
        out.add_label(u, v, t)?;
    }
    if fastest_matrix(&out, Strictness::Strict) != d {
        return Err(Error::Internal("fastest witness does not realize the reduction matrix".into()));
    }
    Ok(out)
}

/// The same matrix together with a period Δ = 2·n²·max D + 1, large enough
/// that no journey profits from wrapping around.
pub fn lift_fastest_to_periodic(d: &DistanceMatrix) -> Result<(DistanceMatrix, u64)> {
    d.validate()?;
    let max = d
        .max_finite()
        .filter(|&m| m > 0)
        .ok_or_else(|| Error::InvalidInput("matrix has no finite off-diagonal entry".into()))?;
    let n = d.n() as u64;
    let period = n
        .checked_mul(n)
        .and_then(|x| x.checked_mul(2))
        .and_then(|x| x.checked_mul(max))
        .and_then(|x| x.checked_add(1))
        .filter(|&p| p < u64::MAX)
        .ok_or_else(|| Error::InvalidInput("period overflows".into()))?;
    Ok((d.clone(), period))
}

/// `g`'s labels repeated with period `period`.
pub fn periodic_witness(g: &TemporalGraph, period: u64) -> Result<TemporalGraph> {
    let mut out = TemporalGraph::periodic(g.n(), period)?;
    for (u, v, ts) in g.edges() {
        for &t in ts {
            out.add_label(u, v, t)?;
        }
    }
    Ok(out)
}
