//! Multicolored clique instances: a graph whose vertices are split into k
//! independent classes, asking for a clique with one vertex per class.
//!
//! File format (`.mcc`): `n k`, then n class ids in `1..=k`, then one `u v`
//! line per edge. A clique file (`.clq`) lists k vertex ids.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tgr_core::io::{read_file, Source};
use tgr_core::{Error, Result, StaticGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MccInstance {
    pub graph: StaticGraph,
    pub k: usize,
    /// 0-based class of every vertex.
    pub class: Vec<usize>,
    /// A multicolored clique known to exist, ordered by class.
    pub planted: Option<Vec<usize>>,
}

impl MccInstance {
    pub fn new(graph: StaticGraph, k: usize, class: Vec<usize>) -> Result<Self> {
        let inst = MccInstance { graph, k, class, planted: None };
        inst.validate()?;
        Ok(inst)
    }

    /// Class ids in range and every class an independent set.
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidInput("k must be positive".into()));
        }
        if self.class.len() != self.graph.n() {
            return Err(Error::DimensionMismatch { expected: self.graph.n(), got: self.class.len() });
        }
        if let Some(v) = self.class.iter().position(|&c| c >= self.k) {
            return Err(Error::InvalidInput(format!(
                "vertex {} has class {} outside 1..={}",
                v + 1,
                self.class[v] + 1,
                self.k
            )));
        }
        if let Some((u, v)) = self.graph.edges().find(|&(u, v)| self.class[u] == self.class[v]) {
            return Err(Error::InvalidInput(format!(
                "edge {{{},{}}} lies inside class {}",
                u + 1,
                v + 1,
                self.class[u] + 1
            )));
        }
        Ok(())
    }

    pub fn members(&self, a: usize) -> Vec<usize> {
        (0..self.class.len()).filter(|&v| self.class[v] == a).collect()
    }

    /// Connected components of the subgraph between classes `a` and `b` that
    /// contain an edge, as (part in `a`, part in `b`).
    pub fn components(&self, a: usize, b: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.graph.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in self.members(a) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let (mut left, mut right) = (Vec::new(), Vec::new());
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                if self.class[u] == a { &mut left } else { &mut right }.push(u);
                for &w in self.graph.neighbors(u) {
                    if !seen[w] && (self.class[w] == a || self.class[w] == b) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if !right.is_empty() {
                left.sort_unstable();
                right.sort_unstable();
                out.push((left, right));
            }
        }
        out
    }

    /// Every subgraph between two classes must be a disjoint union of
    /// complete bipartite graphs.
    pub fn check_bicliques(&self) -> Result<()> {
        for a in 0..self.k {
            for b in a + 1..self.k {
                for (left, right) in self.components(a, b) {
                    for &u in &left {
                        if let Some(&v) = right.iter().find(|&&v| !self.graph.has_edge(u, v)) {
                            return Err(Error::InvalidInput(format!(
                                "classes {} and {} do not form disjoint bicliques: {} and {} share a component but are not adjacent",
                                a + 1,
                                b + 1,
                                u + 1,
                                v + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that `clique` has one vertex per class, all pairwise adjacent,
    /// and returns it ordered by class.
    pub fn check_clique(&self, clique: &[usize]) -> Result<Vec<usize>> {
        if clique.len() != self.k {
            return Err(Error::InvalidInput(format!("clique has {} vertices, expected {}", clique.len(), self.k)));
        }
        let mut by_class: Vec<Option<usize>> = vec![None; self.k];
        for &v in clique {
            let c = *self.class.get(v).ok_or_else(|| {
                Error::InvalidInput(format!("clique vertex {} outside 1..={}", v + 1, self.class.len()))
            })?;
            if let Some(w) = by_class[c].replace(v) {
                return Err(Error::InvalidInput(format!(
                    "clique vertices {} and {} are both in class {}",
                    w + 1,
                    v + 1,
                    c + 1
                )));
            }
        }
        let order: Vec<usize> = by_class.into_iter().map(|v| v.expect("k distinct classes")).collect();
        for (i, &u) in order.iter().enumerate() {
            for &v in &order[i + 1..] {
                if !self.graph.has_edge(u, v) {
                    return Err(Error::InvalidInput(format!(
                        "clique vertices {} and {} are not adjacent",
                        u + 1,
                        v + 1
                    )));
                }
            }
        }
        Ok(order)
    }
}

pub fn parse_mcc(text: &str, file: &Path) -> Result<MccInstance> {
    let mut src = Source::new(text, file, &[]);
    let (line, toks) = src.next_line("header `n k`")?;
    src.arity(line, &toks, 2, "header `n k`")?;
    let n = src.int(line, toks[0])? as usize;
    let k = src.int(line, toks[1])? as usize;
    if k == 0 {
        return Err(src.error(line, toks[1], "k must be positive"));
    }
    let (line, toks) = src.next_line("class ids")?;
    src.arity(line, &toks, n, &format!("{n} class ids"))?;
    let mut class = Vec::with_capacity(n);
    for t in &toks {
        let c = src.int(line, t)? as usize;
        if c == 0 || c > k {
            return Err(src.error(line, t, format!("class outside 1..={k}")));
        }
        class.push(c - 1);
    }
    let mut graph = StaticGraph::new(n);
    for (line, toks) in src.remaining() {
        src.arity(line, &toks, 2, "`u v`")?;
        let u = src.vertex(line, toks[0], n)?;
        let v = src.vertex(line, toks[1], n)?;
        if u == v {
            return Err(src.error(line, toks[1], "self-loop"));
        }
        if class[u] == class[v] {
            return Err(src.error(line, toks[1], format!("edge inside class {}", class[u] + 1)));
        }
        graph.add_edge(u, v)?;
    }
    MccInstance::new(graph, k, class)
}

pub fn write_mcc(inst: &MccInstance) -> String {
    let mut out = format!("{} {}\n", inst.graph.n(), inst.k);
    let ids: Vec<String> = inst.class.iter().map(|c| (c + 1).to_string()).collect();
    out.push_str(&ids.join(" "));
    out.push('\n');
    for (u, v) in inst.graph.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn read_mcc(path: &Path) -> Result<MccInstance> {
    parse_mcc(&read_file(path)?, path)
}

/// Vertex ids separated by whitespace, possibly over several lines.
pub fn parse_clique(text: &str, file: &Path, n: usize) -> Result<Vec<usize>> {
    let mut src = Source::new(text, file, &[]);
    let mut out = Vec::new();
    for (line, toks) in src.remaining() {
        for t in toks {
            out.push(src.vertex(line, t, n)?);
        }
    }
    Ok(out)
}

pub fn write_clique(clique: &[usize]) -> String {
    let ids: Vec<String> = clique.iter().map(|v| (v + 1).to_string()).collect();
    format!("{}\n", ids.join(" "))
}

pub fn read_clique(path: &Path, n: usize) -> Result<Vec<usize>> {
    parse_clique(&read_file(path)?, path, n)
}

/// Random instance with `k` classes of `class_size` vertices, class-major.
///
/// For every pair of classes each vertex joins one of `class_size` groups and
/// about half the groups become complete bipartite graphs, so the biclique
/// condition holds by construction. With `planted`, one vertex per class is
/// put into an active group for every pair, forming a multicolored clique.
pub fn gen_mcc_instance(k: usize, class_size: usize, planted: bool, seed: u64) -> Result<MccInstance> {
    if k < 2 || class_size == 0 {
        return Err(Error::InvalidInput(format!("need k >= 2 and class size >= 1, got k={k}, size={class_size}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = k * class_size;
    let class: Vec<usize> = (0..n).map(|v| v / class_size).collect();
    let clique: Option<Vec<usize>> =
        planted.then(|| (0..k).map(|a| a * class_size + rng.gen_range(0..class_size)).collect());
    let mut graph = StaticGraph::new(n);
    for a in 0..k {
        for b in a + 1..k {
            let active: Vec<bool> = (0..class_size).map(|_| rng.gen_bool(0.5)).collect();
            let mut group = vec![0usize; n];
            for v in (a * class_size..(a + 1) * class_size).chain(b * class_size..(b + 1) * class_size) {
                group[v] = rng.gen_range(0..class_size);
            }
            let mut active = active;
            if let Some(c) = &clique {
                group[c[a]] = 0;
                group[c[b]] = 0;
                active[0] = true;
            }
            for u in a * class_size..(a + 1) * class_size {
                for v in b * class_size..(b + 1) * class_size {
                    if group[u] == group[v] && active[group[u]] {
                        graph.add_edge(u, v)?;
                    }
                }
            }
        }
    }
    let mut inst = MccInstance::new(graph, k, class)?;
    inst.planted = clique;
    Ok(inst)
}
