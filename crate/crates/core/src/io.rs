//! Plain-text file formats. Vertices are 1-based on disk and 0-based in
//! memory. `#` starts a comment in every format; blank lines are ignored.
//!
//! | ext   | layout                                                        |
//! |-------|---------------------------------------------------------------|
//! | `.tg` | `n Δ` (Δ = 0 for aperiodic), then `u v t1,t2,…` with `u < v`  |
//! | `.dm` | `n`, then n rows of n tokens, each an integer or `inf`        |
//! | `.rm` | as `.dm`, tokens `a`, `inf`, `a..b` or `a..inf`               |
//! | `.g`  | `n`, then `u v` per edge                                      |
//! | `.cnf`| DIMACS: `p cnf V C`, clauses terminated by `0`, `c` comments  |
//! | `.asg`| signed literals terminated by `0`                             |

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::cnf::{Assignment, CnfFormula};
use crate::dist::{Dist, Finite, Inf};
use crate::error::{Error, Result};
use crate::graph::{StaticGraph, TemporalGraph};
use crate::matrix::DistanceMatrix;
use crate::range::{Range, RangeMatrix};

/// Line-oriented reader that tracks positions for error messages.
pub struct Source<'a> {
    file: PathBuf,
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Source<'a> {
    /// Splits `text` into non-empty token lines, dropping `#` comments and
    /// any line whose first token is in `comment_words`.
    pub fn new(text: &'a str, file: &Path, comment_words: &[&str]) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let line = line.split('#').next().unwrap_or("");
                let toks: Vec<&str> = line.split_whitespace().collect();
                match toks.first() {
                    None => None,
                    Some(t) if comment_words.contains(t) => None,
                    Some(_) => Some((i + 1, toks)),
                }
            })
            .collect();
        Source { file: file.to_path_buf(), lines, pos: 0 }
    }

    pub fn error(&self, line: usize, token: &str, msg: impl Into<String>) -> Error {
        Error::Parse { file: self.file.clone(), line, token: token.to_string(), msg: msg.into() }
    }

    /// Next token line, or an error naming what was expected.
    pub fn next_line(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.lines.get(self.pos) {
            Some(l) => {
                self.pos += 1;
                Ok(l.clone())
            }
            None => {
                let last = self.lines.last().map_or(0, |l| l.0);
                Err(self.error(last, "<eof>", format!("expected {what}")))
            }
        }
    }

    pub fn remaining(&mut self) -> Vec<(usize, Vec<&'a str>)> {
        let rest = self.lines[self.pos..].to_vec();
        self.pos = self.lines.len();
        rest
    }

    pub fn expect_end(&mut self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some((line, toks)) => Err(self.error(*line, toks[0], "unexpected trailing content")),
            None => Ok(()),
        }
    }

    pub fn int(&self, line: usize, tok: &str) -> Result<u64> {
        match tok.parse::<u64>() {
            Ok(x) if x < u64::MAX => Ok(x),
            _ => Err(self.error(line, tok, "expected a non-negative integer")),
        }
    }

    /// A 1-based vertex id in `1..=n`, returned 0-based.
    pub fn vertex(&self, line: usize, tok: &str, n: usize) -> Result<usize> {
        let x = self.int(line, tok)?;
        if x == 0 || x > n as u64 {
            return Err(self.error(line, tok, format!("vertex outside 1..={n}")));
        }
        Ok(x as usize - 1)
    }

    pub fn arity(&self, line: usize, toks: &[&str], want: usize, what: &str) -> Result<()> {
        if toks.len() != want {
            let tok = toks.get(want).or(toks.last()).copied().unwrap_or("");
            return Err(self.error(line, tok, format!("expected {what}")));
        }
        Ok(())
    }

    /// A header line holding exactly one count.
    pub fn count_header(&mut self, what: &str) -> Result<usize> {
        let (line, toks) = self.next_line(what)?;
        self.arity(line, &toks, 1, what)?;
        Ok(self.int(line, toks[0])? as usize)
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

// ---- temporal graphs ----

pub fn parse_tg(text: &str, file: &Path) -> Result<TemporalGraph> {
    let mut src = Source::new(text, file, &[]);
    let (line, toks) = src.next_line("header `n Δ`")?;
    src.arity(line, &toks, 2, "header `n Δ`")?;
    let n = src.int(line, toks[0])? as usize;
    let period = src.int(line, toks[1])?;
    let mut g = if period == 0 { TemporalGraph::new(n) } else { TemporalGraph::periodic(n, period)? };
    for (line, toks) in src.remaining() {
        src.arity(line, &toks, 3, "`u v t1,t2,...`")?;
        let u = src.vertex(line, toks[0], n)?;
        let v = src.vertex(line, toks[1], n)?;
        if u >= v {
            return Err(src.error(line, toks[1], "edges are written with u < v"));
        }
        if !g.labels(u, v).is_empty() {
            return Err(src.error(line, toks[0], "edge listed twice"));
        }
        let mut prev = 0;
        for t in toks[2].split(',') {
            let x = src.int(line, t)?;
            if x == 0 {
                return Err(src.error(line, t, "labels must be positive"));
            }
            if x <= prev {
                return Err(src.error(line, t, "labels must be strictly increasing"));
            }
            if period > 0 && x > period {
                return Err(src.error(line, t, format!("label exceeds the period {period}")));
            }
            prev = x;
            g.add_label(u, v, x)?;
        }
    }
    Ok(g)
}

pub fn write_tg(g: &TemporalGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.period().unwrap_or(0));
    for (u, v, labels) in g.edges() {
        let ls: Vec<String> = labels.iter().map(u64::to_string).collect();
        writeln!(out, "{} {} {}", u + 1, v + 1, ls.join(",")).unwrap();
    }
    out
}

pub fn read_tg(path: &Path) -> Result<TemporalGraph> {
    parse_tg(&read_file(path)?, path)
}

// ---- matrices ----

fn parse_grid<'a, T>(
    text: &'a str,
    file: &Path,
    mut token: impl FnMut(&Source, usize, &str) -> Result<T>,
) -> Result<(Vec<Vec<T>>, Source<'a>)> {
    let mut src = Source::new(text, file, &[]);
    let n = src.count_header("header `n`")?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, toks) = src.next_line("a matrix row")?;
        src.arity(line, &toks, n, &format!("{n} entries"))?;
        rows.push(toks.iter().map(|t| token(&src, line, t)).collect::<Result<Vec<T>>>()?);
    }
    src.expect_end()?;
    Ok((rows, src))
}

fn dist_token(src: &Source, line: usize, tok: &str) -> Result<Dist> {
    if tok == "inf" {
        Ok(Inf)
    } else {
        Ok(Finite(src.int(line, tok)?))
    }
}

/// Rewraps a matrix validation failure with the position of entry (u, v).
fn locate(src: &Source, u: usize, v: usize, e: Error) -> Error {
    match src.lines.get(u + 1) {
        Some((line, toks)) => src.error(*line, toks.get(v).copied().unwrap_or(""), e.to_string()),
        None => e,
    }
}

fn first_bad_dist(rows: &[Vec<Dist>]) -> Option<(usize, usize)> {
    (0..rows.len())
        .flat_map(|u| (0..rows.len()).map(move |v| (u, v)))
        .find(|&(u, v)| (u == v) != (rows[u][v] == Dist::ZERO))
}

pub fn parse_dm(text: &str, file: &Path) -> Result<DistanceMatrix> {
    let (rows, src) = parse_grid(text, file, dist_token)?;
    let bad = first_bad_dist(&rows);
    DistanceMatrix::from_rows(rows).map_err(|e| match bad {
        Some((u, v)) => locate(&src, u, v, e),
        None => e,
    })
}

pub fn write_dm(d: &DistanceMatrix) -> String {
    let mut out = format!("{}\n", d.n());
    for u in 0..d.n() {
        let row: Vec<String> = d.row(u).iter().map(Dist::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn read_dm(path: &Path) -> Result<DistanceMatrix> {
    parse_dm(&read_file(path)?, path)
}

fn range_token(src: &Source, line: usize, tok: &str) -> Result<Range> {
    match tok.split_once("..") {
        None => Ok(Range::exact(dist_token(src, line, tok)?)),
        Some((a, b)) => {
            let lo = Finite(src.int(line, a)?);
            let hi = dist_token(src, line, b)?;
            if lo == Dist::ZERO || lo >= hi {
                return Err(src.error(line, tok, "a range needs 1 ≤ a < b"));
            }
            Ok(Range { lo, hi })
        }
    }
}

pub fn parse_rm(text: &str, file: &Path) -> Result<RangeMatrix> {
    let (rows, src) = parse_grid(text, file, range_token)?;
    let n = rows.len();
    let bad = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| (u == v) != (rows[u][v].lo == Dist::ZERO) || (u == v && !rows[u][v].is_determined()));
    RangeMatrix::from_rows(rows).map_err(|e| match bad {
        Some((u, v)) => locate(&src, u, v, e),
        None => e,
    })
}

pub fn write_rm(r: &RangeMatrix) -> String {
    let mut out = format!("{}\n", r.n());
    for u in 0..r.n() {
        let row: Vec<String> = (0..r.n()).map(|v| r.get(u, v).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn read_rm(path: &Path) -> Result<RangeMatrix> {
    parse_rm(&read_file(path)?, path)
}

// ---- static graphs ----

pub fn parse_g(text: &str, file: &Path) -> Result<StaticGraph> {
    let mut src = Source::new(text, file, &[]);
    let n = src.count_header("header `n`")?;
    let mut g = StaticGraph::new(n);
    for (line, toks) in src.remaining() {
        src.arity(line, &toks, 2, "`u v`")?;
        let u = src.vertex(line, toks[0], n)?;
        let v = src.vertex(line, toks[1], n)?;
        if u == v {
            return Err(src.error(line, toks[1], "self-loop"));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn write_g(g: &StaticGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn read_g(path: &Path) -> Result<StaticGraph> {
    parse_g(&read_file(path)?, path)
}

// ---- CNF ----

pub fn parse_cnf(text: &str, file: &Path) -> Result<CnfFormula> {
    let mut src = Source::new(text, file, &["c", "%"]);
    let (line, toks) = src.next_line("header `p cnf V C`")?;
    if toks.len() != 4 || toks[0] != "p" || toks[1] != "cnf" {
        return Err(src.error(line, toks[0], "expected header `p cnf V C`"));
    }
    let num_vars = src.int(line, toks[2])? as usize;
    let num_clauses = src.int(line, toks[3])? as usize;
    let mut clauses = Vec::new();
    let mut cur = Vec::new();
    let mut last = line;
    for (line, toks) in src.remaining() {
        last = line;
        for t in toks {
            let lit: i32 = t.parse().map_err(|_| src.error(line, t, "expected a literal"))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut cur));
            } else if lit.unsigned_abs() as usize > num_vars {
                return Err(src.error(line, t, format!("variable outside 1..={num_vars}")));
            } else {
                cur.push(lit);
            }
        }
    }
    if !cur.is_empty() {
        return Err(src.error(last, "<eof>", "last clause is not terminated by 0"));
    }
    if clauses.len() != num_clauses {
        return Err(src.error(
            line,
            toks[3],
            format!("header promises {num_clauses} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(num_vars, clauses)
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.clauses() {
        for lit in c {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}

pub fn read_cnf(path: &Path) -> Result<CnfFormula> {
    parse_cnf(&read_file(path)?, path)
}

/// Reads signed literals up to a terminating `0`. Variables that are not
/// mentioned are false.
pub fn parse_assignment(text: &str, file: &Path, num_vars: usize) -> Result<Assignment> {
    let mut src = Source::new(text, file, &["c", "s"]);
    let mut vals: Vec<Option<bool>> = vec![None; num_vars];
    let mut done = false;
    for (line, toks) in src.remaining() {
        for t in toks {
            if t == "v" {
                continue;
            }
            if done {
                return Err(src.error(line, t, "content after the terminating 0"));
            }
            let lit: i64 = t.parse().map_err(|_| src.error(line, t, "expected a literal"))?;
            if lit == 0 {
                done = true;
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > num_vars {
                return Err(src.error(line, t, format!("variable outside 1..={num_vars}")));
            }
            let val = lit > 0;
            if vals[var - 1].is_some_and(|old| old != val) {
                return Err(src.error(line, t, "variable assigned both ways"));
            }
            vals[var - 1] = Some(val);
        }
    }
    if !done {
        let line = src.lines.last().map_or(0, |l| l.0);
        return Err(src.error(line, "<eof>", "assignment is not terminated by 0"));
    }
    Ok(Assignment(vals.into_iter().map(|v| v.unwrap_or(false)).collect()))
}

pub fn write_assignment(a: &Assignment) -> String {
    let mut out = String::new();
    for (i, &b) in a.0.iter().enumerate() {
        let lit = i as i64 + 1;
        write!(out, "{} ", if b { lit } else { -lit }).unwrap();
    }
    out.push_str("0\n");
    out
}
