use tgr_core::{foremost_matrix, DistanceMatrix, Error, Finite, Result, Strictness, TemporalGraph};

/// A star on `n` vertices centred at vertex 0 whose foremost matrix has
/// (n−1) + (n−1)(n−2)/2 distinct finite entries, so every realization needs
/// that many labels.
///
/// In 1-based terms edge {1, v} carries n·v and n·j + v for v < j ≤ n.
pub fn gen_lower_bound_family(n: usize) -> Result<(TemporalGraph, DistanceMatrix)> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("lower-bound family needs n >= 2, got {n}")));
    }
    let big = n as u64;
    let mut g = TemporalGraph::new(n);
    for v in 2..=big {
        g.add_label(0, v as usize - 1, big * v)?;
        for j in v + 1..=big {
            g.add_label(0, v as usize - 1, big * j + v)?;
        }
    }
    let mut d = DistanceMatrix::unreachable(n);
    for u in 1..=big {
        for v in 1..=big {
            let val = if u == v {
                continue;
            } else if u == 1 || v == 1 {
                big * u.max(v)
            } else if u > v {
                big * u + v
            } else {
                big * v
            };
            d.set(u as usize - 1, v as usize - 1, Finite(val));
        }
    }
    if foremost_matrix(&g, Strictness::Strict) != d {
        return Err(Error::Internal("lower-bound star does not realize its matrix".into()));
    }
    Ok((g, d))
}
