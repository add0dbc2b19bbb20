//! CFCN* coloring of split graphs: always at most 2 colors, with an exact
//! characterization of the 1-color case.

use crate::graph::{Coloring, Graph};
use crate::{Error, Result};

/// Checks that `(clique, independent)` partitions the vertices of `g` into
/// a clique and an independent set.
pub fn validate_split_partition(
    g: &Graph,
    clique: &[usize],
    independent: &[usize],
) -> Result<()> {
    let mut seen = vec![0u8; g.n()];
    for &v in clique {
        if v >= g.n() {
            return Err(Error::InvalidSplitPartition(format!(
                "vertex {v} out of range"
            )));
        }
        seen[v] += 1;
    }
    for &v in independent {
        if v >= g.n() {
            return Err(Error::InvalidSplitPartition(format!(
                "vertex {v} out of range"
            )));
        }
        seen[v] += 1;
    }
    if seen.iter().any(|&s| s != 1) {
        return Err(Error::InvalidSplitPartition(
            "parts do not partition the vertex set".to_string(),
        ));
    }
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidSplitPartition(format!(
                    "clique part misses edge {u}-{v}"
                )));
            }
        }
    }
    for (i, &u) in independent.iter().enumerate() {
        for &v in &independent[i + 1..] {
            if g.has_edge(u, v) {
                return Err(Error::InvalidSplitPartition(format!(
                    "independent part contains edge {u}-{v}"
                )));
            }
        }
    }
    Ok(())
}

/// CFCN* colors a connected split graph, returning the chromatic number
/// (1 or 2) together with a witness coloring.
///
/// One color suffices exactly when the graph has a universal vertex (color
/// it alone) or every clique vertex has exactly one independent neighbor
/// (color the independent set). Otherwise the smallest clique vertex gets
/// color 2 and the independent set color 1.
pub fn color_split_cfcn(
    g: &Graph,
    clique: &[usize],
    independent: &[usize],
) -> Result<(u32, Coloring)> {
    validate_split_partition(g, clique, independent)?;
    if let Some(u) = (0..g.n()).find(|&v| g.degree(v) == g.n() - 1) {
        let mut c = Coloring::uncolored(g.n(), 1);
        c.set(u, 1);
        return Ok((1, c));
    }
    let one_private_neighbor = !clique.is_empty()
        && clique.iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|w| independent.binary_search(w).is_ok())
                .count()
                == 1
        });
    if one_private_neighbor {
        let mut c = Coloring::uncolored(g.n(), 1);
        for &v in independent {
            c.set(v, 1);
        }
        return Ok((1, c));
    }
    let mut c = Coloring::uncolored(g.n(), 2);
    c.set(*clique.iter().min().expect("clique part is nonempty"), 2);
    for &v in independent {
        c.set(v, 1);
    }
    Ok((2, c))
}

/// Derives a split partition of `g` from its degree sequence: with degrees
/// sorted non-increasingly, the largest `m` with `d_m >= m - 1` top-degree
/// vertices form the clique of a split graph. Both returned lists are
/// sorted. Fails if `g` is not a split graph.
pub fn split_partition(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (1..=g.n())
        .filter(|&i| g.degree(order[i - 1]) >= i - 1)
        .max()
        .unwrap_or(0);
    let mut clique: Vec<usize> = order[..m].to_vec();
    let mut independent: Vec<usize> = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    validate_split_partition(g, &clique, &independent).map_err(|_| {
        Error::InvalidSplitPartition("graph is not a split graph".to_string())
    })?;
    Ok((clique, independent))
}
