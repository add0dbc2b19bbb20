//! Kneser graph constructions: the `k+1` color CFON* coloring and the CFCN*
//! colorings for the two ranges of `n`.
//!
//! Vertices are the k-subsets of `{1, ..., n}` in colexicographic order;
//! two subsets are adjacent iff they are disjoint. The coloring rules are
//! closed-form functions of the subset, so they apply without materializing
//! the graph; the materializing helpers enforce a vertex-count ceiling.

use crate::graph::{Coloring, Graph};
use crate::{Error, Result};

/// Parameters of the Kneser graph `K(n, k)` with `n >= 2k + 1` (connected
/// and with edges).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KneserParams {
    n: u32,
    k: u32,
}

impl KneserParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 || n < 2 * k + 1 {
            return Err(Error::KneserTooSparse { n, k });
        }
        Ok(KneserParams { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of vertices, `C(n, k)`, saturating at `usize::MAX`.
    pub fn vertex_count(&self) -> usize {
        binomial(self.n as usize, self.k as usize)
    }

    /// All k-subsets of `[n]` in colexicographic order (1-based elements,
    /// each subset sorted ascending).
    pub fn vertices(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.vertex_count());
        let k = self.k as usize;
        let mut cur: Vec<u32> = (1..=self.k).collect();
        loop {
            out.push(cur.clone());
            // next in colex: increment the smallest position that can move
            // without passing the element above it
            let mut i = 0;
            while i < k {
                let limit = if i + 1 < k { cur[i + 1] } else { self.n + 1 };
                if cur[i] + 1 < limit {
                    cur[i] += 1;
                    for (j, slot) in cur.iter_mut().enumerate().take(i) {
                        *slot = j as u32 + 1;
                    }
                    break;
                }
                i += 1;
            }
            if i == k {
                return out;
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Materializes `K(n, k)` with the colex vertex order, refusing graphs
/// above `ceiling` vertices.
pub fn kneser_graph(p: &KneserParams, ceiling: usize) -> Result<Graph> {
    let count = p.vertex_count();
    if count > ceiling {
        return Err(Error::CeilingExceeded {
            got: count,
            ceiling,
        });
    }
    let verts = p.vertices();
    let mut g = Graph::new(count);
    for i in 0..count {
        for j in i + 1..count {
            if disjoint(&verts[i], &verts[j]) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    // both sorted
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// The CFON* color of a single vertex: subsets of `[2k]` get
/// `max(v) - (k-1)` (colors 1 through k+1), everything else 0.
pub fn kneser_on_color(p: &KneserParams, v: &[u32]) -> u32 {
    let max = *v.last().expect("nonempty subset");
    if max <= 2 * p.k {
        max - (p.k - 1)
    } else {
        0
    }
}

/// The CFCN* color of a single vertex.
///
/// For `n >= 3k`, subsets of `[2k-1]` get `max(v) - (k-1)` (k colors), the
/// rest 0. For `2k+1 <= n <= 3k-1` the inductive full coloring is used:
/// subsets of `[2k+1]` get 1 if they meet `{1,2}` and 2 otherwise, and a
/// vertex whose maximum element is `2k+1+e` (for `e >= 1`) gets the fresh
/// color `e+2`; this uses `n - 2k + 1 = min(k, n-2k+1)` colors.
pub fn kneser_cn_color(p: &KneserParams, v: &[u32]) -> u32 {
    let max = *v.last().expect("nonempty subset");
    if p.n >= 3 * p.k {
        if max <= 2 * p.k - 1 {
            max - (p.k - 1)
        } else {
            0
        }
    } else if max <= 2 * p.k + 1 {
        if v.iter().any(|&x| x == 1 || x == 2) {
            1
        } else {
            2
        }
    } else {
        max - 2 * p.k + 1
    }
}

/// Number of colors in the CFCN* palette for `K(n, k)`.
pub fn kneser_cn_palette(p: &KneserParams) -> u32 {
    p.k.min(p.n - 2 * p.k + 1)
}

/// Materialized CFON* coloring over the colex vertex order (k+1 colors).
pub fn color_kneser_cfon(p: &KneserParams, ceiling: usize) -> Result<Coloring> {
    let count = p.vertex_count();
    if count > ceiling {
        return Err(Error::CeilingExceeded {
            got: count,
            ceiling,
        });
    }
    let assignment = p
        .vertices()
        .iter()
        .map(|v| kneser_on_color(p, v))
        .collect();
    Ok(Coloring::new(assignment, p.k + 1))
}

/// Materialized CFCN* coloring over the colex vertex order
/// (`min(k, n-2k+1)` colors).
pub fn color_kneser_cfcn(p: &KneserParams, ceiling: usize) -> Result<Coloring> {
    let count = p.vertex_count();
    if count > ceiling {
        return Err(Error::CeilingExceeded {
            got: count,
            ceiling,
        });
    }
    let assignment = p
        .vertices()
        .iter()
        .map(|v| kneser_cn_color(p, v))
        .collect();
    Ok(Coloring::new(assignment, kneser_cn_palette(p)))
}
