//! Graph and coloring representations and the conflict-free verifier.

use crate::{Error, Result};
use std::collections::BTreeSet;

/// A simple undirected graph over dense vertex ids `0..n`.
///
/// Stored as adjacency lists kept in sorted order. Self-loops and duplicate
/// edges are rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, ignoring duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the edge `{u, v}`. Returns false if it was already present.
    ///
    /// Panics on self-loops or out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The open neighborhood `N(v)`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Partition of the vertices into maximal connected sets, each sorted,
    /// ordered by smallest contained vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// The subgraph induced by `verts` (which must be sorted and duplicate
    /// free), with vertex `i` of the result standing for `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let index: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = index.get(&w) {
                    if i < j {
                        g.add_edge(i, j);
                    }
                }
            }
        }
        g
    }
}

/// Which neighborhood the conflict-free condition quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Neighborhood {
    /// Open neighborhood `N(v)`.
    Open,
    /// Closed neighborhood `N[v]`.
    Closed,
}

/// Whether color 0 (uncolored) is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Colors from `{0} ∪ [k]`; color 0 never counts as unique.
    Partial,
    /// Every vertex must receive a color from `[k]`.
    Full,
}

/// A conflict-free coloring mode: ON/CN crossed with partial/full.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mode {
    pub neighborhood: Neighborhood,
    pub variant: Variant,
}

impl Mode {
    pub const fn on_partial() -> Self {
        Mode {
            neighborhood: Neighborhood::Open,
            variant: Variant::Partial,
        }
    }
    pub const fn on_full() -> Self {
        Mode {
            neighborhood: Neighborhood::Open,
            variant: Variant::Full,
        }
    }
    pub const fn cn_partial() -> Self {
        Mode {
            neighborhood: Neighborhood::Closed,
            variant: Variant::Partial,
        }
    }
    pub const fn cn_full() -> Self {
        Mode {
            neighborhood: Neighborhood::Closed,
            variant: Variant::Full,
        }
    }

    pub const ALL: [Mode; 4] = [
        Mode::on_partial(),
        Mode::on_full(),
        Mode::cn_partial(),
        Mode::cn_full(),
    ];
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nb = match self.neighborhood {
            Neighborhood::Open => "ON",
            Neighborhood::Closed => "CN",
        };
        let var = match self.variant {
            Variant::Partial => "partial",
            Variant::Full => "full",
        };
        write!(f, "{nb}-{var}")
    }
}

/// A color assignment. Entry `0` marks an uncolored vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<u32>,
    k: u32,
}

impl Coloring {
    /// Wraps an assignment with declared palette size `k`.
    ///
    /// Panics if some entry exceeds `k`.
    pub fn new(assignment: Vec<u32>, k: u32) -> Self {
        assert!(
            assignment.iter().all(|&c| c <= k),
            "color exceeds palette size {k}"
        );
        Coloring { assignment, k }
    }

    /// The all-zero coloring on `n` vertices.
    pub fn uncolored(n: usize, k: u32) -> Self {
        Coloring {
            assignment: vec![0; n],
            k,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn set(&mut self, v: usize, c: u32) {
        assert!(c <= self.k, "color {c} exceeds palette size {}", self.k);
        self.assignment[v] = c;
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Number of distinct nonzero colors actually used.
    pub fn colors_used(&self) -> usize {
        self.assignment
            .iter()
            .filter(|&&c| c != 0)
            .collect::<BTreeSet<_>>()
            .len()
    }
}

/// Outcome of [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyResult {
    Valid,
    /// The smallest-index vertex with no uniquely occurring nonzero color in
    /// its relevant neighborhood.
    Invalid { witness: usize },
}

impl VerifyResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyResult::Valid)
    }
}

/// Checks whether `c` is a conflict-free coloring of `g` in mode `m`.
///
/// Every vertex `v` must have some color `i >= 1` occurring exactly once in
/// `N(v)` (open) or `N[v]` (closed). Inputs are rejected when the lengths
/// mismatch, when a full-variant coloring contains color 0, or when the
/// graph has an isolated vertex under the open-neighborhood mode (the
/// problem is not defined there).
pub fn verify(g: &Graph, c: &Coloring, m: Mode) -> Result<VerifyResult> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            got: c.len(),
            want: g.n(),
        });
    }
    if m.variant == Variant::Full {
        if let Some(v) = c.assignment.iter().position(|&x| x == 0) {
            return Err(Error::ZeroInFullColoring(v));
        }
    }
    if m.neighborhood == Neighborhood::Open {
        if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let mut counts = vec![0u32; c.k() as usize + 1];
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            counts[c.color(w) as usize] += 1;
        }
        if m.neighborhood == Neighborhood::Closed {
            counts[c.color(v) as usize] += 1;
        }
        let dominated = counts[1..].iter().any(|&x| x == 1);
        for &w in g.neighbors(v) {
            counts[c.color(w) as usize] = 0;
        }
        counts[c.color(v) as usize] = 0;
        if !dominated {
            return Ok(VerifyResult::Invalid { witness: v });
        }
    }
    Ok(VerifyResult::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named_graph;

    #[test]
    fn k3_partial_on() {
        let g = named_graph("k3").unwrap();
        let c = Coloring::new(vec![1, 2, 0], 2);
        assert_eq!(
            verify(&g, &c, Mode::on_partial()).unwrap(),
            VerifyResult::Valid
        );
    }

    #[test]
    fn k3_duplicate_color_witness() {
        let g = named_graph("k3").unwrap();
        let c = Coloring::new(vec![1, 1, 0], 2);
        // vertex 2 sees color 1 twice
        assert_eq!(
            verify(&g, &c, Mode::on_partial()).unwrap(),
            VerifyResult::Invalid { witness: 2 }
        );
    }

    #[test]
    fn bull_cn_two_colors_from_solver() {
        let g = named_graph("bull").unwrap();
        let c = crate::exact::exists_cf_coloring(&g, Mode::cn_partial(), 2)
            .expect("bull is CFCN* 2-colorable");
        assert_eq!(
            verify(&g, &c, Mode::cn_partial()).unwrap(),
            VerifyResult::Valid
        );
    }

    #[test]
    fn length_mismatch_rejected() {
        let g = named_graph("k2").unwrap();
        let c = Coloring::new(vec![1], 1);
        assert_eq!(
            verify(&g, &c, Mode::on_partial()),
            Err(Error::LengthMismatch { got: 1, want: 2 })
        );
    }

    #[test]
    fn full_variant_rejects_zero() {
        let g = named_graph("k2").unwrap();
        let c = Coloring::new(vec![1, 0], 1);
        assert_eq!(
            verify(&g, &c, Mode::on_full()),
            Err(Error::ZeroInFullColoring(1))
        );
    }

    #[test]
    fn isolated_vertex_rejected_under_on() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        let c = Coloring::new(vec![1, 2, 1], 2);
        assert_eq!(
            verify(&g, &c, Mode::on_partial()),
            Err(Error::IsolatedVertex(2))
        );
        // the closed-neighborhood variant is fine with it
        assert!(verify(&g, &c, Mode::cn_partial()).unwrap().is_valid());
    }

    #[test]
    fn full_valid_implies_partial_valid() {
        // a full coloring is in particular a partial coloring
        let g = named_graph("bull").unwrap();
        for k in 1..=3 {
            for m in [Mode::on_full(), Mode::cn_full()] {
                if let Some(c) = crate::exact::exists_cf_coloring(&g, m, k) {
                    let partial = Mode {
                        neighborhood: m.neighborhood,
                        variant: Variant::Partial,
                    };
                    assert!(verify(&g, &c, partial).unwrap().is_valid());
                }
            }
        }
    }

    #[test]
    fn components() {
        let g = named_graph("k3").unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2]]);
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        let g = Graph::new(3);
        assert_eq!(g.connected_components().len(), 3);
    }

    #[test]
    fn proper_coloring_is_cfcn() {
        // a proper coloring restricted to nonzero colors is a CFCN coloring
        let g = named_graph("petersen").unwrap();
        let k = crate::exact::chromatic_number(&g, 4).unwrap();
        let c = crate::exact::proper_coloring(&g, k).unwrap();
        assert!(verify(&g, &c, Mode::cn_full()).unwrap().is_valid());
    }
}
