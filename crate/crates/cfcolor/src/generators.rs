//! Lower-bound graph families, the split-graph hardness reduction, and
//! seeded random instance generators.

use crate::classes::geom::{IntervalScene, PointScene, Rational};
use crate::graph::{Coloring, Graph};
use crate::{Error, Result};
use num_rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// One-vertex extension operations of distance hereditary graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtOp {
    /// `v_i` adjacent only to `v_j`.
    Pendant,
    /// `v_i` adjacent to `v_j` and all its neighbors.
    TrueTwin,
    /// `v_i` adjacent to the neighbors of `v_j` but not `v_j` itself.
    FalseTwin,
}

impl ExtOp {
    pub fn letter(self) -> char {
        match self {
            ExtOp::Pendant => 'P',
            ExtOp::TrueTwin => 'T',
            ExtOp::FalseTwin => 'F',
        }
    }

    pub fn from_letter(c: char) -> Option<ExtOp> {
        match c {
            'P' => Some(ExtOp::Pendant),
            'T' => Some(ExtOp::TrueTwin),
            'F' => Some(ExtOp::FalseTwin),
            _ => None,
        }
    }
}

/// A step `(i, op, j)` extending `G[i-1]` with vertex `v_i` anchored at
/// `v_j`, `j < i`. Vertices are 1-based as in the construction; the graph
/// id of `v_i` is `i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtStep {
    pub vertex: usize,
    pub op: ExtOp,
    pub anchor: usize,
}

/// A one-vertex extension sequence: `G[2] = K_2` on vertices 1, 2, then one
/// step per vertex `3..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSequence {
    n: usize,
    steps: Vec<ExtStep>,
}

impl ExtensionSequence {
    pub fn new(n: usize, steps: Vec<ExtStep>) -> Self {
        ExtensionSequence { n, steps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[ExtStep] {
        &self.steps
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidSequence(
                "a sequence starts from K_2 and needs n >= 2".to_string(),
            ));
        }
        if self.steps.len() != self.n - 2 {
            return Err(Error::InvalidSequence(format!(
                "expected {} steps for n = {}, got {}",
                self.n - 2,
                self.n,
                self.steps.len()
            )));
        }
        for (idx, s) in self.steps.iter().enumerate() {
            let expect = idx + 3;
            if s.vertex != expect {
                return Err(Error::InvalidSequence(format!(
                    "step {idx} extends vertex {} but should extend {expect}",
                    s.vertex
                )));
            }
            if s.anchor == 0 || s.anchor >= s.vertex {
                return Err(Error::InvalidSequence(format!(
                    "step for vertex {} has anchor {} out of range",
                    s.vertex, s.anchor
                )));
            }
        }
        Ok(())
    }
}

/// Builds the graph of an extension sequence. Vertex `v_i` has id `i - 1`.
pub fn seq_to_graph(seq: &ExtensionSequence) -> Result<Graph> {
    seq.validate()?;
    let mut g = Graph::new(seq.n);
    g.add_edge(0, 1);
    for step in &seq.steps {
        let v = step.vertex - 1;
        let anchor = step.anchor - 1;
        match step.op {
            ExtOp::Pendant => {
                g.add_edge(v, anchor);
            }
            ExtOp::TrueTwin => {
                let nbrs: Vec<usize> = g.neighbors(anchor).to_vec();
                for w in nbrs {
                    g.add_edge(v, w);
                }
                g.add_edge(v, anchor);
            }
            ExtOp::FalseTwin => {
                let nbrs: Vec<usize> = g.neighbors(anchor).to_vec();
                for w in nbrs {
                    g.add_edge(v, w);
                }
            }
        }
    }
    Ok(g)
}

/// Number of vertices of the clique-width-3 family member `G_k` (closed
/// neighborhood version).
pub fn gk_cn_size(k: u32) -> usize {
    match k {
        0 | 1 => 0,
        2 => 2,
        _ => {
            let prev = gk_cn_size(k - 1);
            let leaves = 1usize << (k - 1);
            leaves + (leaves - 1) * 2 * prev
        }
    }
}

fn gk_size_with_base(k: u32, base: usize) -> usize {
    if k == 2 {
        return base;
    }
    let prev = gk_size_with_base(k - 1, base);
    let leaves = 1usize << (k - 1);
    leaves + (leaves - 1) * 2 * prev
}

/// The recursive clique-width-3 family with full CFCN chromatic number at
/// least `k`: `G_2` is an edge; `G_{k+1}` is a `2^k`-clique of bottom
/// vertices plus, for every set of a binary-tree hierarchy over them, two
/// fresh copies of `G_k` joined completely to the set.
///
/// Vertex numbering: the bottom clique takes ids `0..2^k`, then for each
/// hierarchy set in level-major order (pairs of leaves first, the full set
/// last) its two copies follow, each embedded recursively.
pub fn gen_gk_cn(k: u32, ceiling: usize) -> Result<Graph> {
    gen_gk(k, 2, ceiling)
}

/// The open-neighborhood variant of the family: identical recursion with a
/// triangle as the base graph.
pub fn gen_gk_on(k: u32, ceiling: usize) -> Result<Graph> {
    gen_gk(k, 3, ceiling)
}

fn gen_gk(k: u32, base: usize, ceiling: usize) -> Result<Graph> {
    assert!(k >= 2, "the family starts at k = 2");
    let total = gk_size_with_base(k, base);
    if total > ceiling {
        return Err(Error::CeilingExceeded {
            got: total,
            ceiling,
        });
    }
    let mut g = Graph::new(total);
    let mut next = 0usize;
    build_gk(&mut g, &mut next, k, base);
    debug_assert_eq!(next, total);
    Ok(g)
}

// appends G_k to `g` starting at id `*next`, advancing it
fn build_gk(g: &mut Graph, next: &mut usize, k: u32, base: usize) {
    let start = *next;
    if k == 2 {
        for i in 0..base {
            for j in i + 1..base {
                g.add_edge(start + i, start + j);
            }
        }
        *next += base;
        return;
    }
    let leaves = 1usize << (k - 1);
    for i in 0..leaves {
        for j in i + 1..leaves {
            g.add_edge(start + i, start + j);
        }
    }
    *next += leaves;
    // hierarchy sets in level-major order: level i covers runs of 2^i leaves
    for level in 1..k {
        let width = 1usize << level;
        for j in 0..(leaves / width) {
            let set: Vec<usize> = (width * j..width * (j + 1)).map(|t| start + t).collect();
            for _copy in 0..2 {
                let copy_start = *next;
                build_gk(g, next, k - 1, base);
                let copy_end = *next;
                for u in copy_start..copy_end {
                    for &s in &set {
                        g.add_edge(u, s);
                    }
                }
            }
        }
    }
}

/// The bipartite distance hereditary family with full CFON chromatic number
/// at least `k`: side `A` has `2^{k-1}` vertices, side `B` has levels
/// `L_1..L_k` of sizes `2^{k-1} / 2^i`, and `b^i_j` is adjacent to the
/// `a_t` with `t` in `[2^{i-1} j, 2^{i-1}(j+1))`.
///
/// Vertex numbering: `a_0..` first, then levels `L_1, L_2, ..., L_k` in
/// order.
pub fn gen_bipartite_dh(k: u32) -> Graph {
    assert!(k >= 2);
    let a = 1usize << (k - 1);
    let b: usize = (1..=k).map(|i| 1usize << (k - i) as usize).sum();
    let mut g = Graph::new(a + b);
    let mut next = a;
    for i in 1..=k {
        let stride = 1usize << (i - 1);
        let count = 1usize << (k - i);
        for j in 0..count {
            let bij = next + j;
            for t in stride * j..stride * (j + 1) {
                g.add_edge(bij, t);
            }
        }
        next += count;
    }
    g
}

/// The split-graph reduction from proper coloring: `G_1` adds two adjacent
/// universal vertices `x, y` to `g`; `G_2` turns `V(G_1)` into a clique and
/// attaches an independent vertex per edge of `G_1` (adjacent to its two
/// endpoints) and one pendant per vertex of `G_1`.
///
/// Returns the graph together with the clique part (ids `0..n+2`, where
/// `x = n` and `y = n+1`) and the independent part (edge vertices in
/// sorted edge order, then the pendants in vertex order).
pub fn split_reduction(g: &Graph) -> (Graph, Vec<usize>, Vec<usize>) {
    let n = g.n();
    let x = n;
    let y = n + 1;
    let mut e1: Vec<(usize, usize)> = g.edges();
    for v in 0..n {
        e1.push((v, x));
        e1.push((v, y));
    }
    e1.push((x, y));
    e1.sort_unstable();
    let n1 = n + 2;
    let total = n1 + e1.len() + n1;
    let mut g2 = Graph::new(total);
    for u in 0..n1 {
        for v in u + 1..n1 {
            g2.add_edge(u, v);
        }
    }
    let mut next = n1;
    for &(u, v) in &e1 {
        g2.add_edge(next, u);
        g2.add_edge(next, v);
        next += 1;
    }
    for v in 0..n1 {
        g2.add_edge(next, v);
        next += 1;
    }
    let clique: Vec<usize> = (0..n1).collect();
    let independent: Vec<usize> = (n1..total).collect();
    (g2, clique, independent)
}

/// Extends a proper `k`-coloring of `g` to a CFON* coloring of the
/// reduction graph with `k + 2` colors: original vertices keep their
/// colors, `x` and `y` take the two fresh colors, all independent vertices
/// stay uncolored.
pub fn extend_reduction_coloring(g: &Graph, proper: &Coloring) -> Result<Coloring> {
    if proper.len() != g.n() {
        return Err(Error::LengthMismatch {
            got: proper.len(),
            want: g.n(),
        });
    }
    for (u, v) in g.edges() {
        if proper.color(u) == proper.color(v) || proper.color(u) == 0 {
            return Err(Error::NotProperColoring { u, v });
        }
    }
    let k = proper.k();
    let (g2, _, _) = split_reduction(g);
    let mut c = Coloring::uncolored(g2.n(), k + 2);
    for v in 0..g.n() {
        c.set(v, proper.color(v));
    }
    c.set(g.n(), k + 1);
    c.set(g.n() + 1, k + 2);
    Ok(c)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn grid_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, denom: i64) -> Rational {
    let num = rng.gen_range(lo * denom..=hi * denom);
    BigRational::new(num.into(), denom.into())
}

/// Seeded random extension sequence over the allowed operations (uniform op
/// choice, uniform anchor).
pub fn random_extension_seq(n: usize, allowed: &[ExtOp], seed: u64) -> ExtensionSequence {
    assert!(n >= 2 && !allowed.is_empty());
    let mut rng = rng_for(seed);
    let steps = (3..=n)
        .map(|i| ExtStep {
            vertex: i,
            op: allowed[rng.gen_range(0..allowed.len())],
            anchor: rng.gen_range(1..i),
        })
        .collect();
    ExtensionSequence::new(n, steps)
}

/// Seeded random interval scene: endpoints uniform on a 0.05 grid in
/// `[0, width]`, swapped into order, degenerate draws widened.
pub fn random_intervals(n: usize, width: i64, seed: u64) -> IntervalScene {
    let mut rng = rng_for(seed);
    let mut iv = Vec::with_capacity(n);
    for _ in 0..n {
        let a = grid_rational(&mut rng, 0, width, 20);
        let b = grid_rational(&mut rng, 0, width, 20);
        let (l, r) = if a < b {
            (a, b)
        } else if b < a {
            (b, a)
        } else {
            let bump = BigRational::new(1.into(), 20.into());
            (a.clone(), a + bump)
        };
        iv.push((l, r));
    }
    IntervalScene::new(iv)
}

/// Seeded random unit interval scene: left endpoints uniform on a 0.05 grid
/// in `[0, width]`, length exactly 1.
pub fn random_unit_intervals(n: usize, width: i64, seed: u64) -> IntervalScene {
    let mut rng = rng_for(seed);
    let one = BigRational::from_integer(1.into());
    let iv = (0..n)
        .map(|_| {
            let l = grid_rational(&mut rng, 0, width, 20);
            let r = &l + &one;
            (l, r)
        })
        .collect();
    IntervalScene::new(iv)
}

/// Seeded random connected interval scene: as [`random_intervals`] but
/// resampled (with derived seeds) until the intersection graph is
/// connected.
pub fn random_connected_intervals(n: usize, width: i64, seed: u64, unit: bool) -> IntervalScene {
    for attempt in 0.. {
        let s = seed.wrapping_mul(1_000_003).wrapping_add(attempt);
        let scene = if unit {
            random_unit_intervals(n, width, s)
        } else {
            random_intervals(n, width, s)
        };
        if let Ok(g) = crate::classes::geom::interval_graph(&scene) {
            if g.is_connected() && g.n() >= 2 {
                return scene;
            }
        }
    }
    unreachable!()
}

/// Seeded uniform points on a 0.05 grid inside `[0, width] x [0, height]`.
pub fn random_points_box(n: usize, width: i64, height: i64, seed: u64) -> PointScene {
    let mut rng = rng_for(seed);
    let pts = (0..n)
        .map(|_| {
            (
                grid_rational(&mut rng, 0, width, 20),
                grid_rational(&mut rng, 0, height, 20),
            )
        })
        .collect();
    PointScene::new(pts)
}

/// Seeded random connected point scene grown as a cluster: each point is a
/// bounded offset from a uniformly chosen earlier point, so the square
/// (and disk, for `max_step <= sqrt(2)`) intersection graph is connected.
pub fn random_connected_points(n: usize, seed: u64) -> PointScene {
    assert!(n >= 2);
    let mut rng = rng_for(seed);
    let mut pts: Vec<(Rational, Rational)> = vec![(
        BigRational::from_integer(0.into()),
        BigRational::from_integer(0.into()),
    )];
    while pts.len() < n {
        let base = rng.gen_range(0..pts.len());
        // offsets in [-7/5, 7/5]: within both the square reach (2 per axis)
        // and the disk reach (2 * 1.4^2 < 4)
        let dx = BigRational::new(rng.gen_range(-7i64..=7).into(), 5.into());
        let dy = BigRational::new(rng.gen_range(-7i64..=7).into(), 5.into());
        let p = (&pts[base].0 + dx, &pts[base].1 + dy);
        pts.push(p);
    }
    PointScene::new(pts)
}

/// Seeded random split graph on `n` vertices: a random bipartition into a
/// nonempty clique and an independent set, each cross edge present with
/// probability 1/2; independent vertices with no neighbor are attached to
/// the smallest clique vertex so the graph is connected.
///
/// Returns the graph with its partition (both sorted).
pub fn random_split_graph(n: usize, seed: u64) -> (Graph, Vec<usize>, Vec<usize>) {
    assert!(n >= 2);
    let mut rng = rng_for(seed);
    let clique_size = rng.gen_range(1..n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut clique: Vec<usize> = perm[..clique_size].to_vec();
    let mut independent: Vec<usize> = perm[clique_size..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let mut g = Graph::new(n);
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            g.add_edge(u, v);
        }
    }
    for &v in &independent {
        let mut any = false;
        for &u in &clique {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
                any = true;
            }
        }
        if !any {
            g.add_edge(clique[0], v);
        }
    }
    (g, clique, independent)
}

/// Seeded random connected block graph built as a tree of cliques: each new
/// block is a clique of 2 to 4 fresh vertices sharing one uniformly chosen
/// existing vertex, until at least `n` vertices exist.
pub fn random_block_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let mut rng = rng_for(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut count = 1usize; // vertex 0 seeds the construction
    while count < n {
        let host = rng.gen_range(0..count);
        let fresh = rng.gen_range(1..=3.min(n - count));
        let mut block = vec![host];
        for _ in 0..fresh {
            block.push(count);
            count += 1;
        }
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                edges.push((block[i], block[j]));
            }
        }
    }
    Graph::from_edges(count, &edges)
}

/// Seeded Erdős–Rényi-style random simple graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng_for(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The instance kinds produced by [`random_instance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// Extension sequence over the allowed operations.
    ExtensionSeq(Vec<ExtOp>),
    /// Interval scene inside `[0, width]`.
    Intervals { width: i64 },
    /// Unit interval scene inside `[0, width]`.
    UnitIntervals { width: i64 },
    /// Points inside `[0, width] x [0, height]`.
    PointsBox { width: i64, height: i64 },
    /// Split graph with its partition.
    SplitGraph,
    /// Pendant-free extension sequence (a cograph).
    Cotree,
}

/// A generated instance.
#[derive(Clone, Debug)]
pub enum RandomInstance {
    Sequence(ExtensionSequence),
    Intervals(IntervalScene),
    Points(PointScene),
    Split(Graph, Vec<usize>, Vec<usize>),
}

/// Deterministic seeded instance generation, dispatching on `kind`.
pub fn random_instance(kind: &RandomKind, n: usize, seed: u64) -> Result<RandomInstance> {
    match kind {
        RandomKind::ExtensionSeq(ops) => {
            if ops.is_empty() || n < 2 {
                return Err(Error::InvalidParams(
                    "extension sequences need n >= 2 and at least one op".to_string(),
                ));
            }
            Ok(RandomInstance::Sequence(random_extension_seq(n, ops, seed)))
        }
        RandomKind::Intervals { width } => {
            Ok(RandomInstance::Intervals(random_intervals(n, *width, seed)))
        }
        RandomKind::UnitIntervals { width } => Ok(RandomInstance::Intervals(
            random_unit_intervals(n, *width, seed),
        )),
        RandomKind::PointsBox { width, height } => Ok(RandomInstance::Points(
            random_points_box(n, *width, *height, seed),
        )),
        RandomKind::SplitGraph => {
            if n < 2 {
                return Err(Error::InvalidParams("split graphs need n >= 2".to_string()));
            }
            let (g, k, i) = random_split_graph(n, seed);
            Ok(RandomInstance::Split(g, k, i))
        }
        RandomKind::Cotree => {
            if n < 2 {
                return Err(Error::InvalidParams("cotrees need n >= 2".to_string()));
            }
            Ok(RandomInstance::Sequence(random_extension_seq(
                n,
                &[ExtOp::TrueTwin, ExtOp::FalseTwin],
                seed,
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify, Mode};

    #[test]
    fn seq_base_cases() {
        let s = ExtensionSequence::new(2, vec![]);
        assert_eq!(seq_to_graph(&s).unwrap(), Graph::from_edges(2, &[(0, 1)]));
        let tt = ExtensionSequence::new(
            3,
            vec![ExtStep {
                vertex: 3,
                op: ExtOp::TrueTwin,
                anchor: 2,
            }],
        );
        assert_eq!(
            seq_to_graph(&tt).unwrap(),
            crate::named::named_graph("k3").unwrap()
        );
        let ft = ExtensionSequence::new(
            3,
            vec![ExtStep {
                vertex: 3,
                op: ExtOp::FalseTwin,
                anchor: 2,
            }],
        );
        // path centered at vertex 1 (id 0)
        assert_eq!(
            seq_to_graph(&ft).unwrap(),
            Graph::from_edges(3, &[(0, 1), (0, 2)])
        );
    }

    #[test]
    fn gk_cn_counts() {
        let g2 = gen_gk_cn(2, 1 << 20).unwrap();
        assert_eq!((g2.n(), g2.m()), (2, 1));
        let g3 = gen_gk_cn(3, 1 << 20).unwrap();
        assert_eq!((g3.n(), g3.m()), (16, 44));
    }

    #[test]
    fn gk_on_counts() {
        let g2 = gen_gk_on(2, 1 << 20).unwrap();
        assert_eq!(g2, crate::named::named_graph("k3").unwrap());
        let g3 = gen_gk_on(3, 1 << 20).unwrap();
        assert_eq!(g3.n(), 22);
    }

    #[test]
    fn gk_ceiling() {
        assert!(matches!(
            gen_gk_cn(6, 100_000),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn bipartite_dh_counts() {
        let g2 = gen_bipartite_dh(2);
        assert_eq!((g2.n(), g2.m()), (5, 4));
        let g3 = gen_bipartite_dh(3);
        assert_eq!((g3.n(), g3.m()), (11, 12));
        // bipartite: A = 0..4, B = 4..11 for k = 3
        for (u, v) in g3.edges() {
            assert!(u < 4 && v >= 4 || v < 4 && u >= 4);
        }
    }

    #[test]
    fn reduction_sizes() {
        let k1 = Graph::new(1);
        let (g2, k, i) = split_reduction(&k1);
        assert_eq!(g2.n(), 9);
        assert_eq!(k.len(), 3);
        assert_eq!(i.len(), 6);
        crate::classes::validate_split_partition(&g2, &k, &i).unwrap();

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let (g2, k, i) = split_reduction(&p3);
        assert_eq!(g2.n(), 19);
        assert_eq!(k.len(), 5);
        crate::classes::validate_split_partition(&g2, &k, &i).unwrap();
    }

    #[test]
    fn reduction_coloring_valid() {
        // C5 with an optimal proper 3-coloring
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let proper = crate::exact::proper_coloring(&c5, 3).unwrap();
        let (g2, _, _) = split_reduction(&c5);
        let ext = extend_reduction_coloring(&c5, &proper).unwrap();
        assert!(verify(&g2, &ext, Mode::on_partial()).unwrap().is_valid());
        assert_eq!(ext.colors_used(), 5);
    }

    #[test]
    fn improper_coloring_rejected() {
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        let bad = Coloring::new(vec![1, 1], 1);
        assert!(matches!(
            extend_reduction_coloring(&k2, &bad),
            Err(Error::NotProperColoring { .. })
        ));
    }

    #[test]
    fn determinism() {
        let a = random_intervals(5, 10, 42);
        let b = random_intervals(5, 10, 42);
        assert_eq!(a, b);
        let (g1, ..) = random_split_graph(9, 7);
        let (g2, ..) = random_split_graph(9, 7);
        assert_eq!(g1, g2);
    }

    #[test]
    fn extseq_without_pendants() {
        let s = random_extension_seq(8, &[ExtOp::TrueTwin, ExtOp::FalseTwin], 11);
        assert_eq!(s.steps().len(), 6);
        assert!(s.steps().iter().all(|st| st.op != ExtOp::Pendant));
    }

    #[test]
    fn points_in_box() {
        let s = random_points_box(30, 10, 10, 7);
        assert_eq!(s.len(), 30);
        let ten = BigRational::from_integer(10.into());
        let zero = BigRational::from_integer(0.into());
        for (x, y) in s.points() {
            assert!(*x >= zero && *x <= ten && *y >= zero && *y <= ten);
        }
    }

    #[test]
    fn split_graphs_validate() {
        for seed in 0..50 {
            let (g, k, i) = random_split_graph(10, seed);
            crate::classes::validate_split_partition(&g, &k, &i).unwrap();
            assert!(g.is_connected());
        }
    }

    #[test]
    fn connected_points_connected() {
        for seed in 0..20 {
            let s = random_connected_points(25, seed);
            let g = crate::classes::geom::unit_square_graph(&s).unwrap();
            assert!(g.is_connected());
            let g = crate::classes::geom::unit_disk_graph(&s).unwrap();
            assert!(g.is_connected());
        }
    }
}
