//! Geometric scenes (intervals, unit squares, unit disks) and their
//! intersection graphs, plus the stripe-based CFON* colorings.
//!
//! All coordinates are exact rationals. Boundary contacts count as
//! intersection ("closed" squares, disks and intervals), so adjacency is
//! exactly decidable.

use crate::classes::interval::{color_proper_interval_cfon, PALETTE_2};
use crate::graph::{Coloring, Graph};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

/// A list of closed intervals `[L, R]` with `L < R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalScene {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalScene {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Self {
        IntervalScene { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }

    pub fn left(&self, i: usize) -> &Rational {
        &self.intervals[i].0
    }

    pub fn right(&self, i: usize) -> &Rational {
        &self.intervals[i].1
    }

    fn validate(&self) -> Result<()> {
        for (i, (l, r)) in self.intervals.iter().enumerate() {
            if l >= r {
                return Err(Error::EmptyInterval(i));
            }
        }
        Ok(())
    }

    pub fn overlaps(&self, i: usize, j: usize) -> bool {
        let (li, ri) = &self.intervals[i];
        let (lj, rj) = &self.intervals[j];
        li <= rj && lj <= ri
    }
}

/// A list of planar points: centers of unit squares (side 2) or unit disks
/// (radius 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointScene {
    points: Vec<(Rational, Rational)>,
}

impl PointScene {
    pub fn new(points: Vec<(Rational, Rational)>) -> Self {
        PointScene { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn x(&self, i: usize) -> &Rational {
        &self.points[i].0
    }

    pub fn y(&self, i: usize) -> &Rational {
        &self.points[i].1
    }

    /// Squares of side 2 around the centers intersect iff both coordinate
    /// differences are at most 2.
    pub fn squares_adjacent(&self, i: usize, j: usize) -> bool {
        let two = BigRational::from_integer(2.into());
        let dx = (self.x(i) - self.x(j)).abs();
        let dy = (self.y(i) - self.y(j)).abs();
        dx <= two && dy <= two
    }

    /// Disks of radius 1 around the centers intersect iff the squared
    /// center distance is at most 4.
    pub fn disks_adjacent(&self, i: usize, j: usize) -> bool {
        let dx = self.x(i) - self.x(j);
        let dy = self.y(i) - self.y(j);
        &dx * &dx + &dy * &dy <= BigRational::from_integer(4.into())
    }
}

/// Declares how a scene file is to be interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SceneKind {
    Interval,
    Square,
    Disk,
}

/// The intersection graph of an interval scene. Vertex `i` is interval `i`.
pub fn interval_graph(scene: &IntervalScene) -> Result<Graph> {
    scene.validate()?;
    let n = scene.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if scene.overlaps(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The intersection graph of unit squares (side 2) centered at the points.
pub fn unit_square_graph(scene: &PointScene) -> Result<Graph> {
    let n = scene.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if scene.squares_adjacent(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// The intersection graph of unit disks (radius 1) centered at the points.
pub fn unit_disk_graph(scene: &PointScene) -> Result<Graph> {
    let n = scene.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if scene.disks_adjacent(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Stripe index for squares: the integer `l` with `2(l-1) < y <= 2l`.
/// A center on a separating line belongs to the stripe below it.
pub fn square_stripe(y: &Rational) -> i64 {
    // ceil(y / 2)
    let half = y / BigRational::from_integer(2.into());
    ceil_big(&half)
}

/// Stripe index for disks: the integer `l` with `sqrt(3)(l-1) < y <= sqrt(3)l`.
///
/// Since `y` is rational and `sqrt(3)` irrational, `y / sqrt(3)` is integral
/// only at `y = 0`; elsewhere the ceiling is `floor(y/sqrt(3)) + 1`.
pub fn disk_stripe(y: &Rational) -> i64 {
    if y.is_zero() {
        return 0;
    }
    // y / sqrt(3) = y * sqrt(3) / 3; for y = p/q this is p*sqrt(3) / (3q).
    // floor(alpha / m) = floor(floor(alpha) / m) for integer m > 0, and
    // floor(p * sqrt(3)) = isqrt(3 p^2) for p >= 0.
    let p = y.numer().clone();
    let q = y.denom().clone(); // > 0 in canonical form
    let m = BigInt::from(3) * q;
    if p.is_positive() {
        let s = (BigInt::from(3) * &p * &p).sqrt();
        let fl: BigInt = s.div_floor(&m);
        i64::try_from(fl).expect("stripe index fits i64") + 1
    } else {
        // floor(-a) = -ceil(a); ceil(alpha) = floor(alpha) + 1 for
        // irrational alpha
        let pa = -p;
        let s = (BigInt::from(3) * &pa * &pa).sqrt();
        let fl: BigInt = s.div_floor(&m);
        let ceil: BigInt = fl + 1;
        i64::try_from(-ceil).expect("stripe index fits i64") + 1
    }
}

fn ceil_big(r: &Rational) -> i64 {
    let c = r.ceil();
    i64::try_from(c.numer().clone()).expect("stripe index fits i64")
}

/// Greedy CFCN* 2-coloring of unit disks whose centers lie in one stripe of
/// height `sqrt(3)`.
///
/// Vertices are processed by non-decreasing X-coordinate. At each step the
/// rightmost vertex covering all currently uncovered vertices to its left is
/// colored, alternating colors 1 and 2; a vertex is covered once it is
/// colored or has a colored neighbor. Any two colored vertices end up more
/// than 1 apart horizontally.
///
/// `order` must list the scene indices of the stripe's vertices; the result
/// maps each listed vertex to 0, 1 or 2 (by position in `order`).
pub fn stripe_cfcn_2color(scene: &PointScene, members: &[usize]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (members[a], members[b]);
        scene
            .x(pa)
            .cmp(scene.x(pb))
            .then_with(|| scene.y(pa).cmp(scene.y(pb)))
            .then_with(|| pa.cmp(&pb))
    });
    let k = members.len();
    let adjacent = |a: usize, b: usize| scene.disks_adjacent(members[a], members[b]);

    let mut colors = vec![0u32; k];
    let mut covered = vec![false; k];
    let mut next_color = 1u32;
    loop {
        // leftmost uncovered vertex, in the sorted order
        let Some(first_pos) = order.iter().position(|&v| !covered[v]) else {
            break;
        };
        // rightmost vertex adjacent to (or equal to) every uncovered vertex
        // at or before its own position
        let mut chosen = order[first_pos];
        for pos in first_pos..order.len() {
            let v = order[pos];
            let ok = order[..pos]
                .iter()
                .all(|&u| covered[u] || u == v || adjacent(u, v));
            if ok {
                chosen = v;
            }
        }
        colors[chosen] = next_color;
        next_color = 3 - next_color;
        covered[chosen] = true;
        for pos in 0..order.len() {
            let u = order[pos];
            if !covered[u] && adjacent(u, chosen) {
                covered[u] = true;
            }
        }
    }
    colors
}

/// CFON* coloring of a unit square intersection graph with at most 27
/// colors.
///
/// Phase 1 splits the plane into height-2 stripes, reduces each stripe to a
/// unit interval graph and 2-colors it per connected component with the
/// stripe's palette class (stripe index mod 3; 6 colors total). Phase 2
/// picks a representative neighbor for every vertex left isolated inside its
/// stripe and recolors the representatives of each stripe, in X-order,
/// cyclically from 7 fresh colors per palette class (21 colors).
pub fn color_unit_square_cfon(scene: &PointScene) -> Result<Coloring> {
    let g = unit_square_graph(scene)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let n = scene.len();
    let stripe: Vec<i64> = (0..n).map(|v| square_stripe(scene.y(v))).collect();
    let mut coloring = Coloring::uncolored(n, 27);

    // phase 1: per-stripe unit-interval 2-coloring; collect stripe-isolated
    // vertices
    let mut isolated = Vec::new();
    let mut stripes: Vec<i64> = stripe.clone();
    stripes.sort_unstable();
    stripes.dedup();
    for &l in &stripes {
        let members: Vec<usize> = (0..n).filter(|&v| stripe[v] == l).collect();
        let sub = g.induced(&members);
        let class = l.rem_euclid(3) as u32;
        for comp in sub.connected_components() {
            if comp.len() == 1 {
                isolated.push(members[comp[0]]);
                continue;
            }
            // height-2 squares meet iff their X-coordinates differ by at
            // most 2: the stripe is the unit interval scene [x-1, x+1]
            let verts: Vec<usize> = comp.iter().map(|&i| members[i]).collect();
            let one = BigRational::from_integer(1.into());
            let iv: Vec<(Rational, Rational)> = verts
                .iter()
                .map(|&v| (scene.x(v) - &one, scene.x(v) + &one))
                .collect();
            let local = color_proper_interval_cfon(&IntervalScene::new(iv))?;
            for (i, &v) in verts.iter().enumerate() {
                let c = local.color(i);
                if c != 0 {
                    coloring.set(v, 1 + 2 * class + (c - 1));
                }
            }
        }
    }

    // phase 2: recolor representatives of stripe-isolated vertices
    let mut representative = std::collections::BTreeSet::new();
    for &v in &isolated {
        representative.insert(g.neighbors(v)[0]);
    }
    for &l in &stripes {
        let mut reps: Vec<usize> = representative
            .iter()
            .copied()
            .filter(|&r| stripe[r] == l)
            .collect();
        reps.sort_by(|&a, &b| {
            scene
                .x(a)
                .cmp(scene.x(b))
                .then_with(|| scene.y(a).cmp(scene.y(b)))
                .then_with(|| a.cmp(&b))
        });
        let class = l.rem_euclid(3) as u32;
        for (idx, &r) in reps.iter().enumerate() {
            coloring.set(r, 7 + 7 * class + (idx as u32 % 7));
        }
    }
    Ok(coloring)
}

/// CFON* coloring of a unit disk intersection graph with at most 54 colors.
///
/// Phase 1 splits the plane into height-`sqrt(3)` stripes and CFCN*
/// 2-colors each with the stripe's palette class (stripe index mod 3;
/// 6 colors). Let `I` be all vertices colored in phase 1; each picks a
/// representative neighbor. Phase 2 walks `I` per stripe in X-order and
/// recolors each not-yet-recolored representative cyclically from 8 fresh
/// colors per residue class mod 6 (48 colors).
pub fn color_unit_disk_cfon(scene: &PointScene) -> Result<Coloring> {
    let g = unit_disk_graph(scene)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let n = scene.len();
    let stripe: Vec<i64> = (0..n).map(|v| disk_stripe(scene.y(v))).collect();
    let mut coloring = Coloring::uncolored(n, 54);
    let mut stripes: Vec<i64> = stripe.clone();
    stripes.sort_unstable();
    stripes.dedup();

    // phase 1
    let mut phase1_colored = Vec::new();
    for &l in &stripes {
        let members: Vec<usize> = (0..n).filter(|&v| stripe[v] == l).collect();
        let local = stripe_cfcn_2color(scene, &members);
        let class = l.rem_euclid(3) as u32;
        for (i, &v) in members.iter().enumerate() {
            if local[i] != 0 {
                coloring.set(v, 1 + 2 * class + (local[i] - 1));
                phase1_colored.push(v);
            }
        }
    }

    // phase 2: each colored vertex picks its lowest-index neighbor as
    // representative
    let rep: std::collections::BTreeMap<usize, usize> = phase1_colored
        .iter()
        .map(|&v| (v, g.neighbors(v)[0]))
        .collect();
    let mut recolored = vec![false; n];
    for &l in &stripes {
        let mut members: Vec<usize> = phase1_colored
            .iter()
            .copied()
            .filter(|&v| stripe[v] == l)
            .collect();
        members.sort_by(|&a, &b| {
            scene
                .x(a)
                .cmp(scene.x(b))
                .then_with(|| scene.y(a).cmp(scene.y(b)))
                .then_with(|| a.cmp(&b))
        });
        let class = l.rem_euclid(6) as u32;
        let mut next = 0u32;
        for &v in &members {
            let r = rep[&v];
            if !recolored[r] {
                recolored[r] = true;
                coloring.set(r, 7 + 8 * class + (next % 8));
                next += 1;
            }
        }
    }
    Ok(coloring)
}

/// The two nonzero colors used by stripe and proper-interval 2-colorings.
pub const STRIPE_PALETTE: [u32; 2] = PALETTE_2;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify, Mode};

    fn r(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn boundary_contacts_count() {
        let sq = PointScene::new(vec![(r(0, 1), r(0, 1)), (r(2, 1), r(0, 1))]);
        assert!(sq.squares_adjacent(0, 1));
        let disks = PointScene::new(vec![(r(0, 1), r(0, 1)), (r(2, 1), r(0, 1))]);
        assert!(disks.disks_adjacent(0, 1));
        let iv = IntervalScene::new(vec![(r(0, 1), r(1, 1)), (r(1, 1), r(2, 1))]);
        assert!(iv.overlaps(0, 1));
    }

    #[test]
    fn square_stripe_boundary_goes_below() {
        assert_eq!(square_stripe(&r(2, 1)), 1);
        assert_eq!(square_stripe(&r(201, 100)), 2);
        assert_eq!(square_stripe(&r(1, 2)), 1);
        assert_eq!(square_stripe(&r(0, 1)), 0);
        assert_eq!(square_stripe(&r(-1, 2)), 0);
    }

    #[test]
    fn disk_stripe_matches_float_computation() {
        for num in -400..=400 {
            let y = r(num, 10);
            let l = disk_stripe(&y);
            let approx = (num as f64 / 10.0) / 3f64.sqrt();
            // y is never an exact multiple of sqrt(3) except 0
            let expect = if num == 0 { 0 } else { approx.ceil() as i64 };
            assert_eq!(l, expect, "y = {num}/10");
            // defining inequality: sqrt(3)(l-1) < y <= sqrt(3) l, checked in
            // exact arithmetic via squaring with sign care
            let chk = |bound: i64, strict_less: bool| {
                // compare sqrt(3)*bound with y
                let b3 = 3 * bound * bound;
                let lhs_neg = bound < 0;
                let y_neg = num < 0;
                let y2 = &y * &y;
                let b3r = BigRational::from_integer(b3.into());
                let less = match (lhs_neg, y_neg) {
                    (true, false) => true,
                    (false, true) => false,
                    (false, false) => {
                        if bound == 0 {
                            num > 0
                        } else {
                            b3r < y2
                        }
                    }
                    (true, true) => b3r > y2,
                };
                if strict_less {
                    less
                } else {
                    // lhs <= y, i.e. not (y < lhs)
                    !match (y_neg, lhs_neg) {
                        (true, false) => true,
                        (false, true) => false,
                        (false, false) => {
                            if num == 0 {
                                bound > 0
                            } else {
                                y2 < b3r
                            }
                        }
                        (true, true) => y2 > b3r,
                    }
                }
            };
            assert!(chk(l - 1, true), "lower bound fails at y = {num}/10");
            assert!(!chk(l, true) || num == 0 || chk(l, false));
        }
    }

    #[test]
    fn stripe_coloring_single_point() {
        let scene = PointScene::new(vec![(r(0, 1), r(0, 1))]);
        assert_eq!(stripe_cfcn_2color(&scene, &[0]), vec![1]);
    }

    #[test]
    fn stripe_coloring_two_adjacent_points() {
        // the right point covers both, so only one vertex is colored
        let scene = PointScene::new(vec![(r(0, 1), r(0, 1)), (r(1, 1), r(0, 1))]);
        assert_eq!(stripe_cfcn_2color(&scene, &[0, 1]), vec![0, 1]);
    }

    #[test]
    fn unit_square_example_within_bounds() {
        let scene = crate::named::unit_square_example_scene();
        let g = unit_square_graph(&scene).unwrap();
        let c = color_unit_square_cfon(&scene).unwrap();
        assert!(verify(&g, &c, Mode::on_partial()).unwrap().is_valid());
        assert!(c.colors_used() <= 27);
    }

    #[test]
    fn one_stripe_uses_two_colors() {
        let scene = PointScene::new(vec![
            (r(0, 1), r(1, 2)),
            (r(3, 2), r(1, 2)),
            (r(3, 1), r(1, 2)),
            (r(9, 2), r(1, 2)),
        ]);
        let c = color_unit_square_cfon(&scene).unwrap();
        let g = unit_square_graph(&scene).unwrap();
        assert!(verify(&g, &c, Mode::on_partial()).unwrap().is_valid());
        assert!(c.colors_used() <= 2);
    }

    #[test]
    fn disk_example_scene_valid() {
        let scene = crate::named::unit_disk_example_scene();
        let g = unit_disk_graph(&scene).unwrap();
        let c = color_unit_disk_cfon(&scene).unwrap();
        assert!(verify(&g, &c, Mode::on_partial()).unwrap().is_valid());
        assert!(c.colors_used() <= 54);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let scene = PointScene::new(vec![(r(0, 1), r(0, 1)), (r(100, 1), r(0, 1))]);
        assert!(matches!(
            color_unit_square_cfon(&scene),
            Err(Error::IsolatedVertex(_))
        ));
        assert!(matches!(
            color_unit_disk_cfon(&scene),
            Err(Error::IsolatedVertex(_))
        ));
    }
}
