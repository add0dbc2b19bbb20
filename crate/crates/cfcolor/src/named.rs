//! Named example graphs and their geometric scenes.
//!
//! Each graph comes with a fixed, documented vertex order so that test
//! witnesses are stable across runs.

use crate::classes::geom::{unit_square_graph, IntervalScene, PointScene, Rational};
use crate::generators;
use crate::{Error, Graph, Result};
use num_rational::BigRational;

fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(num.into(), den.into())
}

/// Looks up a graph by name.
///
/// Known names: `k2`, `k3`, `k22`, `bull`, `block-lb`, `interval-lb`,
/// `unitsq-example`, `petersen`.
pub fn named_graph(name: &str) -> Result<Graph> {
    match name {
        "k2" => Ok(Graph::from_edges(2, &[(0, 1)])),
        "k3" => Ok(Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)])),
        // complete bipartite K_{2,2}: sides {0,1} and {2,3}
        "k22" => Ok(Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])),
        // triangle 0-1-2 with pendant 3 on 1 and pendant 4 on 2
        "bull" => Ok(Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)],
        )),
        "block-lb" => Ok(block_lower_bound()),
        "interval-lb" => Ok(crate::classes::geom::interval_graph(
            &interval_lower_bound_scene(),
        )?),
        "unitsq-example" => unit_square_graph(&unit_square_example_scene()),
        "petersen" => {
            let p = crate::classes::kneser::KneserParams::new(5, 2)?;
            crate::classes::kneser::kneser_graph(&p, 100_000)
        }
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// The block graph with CFON* chromatic number 3: two 5-cliques sharing a
/// middle vertex, with a pendant on each non-shared, non-apex clique vertex.
///
/// Vertex order: 0 = m, 1 = l, 2..5 = x_l1..x_l3, 5..8 = pendants of those,
/// 8 = r, 9..12 = x_r1..x_r3, 12..15 = their pendants.
fn block_lower_bound() -> Graph {
    let mut g = Graph::new(15);
    // left 5-clique {m=0, l=1, 2, 3, 4} and right 5-clique {m=0, r=8, 9, 10, 11}
    for clique in [[0usize, 1, 2, 3, 4], [0, 8, 9, 10, 11]] {
        for i in 0..5 {
            for j in i + 1..5 {
                g.add_edge(clique[i], clique[j]);
            }
        }
    }
    for (x, pend) in [(2, 5), (3, 6), (4, 7), (9, 12), (10, 13), (11, 14)] {
        g.add_edge(x, pend);
    }
    g
}

/// Interval representation of the interval graph with full CFON chromatic
/// number above 3. Groups of identical intervals realize the clique
/// blow-up: 3 copies for u, u*, v, w*, w and 4 copies for u', u'', v', v'',
/// w', w''.
///
/// Vertex order: u(3), u'(4), u''(4), u*(3), v(3), v'(4), v''(4), w*(3),
/// w(3), w'(4), w''(4) — 39 intervals.
pub fn interval_lower_bound_scene() -> IntervalScene {
    let mut iv = Vec::new();
    let mut push = |l: (i64, i64), r: (i64, i64), copies: usize| {
        for _ in 0..copies {
            iv.push((rat(l.0, l.1), rat(r.0, r.1)));
        }
    };
    push((11, 10), (24, 10), 3); // u
    push((11, 10), (14, 10), 4); // u'
    push((16, 10), (19, 10), 4); // u''
    push((21, 10), (24, 10), 3); // u*
    push((21, 10), (39, 10), 3); // v
    push((26, 10), (29, 10), 4); // v'
    push((31, 10), (34, 10), 4); // v''
    push((36, 10), (39, 10), 3); // w*
    push((36, 10), (49, 10), 3); // w
    push((41, 10), (44, 10), 4); // w'
    push((46, 10), (49, 10), 4); // w''
    IntervalScene::new(iv)
}

/// Centers of the nine unit squares from the hexagon-with-pendants example
/// (a 6-cycle with pendants on alternating cycle vertices).
///
/// Vertex order: 0..6 = the hexagon, 6 = pendant of 1, 7 = pendant of 3,
/// 8 = pendant of 5.
pub fn unit_square_example_scene() -> PointScene {
    let pts = vec![
        (rat(-2, 1), rat(0, 1)),
        (rat(-1, 1), rat(7, 4)),
        (rat(1, 1), rat(7, 4)),
        (rat(2, 1), rat(0, 1)),
        (rat(1, 1), rat(-7, 4)),
        (rat(-1, 1), rat(-7, 4)),
        (rat(-9, 5), rat(63, 20)),
        (rat(18, 5), rat(0, 1)),
        (rat(-9, 5), rat(-63, 20)),
    ];
    PointScene::new(pts)
}

/// The same nine centers scaled by 4/5 so that interpreting them as unit
/// disks yields the same abstract graph. At the original scale the hexagon
/// edges have length slightly above 2 and break as disks.
pub fn unit_disk_example_scene() -> PointScene {
    let s = rat(4, 5);
    let pts = unit_square_example_scene()
        .points()
        .iter()
        .map(|(x, y)| (x * &s, y * &s))
        .collect();
    PointScene::new(pts)
}

/// An interval representation of the bull graph, vertex order matching
/// [`named_graph`]`("bull")`.
pub fn bull_interval_scene() -> IntervalScene {
    let iv = vec![
        (rat(2, 1), rat(4, 1)), // 0: apex
        (rat(1, 1), rat(3, 1)), // 1
        (rat(3, 1), rat(5, 1)), // 2
        (rat(0, 1), rat(1, 1)), // 3: pendant of 1
        (rat(5, 1), rat(6, 1)), // 4: pendant of 2
    ];
    IntervalScene::new(iv)
}

/// Scene lookup by name for the CLI: interval scenes.
pub fn named_interval_scene(name: &str) -> Result<IntervalScene> {
    match name {
        "interval-lb" => Ok(interval_lower_bound_scene()),
        "bull" => Ok(bull_interval_scene()),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// Scene lookup by name for the CLI: point scenes.
pub fn named_point_scene(name: &str) -> Result<PointScene> {
    match name {
        "unitsq-example" => Ok(unit_square_example_scene()),
        "unitdisk-example" => Ok(unit_disk_example_scene()),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

/// List of names accepted by [`named_graph`].
pub const NAMED_GRAPHS: [&str; 8] = [
    "k2",
    "k3",
    "k22",
    "bull",
    "block-lb",
    "interval-lb",
    "unitsq-example",
    "petersen",
];

// Re-exported here so `named` is the one-stop module for fixed instances.
pub use generators::{gen_bipartite_dh, gen_gk_cn, gen_gk_on};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_stated_values() {
        let cases = [
            ("k2", 2, 1),
            ("k3", 3, 3),
            ("k22", 4, 4),
            ("bull", 5, 5),
            ("block-lb", 15, 26),
            ("interval-lb", 39, 177),
            ("unitsq-example", 9, 9),
            ("petersen", 10, 15),
        ];
        for (name, n, m) in cases {
            let g = named_graph(name).unwrap();
            assert_eq!((g.n(), g.m()), (n, m), "graph {name}");
        }
    }

    #[test]
    fn interval_lb_is_the_clique_blowup() {
        // groups in vertex order with their sizes; adjacency of the base
        // graph from its maximal cliques
        let sizes = [3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4];
        let names = ["u", "u1", "u2", "us", "v", "v1", "v2", "ws", "w", "w1", "w2"];
        let base_edges = [
            ("u1", "u"),
            ("u2", "u"),
            ("us", "u"),
            ("us", "v"),
            ("u", "v"),
            ("v", "v1"),
            ("v", "v2"),
            ("ws", "v"),
            ("ws", "w"),
            ("v", "w"),
            ("w", "w1"),
            ("w", "w2"),
        ];
        let mut start = vec![0usize];
        for s in sizes {
            start.push(start.last().unwrap() + s);
        }
        let group_of = |name: &str| names.iter().position(|n| *n == name).unwrap();
        let mut expected = Graph::new(39);
        for (gi, s) in sizes.iter().enumerate() {
            for a in 0..*s {
                for b in a + 1..*s {
                    expected.add_edge(start[gi] + a, start[gi] + b);
                }
            }
        }
        for (a, b) in base_edges {
            let (ga, gb) = (group_of(a), group_of(b));
            for i in 0..sizes[ga] {
                for j in 0..sizes[gb] {
                    expected.add_edge(start[ga] + i, start[gb] + j);
                }
            }
        }
        assert_eq!(named_graph("interval-lb").unwrap(), expected);
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(matches!(named_graph("k5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn bull_scene_matches_bull_graph() {
        let g = crate::classes::geom::interval_graph(&bull_interval_scene()).unwrap();
        assert_eq!(g, named_graph("bull").unwrap());
    }

    #[test]
    fn disk_example_scene_gives_same_graph_as_squares() {
        let sq = named_graph("unitsq-example").unwrap();
        let disk =
            crate::classes::geom::unit_disk_graph(&unit_disk_example_scene()).unwrap();
        assert_eq!(sq, disk);
    }

    #[test]
    fn unitsq_example_is_hexagon_with_alternating_pendants() {
        let g = named_graph("unitsq-example").unwrap();
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)] {
            assert!(g.has_edge(u, v));
        }
        for (p, host) in [(6, 1), (7, 3), (8, 5)] {
            assert_eq!(g.neighbors(p), &[host]);
        }
    }
}
