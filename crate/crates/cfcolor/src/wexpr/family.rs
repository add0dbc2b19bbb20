//! Expression constructions for known families: the 3-label expression of
//! the unbounded-chromatic-number family, and 2-label expressions for
//! cographs given by twin extension sequences.

use super::WExpr;
use crate::generators::{ExtOp, ExtensionSequence};
use crate::{Error, Result};

const ALPHA: u32 = 1;
const BETA: u32 = 2;
const GAMMA: u32 = 3;

fn gk_size(k: u32) -> usize {
    if k == 2 {
        2
    } else {
        let prev = gk_size(k - 1);
        let leaves = 1usize << (k - 1);
        leaves + (leaves - 1) * 2 * prev
    }
}

/// A 3-label expression that evaluates to exactly the closed-neighborhood
/// family graph of the same parameter: identical vertex ids and edges.
///
/// The bottom clique is assembled over a binary tree of its vertices (join
/// two merged halves, relabel them together), and at every tree node two
/// fresh copies of the previous family member, relabeled to the working
/// label, are joined to the node's leaves in one stroke and then retired to
/// the third label; so no join ever re-adds an edge.
pub fn expr_for_gk_cn(k: u32) -> Result<WExpr> {
    if k < 2 {
        return Err(Error::InvalidParams("the family starts at k = 2".to_string()));
    }
    if gk_size(k) > 100_000 {
        return Err(Error::CeilingExceeded {
            got: gk_size(k),
            ceiling: 100_000,
        });
    }
    Ok(gk_expr(k, 0))
}

// G_k with ids base.., bottom clique labeled ALPHA, retired copies GAMMA
fn gk_expr(k: u32, base: usize) -> WExpr {
    if k == 2 {
        return WExpr::join(
            ALPHA,
            BETA,
            WExpr::union(
                WExpr::introduce(base as u32, ALPHA),
                WExpr::introduce(base as u32 + 1, BETA),
            ),
        );
    }
    let leaves = 1usize << (k - 1);
    let copy_size = gk_size(k - 1);
    // hierarchy sets in level-major order, each consuming two copies
    let rank = |level: u32, j: usize| -> usize {
        (1..level).map(|i| leaves >> i).sum::<usize>() + j
    };
    // subtree of tree node (level, j): its leaves labeled ALPHA, copies GAMMA
    fn node_expr(
        k: u32,
        base: usize,
        leaves: usize,
        copy_size: usize,
        rank: &dyn Fn(u32, usize) -> usize,
        level: u32,
        j: usize,
    ) -> WExpr {
        if level == 0 {
            return WExpr::introduce((base + j) as u32, ALPHA);
        }
        let left = node_expr(k, base, leaves, copy_size, rank, level - 1, 2 * j);
        let right = node_expr(k, base, leaves, copy_size, rank, level - 1, 2 * j + 1);
        // complete the clique between the two halves, then fuse the labels
        let merged = WExpr::relabel(
            BETA,
            ALPHA,
            WExpr::join(
                ALPHA,
                BETA,
                WExpr::union(WExpr::relabel(ALPHA, BETA, left), right),
            ),
        );
        // attach two fresh copies of G_{k-1} to this node's leaf set
        let offset = base + leaves + rank(level, j) * 2 * copy_size;
        let copy1 = to_beta(gk_expr(k - 1, offset));
        let copy2 = to_beta(gk_expr(k - 1, offset + copy_size));
        WExpr::relabel(
            BETA,
            GAMMA,
            WExpr::join(
                ALPHA,
                BETA,
                WExpr::union(WExpr::union(merged, copy1), copy2),
            ),
        )
    }
    node_expr(k, base, leaves, copy_size, &rank, k - 1, 0)
}

fn to_beta(e: WExpr) -> WExpr {
    WExpr::relabel(ALPHA, BETA, WExpr::relabel(GAMMA, BETA, e))
}

/// A 2-label expression for the cograph described by a pendant-free
/// extension sequence, evaluating to the same graph (same vertex ids).
///
/// The sequence is replayed into a binary cotree (a true twin splits a leaf
/// into a series node, a false twin into a parallel node), which then maps
/// onto union and join-relabel pairs with every subexpression fully labeled
/// 1.
pub fn cograph_expr(seq: &ExtensionSequence) -> Result<WExpr> {
    seq.validate()?;
    if seq.steps().iter().any(|s| s.op == ExtOp::Pendant) {
        return Err(Error::ForbiddenOp(ExtOp::Pendant));
    }

    enum Cotree {
        Leaf(u32),
        Series(Box<Cotree>, Box<Cotree>),
        Parallel(Box<Cotree>, Box<Cotree>),
    }

    fn split_leaf(t: &mut Cotree, anchor: u32, fresh: u32, series: bool) -> bool {
        match t {
            Cotree::Leaf(id) if *id == anchor => {
                let pair = (
                    Box::new(Cotree::Leaf(anchor)),
                    Box::new(Cotree::Leaf(fresh)),
                );
                *t = if series {
                    Cotree::Series(pair.0, pair.1)
                } else {
                    Cotree::Parallel(pair.0, pair.1)
                };
                true
            }
            Cotree::Leaf(_) => false,
            Cotree::Series(l, r) | Cotree::Parallel(l, r) => {
                split_leaf(l, anchor, fresh, series) || split_leaf(r, anchor, fresh, series)
            }
        }
    }

    fn to_expr(t: &Cotree) -> WExpr {
        match t {
            Cotree::Leaf(id) => WExpr::introduce(*id, 1),
            Cotree::Parallel(l, r) => WExpr::union(to_expr(l), to_expr(r)),
            Cotree::Series(l, r) => WExpr::relabel(
                2,
                1,
                WExpr::join(1, 2, WExpr::union(to_expr(l), WExpr::relabel(1, 2, to_expr(r)))),
            ),
        }
    }

    let mut tree = Cotree::Series(Box::new(Cotree::Leaf(0)), Box::new(Cotree::Leaf(1)));
    for step in seq.steps() {
        let anchor = (step.anchor - 1) as u32;
        let fresh = (step.vertex - 1) as u32;
        let series = step.op == ExtOp::TrueTwin;
        let found = split_leaf(&mut tree, anchor, fresh, series);
        debug_assert!(found, "anchors are existing vertices");
    }
    Ok(to_expr(&tree))
}

#[cfg(test)]
mod tests {
    use super::super::{eval_graph, make_irredundant};
    use super::*;
    use crate::generators::{gen_gk_cn, random_extension_seq, seq_to_graph, ExtStep};

    #[test]
    fn base_case_is_single_edge() {
        let e = expr_for_gk_cn(2).unwrap();
        assert_eq!(e.to_string(), "j(1,2,u(v(0,1),v(1,2)))");
    }

    #[test]
    fn expression_matches_generator() {
        for k in 2..=4 {
            let e = expr_for_gk_cn(k).unwrap();
            let lg = eval_graph(&e).unwrap();
            let g = gen_gk_cn(k, 1 << 20).unwrap();
            assert_eq!(lg.graph, g, "k = {k}");
            // and the expression is already irredundant
            assert_eq!(make_irredundant(&e).unwrap(), e);
        }
    }

    #[test]
    fn k3_has_sixteen_vertices() {
        let e = expr_for_gk_cn(3).unwrap();
        assert_eq!(e.vertex_count(), 16);
    }

    #[test]
    fn labels_stay_within_three() {
        let e = expr_for_gk_cn(4).unwrap();
        assert!(e.max_label() <= 3);
    }

    #[test]
    fn cograph_expr_k2_and_k3() {
        let s = ExtensionSequence::new(2, vec![]);
        let e = cograph_expr(&s).unwrap();
        assert_eq!(eval_graph(&e).unwrap().graph, seq_to_graph(&s).unwrap());

        let s = ExtensionSequence::new(
            3,
            vec![ExtStep {
                vertex: 3,
                op: ExtOp::TrueTwin,
                anchor: 2,
            }],
        );
        let e = cograph_expr(&s).unwrap();
        assert!(e.max_label() <= 2);
        assert_eq!(eval_graph(&e).unwrap().graph, seq_to_graph(&s).unwrap());
    }

    #[test]
    fn cograph_expr_k22_is_four_cycle() {
        let s = ExtensionSequence::new(
            4,
            vec![
                ExtStep {
                    vertex: 3,
                    op: ExtOp::FalseTwin,
                    anchor: 1,
                },
                ExtStep {
                    vertex: 4,
                    op: ExtOp::FalseTwin,
                    anchor: 2,
                },
            ],
        );
        let e = cograph_expr(&s).unwrap();
        let g = eval_graph(&e).unwrap().graph;
        assert_eq!(g, seq_to_graph(&s).unwrap());
        // a 4-cycle: bipartite, 2-regular
        assert_eq!(g.m(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn random_sequences_agree_with_graph_construction() {
        for seed in 0..100 {
            let s = random_extension_seq(9, &[ExtOp::TrueTwin, ExtOp::FalseTwin], seed);
            let e = cograph_expr(&s).unwrap();
            assert!(e.max_label() <= 2);
            assert_eq!(
                eval_graph(&e).unwrap().graph,
                seq_to_graph(&s).unwrap(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn pendant_rejected() {
        let s = ExtensionSequence::new(
            3,
            vec![ExtStep {
                vertex: 3,
                op: ExtOp::Pendant,
                anchor: 1,
            }],
        );
        assert_eq!(cograph_expr(&s), Err(Error::ForbiddenOp(ExtOp::Pendant)));
    }
}
