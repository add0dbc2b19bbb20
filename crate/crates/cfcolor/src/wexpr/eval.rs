//! Evaluation of w-expressions into labeled graphs, and the irredundancy
//! transform.

use super::WExpr;
use crate::graph::Graph;
use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap};

/// A graph together with the final label of each vertex and the original
/// introduce ids. Graph index `i` stands for introduce id `vertex_ids[i]`;
/// the ids are sorted, so dense ids `0..n` map to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u32>,
    pub vertex_ids: Vec<u32>,
}

/// Evaluates the expression, following the four operations exactly.
pub fn eval_graph(e: &WExpr) -> Result<LabeledGraph> {
    eval_checked(e, false)
}

/// As [`eval_graph`], but fails with [`Error::RedundantJoin`] if some join
/// re-adds an existing edge. The dynamic program requires this to pass.
pub(super) fn eval_checked(e: &WExpr, reject_redundant: bool) -> Result<LabeledGraph> {
    e.validate()?;
    let ids = e.vertex_ids();
    let index: HashMap<u32, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut graph = Graph::new(ids.len());
    let mut labels = vec![0u32; ids.len()];
    eval_into(e, &index, &mut graph, &mut labels, reject_redundant)?;
    Ok(LabeledGraph {
        graph,
        labels,
        vertex_ids: ids,
    })
}

fn eval_into(
    e: &WExpr,
    index: &HashMap<u32, usize>,
    graph: &mut Graph,
    labels: &mut Vec<u32>,
    reject_redundant: bool,
) -> Result<Vec<usize>> {
    match e {
        WExpr::Introduce { vertex, label } => {
            let v = index[vertex];
            labels[v] = *label;
            Ok(vec![v])
        }
        WExpr::Union(l, r) => {
            let mut verts = eval_into(l, index, graph, labels, reject_redundant)?;
            verts.extend(eval_into(r, index, graph, labels, reject_redundant)?);
            Ok(verts)
        }
        WExpr::Relabel { from, to, child } => {
            let verts = eval_into(child, index, graph, labels, reject_redundant)?;
            for &v in &verts {
                if labels[v] == *from {
                    labels[v] = *to;
                }
            }
            Ok(verts)
        }
        WExpr::Join { a, b, child } => {
            let verts = eval_into(child, index, graph, labels, reject_redundant)?;
            let class_a: Vec<usize> = verts.iter().copied().filter(|&v| labels[v] == *a).collect();
            let class_b: Vec<usize> = verts.iter().copied().filter(|&v| labels[v] == *b).collect();
            for &u in &class_a {
                for &v in &class_b {
                    if !graph.add_edge(u, v) && reject_redundant {
                        return Err(Error::RedundantJoin { i: *a, j: *b });
                    }
                }
            }
            Ok(verts)
        }
    }
}

/// Rewrites the expression so that every join adds only new edges, without
/// changing the evaluated graph or its labels.
///
/// Two label classes never split on the way up an expression, they only
/// merge; so whenever a join's vertex-pair rectangle meets the rectangle of
/// a join higher up, it is entirely contained in it and the lower join is
/// superfluous. The transform drops exactly those joins (and joins with an
/// empty side).
pub fn make_irredundant(e: &WExpr) -> Result<WExpr> {
    e.validate()?;
    let ids = e.vertex_ids();
    let index: HashMap<u32, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut classes: HashMap<usize, (BTreeSet<usize>, BTreeSet<usize>)> = HashMap::new();
    let mut counter = 0usize;
    let mut labels = vec![0u32; ids.len()];
    collect_join_classes(e, &index, &mut labels, &mut counter, &mut classes);

    let mut counter = 0usize;
    let mut ancestors: Vec<usize> = Vec::new();
    let out = rebuild(e, &mut counter, &classes, &mut ancestors);
    debug_assert_eq!(
        eval_graph(e).unwrap(),
        eval_graph(&out).unwrap(),
        "irredundancy transform must preserve the labeled graph"
    );
    Ok(out)
}

// pre-order walk recording, for every join node, its two label classes as
// vertex sets
fn collect_join_classes(
    e: &WExpr,
    index: &HashMap<u32, usize>,
    labels: &mut Vec<u32>,
    counter: &mut usize,
    out: &mut HashMap<usize, (BTreeSet<usize>, BTreeSet<usize>)>,
) -> Vec<usize> {
    let my_id = *counter;
    *counter += 1;
    match e {
        WExpr::Introduce { vertex, label } => {
            let v = index[vertex];
            labels[v] = *label;
            vec![v]
        }
        WExpr::Union(l, r) => {
            let mut verts = collect_join_classes(l, index, labels, counter, out);
            verts.extend(collect_join_classes(r, index, labels, counter, out));
            verts
        }
        WExpr::Relabel { from, to, child } => {
            let verts = collect_join_classes(child, index, labels, counter, out);
            for &v in &verts {
                if labels[v] == *from {
                    labels[v] = *to;
                }
            }
            verts
        }
        WExpr::Join { a, b, child } => {
            let verts = collect_join_classes(child, index, labels, counter, out);
            let ca: BTreeSet<usize> = verts.iter().copied().filter(|&v| labels[v] == *a).collect();
            let cb: BTreeSet<usize> = verts.iter().copied().filter(|&v| labels[v] == *b).collect();
            out.insert(my_id, (ca, cb));
            verts
        }
    }
}

fn rebuild(
    e: &WExpr,
    counter: &mut usize,
    classes: &HashMap<usize, (BTreeSet<usize>, BTreeSet<usize>)>,
    ancestors: &mut Vec<usize>,
) -> WExpr {
    let my_id = *counter;
    *counter += 1;
    match e {
        WExpr::Introduce { .. } => e.clone(),
        WExpr::Union(l, r) => {
            let left = rebuild(l, counter, classes, ancestors);
            let right = rebuild(r, counter, classes, ancestors);
            WExpr::union(left, right)
        }
        WExpr::Relabel { from, to, child } => {
            let inner = rebuild(child, counter, classes, ancestors);
            WExpr::relabel(*from, *to, inner)
        }
        WExpr::Join { a, b, child } => {
            let (ca, cb) = &classes[&my_id];
            let covered = ca.is_empty()
                || cb.is_empty()
                || ancestors.iter().any(|aid| {
                    let (ya, yb) = &classes[aid];
                    let straight = !ca.is_disjoint(ya) && !cb.is_disjoint(yb);
                    let flipped = !ca.is_disjoint(yb) && !cb.is_disjoint(ya);
                    let hit = straight || flipped;
                    // classes only merge upward, so touching implies containment
                    debug_assert!(
                        !hit || (straight && ca.is_subset(ya) && cb.is_subset(yb))
                            || (flipped && ca.is_subset(yb) && cb.is_subset(ya))
                    );
                    hit
                });
            ancestors.push(my_id);
            let inner = rebuild(child, counter, classes, ancestors);
            ancestors.pop();
            if covered {
                inner
            } else {
                WExpr::join(*a, *b, inner)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_wexpr;
    use super::*;

    #[test]
    fn evaluates_k2() {
        let e = parse_wexpr("j(1,2,u(v(0,1),v(1,2)))").unwrap();
        let lg = eval_graph(&e).unwrap();
        assert_eq!(lg.graph.m(), 1);
        assert!(lg.graph.has_edge(0, 1));
        assert_eq!(lg.labels, vec![1, 2]);
    }

    #[test]
    fn evaluates_k3_with_two_labels() {
        // join, relabel, introduce, join: a cograph-style triangle
        let e = parse_wexpr("j(1,2,u(r(1,2,j(1,2,u(v(0,1),v(1,2)))),v(2,1)))").unwrap();
        let lg = eval_graph(&e).unwrap();
        assert_eq!(lg.graph, crate::named::named_graph("k3").unwrap());
        assert_eq!(lg.labels, vec![2, 2, 1]);
    }

    #[test]
    fn sparse_vertex_ids_compact_in_sorted_order() {
        let e = parse_wexpr("j(1,2,u(v(10,1),v(3,2)))").unwrap();
        let lg = eval_graph(&e).unwrap();
        assert_eq!(lg.vertex_ids, vec![3, 10]);
        assert_eq!(lg.labels, vec![2, 1]);
        assert!(lg.graph.has_edge(0, 1));
    }

    #[test]
    fn repeated_join_elided() {
        let e = parse_wexpr("j(1,2,j(1,2,u(v(0,1),v(1,2))))").unwrap();
        assert!(matches!(
            eval_checked(&e, true),
            Err(Error::RedundantJoin { i: 1, j: 2 })
        ));
        let ir = make_irredundant(&e).unwrap();
        assert_eq!(ir.to_string(), "j(1,2,u(v(0,1),v(1,2)))");
        eval_checked(&ir, true).unwrap();
        assert_eq!(eval_graph(&ir).unwrap(), eval_graph(&e).unwrap());
    }

    #[test]
    fn already_irredundant_unchanged() {
        let e = parse_wexpr("j(1,2,u(v(0,1),v(1,2)))").unwrap();
        assert_eq!(make_irredundant(&e).unwrap(), e);
    }

    #[test]
    fn partial_overlap_through_relabel() {
        // inner join adds the edge 0-1; after merging labels the outer join
        // covers 0-1 and 0-2, so the inner join must go
        let e = parse_wexpr("j(1,2,u(j(1,2,u(v(0,1),v(1,2))),v(2,2)))").unwrap();
        let ir = make_irredundant(&e).unwrap();
        eval_checked(&ir, true).unwrap();
        assert_eq!(eval_graph(&ir).unwrap(), eval_graph(&e).unwrap());
        assert_eq!(ir.to_string(), "j(1,2,u(u(v(0,1),v(1,2)),v(2,2)))");
    }

    #[test]
    fn empty_sided_join_dropped() {
        let e = parse_wexpr("j(1,3,u(v(0,1),v(1,2)))").unwrap();
        let ir = make_irredundant(&e).unwrap();
        assert_eq!(ir.to_string(), "u(v(0,1),v(1,2))");
    }

    #[test]
    fn random_cograph_expressions_preserved() {
        use crate::generators::{random_extension_seq, ExtOp};
        for seed in 0..100 {
            let seq = random_extension_seq(9, &[ExtOp::TrueTwin, ExtOp::FalseTwin], seed);
            let e = super::super::cograph_expr(&seq).unwrap();
            let ir = make_irredundant(&e).unwrap();
            assert_eq!(
                eval_graph(&ir).unwrap(),
                eval_graph(&e).unwrap(),
                "seed {seed}"
            );
            eval_checked(&ir, true).unwrap();
        }
    }
}
