//! The w-expression language of clique width: introduce, disjoint union,
//! relabel and join, plus the fixed-parameter dynamic program deciding
//! whether k colors suffice for a conflict-free coloring of the evaluated
//! graph.

mod dp;
mod eval;
mod family;
mod parse;

pub use dp::{dp_decide, DpOutcome};
pub use eval::{eval_graph, make_irredundant, LabeledGraph};
pub use family::{cograph_expr, expr_for_gk_cn};
pub use parse::parse_wexpr;

use crate::{Error, Result};
use std::collections::BTreeSet;

/// AST of a w-expression. Labels are 1-based; vertex ids are globally
/// unique across the introduce leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WExpr {
    /// A single vertex with a label: `v(ID,LABEL)`.
    Introduce { vertex: u32, label: u32 },
    /// Disjoint union: `u(E1,E2)`.
    Union(Box<WExpr>, Box<WExpr>),
    /// Every vertex labeled `from` now has label `to`: `r(FROM,TO,E)`.
    Relabel {
        from: u32,
        to: u32,
        child: Box<WExpr>,
    },
    /// All edges between labels `a` and `b` are added: `j(A,B,E)`.
    Join { a: u32, b: u32, child: Box<WExpr> },
}

impl WExpr {
    pub fn introduce(vertex: u32, label: u32) -> WExpr {
        WExpr::Introduce { vertex, label }
    }

    pub fn union(left: WExpr, right: WExpr) -> WExpr {
        WExpr::Union(Box::new(left), Box::new(right))
    }

    pub fn relabel(from: u32, to: u32, child: WExpr) -> WExpr {
        WExpr::Relabel {
            from,
            to,
            child: Box::new(child),
        }
    }

    pub fn join(a: u32, b: u32, child: WExpr) -> WExpr {
        WExpr::Join {
            a,
            b,
            child: Box::new(child),
        }
    }

    /// Largest label mentioned anywhere (the width of the expression).
    pub fn max_label(&self) -> u32 {
        match self {
            WExpr::Introduce { label, .. } => *label,
            WExpr::Union(l, r) => l.max_label().max(r.max_label()),
            WExpr::Relabel { from, to, child } => (*from).max(*to).max(child.max_label()),
            WExpr::Join { a, b, child } => (*a).max(*b).max(child.max_label()),
        }
    }

    /// Number of introduce leaves.
    pub fn vertex_count(&self) -> usize {
        match self {
            WExpr::Introduce { .. } => 1,
            WExpr::Union(l, r) => l.vertex_count() + r.vertex_count(),
            WExpr::Relabel { child, .. } | WExpr::Join { child, .. } => child.vertex_count(),
        }
    }

    /// All introduced vertex ids, sorted.
    pub fn vertex_ids(&self) -> Vec<u32> {
        let mut ids = Vec::with_capacity(self.vertex_count());
        self.collect_ids(&mut ids);
        ids.sort_unstable();
        ids
    }

    fn collect_ids(&self, out: &mut Vec<u32>) {
        match self {
            WExpr::Introduce { vertex, .. } => out.push(*vertex),
            WExpr::Union(l, r) => {
                l.collect_ids(out);
                r.collect_ids(out);
            }
            WExpr::Relabel { child, .. } | WExpr::Join { child, .. } => child.collect_ids(out),
        }
    }

    /// Structural validity: labels at least 1, distinct label arguments at
    /// relabel and join nodes, vertex ids unique.
    pub fn validate(&self) -> Result<()> {
        let mut ids = BTreeSet::new();
        self.validate_rec(&mut ids)
    }

    fn validate_rec(&self, ids: &mut BTreeSet<u32>) -> Result<()> {
        match self {
            WExpr::Introduce { vertex, label } => {
                if *label == 0 {
                    return Err(Error::InvalidExpr("labels are 1-based".to_string()));
                }
                if !ids.insert(*vertex) {
                    return Err(Error::InvalidExpr(format!("duplicate vertex id {vertex}")));
                }
                Ok(())
            }
            WExpr::Union(l, r) => {
                l.validate_rec(ids)?;
                r.validate_rec(ids)
            }
            WExpr::Relabel { from, to, child } => {
                if *from == 0 || *to == 0 {
                    return Err(Error::InvalidExpr("labels are 1-based".to_string()));
                }
                if from == to {
                    return Err(Error::InvalidExpr(format!(
                        "relabel needs two distinct labels, got {from}"
                    )));
                }
                child.validate_rec(ids)
            }
            WExpr::Join { a, b, child } => {
                if *a == 0 || *b == 0 {
                    return Err(Error::InvalidExpr("labels are 1-based".to_string()));
                }
                if a == b {
                    return Err(Error::InvalidExpr(format!(
                        "join needs two distinct labels, got {a}"
                    )));
                }
                child.validate_rec(ids)
            }
        }
    }
}

impl std::fmt::Display for WExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WExpr::Introduce { vertex, label } => write!(f, "v({vertex},{label})"),
            WExpr::Union(l, r) => write!(f, "u({l},{r})"),
            WExpr::Relabel { from, to, child } => write!(f, "r({from},{to},{child})"),
            WExpr::Join { a, b, child } => write!(f, "j({a},{b},{child})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let e = WExpr::union(WExpr::introduce(0, 1), WExpr::introduce(0, 2));
        assert!(matches!(e.validate(), Err(Error::InvalidExpr(_))));
        let e = WExpr::relabel(1, 1, WExpr::introduce(0, 1));
        assert!(matches!(e.validate(), Err(Error::InvalidExpr(_))));
        let e = WExpr::join(1, 2, WExpr::union(WExpr::introduce(0, 1), WExpr::introduce(1, 2)));
        e.validate().unwrap();
        assert_eq!(e.max_label(), 2);
        assert_eq!(e.vertex_ids(), vec![0, 1]);
    }
}
