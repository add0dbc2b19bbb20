//! The fixed-parameter dynamic program over irredundant w-expressions
//! deciding whether k colors suffice for a conflict-free coloring of the
//! evaluated graph, in all four mode variants.
//!
//! A table key per subexpression records, for every label `a`, how many
//! vertices of label `a` carry each color (counters capped at two) and
//! which profiles `(S, T)` occur among label-`a` vertices, where `S` is the
//! exact set of colors conflict-free dominating a vertex and `T` the exact
//! set of colors it misses. Only keys reachable by some coloring are
//! stored.

use super::eval::eval_checked;
use super::WExpr;
use crate::graph::{verify, Coloring, Mode, Neighborhood, Variant};
use crate::{Error, Result};
use std::collections::HashMap;

/// Largest allowed key width in bits for the profile part.
const MAX_STATE_BITS: u64 = 1 << 24;

/// Result of [`dp_decide`]: the decision and, when positive, a coloring
/// reconstructed from the table derivations (the construction itself only
/// decides; the witness is a convenience and always passes the verifier).
#[derive(Clone, Debug)]
pub struct DpOutcome {
    pub decision: bool,
    pub witness: Option<Coloring>,
}

#[derive(Clone, Copy)]
struct Ctx {
    w: usize,
    k: usize,
    pairs: usize,
    words: usize,
}

impl Ctx {
    fn new(w: usize, k: usize) -> Ctx {
        let pairs = 3usize.pow(k as u32);
        Ctx {
            w,
            k,
            pairs,
            words: (w * pairs + 63) / 64,
        }
    }

    fn count_index(&self, label: usize, color: usize) -> usize {
        label * (self.k + 1) + color
    }

    fn bit_index(&self, label: usize, pair: usize) -> usize {
        label * self.pairs + pair
    }

    /// Base-3 index of the disjoint pair (S, T): color `c` contributes
    /// digit 1 if in S, 2 if in T, 0 otherwise.
    fn encode_pair(&self, s_mask: u32, t_mask: u32) -> usize {
        debug_assert_eq!(s_mask & t_mask, 0);
        let mut pair = 0usize;
        let mut pow = 1usize;
        for c in 0..self.k {
            let digit = if s_mask >> c & 1 == 1 {
                1
            } else if t_mask >> c & 1 == 1 {
                2
            } else {
                0
            };
            pair += digit * pow;
            pow *= 3;
        }
        pair
    }

    fn decode_pair(&self, mut pair: usize) -> (u32, u32) {
        let (mut s_mask, mut t_mask) = (0u32, 0u32);
        for c in 0..self.k {
            match pair % 3 {
                1 => s_mask |= 1 << c,
                2 => t_mask |= 1 << c,
                _ => {}
            }
            pair /= 3;
        }
        (s_mask, t_mask)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct DpKey {
    counts: Vec<u8>,
    bits: Vec<u64>,
}

impl DpKey {
    fn zero(ctx: &Ctx) -> DpKey {
        DpKey {
            counts: vec![0; ctx.w * (ctx.k + 1)],
            bits: vec![0; ctx.words],
        }
    }

    fn get_bit(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn set_bit(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }
}

enum Kind {
    Intro { vertex: usize },
    One { child: usize },
    Two { left: usize, right: usize },
}

enum Prov {
    Intro(u32),
    One(u32),
    Two(u32, u32),
}

struct FlatNode {
    kind: Kind,
    keys: Vec<DpKey>,
    prov: Vec<Prov>,
}

/// Decides whether the graph of the irredundant expression `e` admits a
/// conflict-free coloring with `k` colors in mode `m`, and reconstructs a
/// witness coloring on success.
///
/// Fails on redundant expressions (run [`super::make_irredundant`] first)
/// and when the profile table would exceed the state-space ceiling.
pub fn dp_decide(e: &WExpr, k: u32, m: Mode) -> Result<DpOutcome> {
    assert!(k >= 1);
    let lg = eval_checked(e, true)?;
    let w = e.max_label() as usize;
    let bits = w as u64 * 3u64.saturating_pow(k);
    if bits > MAX_STATE_BITS {
        return Err(Error::StateSpaceTooLarge(bits));
    }
    let ctx = Ctx::new(w, k as usize);
    let index: HashMap<u32, usize> = lg
        .vertex_ids
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();

    let mut nodes: Vec<FlatNode> = Vec::new();
    let root = build_tables(e, &ctx, m, &index, &mut nodes);

    // accept a key iff no label has a vertex dominated by no color at all
    let undominated: Vec<usize> = (0..ctx.pairs)
        .filter(|&p| ctx.decode_pair(p).0 == 0)
        .collect();
    let accepted = nodes[root].keys.iter().position(|key| {
        (0..ctx.w).all(|a| undominated.iter().all(|&p| !key.get_bit(ctx.bit_index(a, p))))
    });

    let Some(key_idx) = accepted else {
        return Ok(DpOutcome {
            decision: false,
            witness: None,
        });
    };

    // walk the derivation down to the introduce leaves
    let mut assignment = vec![0u32; lg.graph.n()];
    let mut stack = vec![(root, key_idx)];
    while let Some((node, ki)) = stack.pop() {
        let n = &nodes[node];
        match (&n.kind, &n.prov[ki]) {
            (Kind::Intro { vertex }, Prov::Intro(color)) => assignment[*vertex] = *color,
            (Kind::One { child }, Prov::One(ci)) => stack.push((*child, *ci as usize)),
            (Kind::Two { left, right }, Prov::Two(li, ri)) => {
                stack.push((*left, *li as usize));
                stack.push((*right, *ri as usize));
            }
            _ => unreachable!("provenance matches node kind"),
        }
    }
    let witness = Coloring::new(assignment, k);
    debug_assert!(verify(&lg.graph, &witness, m).unwrap().is_valid());
    Ok(DpOutcome {
        decision: true,
        witness: Some(witness),
    })
}

fn build_tables(
    e: &WExpr,
    ctx: &Ctx,
    m: Mode,
    index: &HashMap<u32, usize>,
    nodes: &mut Vec<FlatNode>,
) -> usize {
    match e {
        WExpr::Introduce { vertex, label } => {
            let a = (*label - 1) as usize;
            let lo = match m.variant {
                Variant::Partial => 0u32,
                Variant::Full => 1,
            };
            let mut keys = Vec::new();
            let mut prov = Vec::new();
            let full: u32 = (1 << ctx.k) - 1;
            for q in lo..=ctx.k as u32 {
                let mut key = DpKey::zero(ctx);
                key.counts[ctx.count_index(a, q as usize)] = 1;
                let pair = match (m.neighborhood, q) {
                    // no neighbors yet: dominated by nothing, missing all
                    (Neighborhood::Open, _) | (Neighborhood::Closed, 0) => {
                        ctx.encode_pair(0, full)
                    }
                    // the vertex itself dominates its closed neighborhood
                    (Neighborhood::Closed, q) => {
                        let s = 1 << (q - 1);
                        ctx.encode_pair(s, full & !s)
                    }
                };
                key.set_bit(ctx.bit_index(a, pair));
                keys.push(key);
                prov.push(Prov::Intro(q));
            }
            nodes.push(FlatNode {
                kind: Kind::Intro {
                    vertex: index[vertex],
                },
                keys,
                prov,
            });
            nodes.len() - 1
        }
        WExpr::Union(l, r) => {
            let left = build_tables(l, ctx, m, index, nodes);
            let right = build_tables(r, ctx, m, index, nodes);
            let mut keys = Vec::new();
            let mut prov = Vec::new();
            let mut seen: HashMap<DpKey, usize> = HashMap::new();
            for (li, lk) in nodes[left].keys.iter().enumerate() {
                for (ri, rk) in nodes[right].keys.iter().enumerate() {
                    let mut key = lk.clone();
                    for (c, &add) in key.counts.iter_mut().zip(rk.counts.iter()) {
                        *c = (*c + add).min(2);
                    }
                    for (wrd, &or) in key.bits.iter_mut().zip(rk.bits.iter()) {
                        *wrd |= or;
                    }
                    if !seen.contains_key(&key) {
                        seen.insert(key.clone(), keys.len());
                        keys.push(key);
                        prov.push(Prov::Two(li as u32, ri as u32));
                    }
                }
            }
            nodes.push(FlatNode {
                kind: Kind::Two { left, right },
                keys,
                prov,
            });
            nodes.len() - 1
        }
        WExpr::Relabel { from, to, child } => {
            let child_idx = build_tables(child, ctx, m, index, nodes);
            let (fa, ta) = ((*from - 1) as usize, (*to - 1) as usize);
            let mut keys = Vec::new();
            let mut prov = Vec::new();
            let mut seen: HashMap<DpKey, usize> = HashMap::new();
            for (ci, ck) in nodes[child_idx].keys.iter().enumerate() {
                let mut key = ck.clone();
                for q in 0..=ctx.k {
                    let merged =
                        (key.counts[ctx.count_index(fa, q)] + key.counts[ctx.count_index(ta, q)]).min(2);
                    key.counts[ctx.count_index(ta, q)] = merged;
                    key.counts[ctx.count_index(fa, q)] = 0;
                }
                for p in 0..ctx.pairs {
                    if key.get_bit(ctx.bit_index(fa, p)) {
                        key.set_bit(ctx.bit_index(ta, p));
                    }
                }
                clear_label_bits(&mut key, ctx, fa);
                if !seen.contains_key(&key) {
                    seen.insert(key.clone(), keys.len());
                    keys.push(key);
                    prov.push(Prov::One(ci as u32));
                }
            }
            nodes.push(FlatNode {
                kind: Kind::One { child: child_idx },
                keys,
                prov,
            });
            nodes.len() - 1
        }
        WExpr::Join { a, b, child } => {
            let child_idx = build_tables(child, ctx, m, index, nodes);
            let (aa, ba) = ((*a - 1) as usize, (*b - 1) as usize);
            let mut keys = Vec::new();
            let mut prov = Vec::new();
            let mut seen: HashMap<DpKey, usize> = HashMap::new();
            for (ci, ck) in nodes[child_idx].keys.iter().enumerate() {
                let mut key = ck.clone();
                clear_label_bits(&mut key, ctx, aa);
                clear_label_bits(&mut key, ctx, ba);
                join_profiles(&mut key, ck, ctx, aa, ba);
                join_profiles(&mut key, ck, ctx, ba, aa);
                if !seen.contains_key(&key) {
                    seen.insert(key.clone(), keys.len());
                    keys.push(key);
                    prov.push(Prov::One(ci as u32));
                }
            }
            nodes.push(FlatNode {
                kind: Kind::One { child: child_idx },
                keys,
                prov,
            });
            nodes.len() - 1
        }
    }
}

fn clear_label_bits(key: &mut DpKey, ctx: &Ctx, label: usize) {
    for p in 0..ctx.pairs {
        let i = ctx.bit_index(label, p);
        key.bits[i / 64] &= !(1 << (i % 64));
    }
}

/// Forward transition of the join for the vertices of `label`: every old
/// profile (S, T) maps to the unique new profile determined by the capped
/// color counts of the `other` label. A color stays dominating if the other
/// side misses it, a previously missed color becomes dominating if the
/// other side has it exactly once, and stays missed only if the other side
/// misses it too.
fn join_profiles(key: &mut DpKey, old: &DpKey, ctx: &Ctx, label: usize, other: usize) {
    for p in 0..ctx.pairs {
        if !old.get_bit(ctx.bit_index(label, p)) {
            continue;
        }
        let (s_old, t_old) = ctx.decode_pair(p);
        let (mut s_new, mut t_new) = (0u32, 0u32);
        for c in 0..ctx.k {
            let cnt = old.counts[ctx.count_index(other, c + 1)];
            if s_old >> c & 1 == 1 && cnt == 0 {
                s_new |= 1 << c;
            }
            if t_old >> c & 1 == 1 {
                match cnt {
                    0 => t_new |= 1 << c,
                    1 => s_new |= 1 << c,
                    _ => {}
                }
            }
        }
        debug_assert!(join_conditions_hold(ctx, old, other, s_old, t_old, s_new, t_new));
        key.set_bit(ctx.bit_index(label, ctx.encode_pair(s_new, t_new)));
    }
}

/// The five side conditions relating an old profile, the other label's
/// counts, and a new profile at a join node. The forward map above always
/// satisfies them; they are kept as a debug-time cross-check.
#[allow(clippy::too_many_arguments)]
fn join_conditions_hold(
    ctx: &Ctx,
    old: &DpKey,
    other: usize,
    s_old: u32,
    t_old: u32,
    s_new: u32,
    t_new: u32,
) -> bool {
    let cnt = |c: usize| old.counts[ctx.count_index(other, c + 1)];
    for c in 0..ctx.k {
        let in_s_new = s_new >> c & 1 == 1;
        let in_s_old = s_old >> c & 1 == 1;
        let in_t_new = t_new >> c & 1 == 1;
        let in_t_old = t_old >> c & 1 == 1;
        // (a) colors dominating before and after: the other side misses them
        if in_s_new && in_s_old && cnt(c) != 0 {
            return false;
        }
        // (b) freshly dominating colors: exactly one on the other side
        if in_s_new && !in_s_old && cnt(c) != 1 {
            return false;
        }
        // (c) colors that stop dominating: at least one on the other side
        if in_s_old && !in_s_new && cnt(c) < 1 {
            return false;
        }
        // (d) freshly dominating colors were missed; missed colors were missed
        if in_s_new && !in_s_old && !in_t_old {
            return false;
        }
        if in_t_new && !in_t_old {
            return false;
        }
        // (e) missed colors that neither stay missed nor become dominating
        // occur at least twice on the other side
        if in_t_old && !in_t_new && !in_s_new && cnt(c) != 2 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::{cograph_expr, expr_for_gk_cn, make_irredundant, parse_wexpr};
    use super::*;
    use crate::exact::exists_cf_coloring;
    use crate::generators::{random_extension_seq, ExtOp};

    fn k2_expr() -> WExpr {
        parse_wexpr("j(1,2,u(v(0,1),v(1,2)))").unwrap()
    }

    #[test]
    fn k2_one_color_on() {
        let out = dp_decide(&k2_expr(), 1, Mode::on_partial()).unwrap();
        assert!(out.decision);
        let w = out.witness.unwrap();
        assert_eq!(w.assignment(), &[1, 1]);
    }

    #[test]
    fn k3_needs_two_colors_on() {
        let seq = crate::generators::ExtensionSequence::new(
            3,
            vec![crate::generators::ExtStep {
                vertex: 3,
                op: ExtOp::TrueTwin,
                anchor: 2,
            }],
        );
        let e = cograph_expr(&seq).unwrap();
        assert!(!dp_decide(&e, 1, Mode::on_partial()).unwrap().decision);
        assert!(dp_decide(&e, 2, Mode::on_partial()).unwrap().decision);
    }

    #[test]
    fn family_k3_not_cn_full_2_colorable() {
        let e = expr_for_gk_cn(3).unwrap();
        assert!(!dp_decide(&e, 2, Mode::cn_full()).unwrap().decision);
    }

    #[test]
    fn redundant_expression_rejected() {
        let e = parse_wexpr("j(1,2,j(1,2,u(v(0,1),v(1,2))))").unwrap();
        assert!(matches!(
            dp_decide(&e, 1, Mode::on_partial()),
            Err(Error::RedundantJoin { .. })
        ));
        let ir = make_irredundant(&e).unwrap();
        assert!(dp_decide(&ir, 1, Mode::on_partial()).unwrap().decision);
    }

    #[test]
    fn state_space_ceiling() {
        let e = k2_expr();
        assert!(matches!(
            dp_decide(&e, 16, Mode::on_partial()),
            Err(Error::StateSpaceTooLarge(_))
        ));
    }

    #[test]
    fn agrees_with_oracle_on_random_cographs() {
        for seed in 0..60 {
            let seq = random_extension_seq(8, &[ExtOp::TrueTwin, ExtOp::FalseTwin], seed);
            let e = cograph_expr(&seq).unwrap();
            let lg = super::super::eval_graph(&e).unwrap();
            for m in Mode::ALL {
                for k in 1..=2 {
                    let dp = dp_decide(&e, k, m).unwrap();
                    let oracle = exists_cf_coloring(&lg.graph, m, k).is_some();
                    assert_eq!(dp.decision, oracle, "seed {seed} mode {m} k {k}");
                    if let Some(w) = dp.witness {
                        assert!(verify(&lg.graph, &w, m).unwrap().is_valid());
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        for seed in 0..20 {
            let seq = random_extension_seq(7, &[ExtOp::TrueTwin, ExtOp::FalseTwin], seed + 300);
            let e = cograph_expr(&seq).unwrap();
            for m in Mode::ALL {
                if dp_decide(&e, 1, m).unwrap().decision {
                    assert!(dp_decide(&e, 2, m).unwrap().decision);
                }
            }
        }
    }

    #[test]
    fn counters_stay_capped() {
        // spot check: a large union chain keeps every counter at most 2
        let mut e = WExpr::introduce(0, 1);
        for v in 1..6 {
            e = WExpr::union(e, WExpr::introduce(v, 1));
        }
        let ctx = Ctx::new(1, 1);
        let mut nodes = Vec::new();
        let index: HashMap<u32, usize> = (0..6u32).map(|v| (v, v as usize)).collect();
        let root = build_tables(&e, &ctx, Mode::on_partial(), &index, &mut nodes);
        for key in &nodes[root].keys {
            assert!(key.counts.iter().all(|&c| c <= 2));
        }
    }
}
