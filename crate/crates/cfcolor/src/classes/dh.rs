//! Colorings of distance hereditary graphs built from one-vertex extension
//! sequences: the 3-color CFCN* scheme, its 2-color restricted versions,
//! and the 2-color CFON* cograph coloring.

use crate::generators::{seq_to_graph, ExtOp, ExtensionSequence};
use crate::graph::{Coloring, Graph};
use crate::{Error, Result};

/// Tag `(a, b)`: `a` is the color of the vertex, `b` the color of its
/// uniquely colored closed neighbor.
pub type TaggedColor = (u32, u32);

/// Runs the case analysis of the 3-color CFCN* scheme, returning the tag of
/// every vertex. Exposed separately so the per-prefix invariants can be
/// checked.
pub fn dh_cfcn_tags(seq: &ExtensionSequence) -> Result<Vec<TaggedColor>> {
    seq.validate()?;
    let g = seq_to_graph(seq)?;
    let mut tags: Vec<TaggedColor> = Vec::with_capacity(seq.n());
    tags.push((1, 2));
    tags.push((2, 1));

    for step in seq.steps() {
        let i = step.vertex; // 1-based; the graph id is i - 1
        let j = step.anchor;
        let vj = j - 1;
        let (a, b) = tags[vj];
        // neighbors of v_j inside G[i-1]
        let nj: Vec<usize> = g
            .neighbors(vj)
            .iter()
            .copied()
            .filter(|&w| w < i - 1)
            .collect();
        // does every w in N_{i-1}(v_j) carry (0, d) for one fixed d != a?
        let uniform_d = || -> Option<u32> {
            let mut d = None;
            for &w in &nj {
                let (aw, bw) = tags[w];
                if aw != 0 {
                    return None;
                }
                match d {
                    None => d = Some(bw),
                    Some(x) if x == bw => {}
                    _ => return None,
                }
            }
            d.filter(|&x| x != a)
        };
        let tag = match step.op {
            ExtOp::Pendant if a == b => {
                if let Some(d) = uniform_d() {
                    let x = (1..=3).find(|c| *c != a && *c != d).unwrap();
                    (x, a)
                } else {
                    (0, a)
                }
            }
            ExtOp::Pendant => {
                if a != 0 {
                    (0, a)
                } else {
                    let x = (1..=3).find(|c| *c != b).unwrap();
                    (x, x)
                }
            }
            ExtOp::TrueTwin if a == b => {
                if let Some(d) = uniform_d() {
                    let x = (1..=3).find(|c| *c != a && *c != d).unwrap();
                    (x, a)
                } else {
                    (0, a)
                }
            }
            ExtOp::TrueTwin => (0, b),
            ExtOp::FalseTwin if a == b => {
                if uniform_d().is_some() {
                    (a, a)
                } else {
                    // Invariant 2(**): some color occurs exactly once and
                    // nonzero among N(v_j); take the smallest such color
                    let mut counts = [0u32; 4];
                    for &w in &nj {
                        counts[tags[w].0 as usize] += 1;
                    }
                    let x = (1..=3)
                        .find(|&c| counts[c as usize] == 1)
                        .expect("invariant 2 guarantees a unique color") as u32;
                    (0, x)
                }
            }
            ExtOp::FalseTwin => (0, b),
        };
        tags.push(tag);
    }
    Ok(tags)
}

/// CFCN* coloring of a distance hereditary graph with at most 3 colors.
pub fn color_dh_cfcn(seq: &ExtensionSequence) -> Result<Coloring> {
    let tags = dh_cfcn_tags(seq)?;
    Ok(Coloring::new(tags.iter().map(|t| t.0).collect(), 3))
}

/// CFCN* coloring with at most 2 colors for sequences that omit one of the
/// three extension operations.
///
/// * no pendants (a cograph): only the first two vertices are colored;
/// * no true twins (bipartite): 2-coloring by bipartition, the part of
///   vertex 1 colored 1;
/// * no false twins: the modified pendant/true-twin case analysis.
pub fn color_dh_restricted(seq: &ExtensionSequence, missing: ExtOp) -> Result<Coloring> {
    seq.validate()?;
    if seq.steps().iter().any(|s| s.op == missing) {
        return Err(Error::ForbiddenOp(missing));
    }
    match missing {
        ExtOp::Pendant => {
            let mut c = Coloring::uncolored(seq.n(), 2);
            c.set(0, 1);
            c.set(1, 2);
            Ok(c)
        }
        ExtOp::TrueTwin => {
            let g = seq_to_graph(seq)?;
            let side = bipartition(&g)?;
            let mut c = Coloring::uncolored(seq.n(), 2);
            for v in 0..seq.n() {
                c.set(v, if side[v] == side[0] { 1 } else { 2 });
            }
            Ok(c)
        }
        ExtOp::FalseTwin => {
            let mut tags: Vec<TaggedColor> = vec![(1, 2), (2, 1)];
            for step in seq.steps() {
                let (a, b) = tags[step.anchor - 1];
                let tag = match step.op {
                    ExtOp::Pendant => {
                        if a != 0 {
                            (0, a)
                        } else {
                            let x = if b == 1 { 2 } else { 1 };
                            (x, x)
                        }
                    }
                    ExtOp::TrueTwin => (0, b),
                    ExtOp::FalseTwin => unreachable!("filtered above"),
                };
                tags.push(tag);
            }
            Ok(Coloring::new(tags.iter().map(|t| t.0).collect(), 2))
        }
    }
}

/// CFON* coloring of a cograph (a pendant-free sequence) with 2 colors:
/// vertex 1 gets color 1, vertex 2 color 2, everything else 0.
pub fn color_cograph_cfon(seq: &ExtensionSequence) -> Result<Coloring> {
    seq.validate()?;
    if let Some(s) = seq.steps().iter().find(|s| s.op == ExtOp::Pendant) {
        let _ = s;
        return Err(Error::ForbiddenOp(ExtOp::Pendant));
    }
    let mut c = Coloring::uncolored(seq.n(), 2);
    c.set(0, 1);
    c.set(1, 2);
    Ok(c)
}

fn bipartition(g: &Graph) -> Result<Vec<u8>> {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(Error::InvalidSequence(
                        "graph is not bipartite".to_string(),
                    ));
                }
            }
        }
    }
    Ok(side)
}

/// Checks Invariants 1 and 2 of the 3-color scheme on every prefix `G[i]`.
///
/// Invariant 1: for every vertex `v` of `G[i]` with tag `(a, b)`, color `b`
/// occurs exactly once in the closed neighborhood of `v` within `G[i]`.
/// Invariant 2: if the tag is `(a, a)` then either all open neighbors carry
/// `(0, d)` for one fixed `d != a`, or some nonzero color occurs exactly
/// once in the open neighborhood.
pub fn check_dh_invariants(seq: &ExtensionSequence) -> Result<()> {
    let tags = dh_cfcn_tags(seq)?;
    let g = seq_to_graph(seq)?;
    for i in 2..=seq.n() {
        for v in 0..i {
            let (a, b) = tags[v];
            let closed_count = g
                .neighbors(v)
                .iter()
                .filter(|&&w| w < i && tags[w].0 == b)
                .count()
                + usize::from(a == b);
            if b == 0 || closed_count != 1 {
                return Err(Error::InvalidSequence(format!(
                    "invariant 1 fails for vertex {v} in prefix {i}"
                )));
            }
            if a == b {
                let open: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| w < i)
                    .collect();
                let star = {
                    let mut d = None;
                    let mut ok = true;
                    for &w in &open {
                        let (aw, bw) = tags[w];
                        if aw != 0 {
                            ok = false;
                            break;
                        }
                        match d {
                            None => d = Some(bw),
                            Some(x) if x == bw => {}
                            _ => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    ok && d.map_or(false, |x| x != a)
                };
                let star_star = {
                    let mut counts = [0u32; 4];
                    for &w in &open {
                        counts[tags[w].0 as usize] += 1;
                    }
                    (1..=3).any(|c| counts[c] == 1)
                };
                if !star && !star_star {
                    return Err(Error::InvalidSequence(format!(
                        "invariant 2 fails for vertex {v} in prefix {i}"
                    )));
                }
            }
        }
    }
    Ok(())
}
