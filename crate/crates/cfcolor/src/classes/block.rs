//! Full CFON coloring of block graphs with at most 3 colors, by peeling
//! leaf blocks.

use crate::graph::{Coloring, Graph};
use crate::{Error, Result};

/// The 2-connected components of `g`, each as a sorted vertex list.
/// Isolated vertices yield no block.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut timer = 1u32;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut comps = Vec::new();

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == 0 {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (u, _, _)) = stack.last_mut() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut verts = std::collections::BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.insert(a);
                            verts.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        comps.push(verts.into_iter().collect());
                    }
                }
            }
        }
    }
    comps
}

/// True iff every 2-connected component of `g` induces a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    biconnected_components(g).iter().all(|block| {
        block
            .iter()
            .enumerate()
            .all(|(i, &u)| block[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

/// Full CFON coloring of a connected block graph with colors `{1, 2, 3}`.
///
/// The recursion of the inductive bound is realized iteratively: leaf
/// blocks are peeled off until a single block remains, that block is
/// colored as a clique (two vertices get the two first colors, the rest the
/// third), and the peeled blocks are re-attached in reverse order, each
/// leaf block receiving the color unused by its cut vertex and the cut
/// vertex's uniquely colored neighbor.
pub fn color_block_cfon(g: &Graph) -> Result<Coloring> {
    if g.n() < 2 {
        return Err(Error::IsolatedVertex(0));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let blocks = biconnected_components(g);
    for block in &blocks {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::NotBlockGraph);
                }
            }
        }
    }

    // peel leaf blocks: a block is a leaf while at most one of its vertices
    // is shared with other remaining blocks
    let nb = blocks.len();
    let mut membership: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for (bi, block) in blocks.iter().enumerate() {
        for &v in block {
            membership.entry(v).or_default().push(bi);
        }
    }
    let mut count: std::collections::HashMap<usize, usize> =
        membership.iter().map(|(&v, bs)| (v, bs.len())).collect();
    let mut alive = vec![true; nb];
    let mut peeled: Vec<(usize, usize)> = Vec::new(); // (block index, cut vertex)
    for _ in 1..nb {
        let leaf = (0..nb)
            .find(|&bi| {
                alive[bi] && blocks[bi].iter().filter(|&&v| count[&v] >= 2).count() <= 1
            })
            .expect("block-cut forest always has a leaf block");
        let cut = *blocks[leaf]
            .iter()
            .find(|&&v| count[&v] >= 2)
            .expect("non-root leaf block touches the rest in a cut vertex");
        alive[leaf] = false;
        for &v in &blocks[leaf] {
            *count.get_mut(&v).unwrap() -= 1;
        }
        peeled.push((leaf, cut));
    }
    let root = (0..nb).find(|&bi| alive[bi]).unwrap();

    let mut coloring = Coloring::uncolored(g.n(), 3);
    let mut done = vec![false; g.n()];
    for (i, &v) in blocks[root].iter().enumerate() {
        coloring.set(v, [1, 2, 3][i.min(2)]);
        done[v] = true;
    }
    for &(bi, cut) in peeled.iter().rev() {
        let c1 = coloring.color(cut);
        let mut counts = [0u32; 4];
        for &w in g.neighbors(cut) {
            if done[w] {
                counts[coloring.color(w) as usize] += 1;
            }
        }
        let c2 = (1..=3)
            .find(|&c| counts[c as usize] == 1)
            .expect("processed part is a valid full CFON coloring") as u32;
        let x = (1..=3).find(|&c| c != c1 && c != c2).unwrap();
        for &v in &blocks[bi] {
            if v != cut {
                coloring.set(v, x);
                done[v] = true;
            }
        }
    }
    Ok(coloring)
}
