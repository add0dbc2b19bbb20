//! Exhaustive oracles: minimum conflict-free chromatic numbers by pruned
//! backtracking, proper chromatic number, and brute-force perfect
//! independent dominating sets. These are the ground truth the constructive
//! colorers and the clique-width dynamic program are tested against.

use crate::graph::{Coloring, Graph, Mode, Neighborhood, Variant};
use crate::{Error, Result};

/// Searches for a conflict-free coloring of `g` in mode `m` with palette
/// `{1..k}` (plus 0 in the partial variants).
///
/// Backtracks over vertices in id order, colors ascending, so the first
/// witness found is deterministic. A branch is abandoned as soon as some
/// vertex has its entire relevant neighborhood assigned without a uniquely
/// occurring nonzero color. Returns `None` when no coloring exists (in
/// particular under ON when the graph has an isolated vertex).
pub fn exists_cf_coloring(g: &Graph, m: Mode, k: u32) -> Option<Coloring> {
    assert!(k >= 1);
    let n = g.n();
    if n == 0 {
        return Some(Coloring::uncolored(0, k));
    }
    if m.neighborhood == Neighborhood::Open && (0..n).any(|v| g.degree(v) == 0) {
        return None;
    }
    // closes_at[p]: vertices whose relevant neighborhood is fully assigned
    // once vertex p receives a color
    let mut closes_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        let last_neighbor = g.neighbors(u).last().copied();
        let last = match m.neighborhood {
            Neighborhood::Open => last_neighbor.expect("isolated vertices rejected above"),
            Neighborhood::Closed => last_neighbor.map_or(u, |x| x.max(u)),
        };
        closes_at[last].push(u);
    }
    let lo = match m.variant {
        Variant::Partial => 0,
        Variant::Full => 1,
    };
    let mut assignment = vec![0u32; n];
    if search(g, m, k, lo, &closes_at, &mut assignment, 0) {
        Some(Coloring::new(assignment, k))
    } else {
        None
    }
}

fn search(
    g: &Graph,
    m: Mode,
    k: u32,
    lo: u32,
    closes_at: &[Vec<usize>],
    assignment: &mut Vec<u32>,
    p: usize,
) -> bool {
    if p == g.n() {
        return true;
    }
    for c in lo..=k {
        assignment[p] = c;
        let ok = closes_at[p]
            .iter()
            .all(|&u| dominated(g, m, k, assignment, u));
        if ok && search(g, m, k, lo, closes_at, assignment, p + 1) {
            return true;
        }
    }
    assignment[p] = 0;
    false
}

fn dominated(g: &Graph, m: Mode, k: u32, assignment: &[u32], u: usize) -> bool {
    let mut counts = vec![0u32; k as usize + 1];
    for &w in g.neighbors(u) {
        counts[assignment[w] as usize] += 1;
    }
    if m.neighborhood == Neighborhood::Closed {
        counts[assignment[u] as usize] += 1;
    }
    counts[1..].iter().any(|&x| x == 1)
}

/// The smallest `k <= max_k` for which [`exists_cf_coloring`] succeeds.
pub fn min_cf_colors(g: &Graph, m: Mode, max_k: u32) -> Option<u32> {
    (1..=max_k).find(|&k| exists_cf_coloring(g, m, k).is_some())
}

/// A proper vertex coloring of `g` with colors `{1..k}`, if one exists.
/// Symmetry is broken by allowing at most one fresh color per step.
pub fn proper_coloring(g: &Graph, k: u32) -> Option<Coloring> {
    let n = g.n();
    let mut assignment = vec![0u32; n];
    fn go(g: &Graph, k: u32, assignment: &mut Vec<u32>, p: usize, max_used: u32) -> bool {
        if p == g.n() {
            return true;
        }
        for c in 1..=k.min(max_used + 1) {
            if g.neighbors(p).iter().all(|&w| assignment[w] != c) {
                assignment[p] = c;
                if go(g, k, assignment, p + 1, max_used.max(c)) {
                    return true;
                }
            }
        }
        assignment[p] = 0;
        false
    }
    if go(g, k, &mut assignment, 0, 0) {
        Some(Coloring::new(assignment, k))
    } else {
        None
    }
}

/// The chromatic number of `g`, if it is at most `max_k`.
pub fn chromatic_number(g: &Graph, max_k: u32) -> Option<u32> {
    if g.n() == 0 {
        return Some(0).filter(|&c| c <= max_k);
    }
    (1..=max_k).find(|&k| proper_coloring(g, k).is_some())
}

/// Brute-force search for a perfect independent dominating set: an
/// independent `S` such that every vertex outside `S` has exactly one
/// neighbor in `S`. Subsets are enumerated in ascending bitmask order, so
/// the witness is deterministic.
pub fn has_pid_bruteforce(g: &Graph, ceiling: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > ceiling {
        return Err(Error::CeilingExceeded { got: n, ceiling });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    'mask: for mask in 0u64..(1 << n) {
        for v in 0..n {
            let in_s = mask >> v & 1 == 1;
            let nbrs = g
                .neighbors(v)
                .iter()
                .filter(|&&w| mask >> w & 1 == 1)
                .count();
            if in_s && nbrs != 0 {
                continue 'mask; // not independent
            }
            if !in_s && nbrs != 1 {
                continue 'mask;
            }
        }
        return Ok(Some((0..n).filter(|&v| mask >> v & 1 == 1).collect()));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify;
    use crate::named::named_graph;

    /// Naive oracle: enumerate all (k+1)^n assignments.
    fn naive_exists(g: &Graph, m: Mode, k: u32) -> bool {
        let n = g.n();
        let radix = match m.variant {
            Variant::Partial => k + 1,
            Variant::Full => k,
        };
        let offset = match m.variant {
            Variant::Partial => 0,
            Variant::Full => 1,
        };
        let total = (radix as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut assignment = Vec::with_capacity(n);
            for _ in 0..n {
                assignment.push((c % radix as u64) as u32 + offset);
                c /= radix as u64;
            }
            let coloring = Coloring::new(assignment, k);
            if verify(g, &coloring, m).map_or(false, |r| r.is_valid()) {
                return true;
            }
        }
        false
    }

    #[test]
    fn k3_needs_two_on_colors() {
        let g = named_graph("k3").unwrap();
        assert!(exists_cf_coloring(&g, Mode::on_partial(), 1).is_none());
        let c = exists_cf_coloring(&g, Mode::on_partial(), 2).unwrap();
        assert!(verify(&g, &c, Mode::on_partial()).unwrap().is_valid());
        assert_eq!(min_cf_colors(&g, Mode::on_partial(), 3), Some(2));
    }

    #[test]
    fn k2_single_color() {
        let g = named_graph("k2").unwrap();
        let c = exists_cf_coloring(&g, Mode::on_partial(), 1).unwrap();
        assert!(verify(&g, &c, Mode::on_partial()).unwrap().is_valid());
    }

    #[test]
    fn bull_cn_is_two() {
        let g = named_graph("bull").unwrap();
        assert_eq!(min_cf_colors(&g, Mode::cn_partial(), 3), Some(2));
    }

    #[test]
    fn unitsq_example_on_is_three() {
        let g = named_graph("unitsq-example").unwrap();
        assert_eq!(min_cf_colors(&g, Mode::on_partial(), 3), Some(3));
    }

    #[test]
    fn solver_matches_naive_enumeration() {
        for seed in 0..25 {
            let g = crate::generators::random_graph(7, 0.4, seed);
            if (0..g.n()).any(|v| g.degree(v) == 0) {
                continue;
            }
            for m in Mode::ALL {
                for k in 1..=3 {
                    assert_eq!(
                        exists_cf_coloring(&g, m, k).is_some(),
                        naive_exists(&g, m, k),
                        "seed {seed} mode {m} k {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        for seed in 0..10 {
            let g = crate::generators::random_graph(7, 0.5, seed + 100);
            if (0..g.n()).any(|v| g.degree(v) == 0) {
                continue;
            }
            for m in Mode::ALL {
                for k in 1..=2 {
                    if exists_cf_coloring(&g, m, k).is_some() {
                        assert!(exists_cf_coloring(&g, m, k + 1).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_verify_and_are_deterministic() {
        for seed in 0..10 {
            let g = crate::generators::random_graph(8, 0.45, seed + 50);
            if (0..g.n()).any(|v| g.degree(v) == 0) {
                continue;
            }
            for m in Mode::ALL {
                if let Some(c) = exists_cf_coloring(&g, m, 3) {
                    assert!(verify(&g, &c, m).unwrap().is_valid());
                    assert_eq!(exists_cf_coloring(&g, m, 3), Some(c));
                }
            }
        }
    }

    #[test]
    fn chromatic_basics() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(chromatic_number(&c5, 5), Some(3));
        assert_eq!(chromatic_number(&named_graph("k3").unwrap(), 5), Some(3));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(chromatic_number(&p3, 5), Some(2));
        assert_eq!(chromatic_number(&c5, 2), None);
    }

    #[test]
    fn pid_examples() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(has_pid_bruteforce(&star, 20).unwrap(), Some(vec![0]));
        let k2 = named_graph("k2").unwrap();
        assert_eq!(has_pid_bruteforce(&k2, 20).unwrap(), Some(vec![0]));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(has_pid_bruteforce(&c4, 20).unwrap(), None);
    }

    #[test]
    fn pid_ceiling() {
        let g = Graph::new(25);
        assert!(matches!(
            has_pid_bruteforce(&g, 20),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn pid_iff_one_color_cfcn() {
        for seed in 0..40 {
            let g = crate::generators::random_graph(7, 0.35, seed + 400);
            let pid = has_pid_bruteforce(&g, 20).unwrap();
            let one = exists_cf_coloring(&g, Mode::cn_partial(), 1);
            assert_eq!(pid.is_some(), one.is_some(), "seed {seed}");
        }
    }
}
