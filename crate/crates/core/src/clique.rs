//! Exact clique and independence computations over bitmask adjacency.
//!
//! The slice-level functions take raw adjacency rows (`adj[v]` is the neighbour
//! mask of `v`) so the arrowing search can query colour-class graphs directly.

use serde::Serialize;

use crate::graph::{Bits, Graph, VertexSet};

/// A maximum clique (or independent set) together with a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: VertexSet,
}

/// `cl(g)` with the lexicographically smallest maximum clique.
pub fn clique_number(g: &Graph) -> CliqueResult {
    let within = g.vertices().bits();
    let size = max_clique_size(g.adjacency(), within);
    let witness = find_clique(g.adjacency(), size, within).expect("a clique of maximum size exists");
    CliqueResult {
        size,
        witness: VertexSet::from_bits(witness),
    }
}

/// `α(g)`, computed as the clique number of the complement.
pub fn independence_number(g: &Graph) -> CliqueResult {
    clique_number(&g.complement())
}

/// A `k`-clique of `g` inside `within`, if any. `k = 0` yields the empty set.
pub fn has_clique(g: &Graph, k: usize, within: VertexSet) -> Option<VertexSet> {
    let within = within.intersect(g.vertices()).bits();
    find_clique(g.adjacency(), k, within).map(VertexSet::from_bits)
}

/// True when `s` is pairwise adjacent in `g`. Independent of the search code.
pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| s.without(u).iter().all(|v| g.has_edge(u, v)))
}

/// True when `s` is pairwise non-adjacent in `g`.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|u| s.without(u).iter().all(|v| !g.has_edge(u, v)))
}

/// Vertex removal order of the min-degree peeling on `g[within]`; ties go to the
/// lowest index. Reversing it puts the densest core first.
pub fn degeneracy_order(adj: &[u64], within: u64) -> Vec<usize> {
    let mut left = within;
    let mut order = Vec::with_capacity(within.count_ones() as usize);
    while left != 0 {
        let v = Bits(left)
            .min_by_key(|&v| (adj[v] & left).count_ones())
            .expect("non-empty");
        order.push(v);
        left &= !(1u64 << v);
    }
    order
}

/// Lexicographically smallest `k`-clique within `within`, by ascending DFS.
/// Bounds only cut branches that contain no solution, so the first hit is minimal.
pub fn find_clique(adj: &[u64], k: usize, within: u64) -> Option<u64> {
    extend(adj, k, within, 0)
}

fn extend(adj: &[u64], need: usize, cand: u64, acc: u64) -> Option<u64> {
    match need {
        0 => return Some(acc),
        1 => return (cand != 0).then(|| acc | (cand & cand.wrapping_neg())),
        2 => {
            for v in Bits(cand) {
                let above = adj[v] & cand & !(2u64 << v).wrapping_sub(1);
                if above != 0 {
                    return Some(acc | (1 << v) | (above & above.wrapping_neg()));
                }
            }
            return None;
        }
        _ => {}
    }
    if (cand.count_ones() as usize) < need || color_bound(adj, cand, need) < need {
        return None;
    }
    for v in Bits(cand) {
        let rest = adj[v] & cand & !(2u64 << v).wrapping_sub(1);
        if rest.count_ones() as usize + 1 < need {
            continue;
        }
        if let Some(found) = extend(adj, need - 1, rest, acc | (1 << v)) {
            return Some(found);
        }
    }
    None
}

/// Number of colours of a greedy colouring of `cand`, stopping early once it
/// reaches `cap`. An upper bound on the clique number of `g[cand]`.
fn color_bound(adj: &[u64], cand: u64, cap: usize) -> usize {
    let mut uncolored = cand;
    let mut colors = 0;
    while uncolored != 0 {
        colors += 1;
        if colors >= cap {
            return colors;
        }
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !adj[v] & !(1u64 << v);
            uncolored &= !(1u64 << v);
        }
    }
    colors
}

/// Size of a maximum clique of `g[within]`: bitset branch and bound with greedy
/// colouring bounds over a degeneracy-based vertex order.
pub fn max_clique_size(adj: &[u64], within: u64) -> usize {
    if within == 0 {
        return 0;
    }
    let mut order = degeneracy_order(adj, within);
    order.reverse();
    let mut position = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let permuted: Vec<u64> = order
        .iter()
        .map(|&v| Bits(adj[v] & within).fold(0u64, |acc, u| acc | (1 << position[u])))
        .collect();
    let mut best = 1;
    let all = if order.len() == 64 {
        u64::MAX
    } else {
        (1u64 << order.len()) - 1
    };
    expand_max(&permuted, all, 0, &mut best);
    best
}

fn expand_max(adj: &[u64], mut cand: u64, depth: usize, best: &mut usize) {
    // greedy colouring in index order; vertices listed by non-decreasing colour
    let mut ranked: Vec<(usize, usize)> = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !adj[v] & !(1u64 << v);
            uncolored &= !(1u64 << v);
            ranked.push((v, color));
        }
    }
    for &(v, color) in ranked.iter().rev() {
        if depth + color <= *best {
            return;
        }
        let next = cand & adj[v];
        if next == 0 {
            *best = (*best).max(depth + 1);
        } else {
            expand_max(adj, next, depth + 1, best);
        }
        cand &= !(1u64 << v);
    }
}
