//! Brute-force reference decider for tests: enumerates every colouring and
//! checks each one by scanning all vertex subsets. Shares no code with the
//! pruned search or with the clique engine.

use std::time::Instant;

use super::{ArrowTuple, ArrowVerdict, Coloring, EdgeColoring, Mode, Outcome, SearchStats, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest colouring space the oracle accepts.
pub const ORACLE_MAX_COLORINGS: u64 = 1 << 24;

/// Decides arrowing by full enumeration, with no pruning.
pub fn decide_with_oracle(g: &Graph, t: &ArrowTuple, mode: Mode) -> Result<ArrowVerdict> {
    let start = Instant::now();
    let r = t.colors() as u64;
    let edges = g.edges();
    let k = match mode {
        Mode::Vertex => g.order(),
        Mode::Edge => edges.len(),
    };
    let space = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(r).filter(|&s| s <= ORACLE_MAX_COLORINGS));
    let Some(space) = space else {
        return Err(Error::Oversized(format!("{r}^{k} colourings exceeds 2^24")));
    };

    let n = g.order();
    // colour of each pair (u, v), 0 when not an edge; vertex colours in `vc`
    let mut pair_color = vec![0u8; n * n];
    let mut vc = vec![1u8; n];
    let mut digits = vec![0u8; k];
    let mut outcome = Outcome::Arrows;
    let mut tried = 0u64;
    for _ in 0..space {
        tried += 1;
        match mode {
            Mode::Vertex => {
                for (v, d) in digits.iter().enumerate() {
                    vc[v] = d + 1;
                }
            }
            Mode::Edge => {
                for (&(u, v), d) in edges.iter().zip(&digits) {
                    pair_color[u * n + v] = d + 1;
                    pair_color[v * n + u] = d + 1;
                }
            }
        }
        let monochromatic = t.entries().iter().enumerate().any(|(i, &a)| {
            let color = i as u8 + 1;
            match mode {
                Mode::Vertex => any_subset(n, a, &mut |s| {
                    s.iter().all(|&v| vc[v] == color)
                        && s.iter()
                            .enumerate()
                            .all(|(j, &u)| s[j + 1..].iter().all(|&w| g.has_edge(u, w)))
                }),
                Mode::Edge if a == 1 => pair_color.contains(&color),
                Mode::Edge => any_subset(n, a, &mut |s| {
                    s.iter()
                        .enumerate()
                        .all(|(j, &u)| s[j + 1..].iter().all(|&w| pair_color[u * n + w] == color))
                }),
            }
        });
        if !monochromatic {
            let witness = match mode {
                Mode::Vertex => Coloring::Vertex(VertexColoring::new(vc.clone())),
                Mode::Edge => Coloring::Edge(EdgeColoring {
                    edges: edges.clone(),
                    colors: digits.iter().map(|d| d + 1).collect(),
                }),
            };
            outcome = Outcome::FreeWitness(witness);
            break;
        }
        // odometer, first element fastest
        for d in digits.iter_mut() {
            *d += 1;
            if (*d as u64) < r {
                break;
            }
            *d = 0;
        }
    }
    Ok(ArrowVerdict {
        outcome,
        stats: SearchStats {
            nodes: tried,
            elapsed: start.elapsed(),
            work_nodes: tried,
            ..Default::default()
        },
    })
}

/// Calls `f` on every increasing `k`-subset of `0..n` until it returns true.
fn any_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(n, k, v + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if k > n {
        return false;
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), f)
}
