//! Test-only helpers shared by the integration suites and the acceptance runner.
#![allow(dead_code)]

use std::collections::HashSet;

use folkman_core::Graph;
use rand::Rng;

/// Adjacency bits of the upper triangle under the vertex order `perm`.
fn code(adj: &[u64], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = (c << 1) | ((adj[perm[i]] >> perm[j]) & 1);
        }
    }
    c
}

/// Smallest code over vertex orders that list vertices by ascending degree.
/// Any isomorphism preserves degrees, so the minimum is a canonical form.
pub fn canonical(g: &Graph) -> (usize, u64) {
    let n = g.order();
    let adj = g.adjacency();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| adj[v].count_ones());
    let cells: Vec<Vec<usize>> = verts
        .chunk_by(|&a, &b| adj[a].count_ones() == adj[b].count_ones())
        .map(<[usize]>::to_vec)
        .collect();

    fn rec(adj: &[u64], cells: &[Vec<usize>], ci: usize, used: u64, perm: &mut Vec<usize>, best: &mut u64) {
        if ci == cells.len() {
            *best = (*best).min(code(adj, perm));
            return;
        }
        let cell = &cells[ci];
        let placed = perm.len() - cells[..ci].iter().map(Vec::len).sum::<usize>();
        if placed == cell.len() {
            return rec(adj, cells, ci + 1, used, perm, best);
        }
        for &v in cell {
            if used >> v & 1 == 0 {
                perm.push(v);
                rec(adj, cells, ci, used | 1 << v, perm, best);
                perm.pop();
            }
        }
    }
    let mut best = u64::MAX;
    rec(adj, &cells, 0, 0, &mut Vec::with_capacity(n), &mut best);
    (n, if n < 2 { 0 } else { best })
}

/// One graph per isomorphism class of each order `0..=max`, grown by adding
/// a vertex with every neighbourhood to the classes one order below.
pub fn all_graphs_up_to(max: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0).unwrap()]];
    for n in 1..=max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for nbrs in 0u64..1 << (n - 1) {
                let mut edges = g.edges();
                edges.extend((0..n - 1).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, n - 1)));
                let h = Graph::from_edges(n, edges).unwrap();
                if seen.insert(canonical(&h)) {
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }
    levels
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A random graph on `n` vertices with at most `max_edges` edges.
pub fn random_sparse_graph(rng: &mut impl Rng, n: usize, max_edges: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = rng.random_range(0..=max_edges.min(pairs.len()));
    for i in 0..m {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    Graph::from_edges(n, pairs).unwrap()
}

/// Largest clique by scanning every vertex subset; for small orders only.
pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (0..n).all(|v| v == u || s >> v & 1 == 0 || g.has_edge(u, v))))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Parses DIMACS text into (variables, clauses), checking the header counts.
pub fn parse_dimacs(text: &str) -> (usize, Vec<Vec<i32>>) {
    let mut header = None;
    let mut clauses = Vec::new();
    for line in text.lines() {
        if line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf ") {
            let nums: Vec<usize> = rest.split_whitespace().map(|x| x.parse().unwrap()).collect();
            header = Some((nums[0], nums[1]));
            continue;
        }
        let lits: Vec<i32> = line.split_whitespace().map(|x| x.parse().unwrap()).collect();
        assert_eq!(lits.last(), Some(&0), "clause not terminated: {line}");
        clauses.push(lits[..lits.len() - 1].to_vec());
    }
    let (vars, count) = header.expect("missing p line");
    assert_eq!(count, clauses.len());
    (vars, clauses)
}

/// Satisfiability by trying every assignment.
pub fn brute_satisfiable(vars: usize, clauses: &[Vec<i32>]) -> bool {
    assert!(vars <= 20);
    (0u32..1 << vars).any(|a| {
        clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let val = a >> (l.unsigned_abs() - 1) & 1 == 1;
                if l > 0 {
                    val
                } else {
                    !val
                }
            })
        })
    })
}
