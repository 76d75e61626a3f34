//! Immutable simple graphs on at most 64 vertices.
//!
//! Every vertex set is a single `u64`; vertex `v` is bit `v`. Adjacency is one
//! mask per vertex. Constructions place vertices densely at `0..order`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices of some host graph, as a bitmask. Serializes as the
/// ascending list of its vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = Error;

    fn try_from(vs: Vec<usize>) -> Result<Self> {
        match vs.iter().find(|&&v| v >= MAX_ORDER) {
            Some(&v) => Err(Error::Capacity {
                requested: v + 1,
                max: MAX_ORDER,
            }),
            None => Ok(vs.into_iter().collect()),
        }
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[must_use]
    pub const fn intersect(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// A simple undirected graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::Capacity {
            requested: n,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph {
            order: n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are rejected;
    /// repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks, validating symmetry, irreflexivity and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_capacity(n)?;
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::Domain(format!("vertex {v} has neighbours outside 0..{n}")));
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::Domain(format!("loop at vertex {v}")));
            }
            for u in Bits(row) {
                if (adj[u] >> v) & 1 == 0 {
                    return Err(Error::Domain(format!("asymmetric pair ({v},{u})")));
                }
            }
        }
        Ok(Graph { order: n, adj })
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_capacity(n)?;
        let all = low_mask(n);
        Ok(Graph {
            order: n,
            adj: (0..n).map(|v| all & !(1u64 << v)).collect(),
        })
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Circulant graph on `Z_n`: `i ~ i ± d` for each distance `d`, `1 <= d <= n/2`.
    pub fn circulant(n: usize, distances: &[usize]) -> Result<Self> {
        check_capacity(n)?;
        for &d in distances {
            if d == 0 || d > n / 2 {
                return Err(Error::Domain(format!(
                    "circulant distance {d} outside 1..={} for n = {n}",
                    n / 2
                )));
            }
        }
        Graph::from_edges(n, (0..n).flat_map(|i| distances.iter().map(move |&d| (i, (i + d) % n))))
    }

    #[must_use]
    pub fn complement(&self) -> Graph {
        let all = low_mask(self.order);
        Graph {
            order: self.order,
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &row)| !row & all & !(1u64 << v))
                .collect(),
        }
    }

    /// `g1 + g2`: disjoint union with every cross pair adjacent. `g1` occupies the
    /// low indices, `g2` is shifted by `g1.order()`.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let (n1, n2) = (g1.order, g2.order);
        check_capacity(n1 + n2)?;
        let left = low_mask(n1);
        let right = low_mask(n1 + n2) & !left;
        let mut adj = Vec::with_capacity(n1 + n2);
        adj.extend(g1.adj.iter().map(|&row| row | right));
        adj.extend(g2.adj.iter().map(|&row| (row << n1) | left));
        Ok(Graph { order: n1 + n2, adj })
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing vertex order.
    /// The second value maps new labels to host vertices.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let s = s.intersect(self.vertices());
        let map: Vec<usize> = s.iter().collect();
        let adj = map
            .iter()
            .map(|&host| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &other)| self.has_edge(host, other))
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        (Graph { order: map.len(), adj }, map)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && (self.adj[u] >> v) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Raw adjacency masks, one per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically. This is the canonical
    /// edge indexing used by edge colourings.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    /// True when every edge of `self` is an edge of `other` and the orders agree.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.order == other.order && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, {})",
            self.order,
            self.edge_count(),
            crate::graph6::emit(self)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs() {
        assert_eq!(Graph::complete(0).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(0).unwrap().order(), 0);
        assert_eq!(Graph::complete(3).unwrap().edge_count(), 3);
        assert_eq!(Graph::complete(12).unwrap().edge_count(), 66);
        assert_eq!(Graph::complete(64).unwrap().edge_count(), 2016);
        assert!(matches!(
            Graph::complete(65),
            Err(Error::Capacity { requested: 65, .. })
        ));
    }

    #[test]
    fn cycles() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(c5.has_edge(4, 0));
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert!(matches!(Graph::cycle(2), Err(Error::Domain(_))));
    }

    #[test]
    fn c5_is_self_complementary_by_counts() {
        let cc = Graph::cycle(5).unwrap().complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        // the complement of C5 is the pentagram, again a 5-cycle
        assert_eq!(cc, Graph::circulant(5, &[2]).unwrap());
    }

    #[test]
    fn circulants() {
        assert_eq!(Graph::circulant(5, &[1]).unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(Graph::circulant(13, &[1, 5]).unwrap().edge_count(), 26);
        assert_eq!(Graph::circulant(8, &[1, 4]).unwrap().edge_count(), 12);
        assert!(Graph::circulant(8, &[5]).is_err());
        assert!(Graph::circulant(8, &[0]).is_err());
        // distance n/2 in even order yields a perfect matching
        assert_eq!(Graph::circulant(8, &[4]).unwrap().edge_count(), 4);
    }

    #[test]
    fn complement_counts() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
        let q = Graph::circulant(13, &[1, 5]).unwrap().complement();
        assert_eq!(q.edge_count(), 52);
    }

    #[test]
    fn joins() {
        let g = Graph::join(&Graph::complete(3).unwrap(), &Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 23);
        assert!(g.has_edge(0, 3) && g.has_edge(3, 4) && g.has_edge(7, 3));
        assert!(!g.has_edge(3, 5));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(Graph::join(&Graph::empty(0).unwrap(), &c5).unwrap(), c5);
        assert_eq!(Graph::join(&c5, &Graph::empty(0).unwrap()).unwrap(), c5);
        let big = Graph::complete(40).unwrap();
        assert!(Graph::join(&big, &big).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let (all, map) = c5.induced(c5.vertices());
        assert_eq!(all, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let (k3, map) = Graph::complete(6).unwrap().induced([1, 3, 5].into_iter().collect());
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert_eq!(map, vec![1, 3, 5]);

        let (path, _) = c5.induced([0, 1, 2].into_iter().collect());
        assert_eq!(path.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn from_adjacency_validates() {
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0b000]).is_err());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (2, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (1, 2), (1, 3)]);
        assert!(g.is_spanning_subgraph_of(&Graph::complete(4).unwrap()));
        assert!(!Graph::complete(4).unwrap().is_spanning_subgraph_of(&g));
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 5, 63].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(63) && !s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 5, 63]);
        assert_eq!(s.without(5).with(1).to_vec(), vec![0, 1, 63]);
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
