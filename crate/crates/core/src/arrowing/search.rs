//! Backtracking search for free colourings with forward checking.
//!
//! Every uncoloured element keeps a domain of colours it can still take without
//! completing a forbidden monochromatic clique. Assigning colour `c` only shrinks
//! the `c`-bit of elements that could share a new clique with the assigned one,
//! so domains stay exact. Elements with a single remaining colour are taken
//! first; otherwise the static order decides.

use std::time::Instant;

use super::{ArrowTuple, Coloring, EdgeColoring, Mode, VertexColoring};
use crate::clique::{degeneracy_order, find_clique};
use crate::graph::{Bits, Graph};

const UNCOLORED: u8 = u8::MAX;
const NO_ELEMENT: u16 = u16::MAX;
/// Clock and cancellation are polled once per this many nodes.
const POLL_MASK: u64 = (1 << 12) - 1;

/// One (element position, colour) decision.
pub(crate) type Step = (u16, u8);

/// Immutable description of a search problem.
pub(crate) struct Instance<'g> {
    pub(crate) g: &'g Graph,
    pub(crate) mode: Mode,
    sizes: Vec<usize>,
    symmetric: bool,
    /// Element endpoints in search order; vertex elements use `(v, v)`.
    elements: Vec<(u8, u8)>,
    /// Vertex mode: position of vertex `v` at `[v]`. Edge mode: position of edge
    /// `{u, v}` at `[u * n + v]` and `[v * n + u]`.
    position: Vec<u16>,
    initial_domain: u8,
}

impl<'g> Instance<'g> {
    pub(crate) fn new(g: &'g Graph, t: &ArrowTuple, mode: Mode) -> Self {
        let n = g.order();
        let sizes = t.entries().to_vec();
        // smallest clique one element can complete on its own
        let trivial = match mode {
            Mode::Vertex => 1,
            Mode::Edge => 2,
        };
        let initial_domain = sizes
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a > trivial)
            .fold(0u8, |acc, (i, _)| acc | (1 << i));

        let (elements, position) = match mode {
            Mode::Vertex => {
                let mut order = degeneracy_order(g.adjacency(), g.vertices().bits());
                order.reverse();
                let mut position = vec![NO_ELEMENT; n];
                for (i, &v) in order.iter().enumerate() {
                    position[v] = i as u16;
                }
                (order.iter().map(|&v| (v as u8, v as u8)).collect(), position)
            }
            Mode::Edge => {
                let adj = g.adjacency();
                let mut edges = g.edges();
                edges.sort_by_key(|&(u, v)| {
                    let triangles = (adj[u] & adj[v]).count_ones();
                    (std::cmp::Reverse(triangles), v, u)
                });
                let mut position = vec![NO_ELEMENT; n * n];
                for (i, &(u, v)) in edges.iter().enumerate() {
                    position[u * n + v] = i as u16;
                    position[v * n + u] = i as u16;
                }
                (edges.iter().map(|&(u, v)| (u as u8, v as u8)).collect(), position)
            }
        };

        Instance {
            g,
            mode,
            symmetric: t.all_equal(),
            sizes,
            elements,
            position,
            initial_domain,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    fn colors(&self) -> usize {
        self.sizes.len()
    }

    /// Converts per-position colours (0-based) to a host-indexed witness.
    fn witness(&self, color: &[u8]) -> Coloring {
        match self.mode {
            Mode::Vertex => {
                let mut out = vec![0u8; self.g.order()];
                for (p, &(v, _)) in self.elements.iter().enumerate() {
                    out[v as usize] = color[p] + 1;
                }
                Coloring::Vertex(VertexColoring::new(out))
            }
            Mode::Edge => {
                let n = self.g.order();
                let edges = self.g.edges();
                let colors = edges
                    .iter()
                    .map(|&(u, v)| color[self.position[u * n + v] as usize] + 1)
                    .collect();
                Coloring::Edge(EdgeColoring { edges, colors })
            }
        }
    }
}

/// Limits and bookkeeping for one DFS run.
pub(crate) struct Control<'a> {
    pub(crate) nodes: u64,
    pub(crate) limit: Option<u64>,
    pub(crate) deadline: Option<Instant>,
    pub(crate) cancel: Option<&'a (dyn Fn() -> bool + Sync)>,
    /// When set, paths reaching this many steps are recorded instead of expanded.
    pub(crate) collect_depth: Option<usize>,
    pub(crate) frontier: Vec<Vec<Step>>,
    pub(crate) witness: Option<Coloring>,
    pub(crate) stop: Stop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    None,
    NodeLimit,
    Deadline,
    Cancelled,
}

impl<'a> Control<'a> {
    pub(crate) fn new(limit: Option<u64>, deadline: Option<Instant>) -> Self {
        Control {
            nodes: 0,
            limit,
            deadline,
            cancel: None,
            collect_depth: None,
            frontier: Vec::new(),
            witness: None,
            stop: Stop::None,
        }
    }

    /// Counts one node; false once a limit is hit.
    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.limit.is_some_and(|l| self.nodes > l) {
            self.stop = Stop::NodeLimit;
            return false;
        }
        if self.nodes & POLL_MASK == 0 {
            return self.poll();
        }
        true
    }

    pub(crate) fn poll(&mut self) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stop = Stop::Deadline;
            return false;
        }
        if self.cancel.is_some_and(|f| f()) {
            self.stop = Stop::Cancelled;
            return false;
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flow {
    Exhausted,
    Found,
    Stopped,
}

/// Mutable search state over an [`Instance`].
pub(crate) struct Search<'i, 'g> {
    inst: &'i Instance<'g>,
    color: Vec<u8>,
    domain: Vec<u8>,
    uncolored: Vec<u64>,
    forced: Vec<u64>,
    /// Edge mode: `class_adj[c * n + v]`, the colour-`c` neighbourhood of `v`.
    class_adj: Vec<u64>,
    /// Vertex mode: vertices of colour `c`.
    class_set: Vec<u64>,
    used: Vec<u32>,
    trail: Vec<Step>,
    path: Vec<Step>,
    /// True when some element has an empty domain before any assignment.
    dead_at_root: bool,
}

#[inline]
fn set_bit(words: &mut [u64], i: usize, on: bool) {
    if on {
        words[i >> 6] |= 1 << (i & 63);
    } else {
        words[i >> 6] &= !(1 << (i & 63));
    }
}

#[inline]
fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| (i << 6) | w.trailing_zeros() as usize)
}

impl<'i, 'g> Search<'i, 'g> {
    pub(crate) fn new(inst: &'i Instance<'g>) -> Self {
        let m = inst.len();
        let n = inst.g.order();
        let words = m.div_ceil(64).max(1);
        let mut s = Search {
            inst,
            color: vec![UNCOLORED; m],
            domain: vec![inst.initial_domain; m],
            uncolored: vec![0; words],
            forced: vec![0; words],
            class_adj: vec![0; if inst.mode == Mode::Edge { inst.colors() * n } else { 0 }],
            class_set: vec![0; inst.colors()],
            used: vec![0; inst.colors()],
            trail: Vec::new(),
            path: Vec::new(),
            dead_at_root: m > 0 && inst.initial_domain == 0,
        };
        for p in 0..m {
            set_bit(&mut s.uncolored, p, true);
        }
        if inst.initial_domain.count_ones() == 1 {
            s.forced.clone_from(&s.uncolored);
        }
        s
    }

    /// Re-applies a recorded path. Each step must have been legal when recorded.
    pub(crate) fn replay(&mut self, path: &[Step]) {
        for &(p, c) in path {
            let ok = self.assign(p as usize, c);
            debug_assert!(ok, "replayed step became illegal");
            self.path.push((p, c));
        }
    }

    fn restrict(&mut self, p: usize, c: u8) -> bool {
        let old = self.domain[p];
        let new = old & !(1 << c);
        self.trail.push((p as u16, old));
        self.domain[p] = new;
        set_bit(&mut self.forced, p, new.count_ones() == 1);
        new != 0
    }

    /// Colours element `p` with `c` and forward-checks affected elements.
    /// Returns false when some element is left without colours; the caller
    /// must still [`Search::unassign`].
    fn assign(&mut self, p: usize, c: u8) -> bool {
        let inst = self.inst;
        let ci = c as usize;
        let a = inst.sizes[ci];
        self.color[p] = c;
        self.used[ci] += 1;
        set_bit(&mut self.uncolored, p, false);
        set_bit(&mut self.forced, p, false);
        let adj = inst.g.adjacency();
        let n = inst.g.order();

        match inst.mode {
            Mode::Vertex => {
                let v = inst.elements[p].0 as usize;
                self.class_set[ci] |= 1 << v;
                let class = self.class_set[ci];
                for w in Bits(adj[v]) {
                    let q = inst.position[w] as usize;
                    if self.color[q] != UNCOLORED || self.domain[q] & (1 << c) == 0 {
                        continue;
                    }
                    if find_clique(adj, a - 1, adj[w] & class).is_some() && !self.restrict(q, c) {
                        return false;
                    }
                }
            }
            Mode::Edge => {
                let (u, v) = (inst.elements[p].0 as usize, inst.elements[p].1 as usize);
                let base = ci * n;
                self.class_adj[base + u] |= 1 << v;
                self.class_adj[base + v] |= 1 << u;
                let (cu, cv) = (self.class_adj[base + u], self.class_adj[base + v]);
                // a new a-clique through {x,y} must contain u and v
                for y in Bits(cv & !(1 << u)) {
                    if !self.recheck_edge(u, y, c) {
                        return false;
                    }
                }
                for y in Bits(cu & !(1 << v)) {
                    if !self.recheck_edge(v, y, c) {
                        return false;
                    }
                }
                let common = cu & cv;
                for x in Bits(common) {
                    for y in Bits(common & adj[x] & !(2u64 << x).wrapping_sub(1)) {
                        if !self.recheck_edge(x, y, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Drops colour `c` from edge `{x, y}` if it would now close a forbidden clique.
    #[inline]
    fn recheck_edge(&mut self, x: usize, y: usize, c: u8) -> bool {
        let inst = self.inst;
        let n = inst.g.order();
        let q = inst.position[x * n + y];
        if q == NO_ELEMENT {
            return true;
        }
        let q = q as usize;
        if self.color[q] != UNCOLORED || self.domain[q] & (1 << c) == 0 {
            return true;
        }
        let base = c as usize * n;
        let class = &self.class_adj[base..base + n];
        if find_clique(class, inst.sizes[c as usize] - 2, class[x] & class[y]).is_some() {
            return self.restrict(q, c);
        }
        true
    }

    fn unassign(&mut self, p: usize, mark: usize) {
        while self.trail.len() > mark {
            let (q, old) = self.trail.pop().expect("trail above mark");
            self.domain[q as usize] = old;
            set_bit(&mut self.forced, q as usize, old.count_ones() == 1);
        }
        let inst = self.inst;
        let c = self.color[p];
        let ci = c as usize;
        self.used[ci] -= 1;
        match inst.mode {
            Mode::Vertex => {
                self.class_set[ci] &= !(1 << inst.elements[p].0);
            }
            Mode::Edge => {
                let n = inst.g.order();
                let (u, v) = (inst.elements[p].0 as usize, inst.elements[p].1 as usize);
                self.class_adj[ci * n + u] &= !(1 << v);
                self.class_adj[ci * n + v] &= !(1 << u);
            }
        }
        self.color[p] = UNCOLORED;
        set_bit(&mut self.uncolored, p, true);
        set_bit(&mut self.forced, p, self.domain[p].count_ones() == 1);
    }

    /// Colours allowed at a branching on `p`. With interchangeable colours only
    /// used colours plus the first unused one are tried.
    fn choices(&self, p: usize) -> u8 {
        let mut allowed = self.domain[p];
        if self.inst.symmetric {
            let used = self.used.iter().take_while(|&&k| k > 0).count();
            let upto = (used + 1).min(self.inst.colors());
            allowed &= ((1u16 << upto) - 1) as u8;
        }
        allowed
    }

    pub(crate) fn dfs(&mut self, ctl: &mut Control<'_>) -> Flow {
        if self.dead_at_root {
            return Flow::Exhausted;
        }
        if let Some(depth) = ctl.collect_depth {
            if self.path.len() >= depth && first_bit(&self.uncolored).is_some() {
                ctl.frontier.push(self.path.clone());
                return Flow::Exhausted;
            }
        }
        let Some(p) = first_bit(&self.forced).or_else(|| first_bit(&self.uncolored)) else {
            ctl.witness = Some(self.inst.witness(&self.color));
            return Flow::Found;
        };
        for c in Bits(self.choices(p) as u64) {
            if !ctl.tick() {
                return Flow::Stopped;
            }
            let c = c as u8;
            let mark = self.trail.len();
            let ok = self.assign(p, c);
            if ok {
                self.path.push((p as u16, c));
                let flow = self.dfs(ctl);
                self.path.pop();
                if flow != Flow::Exhausted {
                    self.unassign(p, mark);
                    return flow;
                }
            }
            self.unassign(p, mark);
        }
        Flow::Exhausted
    }
}
