//! Vertex and edge arrowing: `G →v (a_1,..,a_r)` and `G →e (a_1,..,a_r)`.
//!
//! The deciders search for a free colouring and certify arrowing by exhausting
//! the search tree. Witnesses are returned as colourings that the checkers in
//! [`check`] re-validate independently of the search.

pub mod check;
pub mod cnf;
pub mod oracle;
mod parallel;
mod search;

use std::fmt;
use std::num::NonZeroUsize;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use check::{check_edge_coloring_free, check_vertex_coloring_free};
pub use cnf::{export_cnf, CnfDocument};
pub use oracle::decide_with_oracle;

/// Maximum number of colours in a tuple.
pub const MAX_COLORS: usize = 8;

/// Target clique sizes `(a_1, .., a_r)`; colour `i` (1-based) forbids an `a_i`-clique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ArrowTuple(Vec<usize>);

impl ArrowTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries.len() > MAX_COLORS {
            return Err(Error::Domain(format!(
                "tuple needs 1..={MAX_COLORS} entries, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&a| a == 0) {
            return Err(Error::Domain(format!("tuple entries must be positive, got {bad}")));
        }
        Ok(ArrowTuple(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn max_entry(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn all_equal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    fn require_searchable(&self) -> Result<()> {
        match self.0.iter().find(|&&a| a < 2) {
            Some(_) => Err(Error::Domain(format!(
                "deciders need every entry >= 2, got {self}; entries equal to 1 are handled by the checkers only"
            ))),
            None => Ok(()),
        }
    }
}

impl TryFrom<Vec<usize>> for ArrowTuple {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        ArrowTuple::new(v)
    }
}

impl From<ArrowTuple> for Vec<usize> {
    fn from(t: ArrowTuple) -> Self {
        t.0
    }
}

impl fmt::Display for ArrowTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for ArrowTuple {
    type Err = Error;

    /// Accepts `3,4`, `(3,4)` or `3 4`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Domain(format!("tuple entry {p:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        ArrowTuple::new(entries)
    }
}

/// What gets coloured.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Vertex,
    Edge,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" | "v" => Ok(Mode::Vertex),
            "edge" | "e" => Ok(Mode::Edge),
            other => Err(Error::Domain(format!("mode must be vertex or edge, got {other:?}"))),
        }
    }
}

/// Colour (1-based) of every vertex of the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    pub colors: Vec<u8>,
}

impl VertexColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        VertexColoring { colors }
    }

    pub fn class(&self, color: u8) -> crate::graph::VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Colour (1-based) of every edge of the host graph, aligned with [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<u8>,
}

impl EdgeColoring {
    /// Pairs `colors` with the canonical edge list of `g`.
    pub fn new(g: &Graph, colors: Vec<u8>) -> Result<Self> {
        let edges = g.edges();
        if edges.len() != colors.len() {
            return Err(Error::Arity(format!(
                "{} edge colours supplied for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        Ok(EdgeColoring { edges, colors })
    }

    /// Colours every edge of `g` by membership in `class_one`: edges of `class_one`
    /// get colour 1, all others colour 2.
    pub fn split(g: &Graph, class_one: &Graph) -> Result<Self> {
        if class_one.order() != g.order() {
            return Err(Error::Arity("split graph has a different order".into()));
        }
        let colors = g
            .edges()
            .iter()
            .map(|&(u, v)| if class_one.has_edge(u, v) { 1 } else { 2 })
            .collect();
        EdgeColoring::new(g, colors)
    }

    /// The spanning subgraph formed by the edges of one colour.
    pub fn class_graph(&self, order: usize, color: u8) -> Result<Graph> {
        Graph::from_edges(
            order,
            self.edges
                .iter()
                .zip(&self.colors)
                .filter(|&(_, &c)| c == color)
                .map(|(&e, _)| e),
        )
    }
}

/// A witness colouring of either kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Coloring {
    Vertex(VertexColoring),
    Edge(EdgeColoring),
}

impl Coloring {
    pub fn mode(&self) -> Mode {
        match self {
            Coloring::Vertex(_) => Mode::Vertex,
            Coloring::Edge(_) => Mode::Edge,
        }
    }

    /// Re-validates the colouring against `g` and `t` with the free-colouring checkers.
    pub fn is_free_for(&self, g: &Graph, t: &ArrowTuple) -> Result<bool> {
        match self {
            Coloring::Vertex(c) => check_vertex_coloring_free(g, t, c),
            Coloring::Edge(c) => check_edge_coloring_free(g, t, c),
        }
    }
}

/// Limits for a decider run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub workers: NonZeroUsize,
}

impl SearchBudget {
    /// No limits, one worker.
    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            max_time: None,
            workers: NonZeroUsize::MIN,
        }
    }

    /// 10^8 nodes, 60 s, one worker per available core.
    pub fn standard() -> Self {
        SearchBudget {
            max_nodes: Some(100_000_000),
            max_time: Some(Duration::from_secs(60)),
            workers: std::thread::available_parallelism().unwrap_or(NonZeroUsize::MIN),
        }
    }

    #[must_use]
    pub fn with_nodes(mut self, n: u64) -> Self {
        self.max_nodes = Some(n);
        self
    }

    #[must_use]
    pub fn with_time(mut self, d: Duration) -> Self {
        self.max_time = Some(d);
        self
    }

    #[must_use]
    pub fn with_workers(mut self, w: usize) -> Self {
        self.workers = NonZeroUsize::new(w).unwrap_or(NonZeroUsize::MIN);
        self
    }

    pub fn is_bounded(&self) -> bool {
        self.max_nodes.is_some() || self.max_time.is_some()
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::standard()
    }
}

/// Result of a decider.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Arrows,
    FreeWitness(Coloring),
    Unknown,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Arrows => "arrows",
            Outcome::FreeWitness(_) => "free",
            Outcome::Unknown => "unknown",
        }
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Outcome::FreeWitness(c) => Some(c),
            _ => None,
        }
    }
}

/// Search statistics. `nodes` counts (element, colour) trials in the canonical
/// sequential order and does not depend on the worker count; `work_nodes` and
/// `elapsed` describe the actual run and are not serialized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub frontier_size: usize,
    pub open_subtrees: usize,
    pub max_nodes: Option<u64>,
    #[serde(skip)]
    pub work_nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub outcome: Outcome,
    pub stats: SearchStats,
}

impl ArrowVerdict {
    pub fn is_arrows(&self) -> bool {
        matches!(self.outcome, Outcome::Arrows)
    }

    pub fn is_free(&self) -> bool {
        matches!(self.outcome, Outcome::FreeWitness(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.outcome, Outcome::Unknown)
    }
}

impl Serialize for ArrowVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            outcome: &'static str,
            witness: Option<&'a Coloring>,
            stats: &'a SearchStats,
        }
        Repr {
            outcome: self.outcome.label(),
            witness: self.outcome.witness(),
            stats: &self.stats,
        }
        .serialize(s)
    }
}

/// Decides `g →v t`.
pub fn vertex_arrows(g: &Graph, t: &ArrowTuple, budget: &SearchBudget) -> Result<ArrowVerdict> {
    t.require_searchable()?;
    Ok(parallel::decide(&search::Instance::new(g, t, Mode::Vertex), budget))
}

/// Decides `g →e t`.
pub fn edge_arrows(g: &Graph, t: &ArrowTuple, budget: &SearchBudget) -> Result<ArrowVerdict> {
    t.require_searchable()?;
    Ok(parallel::decide(&search::Instance::new(g, t, Mode::Edge), budget))
}

/// Dispatches on `mode`.
pub fn arrows(g: &Graph, t: &ArrowTuple, mode: Mode, budget: &SearchBudget) -> Result<ArrowVerdict> {
    match mode {
        Mode::Vertex => vertex_arrows(g, t, budget),
        Mode::Edge => edge_arrows(g, t, budget),
    }
}
