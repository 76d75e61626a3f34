//! DIMACS export of two-colour free-colouring instances.
//!
//! One variable per vertex (or edge, in canonical edge order); the variable is
//! true when the element has colour 1. Every `a_1`-clique gets a clause
//! forbidding colour 1 on all of its elements and every `a_2`-clique a clause
//! forbidding colour 2. The formula is satisfiable iff a free colouring exists.

use std::fmt::Write as _;

use super::{ArrowTuple, Mode};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfDocument {
    pub comments: Vec<String>,
    pub variables: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfDocument {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "c {c}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.variables, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

/// All `k`-cliques of `g` as vertex masks, in lexicographic order.
fn cliques(g: &Graph, k: usize) -> Vec<u64> {
    fn rec(adj: &[u64], need: usize, cand: u64, acc: u64, out: &mut Vec<u64>) {
        if need == 0 {
            out.push(acc);
            return;
        }
        for v in Bits(cand) {
            let rest = cand & adj[v] & !(2u64 << v).wrapping_sub(1);
            rec(adj, need - 1, rest, acc | (1 << v), out);
        }
    }
    let mut out = Vec::new();
    rec(g.adjacency(), k, g.vertices().bits(), 0, &mut out);
    out
}

pub fn export_cnf(g: &Graph, t: &ArrowTuple, mode: Mode) -> Result<CnfDocument> {
    if t.colors() != 2 {
        return Err(Error::Unsupported(format!(
            "CNF export handles two colours only, got {t}"
        )));
    }
    let n = g.order();
    let edges = g.edges();
    let mut var_of = vec![0i32; n * n];
    let mut comments = vec![
        format!(
            "free {} colouring of graph6 {} for tuple {t}",
            mode.name(),
            crate::graph6::emit(g)
        ),
        "variable true = colour 1, false = colour 2".to_string(),
    ];
    let variables = match mode {
        Mode::Vertex => {
            comments.extend((0..n).map(|v| format!("var {} = vertex {v}", v + 1)));
            n
        }
        Mode::Edge => {
            for (i, &(u, v)) in edges.iter().enumerate() {
                var_of[u * n + v] = i as i32 + 1;
                var_of[v * n + u] = i as i32 + 1;
                comments.push(format!("var {} = edge {u}-{v}", i + 1));
            }
            edges.len()
        }
    };

    let mut clauses = Vec::new();
    for (i, &a) in t.entries().iter().enumerate() {
        let sign = if i == 0 { -1 } else { 1 };
        match (mode, a) {
            (Mode::Vertex, _) => {
                for c in cliques(g, a) {
                    clauses.push(Bits(c).map(|v| sign * (v as i32 + 1)).collect());
                }
            }
            // class must hold no edge at all
            (Mode::Edge, 1) => clauses.extend((1..=edges.len() as i32).map(|x| vec![sign * x])),
            (Mode::Edge, _) => {
                for c in cliques(g, a) {
                    let vs: Vec<usize> = Bits(c).collect();
                    let clause = vs
                        .iter()
                        .enumerate()
                        .flat_map(|(j, &u)| vs[j + 1..].iter().map(move |&w| (u, w)))
                        .map(|(u, w)| sign * var_of[u * n + w])
                        .collect();
                    clauses.push(clause);
                }
            }
        }
    }
    Ok(CnfDocument {
        comments,
        variables,
        clauses,
    })
}
