//! Free-colouring checkers.

use super::{ArrowTuple, EdgeColoring, VertexColoring};
use crate::clique::find_clique;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_colors(colors: &[u8], r: usize) -> Result<()> {
    match colors.iter().find(|&&c| c == 0 || c as usize > r) {
        Some(c) => Err(Error::Arity(format!("colour {c} outside 1..={r}"))),
        None => Ok(()),
    }
}

/// True iff no colour class `i` of `c` contains an `a_i`-clique of `g`.
/// An entry `a_i = 1` means class `i` must be empty.
pub fn check_vertex_coloring_free(g: &Graph, t: &ArrowTuple, c: &VertexColoring) -> Result<bool> {
    if c.colors.len() != g.order() {
        return Err(Error::Arity(format!(
            "{} vertex colours supplied for {} vertices",
            c.colors.len(),
            g.order()
        )));
    }
    check_colors(&c.colors, t.colors())?;
    Ok(t.entries().iter().enumerate().all(|(i, &a)| {
        let class = c.class(i as u8 + 1).bits();
        find_clique(g.adjacency(), a, class).is_none()
    }))
}

/// True iff no colour class `i` of `c` spans all edges of some `a_i`-vertex set.
/// An entry `a_i = 1` means class `i` must be empty.
pub fn check_edge_coloring_free(g: &Graph, t: &ArrowTuple, c: &EdgeColoring) -> Result<bool> {
    if c.edges != g.edges() {
        return Err(Error::Arity(
            "edge colouring does not cover exactly the edges of the graph".into(),
        ));
    }
    check_colors(&c.colors, t.colors())?;
    for (i, &a) in t.entries().iter().enumerate() {
        let class = c.class_graph(g.order(), i as u8 + 1)?;
        let monochromatic = if a == 1 {
            class.edge_count() > 0
        } else {
            find_clique(class.adjacency(), a, class.vertices().bits()).is_some()
        };
        if monochromatic {
            return Ok(false);
        }
    }
    Ok(true)
}
