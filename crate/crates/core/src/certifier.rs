//! Hypothesis checking for the two Folkman upper-bound constructions:
//! `K_{R-2a+alpha+4} + U` for `F_e(3,a;R-a+alpha+4)` and `K12 + Q` for
//! `F_e(4,4;17)`.
//!
//! Reports hold no timings, so with one worker they serialize to identical
//! bytes on every run.

use serde::Serialize;
use serde_json::json;

use crate::arrowing::{edge_arrows, vertex_arrows, ArrowTuple, ArrowVerdict, SearchBudget, MAX_COLORS};
use crate::clique::{clique_number, independence_number, CliqueResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::registry::{Kind, Registry};
use crate::report::{CheckStatus, HypothesisCheck, Overall};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// `F_e(a_1,...,a_r;q)` exists iff `q > max a_i`.
pub fn validate_folkman_q(t: &ArrowTuple, q: usize) -> bool {
    q > t.max_entry()
}

#[derive(Clone, Debug, Serialize)]
pub struct QValidation {
    pub clique: CliqueResult,
    pub independence: CliqueResult,
    pub arrows_2_2_4: ArrowVerdict,
}

/// Checks cl = 4, alpha = 2 and `->v (2,2,4)`, failing on the first miss.
pub fn validate_q(g: &Graph) -> Result<QValidation> {
    let clique = clique_number(g);
    if clique.size != 4 {
        return Err(Error::Validation(format!("cl(Q) = {}, expected 4", clique.size)));
    }
    let independence = independence_number(g);
    if independence.size != 2 {
        return Err(Error::Validation(format!(
            "alpha(Q) = {}, expected 2",
            independence.size
        )));
    }
    let t = ArrowTuple::new(vec![2, 2, 4])?;
    let verdict = vertex_arrows(g, &t, &SearchBudget::unlimited().with_workers(1))?;
    if !verdict.is_arrows() {
        return Err(Error::Validation("Q ->v (2,2,4) fails: a free colouring exists".into()));
    }
    Ok(QValidation {
        clique,
        independence,
        arrows_2_2_4: verdict,
    })
}

/// Q = complement(circulant(13,{1,5})), returned only after validation.
pub fn reconstruct_q() -> Result<(Graph, QValidation)> {
    let q = Graph::circulant(13, &[1, 5])?.complement();
    let report = validate_q(&q)?;
    Ok((q, report))
}

#[derive(Clone, Debug)]
pub struct TheoremInstance {
    pub a: usize,
    pub alpha: usize,
    pub u: Graph,
    /// How `u` was given, for the report.
    pub u_label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionSummary {
    pub description: String,
    pub complete_part: usize,
    pub order: usize,
    pub clique_number_formula: usize,
    pub clique_number: usize,
    pub q: usize,
    pub below_q: bool,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub statement: String,
    pub tuple: Vec<usize>,
    pub q: usize,
    pub upper: usize,
    pub lower: Option<usize>,
    pub range: Option<String>,
    /// Registry provenance of the bound, when tabulated.
    pub registry: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub certificate: String,
    pub instance: serde_json::Value,
    pub checks: Vec<HypothesisCheck>,
    /// Side claims recorded as evidence; they do not affect `overall`.
    pub probes: Vec<HypothesisCheck>,
    pub construction: ConstructionSummary,
    pub bound: BoundRecord,
    pub overall: Overall,
    pub tool_version: String,
    pub registry_snapshot_hash: String,
}

impl TheoremReport {
    pub fn check(&self, label: &str) -> Option<&HypothesisCheck> {
        self.checks.iter().chain(&self.probes).find(|c| c.label == label)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Thm1Numbers {
    r: usize,
    r1: usize,
    r2: usize,
}

fn thm1_numbers(a: usize, registry: &Registry) -> Result<Thm1Numbers> {
    if a < 4 {
        return Err(Error::Domain(format!("a = {a}, need a >= 4")));
    }
    Ok(Thm1Numbers {
        r: registry.ramsey_value(3, a)?,
        r1: registry.ramsey_value(3, a - 1)?,
        r2: registry.ramsey_value(3, a - 2)?,
    })
}

/// `K_{R-2a+alpha+4} + U` with its clique number by additivity and recomputed.
pub fn build_theorem1_graph(inst: &TheoremInstance, registry: &Registry) -> Result<(Graph, ConstructionSummary)> {
    let r = thm1_numbers(inst.a, registry)?.r as i64;
    let (a, alpha) = (inst.a as i64, inst.alpha as i64);
    let k = r - 2 * a + alpha + 4;
    if k < 0 {
        return Err(Error::Domain(format!("R - 2a + alpha + 4 = {k} is negative")));
    }
    let k = k as usize;
    let q = (r - a + alpha + 4) as usize;
    let g = Graph::join(&Graph::complete(k)?, &inst.u)?;
    let formula = k + clique_number(&inst.u).size;
    let recomputed = clique_number(&g).size;
    let summary = ConstructionSummary {
        description: format!("K{k} + {}", inst.u_label),
        complete_part: k,
        order: g.order(),
        clique_number_formula: formula,
        clique_number: recomputed,
        q,
        below_q: recomputed < q,
        graph6: graph6::emit(&g),
    };
    Ok((g, summary))
}

/// Vertex arrowing with entries equal to 1 removed: such a colour class
/// must stay empty, so `G ->v (1,t)` iff `G ->v (t)`, and `G ->v ()` iff
/// `G` has a vertex.
fn vertex_arrows_reduced(
    g: &Graph,
    entries: &[usize],
    budget: &SearchBudget,
    check: HypothesisCheck,
) -> Result<HypothesisCheck> {
    let kept: Vec<usize> = entries.iter().copied().filter(|&x| x != 1).collect();
    let check = if kept.len() != entries.len() {
        check
            .with("reduced_tuple", &kept)
            .with("reduction", "colours with entry 1 must stay empty and are dropped")
    } else {
        check
    };
    if kept.is_empty() {
        return Ok(check.pass_if(g.order() > 0).with("order", g.order()));
    }
    if kept.len() > MAX_COLORS {
        return Ok(check
            .status(CheckStatus::Unknown)
            .with("limit", format!("more than {MAX_COLORS} colours")));
    }
    let verdict = vertex_arrows(g, &ArrowTuple::new(kept)?, budget)?;
    Ok(check.from_verdict(&verdict, true))
}

fn tuple_text(v: &[usize]) -> String {
    format!("({})", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

pub fn certify_theorem1(inst: &TheoremInstance, registry: &Registry, budget: &SearchBudget) -> Result<TheoremReport> {
    let Thm1Numbers { r, r1, r2 } = thm1_numbers(inst.a, registry)?;
    let (a, alpha) = (inst.a, inst.alpha);
    let (ri, r1i, r2i, ai, alphai) = (r as i64, r1 as i64, r2 as i64, a as i64, alpha as i64);

    let derived_alpha = r1i + ai - ri;
    let arith1 = HypothesisCheck::new("arithmetic-1", "R = R(3,a-1) + a - alpha")
        .pass_if(ri == r1i + ai - alphai)
        .with("R", r)
        .with("R(3,a-1)", r1)
        .with("rhs", r1i + ai - alphai)
        .with("derived_alpha", derived_alpha)
        .with("alpha_matches", derived_alpha == alphai)
        .with(
            "text",
            format!(
                "{r} {} {r1} + {a} - {alpha}",
                if ri == r1i + ai - alphai { "=" } else { "!=" }
            ),
        );

    let lhs = ri - 3 * ai + alphai + 5;
    let arith2 = HypothesisCheck::new("arithmetic-2", "R - 3a + alpha + 5 >= R(3,a-2)")
        .pass_if(lhs >= r2i)
        .with("lhs", lhs)
        .with("R(3,a-2)", r2)
        .with("text", format!("{lhs} {} {r2}", if lhs >= r2i { ">=" } else { "<" }));

    let cl_u = clique_number(&inst.u);
    let clique = HypothesisCheck::new("clique-u", format!("cl(U) = a-1 = {}", a - 1))
        .pass_if(cl_u.size == a - 1)
        .with("clique_number", cl_u.size)
        .with("witness", cl_u.witness);

    let t4 = [a - 1, a - 2];
    let arrows1 = HypothesisCheck::new("arrows-u-1", format!("U ->v {}", tuple_text(&t4)));
    let arrows1 = vertex_arrows_reduced(&inst.u, &t4, budget, arrows1)?;

    let mut t5 = vec![a - 3; a - 2];
    t5.push(3);
    let arrows2 = HypothesisCheck::new("arrows-u-2", format!("U ->v {}", tuple_text(&t5)));
    let arrows2 = vertex_arrows_reduced(&inst.u, &t5, budget, arrows2)?;

    let checks = vec![arith1, arith2, clique, arrows1, arrows2];
    let (_, construction) = build_theorem1_graph(inst, registry)?;
    let q = construction.q;
    let upper = construction.order;
    let statement = format!("F_e(3,{a};{q}) <= {upper}");
    let tabulated = registry.folkman(Kind::FolkmanUpper, &[3, a], q);
    let bound = BoundRecord {
        statement,
        tuple: vec![3, a],
        q,
        upper,
        lower: registry.folkman(Kind::FolkmanLower, &[3, a], q).map(|e| e.value),
        range: None,
        registry: tabulated.map(|e| format!("{} ({})", e.statement(), e.provenance)),
    };
    Ok(TheoremReport {
        certificate: "thm1".into(),
        instance: json!({
            "a": a,
            "alpha": alpha,
            "R": r,
            "R(3,a-1)": r1,
            "R(3,a-2)": r2,
            "U": inst.u_label,
            "U_graph6": graph6::emit(&inst.u),
            "U_order": inst.u.order(),
        }),
        overall: Overall::from_checks(&checks),
        checks,
        probes: Vec::new(),
        construction,
        bound,
        tool_version: TOOL_VERSION.into(),
        registry_snapshot_hash: registry.snapshot_hash().into(),
    })
}

/// Checks the facts behind `F_e(4,4;17) <= 25` for `K12 + q_graph`. The probes
/// test `Q ->e (3,4)` and `Q ->v (4,4)`. `full_run`, when given, also
/// attempts `K12 + Q ->e (4,4)` directly and counts as a check.
pub fn certify_theorem2(
    q_graph: &Graph,
    registry: &Registry,
    budget: &SearchBudget,
    full_run: Option<&SearchBudget>,
) -> Result<TheoremReport> {
    let lower = registry
        .folkman(Kind::FolkmanLower, &[4, 4], 17)
        .ok_or_else(|| Error::Registry("F_e(4,4;17) lower bound is not in the registry".into()))?;
    let g = Graph::join(&Graph::complete(12)?, q_graph)?;

    let order = HypothesisCheck::new("order", "|V(K12 + Q)| = 25")
        .pass_if(g.order() == 25)
        .with("order", g.order())
        .with("text", format!("12 + {} = {}", q_graph.order(), g.order()));
    let cl_q = clique_number(q_graph);
    let cl_g = clique_number(&g);
    let clique_join = HypothesisCheck::new("clique-join", "cl(K12 + Q) = 12 + cl(Q) = 16 < 17")
        .pass_if(cl_g.size == 16 && cl_g.size == 12 + cl_q.size)
        .with("formula", 12 + cl_q.size)
        .with("recomputed", cl_g.size)
        .with("witness", cl_g.witness);
    let clique_q = HypothesisCheck::new("clique-q", "cl(Q) = 4")
        .pass_if(cl_q.size == 4)
        .with("clique_number", cl_q.size)
        .with("witness", cl_q.witness);
    let t224 = ArrowTuple::new(vec![2, 2, 4])?;
    let arrows_q =
        HypothesisCheck::new("arrows-q", "Q ->v (2,2,4)").from_verdict(&vertex_arrows(q_graph, &t224, budget)?, true);
    let mut checks = vec![order, clique_join, clique_q, arrows_q];

    let t44 = ArrowTuple::new(vec![4, 4])?;
    if let Some(full) = full_run {
        let v = edge_arrows(&g, &t44, full)?;
        checks.push(HypothesisCheck::new("full-arrowing", "K12 + Q ->e (4,4)").from_verdict(&v, true));
    }

    let t34 = ArrowTuple::new(vec![3, 4])?;
    let probes = vec![
        HypothesisCheck::new("probe-edge-3-4", "Q ->e (3,4)").from_verdict(&edge_arrows(q_graph, &t34, budget)?, true),
        HypothesisCheck::new("probe-vertex-4-4", "Q ->v (4,4)")
            .from_verdict(&vertex_arrows(q_graph, &t44, budget)?, true),
    ];

    let construction = ConstructionSummary {
        description: "K12 + Q".into(),
        complete_part: 12,
        order: g.order(),
        clique_number_formula: 12 + cl_q.size,
        clique_number: cl_g.size,
        q: 17,
        below_q: cl_g.size < 17,
        graph6: graph6::emit(&g),
    };
    let upper = g.order();
    let tabulated = registry.folkman(Kind::FolkmanUpper, &[4, 4], 17);
    let bound = BoundRecord {
        statement: format!("F_e(4,4;17) <= {upper}"),
        tuple: vec![4, 4],
        q: 17,
        upper,
        lower: Some(lower.value),
        range: Some(format!("{} <= F_e(4,4;17) <= {upper}", lower.value)),
        registry: tabulated.map(|e| format!("{} ({})", e.statement(), e.provenance)),
    };
    Ok(TheoremReport {
        certificate: "thm2".into(),
        instance: json!({
            "Q_graph6": graph6::emit(q_graph),
            "Q_order": q_graph.order(),
            "complete_part": 12,
            "tuple": [4, 4],
            "q": 17,
            "lower_bound_source": format!("{} ({})", lower.statement(), lower.provenance),
        }),
        overall: Overall::from_checks(&checks),
        checks,
        probes,
        construction,
        bound,
        tool_version: TOOL_VERSION.into(),
        registry_snapshot_hash: registry.snapshot_hash().into(),
    })
}
