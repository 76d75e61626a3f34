//! Acceptance runner: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Each criterion carries its own wall-clock limit.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::atomic::{AtomicU32, Ordering};
use std::time::{Duration, Instant};

use folkman_core::arrowing::{
    arrows, check_edge_coloring_free, decide_with_oracle, edge_arrows, export_cnf, vertex_arrows, ArrowTuple,
    EdgeColoring, Mode, SearchBudget,
};
use folkman_core::certifier::{certify_theorem1, certify_theorem2, reconstruct_q, TheoremInstance};
use folkman_core::clique::{clique_number, independence_number};
use folkman_core::registry::Registry;
use folkman_core::report::{CheckStatus, Overall};
use folkman_core::{graph6, Graph};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn tuple(v: &[usize]) -> ArrowTuple {
    ArrowTuple::new(v.to_vec()).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

/// Runs the CLI with `--json` and returns (exit code, result, elapsed).
fn cli(args: &[&str]) -> (i32, Value, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_folkman"))
        .args(args)
        .arg("--json")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), v["result"].clone(), elapsed)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let t = f();
    (t, start.elapsed())
}

fn c1_ramsey_calibration() -> Check {
    let (code6, r6, t6) = cli(&["arrow-edge", "K6", "3,3", "--expect", "arrows"]);
    let (code5, r5, t5) = cli(&["arrow-edge", "K5", "3,3", "--expect", "free", "--recheck"]);
    ensure!(
        code6 == 0 && r6["verdict"]["outcome"] == "arrows",
        "K6: exit {code6}, {}",
        r6["verdict"]["outcome"]
    );
    ensure!(
        code5 == 0 && r5["verdict"]["outcome"] == "free",
        "K5: exit {code5}, {}",
        r5["verdict"]["outcome"]
    );
    ensure!(r5["recheck"] == true, "K5 witness failed recheck");
    ensure!(
        t6 < Duration::from_secs(1) && t5 < Duration::from_secs(1),
        "too slow: {} / {}",
        secs(t6),
        secs(t5)
    );
    Ok(format!(
        "K6 ->e (3,3) arrows in {}, K5 free in {}, witness rechecked",
        secs(t6),
        secs(t5)
    ))
}

fn c2_r34() -> Check {
    let (code9, r9, t9) = cli(&["arrow-edge", "K9", "3,4", "--expect", "arrows"]);
    let (code8, r8, t8) = cli(&["arrow-edge", "K8", "3,4", "--expect", "free", "--recheck"]);
    ensure!(code9 == 0, "K9: exit {code9}, {}", r9["verdict"]["outcome"]);
    ensure!(
        code8 == 0 && r8["recheck"] == true,
        "K8: exit {code8}, recheck {}",
        r8["recheck"]
    );
    ensure!(t9 < Duration::from_secs(300), "K9 took {}", secs(t9));
    ensure!(t8 < Duration::from_secs(60), "K8 took {}", secs(t8));
    let k8 = Graph::complete(8).unwrap();
    let split = EdgeColoring::split(&k8, &Graph::circulant(8, &[1, 4]).unwrap()).unwrap();
    ensure!(
        check_edge_coloring_free(&k8, &tuple(&[3, 4]), &split).unwrap(),
        "circulant(8,1,4) split is not free"
    );
    Ok(format!(
        "K9 ->e (3,4) arrows in {} ({} nodes), K8 free in {}, circulant(8,1,4) split is free",
        secs(t9),
        r9["verdict"]["stats"]["nodes"],
        secs(t8)
    ))
}

fn c3_lin() -> Check {
    let (code, r, t) = cli(&["arrow-edge", "join(K3,C5)", "3,3", "--expect", "arrows"]);
    let g = graph6::parse(r["graph6"].as_str().unwrap_or("")).map_err(|e| e.to_string())?;
    ensure!(code == 0, "exit {code}, {}", r["verdict"]["outcome"]);
    ensure!(g.edge_count() == 23, "{} edges", g.edge_count());
    ensure!(t < Duration::from_secs(10), "took {}", secs(t));
    Ok(format!("K3 + C5 (23 edges) ->e (3,3) arrows in {}", secs(t)))
}

fn c4_q() -> Check {
    let (reconstructed, t) = timed(reconstruct_q);
    let (q, _) = reconstructed.map_err(|e| e.to_string())?;
    let (cl, tc) = timed(|| clique_number(&q).size);
    let (al, ta) = timed(|| independence_number(&q).size);
    ensure!(cl == 4 && tc < Duration::from_secs(1), "cl(Q) = {cl} in {}", secs(tc));
    ensure!(
        al == 2 && ta < Duration::from_secs(1),
        "alpha(Q) = {al} in {}",
        secs(ta)
    );
    let b = SearchBudget::standard().with_time(Duration::from_secs(60));
    let (v224, t224) = timed(|| vertex_arrows(&q, &tuple(&[2, 2, 4]), &b).unwrap());
    ensure!(
        v224.is_arrows() && t224 < Duration::from_secs(60),
        "Q ->v (2,2,4): {}",
        v224.outcome.label()
    );
    let b5 = SearchBudget::standard().with_time(Duration::from_secs(300));
    let mut notes = Vec::new();
    for t in [&[4, 3][..], &[2, 2, 2, 3]] {
        let (v, el) = timed(|| vertex_arrows(&q, &tuple(t), &b5).unwrap());
        ensure!(
            !v.is_unknown() && el < Duration::from_secs(300),
            "Q ->v {:?} did not terminate",
            t
        );
        if let Some(w) = v.outcome.witness() {
            ensure!(w.is_free_for(&q, &tuple(t)).unwrap(), "bad witness for {t:?}");
            notes.push(format!("{} REFUTED (free colouring found)", tuple(t)));
        } else {
            notes.push(format!("{} arrows", tuple(t)));
        }
    }
    Ok(format!(
        "reconstructed in {}, cl = 4, alpha = 2, ->v (2,2,4) arrows in {}; ->v {}",
        secs(t),
        secs(t224),
        notes.join(", ")
    ))
}

fn c5_theorem1() -> Check {
    let registry = Registry::builtin();
    let (q, _) = reconstruct_q().map_err(|e| e.to_string())?;
    let inst = TheoremInstance {
        a: 5,
        alpha: 0,
        u: q,
        u_label: "Q".into(),
    };
    let b = SearchBudget::standard().with_workers(1);
    let rep = certify_theorem1(&inst, &registry, &b).map_err(|e| e.to_string())?;
    let a1 = rep.check("arithmetic-1").unwrap();
    let a2 = rep.check("arithmetic-2").unwrap();
    ensure!(
        a1.status == CheckStatus::Pass && a1.evidence["text"] == "14 = 9 + 5 - 0",
        "arithmetic #1: {:?}",
        a1
    );
    ensure!(
        a2.status == CheckStatus::Fail && a2.evidence["text"] == "4 < 6",
        "arithmetic #2: {:?}",
        a2
    );
    let c = &rep.construction;
    ensure!(
        c.order == 21 && c.clique_number == 12 && c.q == 13 && c.below_q,
        "construction {:?}",
        c
    );
    ensure!(
        rep.bound.statement == "F_e(3,5;13) <= 21",
        "bound {}",
        rep.bound.statement
    );
    ensure!(rep.overall != Overall::Certified, "overall certified");
    let again = certify_theorem1(&inst, &registry, &b).map_err(|e| e.to_string())?;
    ensure!(rep.to_json() == again.to_json(), "library JSON differs between runs");

    let args = ["certify-thm1", "--a", "5", "--alpha", "0", "--U", "Q", "--workers", "1"];
    let (code1, r1, _) = cli(&args);
    let (code2, r2, _) = cli(&args);
    ensure!(code1 == 0 && code2 == 0, "cli exits {code1} {code2}");
    ensure!(
        serde_json::to_string(&r1).unwrap() == serde_json::to_string(&r2).unwrap(),
        "CLI JSON differs between runs"
    );
    ensure!(
        r1 == serde_json::to_value(&rep).unwrap(),
        "CLI report differs from library report"
    );
    Ok(format!(
        "#1 pass (14 = 9 + 5 - 0), #2 FAIL (4 < 6), order 21, cl 12 < 13, {}, overall {}, JSON byte-identical",
        rep.bound.statement,
        serde_json::to_value(rep.overall).unwrap().as_str().unwrap()
    ))
}

fn c6_theorem2() -> Check {
    let registry = Registry::builtin();
    let (q, _) = reconstruct_q().map_err(|e| e.to_string())?;
    let (g, tj) = timed(|| Graph::join(&Graph::complete(12).unwrap(), &q).unwrap());
    let (cl, tcl) = timed(|| clique_number(&g).size);
    ensure!(g.order() == 25, "order {}", g.order());
    ensure!(cl == 16 && cl < 17, "cl(K12 + Q) = {cl}");
    ensure!(tj + tcl < Duration::from_secs(10), "clique took {}", secs(tcl));
    let b = SearchBudget::standard()
        .with_time(Duration::from_secs(600))
        .with_nodes(u64::MAX);
    let (rep, trep) = timed(|| certify_theorem2(&q, &registry, &b, None));
    let rep = rep.map_err(|e| e.to_string())?;
    ensure!(
        rep.construction.clique_number == 16,
        "report cl {}",
        rep.construction.clique_number
    );
    ensure!(
        rep.bound.range.as_deref() == Some("22 <= F_e(4,4;17) <= 25"),
        "bound {:?}",
        rep.bound.range
    );
    let probe = rep.check("probe-edge-3-4").unwrap();
    let verdict = probe.evidence["verdict"]["outcome"].as_str().unwrap_or("?").to_string();
    ensure!(trep < Duration::from_secs(600), "report took {}", secs(trep));
    let probe_v = rep.check("probe-vertex-4-4").unwrap().evidence["verdict"]["outcome"].clone();
    Ok(format!(
        "order 25, cl = 16 < 17 recomputed in {}, 22 <= F_e(4,4;17) <= 25; probe Q ->e (3,4): {verdict}; Q ->v (4,4): {}",
        secs(tcl),
        probe_v.as_str().unwrap_or("?")
    ))
}

fn c7_oracle() -> Check {
    let start = Instant::now();
    let levels = common::all_graphs_up_to(7);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    ensure!(counts == [1, 1, 2, 4, 11, 34, 156, 1044], "class counts {counts:?}");
    let unlimited = SearchBudget::unlimited();
    let mut compared = 0;
    for g in levels.iter().flatten() {
        for t in [tuple(&[2, 2]), tuple(&[3, 3]), tuple(&[2, 2, 2])] {
            let a = vertex_arrows(g, &t, &unlimited).unwrap();
            let b = decide_with_oracle(g, &t, Mode::Vertex).unwrap();
            ensure!(
                a.outcome.label() == b.outcome.label(),
                "vertex {t} disagrees on {}",
                graph6::emit(g)
            );
            compared += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.random_range(3..=10);
        let g = common::random_sparse_graph(&mut rng, n, 12);
        let a = edge_arrows(&g, &tuple(&[3, 3]), &unlimited).unwrap();
        let b = decide_with_oracle(&g, &tuple(&[3, 3]), Mode::Edge).unwrap();
        ensure!(
            a.outcome.label() == b.outcome.label(),
            "edge (3,3) disagrees on {}",
            graph6::emit(&g)
        );
        compared += 1;
    }
    let el = start.elapsed();
    ensure!(el < Duration::from_secs(600), "took {}", secs(el));
    Ok(format!(
        "{compared} comparisons, 0 disagreements: {} graphs of order <= 7 (1044 of order 7) x 3 vertex tuples, 200 random edge cases, {}",
        counts.iter().sum::<usize>(),
        secs(el)
    ))
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn label(g: &Graph, t: &[usize], mode: Mode) -> &'static str {
    arrows(g, &tuple(t), mode, &SearchBudget::unlimited())
        .unwrap()
        .outcome
        .label()
}

const CASES: u32 = 256;

fn run_property<S: Strategy>(
    name: &str,
    s: S,
    f: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let ran = AtomicU32::new(0);
    runner
        .run(&s, |v| {
            ran.fetch_add(1, Ordering::Relaxed);
            f(v)
        })
        .map_err(|e| format!("{name}: {e}"))?;
    let ran = ran.into_inner();
    if ran < CASES {
        return Err(format!("{name}: only {ran} cases ran"));
    }
    Ok(format!("{name} ({ran})"))
}

fn c8_properties() -> Check {
    let start = Instant::now();
    let mut done = Vec::new();
    done.push(run_property(
        "tuple permutation",
        (graph_strategy(7), proptest::collection::vec(2usize..=4, 2..=3)),
        |(g, t)| {
            let mut p = t.clone();
            p.reverse();
            prop_assert_eq!(label(&g, &t, Mode::Vertex), label(&g, &p, Mode::Vertex));
            if t.len() == 2 && g.edge_count() <= 16 {
                prop_assert_eq!(label(&g, &t, Mode::Edge), label(&g, &p, Mode::Edge));
            }
            Ok(())
        },
    )?);
    done.push(run_property(
        "entry and supergraph monotonicity",
        (
            graph_strategy(7),
            proptest::collection::vec(2usize..=4, 2),
            0usize..2,
            any::<u32>(),
        ),
        |(g, t, i, extra)| {
            for mode in [Mode::Vertex, Mode::Edge] {
                if mode == Mode::Edge && g.edge_count() > 14 {
                    continue;
                }
                if t[i] > 2 && label(&g, &t, mode) == "arrows" {
                    let mut lower = t.clone();
                    lower[i] -= 1;
                    prop_assert_eq!(label(&g, &lower, mode), "arrows");
                }
            }
            let n = g.order();
            let mut edges = g.edges();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            edges.extend(
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| extra >> (k % 32) & 1 == 1 && k % 3 == 0)
                    .map(|(_, &e)| e),
            );
            let sup = Graph::from_edges(n, edges).unwrap();
            if label(&g, &t, Mode::Vertex) == "arrows" {
                prop_assert_eq!(label(&sup, &t, Mode::Vertex), "arrows");
            }
            Ok(())
        },
    )?);
    done.push(run_property(
        "clique additivity on joins",
        (graph_strategy(10), graph_strategy(10)),
        |(a, b)| {
            let j = Graph::join(&a, &b).unwrap();
            prop_assert_eq!(clique_number(&j).size, clique_number(&a).size + clique_number(&b).size);
            Ok(())
        },
    )?);
    done.push(run_property("complement involution", graph_strategy(30), |g| {
        prop_assert_eq!(g.complement().complement(), g);
        Ok(())
    })?);
    done.push(run_property("graph6 round trip", graph_strategy(64), |g| {
        prop_assert_eq!(graph6::parse(&graph6::emit(&g)).unwrap(), g);
        Ok(())
    })?);
    done.push(run_property(
        "CNF satisfiable iff free",
        (graph_strategy(6), 2usize..=4, 2usize..=4, any::<bool>()),
        |(g, a, b, vertex)| {
            let mode = if vertex { Mode::Vertex } else { Mode::Edge };
            let doc = export_cnf(&g, &tuple(&[a, b]), mode).unwrap();
            let (vars, clauses) = common::parse_dimacs(&doc.to_dimacs());
            prop_assert_eq!(
                common::brute_satisfiable(vars, &clauses),
                label(&g, &[a, b], mode) == "free"
            );
            Ok(())
        },
    )?);
    Ok(format!(
        "{} suites x {CASES} cases, 0 failures ({}): {}",
        done.len(),
        secs(start.elapsed()),
        done.join(", ")
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("Ramsey calibration R(3,3) = 6", c1_ramsey_calibration),
        ("R(3,4) = 9 and circulant(8,1,4) witness", c2_r34),
        ("K3 + C5 ->e (3,3)", c3_lin),
        ("Q validation", c4_q),
        ("certify-thm1 at a = 5, alpha = 0, U = Q", c5_theorem1),
        ("certify-thm2", c6_theorem2),
        ("oracle equivalence", c7_oracle),
        ("property suites", c8_properties),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("[PASS] {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
