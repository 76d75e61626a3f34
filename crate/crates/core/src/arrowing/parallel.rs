//! Static tree splitting and deterministic result assembly.
//!
//! The top of the search tree is expanded to a fixed frontier that does not
//! depend on the worker count. Subtrees are then searched independently and
//! their results combined as if they had run one after another in frontier
//! order, so the verdict, the witness and the node count are identical for any
//! number of workers (wall-clock limits aside).

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::search::{Control, Flow, Instance, Search, Step, Stop};
use super::{ArrowVerdict, Coloring, Outcome, SearchBudget, SearchStats};

/// Frontier size at which splitting stops deepening.
const FRONTIER_TARGET: usize = 256;

enum Sub {
    Exhausted(u64),
    Found(u64, Coloring),
    /// Node limit hit after this many nodes.
    OverBudget(u64),
    TimedOut,
    Cancelled,
}

enum Resolution {
    Pending,
    Done { at: usize, outcome: Outcome, nodes: u64 },
}

/// Walks finished subtrees in order and decides whether the overall result is known.
fn resolve(results: &[Option<Sub>], base: u64, limit: Option<u64>) -> Resolution {
    let mut nodes = base;
    for (i, r) in results.iter().enumerate() {
        match r {
            None | Some(Sub::Cancelled) => return Resolution::Pending,
            Some(Sub::Exhausted(n)) => {
                nodes += n;
                if limit.is_some_and(|l| nodes > l) {
                    return Resolution::Done {
                        at: i,
                        outcome: Outcome::Unknown,
                        nodes,
                    };
                }
            }
            Some(Sub::Found(n, w)) => {
                nodes += n;
                let outcome = if limit.is_some_and(|l| nodes > l) {
                    Outcome::Unknown
                } else {
                    Outcome::FreeWitness(w.clone())
                };
                return Resolution::Done { at: i, outcome, nodes };
            }
            Some(Sub::OverBudget(n)) => {
                return Resolution::Done {
                    at: i,
                    outcome: Outcome::Unknown,
                    nodes: nodes + n,
                };
            }
            Some(Sub::TimedOut) => {
                return Resolution::Done {
                    at: i,
                    outcome: Outcome::Unknown,
                    nodes,
                };
            }
        }
    }
    Resolution::Done {
        at: results.len(),
        outcome: Outcome::Arrows,
        nodes,
    }
}

/// Expands the tree until the frontier reaches [`FRONTIER_TARGET`] paths.
/// Returns the controller of the final expansion pass.
fn split<'a>(inst: &Instance<'_>, limit: Option<u64>, deadline: Option<Instant>) -> (Flow, Control<'a>) {
    let mut depth = 1;
    loop {
        let mut ctl = Control::new(limit, deadline);
        ctl.collect_depth = Some(depth);
        let flow = Search::new(inst).dfs(&mut ctl);
        if flow != Flow::Exhausted || ctl.frontier.len() >= FRONTIER_TARGET || depth >= inst.len() {
            return (flow, ctl);
        }
        // a pass that produced nothing leaves no deeper paths either
        if ctl.frontier.is_empty() {
            return (flow, ctl);
        }
        depth += 1;
    }
}

pub(crate) fn decide(inst: &Instance<'_>, budget: &SearchBudget) -> ArrowVerdict {
    let start = Instant::now();
    let deadline = budget.max_time.map(|d| start + d);
    let limit = budget.max_nodes;

    let (flow, head) = split(inst, limit, deadline);
    let mut stats = SearchStats {
        nodes: head.nodes,
        frontier_size: head.frontier.len(),
        open_subtrees: head.frontier.len(),
        max_nodes: limit,
        work_nodes: head.nodes,
        elapsed: Default::default(),
    };
    let outcome = match flow {
        Flow::Found => {
            stats.open_subtrees = 0;
            head.witness.map(Outcome::FreeWitness).expect("found implies witness")
        }
        Flow::Stopped => Outcome::Unknown,
        Flow::Exhausted => {
            let (outcome, nodes, open, work) =
                run_subtrees(inst, &head.frontier, head.nodes, limit, deadline, budget.workers.get());
            stats.nodes = nodes;
            stats.open_subtrees = open;
            stats.work_nodes += work;
            outcome
        }
    };
    stats.elapsed = start.elapsed();
    ArrowVerdict { outcome, stats }
}

fn run_subtrees(
    inst: &Instance<'_>,
    frontier: &[Vec<Step>],
    head_nodes: u64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    workers: usize,
) -> (Outcome, u64, usize, u64) {
    let total = frontier.len();
    if total == 0 {
        return (Outcome::Arrows, head_nodes, 0, 0);
    }
    let sub_limit = limit.map(|l| l.saturating_sub(head_nodes));
    let results: Mutex<Vec<Option<Sub>>> = Mutex::new((0..total).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    // subtrees with a larger index than this cannot influence the result
    let cutoff = AtomicUsize::new(usize::MAX);
    let timed_out = AtomicBool::new(false);
    let work = AtomicU64::new(0);
    let resolution = Mutex::new(Resolution::Pending);

    let worker = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= total || i > cutoff.load(Ordering::Acquire) {
            break;
        }
        let cancel = || i > cutoff.load(Ordering::Relaxed) || timed_out.load(Ordering::Relaxed);
        let mut ctl = Control::new(sub_limit, deadline);
        ctl.cancel = Some(&cancel);
        let stopped = |stop: Stop| match stop {
            Stop::Deadline => Sub::TimedOut,
            _ if timed_out.load(Ordering::Relaxed) => Sub::TimedOut,
            _ => Sub::Cancelled,
        };
        let result = if !ctl.poll() {
            stopped(ctl.stop)
        } else {
            let mut search = Search::new(inst);
            search.replay(&frontier[i]);
            let flow = search.dfs(&mut ctl);
            work.fetch_add(ctl.nodes, Ordering::Relaxed);
            match (flow, ctl.stop) {
                (Flow::Exhausted, _) => Sub::Exhausted(ctl.nodes),
                (Flow::Found, _) => Sub::Found(ctl.nodes, ctl.witness.take().expect("found implies witness")),
                (Flow::Stopped, Stop::NodeLimit) => Sub::OverBudget(ctl.nodes),
                (Flow::Stopped, stop) => stopped(stop),
            }
        };
        match result {
            Sub::TimedOut => {
                timed_out.store(true, Ordering::Relaxed);
                cutoff.fetch_min(i, Ordering::AcqRel);
            }
            Sub::Found(..) | Sub::OverBudget(_) => {
                cutoff.fetch_min(i, Ordering::AcqRel);
            }
            _ => {}
        }
        let mut guard = results.lock().expect("results lock");
        guard[i] = Some(result);
        if let Resolution::Done { at, outcome, nodes } = resolve(&guard, head_nodes, limit) {
            cutoff.fetch_min(at, Ordering::AcqRel);
            *resolution.lock().expect("resolution lock") = Resolution::Done { at, outcome, nodes };
        }
    };

    std::thread::scope(|scope| {
        for _ in 1..workers.min(total) {
            scope.spawn(worker);
        }
        worker();
    });

    let work = work.load(Ordering::Relaxed);
    match resolution.into_inner().expect("resolution lock") {
        Resolution::Done { at, outcome, nodes } => {
            let open = if matches!(outcome, Outcome::Unknown) {
                total - at
            } else {
                0
            };
            (outcome, nodes, open, work)
        }
        Resolution::Pending => unreachable!("every subtree up to the cutoff reports a result"),
    }
}
