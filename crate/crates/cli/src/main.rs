//! `folkman`: command-line front end for the arrowing lab.
//!
//! Exit codes: 0 completed, 2 usage error, 3 expectation mismatch, 4 budget
//! exhausted where a decision was required, 5 validation failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use folkman_core::arrowing::{self, ArrowTuple, ArrowVerdict, Coloring, Mode, Outcome, SearchBudget};
use folkman_core::certifier::{self, TheoremInstance, TheoremReport, TOOL_VERSION};
use folkman_core::clique;
use folkman_core::registry::{self, Registry};
use folkman_core::report::{CheckStatus, HypothesisCheck, Overall};
use folkman_core::{expr, graph6, Error, Graph};

/// Version of the JSON envelope written by `--json`.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "folkman",
    version,
    about = "Decide arrowing relations and check Folkman-bound constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide G ->e (a_1,...,a_r)
    ArrowEdge(ArrowArgs),
    /// Decide G ->v (a_1,...,a_r)
    ArrowVertex(ArrowArgs),
    /// Clique and independence numbers with witnesses
    Clique(CliqueArgs),
    /// Evaluate a construction and print it
    Build(BuildArgs),
    /// Export a two-colour free-colouring instance as DIMACS CNF
    Cnf(CnfArgs),
    /// Check the hypotheses of the K_{R-2a+alpha+4} + U construction
    CertifyThm1(Thm1Args),
    /// Check the facts behind F_e(4,4;17) <= 25 via K12 + Q
    CertifyThm2(Thm2Args),
    /// List the table of known values
    Registry(RegistryArgs),
    /// Re-verify registry entries by search
    VerifyKnown(VerifyArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Construction expression, e.g. "join(K3,C5)"
    #[arg(long, visible_alias = "expr", value_name = "EXPR")]
    graph: Option<String>,
    /// graph6 literal
    #[arg(long, value_name = "GRAPH6")]
    graph6: Option<String>,
    /// File whose first non-empty line is graph6
    #[arg(long, value_name = "PATH")]
    graph_file: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Node limit (default 100000000)
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Wall-clock limit in seconds (default 60)
    #[arg(long)]
    timeout_secs: Option<f64>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    workers: Option<usize>,
    /// Drop the node and time limits
    #[arg(long)]
    unlimited: bool,
}

#[derive(Args)]
struct OutputArgs {
    /// Print the JSON envelope instead of a summary
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Arrows,
    Free,
    Unknown,
}

#[derive(Args)]
struct ArrowArgs {
    /// [GRAPH] [TUPLE] when not given by flags
    #[arg(value_name = "OPERAND", num_args = 0..=2)]
    operands: Vec<String>,
    #[command(flatten)]
    source: GraphSource,
    /// Tuple such as 3,4
    #[arg(long)]
    tuple: Option<String>,
    #[arg(long, value_enum)]
    expect: Option<Expect>,
    /// Re-validate any witness with the independent checker
    #[arg(long)]
    recheck: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CliqueArgs {
    #[arg(value_name = "GRAPH")]
    operand: Option<String>,
    #[command(flatten)]
    source: GraphSource,
    /// Expected clique number
    #[arg(long)]
    expect: Option<usize>,
    #[arg(long)]
    recheck: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
    Summary,
    Json,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(value_name = "GRAPH")]
    operand: Option<String>,
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "graph6")]
    emit: Emit,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CnfArgs {
    #[arg(value_name = "OPERAND", num_args = 0..=2)]
    operands: Vec<String>,
    #[command(flatten)]
    source: GraphSource,
    #[arg(long)]
    tuple: Option<String>,
    /// edge or vertex
    #[arg(long, default_value = "edge")]
    mode: String,
    /// Write the DIMACS text here instead of standard output
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpectOverall {
    Certified,
    RefutedHypothesis,
    Inconclusive,
}

#[derive(Args)]
struct Thm1Args {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    alpha: usize,
    /// The graph U as a construction expression (g6(...) for graph6)
    #[arg(long = "U", visible_alias = "u", value_name = "EXPR")]
    u: String,
    #[arg(long, value_enum)]
    expect: Option<ExpectOverall>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct Thm2Args {
    /// The graph Q as a construction expression (default: Q)
    #[arg(long = "Q", visible_alias = "q", value_name = "EXPR", default_value = "Q")]
    q: String,
    /// Skip the cl = 4, alpha = 2, ->v (2,2,4) gate on a supplied Q
    #[arg(long)]
    no_validate: bool,
    /// Also attempt K12 + Q ->e (4,4) within the budget
    #[arg(long)]
    full_run: bool,
    #[arg(long, value_enum)]
    expect: Option<ExpectOverall>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct RegistryArgs {
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Entry statement such as "R(3,4) = 9" (repeatable)
    #[arg(long)]
    entry: Vec<String>,
    /// Every re-verifiable entry instead of the verified-in-suite ones
    #[arg(long)]
    all: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    out: OutputArgs,
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Budget(String),
    Validation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) => 3,
            Failure::Budget(_) => 4,
            Failure::Validation(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Mismatch(m) | Failure::Budget(m) | Failure::Validation(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Validation(_) => Failure::Validation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res<T = ()> = std::result::Result<T, Failure>;

/// Collects the printed result; the summary or JSON is written once at the end
/// so that a failing expectation still prints what was computed.
struct Output {
    json: bool,
    command: &'static str,
    start: Instant,
}

impl Output {
    fn print(&self, result: Value, summary: &str) {
        if self.json {
            let envelope = json!({
                "schema_version": SCHEMA_VERSION,
                "tool_version": TOOL_VERSION,
                "command": self.command,
                "result": result,
                "timing": { "elapsed_ms": self.start.elapsed().as_secs_f64() * 1e3 },
            });
            println!("{}", serde_json::to_string_pretty(&envelope).expect("json"));
        } else {
            print!("{summary}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("folkman: {}", f.message().replace('\n', " "));
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Res {
    let start = Instant::now();
    match command {
        Command::ArrowEdge(a) => arrow(a, Mode::Edge, start),
        Command::ArrowVertex(a) => arrow(a, Mode::Vertex, start),
        Command::Clique(a) => clique_cmd(a, start),
        Command::Build(a) => build(a, start),
        Command::Cnf(a) => cnf(a, start),
        Command::CertifyThm1(a) => thm1(a, start),
        Command::CertifyThm2(a) => thm2(a, start),
        Command::Registry(a) => registry_cmd(a, start),
        Command::VerifyKnown(a) => verify_known(a, start),
    }
}

fn read_graph(source: &GraphSource, operand: Option<&str>) -> Res<(Graph, String)> {
    let given = [
        source.graph.is_some(),
        source.graph6.is_some(),
        source.graph_file.is_some(),
        operand.is_some(),
    ];
    match given.iter().filter(|&&b| b).count() {
        0 => {
            return Err(Failure::Usage(
                "no graph given (use --graph, --graph6, --graph-file or an operand)".into(),
            ))
        }
        1 => {}
        _ => return Err(Failure::Usage("give exactly one graph source".into())),
    }
    if let Some(text) = source.graph.as_deref().or(operand) {
        return Ok((expr::build(text)?, text.to_string()));
    }
    if let Some(text) = &source.graph6 {
        return Ok((graph6::parse(text)?, format!("g6({text})")));
    }
    let path = source.graph_file.as_ref().expect("one source present");
    let content = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let line = content
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Failure::Usage(format!("{}: empty file", path.display())))?;
    Ok((
        graph6::parse(line)?,
        format!("g6({})", graph6::emit(&graph6::parse(line)?)),
    ))
}

/// Splits `[GRAPH] [TUPLE]` operands around whichever of them came by flag.
fn graph_and_tuple(
    operands: &[String],
    source: &GraphSource,
    tuple: &Option<String>,
) -> Res<(Graph, String, ArrowTuple)> {
    let graph_by_flag = source.graph.is_some() || source.graph6.is_some() || source.graph_file.is_some();
    let mut rest = operands.iter().map(String::as_str);
    let graph_operand = if graph_by_flag { None } else { rest.next() };
    let tuple_text = match (tuple.as_deref(), rest.next()) {
        (Some(t), None) => t,
        (None, Some(t)) => t,
        (Some(_), Some(_)) => return Err(Failure::Usage("tuple given twice".into())),
        (None, None) => return Err(Failure::Usage("no tuple given (use --tuple or an operand)".into())),
    };
    if rest.next().is_some() {
        return Err(Failure::Usage("too many operands".into()));
    }
    let (g, label) = read_graph(source, graph_operand)?;
    Ok((g, label, tuple_text.parse()?))
}

fn budget(b: &BudgetArgs) -> Res<SearchBudget> {
    let mut out = if b.unlimited {
        SearchBudget::unlimited()
    } else {
        SearchBudget::standard()
    };
    if b.unlimited {
        out.workers = SearchBudget::standard().workers;
    }
    if let Some(n) = b.max_nodes {
        out = out.with_nodes(n);
    }
    if let Some(s) = b.timeout_secs {
        if !(s.is_finite() && s > 0.0) {
            return Err(Failure::Usage(format!("--timeout-secs must be positive, got {s}")));
        }
        out = out.with_time(Duration::from_secs_f64(s));
    }
    if let Some(w) = b.workers {
        if w == 0 {
            return Err(Failure::Usage("--workers must be at least 1".into()));
        }
        out = out.with_workers(w);
    }
    Ok(out)
}

fn describe_witness(w: &Coloring, colors: usize) -> String {
    let mut s = String::new();
    for c in 1..=colors as u8 {
        let members: Vec<String> = match w {
            Coloring::Vertex(vc) => vc.class(c).iter().map(|v| v.to_string()).collect(),
            Coloring::Edge(ec) => ec
                .edges
                .iter()
                .zip(&ec.colors)
                .filter(|&(_, &k)| k == c)
                .map(|(&(u, v), _)| format!("{u}-{v}"))
                .collect(),
        };
        let _ = writeln!(
            s,
            "  colour {c}: {}",
            if members.is_empty() {
                "-".into()
            } else {
                members.join(" ")
            }
        );
    }
    s
}

fn arrow(a: ArrowArgs, mode: Mode, start: Instant) -> Res {
    let (g, label, t) = graph_and_tuple(&a.operands, &a.source, &a.tuple)?;
    let b = budget(&a.budget)?;
    let verdict = arrowing::arrows(&g, &t, mode, &b)?;
    let recheck = match (&verdict.outcome, a.recheck) {
        (Outcome::FreeWitness(w), true) => Some(w.is_free_for(&g, &t)?),
        _ => None,
    };
    let arrow = if mode == Mode::Edge { "->e" } else { "->v" };
    let mut summary = format!(
        "graph    {label} ({} vertices, {} edges, graph6 {})\nrelation G {arrow} {t}\nverdict  {}\nnodes    {}\n",
        g.order(),
        g.edge_count(),
        graph6::emit(&g),
        verdict.outcome.label(),
        verdict.stats.nodes,
    );
    if let Some(w) = verdict.outcome.witness() {
        summary.push_str("witness\n");
        summary.push_str(&describe_witness(w, t.colors()));
    }
    if let Some(ok) = recheck {
        let _ = writeln!(summary, "recheck  {}", if ok { "ok" } else { "FAILED" });
    }
    let result = json!({
        "graph": label,
        "graph6": graph6::emit(&g),
        "mode": mode,
        "tuple": t,
        "verdict": verdict,
        "recheck": recheck,
    });
    Output {
        json: a.out.json,
        command: if mode == Mode::Edge {
            "arrow-edge"
        } else {
            "arrow-vertex"
        },
        start,
    }
    .print(result, &summary);

    if recheck == Some(false) {
        return Err(Failure::Validation(
            "witness failed the independent free-colouring check".into(),
        ));
    }
    expect_verdict(&verdict, a.expect)
}

fn expect_verdict(v: &ArrowVerdict, expect: Option<Expect>) -> Res {
    let got = match v.outcome {
        Outcome::Arrows => Expect::Arrows,
        Outcome::FreeWitness(_) => Expect::Free,
        Outcome::Unknown => Expect::Unknown,
    };
    match expect {
        Some(e) if e == got => Ok(()),
        Some(e) => Err(Failure::Mismatch(format!(
            "expected {}, got {}",
            e.to_possible_value().expect("named").get_name(),
            v.outcome.label()
        ))),
        None if got == Expect::Unknown => Err(Failure::Budget("budget exhausted before a decision".into())),
        None => Ok(()),
    }
}

fn clique_cmd(a: CliqueArgs, start: Instant) -> Res {
    let (g, label) = read_graph(&a.source, a.operand.as_deref())?;
    let cl = clique::clique_number(&g);
    let ind = clique::independence_number(&g);
    let recheck = a
        .recheck
        .then(|| clique::is_clique(&g, cl.witness) && clique::is_independent(&g, ind.witness));
    let mut summary = format!(
        "graph         {label} ({} vertices, {} edges)\nclique number {} {:?}\nindependence  {} {:?}\n",
        g.order(),
        g.edge_count(),
        cl.size,
        cl.witness.to_vec(),
        ind.size,
        ind.witness.to_vec(),
    );
    if let Some(ok) = recheck {
        let _ = writeln!(summary, "recheck       {}", if ok { "ok" } else { "FAILED" });
    }
    let result = json!({
        "graph": label,
        "graph6": graph6::emit(&g),
        "clique": cl,
        "independence": ind,
        "recheck": recheck,
    });
    Output {
        json: a.out.json,
        command: "clique",
        start,
    }
    .print(result, &summary);
    if recheck == Some(false) {
        return Err(Failure::Validation("witness is not a clique or not independent".into()));
    }
    match a.expect {
        Some(k) if k != cl.size => Err(Failure::Mismatch(format!(
            "expected clique number {k}, got {}",
            cl.size
        ))),
        _ => Ok(()),
    }
}

fn build(a: BuildArgs, start: Instant) -> Res {
    let (g, label) = read_graph(&a.source, a.operand.as_deref())?;
    let g6 = graph6::emit(&g);
    let emit = if a.out.json { Emit::Json } else { a.emit };
    let cl = clique::clique_number(&g).size;
    let ind = clique::independence_number(&g).size;
    let result = json!({
        "graph": label,
        "graph6": g6,
        "order": g.order(),
        "edges": g.edge_count(),
        "clique_number": cl,
        "independence_number": ind,
    });
    let summary = match emit {
        Emit::Graph6 => format!("{g6}\n"),
        _ => format!(
            "graph         {label}\ngraph6        {g6}\norder         {}\nedges         {}\nclique number {cl}\nindependence  {ind}\n",
            g.order(),
            g.edge_count()
        ),
    };
    Output {
        json: emit == Emit::Json,
        command: "build",
        start,
    }
    .print(result, &summary);
    Ok(())
}

fn cnf(a: CnfArgs, start: Instant) -> Res {
    let (g, label, t) = graph_and_tuple(&a.operands, &a.source, &a.tuple)?;
    let mode: Mode = a.mode.parse()?;
    let doc = arrowing::export_cnf(&g, &t, mode)?;
    let text = doc.to_dimacs();
    if let Some(path) = &a.output {
        std::fs::write(path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let summary = if a.output.is_some() {
        format!("wrote {} variables, {} clauses\n", doc.variables, doc.clauses.len())
    } else {
        text.clone()
    };
    let result = json!({
        "graph": label,
        "graph6": graph6::emit(&g),
        "mode": mode,
        "tuple": t,
        "variables": doc.variables,
        "clauses": doc.clauses.len(),
        "dimacs": text,
    });
    Output {
        json: a.out.json,
        command: "cnf",
        start,
    }
    .print(result, &summary);
    Ok(())
}

fn render_check(s: &mut String, c: &HypothesisCheck) {
    let status = match c.status {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Unknown => "unknown",
    };
    let detail = c
        .evidence
        .get("text")
        .and_then(Value::as_str)
        .map(str::to_string)
        .or_else(|| {
            c.evidence
                .get("verdict")
                .map(|v| format!("{} after {} nodes", v["outcome"], v["stats"]["nodes"]))
        })
        .or_else(|| c.evidence.get("clique_number").map(|v| format!("found {v}")))
        .or_else(|| c.evidence.get("recomputed").map(|v| format!("recomputed {v}")))
        .unwrap_or_default();
    let _ = writeln!(
        s,
        "  [{status:>7}] {:<18} {:<34} {}",
        c.label,
        c.statement,
        detail.replace('"', "")
    );
}

fn render_report(r: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "instance     {}", r.instance);
    let _ = writeln!(s, "checks");
    r.checks.iter().for_each(|c| render_check(&mut s, c));
    if !r.probes.is_empty() {
        let _ = writeln!(s, "probes (informational)");
        r.probes.iter().for_each(|c| render_check(&mut s, c));
    }
    let c = &r.construction;
    let _ = writeln!(
        s,
        "construction {}: order {}, cl = {} (by additivity {}), q = {}, cl < q: {}",
        c.description, c.order, c.clique_number, c.clique_number_formula, c.q, c.below_q
    );
    let _ = writeln!(
        s,
        "bound        {}",
        r.bound.range.as_deref().unwrap_or(&r.bound.statement)
    );
    let overall = match r.overall {
        Overall::Certified => "certified",
        Overall::RefutedHypothesis => "refuted-hypothesis",
        Overall::Inconclusive => "inconclusive",
    };
    let _ = writeln!(s, "overall      {overall}");
    let _ = writeln!(s, "registry     {}", r.registry_snapshot_hash);
    s
}

fn expect_overall(r: &TheoremReport, expect: Option<ExpectOverall>) -> Res {
    let got = match r.overall {
        Overall::Certified => ExpectOverall::Certified,
        Overall::RefutedHypothesis => ExpectOverall::RefutedHypothesis,
        Overall::Inconclusive => ExpectOverall::Inconclusive,
    };
    match expect {
        Some(e) if e != got => Err(Failure::Mismatch(format!(
            "expected overall {}, got {}",
            e.to_possible_value().expect("named").get_name(),
            serde_json::to_value(r.overall)
                .expect("json")
                .as_str()
                .unwrap_or_default()
        ))),
        _ => Ok(()),
    }
}

fn thm1(a: Thm1Args, start: Instant) -> Res {
    let registry = Registry::load()?;
    let b = budget(&a.budget)?;
    let u = expr::build(&a.u)?;
    let inst = TheoremInstance {
        a: a.a,
        alpha: a.alpha,
        u,
        u_label: a.u.clone(),
    };
    let report = certifier::certify_theorem1(&inst, &registry, &b)?;
    Output {
        json: a.out.json,
        command: "certify-thm1",
        start,
    }
    .print(serde_json::to_value(&report).expect("json"), &render_report(&report));
    expect_overall(&report, a.expect)
}

fn thm2(a: Thm2Args, start: Instant) -> Res {
    let registry = Registry::load()?;
    let b = budget(&a.budget)?;
    let q = expr::build(&a.q)?;
    if !a.no_validate {
        certifier::validate_q(&q)?;
    }
    let report = certifier::certify_theorem2(&q, &registry, &b, a.full_run.then_some(&b))?;
    Output {
        json: a.out.json,
        command: "certify-thm2",
        start,
    }
    .print(serde_json::to_value(&report).expect("json"), &render_report(&report));
    expect_overall(&report, a.expect)
}

fn source_name() -> String {
    std::env::var(registry::ENV_VAR).unwrap_or_else(|_| "built-in".into())
}

fn registry_cmd(a: RegistryArgs, start: Instant) -> Res {
    let registry = Registry::load()?;
    let mut summary = format!("registry {} (sha256 {})\n", source_name(), registry.snapshot_hash());
    for e in registry.entries() {
        let _ = writeln!(
            summary,
            "  {:<20} {:<70} {}",
            e.statement(),
            e.provenance.to_string(),
            e.construction.as_deref().unwrap_or("-")
        );
    }
    let result = json!({
        "source": source_name(),
        "snapshot_hash": registry.snapshot_hash(),
        "entries": registry.entries(),
    });
    Output {
        json: a.out.json,
        command: "registry",
        start,
    }
    .print(result, &summary);
    Ok(())
}

fn verify_known(a: VerifyArgs, start: Instant) -> Res {
    let mut registry = Registry::load()?;
    let b = budget(&a.budget)?;
    let explicit = !a.entry.is_empty();
    let indices: Vec<usize> = if explicit {
        a.entry
            .iter()
            .map(|s| {
                registry
                    .find(s)
                    .ok_or_else(|| Failure::Usage(format!("no registry entry {s:?}")))
            })
            .collect::<Res<_>>()?
    } else {
        (0..registry.entries().len())
            .filter(|&i| {
                let e = &registry.entries()[i];
                let checkable = match e.kind {
                    registry::Kind::Ramsey => true,
                    registry::Kind::FolkmanUpper => e.construction.is_some(),
                    registry::Kind::FolkmanLower => false,
                };
                checkable && (a.all || e.provenance.is_verified())
            })
            .collect()
    };

    let mut checks = Vec::new();
    let mut summary = String::new();
    for i in indices {
        let before = registry.entries()[i].provenance.to_string();
        let check = registry.verify_small(i, &b)?;
        let after = registry.entries()[i].provenance.to_string();
        render_check(&mut summary, &check);
        checks.push(json!({ "check": check, "provenance_before": before, "provenance_after": after }));
    }
    let statuses: Vec<CheckStatus> = checks
        .iter()
        .map(|c| serde_json::from_value(c["check"]["status"].clone()).expect("status"))
        .collect();
    let result = json!({ "snapshot_hash": registry.snapshot_hash(), "checks": checks });
    Output {
        json: a.out.json,
        command: "verify-known",
        start,
    }
    .print(result, &summary);
    if statuses.contains(&CheckStatus::Fail) {
        return Err(Failure::Validation("a registry entry failed re-verification".into()));
    }
    if explicit && statuses.contains(&CheckStatus::Unknown) {
        return Err(Failure::Budget("budget exhausted before an entry was decided".into()));
    }
    Ok(())
}
