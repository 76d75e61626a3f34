//! Table of known Ramsey numbers and edge Folkman bounds.
//!
//! The table is a text file (grammar in `data/registry.txt`) compiled into the
//! binary. Setting `FOLKMAN_REGISTRY` to a path loads that file instead. The
//! SHA-256 of the loaded text identifies the snapshot in reports.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::arrowing::{edge_arrows, ArrowTuple, EdgeColoring, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{CheckStatus, HypothesisCheck};

pub const BUILTIN: &str = include_str!("../data/registry.txt");
pub const ENV_VAR: &str = "FOLKMAN_REGISTRY";

/// Reference recorded when [`Registry::verify_small`] upgrades an entry.
pub const VERIFY_SMALL_REF: &str = "folkman-core::registry::verify_small";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Ramsey,
    FolkmanUpper,
    FolkmanLower,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Ramsey => "ramsey",
            Kind::FolkmanUpper => "folkman-upper",
            Kind::FolkmanLower => "folkman-lower",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ramsey" => Ok(Kind::Ramsey),
            "folkman-upper" => Ok(Kind::FolkmanUpper),
            "folkman-lower" => Ok(Kind::FolkmanLower),
            _ => Err(Error::Registry(format!("unknown kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    TrustedLiterature,
    /// Carries the test (or routine) that verified the entry.
    VerifiedInSuite(String),
}

impl Provenance {
    pub fn is_verified(&self) -> bool {
        matches!(self, Provenance::VerifiedInSuite(_))
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::TrustedLiterature => write!(f, "trusted-literature"),
            Provenance::VerifiedInSuite(r) => write!(f, "verified-in-suite:{r}"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "trusted-literature" {
            return Ok(Provenance::TrustedLiterature);
        }
        match s.strip_prefix("verified-in-suite:") {
            Some(r) if !r.trim().is_empty() => Ok(Provenance::VerifiedInSuite(r.trim().to_string())),
            _ => Err(Error::Registry(format!("bad provenance {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownValue {
    pub kind: Kind,
    pub tuple: ArrowTuple,
    /// Clique bound of a Folkman entry; `None` for Ramsey numbers.
    pub q: Option<usize>,
    pub value: usize,
    pub provenance: Provenance,
    pub construction: Option<String>,
    pub source: String,
}

impl KnownValue {
    /// `R(3,4) = 9`, `F_e(4,4;17) <= 25` and so on.
    pub fn statement(&self) -> String {
        let params = self
            .tuple
            .entries()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        match (self.kind, self.q) {
            (Kind::Ramsey, _) => format!("R({params}) = {}", self.value),
            (Kind::FolkmanUpper, Some(q)) => format!("F_e({params};{q}) <= {}", self.value),
            (Kind::FolkmanLower, Some(q)) => format!("F_e({params};{q}) >= {}", self.value),
            (_, None) => unreachable!("folkman entries carry q"),
        }
    }

    fn parse_line(line: &str, lineno: usize) -> Result<KnownValue> {
        let err = |msg: String| Error::Registry(format!("line {lineno}: {msg}"));
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [kind, params, value, provenance, construction, source] = fields[..] else {
            return Err(err(format!("expected 6 fields, found {}", fields.len())));
        };
        let kind: Kind = kind.parse().map_err(|e: Error| err(e.to_string()))?;
        let (tuple_text, q) = match (kind, params.split_once(';')) {
            (Kind::Ramsey, None) => (params, None),
            (Kind::Ramsey, Some(_)) => return Err(err("ramsey parameters take no q".into())),
            (_, Some((t, q))) => (
                t,
                Some(q.trim().parse::<usize>().map_err(|_| err(format!("bad q {q:?}")))?),
            ),
            (_, None) => return Err(err("folkman parameters need ';q'".into())),
        };
        let tuple: ArrowTuple = tuple_text.parse().map_err(|e: Error| err(e.to_string()))?;
        if kind == Kind::Ramsey && tuple.colors() != 2 {
            return Err(err("ramsey entries have two parameters".into()));
        }
        if let Some(q) = q {
            if !crate::certifier::validate_folkman_q(&tuple, q) {
                return Err(err(format!("q = {q} must exceed every entry of {tuple}")));
            }
        }
        let value = value.parse().map_err(|_| err(format!("bad value {value:?}")))?;
        let provenance = provenance.parse().map_err(|e: Error| err(e.to_string()))?;
        let construction = match construction {
            "-" | "" => None,
            c => {
                crate::expr::Expr::parse(c).map_err(|e| err(e.to_string()))?;
                Some(c.to_string())
            }
        };
        Ok(KnownValue {
            kind,
            tuple,
            q,
            value,
            provenance,
            construction,
            source: source.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct Registry {
    entries: Vec<KnownValue>,
    hash: String,
}

impl Registry {
    pub fn parse(text: &str) -> Result<Registry> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            entries.push(KnownValue::parse_line(line, i + 1)?);
        }
        let hash = hex::encode(Sha256::digest(text.as_bytes()));
        Ok(Registry { entries, hash })
    }

    pub fn builtin() -> Registry {
        Registry::parse(BUILTIN).expect("built-in registry parses")
    }

    /// The file named by `FOLKMAN_REGISTRY`, or the built-in table.
    pub fn load() -> Result<Registry> {
        match std::env::var_os(ENV_VAR) {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Registry(format!("{}: {e}", path.to_string_lossy())))?;
                Registry::parse(&text)
            }
            None => Ok(Registry::builtin()),
        }
    }

    pub fn entries(&self) -> &[KnownValue] {
        &self.entries
    }

    /// Hex SHA-256 of the table text.
    pub fn snapshot_hash(&self) -> &str {
        &self.hash
    }

    /// Looks up R(s,t) in either order. Never computes a missing value.
    pub fn ramsey(&self, s: usize, t: usize) -> Result<&KnownValue> {
        self.entries
            .iter()
            .find(|e| {
                e.kind == Kind::Ramsey && {
                    let p = e.tuple.entries();
                    (p[0], p[1]) == (s, t) || (p[0], p[1]) == (t, s)
                }
            })
            .ok_or_else(|| Error::Registry(format!("R({s},{t}) is not in the registry")))
    }

    pub fn ramsey_value(&self, s: usize, t: usize) -> Result<usize> {
        self.ramsey(s, t).map(|e| e.value)
    }

    pub fn folkman_bounds(&self) -> Vec<&KnownValue> {
        self.entries.iter().filter(|e| e.kind != Kind::Ramsey).collect()
    }

    /// Folkman bound of the given kind for `tuple` and `q`, if tabulated.
    pub fn folkman(&self, kind: Kind, tuple: &[usize], q: usize) -> Option<&KnownValue> {
        self.entries
            .iter()
            .find(|e| e.kind == kind && e.q == Some(q) && e.tuple.entries() == tuple)
    }

    pub fn find(&self, statement: &str) -> Option<usize> {
        let norm = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
        let want = norm(statement);
        self.entries.iter().position(|e| norm(&e.statement()) == want)
    }

    /// Re-verifies entry `index` and upgrades its provenance on a pass.
    /// Provenance never moves back to trusted.
    pub fn verify_small(&mut self, index: usize, budget: &SearchBudget) -> Result<HypothesisCheck> {
        let entry = self
            .entries
            .get(index)
            .ok_or_else(|| Error::Registry(format!("no registry entry {index}")))?;
        let check = verify_entry(entry, budget)?;
        if check.status == CheckStatus::Pass && !entry.provenance.is_verified() {
            self.entries[index].provenance = Provenance::VerifiedInSuite(VERIFY_SMALL_REF.to_string());
        }
        Ok(check)
    }
}

/// Re-checks one entry: for R(s,t) = v that K_v arrows and K_{v-1} does not;
/// for an upper Folkman bound that the construction has the stated order,
/// clique number below q, and arrows the tuple.
pub fn verify_entry(entry: &KnownValue, budget: &SearchBudget) -> Result<HypothesisCheck> {
    let params = entry
        .tuple
        .entries()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let label = match entry.q {
        Some(q) => format!("{}:{params};{q}", entry.kind.name()),
        None => format!("{}:{params}", entry.kind.name()),
    };
    let check = HypothesisCheck::new(label, entry.statement());
    match entry.kind {
        Kind::Ramsey => verify_ramsey(entry, check, budget),
        Kind::FolkmanUpper => verify_folkman_upper(entry, check, budget),
        Kind::FolkmanLower => Err(Error::Unsupported(format!(
            "{} is a lower bound; only constructions can be re-verified",
            entry.statement()
        ))),
    }
}

fn verify_ramsey(entry: &KnownValue, check: HypothesisCheck, budget: &SearchBudget) -> Result<HypothesisCheck> {
    let v = entry.value;
    let upper = edge_arrows(&Graph::complete(v)?, &entry.tuple, budget)?;
    let upper_status = status_of(upper.is_arrows(), upper.is_unknown());
    let below = Graph::complete(v - 1)?;

    // a supplied colour class is checked directly; search is the fallback
    let lower = match &entry.construction {
        Some(text) => {
            let class_one = crate::expr::build(text)?;
            if class_one.order() != v - 1 {
                return Err(Error::Registry(format!(
                    "{text} has order {}, expected {}",
                    class_one.order(),
                    v - 1
                )));
            }
            let coloring = EdgeColoring::split(&below, &class_one)?;
            let free = crate::arrowing::check::check_edge_coloring_free(&below, &entry.tuple, &coloring)?;
            serde_json::json!({ "method": "split", "class_one": text, "free": free })
        }
        None => {
            let verdict = edge_arrows(&below, &entry.tuple, budget)?;
            serde_json::json!({ "method": "search", "verdict": verdict, "free": verdict.is_free(), "unknown": verdict.is_unknown() })
        }
    };
    let lower_status = status_of(lower["free"] == true, lower["unknown"] == true);

    let status = combine(upper_status, lower_status);
    let how = if lower["method"] == "split" {
        "by split colouring"
    } else {
        "by search"
    };
    let text = format!(
        "K{v} {}, K{} {} {how}",
        upper.outcome.label(),
        v - 1,
        if lower["free"] == true {
            "free"
        } else if lower["unknown"] == true {
            "unknown"
        } else {
            "arrows"
        }
    );
    Ok(check
        .status(status)
        .with("text", text)
        .with("upper", format!("K{v} ->e {}", entry.tuple))
        .with("upper_verdict", &upper)
        .with("lower", format!("K{} free for {}", v - 1, entry.tuple))
        .with("lower_evidence", lower))
}

fn verify_folkman_upper(entry: &KnownValue, check: HypothesisCheck, budget: &SearchBudget) -> Result<HypothesisCheck> {
    let Some(text) = &entry.construction else {
        return Err(Error::Unsupported(format!("{} has no construction", entry.statement())));
    };
    let q = entry.q.expect("folkman entries carry q");
    let g = crate::expr::build(text)?;
    let cl = crate::clique::clique_number(&g).size;
    let shape_ok = g.order() == entry.value && cl < q;
    let verdict = edge_arrows(&g, &entry.tuple, budget)?;
    let status = combine(
        status_of(shape_ok, false),
        status_of(verdict.is_arrows(), verdict.is_unknown()),
    );
    Ok(check
        .status(status)
        .with("construction", text)
        .with("graph6", crate::graph6::emit(&g))
        .with("order", g.order())
        .with("clique_number", cl)
        .with("q", q)
        .with("verdict", &verdict))
}

fn status_of(ok: bool, unknown: bool) -> CheckStatus {
    match (ok, unknown) {
        (_, true) => CheckStatus::Unknown,
        (true, false) => CheckStatus::Pass,
        (false, false) => CheckStatus::Fail,
    }
}

fn combine(a: CheckStatus, b: CheckStatus) -> CheckStatus {
    use CheckStatus::*;
    match (a, b) {
        (Fail, _) | (_, Fail) => Fail,
        (Pass, Pass) => Pass,
        _ => Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_lookups() {
        let r = Registry::builtin();
        assert_eq!(r.ramsey_value(3, 3).unwrap(), 6);
        assert_eq!(r.ramsey_value(3, 4).unwrap(), 9);
        assert_eq!(r.ramsey_value(4, 3).unwrap(), 9);
        assert_eq!(r.ramsey_value(5, 3).unwrap(), 14);
        assert!(matches!(r.ramsey(5, 5), Err(Error::Registry(_))));
        assert!(r.ramsey(3, 5).unwrap().provenance == Provenance::TrustedLiterature);
        assert_eq!(r.snapshot_hash().len(), 64);
    }

    #[test]
    fn folkman_table() {
        let r = Registry::builtin();
        let fb: Vec<String> = r.folkman_bounds().iter().map(|e| e.statement()).collect();
        for s in [
            "F_e(3,5;13) <= 21",
            "F_e(4,4;17) <= 25",
            "F_e(4,4;17) >= 22",
            "F_e(3,3;6) <= 8",
        ] {
            assert!(fb.iter().any(|x| x == s), "missing {s}");
        }
        assert_eq!(r.folkman(Kind::FolkmanLower, &[4, 4], 17).unwrap().value, 22);
        assert_eq!(
            r.find("R(3, 4) = 9"),
            r.entries().iter().position(|e| e.statement() == "R(3,4) = 9")
        );
    }

    #[test]
    fn parse_errors_name_the_line() {
        let bad = "# c\nramsey | 3,3 | 6 | trusted-literature | - \n";
        let e = Registry::parse(bad).unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
        assert!(Registry::parse("folkman-upper | 4,4;4 | 9 | trusted-literature | - | x").is_err());
        assert!(Registry::parse("folkman-upper | 4,4 | 9 | trusted-literature | - | x").is_err());
        assert!(Registry::parse("ramsey | 3,3 | 6 | verified-in-suite: | - | x").is_err());
        assert!(Registry::parse("ramsey | 3,3 | 6 | trusted-literature | K( | x").is_err());
    }

    #[test]
    fn hash_tracks_text() {
        let a = Registry::parse("ramsey | 3,3 | 6 | trusted-literature | - | x").unwrap();
        let b = Registry::parse("ramsey | 3,3 | 6 | trusted-literature | - | y").unwrap();
        assert_ne!(a.snapshot_hash(), b.snapshot_hash());
    }

    #[test]
    fn verify_upgrades_once() {
        let mut r = Registry::parse("ramsey | 3,3 | 6 | trusted-literature | - | x").unwrap();
        let c = r.verify_small(0, &SearchBudget::unlimited()).unwrap();
        assert_eq!(c.status, CheckStatus::Pass);
        assert_eq!(
            r.entries()[0].provenance,
            Provenance::VerifiedInSuite(VERIFY_SMALL_REF.into())
        );
    }

    #[test]
    fn wrong_value_fails() {
        let mut r = Registry::parse("ramsey | 3,3 | 7 | trusted-literature | - | x").unwrap();
        let c = r.verify_small(0, &SearchBudget::unlimited()).unwrap();
        assert_eq!(c.status, CheckStatus::Fail);
        assert_eq!(r.entries()[0].provenance, Provenance::TrustedLiterature);
    }

    #[test]
    fn budget_exhaustion_keeps_provenance() {
        let mut r = Registry::builtin();
        let i = r.find("R(3,5) = 14").unwrap();
        let c = r
            .verify_small(i, &SearchBudget::unlimited().with_nodes(10_000).with_workers(1))
            .unwrap();
        assert_eq!(c.status, CheckStatus::Unknown);
        assert_eq!(c.evidence["lower_evidence"]["free"], true);
        assert_eq!(r.entries()[i].provenance, Provenance::TrustedLiterature);
    }
}
