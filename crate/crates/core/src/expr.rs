//! Construction expressions.
//!
//! ```text
//! expr := "K" n | "C" n | "E" n | "Q"
//!       | "circulant(" n ("," d)* ")"
//!       | "complement(" expr ")"
//!       | "join(" expr ("," expr)+ ")"
//!       | "g6(" graph6 ")"
//! ```
//!
//! `E<n>` is the edgeless graph, `Q` the validated 13-vertex graph from
//! [`crate::certifier::reconstruct_q`]. `join` with more than two arguments
//! associates to the left.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Complete(usize),
    Cycle(usize),
    Edgeless(usize),
    Q,
    Circulant(usize, Vec<usize>),
    Complement(Box<Expr>),
    Join(Vec<Expr>),
    Graph6(String),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self) -> Result<Graph> {
        match self {
            Expr::Complete(n) => Graph::complete(*n),
            Expr::Cycle(n) => Graph::cycle(*n),
            Expr::Edgeless(n) => Graph::empty(*n),
            Expr::Q => crate::certifier::reconstruct_q().map(|(g, _)| g),
            Expr::Circulant(n, ds) => Graph::circulant(*n, ds),
            Expr::Complement(e) => Ok(e.eval()?.complement()),
            Expr::Join(parts) => {
                let mut iter = parts.iter();
                let first = iter.next().expect("join has arguments").eval()?;
                iter.try_fold(first, |acc, e| Graph::join(&acc, &e.eval()?))
            }
            Expr::Graph6(s) => crate::graph6::parse(s),
        }
    }
}

/// Parses and evaluates in one step.
pub fn build(text: &str) -> Result<Graph> {
    Expr::parse(text)?.eval()
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Complete(n) => write!(f, "K{n}"),
            Expr::Cycle(n) => write!(f, "C{n}"),
            Expr::Edgeless(n) => write!(f, "E{n}"),
            Expr::Q => write!(f, "Q"),
            Expr::Circulant(n, ds) => {
                write!(f, "circulant({n}")?;
                for d in ds {
                    write!(f, ",{d}")?;
                }
                write!(f, ")")
            }
            Expr::Complement(e) => write!(f, "complement({e})"),
            Expr::Join(parts) => {
                let inner: Vec<String> = parts.iter().map(Expr::to_string).collect();
                write!(f, "join({})", inner.join(","))
            }
            Expr::Graph6(s) => write!(f, "g6({s})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Malformed {
            offset: self.pos,
            reason: format!("construction expression: {reason}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphabetic() || *c == b'6')
        {
            // identifiers are letters only, except the digit in "g6"
            if self.src[self.pos] == b'6' && &self.src[start..self.pos] != b"g" {
                break;
            }
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters")
    }

    fn expr(&mut self) -> Result<Expr> {
        let at = self.pos;
        let name = self.ident().to_string();
        match name.as_str() {
            "K" => Ok(Expr::Complete(self.number()?)),
            "C" => Ok(Expr::Cycle(self.number()?)),
            "E" => Ok(Expr::Edgeless(self.number()?)),
            "Q" => Ok(Expr::Q),
            "circulant" => {
                self.expect(b'(')?;
                let n = self.number()?;
                let mut ds = Vec::new();
                while self.eat(b',') {
                    ds.push(self.number()?);
                }
                self.expect(b')')?;
                Ok(Expr::Circulant(n, ds))
            }
            "complement" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(Expr::Complement(Box::new(e)))
            }
            "join" => {
                self.expect(b'(')?;
                let mut parts = vec![self.expr()?];
                while self.eat(b',') {
                    parts.push(self.expr()?);
                }
                self.expect(b')')?;
                if parts.len() < 2 {
                    return Err(self.error("join needs at least two arguments"));
                }
                Ok(Expr::Join(parts))
            }
            "g6" => {
                self.expect(b'(')?;
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|&c| c != b')') {
                    self.pos += 1;
                }
                let lit = std::str::from_utf8(&self.src[start..self.pos])
                    .map_err(|_| self.error("graph6 literal is not ASCII"))?
                    .trim()
                    .to_string();
                self.expect(b')')?;
                Ok(Expr::Graph6(lit))
            }
            "" => {
                self.pos = at;
                Err(self.error("expected a construction"))
            }
            other => {
                self.pos = at;
                Err(self.error(&format!("unknown construction {other:?}")))
            }
        }
    }
}
