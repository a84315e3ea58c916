//! Graph expressions: a small recursive-descent grammar over the library's
//! constructors and operations.
//!
//! ```text
//! expr   := call | atom | path
//! call   := NAME '(' expr (',' expr)* ')'  |  'twist' '(' expr ',' INT ',' INT ')'
//! atom   := 'weyl:' TYPE | 'model:' TYPE | 'kneser:' INT ',' INT | 'sp:' INT
//!         | 'quadric:' INT ',' ('+'|'-') | 'cycle:' INT | 'complete:' INT
//!         | 'path:' INT | 'empty:' INT
//! ```
//!
//! Anything else is read as a path to an edge-list file.

use std::collections::BTreeSet;
use std::fmt;

use weylgraph::families::{self, Sign};
use weylgraph::format::parse_edge_list;
use weylgraph::recognition::{build_locally_b4, build_locally_f4, clique_partition, twist, twist_first};
use weylgraph::roots::{combinatorial_weyl, parse_type, root_system, weyl_graph, RootType};
use weylgraph::{contract, BichromaticGraph, Color, CombineMode, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Weyl(RootType, usize),
    Model(RootType, usize),
    Kneser(usize, usize),
    Symplectic(usize),
    Quadric(usize, Sign),
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Empty(usize),
    File(String),
    Double(Box<Expr>),
    Product(Vec<Expr>),
    Join(Box<Expr>, Box<Expr>),
    Union(Box<Expr>, Box<Expr>),
    Twist(Box<Expr>, Option<(usize, usize)>),
    SwapColors(Box<Expr>),
    F4Build(Box<Expr>),
    B4Build(Box<Expr>),
    Contract(Box<Expr>),
    Subdivide(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const COMBINATORS: &[&str] = &[
    "double", "product", "join", "union", "twist", "swapcolors", "f4build", "b4build", "contract", "subdivide",
];

impl<'a> Parser<'a> {
    fn error<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |x| format!("{x:?}"));
            self.error(self.pos, format!("expected {c:?}, found {found}"))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        let w = &self.rest()[..len];
        self.pos += len;
        w
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let w = self.word();
        w.parse().or_else(|_| self.error(start, format!("expected a number, found {w:?}")))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.word();
        self.skip_ws();
        match self.peek() {
            Some('(') if !name.is_empty() => self.call(start, name),
            Some(':') if !name.is_empty() => {
                self.pos += 1;
                self.atom(start, name)
            }
            _ => {
                self.pos = start;
                self.path()
            }
        }
    }

    fn call(&mut self, start: usize, name: &str) -> Result<Expr, ParseError> {
        if !COMBINATORS.contains(&name) {
            return self.error(start, format!("unknown operation {name:?}"));
        }
        self.expect('(')?;
        let first = self.expr()?;
        if name == "twist" && self.eat(',') {
            let i = self.int()?;
            self.expect(',')?;
            let j = self.int()?;
            self.expect(')')?;
            return Ok(Expr::Twist(Box::new(first), Some((i, j))));
        }
        let mut args = vec![first];
        while self.eat(',') {
            args.push(self.expr()?);
        }
        self.expect(')')?;
        let arity = |want: &str, ok: bool| -> Result<(), ParseError> {
            if ok {
                Ok(())
            } else {
                Err(ParseError {
                    pos: start,
                    message: format!("{name} takes {want}, got {}", args.len()),
                })
            }
        };
        let unary = |args: Vec<Expr>| Box::new(args.into_iter().next().expect("one argument"));
        Ok(match name {
            "product" => {
                arity("at least two arguments", args.len() >= 2)?;
                Expr::Product(args)
            }
            "join" | "union" => {
                arity("two arguments", args.len() == 2)?;
                let mut it = args.into_iter();
                let (a, b) = (Box::new(it.next().unwrap()), Box::new(it.next().unwrap()));
                if name == "join" {
                    Expr::Join(a, b)
                } else {
                    Expr::Union(a, b)
                }
            }
            _ => {
                arity("one argument", args.len() == 1)?;
                let a = unary(args);
                match name {
                    "double" => Expr::Double(a),
                    "twist" => Expr::Twist(a, None),
                    "swapcolors" => Expr::SwapColors(a),
                    "f4build" => Expr::F4Build(a),
                    "b4build" => Expr::B4Build(a),
                    "contract" => Expr::Contract(a),
                    _ => Expr::Subdivide(a),
                }
            }
        })
    }

    fn atom(&mut self, start: usize, name: &str) -> Result<Expr, ParseError> {
        match name {
            "weyl" | "model" => {
                let type_pos = self.pos;
                let label = self.word();
                let (t, n) = parse_type(label).or_else(|e| self.error(type_pos, e.to_string()))?;
                if name == "model" {
                    if !matches!(t, RootType::A | RootType::B | RootType::C | RootType::D) {
                        return self.error(type_pos, format!("no index-pair model for type {t}"));
                    }
                    Ok(Expr::Model(t, n))
                } else {
                    Ok(Expr::Weyl(t, n))
                }
            }
            "kneser" => {
                let n = self.int()?;
                self.expect(',')?;
                let k = self.int()?;
                Ok(Expr::Kneser(n, k))
            }
            "quadric" => {
                let n = self.int()?;
                self.expect(',')?;
                self.skip_ws();
                let sign = match self.peek() {
                    Some('+') => Sign::Plus,
                    Some('-') => Sign::Minus,
                    _ => return self.error(self.pos, "expected '+' or '-'"),
                };
                self.pos += 1;
                Ok(Expr::Quadric(n, sign))
            }
            "sp" => Ok(Expr::Symplectic(self.int()?)),
            "cycle" => Ok(Expr::Cycle(self.int()?)),
            "complete" => Ok(Expr::Complete(self.int()?)),
            "path" => Ok(Expr::Path(self.int()?)),
            "empty" => Ok(Expr::Empty(self.int()?)),
            _ => self.error(start, format!("unknown constructor {name:?}")),
        }
    }

    fn path(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().find([',', ')', '(']).unwrap_or(self.rest().len());
        let p = self.rest()[..len].trim_end();
        if p.is_empty() {
            return self.error(start, "expected a graph expression");
        }
        self.pos += len;
        Ok(Expr::File(p.to_string()))
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return p.error(p.pos, format!("unexpected trailing input {:?}", p.rest()));
    }
    Ok(e)
}

/// A graph together with the edges marked strong. Only contractions and
/// edge-list files carry strong edges.
#[derive(Debug, Clone)]
pub struct Value {
    pub graph: BichromaticGraph,
    pub strong: BTreeSet<(usize, usize)>,
}

impl From<BichromaticGraph> for Value {
    fn from(graph: BichromaticGraph) -> Self {
        Value {
            graph,
            strong: BTreeSet::new(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Build {
    F4,
    B4,
}

/// Λ for a blow-up: the value's colors when every edge joins two colors,
/// otherwise a 2-coloring of the bipartite graph. For `F4` the side of
/// vertex 0 is short; for `B4` the side whose vertices have bivalency 6.
fn as_lambda(v: &Value, kind: Build) -> anyhow::Result<Multigraph> {
    let m = Multigraph::from_graph(&v.graph, &v.strong)?;
    if !m.is_empty() && m.is_color_bipartite() && m.colors().contains(&Color::Short) {
        return Ok(m);
    }
    let side = v
        .graph
        .bipartition()
        .ok_or_else(|| anyhow::anyhow!("the graph given to a blow-up must be bipartite"))?;
    let short_side = match kind {
        Build::F4 => side.first().copied().unwrap_or(false),
        Build::B4 => (0..m.len())
            .find(|&x| m.bivalency(x) == 6)
            .is_some_and(|x| side[x]),
    };
    let colors = side
        .iter()
        .map(|&s| if s == short_side { Color::Short } else { Color::Long })
        .collect();
    Ok(m.with_colors(colors)?)
}

pub fn eval(e: &Expr) -> anyhow::Result<Value> {
    use anyhow::Context;
    let g = |x: &Expr| eval(x).map(|v| v.graph);
    Ok(match e {
        Expr::Weyl(t, n) => weyl_graph(&root_system(*t, *n)?)?.into(),
        Expr::Model(t, n) => combinatorial_weyl(*t, *n)?.into(),
        Expr::Kneser(n, k) => families::kneser(*n, *k)?.into(),
        Expr::Symplectic(n) => families::symplectic_graph(*n)?.into(),
        Expr::Quadric(n, s) => families::quadric_graph(*n, *s)?.into(),
        Expr::Cycle(n) => families::cycle(*n)?.into(),
        Expr::Complete(n) => families::complete(*n)?.into(),
        Expr::Path(n) => families::path(*n)?.into(),
        Expr::Empty(n) => families::edgeless(*n)?.into(),
        Expr::File(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let parsed = parse_edge_list(&text).with_context(|| format!("parsing {path}"))?;
            Value {
                graph: parsed.graph,
                strong: parsed.strong,
            }
        }
        Expr::Double(a) => g(a)?.double()?.into(),
        Expr::Product(args) => {
            let mut acc = g(&args[0])?;
            for a in &args[1..] {
                acc = acc.combine(&g(a)?, CombineMode::CartesianProduct)?;
            }
            acc.into()
        }
        Expr::Join(a, b) => g(a)?.combine(&g(b)?, CombineMode::Join)?.into(),
        Expr::Union(a, b) => g(a)?.combine(&g(b)?, CombineMode::DisjointUnion)?.into(),
        Expr::Twist(a, blocks) => {
            let h = g(a)?;
            match blocks {
                None => twist_first(&h)?.into(),
                Some((i, j)) => {
                    let p = clique_partition(&h, 4)?;
                    let block = |k: usize| {
                        (k < p.len())
                            .then(|| p.block(k).clone())
                            .ok_or_else(|| anyhow::anyhow!("block {k} out of range (graph has {} blocks)", p.len()))
                    };
                    twist(&h, &block(*i)?, &block(*j)?)?.into()
                }
            }
        }
        Expr::SwapColors(a) => {
            let v = eval(a)?;
            Value {
                graph: v.graph.swap_colors(),
                strong: v.strong,
            }
        }
        Expr::F4Build(a) => build_locally_f4(&as_lambda(&eval(a)?, Build::F4)?, None)?.into(),
        Expr::B4Build(a) => build_locally_b4(&as_lambda(&eval(a)?, Build::B4)?, None)?.into(),
        Expr::Contract(a) => {
            let h = g(a)?;
            let c = contract(&h, &clique_partition(&h, 4)?)?;
            Value {
                graph: c.quotient.underlying(),
                strong: c.quotient.strong_edges(),
            }
        }
        Expr::Subdivide(a) => families::subdivision(&g(a)?)?.into(),
    })
}
