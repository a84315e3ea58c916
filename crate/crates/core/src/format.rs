//! Plain-text edge lists and Graphviz DOT export.
//!
//! Edge-list layout:
//!
//! ```text
//! bcg <n> <m>
//! <n characters over {s,l}>
//! <u> <v> [*]        (m lines, 0-based; `*` marks a strong edge)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::contraction::Multigraph;
use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color};

/// A parsed edge list: the graph plus the edges marked strong.
#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: BichromaticGraph,
    pub strong: BTreeSet<(usize, usize)>,
}

impl EdgeList {
    pub fn into_multigraph(self) -> Result<Multigraph> {
        Multigraph::from_graph(&self.graph, &self.strong)
    }
}

pub fn write_edge_list(g: &BichromaticGraph, strong: &BTreeSet<(usize, usize)>) -> String {
    let edges = g.edges();
    let mut out = format!("bcg {} {}\n", g.len(), edges.len());
    out.extend(g.colors().iter().map(|c| c.as_char()));
    out.push('\n');
    for (u, v) in edges {
        if strong.contains(&(u, v)) || strong.contains(&(v, u)) {
            let _ = writeln!(out, "{u} {v} *");
        } else {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

pub fn write_multigraph(m: &Multigraph) -> String {
    write_edge_list(&m.underlying(), &m.strong_edges())
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'));
    let err = |line: usize, message: String| Error::Parse { line, message };

    let (line_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| err(1, "missing `bcg <n> <m>` header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match fields.as_slice() {
        ["bcg", n, m] => (
            n.parse::<usize>()
                .map_err(|_| err(line_no, format!("bad vertex count {n:?}")))?,
            m.parse::<usize>()
                .map_err(|_| err(line_no, format!("bad edge count {m:?}")))?,
        ),
        _ => return Err(err(line_no, format!("expected `bcg <n> <m>`, found {header:?}"))),
    };

    let colors: Vec<Color> = if n == 0 {
        // the color line may be blank or missing entirely
        Vec::new()
    } else {
        let (line_no, color_line) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| err(line_no + 1, "missing color line".into()))?;
        let colors: Option<Vec<Color>> = color_line.chars().map(Color::from_char).collect();
        let colors = colors.ok_or_else(|| err(line_no, "colors must be `s` or `l`".into()))?;
        if colors.len() != n {
            return Err(err(
                line_no,
                format!("{} colors for {n} vertices", colors.len()),
            ));
        }
        colors
    };

    let mut edges = Vec::with_capacity(m);
    let mut strong = BTreeSet::new();
    for (line_no, line) in lines.filter(|(_, l)| !l.is_empty()) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line_no, format!("bad vertex {s:?}")))
        };
        let (u, v, is_strong) = match fields.as_slice() {
            [u, v] => (parse(u)?, parse(v)?, false),
            [u, v, "*"] => (parse(u)?, parse(v)?, true),
            _ => return Err(err(line_no, format!("expected `u v [*]`, found {line:?}"))),
        };
        if u >= n || v >= n || u == v {
            return Err(err(line_no, format!("invalid edge ({u}, {v})")));
        }
        edges.push((u, v));
        if is_strong {
            strong.insert((u.min(v), u.max(v)));
        }
    }
    if edges.len() != m {
        return Err(err(
            0,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let graph = BichromaticGraph::new(n, colors, &edges)?;
    Ok(EdgeList { graph, strong })
}

/// DOT export. Short vertices are circles, long vertices boxes; strong
/// edges are drawn bold.
pub fn write_dot(g: &BichromaticGraph, strong: &BTreeSet<(usize, usize)>) -> String {
    let mut out = String::new();
    let name = g.name().unwrap_or("G");
    let _ = writeln!(out, "graph {} {{", quote(name));
    for v in 0..g.len() {
        let shape = match g.color(v) {
            Color::Short => "circle",
            Color::Long => "box",
        };
        match g.label(v) {
            Some(l) => {
                let _ = writeln!(out, "  {v} [shape={shape}, label={}];", quote(l));
            }
            None => {
                let _ = writeln!(out, "  {v} [shape={shape}];");
            }
        }
    }
    for (u, v) in g.edges() {
        if strong.contains(&(u, v)) {
            let _ = writeln!(out, "  {u} -- {v} [style=bold];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
