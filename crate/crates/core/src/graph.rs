//! Bichromatic graphs and the structural operations used throughout the crate.
//!
//! Every vertex carries a [`Color`]. Monochromatic graphs are the all-long
//! case. Adjacency is stored as one packed bitset row per vertex, so
//! neighbourhood intersections and degree counts are word operations.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::bits::{self, Ones};
use crate::error::{Error, Result};

/// Largest vertex count any constructor will produce.
pub const MAX_VERTICES: usize = 1024;

/// Root-length class of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Short,
    Long,
}

impl Color {
    pub fn swapped(self) -> Color {
        match self {
            Color::Short => Color::Long,
            Color::Long => Color::Short,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Short => 's',
            Color::Long => 'l',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            's' => Some(Color::Short),
            'l' => Some(Color::Long),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Short => "short",
            Color::Long => "long",
        })
    }
}

/// Sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub(crate) fn from_row(row: &[u64]) -> Self {
        VertexSet(Ones::new(row).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// Finite simple undirected graph with a short/long color on every vertex.
///
/// Equality is structural: vertex count, colors and adjacency. Labels and
/// the optional name are provenance only.
#[derive(Clone)]
pub struct BichromaticGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    colors: Vec<Color>,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

impl PartialEq for BichromaticGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.colors == other.colors && self.adj == other.adj
    }
}

impl Eq for BichromaticGraph {}

impl fmt::Debug for BichromaticGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BichromaticGraph")
            .field("n", &self.n)
            .field("short", &self.count_color(Color::Short))
            .field("edges", &self.edge_count())
            .field("name", &self.name)
            .finish()
    }
}

/// How [`BichromaticGraph::components`] restricts the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restrict {
    All,
    ShortOnly,
    LongOnly,
}

/// Binary graph constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    DisjointUnion,
    Join,
    CartesianProduct,
}

/// Induced subgraph on a vertex neighbourhood, with the map back to the host.
#[derive(Debug, Clone)]
pub struct LocalGraph {
    pub graph: BichromaticGraph,
    /// `host_vertices[i]` is the host vertex behind local vertex `i`.
    pub host_vertices: Vec<usize>,
}

/// Graph diameter; disconnected graphs have no finite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// All-pairs BFS distances.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<Option<u32>>,
    pub diameter: Diameter,
    pub connected: bool,
}

impl DistanceProfile {
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }
}

impl BichromaticGraph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, colors: Vec<Color>, edges: &[(usize, usize)]) -> Result<Self> {
        if colors.len() != n {
            return Err(Error::input(format!(
                "{} colors given for {n} vertices",
                colors.len()
            )));
        }
        let mut g = Self::empty_colored(colors)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// All-`color` graph from an edge list.
    pub fn monochromatic(n: usize, color: Color, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, vec![color; n], edges)
    }

    pub(crate) fn empty_colored(colors: Vec<Color>) -> Result<Self> {
        let n = colors.len();
        if n > MAX_VERTICES {
            return Err(Error::Resource {
                what: "vertex count",
                size: n,
                limit: MAX_VERTICES,
            });
        }
        let words = bits::words_for(n);
        Ok(BichromaticGraph {
            n,
            words,
            adj: vec![0; n * words],
            colors,
            labels: None,
            name: None,
        })
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on `u < v`.
    pub(crate) fn from_fn(
        colors: Vec<Color>,
        mut adjacent: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let mut g = Self::empty_colored(colors)?;
        for u in 0..g.n {
            for v in u + 1..g.n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.adj[u * w..(u + 1) * w], v);
        bits::clear(&mut self.adj[v * w..(v + 1) * w], u);
    }

    /// Attaches per-vertex labels; they must be unique.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::input(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::input(format!("duplicate vertex label {l:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn count_color(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    pub fn vertices_of(&self, c: Color) -> VertexSet {
        VertexSet((0..self.n).filter(|&v| self.colors[v] == c).collect())
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_row(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// The same graph with every short vertex made long and vice versa.
    pub fn swap_colors(&self) -> Self {
        let mut g = self.clone();
        g.colors = self.colors.iter().map(|c| c.swapped()).collect();
        g
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n || !is_permutation(perm) {
            return Err(Error::input("relabeling is not a permutation of the vertices"));
        }
        let mut colors = vec![Color::Long; self.n];
        for v in 0..self.n {
            colors[perm[v]] = self.colors[v];
        }
        let mut g = Self::empty_colored(colors)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); self.n];
            for v in 0..self.n {
                out[perm[v]] = labels[v].clone();
            }
            g.labels = Some(out);
        }
        g.name = self.name.clone();
        Ok(g)
    }

    /// Induced subgraph on `vertices`, in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        let mut g = Self::empty_colored(colors).expect("subgraph is no larger than host");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// The induced subgraph on the neighbours of `v`.
    pub fn local_graph(&self, v: usize) -> LocalGraph {
        let host_vertices: Vec<usize> = self.neighbors(v).collect();
        LocalGraph {
            graph: self.induced_subgraph(&host_vertices),
            host_vertices,
        }
    }

    /// Vertices adjacent to every member of `set`.
    pub fn common_neighbors(&self, set: &[usize]) -> Result<VertexSet> {
        let row = self.common_neighbor_row(set)?;
        Ok(VertexSet::from_row(&row))
    }

    pub(crate) fn common_neighbor_row(&self, set: &[usize]) -> Result<Vec<u64>> {
        let (&first, rest) = set
            .split_first()
            .ok_or_else(|| Error::input("common neighbourhood of an empty set"))?;
        for &v in set {
            if v >= self.n {
                return Err(Error::input(format!("vertex {v} outside 0..{}", self.n)));
            }
        }
        let mut row = self.row(first).to_vec();
        for &v in rest {
            for (a, b) in row.iter_mut().zip(self.row(v)) {
                *a &= b;
            }
        }
        Ok(row)
    }

    /// Disjoint union, join or cartesian product.
    ///
    /// Vertices of `self` come first; product vertex `(g, h)` has index
    /// `g * other.len() + h` and takes the color of `g`.
    pub fn combine(&self, other: &Self, mode: CombineMode) -> Result<Self> {
        match mode {
            CombineMode::DisjointUnion | CombineMode::Join => {
                let offset = self.n;
                let colors = self.colors.iter().chain(&other.colors).copied().collect();
                let mut g = Self::empty_colored(colors)?;
                for (u, v) in self.edges() {
                    g.add_edge(u, v);
                }
                for (u, v) in other.edges() {
                    g.add_edge(offset + u, offset + v);
                }
                if mode == CombineMode::Join {
                    for u in 0..self.n {
                        for v in 0..other.n {
                            g.add_edge(u, offset + v);
                        }
                    }
                }
                Ok(g)
            }
            CombineMode::CartesianProduct => {
                let m = other.n;
                let size = self.n * m;
                if size > MAX_VERTICES {
                    return Err(Error::Resource {
                        what: "vertex count",
                        size,
                        limit: MAX_VERTICES,
                    });
                }
                let colors = (0..size).map(|i| self.colors[i / m]).collect();
                let mut g = Self::empty_colored(colors)?;
                for a in 0..self.n {
                    for (b, c) in other.edges() {
                        g.add_edge(a * m + b, a * m + c);
                    }
                }
                for (a, c) in self.edges() {
                    for b in 0..m {
                        g.add_edge(a * m + b, c * m + b);
                    }
                }
                Ok(g)
            }
        }
    }

    /// The composition `G[K₂]`: every vertex becomes an adjacent pair, and
    /// pairs are completely joined exactly when the originals are adjacent.
    pub fn double(&self) -> Result<Self> {
        let colors = self.colors.iter().flat_map(|&c| [c, c]).collect();
        let mut g = Self::empty_colored(colors)?;
        for v in 0..self.n {
            g.add_edge(2 * v, 2 * v + 1);
        }
        for (u, v) in self.edges() {
            for a in 0..2 {
                for b in 0..2 {
                    g.add_edge(2 * u + a, 2 * v + b);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(
                labels
                    .iter()
                    .flat_map(|l| [format!("{l}/0"), format!("{l}/1")])
                    .collect(),
            );
        }
        Ok(g)
    }

    /// Quotient by "same closed neighbourhood". Returns the reduced graph and
    /// the class index of every vertex; classes are numbered by their
    /// smallest member.
    pub fn reduced(&self) -> Result<(Self, Vec<usize>)> {
        let mut class_of = vec![0; self.n];
        let mut reps: Vec<usize> = Vec::new();
        let mut seen: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for v in 0..self.n {
            let mut closed = self.row(v).to_vec();
            bits::set(&mut closed, v);
            let next = reps.len();
            let class = *seen.entry(closed).or_insert(next);
            if class == next {
                reps.push(v);
            } else if self.colors[reps[class]] != self.colors[v] {
                return Err(Error::Unsupported(format!(
                    "vertices {} and {v} share a closed neighbourhood but differ in color",
                    reps[class]
                )));
            }
            class_of[v] = class;
        }
        let mut g = self.induced_subgraph(&reps);
        g.name = self.name.clone();
        Ok((g, class_of))
    }

    /// Connected components of the graph or of one color class, sorted by
    /// smallest member.
    pub fn components(&self, restrict: Restrict) -> Vec<VertexSet> {
        let allowed = |v: usize| match restrict {
            Restrict::All => true,
            Restrict::ShortOnly => self.colors[v] == Color::Short,
            Restrict::LongOnly => self.colors[v] == Color::Long,
        };
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] || !allowed(start) {
                continue;
            }
            seen[start] = true;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] && allowed(w) {
                        seen[w] = true;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet::new(members));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(Restrict::All).len() <= 1
    }

    /// BFS distances between all pairs of vertices.
    pub fn distance_profile(&self) -> DistanceProfile {
        let n = self.n;
        let mut dist = vec![None; n * n];
        let mut connected = true;
        let mut diameter = 0;
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                let du = row[u].expect("queued vertices carry a distance");
                for w in Ones::new(&self.adj[u * self.words..(u + 1) * self.words]) {
                    if row[w].is_none() {
                        row[w] = Some(du + 1);
                        diameter = diameter.max(du + 1);
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            if reached < n {
                connected = false;
            }
        }
        DistanceProfile {
            n,
            dist,
            diameter: if connected {
                Diameter::Finite(diameter)
            } else {
                Diameter::Infinite
            },
            connected,
        }
    }

    /// Proper 2-coloring of the vertices if the graph is bipartite. The
    /// smallest vertex of every component gets `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u]?;
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        side.into_iter().collect()
    }
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}
