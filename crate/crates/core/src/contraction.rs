//! Clique partitions and contraction onto partition blocks.
//!
//! The contraction of a graph along a partition into monochromatic cliques
//! is a bichromatic multigraph: blocks `X` and `Y` are joined once when some
//! cross edge exists and twice ("strongly") when every vertex of `X` has a
//! neighbour in `Y` and every vertex of `Y` has a neighbour in `X`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color, VertexSet};

/// Partition of a graph's vertices into monochromatic cliques.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    host_len: usize,
    blocks: Vec<VertexSet>,
    block_color: Vec<Color>,
    block_of: Vec<usize>,
}

impl CliquePartition {
    /// Validates that `blocks` partition the vertices of `g` into
    /// monochromatic cliques.
    pub fn new(g: &BichromaticGraph, blocks: Vec<VertexSet>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; g.len()];
        let mut block_color = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            let first = block
                .first()
                .ok_or_else(|| Error::input(format!("block {b} is empty")))?;
            if first >= g.len() || block.iter().any(|v| v >= g.len()) {
                return Err(Error::input(format!("block {b} leaves the vertex range")));
            }
            let color = g.color(first);
            for v in block.iter() {
                if block_of[v] != usize::MAX {
                    return Err(Error::input(format!("vertex {v} lies in two blocks")));
                }
                block_of[v] = b;
                if g.color(v) != color {
                    return Err(Error::structure(
                        format!("block {b} is not monochromatic"),
                        block.members().to_vec(),
                    ));
                }
            }
            let m = block.members();
            for (i, &u) in m.iter().enumerate() {
                if m[i + 1..].iter().any(|&v| !g.adjacent(u, v)) {
                    return Err(Error::structure(
                        format!("block {b} is not a clique"),
                        m.to_vec(),
                    ));
                }
            }
            block_color.push(color);
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::input(format!("vertex {v} is in no block")));
        }
        Ok(CliquePartition {
            host_len: g.len(),
            blocks,
            block_color,
            block_of,
        })
    }

    /// The partition into singletons.
    pub fn singletons(g: &BichromaticGraph) -> Self {
        CliquePartition {
            host_len: g.len(),
            blocks: (0..g.len()).map(|v| VertexSet::new(vec![v])).collect(),
            block_color: g.colors().to_vec(),
            block_of: (0..g.len()).collect(),
        }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn block(&self, b: usize) -> &VertexSet {
        &self.blocks[b]
    }

    pub fn block_color(&self, b: usize) -> Color {
        self.block_color[b]
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn count_color(&self, c: Color) -> usize {
        self.block_color.iter().filter(|&&x| x == c).count()
    }
}

/// Bichromatic multigraph with edge multiplicities in `{1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    colors: Vec<Color>,
    edges: BTreeMap<(usize, usize), u8>,
    adj: Vec<Vec<(usize, u8)>>,
}

impl Multigraph {
    /// Builds a multigraph from `(u, v, multiplicity)` triples. Repeated
    /// pairs keep the larger multiplicity.
    pub fn new(
        colors: Vec<Color>,
        edges: impl IntoIterator<Item = (usize, usize, u8)>,
    ) -> Result<Self> {
        let n = colors.len();
        let mut map = BTreeMap::new();
        for (u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::input(format!("loop at block {u}")));
            }
            if !(1..=2).contains(&m) {
                return Err(Error::input(format!("multiplicity {m} on ({u}, {v})")));
            }
            let e = map.entry((u.min(v), u.max(v))).or_insert(m);
            *e = (*e).max(m);
        }
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &m) in &map {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Multigraph {
            colors,
            edges: map,
            adj,
        })
    }

    /// A simple graph with the listed edges marked strong.
    pub fn from_graph(g: &BichromaticGraph, strong: &BTreeSet<(usize, usize)>) -> Result<Self> {
        for &(u, v) in strong {
            if u >= g.len() || v >= g.len() || !g.adjacent(u, v) {
                return Err(Error::input(format!("strong pair ({u}, {v}) is not an edge")));
            }
        }
        let edges = g.edges().into_iter().map(|(u, v)| {
            let m = if strong.contains(&(u, v)) || strong.contains(&(v, u)) {
                2
            } else {
                1
            };
            (u, v, m)
        });
        Multigraph::new(g.colors().to_vec(), edges)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.edges
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(0)
    }

    /// Neighbours of `v` with multiplicities, ascending.
    pub fn neighbors(&self, v: usize) -> &[(usize, u8)] {
        &self.adj[v]
    }

    /// Degree counting strong edges twice.
    pub fn bivalency(&self, v: usize) -> usize {
        self.adj[v].iter().map(|&(_, m)| m as usize).sum()
    }

    /// Edges `(u, v, multiplicity)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn strong_edges(&self) -> BTreeSet<(usize, usize)> {
        self.edges()
            .filter(|&(_, _, m)| m == 2)
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    /// The simple graph obtained by forgetting multiplicities.
    pub fn underlying(&self) -> BichromaticGraph {
        let pairs: Vec<_> = self.edges().map(|(u, v, _)| (u, v)).collect();
        BichromaticGraph::new(self.len(), self.colors.clone(), &pairs)
            .expect("multigraph edges are valid")
    }

    /// No edge joins two blocks of the same color.
    pub fn is_color_bipartite(&self) -> bool {
        self.edges()
            .all(|(u, v, _)| self.colors[u] != self.colors[v])
    }

    pub fn with_colors(&self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.len() {
            return Err(Error::input("color list length differs from block count"));
        }
        Multigraph::new(colors, self.edges())
    }
}

/// A contraction: the partition blocks and the quotient multigraph on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedGraph {
    pub blocks: Vec<VertexSet>,
    pub quotient: Multigraph,
}

impl ContractedGraph {
    pub fn bivalency(&self, block: usize) -> usize {
        self.quotient.bivalency(block)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Contracts `g` along `partition`.
///
/// A block pair is strong when both blocks have at least two vertices and
/// every vertex of each block has a neighbour in the other.
pub fn contract(g: &BichromaticGraph, partition: &CliquePartition) -> Result<ContractedGraph> {
    if partition.host_len != g.len() {
        return Err(Error::input("partition belongs to a graph of another size"));
    }
    // Re-validate against this host: the partition may have been built for
    // a different graph on the same vertex count.
    let partition = CliquePartition::new(g, partition.blocks.clone())?;
    // touching[(A, B)] = number of vertices of A with a neighbour in B
    let mut touching: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for x in 0..g.len() {
        let a = partition.block_of(x);
        let mut hit: Vec<usize> = g
            .neighbors(x)
            .map(|w| partition.block_of(w))
            .filter(|&b| b != a)
            .collect();
        hit.sort_unstable();
        hit.dedup();
        for b in hit {
            *touching.entry((a, b)).or_insert(0) += 1;
        }
    }
    let edges: Vec<_> = touching
        .iter()
        .filter(|(&(a, b), _)| a < b)
        .map(|(&(a, b), &from_a)| {
            let from_b = touching[&(b, a)];
            let (size_a, size_b) = (partition.block(a).len(), partition.block(b).len());
            let strong = size_a > 1 && size_b > 1 && from_a == size_a && from_b == size_b;
            (a, b, if strong { 2 } else { 1 })
        })
        .collect();
    let quotient = Multigraph::new(partition.block_color.clone(), edges)?;
    Ok(ContractedGraph {
        blocks: partition.blocks,
        quotient,
    })
}
