//! Color-respecting canonical forms, isomorphism tests and automorphism
//! groups.
//!
//! The engine is an individualization-refinement search: equitable
//! refinement of an ordered partition (initially short vertices, then long
//! vertices), branching on the first non-singleton cell in ascending vertex
//! order, with pruning by node invariants and by automorphisms discovered
//! along the way. Every permutation handed back to callers is re-checked
//! edge by edge first.

mod partition;
mod search;

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, VertexSet};
use crate::perm::{Permutation, StabilizerChain};

/// Largest graph accepted by [`canonical_form`] and [`are_isomorphic`].
pub const MAX_CANONICAL_VERTICES: usize = 512;
/// Largest graph accepted by [`automorphism_group`].
pub const MAX_AUTOMORPHISM_VERTICES: usize = 256;

/// Canonical encoding of a bichromatic graph.
///
/// Two certificates compare equal exactly when their graphs are isomorphic
/// by a color-preserving map. The encoding is the color string in canonical
/// order followed by the canonically relabeled adjacency rows, each row
/// packed little-endian into `ceil(n / 8)` bytes.
#[derive(Clone)]
pub struct Certificate {
    encoding: Vec<u8>,
    order: Vec<usize>,
}

impl Certificate {
    pub fn encoding(&self) -> &[u8] {
        &self.encoding
    }

    /// `order()[i]` is the vertex placed at canonical position `i`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.encoding)
    }

    pub fn from_hex(s: &str) -> Result<Vec<u8>> {
        hex::decode(s).map_err(|e| Error::input(format!("bad certificate hex: {e}")))
    }
}

impl PartialEq for Certificate {
    fn eq(&self, other: &Self) -> bool {
        self.encoding == other.encoding
    }
}

impl Eq for Certificate {}

impl Hash for Certificate {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.encoding.hash(state);
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hex = self.to_hex();
        let shown = &hex[..hex.len().min(32)];
        write!(f, "Certificate({} vertices, {shown}..)", self.order.len())
    }
}

/// Automorphism group of a graph.
#[derive(Debug, Clone)]
pub struct AutSummary {
    pub order: BigUint,
    /// Vertex orbits, sorted by smallest member.
    pub orbits: Vec<VertexSet>,
    pub generators: Vec<Permutation>,
}

impl AutSummary {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(VertexSet::len).collect()
    }
}

fn check_size(g: &BichromaticGraph, limit: usize) -> Result<()> {
    if g.len() > limit {
        return Err(Error::Resource {
            what: "vertex count",
            size: g.len(),
            limit,
        });
    }
    Ok(())
}

pub fn canonical_form(g: &BichromaticGraph) -> Result<Certificate> {
    check_size(g, MAX_CANONICAL_VERTICES)?;
    let outcome = search::run(g);
    Ok(certificate(g, outcome.labeling))
}

fn certificate(g: &BichromaticGraph, order: Vec<usize>) -> Certificate {
    let n = g.len();
    let row_bytes = n.div_ceil(8);
    let mut encoding = Vec::with_capacity(n + n * row_bytes);
    encoding.extend(order.iter().map(|&v| g.color(v).as_char() as u8));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for &v in &order {
        let mut row = vec![0u8; row_bytes];
        for w in g.neighbors(v) {
            let j = position[w];
            row[j / 8] |= 1 << (j % 8);
        }
        encoding.extend_from_slice(&row);
    }
    Certificate { encoding, order }
}

/// A color- and adjacency-preserving bijection `g -> h` (as `map[v]` for
/// each vertex `v` of `g`), or `None` when the graphs are not isomorphic.
pub fn are_isomorphic(g: &BichromaticGraph, h: &BichromaticGraph) -> Result<Option<Vec<usize>>> {
    check_size(g, MAX_CANONICAL_VERTICES)?;
    check_size(h, MAX_CANONICAL_VERTICES)?;
    if g.len() != h.len()
        || g.edge_count() != h.edge_count()
        || g.count_color(crate::Color::Short) != h.count_color(crate::Color::Short)
    {
        return Ok(None);
    }
    let cg = canonical_form(g)?;
    let ch = canonical_form(h)?;
    if cg != ch {
        return Ok(None);
    }
    let mut map = vec![0; g.len()];
    for (&a, &b) in cg.order.iter().zip(&ch.order) {
        map[a] = b;
    }
    if !is_isomorphism(g, h, &map) {
        return Err(Error::structure(
            "internal error: certificate match without a valid bijection",
            map,
        ));
    }
    Ok(Some(map))
}

/// Checks that `map` is a color- and adjacency-preserving bijection.
pub fn is_isomorphism(g: &BichromaticGraph, h: &BichromaticGraph, map: &[usize]) -> bool {
    if g.len() != h.len() || map.len() != g.len() {
        return false;
    }
    if Permutation::from_images(map.to_vec()).is_none() {
        return false;
    }
    if (0..g.len()).any(|v| g.color(v) != h.color(map[v])) {
        return false;
    }
    g.edge_count() == h.edge_count() && g.edges().iter().all(|&(u, v)| h.adjacent(map[u], map[v]))
}

pub fn automorphism_group(g: &BichromaticGraph) -> Result<AutSummary> {
    check_size(g, MAX_AUTOMORPHISM_VERTICES)?;
    let outcome = search::run(g);
    for p in &outcome.generators {
        if !is_isomorphism(g, g, p.images()) {
            return Err(Error::structure(
                "internal error: search produced a non-automorphism",
                p.images().to_vec(),
            ));
        }
    }
    let chain = StabilizerChain::new(g.len(), &outcome.generators);
    let order = chain.order();
    debug_assert_eq!(order, outcome.order, "stabilizer chain disagrees with search");

    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (v, &root) in outcome.orbits.iter().enumerate() {
        groups.entry(root).or_default().push(v);
    }
    let mut orbits: Vec<VertexSet> = groups.into_values().map(VertexSet::new).collect();
    orbits.sort();
    Ok(AutSummary {
        order,
        orbits,
        generators: outcome.generators,
    })
}
