//! Kneser graphs, the symplectic graphs `Sp₂ₙ(2)`, the quadric graphs
//! `N^ε₂ₙ(2)`, and a few elementary graphs.
//!
//! Vectors of `F₂^{2n}` are stored as integers: coordinate `x_m` is bit
//! `m - 1`, so the hyperbolic pairs are the bit pairs `(2i, 2i + 1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color, MAX_VERTICES};

/// Largest half-dimension accepted by [`symplectic_graph`] and
/// [`quadric_graph`].
pub const MAX_HALF_DIMENSION: usize = 5;

/// Type of a quadratic form on `F₂^{2n}`: maximal (`Plus`) or minimal
/// (`Minus`) Witt index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A vector of `F₂^{2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Vector {
    bits: u32,
    half_dim: usize,
}

const PAIR_LOW: u32 = 0x5555_5555;

impl F2Vector {
    pub fn new(bits: u32, half_dim: usize) -> Self {
        debug_assert!(half_dim <= 16);
        F2Vector {
            bits: bits & mask(half_dim),
            half_dim,
        }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn add(self, other: F2Vector) -> F2Vector {
        F2Vector::new(self.bits ^ other.bits, self.half_dim)
    }

    /// `B(x, y) = Σᵢ x_{2i−1} y_{2i} + x_{2i} y_{2i−1}`.
    pub fn symplectic(self, other: F2Vector) -> bool {
        let y = other.bits;
        let swapped = ((y & PAIR_LOW) << 1) | ((y >> 1) & PAIR_LOW);
        (self.bits & swapped).count_ones() % 2 == 1
    }

    /// `Q⁺(x) = Σᵢ x_{2i−1} x_{2i}`; `Q⁻` adds `x_{2n−1} + x_{2n}`, making the
    /// last hyperbolic pair anisotropic (`a² + ab + b²`).
    pub fn quadratic(self, sign: Sign) -> bool {
        let x = self.bits;
        let mut q = (x & (x >> 1) & PAIR_LOW).count_ones() % 2;
        if sign == Sign::Minus && self.half_dim > 0 {
            let last = 2 * (self.half_dim - 1);
            q ^= (x >> last) & 1;
            q ^= (x >> (last + 1)) & 1;
        }
        q == 1
    }

    fn label(self) -> String {
        (0..2 * self.half_dim)
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

fn mask(half_dim: usize) -> u32 {
    if half_dim >= 16 {
        u32::MAX
    } else {
        (1u32 << (2 * half_dim)) - 1
    }
}

/// All vectors of `F₂^{2n}` in ascending integer order.
pub fn f2_vectors(half_dim: usize) -> impl Iterator<Item = F2Vector> {
    (0..=mask(half_dim)).map(move |b| F2Vector::new(b, half_dim))
}

fn check_half_dim(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::input(format!("half-dimension must be at least {min}, got {n}")));
    }
    if n > MAX_HALF_DIMENSION {
        return Err(Error::Resource {
            what: "half-dimension",
            size: n,
            limit: MAX_HALF_DIMENSION,
        });
    }
    Ok(())
}

fn perpendicularity_graph(vertices: Vec<F2Vector>, name: String) -> Result<BichromaticGraph> {
    let g = BichromaticGraph::from_fn(vec![Color::Long; vertices.len()], |u, v| {
        !vertices[u].symplectic(vertices[v])
    })?;
    let labels = vertices.iter().map(|x| x.label()).collect();
    Ok(g.with_labels(labels)?.with_name(name))
}

/// `Sp₂ₙ(2)`: the non-zero vectors of `F₂^{2n}`, adjacent when distinct and
/// perpendicular under the symplectic form.
pub fn symplectic_graph(n: usize) -> Result<BichromaticGraph> {
    check_half_dim(n, 1)?;
    let vertices = f2_vectors(n).filter(|x| !x.is_zero()).collect();
    perpendicularity_graph(vertices, format!("Sp{}(2)", 2 * n))
}

/// `N^ε₂ₙ(2)`: the induced subgraph of `Sp₂ₙ(2)` on the vectors that are
/// non-singular under `Q^ε`.
pub fn quadric_graph(n: usize, sign: Sign) -> Result<BichromaticGraph> {
    check_half_dim(n, 2)?;
    let vertices = f2_vectors(n).filter(|x| x.quadratic(sign)).collect();
    perpendicularity_graph(vertices, format!("N{sign}{}(2)", 2 * n))
}

/// Binomial coefficient, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// The `k`-subsets of `{1, ..., n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // advance the rightmost element that still has room
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - (k - 1 - i)) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Kneser graph `K(n, k)`: `k`-subsets of `{1..n}`, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<BichromaticGraph> {
    if k == 0 || k > n {
        return Err(Error::input(format!("K({n}, {k}) needs n >= k >= 1")));
    }
    let size = binomial(n, k);
    if size > MAX_VERTICES {
        return Err(Error::Resource {
            what: "vertex count",
            size,
            limit: MAX_VERTICES,
        });
    }
    let sets = subsets(n, k);
    let g = BichromaticGraph::from_fn(vec![Color::Long; sets.len()], |u, v| {
        sets[u].iter().all(|x| !sets[v].contains(x))
    })?;
    let labels = sets
        .iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    Ok(g.with_labels(labels)?.with_name(format!("K({n},{k})")))
}

pub fn cycle(n: usize) -> Result<BichromaticGraph> {
    if n < 3 {
        return Err(Error::input(format!("cycles need at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(BichromaticGraph::monochromatic(n, Color::Long, &edges)?.with_name(format!("C{n}")))
}

pub fn path(n: usize) -> Result<BichromaticGraph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(BichromaticGraph::monochromatic(n, Color::Long, &edges)?.with_name(format!("P{n}")))
}

pub fn complete(n: usize) -> Result<BichromaticGraph> {
    Ok(BichromaticGraph::from_fn(vec![Color::Long; n], |_, _| true)?.with_name(format!("K{n}")))
}

pub fn edgeless(n: usize) -> Result<BichromaticGraph> {
    Ok(BichromaticGraph::monochromatic(n, Color::Long, &[])?.with_name(format!("co-K{n}")))
}

/// Subdivision: every edge `uv` replaced by a path `u - e - v`. New
/// vertices follow the originals, in edge order.
pub fn subdivision(g: &BichromaticGraph) -> Result<BichromaticGraph> {
    let edges = g.edges();
    let n = g.len();
    let colors = g
        .colors()
        .iter()
        .copied()
        .chain(std::iter::repeat_n(Color::Long, edges.len()))
        .collect();
    let new_edges: Vec<_> = edges
        .iter()
        .enumerate()
        .flat_map(|(i, &(u, v))| [(u, n + i), (v, n + i)])
        .collect();
    BichromaticGraph::new(n + edges.len(), colors, &new_edges)
}
