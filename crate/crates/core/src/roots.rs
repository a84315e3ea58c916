//! Crystallographic root systems in integer coordinates and their Weyl
//! graphs (commuting graphs of the reflections).
//!
//! Coordinates follow the usual orthonormal models. F₄ and the E series are
//! scaled by 2 so every root has integer entries; E₇ and E₆ are cut out of
//! the even-coordinate E₈ as the roots orthogonal to fixed E₈ roots.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color, MAX_VERTICES};

pub type Root = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub fn from_char(c: char) -> Option<RootType> {
        Some(match c.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            'E' => RootType::E,
            'F' => RootType::F,
            'G' => RootType::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        }
    }

    /// Whether `(self, rank)` names an irreducible crystallographic type.
    pub fn is_legal_rank(self, rank: usize) -> bool {
        match self {
            RootType::A => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 4,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        }
    }

    /// Number of reflections (positive roots) of the type.
    pub fn reflection_count(self, n: usize) -> usize {
        match self {
            RootType::A => n * (n + 1) / 2,
            RootType::B | RootType::C => n * n,
            RootType::D => n * (n - 1),
            RootType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            RootType::F => 24,
            RootType::G => 6,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parses names such as `F4` or `b5`.
pub fn parse_type(s: &str) -> Result<(RootType, usize)> {
    let mut chars = s.chars();
    let label = chars
        .next()
        .and_then(RootType::from_char)
        .ok_or_else(|| Error::input(format!("unknown root system type in {s:?}")))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::input(format!("bad rank in {s:?}")))?;
    check_rank(label, rank)?;
    Ok((label, rank))
}

fn check_rank(label: RootType, rank: usize) -> Result<()> {
    if !label.is_legal_rank(rank) {
        return Err(Error::input(format!("illegal rank {rank} for type {label}")));
    }
    let count = label.reflection_count(rank);
    if count > MAX_VERTICES {
        return Err(Error::Resource {
            what: "reflection count",
            size: count,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    /// Lexicographically positive member of `{α, −α}`.
    pub root: Root,
    pub color: Color,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    label: RootType,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Root>,
    classes: Vec<Color>,
    frame: String,
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn is_positive(r: &[i64]) -> bool {
    r.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

fn unit(dim: usize, i: usize, scale: i64) -> Root {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn minus(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `±s·eᵢ ± s·eⱼ` for all `i < j`.
fn pair_roots(dim: usize, s: i64) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (a, b) in [(s, s), (s, -s), (-s, s), (-s, -s)] {
                let mut v = vec![0; dim];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    out
}

fn signed_units(dim: usize, s: i64) -> Vec<Root> {
    (0..dim).flat_map(|i| [unit(dim, i, s), unit(dim, i, -s)]).collect()
}

/// All `(±1, ..., ±1)`.
fn sign_vectors(dim: usize) -> impl Iterator<Item = Root> {
    (0u32..1 << dim).map(move |m| (0..dim).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect())
}

fn e8_roots() -> Vec<Root> {
    let mut roots = pair_roots(8, 2);
    roots.extend(sign_vectors(8).filter(|v| v.iter().filter(|&&x| x < 0).count() % 2 == 0));
    roots
}

impl RootSystem {
    pub fn new(label: RootType, rank: usize) -> Result<RootSystem> {
        check_rank(label, rank)?;
        let n = rank;
        let (ambient_dim, roots, frame) = match label {
            RootType::A => {
                let dim = n + 1;
                let mut roots = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            roots.push(minus(&unit(dim, i, 1), &unit(dim, j, 1)));
                        }
                    }
                }
                (dim, roots, format!("e_i - e_j in Z^{dim}"))
            }
            RootType::B => {
                let mut roots = signed_units(n, 1);
                roots.extend(pair_roots(n, 1));
                (n, roots, format!("±e_i, ±e_i±e_j in Z^{n}"))
            }
            RootType::C => {
                let mut roots = signed_units(n, 2);
                roots.extend(pair_roots(n, 1));
                (n, roots, format!("±2e_i, ±e_i±e_j in Z^{n}"))
            }
            RootType::D => (n, pair_roots(n, 1), format!("±e_i±e_j in Z^{n}")),
            RootType::E => {
                let ones = vec![1i64; 8];
                let beta: Root = vec![0, 0, 0, 0, 0, 0, -2, -2];
                let all = e8_roots();
                let (roots, frame) = match n {
                    8 => (all, "E8 doubled even frame in Z^8".to_string()),
                    7 => (
                        all.into_iter().filter(|r| dot(r, &ones) == 0).collect(),
                        "E8 doubled even frame, orthogonal to (1,1,1,1,1,1,1,1)".to_string(),
                    ),
                    _ => (
                        all.into_iter()
                            .filter(|r| dot(r, &ones) == 0 && dot(r, &beta) == 0)
                            .collect(),
                        "E8 doubled even frame, orthogonal to (1,1,1,1,1,1,1,1) and (0,0,0,0,0,0,-2,-2)"
                            .to_string(),
                    ),
                };
                (8, roots, frame)
            }
            RootType::F => {
                let mut roots = signed_units(4, 2);
                roots.extend(pair_roots(4, 2));
                roots.extend(sign_vectors(4));
                (4, roots, "doubled frame in Z^4".to_string())
            }
            RootType::G => {
                let mut roots = Vec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            roots.push(minus(&unit(3, i, 1), &unit(3, j, 1)));
                        }
                    }
                    let long = minus(&unit(3, i, 3), &[1, 1, 1]);
                    roots.push(long.iter().map(|x| -x).collect());
                    roots.push(long);
                }
                (3, roots, "sum-zero plane in Z^3".to_string())
            }
        };
        let mut roots = roots;
        roots.sort();
        let norms: Vec<i64> = roots.iter().map(|r| dot(r, r)).collect();
        let min = norms.iter().copied().min().unwrap_or(0);
        let max = norms.iter().copied().max().unwrap_or(0);
        let classes = norms
            .iter()
            .map(|&q| if q < max && q == min { Color::Short } else { Color::Long })
            .collect();
        Ok(RootSystem {
            label,
            rank,
            ambient_dim,
            roots,
            classes,
            frame,
        })
    }

    pub fn label(&self) -> RootType {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All roots, sorted lexicographically.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn length_class(&self, i: usize) -> Color {
        self.classes[i]
    }

    /// Description of the coordinate model.
    pub fn frame(&self) -> &str {
        &self.frame
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    /// One reflection per `±` pair, in lexicographic order of the positive
    /// representative.
    pub fn reflections(&self) -> Vec<Reflection> {
        self.roots
            .iter()
            .zip(&self.classes)
            .filter(|(r, _)| is_positive(r))
            .map(|(r, &color)| Reflection {
                root: r.clone(),
                color,
            })
            .collect()
    }

    /// Image of `v` under the reflection in `alpha`.
    pub fn reflect(alpha: &[i64], v: &[i64]) -> Root {
        let k = 2 * dot(alpha, v) / dot(alpha, alpha);
        v.iter().zip(alpha).map(|(x, a)| x - k * a).collect()
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.roots.binary_search_by(|x| x.as_slice().cmp(r)).ok()
    }
}

pub fn root_system(label: RootType, rank: usize) -> Result<RootSystem> {
    RootSystem::new(label, rank)
}

fn coordinates(r: &[i64]) -> String {
    let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Reflections adjacent when their roots are orthogonal.
pub fn weyl_graph(phi: &RootSystem) -> Result<BichromaticGraph> {
    let refl = phi.reflections();
    let colors = refl.iter().map(|r| r.color).collect();
    let g = BichromaticGraph::from_fn(colors, |u, v| dot(&refl[u].root, &refl[v].root) == 0)?;
    let labels = refl.iter().map(|r| coordinates(&r.root)).collect();
    Ok(g.with_labels(labels)?.with_name(format!("W({})", phi.name())))
}

/// `(α·α)·s_α = (α·α) I − 2 α αᵀ`, row-major.
pub fn scaled_reflection_matrix(alpha: &[i64]) -> Vec<i64> {
    let d = alpha.len();
    let q = dot(alpha, alpha);
    let mut m = vec![0; d * d];
    for i in 0..d {
        for j in 0..d {
            m[i * d + j] = if i == j { q } else { 0 } - 2 * alpha[i] * alpha[j];
        }
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], d: usize) -> Vec<i64> {
    let mut c = vec![0; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x != 0 {
                for j in 0..d {
                    c[i * d + j] += x * b[k * d + j];
                }
            }
        }
    }
    c
}

/// Whether the reflection matrices of `alpha` and `beta` commute.
pub fn reflections_commute(alpha: &[i64], beta: &[i64]) -> bool {
    let d = alpha.len();
    let a = scaled_reflection_matrix(alpha);
    let b = scaled_reflection_matrix(beta);
    mat_mul(&a, &b, d) == mat_mul(&b, &a, d)
}

/// Index-pair models of the classical Weyl graphs.
///
/// `A`: pairs `{i, j}` of `{1..n+1}`, adjacent iff disjoint. `B`: vertices
/// `y_{i,j}` for `1 ≤ i, j ≤ n`, short iff `i = j`, with `y_{i,j} ⊥ y_{k,l}`
/// iff `{i,j} ∩ {k,l} = ∅` or `(k,l) = (j,i)`. `C`: `B` with colors
/// exchanged. `D`: the long part of `B`.
pub fn combinatorial_weyl(label: RootType, n: usize) -> Result<BichromaticGraph> {
    if !matches!(label, RootType::A | RootType::B | RootType::C | RootType::D) {
        return Err(Error::input(format!("no index-pair model for type {label}")));
    }
    check_rank(label, n)?;
    let model_name = format!("model({label}{n})");
    if label == RootType::A {
        let pairs: Vec<(usize, usize)> = (1..=n + 1)
            .flat_map(|i| (i + 1..=n + 1).map(move |j| (i, j)))
            .collect();
        let g = BichromaticGraph::from_fn(vec![Color::Long; pairs.len()], |u, v| {
            let (a, b) = pairs[u];
            let (c, d) = pairs[v];
            a != c && a != d && b != c && b != d
        })?;
        let labels = pairs.iter().map(|(i, j)| format!("y_{{{i},{j}}}")).collect();
        return Ok(g.with_labels(labels)?.with_name(model_name));
    }
    let keep_diagonal = label != RootType::D;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| keep_diagonal || i != j)
        .collect();
    let colors = pairs
        .iter()
        .map(|&(i, j)| {
            let short = i == j;
            match (label, short) {
                (RootType::C, true) | (RootType::B, false) | (RootType::D, _) => Color::Long,
                _ => Color::Short,
            }
        })
        .collect();
    let g = BichromaticGraph::from_fn(colors, |u, v| {
        let (i, j) = pairs[u];
        let (k, l) = pairs[v];
        let disjoint = i != k && i != l && j != k && j != l;
        disjoint || (k, l) == (j, i)
    })?;
    let labels = pairs.iter().map(|(i, j)| format!("y_{{{i},{j}}}")).collect();
    Ok(g.with_labels(labels)?.with_name(model_name))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types(max_classical: usize) -> Vec<(RootType, usize)> {
        let mut out = Vec::new();
        for n in 1..=max_classical {
            for t in [RootType::A, RootType::B, RootType::C, RootType::D] {
                if t.is_legal_rank(n) {
                    out.push((t, n));
                }
            }
        }
        out.extend([(RootType::E, 6), (RootType::E, 7), (RootType::E, 8), (RootType::F, 4), (RootType::G, 2)]);
        out
    }

    #[test]
    fn root_censuses() {
        for (t, n) in all_types(7) {
            let phi = root_system(t, n).unwrap();
            let expected = match t {
                RootType::A => n * (n + 1),
                RootType::B | RootType::C => 2 * n * n,
                RootType::D => 2 * n * (n - 1),
                RootType::E => [72, 126, 240][n - 6],
                RootType::F => 48,
                RootType::G => 12,
            };
            assert_eq!(phi.roots().len(), expected, "{t}{n}");
            assert_eq!(phi.reflections().len(), t.reflection_count(n));
        }
    }

    #[test]
    fn closed_under_negation_and_crystallographic() {
        for (t, n) in all_types(5) {
            let phi = root_system(t, n).unwrap();
            for a in phi.roots() {
                let neg: Root = a.iter().map(|x| -x).collect();
                assert!(phi.index_of(&neg).is_some());
                for b in phi.roots() {
                    assert_eq!(2 * dot(a, b) % dot(b, b), 0, "{t}{n}: {a:?} {b:?}");
                    assert!(phi.index_of(&RootSystem::reflect(a, b)).is_some());
                }
            }
        }
    }

    #[test]
    fn length_classes() {
        let two_lengths = |t: RootType, n| {
            let phi = root_system(t, n).unwrap();
            let shorts = (0..phi.roots().len()).filter(|&i| phi.length_class(i) == Color::Short).count();
            (shorts, phi.roots().len() - shorts)
        };
        assert_eq!(two_lengths(RootType::F, 4), (24, 24));
        assert_eq!(two_lengths(RootType::G, 2), (6, 6));
        assert_eq!(two_lengths(RootType::A, 1), (0, 2));
        assert_eq!(two_lengths(RootType::B, 3), (6, 12));
        assert_eq!(two_lengths(RootType::C, 3), (12, 6));
        assert_eq!(two_lengths(RootType::E, 6), (0, 72));
    }

    #[test]
    fn illegal_ranks() {
        assert!(matches!(root_system(RootType::D, 3), Err(Error::Input(_))));
        assert!(matches!(root_system(RootType::E, 9), Err(Error::Input(_))));
        assert!(matches!(parse_type("B1"), Err(Error::Input(_))));
        assert!(matches!(parse_type("X4"), Err(Error::Input(_))));
        assert_eq!(parse_type("f4").unwrap(), (RootType::F, 4));
    }

    #[test]
    fn g2_is_three_mixed_edges() {
        let g = weyl_graph(&root_system(RootType::G, 2).unwrap()).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.edge_count(), 3);
        for (u, v) in g.edges() {
            assert_ne!(g.color(u), g.color(v));
        }
    }

    #[test]
    fn commutation_is_orthogonality_in_small_ranks() {
        for (t, n) in all_types(4).into_iter().filter(|&(t, _)| t != RootType::E) {
            let phi = root_system(t, n).unwrap();
            let refl = phi.reflections();
            for a in &refl {
                for b in &refl {
                    if a != b {
                        assert_eq!(reflections_commute(&a.root, &b.root), dot(&a.root, &b.root) == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn models_have_expected_sizes() {
        assert_eq!(combinatorial_weyl(RootType::B, 4).unwrap().count_color(Color::Short), 4);
        assert_eq!(combinatorial_weyl(RootType::C, 4).unwrap().count_color(Color::Short), 12);
        assert_eq!(combinatorial_weyl(RootType::D, 5).unwrap().len(), 20);
        assert_eq!(combinatorial_weyl(RootType::A, 3).unwrap().len(), 6);
        assert!(combinatorial_weyl(RootType::F, 4).is_err());
        assert!(combinatorial_weyl(RootType::D, 3).is_err());
    }
}
