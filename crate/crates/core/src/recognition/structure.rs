//! Structure of graphs locally like W(F₄): the 4-clique partition, the
//! long neighbours of a short clique, μ-parameters, tight connectivity and
//! the twist at a strongly connected block pair.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::contraction::{contract, CliquePartition};
use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color, Restrict, VertexSet};
use crate::roots::{root_system, weyl_graph, RootType};

use super::local::LocalTarget;

/// The monochromatic components of `g`, each required to be a `k`-clique.
pub fn clique_partition(g: &BichromaticGraph, k: usize) -> Result<CliquePartition> {
    let mut blocks = g.components(Restrict::ShortOnly);
    blocks.extend(g.components(Restrict::LongOnly));
    blocks.sort();
    for b in &blocks {
        let is_clique = b
            .iter()
            .all(|u| b.iter().all(|v| u == v || g.adjacent(u, v)));
        if b.len() != k || !is_clique {
            return Err(Error::structure(
                format!("monochromatic component of size {} is not a {k}-clique", b.len()),
                b.members().to_vec(),
            ));
        }
    }
    CliquePartition::new(g, blocks)
}

pub(crate) fn wf4() -> &'static BichromaticGraph {
    static G: OnceLock<BichromaticGraph> = OnceLock::new();
    G.get_or_init(|| {
        weyl_graph(&root_system(RootType::F, 4).expect("F4 is legal")).expect("24 vertices")
    })
}

pub(crate) fn wf4_target() -> &'static LocalTarget {
    static T: OnceLock<LocalTarget> = OnceLock::new();
    T.get_or_init(|| LocalTarget::of(wf4()).expect("W(F4) is locally homogeneous"))
}

/// Errors unless `g` is locally like W(F₄).
pub fn require_locally_f4(g: &BichromaticGraph) -> Result<()> {
    let check = wf4_target().check(g)?;
    match check.witness {
        None => Ok(()),
        Some(v) => Err(Error::structure(
            format!("local graph at vertex {v} differs from W(F4)"),
            vec![v],
        )),
    }
}

/// Opposite-colored neighbours of a 4-clique `x_1 < … < x_4`, named
/// `y_{i,j}` / `y_{j,i}` after the pair `{x_i, x_j}` they are adjacent to.
#[derive(Debug, Clone)]
pub struct CliqueAnalysis {
    pub clique: VertexSet,
    /// Opposite-colored vertices with a neighbour in the clique.
    pub neighbor_count: usize,
    /// `(i, j)` with `1 ≤ i, j ≤ 4` → vertex.
    pub names: BTreeMap<(usize, usize), usize>,
    /// Human-readable descriptions of every failed expectation.
    pub violations: Vec<String>,
}

impl CliqueAnalysis {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the clique has exactly 12 opposite-colored neighbours, two
/// for each pair `{x_i, x_j}` and none adjacent to three clique vertices, and
/// that `y_{i,j} ⊥ y_{k,l}` forces `{k,l} = {i,j}` or `{k,l} ∩ {i,j} = ∅`.
///
/// Of the two vertices attached to `{x_i, x_j}`, `i < j`, the one with the
/// smaller index is called `y_{i,j}`; `reverse_naming` exchanges the names.
pub fn analyse_clique(g: &BichromaticGraph, clique: &VertexSet, reverse_naming: bool) -> CliqueAnalysis {
    let mut violations = Vec::new();
    let members = clique.members();
    let color = members.first().map(|&v| g.color(v)).unwrap_or(Color::Short);
    let mut attached: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut neighbor_count = 0;
    for w in 0..g.len() {
        if g.color(w) == color {
            continue;
        }
        let hits: Vec<usize> = (0..members.len())
            .filter(|&i| g.adjacent(w, members[i]))
            .map(|i| i + 1)
            .collect();
        if hits.is_empty() {
            continue;
        }
        neighbor_count += 1;
        if hits.len() == 2 {
            attached.entry((hits[0], hits[1])).or_default().push(w);
        } else {
            violations.push(format!("vertex {w} is adjacent to {} clique vertices", hits.len()));
        }
    }
    if neighbor_count != 12 {
        violations.push(format!("{neighbor_count} opposite-colored neighbours instead of 12"));
    }
    let mut names = BTreeMap::new();
    for i in 1..=members.len() {
        for j in i + 1..=members.len() {
            let ys = attached.get(&(i, j)).cloned().unwrap_or_default();
            if ys.len() != 2 {
                violations.push(format!("pair ({i}, {j}) has {} common neighbours", ys.len()));
                continue;
            }
            let (a, b) = if reverse_naming { (ys[1], ys[0]) } else { (ys[0], ys[1]) };
            names.insert((i, j), a);
            names.insert((j, i), b);
        }
    }
    for (&(i, j), &u) in &names {
        for (&(k, l), &v) in &names {
            if u < v && g.adjacent(u, v) {
                let same = (k == i && l == j) || (k == j && l == i);
                let disjoint = k != i && k != j && l != i && l != j;
                if !same && !disjoint {
                    violations.push(format!("y_{{{i},{j}}} ⊥ y_{{{k},{l}}}"));
                }
            }
        }
    }
    CliqueAnalysis {
        clique: clique.clone(),
        neighbor_count,
        names,
        violations,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub min: usize,
    pub max: usize,
}

fn widen(r: &mut Option<Range>, x: usize) {
    *r = Some(match *r {
        None => Range { min: x, max: x },
        Some(Range { min, max }) => Range {
            min: min.min(x),
            max: max.max(x),
        },
    });
}

/// μ-parameters of the distance-2 pairs.
#[derive(Debug, Clone, Default)]
pub struct MuReport {
    /// `(x, y, μ)` for same-colored pairs.
    pub same: Vec<(usize, usize, usize)>,
    /// `(x, y, μ_s, μ_l)` for mixed pairs.
    pub mixed: Vec<(usize, usize, usize, usize)>,
    pub mu: Option<Range>,
    pub mu_short: Option<Range>,
    pub mu_long: Option<Range>,
}

impl MuReport {
    /// Every same-colored distance-2 pair has `μ = 3`.
    pub fn mu_is_three(&self) -> bool {
        self.same.iter().all(|&(_, _, m)| m == 3)
    }
}

/// Computes μ for every distance-2 pair of a graph locally like W(F₄) and
/// checks the shape of each common neighbourhood: `μ` pairwise non-adjacent
/// vertices of the other color for same-colored pairs, and a disjoint union
/// of `μ_s` short and `μ_l` long edges, `μ_s + μ_l ∈ {1, 2}`, for mixed pairs.
pub fn mu_report(g: &BichromaticGraph) -> Result<MuReport> {
    require_locally_f4(g)?;
    let mut report = MuReport::default();
    for x in 0..g.len() {
        for y in x + 1..g.len() {
            if g.adjacent(x, y) {
                continue;
            }
            let common = g.common_neighbors(&[x, y])?;
            if common.is_empty() {
                continue;
            }
            let fail = |what: &str| {
                let mut witness = vec![x, y];
                witness.extend(common.iter());
                Err(Error::structure(format!("{{{x}, {y}}}^⊥ {what}"), witness))
            };
            if g.color(x) == g.color(y) {
                let opposite = g.color(x).swapped();
                let independent = common
                    .iter()
                    .all(|u| g.color(u) == opposite && common.iter().all(|v| !g.adjacent(u, v)));
                if !independent || common.len() > 3 {
                    return fail("is not a coclique of at most 3 opposite-colored vertices");
                }
                widen(&mut report.mu, common.len());
                report.same.push((x, y, common.len()));
            } else {
                let mut counts = [0usize; 2];
                for u in common.iter() {
                    let inside: Vec<usize> = common.iter().filter(|&v| g.adjacent(u, v)).collect();
                    if inside.len() != 1 || g.color(inside[0]) != g.color(u) {
                        return fail("is not a union of monochromatic edges");
                    }
                    counts[(g.color(u) == Color::Long) as usize] += 1;
                }
                let (s, l) = (counts[0] / 2, counts[1] / 2);
                if !(1..=2).contains(&(s + l)) {
                    return fail("has more than two edges");
                }
                widen(&mut report.mu_short, s);
                widen(&mut report.mu_long, l);
                report.mixed.push((x, y, s, l));
            }
        }
    }
    Ok(report)
}

/// Every long vertex has a neighbour in every short component, and every
/// short vertex in every long component.
pub fn is_tightly_connected(g: &BichromaticGraph) -> bool {
    let short = g.components(Restrict::ShortOnly);
    let long = g.components(Restrict::LongOnly);
    let reaches = |v: usize, comps: &[VertexSet]| {
        comps.iter().all(|c| c.iter().any(|w| g.adjacent(v, w)))
    };
    (0..g.len()).all(|v| match g.color(v) {
        Color::Long => reaches(v, &short),
        Color::Short => reaches(v, &long),
    })
}

/// Strongly connected block pairs `(X, Y)` of the 4-clique partition, with
/// `X` short, in order of block index.
pub fn strong_pairs(g: &BichromaticGraph) -> Result<Vec<(VertexSet, VertexSet)>> {
    let partition = clique_partition(g, 4)?;
    let c = contract(g, &partition)?;
    Ok(c.quotient
        .strong_edges()
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = if partition.block_color(a) == Color::Short { (a, b) } else { (b, a) };
            (partition.block(a).clone(), partition.block(b).clone())
        })
        .collect())
}

/// Replaces the pairing `x₁,x₂ ⊥ y₁,y₂`, `x₃,x₄ ⊥ y₃,y₄` between the
/// 4-cliques `x` and `y` by `x₁,x₂ ⊥ y₃,y₄`, `x₃,x₄ ⊥ y₁,y₂`.
pub fn twist(g: &BichromaticGraph, x: &VertexSet, y: &VertexSet) -> Result<BichromaticGraph> {
    let partition = clique_partition(g, 4)?;
    let ok_block = |b: &VertexSet| partition.blocks().contains(b);
    if !ok_block(x) || !ok_block(y) {
        return Err(Error::structure("twist needs two blocks of the 4-clique partition", {
            let mut w = x.members().to_vec();
            w.extend(y.iter());
            w
        }));
    }
    let witness = || {
        let mut w = x.members().to_vec();
        w.extend(y.iter());
        w
    };
    if g.color(x.members()[0]) == g.color(y.members()[0]) {
        return Err(Error::structure("twist needs blocks of opposite colors", witness()));
    }
    let side = |v: usize, other: &VertexSet| -> VertexSet {
        other.iter().filter(|&w| g.adjacent(v, w)).collect()
    };
    let nx: Vec<VertexSet> = x.iter().map(|v| side(v, y)).collect();
    let ny: Vec<VertexSet> = y.iter().map(|v| side(v, x)).collect();
    if nx.iter().chain(&ny).any(|s| s.is_empty()) {
        return Err(Error::structure("blocks are not strongly connected", witness()));
    }
    // x must split into two pairs with complementary 2-subsets of y
    let p = &nx[0];
    let complement: VertexSet = y.iter().filter(|&w| !p.contains(w)).collect();
    let pairing = p.len() == 2
        && nx.iter().filter(|s| *s == p).count() == 2
        && nx.iter().filter(|s| **s == complement).count() == 2;
    if !pairing {
        return Err(Error::structure(
            "the two blocks are not joined by a complementary pairing",
            witness(),
        ));
    }
    let mut h = g.clone();
    for (i, v) in x.iter().enumerate() {
        for w in y.iter() {
            if nx[i].contains(w) {
                h.remove_edge(v, w);
            } else {
                h.add_edge(v, w);
            }
        }
    }
    let name = g.name().map(|s| format!("twist({s})"));
    Ok(match name {
        Some(n) => h.with_name(n),
        None => h,
    })
}

/// [`twist`] at the first strongly connected pair.
pub fn twist_first(g: &BichromaticGraph) -> Result<BichromaticGraph> {
    let pairs = strong_pairs(g)?;
    let (x, y) = pairs
        .first()
        .ok_or_else(|| Error::structure("no strongly connected block pair", vec![]))?;
    twist(g, x, y)
}
