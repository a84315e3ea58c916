//! Graphs locally like W(F₄) or W(B₄) built from a bipartite multigraph Λ
//! by blowing every vertex up into a 4-clique.
//!
//! Vertex `x` of Λ becomes `4x + i - 1` for `i = 1..4`. Along an edge `xy`
//! labelled by 2-subsets `a(x,y)`, `a(y,x)` of `{1,2,3,4}`, `x_i ⊥ y_j` iff
//! `i ∈ a(x,y)` and `j ∈ a(y,x)`; along a strong edge additionally iff
//! `i ∉ a(x,y)` and `j ∉ a(y,x)`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::contraction::{contract, Multigraph};
use crate::error::{Error, Result};
use crate::graph::{BichromaticGraph, Color};
use crate::roots::{root_system, weyl_graph, RootType};

use super::local::LocalTarget;
use super::structure::{clique_partition, wf4_target};

/// A 2-subset of `{1, 2, 3, 4}` as a bitmask (bit `i - 1` for element `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(u8);

impl Pair {
    /// The six pairs in lexicographic order.
    pub const ALL: [Pair; 6] = [Pair(0b0011), Pair(0b0101), Pair(0b1001), Pair(0b0110), Pair(0b1010), Pair(0b1100)];

    pub fn new(i: usize, j: usize) -> Result<Pair> {
        if i == j || !(1..=4).contains(&i) || !(1..=4).contains(&j) {
            return Err(Error::input(format!("{{{i}, {j}}} is not a 2-subset of {{1,2,3,4}}")));
        }
        Ok(Pair((1 << (i - 1)) | (1 << (j - 1))))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=4).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn complement(self) -> Pair {
        Pair(!self.0 & 0b1111)
    }

    pub fn elements(self) -> [usize; 2] {
        let mut it = (1..=4).filter(|&i| self.contains(i));
        [it.next().unwrap_or(0), it.next().unwrap_or(0)]
    }

    fn from_positions(positions: &[usize]) -> Option<Pair> {
        match positions {
            [i, j] => Pair::new(*i, *j).ok(),
            _ => None,
        }
    }
}

/// `a(x, y)` for every directed edge of Λ.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: BTreeMap<(usize, usize), Pair>,
}

impl EdgeLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, x: usize, y: usize, a: Pair) {
        self.labels.insert((x, y), a);
    }

    pub fn get(&self, x: usize, y: usize) -> Option<Pair> {
        self.labels.get(&(x, y)).copied()
    }

    /// Each vertex's neighbours in ascending order; strong neighbours first
    /// get `{1,2}, {1,3}, {1,4}`, then ordinary neighbours get the remaining
    /// pairs in lexicographic order, skipping complements of strong labels.
    pub fn canonical(lambda: &Multigraph) -> Result<Self> {
        let mut out = EdgeLabeling::new();
        for x in 0..lambda.len() {
            let nbrs = lambda.neighbors(x);
            let mut used: Vec<Pair> = Vec::new();
            let strong = nbrs.iter().filter(|&&(_, m)| m == 2);
            for (k, &(y, _)) in strong.enumerate() {
                let a = *Pair::ALL
                    .get(k)
                    .filter(|_| k < 3)
                    .ok_or_else(|| Error::input(format!("vertex {x} has more than 3 strong edges")))?;
                out.set(x, y, a);
                used.push(a);
                used.push(a.complement());
            }
            let mut free = Pair::ALL.iter().filter(|a| !used.contains(a));
            for &(y, _) in nbrs.iter().filter(|&&(_, m)| m == 1) {
                let a = *free
                    .next()
                    .ok_or_else(|| Error::input(format!("vertex {x} has too many neighbours")))?;
                out.set(x, y, a);
            }
        }
        Ok(out)
    }

    /// Like [`canonical`](Self::canonical), except that a vertex with two
    /// ordinary neighbours gives them complementary labels `{1,2}, {3,4}`.
    pub fn canonical_b4(lambda: &Multigraph) -> Result<Self> {
        let mut out = EdgeLabeling::canonical(lambda)?;
        for x in 0..lambda.len() {
            if let [(y, 1), (z, 1)] = lambda.neighbors(x) {
                out.set(x, *y, Pair::ALL[0]);
                out.set(x, *z, Pair::ALL[5]);
            }
        }
        Ok(out)
    }

    /// Every directed edge labelled, labels injective at each vertex, and the
    /// complement of a strong label unused at its vertex.
    pub fn validate(&self, lambda: &Multigraph) -> Result<()> {
        for x in 0..lambda.len() {
            let mut seen = Vec::new();
            for &(y, _) in lambda.neighbors(x) {
                let a = self
                    .get(x, y)
                    .ok_or_else(|| Error::input(format!("edge ({x}, {y}) has no label")))?;
                if seen.contains(&a) {
                    return Err(Error::input(format!("label {:?} repeated at vertex {x}", a.elements())));
                }
                seen.push(a);
            }
            for &(y, m) in lambda.neighbors(x) {
                let a = self.get(x, y).expect("checked above");
                if m == 2 && seen.contains(&a.complement()) {
                    return Err(Error::input(format!(
                        "complement of the strong label on ({x}, {y}) is used at vertex {x}"
                    )));
                }
            }
        }
        for &(x, y) in self.labels.keys() {
            if x >= lambda.len() || y >= lambda.len() || lambda.multiplicity(x, y) == 0 {
                return Err(Error::input(format!("label on non-edge ({x}, {y})")));
            }
        }
        Ok(())
    }
}

/// Contraction of `g` along its 4-clique partition, together with the
/// labelling that rebuilds `g` (positions `1..4` by ascending vertex index).
pub fn read_off(g: &BichromaticGraph) -> Result<(Multigraph, EdgeLabeling)> {
    let partition = clique_partition(g, 4)?;
    let c = contract(g, &partition)?;
    let mut labeling = EdgeLabeling::new();
    let positions = |from: usize, to_vertex: usize| -> Vec<usize> {
        partition.block(from).iter().enumerate().filter(|&(_, v)| g.adjacent(v, to_vertex)).map(|(i, _)| i + 1).collect()
    };
    let broken = |a: usize, b: usize| {
        Error::structure(
            format!("blocks {a} and {b} are not joined in the labelled pattern"),
            partition.block(a).iter().chain(partition.block(b).iter()).collect(),
        )
    };
    for (x, y, m) in c.quotient.edges() {
        if m == 1 {
            for (a, b) in [(x, y), (y, x)] {
                let block_b = partition.block(b).members();
                let hit: Vec<usize> = partition
                    .block(a)
                    .iter()
                    .enumerate()
                    .filter(|&(_, v)| block_b.iter().any(|&w| g.adjacent(v, w)))
                    .map(|(i, _)| i + 1)
                    .collect();
                labeling.set(a, b, Pair::from_positions(&hit).ok_or_else(|| broken(a, b))?);
            }
        } else {
            // a(x,y): the x-side of the pair containing y's first vertex;
            // a(y,x): the y-side of the pair containing the first of those
            let ax = Pair::from_positions(&positions(x, partition.block(y).members()[0]))
                .ok_or_else(|| broken(x, y))?;
            let xi = partition.block(x).members()[ax.elements()[0] - 1];
            let ay = Pair::from_positions(&positions(y, xi)).ok_or_else(|| broken(y, x))?;
            labeling.set(x, y, ax);
            labeling.set(y, x, ay);
        }
    }
    labeling.validate(&c.quotient)?;
    Ok((c.quotient, labeling))
}

fn check_bipartite_connected(lambda: &Multigraph) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::input("empty multigraph"));
    }
    if !lambda.underlying().is_connected() {
        return Err(Error::input("multigraph is not connected"));
    }
    if let Some((u, v, _)) = lambda.edges().find(|&(u, v, _)| lambda.color(u) == lambda.color(v)) {
        return Err(Error::input(format!("edge ({u}, {v}) joins two vertices of one color")));
    }
    Ok(())
}

fn blow_up(lambda: &Multigraph, labeling: &EdgeLabeling) -> Result<BichromaticGraph> {
    let colors: Vec<Color> = (0..lambda.len())
        .flat_map(|x| [lambda.color(x); 4])
        .collect();
    let mut edges = Vec::new();
    for x in 0..lambda.len() {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((4 * x + i, 4 * x + j));
            }
        }
    }
    for (x, y, m) in lambda.edges() {
        let a = labeling.get(x, y).expect("validated");
        let b = labeling.get(y, x).expect("validated");
        for i in 1..=4 {
            for j in 1..=4 {
                let ordinary = a.contains(i) && b.contains(j);
                let twisted = m == 2 && !a.contains(i) && !b.contains(j);
                if ordinary || twisted {
                    edges.push((4 * x + i - 1, 4 * y + j - 1));
                }
            }
        }
    }
    let g = BichromaticGraph::new(colors.len(), colors, &edges)?;
    let labels = (0..g.len()).map(|v| format!("{}:{}", v / 4, v % 4 + 1)).collect();
    g.with_labels(labels)
}

fn verify(g: &BichromaticGraph, lambda: &Multigraph, target: &LocalTarget, what: &str) -> Result<()> {
    let partition = clique_partition(g, 4)?;
    let c = contract(g, &partition)?;
    if c.quotient != *lambda {
        return Err(Error::structure("contraction of the blow-up differs from the input", vec![]));
    }
    let check = target.check(g)?;
    if let Some(v) = check.witness {
        return Err(Error::structure(format!("blow-up is not locally like {what} at vertex {v}"), vec![v]));
    }
    Ok(())
}

/// Builds a connected graph locally like W(F₄) whose 4-clique contraction
/// is `lambda`. Without a labelling the canonical one is used.
pub fn build_locally_f4(lambda: &Multigraph, labeling: Option<&EdgeLabeling>) -> Result<BichromaticGraph> {
    check_bipartite_connected(lambda)?;
    if let Some(x) = (0..lambda.len()).find(|&x| lambda.bivalency(x) != 6) {
        return Err(Error::input(format!("vertex {x} has bivalency {}, not 6", lambda.bivalency(x))));
    }
    let canonical;
    let labeling = match labeling {
        Some(l) => l,
        None => {
            canonical = EdgeLabeling::canonical(lambda)?;
            &canonical
        }
    };
    labeling.validate(lambda)?;
    let g = blow_up(lambda, labeling)?;
    verify(&g, lambda, wf4_target(), "W(F4)")?;
    Ok(g.with_name(format!("f4build({} blocks)", lambda.len())))
}

fn wb4_target() -> &'static LocalTarget {
    static T: OnceLock<LocalTarget> = OnceLock::new();
    T.get_or_init(|| {
        let g = weyl_graph(&root_system(RootType::B, 4).expect("B4 is legal")).expect("16 vertices");
        LocalTarget::of(&g).expect("W(B4) is locally homogeneous")
    })
}

/// Builds a connected graph locally like W(B₄) from a bipartite `lambda`
/// whose short vertices have bivalency 6 and long vertices bivalency 2.
pub fn build_locally_b4(lambda: &Multigraph, labeling: Option<&EdgeLabeling>) -> Result<BichromaticGraph> {
    check_bipartite_connected(lambda)?;
    for x in 0..lambda.len() {
        let want = match lambda.color(x) {
            Color::Short => 6,
            Color::Long => 2,
        };
        if lambda.bivalency(x) != want {
            return Err(Error::input(format!(
                "{} vertex {x} has bivalency {}, not {want}",
                lambda.color(x),
                lambda.bivalency(x)
            )));
        }
    }
    let canonical;
    let labeling = match labeling {
        Some(l) => l,
        None => {
            canonical = EdgeLabeling::canonical_b4(lambda)?;
            &canonical
        }
    };
    labeling.validate(lambda)?;
    for x in (0..lambda.len()).filter(|&x| lambda.color(x) == Color::Long) {
        if let [(y, 1), (z, 1)] = lambda.neighbors(x) {
            let (a, b) = (labeling.get(x, *y), labeling.get(x, *z));
            if a.map(Pair::complement) != b {
                return Err(Error::input(format!(
                    "labels at long vertex {x} must be complementary"
                )));
            }
        }
    }
    let g = blow_up(lambda, labeling)?;
    verify(&g, lambda, wb4_target(), "W(B4)")?;
    Ok(g.with_name(format!("b4build({} blocks)", lambda.len())))
}
