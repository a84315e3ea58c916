//! Individualization-refinement search with automorphism pruning.
//!
//! The canonical leaf is the largest leaf under the order "node invariants
//! along the path, then permuted adjacency rows". Leaves equal to the first
//! leaf or to the current best leaf yield automorphisms; the search then
//! jumps back to the deepest common ancestor of the two leaves. At nodes on
//! the first path, children in the same orbit of the automorphisms found so
//! far are skipped.

use std::cmp::Ordering;

use num_bigint::BigUint;

use super::partition::Partition;
use crate::graph::BichromaticGraph;
use crate::perm::Permutation;

pub(crate) struct Outcome {
    /// Canonical position -> vertex.
    pub labeling: Vec<usize>,
    pub generators: Vec<Permutation>,
    /// Product of first-path orbit lengths; equals the group order.
    pub order: BigUint,
    pub orbits: Vec<usize>,
}

#[derive(Clone)]
struct Leaf {
    path: Vec<usize>,
    invariants: Vec<u64>,
    labeling: Vec<usize>,
    rows: Vec<u64>,
}

enum Flow {
    Continue,
    /// Resume at the node on the current path with this many individualized
    /// vertices.
    Jump(usize),
}

struct Search<'g> {
    g: &'g BichromaticGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
    orbits: UnionFind,
    level_orbits: Vec<usize>,
}

pub(crate) fn run(g: &BichromaticGraph) -> Outcome {
    let mut root = Partition::by_color(g);
    let splitters = root.cell_starts();
    let inv = root.refine(g, &splitters);
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
        orbits: UnionFind::new(g.len()),
        level_orbits: Vec::new(),
    };
    let mut path = Vec::new();
    let mut invariants = vec![inv];
    search.visit(root, &mut path, &mut invariants, true);

    let best = search.best.expect("the search reaches at least one leaf");
    let order = search
        .level_orbits
        .iter()
        .fold(BigUint::from(1u32), |acc, &k| acc * BigUint::from(k));
    let orbits = (0..g.len()).map(|v| search.orbits.find(v)).collect();
    Outcome {
        labeling: best.labeling,
        generators: search.generators,
        order,
        orbits,
    }
}

impl Search<'_> {
    fn visit(
        &mut self,
        part: Partition,
        path: &mut Vec<usize>,
        invariants: &mut Vec<u64>,
        eq_first: bool,
    ) -> Flow {
        let level = path.len();
        let Some(target) = part.first_nonsingleton() else {
            return self.leaf(&part, path, invariants, eq_first);
        };
        let on_first_path = eq_first
            && self
                .first
                .as_ref()
                .is_none_or(|f| f.path.len() > level && f.path[..level] == path[..]);
        let mut children = part.cell_members(target).to_vec();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();

        for v in children {
            if on_first_path
                && self.first.is_some()
                && explored.iter().any(|&u| self.orbits.same(u, v))
            {
                continue;
            }
            explored.push(v);

            let mut child = part.clone();
            let s = child.individualize(v);
            let inv = child.refine(self.g, &[s]);
            invariants.push(inv);
            let child_eq_first = match &self.first {
                None => true,
                Some(f) => eq_first && f.invariants.get(level + 1) == Some(&inv),
            };
            if !child_eq_first && self.compare_to_best(invariants) == Ordering::Less {
                invariants.pop();
                continue;
            }
            path.push(v);
            let flow = self.visit(child, path, invariants, child_eq_first);
            path.pop();
            invariants.pop();
            if let Flow::Jump(t) = flow {
                if t < level {
                    return Flow::Jump(t);
                }
            }
        }

        if on_first_path {
            let first = self.first.as_ref().expect("first leaf exists after descent");
            let size = self.orbits.size(first.path[level]);
            if self.level_orbits.len() <= level {
                self.level_orbits.resize(level + 1, 1);
            }
            self.level_orbits[level] = size;
        }
        Flow::Continue
    }

    fn compare_to_best(&self, invariants: &[u64]) -> Ordering {
        match &self.best {
            None => Ordering::Greater,
            Some(b) => {
                let k = invariants.len().min(b.invariants.len());
                invariants.cmp(&b.invariants[..k])
            }
        }
    }

    fn leaf(
        &mut self,
        part: &Partition,
        path: &[usize],
        invariants: &[u64],
        eq_first: bool,
    ) -> Flow {
        let labeling = part.elems().to_vec();
        let rows = permuted_rows(self.g, &labeling);
        let leaf = Leaf {
            path: path.to_vec(),
            invariants: invariants.to_vec(),
            labeling,
            rows,
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return Flow::Continue;
        };
        if eq_first && leaf.rows == first.rows {
            let aut = automorphism(&first.labeling, &leaf.labeling);
            let back = common_prefix(&first.path, path);
            self.add_generator(aut);
            return Flow::Jump(back);
        }
        let best = self.best.as_ref().expect("set with the first leaf");
        let order = leaf
            .invariants
            .cmp(&best.invariants)
            .then_with(|| leaf.rows.cmp(&best.rows));
        match order {
            Ordering::Equal => {
                let aut = automorphism(&best.labeling, &leaf.labeling);
                let back = common_prefix(&best.path, path);
                self.add_generator(aut);
                Flow::Jump(back)
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                Flow::Continue
            }
            Ordering::Less => Flow::Continue,
        }
    }

    fn add_generator(&mut self, aut: Permutation) {
        for (v, &w) in aut.images().iter().enumerate() {
            self.orbits.union(v, w);
        }
        self.generators.push(aut);
    }
}

/// The permutation sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &[usize], to: &[usize]) -> Permutation {
    let mut images = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        images[a] = b;
    }
    Permutation::from_images_unchecked(images)
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Adjacency rows of `g` relabeled so that `labeling[i]` becomes vertex `i`.
pub(crate) fn permuted_rows(g: &BichromaticGraph, labeling: &[usize]) -> Vec<u64> {
    let n = g.len();
    let words = g.words();
    let mut position = vec![0; n];
    for (i, &v) in labeling.iter().enumerate() {
        position[v] = i;
    }
    let mut rows = vec![0u64; n * words];
    for (i, &v) in labeling.iter().enumerate() {
        let row = &mut rows[i * words..(i + 1) * words];
        for w in g.neighbors(v) {
            let j = position[w];
            row[j / 64] |= 1 << (j % 64);
        }
    }
    rows
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn find_ref(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.find_ref(a) == self.find_ref(b)
    }

    fn size(&self, x: usize) -> usize {
        self.size[self.find_ref(x)]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }
}
