//! Permutations of `0..n` and a deterministic Schreier–Sims stabilizer
//! chain for exact group orders.
//!
//! Permutations act on the right: `p.image(x)` is `p[x]`, and the product
//! `a.then(b)` applies `a` first.

use std::fmt;

use num_bigint::BigUint;

/// A permutation of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Wraps an image list; returns `None` unless it is a permutation.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &p in &images {
            if p >= images.len() || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_some());
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[b]` maps the base point to `b`, for `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(n: usize, base: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            transversal: vec![None; n],
            orbit: Vec::new(),
        };
        level.rebuild_orbit(n);
        level
    }

    fn rebuild_orbit(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.base] = Some(Permutation::identity(n));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.gens {
                let q = s.image(p);
                if self.transversal[q].is_none() {
                    let u = self.transversal[p]
                        .as_ref()
                        .expect("orbit points carry a transversal element")
                        .then(s);
                    self.transversal[q] = Some(u);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
pub struct StabilizerChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs deterministic Schreier–Sims on the group generated by `gens`.
    pub fn new(n: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            n,
            levels: Vec::new(),
        };
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        for g in &gens {
            assert_eq!(g.degree(), n, "generator degree mismatch");
            if chain.levels.iter().all(|l| g.image(l.base) == l.base) {
                let moved = (0..n).find(|&x| g.image(x) != x).expect("non-identity");
                chain.levels.push(Level::new(n, moved));
            }
        }
        for g in &gens {
            for level in &mut chain.levels {
                level.gens.push((*g).clone());
                if g.image(level.base) != level.base {
                    break;
                }
            }
        }
        for level in &mut chain.levels {
            level.rebuild_orbit(n);
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let level = i - 1;
            match self.find_failing_schreier_generator(level) {
                None => i -= 1,
                Some((residue, fail_level)) => {
                    if fail_level == self.levels.len() {
                        let moved = (0..self.n)
                            .find(|&x| residue.image(x) != x)
                            .expect("residue is not the identity");
                        self.levels.push(Level::new(self.n, moved));
                    }
                    for l in level + 1..=fail_level {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.n);
                    }
                    i = fail_level + 1;
                }
            }
        }
    }

    /// Returns a Schreier generator of `level` that does not sift through
    /// the levels below it, with the level where sifting stopped.
    fn find_failing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &beta in &lv.orbit {
            let u_beta = lv.transversal[beta].as_ref().expect("orbit point");
            for s in &lv.gens {
                let image = s.image(beta);
                let u_image = lv.transversal[image].as_ref().expect("orbit is closed");
                let h = u_beta.then(s).then(&u_image.inverse());
                if h.is_identity() {
                    continue;
                }
                let (residue, stopped) = self.sift(h, level + 1);
                if stopped < self.levels.len() || !residue.is_identity() {
                    return Some((residue, stopped));
                }
            }
        }
        None
    }

    fn sift(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for (l, lv) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(lv.base);
            match &lv.transversal[beta] {
                None => return (h, l),
                Some(u) => h = h.then(&u.inverse()),
            }
        }
        (h, self.levels.len())
    }

    /// Group membership test.
    pub fn contains(&self, g: &Permutation) -> bool {
        let (residue, stopped) = self.sift(g.clone(), 0);
        stopped == self.levels.len() && residue.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the basic orbits, one per base point.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    /// Closure by breadth-first multiplication; exponential, tests only.
    fn enumerate(n: usize, gens: &[Permutation]) -> usize {
        let mut seen = HashSet::from([Permutation::identity(n)]);
        let mut frontier = vec![Permutation::identity(n)];
        while let Some(g) = frontier.pop() {
            for s in gens {
                let h = g.then(s);
                if seen.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7 {
            let gens = vec![
                perm(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>()),
                perm(&{
                    let mut v: Vec<_> = (0..n).collect();
                    v.swap(0, 1);
                    v
                }),
            ];
            let chain = StabilizerChain::new(n, &gens);
            let fact: usize = (1..=n).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn matches_enumeration_on_small_groups() {
        let cases: Vec<(usize, Vec<Permutation>)> = vec![
            (4, vec![perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])]),
            (6, vec![perm(&[1, 2, 0, 3, 4, 5]), perm(&[0, 1, 2, 4, 5, 3])]),
            (8, vec![perm(&[1, 2, 3, 0, 5, 6, 7, 4]), perm(&[4, 5, 6, 7, 0, 1, 2, 3]), perm(&[0, 3, 2, 1, 4, 7, 6, 5])]),
            (5, vec![perm(&[1, 2, 3, 4, 0]), perm(&[0, 4, 3, 2, 1])]),
            (3, vec![]),
        ];
        for (n, gens) in cases {
            let chain = StabilizerChain::new(n, &gens);
            assert_eq!(chain.order(), BigUint::from(enumerate(n, &gens)));
            for g in &gens {
                assert!(chain.contains(g));
            }
        }
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(perm(&[1, 2, 0, 3, 5, 4]).to_string(), "(0 1 2)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        let p = perm(&[2, 0, 1]);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Permutation::from_images(vec![0, 0]).is_none());
    }
}
