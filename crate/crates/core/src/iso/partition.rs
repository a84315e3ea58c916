//! Ordered vertex partitions and equitable refinement.

use std::collections::VecDeque;

use crate::graph::{BichromaticGraph, Color};

/// Ordered partition of `0..n`. Cells are contiguous ranges of `elems` and
/// are identified by their start position.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    elems: Vec<usize>,
    pos: Vec<usize>,
    /// Start of the cell containing each position.
    cell: Vec<usize>,
    /// Length of the cell starting at each position (meaningful at starts).
    len: Vec<usize>,
    cells: usize,
}

impl Partition {
    /// Short vertices form the first cell, long vertices the second.
    pub(crate) fn by_color(g: &BichromaticGraph) -> Self {
        let n = g.len();
        let mut elems: Vec<usize> = (0..n).filter(|&v| g.color(v) == Color::Short).collect();
        let shorts = elems.len();
        elems.extend((0..n).filter(|&v| g.color(v) == Color::Long));
        let mut pos = vec![0; n];
        for (i, &v) in elems.iter().enumerate() {
            pos[v] = i;
        }
        let mut cell = vec![0; n];
        let mut len = vec![0; n];
        let mut cells = 0;
        if shorts > 0 {
            len[0] = shorts;
            cells += 1;
        }
        if shorts < n {
            for c in &mut cell[shorts..] {
                *c = shorts;
            }
            len[shorts] = n - shorts;
            cells += 1;
        }
        Partition {
            elems,
            pos,
            cell,
            len,
            cells,
        }
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub(crate) fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub(crate) fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.elems.len() {
            out.push(s);
            s += self.len[s];
        }
        out
    }

    pub(crate) fn cell_members(&self, start: usize) -> &[usize] {
        &self.elems[start..start + self.len[start]]
    }

    /// First cell, in position order, with more than one vertex.
    pub(crate) fn first_nonsingleton(&self) -> Option<usize> {
        let mut s = 0;
        while s < self.elems.len() {
            if self.len[s] > 1 {
                return Some(s);
            }
            s += self.len[s];
        }
        None
    }

    /// Splits `v` out of its cell as a singleton placed first. Returns the
    /// start of the new singleton cell.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[self.pos[v]];
        let l = self.len[s];
        debug_assert!(l > 1);
        let p = self.pos[v];
        let u = self.elems[s];
        self.elems.swap(s, p);
        self.pos[u] = p;
        self.pos[v] = s;
        self.len[s] = 1;
        self.len[s + 1] = l - 1;
        for c in &mut self.cell[s + 1..s + l] {
            *c = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, processing `splitters` first. Returns a hash of the refinement
    /// trace, which depends only on cell positions and neighbour counts and
    /// is therefore invariant under isomorphism.
    pub(crate) fn refine(&mut self, g: &BichromaticGraph, splitters: &[usize]) -> u64 {
        let n = self.elems.len();
        let words = g.words();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; n];
        for &s in splitters {
            queued[s] = true;
        }
        let mut trace = Trace::new(self.cells as u64);
        let mut splitter_bits = vec![0u64; words];
        let mut counts = vec![0u32; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);

        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            if self.is_discrete() {
                break;
            }
            splitter_bits.iter_mut().for_each(|x| *x = 0);
            for &v in self.cell_members(w) {
                splitter_bits[v / 64] |= 1 << (v % 64);
            }
            trace.push(w as u64);
            trace.push(self.len[w] as u64);

            let mut s = 0;
            while s < n {
                let l = self.len[s];
                if l == 1 {
                    s += 1;
                    continue;
                }
                let mut lo = u32::MAX;
                let mut hi = 0;
                for &v in &self.elems[s..s + l] {
                    let c = crate::bits::count_and(g.row(v), &splitter_bits) as u32;
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    s += l;
                    continue;
                }
                order.clear();
                order.extend_from_slice(&self.elems[s..s + l]);
                order.sort_by_key(|&v| counts[v]);
                self.elems[s..s + l].copy_from_slice(&order);

                trace.push(s as u64);
                let was_queued = queued[s];
                let mut fragments: Vec<(usize, usize)> = Vec::new();
                let mut start = s;
                for i in s..s + l {
                    let v = self.elems[i];
                    self.pos[v] = i;
                    if i > start && counts[v] != counts[self.elems[i - 1]] {
                        fragments.push((start, i - start));
                        start = i;
                    }
                }
                fragments.push((start, s + l - start));
                for &(fs, fl) in &fragments {
                    self.len[fs] = fl;
                    for c in &mut self.cell[fs..fs + fl] {
                        *c = fs;
                    }
                    trace.push(counts[self.elems[fs]] as u64);
                    trace.push(fl as u64);
                }
                self.cells += fragments.len() - 1;

                let skip = if was_queued {
                    // the first fragment inherits the queued start position
                    Some(s)
                } else {
                    let mut largest = fragments[0];
                    for &f in &fragments[1..] {
                        if f.1 > largest.1 {
                            largest = f;
                        }
                    }
                    Some(largest.0)
                };
                for &(fs, _) in &fragments {
                    if Some(fs) != skip && !queued[fs] {
                        queued[fs] = true;
                        queue.push_back(fs);
                    }
                }
                s += l;
            }
        }
        trace.push(self.cells as u64);
        trace.finish()
    }
}

/// Order-sensitive 64-bit mixing of a refinement trace. Fixed constants so
/// results agree across platforms and runs.
struct Trace(u64);

impl Trace {
    fn new(seed: u64) -> Self {
        Trace(seed ^ 0x243F_6A88_85A3_08D3)
    }

    fn push(&mut self, x: u64) {
        let mut z = self.0 ^ x.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        self.0 = z ^ (z >> 31);
    }

    fn finish(self) -> u64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_refines_to_ends_and_middle() {
        let p = BichromaticGraph::monochromatic(3, Color::Long, &[(0, 1), (1, 2)]).unwrap();
        let mut part = Partition::by_color(&p);
        part.refine(&p, &[0]);
        let starts = part.cell_starts();
        assert_eq!(starts.len(), 2);
        // degree-1 vertices come before the degree-2 vertex
        assert_eq!(part.cell_members(0).len(), 2);
        assert_eq!(part.cell_members(2), &[1]);
    }

    #[test]
    fn colors_split_before_refinement() {
        let g = BichromaticGraph::new(3, vec![Color::Long, Color::Short, Color::Long], &[]).unwrap();
        let part = Partition::by_color(&g);
        assert_eq!(part.cell_members(0), &[1]);
        assert_eq!(part.cell_members(1), &[0, 2]);
    }

    #[test]
    fn individualizing_in_a_cycle_discretizes_up_to_reflection() {
        let edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = BichromaticGraph::monochromatic(6, Color::Long, &edges).unwrap();
        let mut part = Partition::by_color(&c6);
        part.refine(&c6, &[0]);
        assert_eq!(part.cell_starts().len(), 1);
        let s = part.individualize(0);
        part.refine(&c6, &[s]);
        // {0}, {1,5}, {2,4}, {3}
        assert_eq!(part.cell_starts().len(), 4);
    }
}
