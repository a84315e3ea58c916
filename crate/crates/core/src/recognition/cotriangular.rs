//! Cotriangles: 3-cocliques `{x, y, z}` such that every other vertex is
//! adjacent to one or to all three of them.

use crate::graph::BichromaticGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CotriangularCheck {
    pub holds: bool,
    /// A non-adjacent pair lying in no cotriangle.
    pub witness: Option<(usize, usize)>,
}

pub fn is_cotriangle(g: &BichromaticGraph, x: usize, y: usize, z: usize) -> bool {
    if x == y || y == z || x == z || g.adjacent(x, y) || g.adjacent(x, z) || g.adjacent(y, z) {
        return false;
    }
    let (rx, ry, rz) = (g.row(x), g.row(y), g.row(z));
    let words = g.words();
    for i in 0..words {
        let any = rx[i] | ry[i] | rz[i];
        let all = rx[i] & ry[i] & rz[i];
        let two_or_more = (rx[i] & ry[i]) | (rx[i] & rz[i]) | (ry[i] & rz[i]);
        let valid = if i + 1 == words && !g.len().is_multiple_of(64) {
            (1u64 << (g.len() % 64)) - 1
        } else {
            u64::MAX
        };
        let mut bad = ((!any) | (two_or_more & !all)) & valid;
        for v in [x, y, z] {
            if v / 64 == i {
                bad &= !(1u64 << (v % 64));
            }
        }
        if bad != 0 {
            return false;
        }
    }
    true
}

pub fn is_cotriangular(g: &BichromaticGraph) -> CotriangularCheck {
    let n = g.len();
    for x in 0..n {
        for y in x + 1..n {
            if g.adjacent(x, y) {
                continue;
            }
            if !(0..n).any(|z| is_cotriangle(g, x, y, z)) {
                return CotriangularCheck {
                    holds: false,
                    witness: Some((x, y)),
                };
            }
        }
    }
    CotriangularCheck {
        holds: true,
        witness: None,
    }
}
