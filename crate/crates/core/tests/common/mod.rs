//! Shared builders and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use weylgraph::families::cycle;
use weylgraph::recognition::{build_locally_f4, read_off, strong_pairs, twist, twisted_wf4};
use weylgraph::roots::{root_system, weyl_graph, RootSystem, RootType};
use weylgraph::{BichromaticGraph, Color, CombineMode, Multigraph};

pub fn weyl(t: RootType, n: usize) -> BichromaticGraph {
    weyl_graph(&root_system(t, n).unwrap()).unwrap()
}

pub fn product(factors: &[BichromaticGraph]) -> BichromaticGraph {
    let mut g = factors[0].clone();
    for f in &factors[1..] {
        g = g.combine(f, CombineMode::CartesianProduct).unwrap();
    }
    g
}

pub fn cycles(lengths: &[usize]) -> BichromaticGraph {
    product(&lengths.iter().map(|&k| cycle(k).unwrap()).collect::<Vec<_>>())
}

/// Bipartite graph as a multigraph: the side of vertex 0 short, edges
/// selected by `strong` doubled.
pub fn bipartite(g: &BichromaticGraph, strong: impl Fn(usize, usize) -> bool) -> Multigraph {
    let side = g.bipartition().expect("bipartite input");
    let colors = side
        .iter()
        .map(|&b| if b == side[0] { Color::Short } else { Color::Long })
        .collect();
    let edges = g
        .edges()
        .into_iter()
        .map(|(u, v)| (u, v, if strong(u, v) { 2 } else { 1 }));
    Multigraph::new(colors, edges).unwrap()
}

/// Every graph locally like W(F4) that the tests construct, by name.
pub fn f4_like_catalog() -> Vec<(String, BichromaticGraph)> {
    let wf4 = weyl(RootType::F, 4);
    let mut out = vec![
        ("W(F4)".to_string(), wf4.clone()),
        ("twisted W(F4)".to_string(), twisted_wf4().unwrap()),
        ("color-swapped W(F4)".to_string(), wf4.swap_colors()),
    ];
    for (i, (x, y)) in strong_pairs(&wf4).unwrap().iter().enumerate() {
        out.push((format!("twist #{i} of W(F4)"), twist(&wf4, x, y).unwrap()));
    }
    let (lambda, _) = read_off(&wf4).unwrap();
    out.push(("canonical rebuild of W(F4)".to_string(), build_locally_f4(&lambda, None).unwrap()));

    let k2 = BichromaticGraph::monochromatic(2, Color::Long, &[(0, 1)]).unwrap();
    let q3 = product(&[k2.clone(), k2.clone(), k2]);
    out.push(("blow-up of the cube, all strong".into(), build_locally_f4(&bipartite(&q3, |_, _| true), None).unwrap()));

    let c4 = cycle(4).unwrap();
    let torus = product(&[c4.clone(), c4.clone()]);
    // first-factor edges (same second coordinate) strong
    let first_factor = |n2: usize| move |u: usize, v: usize| u % n2 == v % n2;
    out.push((
        "blow-up of C4xC4, first factor strong".into(),
        build_locally_f4(&bipartite(&torus, first_factor(4)), None).unwrap(),
    ));
    let torus96 = product(&[cycle(6).unwrap(), c4.clone()]);
    out.push((
        "blow-up of C6xC4, first factor strong".into(),
        build_locally_f4(&bipartite(&torus96, first_factor(4)), None).unwrap(),
    ));
    out.push((
        "blow-up of C4xC4xC4".into(),
        build_locally_f4(&bipartite(&cycles(&[4, 4, 4]), |_, _| false), None).unwrap(),
    ));
    out.push((
        "blow-up of C6xC4xC4".into(),
        build_locally_f4(&bipartite(&cycles(&[6, 4, 4]), |_, _| false), None).unwrap(),
    ));
    out
}

/// Number of color-preserving automorphisms, by extending partial maps one
/// vertex at a time.
pub fn brute_force_automorphisms(g: &BichromaticGraph) -> u64 {
    brute_force_maps(g, g, false)
}

pub fn brute_force_isomorphic(g: &BichromaticGraph, h: &BichromaticGraph) -> bool {
    g.len() == h.len() && brute_force_maps(g, h, true) > 0
}

fn brute_force_maps(g: &BichromaticGraph, h: &BichromaticGraph, stop_at_first: bool) -> u64 {
    fn extend(
        g: &BichromaticGraph,
        h: &BichromaticGraph,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        stop: bool,
    ) -> u64 {
        let v = map.len();
        if v == g.len() {
            return 1;
        }
        let mut total = 0;
        for w in 0..h.len() {
            if used[w] || g.color(v) != h.color(w) || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| g.adjacent(u, v) != h.adjacent(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            total += extend(g, h, map, used, stop);
            used[w] = false;
            map.pop();
            if stop && total > 0 {
                break;
            }
        }
        total
    }
    extend(g, h, &mut Vec::new(), &mut vec![false; h.len()], stop_at_first)
}

/// Cotriangularity straight from the definition.
pub fn brute_force_cotriangular(g: &BichromaticGraph) -> bool {
    let n = g.len();
    let cotriangle = |x: usize, y: usize, z: usize| {
        let coclique = !g.adjacent(x, y) && !g.adjacent(x, z) && !g.adjacent(y, z);
        coclique
            && (0..n).filter(|&w| w != x && w != y && w != z).all(|w| {
                let k = [x, y, z].iter().filter(|&&t| g.adjacent(w, t)).count();
                k == 1 || k == 3
            })
    };
    (0..n).all(|x| {
        (x + 1..n).all(|y| {
            g.adjacent(x, y) || (0..n).any(|z| z != x && z != y && cotriangle(x, y, z))
        })
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64, bichromatic: bool) -> BichromaticGraph {
    let colors = (0..n)
        .map(|_| if bichromatic && rng.gen_bool(0.5) { Color::Short } else { Color::Long })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    BichromaticGraph::new(n, colors, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Order of the group generated by the reflections of `phi`, by closing
/// the set of root permutations under multiplication.
pub fn reflection_group_order(phi: &RootSystem) -> usize {
    let roots = phi.roots();
    let gens: Vec<Vec<usize>> = phi
        .reflections()
        .iter()
        .map(|r| {
            roots
                .iter()
                .map(|v| phi.index_of(&RootSystem::reflect(&r.root, v)).unwrap())
                .collect()
        })
        .collect();
    let identity: Vec<usize> = (0..roots.len()).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.len()
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_{k=1}^{n-2} (−1)^{k−1} C(n,k)(n−k)(n−k−1)`.
pub fn alternating_sum(n: i64) -> i64 {
    (1..=n - 2)
        .map(|k| {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sign * binomial(n, k) * (n - k) * (n - k - 1)
        })
        .sum()
}
