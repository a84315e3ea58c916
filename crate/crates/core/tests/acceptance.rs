//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails. All comparisons are exact; the two timed
//! criteria have a 60 second budget each.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylgraph::families::{complete, cycle, kneser, quadric_graph, subdivision, symplectic_graph, Sign};
use weylgraph::iso::{are_isomorphic, automorphism_group, is_isomorphism};
use weylgraph::perm::{Permutation, StabilizerChain};
use weylgraph::recognition::*;
use weylgraph::roots::{root_system, RootType};
use weylgraph::{contract, BichromaticGraph, Color, CombineMode, Diameter, Multigraph, Restrict};

const TIME_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn iso(g: &BichromaticGraph, h: &BichromaticGraph) -> bool {
    are_isomorphic(g, h).unwrap().is_some()
}

fn census() -> Outcome {
    let mut checked = 0;
    let mut expect = |t: RootType, n: usize, count: usize| -> Result<(), String> {
        let g = weyl(t, n);
        ensure!(g.len() == count, "W({t}{n}) has {} vertices, expected {count}", g.len());
        checked += 1;
        Ok(())
    };
    for n in 1..=8 {
        expect(RootType::A, n, n * (n + 1) / 2)?;
    }
    for n in 2..=6 {
        expect(RootType::B, n, n * n)?;
        expect(RootType::C, n, n * n)?;
    }
    for n in 4..=6 {
        expect(RootType::D, n, n * (n - 1))?;
    }
    expect(RootType::E, 6, 36)?;
    expect(RootType::E, 7, 63)?;
    expect(RootType::E, 8, 120)?;
    expect(RootType::F, 4, 24)?;
    expect(RootType::G, 2, 6)?;
    let f4 = weyl(RootType::F, 4);
    ensure!(f4.count_color(Color::Short) == 12, "W(F4) short count {}", f4.count_color(Color::Short));
    Ok(format!("{checked} Weyl graphs, W(F4) = 12 + 12"))
}

fn identities() -> Outcome {
    for n in 2..=7 {
        ensure!(iso(&weyl(RootType::A, n), &kneser(n + 1, 2).unwrap()), "W(A{n}) vs K({},2)", n + 1);
    }
    for n in 4..=6 {
        ensure!(iso(&weyl(RootType::D, n), &kneser(n, 2).unwrap().double().unwrap()), "W(D{n}) vs K({n},2)[K2]");
    }
    ensure!(iso(&weyl(RootType::E, 6), &quadric_graph(3, Sign::Minus).unwrap()), "W(E6) vs N-6(2)");
    ensure!(iso(&weyl(RootType::E, 7), &symplectic_graph(3).unwrap()), "W(E7) vs Sp6(2)");
    let start = Instant::now();
    let e8 = weyl(RootType::E, 8);
    let n8 = quadric_graph(4, Sign::Plus).unwrap();
    let map = are_isomorphic(&e8, &n8).unwrap();
    let elapsed = start.elapsed();
    ensure!(map.as_ref().is_some_and(|m| is_isomorphism(&e8, &n8, m)), "W(E8) vs N+8(2)");
    ensure!(elapsed < TIME_BUDGET, "W(E8) took {elapsed:?}");
    Ok(format!("E8 in {:.3}s", elapsed.as_secs_f64()))
}

fn long_part(g: &BichromaticGraph) -> BichromaticGraph {
    g.induced_subgraph(g.vertices_of(Color::Long).members())
}

fn local_structure() -> Outcome {
    for n in 3..=7 {
        let g = weyl(RootType::A, n);
        let p = local_profile(&g).unwrap();
        ensure!(p.homogeneous, "W(A{n}) not locally homogeneous");
        ensure!(iso(&g.local_graph(0).graph, &kneser(n - 1, 2).unwrap()), "local graph of W(A{n})");
    }
    let f4 = weyl(RootType::F, 4);
    let short = is_locally_like(&f4, Some(&weyl(RootType::B, 3)), Some(&weyl(RootType::C, 3))).unwrap();
    ensure!(short.holds, "W(F4) local graphs, witness {:?}", short.witness);
    for n in 4..=6 {
        let g = weyl(RootType::B, n);
        let s = g.vertices_of(Color::Short).first().unwrap();
        let l = g.vertices_of(Color::Long).first().unwrap();
        let ds = g.local_graph(s).graph;
        let dl = g.local_graph(l).graph;
        ensure!(iso(&ds, &weyl(RootType::B, n - 1)), "short local graph of W(B{n})");
        // D3 is not a legal type; its Weyl graph is K(3,2)[K2]
        let d = if n > 4 { weyl(RootType::D, n - 1) } else { kneser(3, 2).unwrap().double().unwrap() };
        ensure!(iso(&long_part(&ds), &d), "long part of the short local graph of W(B{n})");
        let k1 = BichromaticGraph::monochromatic(1, Color::Long, &[]).unwrap();
        let expected = k1.combine(&weyl(RootType::B, n - 2), CombineMode::Join).unwrap();
        ensure!(iso(&dl, &expected), "long local graph of W(B{n})");
        let p = local_profile(&g).unwrap();
        ensure!(p.homogeneous, "W(B{n}) not locally homogeneous");
    }
    Ok("A3..A7, F4, B4..B6".into())
}

fn f4_dichotomy() -> Outcome {
    let f4 = weyl(RootType::F, 4);
    let t = twisted_wf4().unwrap();
    ensure!(t.len() == 24, "twisted copy has {} vertices", t.len());
    ensure!(LocalTarget::of(&f4).unwrap().check(&t).unwrap().holds, "twisted copy not locally like W(F4)");
    ensure!(!iso(&f4, &t), "twisted copy is isomorphic to W(F4)");
    let w = reflection_group_order(&root_system(RootType::F, 4).unwrap());
    ensure!(w == 1152, "|W(F4)| = {w}");
    for (name, g) in [("W(F4)", &f4), ("twisted copy", &t)] {
        let aut = automorphism_group(g).unwrap();
        ensure!(aut.order == BigUint::from(w / 2), "{name}: |Aut| = {}", aut.order);
        ensure!(aut.orbit_sizes() == vec![12, 12], "{name}: orbits {:?}", aut.orbit_sizes());
        for orbit in &aut.orbits {
            let c = g.color(orbit.first().unwrap());
            ensure!(orbit.iter().all(|v| g.color(v) == c), "{name}: mixed orbit");
        }
    }
    // conjugation by the reflections acts on W(F4) by automorphisms, with
    // kernel the centre {±1}
    let phi = root_system(RootType::F, 4).unwrap();
    let refl = phi.reflections();
    let index = |r: &[i64]| {
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        refl.iter().position(|s| s.root == r || s.root == neg).unwrap()
    };
    let gens: Vec<Permutation> = refl
        .iter()
        .map(|s| {
            let images = refl.iter().map(|r| index(&weylgraph::roots::RootSystem::reflect(&s.root, &r.root))).collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();
    ensure!(gens.iter().all(|p| is_isomorphism(&f4, &f4, p.images())), "conjugation is not an automorphism");
    let order = StabilizerChain::new(24, &gens).order();
    ensure!(order == BigUint::from(576u32), "conjugation action has order {order}");
    let v1 = classify_f4_candidate(&f4).unwrap().verdict;
    let v2 = classify_f4_candidate(&t).unwrap().verdict;
    ensure!(v1 == Verdict::WF4 && v2 == Verdict::TwistedWF4, "verdicts {v1} / {v2}");
    Ok("|Aut| = 576 = 1152/2 for both, orbits 12 + 12".into())
}

fn tightness() -> Outcome {
    let f4 = weyl(RootType::F, 4);
    ensure!(f4.distance_profile().diameter == Diameter::Finite(2), "diameter");
    ensure!(is_tightly_connected(&f4), "not tightly connected");
    let mu = mu_report(&f4).unwrap();
    ensure!(mu.same.iter().all(|&(_, _, m)| m == 3), "mu != 3 somewhere");
    ensure!(mu.mixed.iter().all(|&(_, _, s, l)| s == 1 && l == 1), "mixed mu != (1,1) somewhere");
    ensure!(!mu.same.is_empty() && !mu.mixed.is_empty(), "no distance-2 pairs");
    let c = contract(&f4, &clique_partition(&f4, 4).unwrap()).unwrap();
    ensure!(c.len() == 6 && c.quotient.is_color_bipartite(), "contraction shape");
    ensure!((0..6).all(|b| c.bivalency(b) == 6), "bivalencies");
    Ok(format!("{} same-colored and {} mixed distance-2 pairs", mu.same.len(), mu.mixed.len()))
}

fn infinite_family() -> Outcome {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for (lengths, expected) in [([4, 4, 4], 256), ([6, 4, 4], 384)] {
        let lambda = bipartite(&cycles(&lengths), |_, _| false);
        let g = build_locally_f4(&lambda, None).map_err(|e| format!("{lengths:?}: {e}"))?;
        ensure!(g.len() == expected, "{lengths:?}: {} vertices", g.len());
        ensure!(g.is_connected(), "{lengths:?}: disconnected");
        let check = LocalTarget::of(&weyl(RootType::F, 4)).unwrap().check(&g).unwrap();
        ensure!(check.holds, "{lengths:?}: not locally like W(F4) at {:?}", check.witness);
        let c = contract(&g, &clique_partition(&g, 4).unwrap()).unwrap();
        ensure!(c.quotient == lambda, "{lengths:?}: contraction differs from the input");
        let report = classify_f4_candidate(&g).unwrap();
        ensure!(report.hypotheses().iter().all(|&(_, h)| !h), "{lengths:?}: some hypothesis holds");
        sizes.push(g.len());
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < TIME_BUDGET, "took {elapsed:?}");
    Ok(format!("{sizes:?} vertices in {:.3}s", elapsed.as_secs_f64()))
}

fn b4_suite() -> Outcome {
    let b4 = weyl(RootType::B, 4);
    let star = Multigraph::new(
        vec![Color::Short, Color::Long, Color::Long, Color::Long],
        [(0, 1, 2), (0, 2, 2), (0, 3, 2)],
    )
    .unwrap();
    let g = build_locally_b4(&star, None).map_err(|e| e.to_string())?;
    let up_to_twist = iso(&g, &b4)
        || strong_pairs(&g).unwrap().iter().any(|(x, y)| iso(&twist(&g, x, y).unwrap(), &b4));
    ensure!(up_to_twist, "star blow-up is not W(B4) up to twist");
    let k7 = subdivision(&complete(7).unwrap()).unwrap();
    let colors = (0..k7.len()).map(|v| if v < 7 { Color::Short } else { Color::Long }).collect();
    let lambda = Multigraph::new(colors, k7.edges().into_iter().map(|(u, v)| (u, v, 1))).unwrap();
    let big = build_locally_b4(&lambda, None).map_err(|e| e.to_string())?;
    ensure!(big.len() == 112, "subdivided K7 gives {} vertices", big.len());
    ensure!(LocalTarget::of(&b4).unwrap().check(&big).unwrap().holds, "not locally like W(B4)");
    Ok("star ≅ W(B4), subdivided K7 → 112 vertices".into())
}

fn bn_structure() -> Outcome {
    for n in 5..=6 {
        let g = weyl(RootType::B, n);
        let comps = g.components(Restrict::ShortOnly);
        for c in &comps {
            ensure!(c.len() == n, "B{n}: short component of size {}", c.len());
            ensure!(c.iter().all(|u| c.iter().all(|v| u == v || g.adjacent(u, v))), "B{n}: not a clique");
        }
        let touching = g
            .vertices_of(Color::Long)
            .iter()
            .filter(|&y| comps[0].iter().any(|x| g.adjacent(x, y)))
            .count();
        ensure!(touching == n * (n - 1), "B{n}: {touching} long neighbours");
    }
    for n in 4..=9 {
        ensure!(alternating_sum(n) == n * (n - 1), "alternating sum at n = {n}");
    }
    Ok("B5, B6; identity for n = 4..9".into())
}

fn cotriangularity() -> Outcome {
    let mut positives = vec![];
    for n in 4..=7 {
        positives.push((format!("K({n},2)"), kneser(n, 2).unwrap()));
    }
    positives.push(("Sp4(2)".into(), symplectic_graph(2).unwrap()));
    positives.push(("Sp6(2)".into(), symplectic_graph(3).unwrap()));
    positives.push(("N+6(2)".into(), quadric_graph(3, Sign::Plus).unwrap()));
    positives.push(("N-6(2)".into(), quadric_graph(3, Sign::Minus).unwrap()));
    for (name, g) in &positives {
        ensure!(is_cotriangular(g).holds, "{name} is not cotriangular");
    }
    ensure!(!is_cotriangular(&cycle(5).unwrap()).holds, "C5 is cotriangular");
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut negatives = 0;
    for round in 0..200 {
        let g = random_graph(&mut rng, 4 + round % 7, 0.5, false);
        let fast = is_cotriangular(&g).holds;
        ensure!(fast == brute_force_cotriangular(&g), "disagreement with the definition on {g:?}");
        negatives += !fast as usize;
    }
    Ok(format!("{} positive families; {negatives} random non-cotriangular graphs confirmed", positives.len()))
}

fn properties() -> Outcome {
    let catalog = f4_like_catalog();
    let mut cliques = 0;
    for (name, g) in &catalog {
        ensure!(g.len() % 8 == 0 && g.len() >= 24, "{name}: {} vertices", g.len());
        ensure!(g.count_color(Color::Short) == g.count_color(Color::Long), "{name}: color counts differ");
        for clique in clique_partition(g, 4).unwrap().blocks() {
            if g.color(clique.first().unwrap()) != Color::Short {
                continue;
            }
            let a = analyse_clique(g, clique, false);
            ensure!(a.is_clean(), "{name}: {:?}", a.violations);
            cliques += 1;
        }
    }
    Ok(format!("{} instances, {cliques} short 4-cliques, zero violations", catalog.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("census", census),
        ("isomorphism identities", identities),
        ("local structure", local_structure),
        ("F4 dichotomy", f4_dichotomy),
        ("tightness of W(F4)", tightness),
        ("infinite family", infinite_family),
        ("B4 constructions", b4_suite),
        ("B_n structure", bn_structure),
        ("cotriangularity", cotriangularity),
        ("locally-F4 invariants", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {:>2} {name}: panicked", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
