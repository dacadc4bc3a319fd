//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p edgeext --test acceptance`. Exits non-zero when
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use edgeext::colouring::{is_proper, reduce_to_lists, respects_lists, validate_precolouring};
use edgeext::gallai::{extend_gallai, ExceptionReport};
use edgeext::instances::{
    compute_rho, enumerate_multigraphs, for_each_precolouring, generate, verify, Bounds, Claim, EnumSpec, FamilySpec,
    Shape,
};
use edgeext::kernel::{
    brute_force_kernels, extend_bipartite, f_bound, galvin_orient, is_kernel, kernel, konig_colour,
    list_colour_bipartite, Bipartition, FBound,
};
use edgeext::planar::generate::{hub_stacked, icosahedron, random_plane_graph, wheel, PlaneGraph};
use edgeext::planar::{audit_discharge, extend_planar, AuditOptions, AuditReport, PlanarMode, Reading, Variant};
use edgeext::solver::{chromatic_index, extend};
use edgeext::{Charge, ColourSet, EdgeId, EdgeSet, ListAssignment, Method, MultiGraph, Palette, PartialEdgeColouring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn run_claim(claim: Claim, b: Bounds) -> Outcome {
    match verify(claim, b) {
        Ok(r) => outcome(
            r.passed(),
            format!(
                "{} graphs, {} instances, {} counterexamples, {} engine failures",
                r.graphs,
                r.instances,
                r.counterexample.is_some() as u8,
                r.engine_failures.len()
            ),
        ),
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn c1() -> Outcome {
    let b = Bounds { n_max: 4, e_max: 7, mu_max: 2, jobs: jobs(), timed: false, ..Bounds::default() };
    run_claim(Claim::Conj1_1, b)
}

fn c2() -> Outcome {
    let mut bad = Vec::new();
    for s in 2..=8 {
        let inst = generate(FamilySpec::SubdividedStar { s }).unwrap();
        let at = |k: u32| extend(&inst.graph, &inst.precolouring, Palette::new(k).unwrap()).unwrap();
        let low = at(s as u32);
        let high = at(s as u32 + 1);
        let ok = !low.is_solved() && high.is_solved() && is_proper(&inst.graph, &high.colouring);
        if !ok {
            bad.push(s);
        }
    }
    outcome(bad.is_empty(), format!("s = 2..8, mismatches at {bad:?}"))
}

fn c3() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for delta in [4, 6] {
        let inst = generate(FamilySpec::ChainBlocks { delta, blocks: 2 }).unwrap();
        let d = inst.graph.max_degree() as u32;
        let low = extend(&inst.graph, &inst.precolouring, Palette::new(d).unwrap()).unwrap();
        let high = extend(&inst.graph, &inst.precolouring, Palette::new(d + 1).unwrap()).unwrap();
        let ok = d as usize == delta && !low.is_solved() && high.is_solved() && is_proper(&inst.graph, &high.colouring);
        pass &= ok;
        notes.push(format!("Δ={delta}: [Δ] {:?} ({} nodes), [Δ+1] {:?}", low.status, low.stats.nodes, high.status));
    }
    outcome(pass, notes.join("; "))
}

fn c4() -> Outcome {
    let spec = EnumSpec { bipartite_only: true, ..EnumSpec::new(9, 8, 2) };
    let graphs = enumerate_multigraphs(&spec);
    let per: Vec<(u64, u64, u64, u64)> = graphs
        .par_iter()
        .map(|g| {
            let b = Bipartition::of(g).unwrap();
            let (mut n, mut fails, mut galvin, mut galvin_kernel) = (0, 0, 0, 0);
            for k in 1..=2usize {
                let p = Palette::new((g.max_degree() + k) as u32).unwrap();
                for_each_precolouring(g, p, Shape::MaxVertexDegree(k), true, |c| {
                    n += 1;
                    match extend_bipartite(g, &b, c, k) {
                        Ok(o) if o.is_solved() && is_proper(g, &o.colouring) && o.colouring.len() == g.edge_count() => {
                            let (reduced, lists) = reduce_to_lists(g, c, p).unwrap();
                            let dr = reduced.max_degree();
                            if lists.iter().all(|(_, l)| l.len() >= dr) {
                                galvin += 1;
                                galvin_kernel += (o.method == Method::Kernel) as u64;
                            }
                        }
                        _ => fails += 1,
                    }
                    true
                });
            }
            (n, fails, galvin, galvin_kernel)
        })
        .collect();
    let sum = per.iter().fold((0, 0, 0, 0), |a, x| (a.0 + x.0, a.1 + x.1, a.2 + x.2, a.3 + x.3));
    outcome(
        sum.1 == 0 && sum.2 == sum.3,
        format!(
            "{} graphs, {} instances, {} not extended; Galvin-bound sub-family {} instances, {} by kernel alone",
            graphs.len(),
            sum.0,
            sum.1,
            sum.2,
            sum.3
        ),
    )
}

fn c5() -> Outcome {
    let spec = EnumSpec { bipartite_only: true, ..EnumSpec::new(9, 8, 8) };
    let graphs = enumerate_multigraphs(&spec);
    let per: Vec<(u64, u64, u64)> = graphs
        .par_iter()
        .enumerate()
        .map(|(gi, g)| {
            let b = Bipartition::of(g).unwrap();
            let f = f_bound(g, FBound::Bipartite);
            let k = f.values().copied().max().unwrap().max(6);
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ gi as u64);
            let (mut ok, mut fails, mut kernel_only) = (0, 0, 0);
            let palette: Vec<u32> = (1..=k as u32).collect();
            for _ in 0..200 {
                let mut l = ListAssignment::new();
                for e in g.edge_ids() {
                    let pick: ColourSet = palette.choose_multiple(&mut rng, f[&e]).copied().collect();
                    l.set(e, pick);
                }
                match list_colour_bipartite(g, &b, &l) {
                    Ok(o) if o.is_solved() && is_proper(g, &o.colouring) && respects_lists(g, &o.colouring, &l) => {
                        ok += 1;
                        kernel_only += (o.method == Method::Kernel) as u64;
                    }
                    _ => fails += 1,
                }
            }
            (ok, fails, kernel_only)
        })
        .collect();
    let sum = per.iter().fold((0, 0, 0), |a, x| (a.0 + x.0, a.1 + x.1, a.2 + x.2));
    outcome(
        sum.1 == 0,
        format!("{} graphs × 200 list assignments: {} solved, {} failed ({} without fallback)", graphs.len(), sum.0, sum.1, sum.2),
    )
}

fn c6() -> Outcome {
    let b = Bounds { n_max: 11, e_max: 10, mu_max: 3, jobs: jobs(), timed: false, ..Bounds::default() };
    run_claim(Claim::Thm1_5, b)
}

fn c7() -> Outcome {
    let c5 = MultiGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let a = extend_gallai(&c5, &PartialEdgeColouring::new(), 0).unwrap();
    let a_ok = !a.outcome.is_solved() && a.exception == Some(ExceptionReport::OddCycleK0 { length: 5 });

    let tri = generate(FamilySpec::ShannonTriangle { m1: 2, m2: 2, m3: 2 }).unwrap().graph;
    let pre: PartialEdgeColouring = [(EdgeId(0), 1)].into_iter().collect();
    let t = extend_gallai(&tri, &pre, 1).unwrap();
    let b_ok = !t.outcome.is_solved() && matches!(t.exception, Some(ExceptionReport::TriangleMultiplicity { multiplicities: [2, 2, 2] }));

    let mut notes = vec![format!("C5 k=0 {:?}, triangle (2,2,2) k=1 {:?}", a.exception.is_some(), b_ok)];
    let mut pass = a_ok && b_ok;
    for k in 0..=2 {
        let bounds = Bounds { n_max: 9, e_max: 8, mu_max: 3, k, jobs: jobs(), timed: false, ..Bounds::default() };
        let r = run_claim(Claim::Thm1_6, bounds);
        pass &= r.pass;
        notes.push(format!("k={k}: {}", r.detail));
    }
    outcome(pass, notes.join("; "))
}

fn c8() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for m in 1..=3usize {
        let g = generate(FamilySpec::ShannonTriangle { m1: m, m2: m, m3: m }).unwrap().graph;
        let chi = chromatic_index(&g).unwrap() as usize;
        let rho: Charge = compute_rho(&g).unwrap();
        let ok = chi == 3 * m && chi == 3 * g.max_degree() / 2 && rho == Charge::from_integer(3 * m as i64) && rho.ceil() == rho;
        pass &= ok;
        notes.push(format!("m={m}: χ′={chi}, ρ={rho}"));
    }
    outcome(pass, notes.join("; "))
}

fn random_matching<R: Rng>(g: &MultiGraph, t: usize, rng: &mut R) -> EdgeSet {
    let mut ids: Vec<EdgeId> = g.edge_ids().collect();
    ids.shuffle(rng);
    let take = rng.gen_range(0..=ids.len().min(8));
    let mut m = EdgeSet::new();
    for e in ids {
        if m.len() == take {
            break;
        }
        let mut trial = m.clone();
        trial.insert(e);
        if g.is_distance_matching(&trial, t).unwrap() {
            m = trial;
        }
    }
    m
}

fn planar_instance<R: Rng>(i: usize, delta: usize, rng: &mut R) -> PlaneGraph {
    if i % 2 == 0 {
        wheel(delta)
    } else {
        hub_stacked(delta, rng.gen_range(0..30), rng)
    }
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut notes = Vec::new();
    let mut pass = true;
    for (mode, t, deltas) in [(PlanarMode::MatchingDeltaPlus1, 1, 17..=20), (PlanarMode::Distance3Delta, 3, 20..=20)] {
        let (mut reduction, mut bad) = (0, 0);
        for i in 0..100 {
            let delta = rng.gen_range(deltas.clone());
            let p = planar_instance(i, delta, &mut rng);
            let g = &p.graph;
            let m = random_matching(g, t, &mut rng);
            let k = mode.palette(g.max_degree()) as u32;
            let c: PartialEdgeColouring = m.iter().map(|e| (e, rng.gen_range(1..=k))).collect();
            match extend_planar(g, &c, mode) {
                Ok(o)
                    if o.is_solved()
                        && is_proper(g, &o.colouring)
                        && o.colouring.len() == g.edge_count()
                        && validate_precolouring(g, &o.colouring, Palette::new(k).unwrap()).is_ok()
                        && c.iter().all(|(e, x)| o.colouring.get(e) == Some(x)) =>
                {
                    if o.method == Method::Reduction {
                        reduction += 1;
                    } else {
                        bad += 1;
                    }
                }
                _ => bad += 1,
            }
        }
        pass &= bad == 0;
        notes.push(format!("{mode:?}: {reduction}/100 by reduction"));
    }
    outcome(pass, notes.join("; "))
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let mut good = 0;
    for _ in 0..100 {
        let p = random_plane_graph(40, &mut rng);
        let mut all = true;
        for (variant, t) in [(Variant::S41, 1), (Variant::S42, 3)] {
            let m = random_matching(&p.graph, t, &mut rng);
            let r: AuditReport<Charge> = match audit_discharge(&p.graph, &p.rotation, &m, AuditOptions::new(variant)) {
                Ok(r) => r,
                Err(_) => {
                    all = false;
                    continue;
                }
            };
            all &= r.identities_hold() && r.failures_explained();
        }
        good += all as usize;
    }
    let ico = icosahedron();
    let opts = AuditOptions { variant: Variant::S41, reading: Reading::Corrected, delta: Some(17) };
    let r: AuditReport<Charge> = audit_discharge(&ico.graph, &ico.rotation, &EdgeSet::new(), opts).unwrap();
    let zero = (0..12).all(|v| r.ledger.vertex_balance(v) == Charge::from_integer(0));
    outcome(good == 100 && zero, format!("{good}/100 random plane graphs conserve charge; icosahedron balances zero: {zero}"))
}

/// Proper colourings of every edge from `[k]`, one per colour-permutation orbit.
fn total_colourings(g: &MultiGraph, k: u32) -> Vec<PartialEdgeColouring> {
    let mut out = Vec::new();
    for_each_precolouring(g, Palette::new(k).unwrap(), Shape::AnyProperSet, true, |c| {
        if c.len() == g.edge_count() {
            out.push(c.clone());
        }
        true
    });
    out
}

fn c11() -> Outcome {
    let spec = EnumSpec { bipartite_only: true, ..EnumSpec::new(6, 12, 2) };
    let graphs = enumerate_multigraphs(&spec);
    let per: Vec<(u64, u64, bool)> = graphs
        .par_iter()
        .map(|g| {
            let b = Bipartition::of(g).unwrap();
            let d = g.max_degree();
            let mut phis = vec![konig_colour(g, &b).unwrap()];
            if g.edge_count() <= 8 {
                phis = total_colourings(g, d as u32);
            }
            let ids: Vec<EdgeId> = g.edge_ids().collect();
            let (mut orientations, mut subsets, mut ok) = (0, 0, true);
            for phi in &phis {
                let o = galvin_orient(g, &b, phi).unwrap();
                orientations += 1;
                ok &= o.max_out_degree() < d.max(1);
                for mask in 0u32..(1 << ids.len()) {
                    let active: EdgeSet = (0..ids.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect();
                    subsets += 1;
                    ok &= kernel(&o, &active).is_some_and(|k| is_kernel(&o, &active, &k));
                    if ids.len() <= 6 {
                        ok &= !brute_force_kernels(&o, &active).is_empty();
                    }
                }
            }
            (orientations, subsets, ok)
        })
        .collect();
    let orientations: u64 = per.iter().map(|x| x.0).sum();
    let subsets: u64 = per.iter().map(|x| x.1).sum();
    let ok = per.iter().all(|x| x.2);
    outcome(ok, format!("{} graphs, {orientations} orientations, {subsets} induced sub-digraphs", graphs.len()))
}

fn c12() -> Outcome {
    let b = Bounds { n_max: 4, e_max: 7, mu_max: 2, jobs: jobs(), timed: false, up_to_colour_permutation: false, ..Bounds::default() };
    run_claim(Claim::Conj5_1, b)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("matching extension from [Δ+μ], n ≤ 4, μ ≤ 2, e ≤ 7", c1),
        ("subdivided stars s = 2..8: unsolvable at [s], solved at [s+1]", c2),
        ("diamond chains Δ = 4, 6: unsolvable at [Δ], solved at [Δ+1]", c3),
        ("bipartite extension from [Δ+k], k ≤ 2, e ≤ 8, μ ≤ 2", c4),
        ("bipartite f-choosability, e ≤ 8, 200 list assignments each", c5),
        ("subcubic matching extension from [4], e ≤ 10", c6),
        ("degree-list extension: exceptions and sweep e ≤ 8, μ ≤ 3, k ≤ 2", c7),
        ("Shannon triangles: χ′ = 3m = ⌊3Δ/2⌋ = ρ", c8),
        ("planar reductions at Δ 17..20, 100 instances per mode", c9),
        ("discharging identities on 100 plane graphs and the icosahedron", c10),
        ("Galvin orientations: kernels and out-degrees, ≤ 12 edges", c11),
        ("forbidden matchings avoided from [Δ+μ], n ≤ 4, μ ≤ 2, e ≤ 7", c12),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        println!("{} {:>2}  {name}  [{}] ({secs:.1}s)", if r.pass { "PASS" } else { "FAIL" }, i + 1, r.detail);
        failed += !r.pass as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
