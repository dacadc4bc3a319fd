//! Worked examples exercised through the public API, plus cross-module
//! properties checked against the exact solver.

use edgeext::colouring::{is_proper, reduce_to_lists, respects_lists};
use edgeext::gallai::{degree_list_colour, extend_gallai, extend_subcubic, is_gallai_tree, DegreeChoice, ExceptionReport};
use edgeext::instances::{compute_rho, enumerate_multigraphs, generate, EnumSpec, FamilySpec};
use edgeext::kernel::{extend_bipartite, extend_shannon, list_colour_bipartite, Bipartition};
use edgeext::planar::generate::wheel;
use edgeext::planar::{
    colour_even_cycle_lists, extend_planar, find_reducible, trace_faces, PlanarMode, ReducibleConfig, RotationSystem,
};
use edgeext::solver::{avoid, chromatic_index, extend, solve_list, vizing_colour};
use edgeext::{Charge, ColourSet, EdgeId, EdgeSet, ListAssignment, Method, MultiGraph, Palette, PartialEdgeColouring};
use proptest::prelude::*;

fn cycle(n: usize) -> MultiGraph {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MultiGraph::from_pairs(n, &pairs).unwrap()
}

fn colours(pairs: &[(u32, u32)]) -> PartialEdgeColouring {
    pairs.iter().map(|&(e, c)| (EdgeId(e), c)).collect()
}

fn set(cs: &[u32]) -> ColourSet {
    cs.iter().copied().collect()
}

fn lists(g: &MultiGraph, ls: &[&[u32]]) -> ListAssignment {
    let mut l = ListAssignment::new();
    for (e, cs) in g.edge_ids().zip(ls) {
        l.set(e, set(cs));
    }
    l
}

fn petersen() -> MultiGraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
        pairs.push((i, 5 + i));
    }
    MultiGraph::from_pairs(10, &pairs).unwrap()
}

#[test]
fn star_is_sharp_for_matching_extension() {
    let star = generate(FamilySpec::SubdividedStar { s: 5 }).unwrap();
    let g = &star.graph;
    let pend = star.precolouring.domain();
    assert!(g.is_distance_matching(&pend, 2).unwrap());

    let (reduced, l) = reduce_to_lists(g, &star.precolouring, Palette::new(5).unwrap()).unwrap();
    assert_eq!(reduced.edge_count(), 5);
    assert!(l.iter().all(|(_, s)| s == set(&[2, 3, 4, 5])));
    assert!(!solve_list(&reduced, &l).unwrap().is_solved());

    let ok = extend(g, &star.precolouring, Palette::new(6).unwrap()).unwrap();
    assert!(ok.is_solved() && is_proper(g, &ok.colouring));
    let b = Bipartition::of(g).unwrap();
    let k = extend_bipartite(g, &b, &star.precolouring, 1).unwrap();
    assert!(k.is_solved() && is_proper(g, &k.colouring));
}

#[test]
fn chain_needs_one_extra_colour() {
    let chain = generate(FamilySpec::ChainBlocks { delta: 6, blocks: 2 }).unwrap();
    let g = &chain.graph;
    assert!(!extend(g, &chain.precolouring, Palette::new(6).unwrap()).unwrap().is_solved());
    let b = Bipartition::of(g).unwrap();
    let out = extend_bipartite(g, &b, &chain.precolouring, 1).unwrap();
    assert!(out.is_solved() && is_proper(g, &out.colouring));
    assert!(out.colouring.max_colour().unwrap() <= 7);
}

#[test]
fn shannon_triangle_examples() {
    let g = generate(FamilySpec::ShannonTriangle { m1: 2, m2: 2, m3: 2 }).unwrap().graph;
    let s = g.degree_stats();
    assert_eq!((s.delta, g.max_multiplicity(), s.line_delta), (4, 2, 5));
    assert_eq!(chromatic_index(&g).unwrap(), 6);
    assert_eq!(compute_rho::<Charge>(&g).unwrap(), Charge::from_integer(6));
    assert!(vizing_colour(&g).colour_count() <= 6);
    let out = extend_shannon(&g, &colours(&[(0, 1)]), 1).unwrap();
    assert!(out.is_solved() && is_proper(&g, &out.colouring));

    let t = generate(FamilySpec::ShannonTriangle { m1: 1, m2: 1, m3: 1 }).unwrap().graph;
    let out = extend_shannon(&t, &colours(&[(0, 1)]), 1).unwrap();
    assert!(out.is_solved() && out.colouring.max_colour().unwrap() <= 3);
}

#[test]
fn list_instances() {
    let c4 = cycle(4);
    assert!(solve_list(&c4, &ListAssignment::uniform(&c4, Palette::new(2).unwrap())).unwrap().is_solved());
    let c5 = cycle(5);
    assert!(!solve_list(&c5, &ListAssignment::uniform(&c5, Palette::new(2).unwrap())).unwrap().is_solved());
    let star = MultiGraph::from_pairs(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
    let l = lists(&star, &[&[2, 3, 4, 5][..]; 5]);
    assert!(!solve_list(&star, &l).unwrap().is_solved());
}

#[test]
fn avoidance_examples() {
    let k13 = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let out = avoid(&k13, &colours(&[(0, 1), (1, 2), (2, 3)]), Palette::new(3).unwrap()).unwrap();
    assert!(out.is_solved());
    for (i, e) in k13.edge_ids().enumerate() {
        assert_ne!(out.colouring.get(e), Some(i as u32 + 1));
    }
    let tri = cycle(3);
    assert!(avoid(&tri, &colours(&[(0, 1)]), Palette::new(3).unwrap()).unwrap().is_solved());
}

#[test]
fn bipartite_lists_from_a_larger_palette() {
    let mut k33 = MultiGraph::new(6);
    for a in 0..3 {
        for b in 3..6 {
            k33.add_edge(a, b).unwrap();
        }
    }
    let b = Bipartition::of(&k33).unwrap();
    let pool: [&[u32]; 9] =
        [&[1, 2, 3], &[4, 5, 6], &[1, 3, 5], &[2, 4, 6], &[1, 2, 6], &[3, 4, 5], &[1, 4, 5], &[2, 3, 6], &[1, 5, 6]];
    let l = lists(&k33, &pool);
    let out = list_colour_bipartite(&k33, &b, &l).unwrap();
    assert!(out.is_solved() && respects_lists(&k33, &out.colouring, &l) && is_proper(&k33, &out.colouring));
    assert_eq!(out.method, Method::Kernel);
}

#[test]
fn gallai_examples() {
    assert!(is_gallai_tree(&cycle(5)).unwrap());
    assert!(!is_gallai_tree(&cycle(4)).unwrap());
    let c5 = cycle(5);
    match degree_list_colour(&c5, &[set(&[1, 2]); 5]).unwrap() {
        DegreeChoice::Certificate(_) => {}
        other => panic!("expected certificate, got {other:?}"),
    }
    let mut l = vec![set(&[1, 2]); 5];
    l[0] = set(&[1, 2, 3]);
    match degree_list_colour(&c5, &l).unwrap() {
        DegreeChoice::Colouring(c) => {
            for i in 0..5 {
                assert_ne!(c[i], c[(i + 1) % 5]);
                assert!(l[i].contains(c[i]));
            }
        }
        other => panic!("expected colouring, got {other:?}"),
    }

    let r = extend_gallai(&c5, &PartialEdgeColouring::new(), 0).unwrap();
    assert_eq!(r.exception, Some(ExceptionReport::OddCycleK0 { length: 5 }));
    assert!(!r.outcome.is_solved());

    let p4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let r = extend_gallai(&p4, &colours(&[(0, 1)]), 1).unwrap();
    assert!(r.outcome.is_solved() && r.exception.is_none());
}

#[test]
fn subcubic_examples() {
    let k4 = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(extend_subcubic(&k4, &colours(&[(0, 1)])).unwrap().is_solved());
    assert!(extend_subcubic(&cycle(5), &colours(&[(0, 4)])).unwrap().is_solved());

    let p = petersen();
    let spokes: Vec<EdgeId> = p.edges().iter().filter(|e| e.v == e.u + 5).map(|e| e.id).collect();
    for pattern in 0u32..4u32.pow(5) {
        let c: PartialEdgeColouring =
            spokes.iter().enumerate().map(|(i, &e)| (e, pattern / 4u32.pow(i as u32) % 4 + 1)).collect();
        let out = extend_subcubic(&p, &c).unwrap();
        assert!(out.is_solved() && is_proper(&p, &out.colouring), "pattern {pattern}");
    }
}

#[test]
fn faces_and_planar_reductions() {
    let (k4, r) = RotationSystem::from_faces(4, &[vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![0, 2, 3]]).unwrap();
    let faces = trace_faces(&k4, &r).unwrap();
    assert_eq!(faces.len(), 4);
    assert_eq!(faces.euler_characteristic(&k4), 2);

    let w17 = wheel(17).graph;
    match find_reducible(&w17, &EdgeSet::new(), PlanarMode::MatchingDeltaPlus1, 17) {
        Some(ReducibleConfig::LightEdge(e)) => {
            let e = w17.edge(e).unwrap();
            assert!(e.u != 0 && e.v != 0);
        }
        other => panic!("expected a light rim edge, got {other:?}"),
    }
    let rim: Vec<EdgeId> = w17.edges().iter().filter(|e| e.u != 0 && e.v != 0).map(|e| e.id).collect();
    let m = colours(&[(rim[0].0, 1), (rim[4].0, 2), (rim[8].0, 18)]);
    let out = extend_planar(&w17, &m, PlanarMode::MatchingDeltaPlus1).unwrap();
    assert!(out.is_solved() && is_proper(&w17, &out.colouring));
    assert_eq!(out.method, Method::Reduction);

    let c4 = cycle(4);
    let cyc: Vec<EdgeId> = c4.edge_ids().collect();
    let l = lists(&c4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]]);
    let c = colour_even_cycle_lists(&c4, &cyc, &l).unwrap();
    assert!(is_proper(&c4, &c) && respects_lists(&c4, &c, &l) && c.len() == 4);
    let c5 = cycle(5);
    let odd: Vec<EdgeId> = c5.edge_ids().collect();
    assert!(colour_even_cycle_lists(&c5, &odd, &ListAssignment::uniform(&c5, Palette::new(2).unwrap())).is_err());
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_multigraphs(&EnumSpec { n_min: 2, ..EnumSpec::new(2, 2, 2) }).len(), 2);
    let simple3: Vec<MultiGraph> =
        enumerate_multigraphs(&EnumSpec::new(3, 3, 1)).into_iter().filter(|g| g.vertex_count() == 3).collect();
    assert_eq!(simple3.len(), 2);
}

/// Small multigraphs from a list of vertex pairs, loops dropped.
fn arb_multigraph(max_n: usize, max_e: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 1..=max_e).prop_map(move |pairs| {
            let mut g = MultiGraph::new(n);
            for (u, v) in pairs {
                if u != v && g.multiplicity(u, v) < 3 {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vizing_within_bound(g in arb_multigraph(6, 10)) {
        let c = vizing_colour(&g);
        prop_assert!(is_proper(&g, &c));
        prop_assert_eq!(c.len(), g.edge_count());
        prop_assert!(c.max_colour().unwrap_or(0) as usize <= g.max_degree() + g.max_multiplicity());
    }

    #[test]
    fn chromatic_index_respects_lower_bounds(g in arb_multigraph(6, 9)) {
        prop_assume!(g.vertex_count() >= 3 && g.edge_count() > 0);
        let chi = chromatic_index(&g).unwrap();
        let rho: Charge = compute_rho(&g).unwrap();
        prop_assert!(chi as usize >= g.max_degree());
        prop_assert!(Charge::from_integer(chi as i64) >= rho.ceil());
        prop_assert!(chi as usize <= 3 * g.max_degree() / 2);
    }

    #[test]
    fn extension_merges_the_precolouring(g in arb_multigraph(6, 9), seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let p = Palette::new((g.max_degree() + g.max_multiplicity()) as u32).unwrap();
        let mut c = PartialEdgeColouring::new();
        let mut used = EdgeSet::new();
        for (i, e) in g.edges().iter().enumerate() {
            if seed >> (i % 64) & 1 == 1 {
                let mut trial = used.clone();
                trial.insert(e.id);
                if g.is_matching(&trial) {
                    used = trial;
                    c.assign(e.id, (seed >> 8) as u32 % p.size() + 1);
                }
            }
        }
        let out = extend(&g, &c, p).unwrap();
        prop_assert!(out.is_solved());
        prop_assert!(is_proper(&g, &out.colouring));
        for (e, col) in c.iter() {
            prop_assert_eq!(out.colouring.get(e), Some(col));
        }
    }
}
