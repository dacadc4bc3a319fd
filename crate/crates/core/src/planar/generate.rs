//! Plane graphs with their rotation systems: wheels, the icosahedron,
//! stacked triangulations, a hub-heavy variant, and random sparsified ones.

use rand::seq::SliceRandom;
use rand::Rng;

use super::rotation::RotationSystem;
use crate::graph::MultiGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    pub graph: MultiGraph,
    pub rotation: RotationSystem,
}

impl PlaneGraph {
    fn from_faces(n: usize, faces: &[Vec<usize>]) -> Self {
        let (graph, rotation) = RotationSystem::from_faces(n, faces).expect("generated faces are consistent");
        PlaneGraph { graph, rotation }
    }
}

/// Hub 0 joined to the cycle 1..=rim.
pub fn wheel(rim: usize) -> PlaneGraph {
    assert!(rim >= 3);
    let mut faces: Vec<Vec<usize>> = (1..=rim).map(|i| vec![0, i, i % rim + 1]).collect();
    faces.push((1..=rim).rev().collect());
    PlaneGraph::from_faces(rim + 1, &faces)
}

pub fn icosahedron() -> PlaneGraph {
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), low(i), up(i + 1)]);
        faces.push(vec![up(i + 1), low(i), low(i + 1)]);
        faces.push(vec![11, low(i + 1), low(i)]);
    }
    PlaneGraph::from_faces(12, &faces)
}

/// Splits triangular face `i` by a new vertex `x`.
fn stack(faces: &mut Vec<Vec<usize>>, i: usize, x: usize) {
    let f = faces.swap_remove(i);
    let (a, b, c) = (f[0], f[1], f[2]);
    faces.push(vec![a, b, x]);
    faces.push(vec![b, c, x]);
    faces.push(vec![c, a, x]);
}

/// Triangle with `n − 3` vertices inserted into random faces.
pub fn stacked_triangulation<R: Rng>(n: usize, rng: &mut R) -> PlaneGraph {
    assert!(n >= 3);
    let mut faces = vec![vec![0, 1, 2], vec![0, 2, 1]];
    for x in 3..n {
        let i = rng.gen_range(0..faces.len());
        stack(&mut faces, i, x);
    }
    PlaneGraph::from_faces(n, &faces)
}

/// A wheel grown by stacking until the hub has degree `delta`, then
/// further stacking away from the hub while degrees stay at most 7.
pub fn hub_stacked<R: Rng>(delta: usize, extra: usize, rng: &mut R) -> PlaneGraph {
    assert!(delta >= 6);
    let rim = rng.gen_range(delta / 2..=delta);
    let mut faces: Vec<Vec<usize>> = (1..=rim).map(|i| vec![0, i, i % rim + 1]).collect();
    faces.push((1..=rim).rev().collect());
    let mut deg = vec![3; rim + 1];
    deg[0] = rim;
    let mut n = rim + 1;
    while deg[0] < delta {
        let hub_faces: Vec<usize> = (0..faces.len()).filter(|&i| faces[i].len() == 3 && faces[i].contains(&0)).collect();
        let i = *hub_faces.choose(rng).unwrap();
        for &v in &faces[i] {
            deg[v] += 1;
        }
        stack(&mut faces, i, n);
        deg.push(3);
        n += 1;
    }
    for _ in 0..extra {
        let open: Vec<usize> = (0..faces.len())
            .filter(|&i| faces[i].len() == 3 && faces[i].iter().all(|&v| v != 0 && deg[v] < 7))
            .collect();
        let Some(&i) = open.choose(rng) else { break };
        for &v in &faces[i] {
            deg[v] += 1;
        }
        stack(&mut faces, i, n);
        deg.push(3);
        n += 1;
    }
    PlaneGraph::from_faces(n, &faces)
}

/// Stacked triangulation thinned by random edge deletions that keep it
/// connected, then decorated with pendant vertices.
pub fn random_plane_graph<R: Rng>(max_vertices: usize, rng: &mut R) -> PlaneGraph {
    assert!(max_vertices >= 4);
    let core = rng.gen_range(3..=max_vertices - 1);
    let PlaneGraph { mut graph, mut rotation } = stacked_triangulation(core, rng);
    let deletions = rng.gen_range(0..=graph.edge_count() / 2);
    for _ in 0..deletions {
        let ids: Vec<_> = graph.edge_ids().collect();
        let e = *ids.choose(rng).unwrap();
        let mut trial = graph.clone();
        trial.remove_edge(e).unwrap();
        if trial.is_connected() && (0..trial.vertex_count()).all(|v| trial.degree(v) > 0) {
            graph = trial;
            rotation.remove_edge(e);
        }
    }
    let pendants = rng.gen_range(0..=max_vertices - core);
    for _ in 0..pendants {
        let v = rng.gen_range(0..graph.vertex_count());
        let x = graph.add_vertex();
        let e = graph.add_edge(v, x).unwrap();
        let at = rng.gen_range(0..=rotation.around[v].len());
        rotation.around[v].insert(at, e);
        rotation.around.push(vec![e]);
    }
    PlaneGraph { graph, rotation }
}
