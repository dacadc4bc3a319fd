use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, CanonicalCode};
use crate::colouring::{Palette, PartialEdgeColouring};
use crate::graph::{EdgeSet, MultiGraph};

/// Bounds for [`enumerate_multigraphs`]. Graphs never have isolated
/// vertices, so `n` counts the vertices that carry edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub e_max: usize,
    pub mu_max: usize,
    pub max_degree: Option<usize>,
    pub connected_only: bool,
    pub bipartite_only: bool,
}

impl EnumSpec {
    pub fn new(n_max: usize, e_max: usize, mu_max: usize) -> Self {
        EnumSpec { n_min: 2, n_max, e_max, mu_max, max_degree: None, connected_only: true, bipartite_only: false }
    }

    fn admits(&self, g: &MultiGraph) -> bool {
        g.vertex_count() <= self.n_max
            && g.max_multiplicity() <= self.mu_max
            && self.max_degree.is_none_or(|d| g.max_degree() <= d)
            && (!self.bipartite_only || g.is_bipartite())
    }
}

/// Every multigraph within `spec`, one per isomorphism class, ordered by
/// edge count and then canonical code. Each layer is grown from the
/// previous one by adding an edge, so every bound must be closed under
/// deleting edges (they all are).
pub fn enumerate_multigraphs(spec: &EnumSpec) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    if spec.n_max < 2 || spec.e_max == 0 || spec.mu_max == 0 || spec.max_degree == Some(0) {
        return out;
    }
    let mut layer: BTreeMap<CanonicalCode, MultiGraph> = BTreeMap::new();
    let k2 = MultiGraph::from_pairs(2, &[(0, 1)]).unwrap();
    let (g, code) = canonical_form(&k2);
    layer.insert(code, g);
    for e in 1..=spec.e_max {
        let mut next = BTreeMap::new();
        for g in layer.values() {
            if e < spec.e_max {
                for child in children(g, spec) {
                    if spec.admits(&child) {
                        let (c, code) = canonical_form(&child);
                        next.entry(code).or_insert(c);
                    }
                }
            }
        }
        out.extend(layer.into_values().filter(|g| g.vertex_count() >= spec.n_min));
        layer = next;
    }
    out
}

fn children(g: &MultiGraph, spec: &EnumSpec) -> Vec<MultiGraph> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let room = |v: usize| spec.max_degree.is_none_or(|d| g.degree(v) < d);
    for u in 0..n {
        for v in u + 1..n {
            if room(u) && room(v) && g.multiplicity(u, v) < spec.mu_max {
                let mut h = g.clone();
                h.add_edge(u, v).unwrap();
                out.push(h);
            }
        }
        if n < spec.n_max && room(u) {
            let mut h = g.clone();
            let w = h.add_vertex();
            h.add_edge(u, w).unwrap();
            out.push(h);
        }
    }
    if !spec.connected_only && n + 2 <= spec.n_max {
        let mut h = g.clone();
        let a = h.add_vertex();
        let b = h.add_vertex();
        h.add_edge(a, b).unwrap();
        out.push(h);
    }
    out
}

/// Which precoloured edge sets to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    AnyMatching,
    /// Pairwise line-graph distance greater than `t`.
    DistanceT(usize),
    AnyProperSet,
    /// At most `k` chosen edges at every vertex.
    MaxVertexDegree(usize),
}

/// All edge sets of the given shape, including the empty set.
pub fn precolouring_sets(g: &MultiGraph, shape: Shape) -> Vec<EdgeSet> {
    let m = g.edge_count();
    let far: Vec<Vec<bool>> = match shape {
        Shape::DistanceT(t) => {
            let ids: Vec<_> = g.edge_ids().collect();
            (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| i == j || g.edge_distance(ids[i], ids[j]).map(|d| d.exceeds(t)).unwrap_or(false))
                        .collect()
                })
                .collect()
        }
        _ => Vec::new(),
    };
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut load = vec![0usize; g.vertex_count()];
    sets_rec(g, shape, &far, 0, &mut chosen, &mut load, &mut out);
    out
}

fn sets_rec(
    g: &MultiGraph,
    shape: Shape,
    far: &[Vec<bool>],
    i: usize,
    chosen: &mut Vec<usize>,
    load: &mut Vec<usize>,
    out: &mut Vec<EdgeSet>,
) {
    if i == g.edge_count() {
        out.push(chosen.iter().map(|&p| g.edges()[p].id).collect());
        return;
    }
    sets_rec(g, shape, far, i + 1, chosen, load, out);
    let e = g.edges()[i];
    let ok = match shape {
        Shape::AnyMatching => load[e.u] == 0 && load[e.v] == 0,
        Shape::DistanceT(_) => chosen.iter().all(|&p| far[p][i]),
        Shape::AnyProperSet => true,
        Shape::MaxVertexDegree(k) => load[e.u] < k && load[e.v] < k,
    };
    if ok {
        chosen.push(i);
        load[e.u] += 1;
        load[e.v] += 1;
        sets_rec(g, shape, far, i + 1, chosen, load, out);
        load[e.u] -= 1;
        load[e.v] -= 1;
        chosen.pop();
    }
}

/// Calls `f` on every proper precolouring of every set of `shape` from
/// `p`, stopping early when `f` returns false. With
/// `up_to_colour_permutation` only restricted-growth colourings are
/// produced: the lexicographically least member of each orbit. Returns
/// the number of colourings visited.
pub fn for_each_precolouring<F>(g: &MultiGraph, p: Palette, shape: Shape, up_to_colour_permutation: bool, mut f: F) -> u64
where
    F: FnMut(&PartialEdgeColouring) -> bool,
{
    let mut visited = 0;
    for s in precolouring_sets(g, shape) {
        let edges: Vec<_> = s.iter().map(|id| *g.edge(id).unwrap()).collect();
        let mut c = PartialEdgeColouring::new();
        if !colour_rec(&edges, 0, 0, p.size(), up_to_colour_permutation, &mut c, &mut visited, &mut f) {
            break;
        }
    }
    visited
}

#[allow(clippy::too_many_arguments)]
fn colour_rec<F>(
    edges: &[crate::graph::Edge],
    i: usize,
    used: u32,
    k: u32,
    rgs: bool,
    c: &mut PartialEdgeColouring,
    visited: &mut u64,
    f: &mut F,
) -> bool
where
    F: FnMut(&PartialEdgeColouring) -> bool,
{
    if i == edges.len() {
        *visited += 1;
        return f(c);
    }
    let top = if rgs { (used + 1).min(k) } else { k };
    for colour in 1..=top {
        if edges[..i].iter().any(|e| e.is_adjacent(&edges[i]) && c.get(e.id) == Some(colour)) {
            continue;
        }
        c.assign(edges[i].id, colour);
        let ok = colour_rec(edges, i + 1, used.max(colour), k, rgs, c, visited, f);
        c.unassign(edges[i].id);
        if !ok {
            return false;
        }
    }
    true
}

pub fn enumerate_precolourings(
    g: &MultiGraph,
    p: Palette,
    shape: Shape,
    up_to_colour_permutation: bool,
) -> Vec<PartialEdgeColouring> {
    let mut out = Vec::new();
    for_each_precolouring(g, p, shape, up_to_colour_permutation, |c| {
        out.push(c.clone());
        true
    });
    out
}
