use serde::{Deserialize, Serialize};

use crate::colouring::{validate_precolouring, ColourSet, ListAssignment, Palette, PartialEdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, MultiGraph};
use crate::solver::{extend as exact_extend, Method, SearchStats, SolveOutcome, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlanarMode {
    /// Precoloured matching, palette [Δ+1].
    MatchingDeltaPlus1,
    /// Precoloured distance-3 matching, palette [Δ].
    Distance3Delta,
}

impl PlanarMode {
    pub fn palette(self, delta: usize) -> usize {
        match self {
            PlanarMode::MatchingDeltaPlus1 => delta + 1,
            PlanarMode::Distance3Delta => delta,
        }
    }

    /// Largest degree sum of a removable edge.
    fn light_bound(self, delta: usize) -> usize {
        match self {
            PlanarMode::MatchingDeltaPlus1 => delta + 2,
            PlanarMode::Distance3Delta => delta + 1,
        }
    }

    pub fn check_set(self, g: &MultiGraph, m: &EdgeSet) -> Result<()> {
        let ok = match self {
            PlanarMode::MatchingDeltaPlus1 => g.is_matching(m),
            PlanarMode::Distance3Delta => g.is_distance_matching(m, 3)?,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!("precoloured set is not valid for {self:?}")))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReducibleConfig {
    LightEdge(EdgeId),
    /// Edges in cyclic order.
    EvenCycle(Vec<EdgeId>),
    BaseCase,
}

/// The auxiliary edges: outside `m`, joining a small vertex (degree 3, or
/// degree 2 and untouched by `m`) to a vertex of degree `delta`.
pub fn auxiliary_edges(g: &MultiGraph, m: &EdgeSet, mode: PlanarMode, delta: usize) -> Vec<EdgeId> {
    let touched: Vec<bool> = (0..g.vertex_count()).map(|v| g.incident_edges(v).any(|e| m.contains(e.id))).collect();
    let small = |v: usize| match mode {
        PlanarMode::MatchingDeltaPlus1 => g.degree(v) == 3,
        PlanarMode::Distance3Delta => g.degree(v) == 2 && !touched[v],
    };
    let mut out: Vec<EdgeId> = g
        .edges()
        .iter()
        .filter(|e| !m.contains(e.id))
        .filter(|e| {
            (small(e.u) && g.degree(e.v) == delta) || (small(e.v) && g.degree(e.u) == delta)
        })
        .map(|e| e.id)
        .collect();
    out.sort();
    out
}

/// First cycle met by a depth-first search that scans vertices and edges
/// in increasing order.
pub(crate) fn first_cycle(g: &MultiGraph, edges: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut inc: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); n];
    for &id in edges {
        let e = g.edge(id).ok()?;
        inc[e.u].push((id, e.v));
        inc[e.v].push((id, e.u));
    }
    let mut depth = vec![usize::MAX; n];
    let mut parent: Vec<Option<(EdgeId, usize)>> = vec![None; n];
    for root in 0..n {
        if depth[root] != usize::MAX || inc[root].is_empty() {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, i) = *top;
            if i == inc[v].len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let (id, w) = inc[v][i];
            if parent[v].is_some_and(|(p, _)| p == id) {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some((id, v));
                stack.push((w, 0));
            } else if depth[w] < depth[v] && stack.iter().any(|&(x, _)| x == w) {
                let mut cycle = vec![id];
                let mut x = v;
                while x != w {
                    let (pe, px) = parent[x].unwrap();
                    cycle.push(pe);
                    x = px;
                }
                return Some(cycle);
            }
        }
    }
    None
}

/// A light edge, else an even cycle among the auxiliary edges, else the
/// base case when every edge is precoloured. `delta` stays the maximum
/// degree of the original instance.
pub fn find_reducible(g: &MultiGraph, m: &EdgeSet, mode: PlanarMode, delta: usize) -> Option<ReducibleConfig> {
    let bound = mode.light_bound(delta);
    let mut edges: Vec<_> = g.edges().to_vec();
    edges.sort_by_key(|e| e.id);
    if let Some(e) = edges.iter().find(|e| !m.contains(e.id) && g.degree(e.u) + g.degree(e.v) <= bound) {
        return Some(ReducibleConfig::LightEdge(e.id));
    }
    let skip = match mode {
        PlanarMode::MatchingDeltaPlus1 => delta <= 3,
        PlanarMode::Distance3Delta => delta <= 2,
    };
    if !skip {
        if let Some(c) = first_cycle(g, &auxiliary_edges(g, m, mode, delta)) {
            return Some(ReducibleConfig::EvenCycle(c));
        }
    }
    if g.edge_ids().all(|e| m.contains(e)) {
        return Some(ReducibleConfig::BaseCase);
    }
    None
}

/// Proper colouring of an even cycle (edges in cyclic order) from lists of
/// size at least two.
pub fn colour_even_cycle_lists(g: &MultiGraph, cycle: &[EdgeId], l: &ListAssignment) -> Result<PartialEdgeColouring> {
    let k = cycle.len();
    if k < 2 || k % 2 == 1 {
        return Err(Error::Input(format!("cycle of length {k} is not even")));
    }
    for i in 0..k {
        let (a, b) = (g.edge(cycle[i])?, g.edge(cycle[(i + 1) % k])?);
        if !a.is_adjacent(b) {
            return Err(Error::Input("edges do not form a cycle".into()));
        }
    }
    let lists: Vec<ColourSet> =
        cycle.iter().map(|&e| l.get(e).ok_or_else(|| Error::Input(format!("edge {e} has no list")))).collect::<Result<_>>()?;
    if lists.iter().any(|s| s.len() < 2) {
        return Err(Error::Input("every list needs at least two colours".into()));
    }
    let mut col = vec![0; k];
    if lists.iter().all(|&s| s == lists[0]) {
        let a = lists[0].min().unwrap();
        let b = lists[0].iter().nth(1).unwrap();
        for (i, c) in col.iter_mut().enumerate() {
            *c = if i % 2 == 0 { a } else { b };
        }
    } else {
        let i = (0..k).find(|&i| !lists[i].difference(lists[(i + k - 1) % k]).is_empty()).unwrap();
        col[i] = lists[i].difference(lists[(i + k - 1) % k]).min().unwrap();
        for s in 1..k {
            let j = (i + s) % k;
            let prev = col[(j + k - 1) % k];
            let mut options = lists[j];
            options.remove(prev);
            if s == k - 1 {
                options.remove(col[i]);
            }
            col[j] = options.min().ok_or_else(|| Error::Internal("cycle colouring stuck".into()))?;
        }
    }
    Ok(cycle.iter().copied().zip(col).collect())
}

enum Step {
    Edge(EdgeId),
    Cycle(Vec<EdgeId>),
}

/// Extends `c` by peeling light edges and auxiliary even cycles, then
/// colouring them back in reverse order. Falls back to exact search if
/// neither configuration exists.
pub fn extend_planar(g: &MultiGraph, c: &PartialEdgeColouring, mode: PlanarMode) -> Result<SolveOutcome> {
    let delta = g.max_degree();
    let p = Palette::new(mode.palette(delta).max(1) as u32)?;
    validate_precolouring(g, c, p)?;
    let m = c.domain();
    mode.check_set(g, &m)?;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    let mut fallback = false;
    loop {
        match find_reducible(&cur, &m, mode, delta) {
            Some(ReducibleConfig::LightEdge(e)) => {
                cur.remove_edge(e)?;
                steps.push(Step::Edge(e));
            }
            Some(ReducibleConfig::EvenCycle(cy)) => {
                for &e in &cy {
                    cur.remove_edge(e)?;
                }
                steps.push(Step::Cycle(cy));
            }
            Some(ReducibleConfig::BaseCase) => break,
            None => {
                fallback = true;
                break;
            }
        }
    }
    let mut colouring = c.clone();
    let mut stats = SearchStats::default();
    if fallback {
        let out = exact_extend(&cur, c, p)?;
        stats = out.stats;
        if !out.is_solved() {
            return Ok(SolveOutcome { status: out.status, colouring: PartialEdgeColouring::new(), stats, method: Method::ExactFallback });
        }
        colouring = out.colouring;
    }
    let used = |col: &PartialEdgeColouring, e: EdgeId| -> Result<ColourSet> {
        let edge = g.edge(e)?;
        Ok(col.colours_at(g, edge.u).union(col.colours_at(g, edge.v)))
    };
    while let Some(step) = steps.pop() {
        match step {
            Step::Edge(e) => {
                let free = p.colours().difference(used(&colouring, e)?);
                let c = free.min().ok_or_else(|| Error::Internal(format!("no free colour for light edge {e}")))?;
                colouring.assign(e, c);
            }
            Step::Cycle(cy) => {
                let mut lists = ListAssignment::new();
                for &e in &cy {
                    lists.set(e, p.colours().difference(used(&colouring, e)?));
                }
                let part = colour_even_cycle_lists(g, &cy, &lists)?;
                colouring = colouring.merged(&part);
            }
        }
    }
    debug_assert!(crate::colouring::is_proper(g, &colouring));
    let method = if fallback { Method::ExactFallback } else { Method::Reduction };
    Ok(SolveOutcome { status: Status::Solved, colouring, stats, method })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_proper;
    use crate::planar::generate::wheel;

    fn set(cs: &[u32]) -> ColourSet {
        cs.iter().copied().collect()
    }

    fn cycle(n: usize) -> MultiGraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn reducible_examples() {
        let w = wheel(17).graph;
        let rim = w.edges().iter().find(|e| e.u != 0 && e.v != 0).unwrap().id;
        let first_light = find_reducible(&w, &EdgeSet::new(), PlanarMode::MatchingDeltaPlus1, 17);
        let Some(ReducibleConfig::LightEdge(e)) = first_light else { panic!() };
        let edge = w.edge(e).unwrap();
        assert!(w.degree(edge.u) + w.degree(edge.v) <= 19);
        assert!(w.edge(rim).is_ok());

        let single = MultiGraph::from_pairs(2, &[(0, 1)]).unwrap();
        let all: EdgeSet = single.edge_ids().collect();
        assert_eq!(find_reducible(&single, &all, PlanarMode::MatchingDeltaPlus1, 1), Some(ReducibleConfig::BaseCase));

        // K_{2,3} plus pendants: the degree-3 side has no light edges at Δ=3 in mode 2.
        let k4 = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_reducible(&k4, &EdgeSet::new(), PlanarMode::Distance3Delta, 3), None);
    }

    #[test]
    fn auxiliary_even_cycle_is_found() {
        // Two degree-4 hubs joined to two degree-3 vertices, each with one extra
        // pendant precoloured so only the auxiliary rule applies.
        let g = MultiGraph::from_pairs(
            8,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (0, 6), (0, 7), (1, 6), (1, 7)],
        )
        .unwrap();
        let m: EdgeSet = [EdgeId(4), EdgeId(5)].into_iter().collect();
        let aux = auxiliary_edges(&g, &m, PlanarMode::MatchingDeltaPlus1, 4);
        assert_eq!(aux, vec![EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]);
        assert_eq!(first_cycle(&g, &aux).map(|c| c.len()), Some(4));
    }

    #[test]
    fn even_cycle_lists() {
        let c4 = cycle(4);
        let ids: Vec<EdgeId> = c4.edge_ids().collect();
        let l = ListAssignment(ids.iter().map(|&e| (e, set(&[1, 2]))).collect());
        let col = colour_even_cycle_lists(&c4, &ids, &l).unwrap();
        assert_eq!(col.iter().map(|(_, c)| c).collect::<Vec<_>>(), vec![1, 2, 1, 2]);

        let l = ListAssignment(
            ids.iter().zip([set(&[1, 2]), set(&[2, 3]), set(&[3, 4]), set(&[4, 1])]).map(|(&e, s)| (e, s)).collect(),
        );
        let col = colour_even_cycle_lists(&c4, &ids, &l).unwrap();
        assert!(is_proper(&c4, &col));
        assert!(col.iter().all(|(e, c)| l.get(e).unwrap().contains(c)));

        let c6 = cycle(6);
        let ids6: Vec<EdgeId> = c6.edge_ids().collect();
        let l = ListAssignment(ids6.iter().map(|&e| (e, set(&[5, 9]))).collect());
        let col = colour_even_cycle_lists(&c6, &ids6, &l).unwrap();
        assert!(is_proper(&c6, &col));

        let c5 = cycle(5);
        let ids5: Vec<EdgeId> = c5.edge_ids().collect();
        let l = ListAssignment(ids5.iter().map(|&e| (e, set(&[1, 2]))).collect());
        assert!(colour_even_cycle_lists(&c5, &ids5, &l).is_err());

        let digon = MultiGraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        let l = ListAssignment([(EdgeId(0), set(&[1, 2])), (EdgeId(1), set(&[2, 3]))].into());
        let col = colour_even_cycle_lists(&digon, &[EdgeId(0), EdgeId(1)], &l).unwrap();
        assert!(is_proper(&digon, &col));
    }

    #[test]
    fn wheel_extensions() {
        let w = wheel(17).graph;
        let rim: Vec<EdgeId> = w.edges().iter().filter(|e| e.u != 0 && e.v != 0).map(|e| e.id).collect();
        let pre: PartialEdgeColouring = [(rim[0], 5), (rim[4], 5), (rim[8], 18)].into_iter().collect();
        let out = extend_planar(&w, &pre, PlanarMode::MatchingDeltaPlus1).unwrap();
        assert_eq!(out.method, Method::Reduction);
        assert!(is_proper(&w, &out.colouring));
        assert_eq!(out.colouring.len(), w.edge_count());

        let w20 = wheel(20).graph;
        let rim: Vec<EdgeId> = w20.edges().iter().filter(|e| e.u != 0 && e.v != 0).map(|e| e.id).collect();
        let pre: PartialEdgeColouring = [(rim[0], 1)].into_iter().collect();
        let out = extend_planar(&w20, &pre, PlanarMode::Distance3Delta).unwrap();
        assert!(out.is_solved() && is_proper(&w20, &out.colouring));
        assert!(out.colouring.iter().all(|(_, c)| c <= 20));

        let k4 = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let pre: PartialEdgeColouring = [(EdgeId(0), 1)].into_iter().collect();
        let out = extend_planar(&k4, &pre, PlanarMode::MatchingDeltaPlus1).unwrap();
        assert!(out.is_solved() && is_proper(&k4, &out.colouring));

        let bad: PartialEdgeColouring = [(rim[0], 1), (rim[1], 2)].into_iter().collect();
        assert!(extend_planar(&w20, &bad, PlanarMode::Distance3Delta).is_err());
    }
}
