//! Loopless multigraphs with stable edge identities.
//!
//! Edges keep their [`EdgeId`] for life: deleting edges never renames or
//! reorders the survivors, so colourings keyed by id stay valid across
//! subgraph operations.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    /// Parallel edges count as adjacent.
    pub fn is_adjacent(&self, f: &Edge) -> bool {
        self.id != f.id && (f.touches(self.u) || f.touches(self.v))
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A set of edge ids. Ordered so that iteration is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(pub BTreeSet<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: EdgeId) -> bool {
        self.0.insert(id)
    }

    pub fn remove(&mut self, id: EdgeId) -> bool {
        self.0.remove(&id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    /// Fails on the first id that `g` does not contain.
    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        match self.iter().find(|&id| !g.contains(id)) {
            Some(id) => Err(Error::UnknownEdge(id)),
            None => Ok(()),
        }
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub delta: usize,
    pub mu: usize,
    pub line_delta: usize,
}

/// Line-graph distance between two edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    /// The edges lie in different components.
    Infinite,
}

impl Distance {
    pub fn exceeds(self, t: usize) -> bool {
        match self {
            Distance::Finite(d) => d > t,
            Distance::Infinite => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
    pos: HashMap<EdgeId, usize>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            n,
            edges: Vec::new(),
            pos: HashMap::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Builds a graph whose edge ids are `0, 1, ...` in the given order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (EdgeId, usize, usize)>) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for (id, u, v) in edges {
            g.push_edge(id, u, v)?;
        }
        Ok(g)
    }

    /// Adds an edge with the next free id (one past the largest id so far).
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<EdgeId> {
        let id = EdgeId(self.edges.iter().map(|e| e.id.0 + 1).max().unwrap_or(0));
        self.push_edge(id, u, v)?;
        Ok(id)
    }

    pub fn push_edge(&mut self, id: EdgeId, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.pos.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let p = self.edges.len();
        self.edges.push(Edge { id, u, v });
        self.pos.insert(id, p);
        self.incidence[u].push(p);
        self.incidence[v].push(p);
        Ok(())
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.incidence.push(Vec::new());
        self.n - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.pos.contains_key(&id)
    }

    pub fn position(&self, id: EdgeId) -> Option<usize> {
        self.pos.get(&id).copied()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.position(id).map(|p| &self.edges[p]).ok_or(Error::UnknownEdge(id))
    }

    /// Positions (indices into [`edges`](Self::edges)) of edges at `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.incidence[v].iter().map(|&p| &self.edges[p])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.incidence[u].iter().filter(|&&p| self.edges[p].touches(v)).count()
    }

    pub fn max_multiplicity(&self) -> usize {
        let mut counts: HashMap<(usize, usize), usize> = HashMap::new();
        for e in &self.edges {
            *counts.entry(e.key()).or_default() += 1;
        }
        counts.values().copied().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// Sorted, deduplicated neighbour list of `v`.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incident_edges(v).map(|e| e.other(v)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Positions of the edges adjacent to the edge at position `p`.
    pub fn adjacent_positions(&self, p: usize) -> Vec<usize> {
        let e = self.edges[p];
        let mut out: Vec<usize> = self.incidence[e.u]
            .iter()
            .chain(self.incidence[e.v].iter())
            .copied()
            .filter(|&q| q != p)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Degree of the edge at position `p` in the line graph; a parallel
    /// edge is one neighbour, not two.
    pub fn line_degree(&self, p: usize) -> usize {
        let e = self.edges[p];
        self.degree(e.u) + self.degree(e.v) - 1 - self.multiplicity(e.u, e.v)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats {
            delta: self.max_degree(),
            mu: self.max_multiplicity(),
            line_delta: (0..self.edges.len()).map(|p| self.line_degree(p)).max().unwrap_or(0),
        }
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<Edge> {
        let p = self.position(id).ok_or(Error::UnknownEdge(id))?;
        let e = self.edges.remove(p);
        self.reindex();
        Ok(e)
    }

    /// Copy of `self` without the listed edges; survivors keep ids and order.
    pub fn without(&self, drop: &EdgeSet) -> MultiGraph {
        self.filter_edges(|e| !drop.contains(e.id))
    }

    /// Subgraph on the same vertex set keeping only edges in `keep`.
    pub fn restricted_to(&self, keep: &EdgeSet) -> MultiGraph {
        self.filter_edges(|e| keep.contains(e.id))
    }

    fn filter_edges(&self, pred: impl Fn(&Edge) -> bool) -> MultiGraph {
        let mut g = MultiGraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|e| pred(e)).collect(),
            pos: HashMap::new(),
            incidence: Vec::new(),
        };
        g.reindex();
        g
    }

    fn reindex(&mut self) {
        self.pos.clear();
        self.incidence = vec![Vec::new(); self.n];
        for (p, e) in self.edges.iter().enumerate() {
            self.pos.insert(e.id, p);
            self.incidence[e.u].push(p);
            self.incidence[e.v].push(p);
        }
    }

    /// Drops isolated vertices, relabelling the rest in increasing order.
    /// Returns the compacted graph and the old index of each new vertex.
    pub fn compact(&self) -> (MultiGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_of[v] = i;
        }
        let g = MultiGraph::from_edges(
            keep.len(),
            self.edges.iter().map(|e| (e.id, new_of[e.u], new_of[e.v])),
        )
        .expect("relabelling preserves validity");
        (g, keep)
    }

    /// Component index per vertex (isolated vertices get their own).
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for e in self.incident_edges(x) {
                    let y = e.other(x);
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Edge sets of the components that contain at least one edge, ordered by
    /// their smallest edge position.
    pub fn edge_components(&self) -> Vec<EdgeSet> {
        let (label, count) = self.component_labels();
        let mut sets = vec![EdgeSet::new(); count];
        let mut order = Vec::new();
        for e in &self.edges {
            let c = label[e.u];
            if sets[c].is_empty() {
                order.push(c);
            }
            sets[c].insert(e.id);
        }
        order.into_iter().map(|c| std::mem::take(&mut sets[c])).collect()
    }

    /// True when all edges lie in one component (isolated vertices ignored).
    pub fn is_connected(&self) -> bool {
        self.edge_components().len() <= 1
    }

    /// Proper 2-colouring of the vertices (`false`/`true`), if any.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for e in self.incident_edges(x) {
                    let y = e.other(x);
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Vertex `v` becomes `perm[v]`. Edge ids are kept.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        MultiGraph::from_edges(self.n, self.edges.iter().map(|e| (e.id, perm[e.u], perm[e.v])))
            .expect("permutation preserves validity")
    }

    /// Simple graph on the edges of `self`: vertex `i` is `edges()[i]`.
    pub fn line_graph(&self) -> LineGraph {
        let m = self.edges.len();
        let mut l = MultiGraph::new(m);
        for i in 0..m {
            for j in i + 1..m {
                if self.edges[i].is_adjacent(&self.edges[j]) {
                    l.add_edge(i, j).expect("line graph edges are valid");
                }
            }
        }
        LineGraph { graph: l, vertex_edge: self.edge_ids().collect() }
    }

    /// Line-graph distance by breadth-first search over shared endpoints.
    pub fn edge_distance(&self, e: EdgeId, f: EdgeId) -> Result<Distance> {
        let start = self.position(e).ok_or(Error::UnknownEdge(e))?;
        let goal = self.position(f).ok_or(Error::UnknownEdge(f))?;
        if start == goal {
            return Ok(Distance::Finite(0));
        }
        let mut dist = vec![usize::MAX; self.edges.len()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for q in self.adjacent_positions(p) {
                if dist[q] == usize::MAX {
                    dist[q] = dist[p] + 1;
                    if q == goal {
                        return Ok(Distance::Finite(dist[q]));
                    }
                    queue.push_back(q);
                }
            }
        }
        Ok(Distance::Infinite)
    }

    /// Every pair in `s` has distance greater than `t`.
    pub fn is_distance_matching(&self, s: &EdgeSet, t: usize) -> Result<bool> {
        s.validate(self)?;
        if t == 0 {
            return Ok(true);
        }
        let ids: Vec<EdgeId> = s.iter().collect();
        for (i, &e) in ids.iter().enumerate() {
            for &f in &ids[i + 1..] {
                if !self.edge_distance(e, f)?.exceeds(t) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// No two edges of `s` share an endpoint.
    pub fn is_matching(&self, s: &EdgeSet) -> bool {
        let mut seen = vec![false; self.n];
        for id in s.iter() {
            let Ok(e) = self.edge(id) else { return false };
            if seen[e.u] || seen[e.v] {
                return false;
            }
            seen[e.u] = true;
            seen[e.v] = true;
        }
        true
    }
}

/// Line graph together with the edge each of its vertices stands for.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: MultiGraph,
    pub vertex_edge: Vec<EdgeId>,
}
