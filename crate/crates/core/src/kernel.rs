//! Bipartite machinery: König colouring, Galvin orientations, kernels,
//! kernel-based list colouring, and the bipartite and Shannon-bound
//! extenders.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::colouring::{
    is_proper, max_precoloured_degree_vertex, reduce_to_lists, validate_precolouring, Colour, ListAssignment, Palette,
    PartialEdgeColouring,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, MultiGraph};
use crate::solver::{solve_list, Method, SearchStats, SolveOutcome, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_of: Vec<Side>,
}

impl Bipartition {
    /// The bipartition found by two-colouring, vertex 0 of each component on X.
    pub fn of(g: &MultiGraph) -> Result<Self> {
        let sides = g.two_colouring().ok_or_else(|| Error::Input("graph is not bipartite".into()))?;
        Ok(Bipartition { side_of: sides.into_iter().map(|s| if s { Side::Y } else { Side::X }).collect() })
    }

    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.side_of.len() != g.vertex_count() {
            return Err(Error::Input("bipartition has wrong vertex count".into()));
        }
        match g.edges().iter().find(|e| self.side_of[e.u] == self.side_of[e.v]) {
            Some(e) => Err(Error::Input(format!("edge {} lies inside one side", e.id))),
            None => Ok(()),
        }
    }

    /// Endpoints of the edge ordered as (X end, Y end).
    fn orient(&self, u: usize, v: usize) -> (usize, usize) {
        if self.side_of[u] == Side::X {
            (u, v)
        } else {
            (v, u)
        }
    }
}

/// Proper Δ-edge-colouring of a bipartite multigraph by alternating-path
/// swaps.
pub fn konig_colour(g: &MultiGraph, b: &Bipartition) -> Result<PartialEdgeColouring> {
    b.check(g)?;
    let k = g.max_degree();
    let mut col = vec![0u32; g.edge_count()];
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; k + 1]; g.vertex_count()];
    let free = |at: &Vec<Vec<Option<usize>>>, v: usize| (1..=k).find(|&c| at[v][c].is_none()).unwrap();
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&p| g.edges()[p].id);
    for p in order {
        let e = g.edges()[p];
        let a = free(&at, e.u);
        if at[e.v][a].is_some() {
            let bcol = free(&at, e.v);
            let mut path = Vec::new();
            let (mut v, mut c) = (e.v, a);
            while let Some(q) = at[v][c] {
                path.push(q);
                v = g.edges()[q].other(v);
                c = if c == a { bcol } else { a };
            }
            for &q in &path {
                let f = g.edges()[q];
                at[f.u][col[q] as usize] = None;
                at[f.v][col[q] as usize] = None;
            }
            for &q in &path {
                let f = g.edges()[q];
                col[q] = if col[q] as usize == a { bcol as u32 } else { a as u32 };
                at[f.u][col[q] as usize] = Some(q);
                at[f.v][col[q] as usize] = Some(q);
            }
        }
        col[p] = a as u32;
        at[e.u][a] = Some(p);
        at[e.v][a] = Some(p);
    }
    let out: PartialEdgeColouring = g.edges().iter().zip(col).map(|(e, c)| (e.id, c)).collect();
    debug_assert!(is_proper(g, &out));
    Ok(out)
}

/// Orientation of the line graph induced by a proper base colouring φ: at an
/// X vertex arcs point to the smaller colour, at a Y vertex to the larger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GalvinOrientation {
    pub base_colouring: PartialEdgeColouring,
    /// (edge, X end, Y end) in edge-id order.
    pub ends: Vec<(EdgeId, usize, usize)>,
    /// Out-neighbours of each edge.
    pub arcs: BTreeMap<EdgeId, Vec<EdgeId>>,
}

impl GalvinOrientation {
    pub fn has_arc(&self, e: EdgeId, f: EdgeId) -> bool {
        self.arcs.get(&e).is_some_and(|o| o.binary_search(&f).is_ok())
    }

    pub fn out_degree(&self, e: EdgeId) -> usize {
        self.arcs.get(&e).map_or(0, Vec::len)
    }

    pub fn max_out_degree(&self) -> usize {
        self.arcs.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.values().map(Vec::len).sum()
    }

    fn phi(&self, e: EdgeId) -> Colour {
        self.base_colouring.get(e).unwrap_or(0)
    }
}

pub fn galvin_orient(g: &MultiGraph, b: &Bipartition, phi: &PartialEdgeColouring) -> Result<GalvinOrientation> {
    b.check(g)?;
    let delta = g.max_degree() as u32;
    for e in g.edge_ids() {
        match phi.get(e) {
            Some(c) if (1..=delta).contains(&c) => {}
            Some(c) => return Err(Error::ColourOutOfPalette { colour: c, palette: delta }),
            None => return Err(Error::Input(format!("edge {e} has no base colour"))),
        }
    }
    if let Some((e, f)) = crate::colouring::find_conflict(g, phi) {
        return Err(Error::Improper(e, f));
    }
    let mut ends: Vec<(EdgeId, usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let (x, y) = b.orient(e.u, e.v);
            (e.id, x, y)
        })
        .collect();
    ends.sort();
    let mut arcs: BTreeMap<EdgeId, Vec<EdgeId>> = BTreeMap::new();
    for &(e, x, y) in &ends {
        let pe = phi.get(e).unwrap();
        let mut out: Vec<EdgeId> = Vec::new();
        for f in g.incident_edges(x) {
            if f.id != e && phi.get(f.id).unwrap() < pe {
                out.push(f.id);
            }
        }
        for f in g.incident_edges(y) {
            if f.id != e && phi.get(f.id).unwrap() > pe {
                out.push(f.id);
            }
        }
        out.sort();
        out.dedup();
        arcs.insert(e, out);
    }
    Ok(GalvinOrientation { base_colouring: phi.clone(), ends, arcs })
}

/// Independent in the line graph and absorbing every other active edge.
pub fn is_kernel(o: &GalvinOrientation, active: &EdgeSet, k: &EdgeSet) -> bool {
    let adjacent = |e: EdgeId, f: EdgeId| o.has_arc(e, f) || o.has_arc(f, e);
    if !k.iter().all(|e| active.contains(e)) {
        return false;
    }
    let ks: Vec<EdgeId> = k.iter().collect();
    for (i, &e) in ks.iter().enumerate() {
        if ks[i + 1..].iter().any(|&f| adjacent(e, f)) {
            return false;
        }
    }
    active.iter().filter(|&e| !k.contains(e)).all(|e| ks.iter().any(|&f| o.has_arc(e, f)))
}

/// Every kernel of the sub-digraph induced by `active`, by subset enumeration.
pub fn brute_force_kernels(o: &GalvinOrientation, active: &EdgeSet) -> Vec<EdgeSet> {
    let items: Vec<EdgeId> = active.iter().collect();
    assert!(items.len() <= 20, "brute force limited to 20 edges");
    (0u32..1 << items.len())
        .map(|mask| items.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect())
        .filter(|k: &EdgeSet| is_kernel(o, active, k))
        .collect()
}

/// Kernel of the sub-digraph induced by `active`: the stable matching where
/// X vertices prefer smaller base colours and Y vertices larger ones.
/// Falls back to enumeration at 12 or fewer edges; `None` if neither
/// produces a kernel.
pub fn kernel(o: &GalvinOrientation, active: &EdgeSet) -> Option<EdgeSet> {
    let mut proposals: BTreeMap<usize, Vec<(Colour, EdgeId, usize)>> = BTreeMap::new();
    for &(e, x, y) in &o.ends {
        if active.contains(e) {
            proposals.entry(x).or_default().push((o.phi(e), e, y));
        }
    }
    for list in proposals.values_mut() {
        list.sort();
        list.reverse();
    }
    let mut held: BTreeMap<usize, (Colour, EdgeId, usize)> = BTreeMap::new();
    let mut free: Vec<usize> = proposals.keys().rev().copied().collect();
    while let Some(x) = free.pop() {
        let Some((c, e, y)) = proposals.get_mut(&x).and_then(Vec::pop) else { continue };
        match held.get(&y) {
            Some(&(hc, _, _)) if hc > c => free.push(x),
            Some(&(_, _, hx)) => {
                held.insert(y, (c, e, x));
                free.push(hx);
            }
            None => {
                held.insert(y, (c, e, x));
            }
        }
    }
    let k: EdgeSet = held.values().map(|&(_, e, _)| e).collect();
    if is_kernel(o, active, &k) {
        return Some(k);
    }
    if active.len() <= 12 {
        return brute_force_kernels(o, active).into_iter().next();
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FBound {
    /// max{d(u), d(v)}
    Bipartite,
    /// max{d(u), d(v)} + ⌊min{d(u), d(v)}/2⌋
    Shannon,
}

pub fn f_bound(g: &MultiGraph, variant: FBound) -> BTreeMap<EdgeId, usize> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.degree(e.u), g.degree(e.v));
            let f = match variant {
                FBound::Bipartite => a.max(b),
                FBound::Shannon => a.max(b) + a.min(b) / 2,
            };
            (e.id, f)
        })
        .collect()
}

/// Colour-by-colour kernel extraction on the Galvin orientation of a König
/// colouring, with exact search on whatever is left if it stalls.
pub fn list_colour_bipartite(g: &MultiGraph, b: &Bipartition, l: &ListAssignment) -> Result<SolveOutcome> {
    l.covers(g)?;
    let phi = konig_colour(g, b)?;
    let o = galvin_orient(g, b, &phi)?;
    let mut lists = l.restricted_to(&g.edge_ids().collect());
    let mut colouring = PartialEdgeColouring::new();
    let mut uncoloured: EdgeSet = g.edge_ids().collect();
    for c in lists.union().iter() {
        let active: EdgeSet = uncoloured.iter().filter(|&e| lists.get(e).unwrap().contains(c)).collect();
        if active.is_empty() {
            continue;
        }
        let Some(k) = kernel(&o, &active) else { break };
        for e in active.iter() {
            if k.contains(e) {
                colouring.assign(e, c);
                uncoloured.remove(e);
            } else {
                let mut s = lists.get(e).unwrap();
                s.remove(c);
                lists.set(e, s);
            }
        }
    }
    if uncoloured.is_empty() {
        debug_assert!(is_proper(g, &colouring));
        return Ok(SolveOutcome { status: Status::Solved, colouring, stats: SearchStats::default(), method: Method::Kernel });
    }
    let residual = g.restricted_to(&uncoloured);
    let mut rest = ListAssignment::new();
    for e in residual.edges() {
        let mut s = l.get(e.id).unwrap();
        for c in colouring.colours_at(g, e.u).union(colouring.colours_at(g, e.v)).iter() {
            s.remove(c);
        }
        rest.set(e.id, s);
    }
    let partial = solve_list(&residual, &rest)?;
    let mut out = if partial.is_solved() {
        let mut merged = partial.clone();
        merged.colouring = colouring.merged(&partial.colouring);
        merged
    } else {
        let mut full = solve_list(g, l)?;
        full.stats.absorb(partial.stats);
        full
    };
    out.method = Method::ExactFallback;
    Ok(out)
}

fn check_extension_input(g: &MultiGraph, c: &PartialEdgeColouring, k: usize, palette: u32) -> Result<Palette> {
    let p = Palette::new(palette)?;
    validate_precolouring(g, c, p)?;
    let kv = max_precoloured_degree_vertex(g, &c.domain());
    if kv > k {
        return Err(Error::Precondition(format!("a vertex has precoloured degree {kv} > k = {k}")));
    }
    Ok(p)
}

/// Extension from `[Δ+k]` when every vertex meets at most `k` precoloured
/// edges of a bipartite multigraph.
pub fn extend_bipartite(g: &MultiGraph, b: &Bipartition, c: &PartialEdgeColouring, k: usize) -> Result<SolveOutcome> {
    b.check(g)?;
    let p = check_extension_input(g, c, k, (g.max_degree() + k) as u32)?;
    let (reduced, lists) = reduce_to_lists(g, c, p)?;
    for (e, need) in f_bound(&reduced, FBound::Bipartite) {
        if lists.get(e).unwrap().len() < need {
            return Err(Error::Internal(format!("list of edge {e} is shorter than its bound {need}")));
        }
    }
    let mut out = list_colour_bipartite(&reduced, b, &lists)?;
    if out.is_solved() {
        out.colouring = c.merged(&out.colouring);
    }
    Ok(out)
}

/// Palette size ⌊(3Δ+k)/2⌋ used by [`extend_shannon`].
pub fn shannon_palette(g: &MultiGraph, k: usize) -> u32 {
    ((3 * g.max_degree() + k) / 2) as u32
}

/// Extension from `[⌊(3Δ+k)/2⌋]` when every vertex meets at most `k`
/// precoloured edges.
pub fn extend_shannon(g: &MultiGraph, c: &PartialEdgeColouring, k: usize) -> Result<SolveOutcome> {
    let p = check_extension_input(g, c, k, shannon_palette(g, k))?;
    let (reduced, lists) = reduce_to_lists(g, c, p)?;
    for (e, need) in f_bound(&reduced, FBound::Shannon) {
        if lists.get(e).unwrap().len() < need {
            return Err(Error::Internal(format!("list of edge {e} is shorter than its bound {need}")));
        }
    }
    let mut out = match Bipartition::of(&reduced) {
        Ok(b) => list_colour_bipartite(&reduced, &b, &lists)?,
        Err(_) => solve_list(&reduced, &lists)?,
    };
    if out.is_solved() {
        out.colouring = c.merged(&out.colouring);
    }
    Ok(out)
}
