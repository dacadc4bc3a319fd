use crate::colouring::{reduce_to_lists, ColourSet, ListAssignment, Palette, PartialEdgeColouring};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

use super::{Method, SearchStats, SolveOutcome, Status};

#[derive(Clone, Copy, Debug, Default)]
pub struct SolverConfig {
    /// Maximum number of search nodes over the whole call.
    pub node_budget: Option<u64>,
}

enum Step {
    Found,
    Fail,
    Budget,
}

fn bits(mut x: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let c = x.trailing_zeros();
            x &= x - 1;
            Some(c)
        }
    })
}

/// Backtracking state for one connected instance. Edges are indexed by
/// their rank in edge-id order.
struct Search {
    n: usize,
    ends: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    dom: Vec<u64>,
    col: Vec<u32>,
    trail: Vec<(usize, u64)>,
    sides: Option<Vec<bool>>,
    symmetric: bool,
    max_used: u32,
    nodes: u64,
    max_depth: usize,
    budget: Option<u64>,
}

impl Search {
    fn new(g: &MultiGraph, l: &ListAssignment, budget: Option<u64>) -> Self {
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.sort_by_key(|&p| g.edges()[p].id);
        let n = g.vertex_count();
        let ends: Vec<(usize, usize)> = order.iter().map(|&p| (g.edges()[p].u, g.edges()[p].v)).collect();
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in ends.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        let adj = (0..ends.len())
            .map(|i| {
                let (u, v) = ends[i];
                let mut a: Vec<usize> = inc[u].iter().chain(&inc[v]).copied().filter(|&j| j != i).collect();
                a.sort_unstable();
                a.dedup();
                a
            })
            .collect();
        let dom: Vec<u64> = order.iter().map(|&p| l.get(g.edges()[p].id).unwrap_or_default().bits()).collect();
        let symmetric = match dom.first() {
            Some(&d) => d != 0 && dom.iter().all(|&x| x == d) && d == ColourSet::full(d.count_ones()).bits(),
            None => false,
        };
        let sides = g.two_colouring();
        Search {
            n,
            col: vec![0; ends.len()],
            ends,
            adj,
            inc,
            dom,
            trail: Vec::new(),
            sides,
            symmetric,
            max_used: 0,
            nodes: 0,
            max_depth: 0,
            budget,
        }
    }

    fn run(&mut self) -> Step {
        if self.dom.contains(&0) {
            return Step::Fail;
        }
        if !(0..self.n).all(|v| self.hall_ok(v)) || !self.matching_ok() {
            return Step::Fail;
        }
        self.dfs(0)
    }

    fn dfs(&mut self, depth: usize) -> Step {
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
        if matches!(self.budget, Some(b) if self.nodes > b) {
            return Step::Budget;
        }
        let mut best: Option<(u32, usize)> = None;
        for p in 0..self.ends.len() {
            if self.col[p] == 0 {
                let size = self.dom[p].count_ones();
                if best.is_none_or(|(s, _)| size < s) {
                    best = Some((size, p));
                }
            }
        }
        let Some((_, p)) = best else {
            return Step::Found;
        };
        let mut choices = self.dom[p];
        if self.symmetric {
            let lim = self.max_used + 1;
            choices &= if lim >= 63 { u64::MAX } else { (1u64 << (lim + 1)) - 1 };
        }
        for c in bits(choices) {
            let mark = self.trail.len();
            let saved = self.max_used;
            if self.assign(p, c) && self.consistent(p) {
                match self.dfs(depth + 1) {
                    Step::Fail => {}
                    r => return r,
                }
            }
            while self.trail.len() > mark {
                let (q, d) = self.trail.pop().unwrap();
                self.dom[q] = d;
            }
            self.col[p] = 0;
            self.max_used = saved;
        }
        Step::Fail
    }

    fn assign(&mut self, p: usize, c: u32) -> bool {
        self.col[p] = c;
        self.max_used = self.max_used.max(c);
        let bit = 1u64 << c;
        for i in 0..self.adj[p].len() {
            let q = self.adj[p][i];
            if self.col[q] == 0 && self.dom[q] & bit != 0 {
                self.trail.push((q, self.dom[q]));
                self.dom[q] &= !bit;
                if self.dom[q] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn consistent(&self, p: usize) -> bool {
        let (u, v) = self.ends[p];
        if !self.hall_ok(u) || !self.hall_ok(v) {
            return false;
        }
        for &q in &self.adj[p] {
            let (a, b) = self.ends[q];
            if !self.hall_ok(a) || !self.hall_ok(b) {
                return false;
            }
        }
        self.matching_ok()
    }

    fn open_at(&self, v: usize) -> (usize, u64) {
        let mut count = 0;
        let mut union = 0;
        for &q in &self.inc[v] {
            if self.col[q] == 0 {
                count += 1;
                union |= self.dom[q];
            }
        }
        (count, union)
    }

    /// The uncoloured edges at `v` need pairwise distinct colours.
    fn hall_ok(&self, v: usize) -> bool {
        let (count, union) = self.open_at(v);
        union.count_ones() as usize >= count
    }

    /// A vertex whose open edges have exactly as many colours available as
    /// there are open edges must see every one of those colours, so each
    /// colour class has to be a matching covering those vertices.
    fn matching_ok(&self) -> bool {
        let mut required = vec![0u64; self.n];
        let mut any = 0u64;
        for v in 0..self.n {
            let (count, union) = self.open_at(v);
            if count > 0 && union.count_ones() as usize == count {
                required[v] = union;
                any |= union;
            }
        }
        if any == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        let mut size = vec![0usize; self.n];
        let mut need = vec![0usize; self.n];
        for c in bits(any) {
            let bit = 1u64 << c;
            for v in 0..self.n {
                parent[v] = v;
            }
            let open: Vec<usize> =
                (0..self.ends.len()).filter(|&q| self.col[q] == 0 && self.dom[q] & bit != 0).collect();
            for &q in &open {
                let (a, b) = self.ends[q];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
            size.iter_mut().for_each(|x| *x = 0);
            need.iter_mut().for_each(|x| *x = 0);
            let mut touched = vec![false; self.n];
            for &q in &open {
                touched[self.ends[q].0] = true;
                touched[self.ends[q].1] = true;
            }
            for v in 0..self.n {
                if touched[v] {
                    let r = find(&mut parent, v);
                    size[r] += 1;
                    if required[v] & bit != 0 {
                        need[r] += 1;
                    }
                }
            }
            if (0..self.n).any(|r| size[r] % 2 == 1 && need[r] == size[r]) {
                return false;
            }
            if let Some(sides) = &self.sides {
                for side in [false, true] {
                    if !self.covers_side(&open, &required, bit, sides, side) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// In the bipartite case, a matching covering a set exists iff one
    /// covers its part on each side.
    fn covers_side(&self, open: &[usize], required: &[u64], bit: u64, sides: &[bool], side: bool) -> bool {
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &q in open {
            let (a, b) = self.ends[q];
            let (x, y) = if sides[a] == side { (a, b) } else { (b, a) };
            nbrs[x].push(y);
        }
        let mut mate: Vec<Option<usize>> = vec![None; self.n];
        for x in 0..self.n {
            if sides[x] == side && required[x] & bit != 0 {
                let mut seen = vec![false; self.n];
                if !augment(x, &nbrs, &mut mate, &mut seen) {
                    return false;
                }
            }
        }
        true
    }

    fn colouring(&self, g: &MultiGraph) -> PartialEdgeColouring {
        let mut ids: Vec<_> = g.edge_ids().collect();
        ids.sort();
        ids.into_iter().zip(&self.col).map(|(e, &c)| (e, c)).collect()
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn augment(x: usize, nbrs: &[Vec<usize>], mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &y in &nbrs[x] {
        if seen[y] {
            continue;
        }
        seen[y] = true;
        if mate[y].is_none_or(|z| augment(z, nbrs, mate, seen)) {
            mate[y] = Some(x);
            return true;
        }
    }
    false
}

pub fn solve_list(g: &MultiGraph, l: &ListAssignment) -> Result<SolveOutcome> {
    solve_list_with(g, l, &SolverConfig::default())
}

/// Decides the list instance exactly, one edge component at a time.
pub fn solve_list_with(g: &MultiGraph, l: &ListAssignment, cfg: &SolverConfig) -> Result<SolveOutcome> {
    l.covers(g)?;
    let mut colouring = PartialEdgeColouring::new();
    let mut stats = SearchStats::default();
    for comp in g.edge_components() {
        let sub = g.restricted_to(&comp);
        let budget = cfg.node_budget.map(|b| b.saturating_sub(stats.nodes));
        let mut s = Search::new(&sub, l, budget);
        let step = s.run();
        stats.absorb(SearchStats { nodes: s.nodes, max_depth: s.max_depth });
        let status = match step {
            Step::Found => {
                colouring.0.extend(s.colouring(&sub).0);
                continue;
            }
            Step::Fail => Status::Unsolvable,
            Step::Budget => Status::Budget,
        };
        return Ok(SolveOutcome { status, colouring: PartialEdgeColouring::new(), stats, method: Method::Exact });
    }
    debug_assert!(crate::colouring::is_proper(g, &colouring));
    Ok(SolveOutcome { status: Status::Solved, colouring, stats, method: Method::Exact })
}

pub fn extend(g: &MultiGraph, c: &PartialEdgeColouring, p: Palette) -> Result<SolveOutcome> {
    extend_with(g, c, p, &SolverConfig::default())
}

/// Reduces to lists, solves, and merges the precolouring back in.
pub fn extend_with(g: &MultiGraph, c: &PartialEdgeColouring, p: Palette, cfg: &SolverConfig) -> Result<SolveOutcome> {
    let (reduced, lists) = reduce_to_lists(g, c, p)?;
    let mut out = solve_list_with(&reduced, &lists, cfg)?;
    if out.is_solved() {
        out.colouring = c.merged(&out.colouring);
    }
    Ok(out)
}

/// Least K for which the graph is K-edge-colourable; 0 for an edgeless graph.
pub fn chromatic_index(g: &MultiGraph) -> Result<u32> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let mut k = g.max_degree() as u32;
    loop {
        let out = solve_list(g, &ListAssignment::uniform(g, Palette::new(k)?))?;
        if out.is_solved() {
            return Ok(k);
        }
        k += 1;
    }
}

/// Proper colouring from `[k]` that differs from `forbidden` on every edge
/// it assigns.
pub fn avoid(g: &MultiGraph, forbidden: &PartialEdgeColouring, p: Palette) -> Result<SolveOutcome> {
    let mut lists = ListAssignment::uniform(g, p);
    for (e, c) in forbidden.iter() {
        g.edge(e)?;
        let mut l = lists.get(e).ok_or(Error::UnknownEdge(e))?;
        l.remove(c);
        lists.set(e, l);
    }
    solve_list(g, &lists)
}
