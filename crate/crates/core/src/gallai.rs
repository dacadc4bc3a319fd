//! Blocks, Gallai trees, degree-list colouring of line graphs, and the
//! line-graph-degree extender with its two exceptional shapes.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::colouring::{
    max_precoloured_degree_vertex, reduce_to_lists, validate_precolouring, Colour, ColourSet, Palette,
    PartialEdgeColouring,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};
use crate::solver::{solve_list, Method, SearchStats, SolveOutcome, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    pub fn is_complete(&self) -> bool {
        let s = self.vertices.len();
        self.edges.len() == s * (s - 1) / 2
    }

    pub fn is_odd_cycle(&self) -> bool {
        let s = self.vertices.len();
        s >= 3 && s % 2 == 1 && self.edges.len() == s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<usize>,
}

struct Tarjan<'g> {
    g: &'g MultiGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    out: BlockDecomposition,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, via: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for &p in self.g.incident(v) {
            if Some(p) == via {
                continue;
            }
            let w = self.g.edges()[p].other(v);
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push(p);
                self.visit(w, Some(p));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if via.is_some() || children > 1 {
                        self.out.cut_vertices.insert(v);
                    }
                    let mut edges = Vec::new();
                    let mut verts = BTreeSet::new();
                    while let Some(q) = self.stack.pop() {
                        let e = self.g.edges()[q];
                        edges.push(e.id);
                        verts.insert(e.u);
                        verts.insert(e.v);
                        if q == p {
                            break;
                        }
                    }
                    edges.sort();
                    self.out.blocks.push(Block { vertices: verts.into_iter().collect(), edges });
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push(p);
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
        if via.is_none() && children > 1 {
            self.out.cut_vertices.insert(v);
        }
    }
}

/// Biconnected blocks (bridges are two-vertex blocks) and cut vertices.
pub fn block_decompose(g: &MultiGraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut t = Tarjan { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Default::default() };
    for v in 0..n {
        if t.disc[v] == 0 && g.degree(v) > 0 {
            t.visit(v, None);
        }
    }
    t.out
}

pub fn is_gallai_tree(g: &MultiGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    Ok(block_decompose(g).blocks.iter().all(|b| b.is_complete() || b.is_odd_cycle()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiCertificate {
    pub is_gallai_tree: bool,
    /// Every list has exactly as many colours as the vertex degree.
    pub tight: bool,
    /// A block that is neither complete nor an odd cycle.
    pub witness_block: Option<Block>,
}

pub fn certify(g: &MultiGraph, lists: &[ColourSet]) -> GallaiCertificate {
    let witness = block_decompose(g).blocks.into_iter().find(|b| !b.is_complete() && !b.is_odd_cycle());
    GallaiCertificate {
        is_gallai_tree: witness.is_none(),
        tight: (0..g.vertex_count()).all(|v| lists[v].len() == g.degree(v)),
        witness_block: witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeChoice {
    /// Colour per vertex.
    Colouring(Vec<Colour>),
    /// Tight lists on a Gallai tree: no constructive guarantee.
    Certificate(GallaiCertificate),
}

struct Painter<'a> {
    adj: Vec<Vec<usize>>,
    lists: &'a [ColourSet],
    col: Vec<Colour>,
}

impl Painter<'_> {
    fn avail(&self, v: usize) -> ColourSet {
        self.adj[v].iter().fold(self.lists[v], |mut s, &w| {
            s.remove(self.col[w]);
            s
        })
    }

    /// Colours the connected set `within` (uncoloured) greedily, farthest
    /// from `root` first.
    fn tree(&mut self, within: &[bool], root: usize) -> Result<()> {
        let mut seen = vec![false; self.adj.len()];
        let mut order = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in &self.adj[v] {
                if within[w] && !seen[w] && self.col[w] == 0 {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        for &v in order.iter().rev() {
            self.col[v] = self.avail(v).min().ok_or_else(|| Error::Internal(format!("no colour left at {v}")))?;
        }
        Ok(())
    }

    fn reach(&self, within: &[bool], from: usize) -> Vec<usize> {
        let mut seen = vec![false; self.adj.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        let mut out = Vec::new();
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for &w in &self.adj[v] {
                if within[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out
    }

    /// Colours a 2-connected block that is neither complete nor an odd
    /// cycle, with every vertex outside it already coloured.
    fn block(&mut self, b: &Block) -> Result<()> {
        let n = self.adj.len();
        let mut inside = vec![false; n];
        for &v in &b.vertices {
            inside[v] = true;
        }
        let deg = |v: usize, inside: &[bool]| self.adj[v].iter().filter(|&&w| inside[w]).count();
        if let Some(&r) = b.vertices.iter().find(|&&v| self.avail(v).len() > deg(v, &inside)) {
            return self.tree(&inside, r);
        }
        for &u in &b.vertices {
            for &v in &self.adj[u] {
                if !inside[v] {
                    continue;
                }
                if let Some(c) = self.avail(u).difference(self.avail(v)).min() {
                    self.col[u] = c;
                    inside[u] = false;
                    return self.tree(&inside, v);
                }
            }
        }
        let l = self.avail(b.vertices[0]);
        let d = deg(b.vertices[0], &inside);
        if d == 2 {
            let mut v = b.vertices[0];
            let mut prev = usize::MAX;
            let (c1, c2) = (l.min().unwrap(), l.max().unwrap());
            for step in 0..b.vertices.len() {
                self.col[v] = if step % 2 == 0 { c1 } else { c2 };
                let next = self.adj[v].iter().copied().find(|&w| inside[w] && w != prev && self.col[w] == 0);
                prev = v;
                match next {
                    Some(w) => v = w,
                    None => break,
                }
            }
            return Ok(());
        }
        for &v in &b.vertices {
            let nb: Vec<usize> = self.adj[v].iter().copied().filter(|&w| inside[w]).collect();
            for (i, &a) in nb.iter().enumerate() {
                for &c in &nb[i + 1..] {
                    if self.adj[a].contains(&c) {
                        continue;
                    }
                    let mut rest = inside.clone();
                    rest[a] = false;
                    rest[c] = false;
                    if self.reach(&rest, v).len() == b.vertices.len() - 2 {
                        let colour = l.min().unwrap();
                        self.col[a] = colour;
                        self.col[c] = colour;
                        return self.tree(&rest, v);
                    }
                }
            }
        }
        Err(Error::Internal("regular block without a Brooks triple".into()))
    }
}

/// Colours a connected simple graph from lists with `|ℓ(v)| ≥ d(v)`, or
/// certifies that it is a Gallai tree with tight lists.
pub fn degree_list_colour(g: &MultiGraph, lists: &[ColourSet]) -> Result<DegreeChoice> {
    let n = g.vertex_count();
    if lists.len() != n {
        return Err(Error::Input("one list per vertex required".into()));
    }
    if !g.is_simple() {
        return Err(Error::Input("graph must be simple".into()));
    }
    if let Some(v) = (0..n).find(|&v| lists[v].len() < g.degree(v)) {
        return Err(Error::Input(format!("list of vertex {v} is shorter than its degree")));
    }
    let mut p = Painter { adj: (0..n).map(|v| g.neighbours(v)).collect(), lists, col: vec![0; n] };
    if let Some(r) = (0..n).find(|&v| lists[v].len() > g.degree(v)) {
        let (labels, _) = g.component_labels();
        let within: Vec<bool> = labels.iter().map(|&c| c == labels[r]).collect();
        if (0..n).any(|v| !within[v] && g.degree(v) > 0) {
            return Err(Error::Input("graph is not connected".into()));
        }
        p.tree(&within, r)?;
        for v in 0..n {
            if p.col[v] == 0 {
                p.col[v] = lists[v].min().ok_or_else(|| Error::Internal("empty list".into()))?;
            }
        }
        return Ok(DegreeChoice::Colouring(p.col));
    }
    if !g.is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    let cert = certify(g, lists);
    let Some(b) = cert.witness_block.clone() else {
        return Ok(DegreeChoice::Certificate(cert));
    };
    let mut outside = vec![true; n];
    for &v in &b.vertices {
        outside[v] = false;
    }
    for &v in &b.vertices {
        for w in g.neighbours(v) {
            if outside[w] && p.col[w] == 0 {
                p.tree(&outside, w)?;
            }
        }
    }
    p.block(&b)?;
    Ok(DegreeChoice::Colouring(p.col))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ExceptionReport {
    /// Uncolourable shape: no precoloured edges on a simple odd cycle.
    OddCycleK0 { length: usize },
    /// Triangle whose smallest multiplicity is `k + 1`.
    TriangleMultiplicity { multiplicities: [usize; 3] },
}

/// The exceptional shape `g` has for this `k`, if any.
pub fn detect_exception(g: &MultiGraph, k: usize) -> Option<ExceptionReport> {
    let (h, _) = g.compact();
    let n = h.vertex_count();
    if k == 0 && n >= 3 && n % 2 == 1 && h.is_simple() && h.is_connected() && (0..n).all(|v| h.degree(v) == 2) {
        return Some(ExceptionReport::OddCycleK0 { length: n });
    }
    if n == 3 {
        let m = [h.multiplicity(0, 1), h.multiplicity(1, 2), h.multiplicity(0, 2)];
        if m.iter().all(|&x| x >= 1) && k + 1 == *m.iter().min().unwrap() {
            return Some(ExceptionReport::TriangleMultiplicity { multiplicities: m });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GallaiResult {
    pub outcome: SolveOutcome,
    pub exception: Option<ExceptionReport>,
}

/// Extends `c` from `[Δ+k]` on a connected multigraph with
/// `Δ(L(G)) ≤ Δ+k` and precoloured vertex degree at most `k`. Unsolvable is
/// only possible on an exceptional shape, which is reported alongside.
pub fn extend_gallai(g: &MultiGraph, c: &PartialEdgeColouring, k: usize) -> Result<GallaiResult> {
    if !g.is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    let empty = SolveOutcome {
        status: Status::Solved,
        colouring: PartialEdgeColouring::new(),
        stats: SearchStats::default(),
        method: Method::Gallai,
    };
    if g.edge_count() == 0 {
        return Ok(GallaiResult { outcome: empty, exception: None });
    }
    let stats = g.degree_stats();
    if stats.line_delta > stats.delta + k {
        return Err(Error::Precondition(format!(
            "line-graph degree {} exceeds Δ + k = {}",
            stats.line_delta,
            stats.delta + k
        )));
    }
    let p = Palette::new((stats.delta + k) as u32)?;
    validate_precolouring(g, c, p)?;
    let kv = max_precoloured_degree_vertex(g, &c.domain());
    if kv > k {
        return Err(Error::Precondition(format!("a vertex has precoloured degree {kv} > k = {k}")));
    }
    let exception = detect_exception(g, k);
    let (reduced, lists) = reduce_to_lists(g, c, p)?;
    let mut outcome = empty;
    outcome.colouring = c.clone();
    for comp in reduced.edge_components() {
        let sub = reduced.restricted_to(&comp);
        let lg = sub.line_graph();
        let vl: Vec<ColourSet> = lg.vertex_edge.iter().map(|&e| lists.get(e).unwrap()).collect();
        if let Some(v) = (0..vl.len()).find(|&v| vl[v].len() < lg.graph.degree(v)) {
            return Err(Error::Internal(format!("list of edge {} is shorter than its line degree", lg.vertex_edge[v])));
        }
        match degree_list_colour(&lg.graph, &vl)? {
            DegreeChoice::Colouring(col) => {
                for (&e, c) in lg.vertex_edge.iter().zip(col) {
                    outcome.colouring.assign(e, c);
                }
            }
            DegreeChoice::Certificate(_) => {
                outcome.method = Method::ExactFallback;
                let exact = solve_list(&sub, &lists.restricted_to(&comp))?;
                outcome.stats.absorb(exact.stats);
                if !exact.is_solved() {
                    if exception.is_none() {
                        return Err(Error::Internal("unsolvable instance outside the exceptional shapes".into()));
                    }
                    outcome.status = exact.status;
                    outcome.colouring = PartialEdgeColouring::new();
                    return Ok(GallaiResult { outcome, exception });
                }
                outcome.colouring = outcome.colouring.merged(&exact.colouring);
            }
        }
    }
    debug_assert!(crate::colouring::is_proper(g, &outcome.colouring));
    Ok(GallaiResult { outcome, exception })
}

/// Extends a precoloured matching from `[4]` on a multigraph with `Δ ≤ 3`,
/// component by component with `k = 4 − Δ(component)`.
pub fn extend_subcubic(g: &MultiGraph, m: &PartialEdgeColouring) -> Result<SolveOutcome> {
    if g.max_degree() > 3 {
        return Err(Error::Precondition(format!("maximum degree {} exceeds 3", g.max_degree())));
    }
    validate_precolouring(g, m, Palette::new(4)?)?;
    if !g.is_matching(&m.domain()) {
        return Err(Error::Precondition("precoloured edges do not form a matching".into()));
    }
    let mut out =
        SolveOutcome { status: Status::Solved, colouring: PartialEdgeColouring::new(), stats: SearchStats::default(), method: Method::Gallai };
    for comp in g.edge_components() {
        let sub = g.restricted_to(&comp);
        let k = 4 - sub.max_degree();
        let r = extend_gallai(&sub, &m.restricted_to(&comp), k)?;
        if let Some(x) = r.exception {
            return Err(Error::Internal(format!("subcubic component has exceptional shape {x:?}")));
        }
        if !r.outcome.is_solved() {
            return Err(Error::Internal("subcubic component not extended".into()));
        }
        if r.outcome.method == Method::ExactFallback {
            out.method = Method::ExactFallback;
        }
        out.stats.absorb(r.outcome.stats);
        out.colouring = out.colouring.merged(&r.outcome.colouring);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_proper;
    use proptest::prelude::*;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::from_pairs(n, pairs).unwrap()
    }

    fn cycle(n: usize) -> MultiGraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &pairs)
    }

    fn complete(n: usize) -> MultiGraph {
        let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        graph(n, &pairs)
    }

    fn set(cs: &[Colour]) -> ColourSet {
        cs.iter().copied().collect()
    }

    fn col(v: &[(u32, Colour)]) -> PartialEdgeColouring {
        v.iter().map(|&(e, c)| (EdgeId(e), c)).collect()
    }

    fn vertex_colourable(g: &MultiGraph, lists: &[ColourSet]) -> bool {
        fn go(g: &MultiGraph, lists: &[ColourSet], v: usize, col: &mut Vec<Colour>) -> bool {
            if v == lists.len() {
                return true;
            }
            for c in lists[v].iter() {
                if g.neighbours(v).iter().all(|&w| w > v || col[w] != c) {
                    col[v] = c;
                    if go(g, lists, v + 1, col) {
                        return true;
                    }
                }
            }
            false
        }
        go(g, lists, 0, &mut vec![0; lists.len()])
    }

    fn check_colouring(g: &MultiGraph, lists: &[ColourSet], col: &[Colour]) {
        for v in 0..g.vertex_count() {
            assert!(lists[v].contains(col[v]));
            for w in g.neighbours(v) {
                assert_ne!(col[v], col[w]);
            }
        }
    }

    #[test]
    fn block_examples() {
        let tree = graph(4, &[(0, 1), (1, 2), (1, 3)]);
        let d = block_decompose(&tree);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, BTreeSet::from([1]));
        assert_eq!(block_decompose(&complete(4)).blocks.len(), 1);
        let bowtie = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let d = block_decompose(&bowtie);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, BTreeSet::from([2]));
    }

    #[test]
    fn gallai_tree_examples() {
        assert!(is_gallai_tree(&cycle(5)).unwrap());
        assert!(!is_gallai_tree(&cycle(4)).unwrap());
        let mut k4p = complete(4);
        k4p.add_vertex();
        k4p.add_edge(3, 4).unwrap();
        assert!(is_gallai_tree(&k4p).unwrap());
        assert!(is_gallai_tree(&graph(4, &[(0, 1), (2, 3)])).is_err());
    }

    #[test]
    fn degree_list_examples() {
        let c5 = cycle(5);
        let lists = vec![set(&[1, 2]); 5];
        let DegreeChoice::Certificate(cert) = degree_list_colour(&c5, &lists).unwrap() else { panic!() };
        assert!(cert.is_gallai_tree && cert.tight);
        assert!(!vertex_colourable(&c5, &lists));

        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let lists = vec![set(&[1]), set(&[1, 2]), set(&[1])];
        assert!(matches!(degree_list_colour(&p3, &lists).unwrap(), DegreeChoice::Certificate(_)));
        assert!(vertex_colourable(&p3, &lists));

        let mut lists = vec![set(&[1, 2]); 5];
        lists[2] = set(&[1, 2, 3]);
        let DegreeChoice::Colouring(c) = degree_list_colour(&c5, &lists).unwrap() else { panic!() };
        check_colouring(&c5, &lists, &c);

        assert!(degree_list_colour(&c5, &[set(&[1]); 5]).is_err());
    }

    #[test]
    fn non_gallai_blocks_are_coloured() {
        let c4 = cycle(4);
        let DegreeChoice::Colouring(c) = degree_list_colour(&c4, &[set(&[3, 7]); 4]).unwrap() else { panic!() };
        check_colouring(&c4, &[set(&[3, 7]); 4], &c);
        let k33 = graph(6, &(0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect::<Vec<_>>());
        let lists = vec![set(&[1, 2, 3]); 6];
        let DegreeChoice::Colouring(c) = degree_list_colour(&k33, &lists).unwrap() else { panic!() };
        check_colouring(&k33, &lists, &c);
        // C4 with a pendant triangle hanging off vertex 0.
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0)]);
        let lists: Vec<ColourSet> = (0..6).map(|v| ColourSet::full(g.degree(v) as u32)).collect();
        let DegreeChoice::Colouring(c) = degree_list_colour(&g, &lists).unwrap() else { panic!() };
        check_colouring(&g, &lists, &c);
    }

    #[test]
    fn exception_shapes() {
        let r = extend_gallai(&cycle(5), &PartialEdgeColouring::new(), 0).unwrap();
        assert_eq!(r.outcome.status, Status::Unsolvable);
        assert_eq!(r.exception, Some(ExceptionReport::OddCycleK0 { length: 5 }));

        let shannon = graph(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]);
        let r = extend_gallai(&shannon, &col(&[(0, 1)]), 1).unwrap();
        assert_eq!(r.outcome.status, Status::Unsolvable);
        assert_eq!(r.exception, Some(ExceptionReport::TriangleMultiplicity { multiplicities: [2, 2, 2] }));

        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = extend_gallai(&p4, &col(&[(0, 1)]), 1).unwrap();
        assert!(r.outcome.is_solved() && r.exception.is_none());
        assert!(is_proper(&p4, &r.outcome.colouring));
    }

    #[test]
    fn subcubic_examples() {
        let k4 = complete(4);
        let out = extend_subcubic(&k4, &col(&[(0, 1)])).unwrap();
        assert!(out.is_solved() && is_proper(&k4, &out.colouring));
        let petersen = graph(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        );
        let spokes: PartialEdgeColouring = (5..10).map(|e| (EdgeId(e), 1 + e % 4)).collect();
        let out = extend_subcubic(&petersen, &spokes).unwrap();
        assert!(out.is_solved() && is_proper(&petersen, &out.colouring));
        assert_eq!(out.colouring.restricted_to(&spokes.domain()), spokes);
        let out = extend_subcubic(&cycle(5), &col(&[(0, 4)])).unwrap();
        assert!(out.is_solved());
        assert!(extend_subcubic(&complete(5), &PartialEdgeColouring::new()).is_err());
    }

    fn arb_simple() -> impl Strategy<Value = MultiGraph> {
        (3usize..8, prop::collection::vec(any::<bool>(), 21)).prop_filter_map("connected", |(n, bits)| {
            let mut g = MultiGraph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i % bits.len()] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            (g.is_connected() && (0..n).all(|v| g.degree(v) > 0)).then_some(g)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn tight_failures_are_gallai_trees(g in arb_simple(), seed in any::<u64>()) {
            let n = g.vertex_count();
            let mut x = seed;
            let lists: Vec<ColourSet> = (0..n).map(|v| {
                let mut s = ColourSet::EMPTY;
                while s.len() < g.degree(v) {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    s.insert(1 + (x >> 33) as u32 % g.degree(v).max(4) as u32);
                }
                s
            }).collect();
            match degree_list_colour(&g, &lists).unwrap() {
                DegreeChoice::Colouring(c) => check_colouring(&g, &lists, &c),
                DegreeChoice::Certificate(cert) => {
                    prop_assert!(cert.is_gallai_tree && cert.tight);
                    prop_assert!(is_gallai_tree(&g).unwrap());
                }
            }
        }
    }
}
