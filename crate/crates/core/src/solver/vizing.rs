use crate::colouring::PartialEdgeColouring;
use crate::graph::MultiGraph;

/// Working colouring with per-vertex colour lookup.
struct State<'g> {
    g: &'g MultiGraph,
    k: u32,
    col: Vec<u32>,
    at: Vec<Vec<Option<usize>>>,
}

impl<'g> State<'g> {
    fn missing(&self, v: usize) -> u64 {
        let mut m = 0;
        for c in 1..=self.k {
            if self.at[v][c as usize].is_none() {
                m |= 1u64 << c;
            }
        }
        m
    }

    fn set(&mut self, p: usize, c: u32) {
        let e = self.g.edges()[p];
        let old = self.col[p];
        if old != 0 {
            self.at[e.u][old as usize] = None;
            self.at[e.v][old as usize] = None;
        }
        self.col[p] = c;
        if c != 0 {
            debug_assert!(self.at[e.u][c as usize].is_none() && self.at[e.v][c as usize].is_none());
            self.at[e.u][c as usize] = Some(p);
            self.at[e.v][c as usize] = Some(p);
        }
    }

    /// Maximal alternating path from `start` whose first edge has colour `a`.
    fn kempe(&self, start: usize, a: u32, b: u32) -> Vec<usize> {
        let mut path = Vec::new();
        let (mut v, mut c) = (start, a);
        while let Some(p) = self.at[v][c as usize] {
            if path.contains(&p) {
                break;
            }
            path.push(p);
            v = self.g.edges()[p].other(v);
            c = if c == a { b } else { a };
        }
        path
    }

    fn swap(&mut self, path: &[usize], a: u32, b: u32) {
        let new: Vec<u32> = path.iter().map(|&p| if self.col[p] == a { b } else { a }).collect();
        for &p in path {
            self.set(p, 0);
        }
        for (&p, c) in path.iter().zip(new) {
            self.set(p, c);
        }
    }

    fn path_ends_at(&self, start: usize, path: &[usize], target: usize) -> bool {
        let mut v = start;
        for &p in path {
            v = self.g.edges()[p].other(v);
        }
        !path.is_empty() && v == target
    }

    fn touches(&self, path: &[usize], x: usize) -> bool {
        path.iter().any(|&p| self.g.edges()[p].touches(x))
    }

    /// Colours the uncoloured edge at position `p0`.
    fn colour_edge(&mut self, p0: usize) {
        let e0 = self.g.edges()[p0];
        let x = e0.u;
        let mut ys = vec![e0.v];
        let mut fan = vec![p0];
        let mut parent = vec![usize::MAX];
        let mx = self.missing(x);
        loop {
            let j = ys.len() - 1;
            let mj = self.missing(ys[j]);
            if mx & mj != 0 {
                let alpha = (mx & mj).trailing_zeros();
                self.shift(&fan, &parent, j, alpha);
                return;
            }
            if let Some(i) = (0..j).find(|&i| self.missing(ys[i]) & mj != 0) {
                let beta = (self.missing(ys[i]) & mj).trailing_zeros();
                let alpha = mx.trailing_zeros();
                let pj = self.kempe(ys[j], alpha, beta);
                if !self.touches(&pj, x) {
                    let to_i = self.path_ends_at(ys[j], &pj, ys[i]);
                    self.swap(&pj, alpha, beta);
                    let t = if to_i { i } else { j };
                    self.shift(&fan, &parent, t, alpha);
                } else {
                    let pi = self.kempe(ys[i], alpha, beta);
                    self.swap(&pi, alpha, beta);
                    self.shift(&fan, &parent, i, alpha);
                }
                return;
            }
            // Elementary so far: grow the fan by the lowest usable colour.
            let mut grown = false;
            let mut avail: u64 = ys.iter().fold(0, |a, &y| a | self.missing(y));
            while avail != 0 {
                let c = avail.trailing_zeros();
                avail &= avail - 1;
                let Some(q) = self.at[x][c as usize] else { continue };
                let y = self.g.edges()[q].other(x);
                if ys.contains(&y) {
                    continue;
                }
                let from = (0..ys.len()).find(|&i| self.missing(ys[i]) >> c & 1 == 1).unwrap();
                ys.push(y);
                fan.push(q);
                parent.push(from);
                grown = true;
                break;
            }
            assert!(grown, "fan cannot stop while elementary with Δ+μ colours");
        }
    }

    /// Moves each colour on the parent chain of fan edge `t` one step towards
    /// the uncoloured edge, then gives fan edge `t` colour `alpha`.
    fn shift(&mut self, fan: &[usize], parent: &[usize], t: usize, alpha: u32) {
        let mut chain = vec![t];
        while *chain.last().unwrap() != 0 {
            chain.push(parent[*chain.last().unwrap()]);
        }
        chain.reverse();
        let colours: Vec<u32> = chain.iter().map(|&s| self.col[fan[s]]).collect();
        for &s in &chain {
            self.set(fan[s], 0);
        }
        for w in 0..chain.len() - 1 {
            self.set(fan[chain[w]], colours[w + 1]);
        }
        self.set(fan[t], alpha);
    }
}

/// Proper edge-colouring with at most Δ+μ colours built by fan recolouring
/// and alternating-path swaps; no search.
pub fn vizing_colour(g: &MultiGraph) -> PartialEdgeColouring {
    let k = (g.max_degree() + g.max_multiplicity()) as u32;
    assert!(k <= crate::colouring::MAX_PALETTE, "palette too large");
    let mut s = State {
        g,
        k,
        col: vec![0; g.edge_count()],
        at: vec![vec![None; k as usize + 1]; g.vertex_count()],
    };
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&p| g.edges()[p].id);
    for p in order {
        s.colour_edge(p);
    }
    g.edges().iter().zip(&s.col).map(|(e, &c)| (e.id, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_proper;
    use proptest::prelude::*;

    fn check(g: &MultiGraph) {
        let c = vizing_colour(g);
        assert_eq!(c.len(), g.edge_count());
        assert!(is_proper(g, &c));
        let bound = (g.max_degree() + g.max_multiplicity()) as u32;
        assert!(c.max_colour().unwrap_or(0) <= bound);
    }

    #[test]
    fn small_examples() {
        let star = MultiGraph::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(vizing_colour(&star).colour_count(), 4);
        let shannon = MultiGraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]).unwrap();
        check(&shannon);
        assert!(vizing_colour(&shannon).colour_count() <= 6);
        let c5 = MultiGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        check(&c5);
        assert!(vizing_colour(&c5).colour_count() <= 3);
        check(&MultiGraph::new(3));
    }

    #[test]
    fn complete_graphs() {
        for n in 2..9 {
            let mut g = MultiGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v).unwrap();
                }
            }
            check(&g);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn within_delta_plus_mu(n in 2usize..8, raw in prop::collection::vec((0usize..8, 0usize..8), 0..24)) {
            let mut g = MultiGraph::new(n);
            for (u, v) in raw {
                let (u, v) = (u % n, v % n);
                if u != v && g.multiplicity(u, v) < 3 {
                    g.add_edge(u, v).unwrap();
                }
            }
            check(&g);
        }
    }
}
