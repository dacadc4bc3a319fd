use crate::graph::{EdgeId, MultiGraph};

/// Vertex count followed by the upper triangle of the multiplicity matrix
/// under the canonical labelling.
pub type CanonicalCode = Vec<u8>;

struct Matrix {
    n: usize,
    a: Vec<u8>,
}

impl Matrix {
    fn of(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut a = vec![0u8; n * n];
        for e in g.edges() {
            a[e.u * n + e.v] += 1;
            a[e.v * n + e.u] += 1;
        }
        Matrix { n, a }
    }

    fn at(&self, u: usize, v: usize) -> u8 {
        self.a[u * self.n + v]
    }
}

/// Colour refinement: recolours by (colour, sorted neighbour signature)
/// until stable. Colours are dense ranks, so the result is label-invariant.
fn refine(m: &Matrix, colour: &mut [usize]) {
    let n = m.n;
    let mut classes = count(colour);
    loop {
        let keys: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
            .map(|v| {
                let mut sig: Vec<(usize, u8)> =
                    (0..n).filter(|&w| m.at(v, w) > 0).map(|w| (colour[w], m.at(v, w))).collect();
                sig.sort_unstable();
                (colour[v], sig)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<(usize, u8)>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        for v in 0..n {
            colour[v] = sorted.binary_search(&&keys[v]).unwrap();
        }
        let now = sorted.len();
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count(colour: &[usize]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn encode(m: &Matrix, colour: &[usize]) -> CanonicalCode {
    let n = m.n;
    let mut inv = vec![0; n];
    for v in 0..n {
        inv[colour[v]] = v;
    }
    let mut code = Vec::with_capacity(1 + n * (n - 1) / 2);
    code.push(n as u8);
    for i in 0..n {
        for j in i + 1..n {
            code.push(m.at(inv[i], inv[j]));
        }
    }
    code
}

fn search(m: &Matrix, colour: Vec<usize>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    let n = m.n;
    if count(&colour) == n {
        let code = encode(m, &colour);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colour));
        }
        return;
    }
    let mut sizes = vec![0usize; n];
    for &c in &colour {
        sizes[c] += 1;
    }
    let target = (0..n).find(|&c| sizes[c] > 1).unwrap();
    for v in (0..n).filter(|&v| colour[v] == target) {
        // Split `target` into {v} and the rest, keeping colours dense.
        let mut next: Vec<usize> = colour.iter().map(|&c| 2 * c + 1).collect();
        next[v] -= 1;
        let mut ranks = next.clone();
        ranks.sort_unstable();
        ranks.dedup();
        for c in next.iter_mut() {
            *c = ranks.binary_search(c).unwrap();
        }
        refine(m, &mut next);
        search(m, next, best);
    }
}

/// Canonical code; two multigraphs are isomorphic iff their codes agree.
pub fn canonical_code(g: &MultiGraph) -> CanonicalCode {
    canonical_form(g).1
}

/// The canonical relabelling of `g` (edges renumbered `0..` in
/// lexicographic order of their ends) and its code.
pub fn canonical_form(g: &MultiGraph) -> (MultiGraph, CanonicalCode) {
    let m = Matrix::of(g);
    let n = m.n;
    if n == 0 {
        return (MultiGraph::new(0), vec![0]);
    }
    let mut colour = vec![0; n];
    refine(&m, &mut colour);
    let mut best = None;
    search(&m, colour, &mut best);
    let (code, _) = best.unwrap();
    let mut edges = Vec::new();
    let mut k = 1;
    for i in 0..n {
        for j in i + 1..n {
            for _ in 0..code[k] {
                edges.push((EdgeId(edges.len() as u32), i, j));
            }
            k += 1;
        }
    }
    (MultiGraph::from_edges(n, edges).unwrap(), code)
}
