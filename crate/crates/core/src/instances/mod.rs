//! Sharpness families, ρ(G), exhaustive enumeration and the claim
//! verification harness.
mod canon;
mod enumerate;
mod verify;

use serde::{Deserialize, Serialize};

use crate::colouring::{Palette, PartialEdgeColouring};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::scalar::Scalar;

pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use enumerate::{
    enumerate_multigraphs, enumerate_precolourings, for_each_precolouring, precolouring_sets, EnumSpec, Shape,
};
pub use verify::{replay, verify, Bounds, Claim, Counterexample, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    SubdividedStar { s: usize },
    ChainBlocks { delta: usize, blocks: usize },
    ShannonTriangle { m1: usize, m2: usize, m3: usize },
    MultiStar { s: usize, k: usize },
}

/// A generated instance together with the palette it is meant for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: MultiGraph,
    pub precolouring: PartialEdgeColouring,
    pub palette: Palette,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Input(m.into()));
        match *self {
            FamilySpec::SubdividedStar { s } if s < 2 => bad("star needs s ≥ 2"),
            FamilySpec::MultiStar { s, k } if s < 2 || k < 1 => bad("multi-star needs s ≥ 2 and k ≥ 1"),
            FamilySpec::ChainBlocks { delta, blocks } if delta < 4 || delta % 2 == 1 || blocks < 2 => {
                bad("chain needs even Δ ≥ 4 and at least two blocks")
            }
            FamilySpec::ShannonTriangle { m1, m2, m3 } if m1 == 0 || m2 == 0 || m3 == 0 => {
                bad("triangle multiplicities must be positive")
            }
            _ => Ok(()),
        }
    }
}

/// Builds the instance described by `spec`.
pub fn generate(spec: FamilySpec) -> Result<FamilyInstance> {
    spec.validate()?;
    let mut g;
    let mut c = PartialEdgeColouring::new();
    let palette;
    match spec {
        FamilySpec::SubdividedStar { s } | FamilySpec::MultiStar { s, .. } => {
            let k = match spec {
                FamilySpec::MultiStar { k, .. } => k,
                _ => 1,
            };
            g = MultiGraph::new(2 * s + 1);
            for i in 1..=s {
                g.add_edge(0, i)?;
            }
            for i in 1..=s {
                for colour in 1..=k {
                    let e = g.add_edge(i, s + i)?;
                    c.assign(e, colour as u32);
                }
            }
            palette = Palette::new((s + k - 1) as u32)?;
        }
        FamilySpec::ChainBlocks { delta, blocks } => {
            let half = delta / 2;
            g = MultiGraph::new(0);
            let start = g.add_vertex();
            let mut cut = g.add_vertex();
            let first = g.add_edge(start, cut)?;
            c.assign(first, 1);
            for _ in 0..blocks {
                let a: Vec<usize> = (0..half).map(|_| g.add_vertex()).collect();
                let b: Vec<usize> = (0..delta - 1).map(|_| g.add_vertex()).collect();
                let a2: Vec<usize> = (0..half).map(|_| g.add_vertex()).collect();
                let next = g.add_vertex();
                for &x in &a {
                    g.add_edge(cut, x)?;
                }
                for &x in &a {
                    for &y in &b {
                        g.add_edge(x, y)?;
                    }
                }
                for &y in &b {
                    for &x in &a2 {
                        g.add_edge(y, x)?;
                    }
                }
                for &x in &a2 {
                    g.add_edge(x, next)?;
                }
                cut = next;
            }
            let end = g.add_vertex();
            let last = g.add_edge(cut, end)?;
            c.assign(last, 1);
            palette = Palette::new(delta as u32)?;
        }
        FamilySpec::ShannonTriangle { m1, m2, m3 } => {
            g = MultiGraph::new(3);
            for (m, u, v) in [(m1, 0, 1), (m2, 1, 2), (m3, 0, 2)] {
                for _ in 0..m {
                    g.add_edge(u, v)?;
                }
            }
            palette = Palette::new((3 * g.max_degree() / 2) as u32)?;
        }
    }
    Ok(FamilyInstance { graph: g, precolouring: c, palette })
}

/// max over odd vertex sets `T`, `|T| ≥ 3`, of `2|E(G[T])| / (|T| − 1)`.
pub fn compute_rho<S: Scalar>(g: &MultiGraph) -> Result<S> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::Input("ρ needs at least three vertices".into()));
    }
    if n > 24 {
        return Err(Error::Input("ρ is computed by subset enumeration; at most 24 vertices".into()));
    }
    let ends: Vec<u32> = g.edges().iter().map(|e| (1u32 << e.u) | (1u32 << e.v)).collect();
    let mut best = S::zero();
    for t in 0u32..(1 << n) {
        let size = t.count_ones() as i64;
        if size < 3 || size % 2 == 0 {
            continue;
        }
        let inside = ends.iter().filter(|&&m| m & t == m).count() as i64;
        let r = S::ratio(2 * inside, size - 1);
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn family_shapes() {
        let star = generate(FamilySpec::SubdividedStar { s: 5 }).unwrap();
        assert_eq!((star.graph.vertex_count(), star.graph.edge_count(), star.graph.max_degree()), (11, 10, 5));
        assert_eq!(star.palette.size(), 5);
        assert_eq!(star.precolouring.len(), 5);

        let chain = generate(FamilySpec::ChainBlocks { delta: 6, blocks: 2 }).unwrap();
        assert_eq!(chain.graph.vertex_count(), 27);
        assert_eq!(chain.graph.max_degree(), 6);
        assert!(chain.graph.is_bipartite());
        assert_eq!(chain.graph.edge_count(), 2 * 36 + 2);

        let tri = generate(FamilySpec::ShannonTriangle { m1: 2, m2: 2, m3: 2 }).unwrap();
        assert_eq!((tri.graph.vertex_count(), tri.graph.edge_count(), tri.graph.max_degree()), (3, 6, 4));

        let ms = generate(FamilySpec::MultiStar { s: 3, k: 2 }).unwrap();
        assert_eq!(ms.graph.max_multiplicity(), 2);
        assert_eq!(ms.palette.size(), 4);
        assert!(crate::colouring::is_proper(&ms.graph, &ms.precolouring));
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(FamilySpec::SubdividedStar { s: 1 }).is_err());
        assert!(generate(FamilySpec::ChainBlocks { delta: 5, blocks: 2 }).is_err());
        assert!(generate(FamilySpec::ChainBlocks { delta: 4, blocks: 1 }).is_err());
        assert!(generate(FamilySpec::ShannonTriangle { m1: 0, m2: 1, m3: 1 }).is_err());
    }

    #[test]
    fn rho_examples() {
        let tri = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(compute_rho::<Rational64>(&tri).unwrap(), Rational64::from_integer(3));
        let sh = generate(FamilySpec::ShannonTriangle { m1: 2, m2: 2, m3: 2 }).unwrap().graph;
        assert_eq!(compute_rho::<Rational64>(&sh).unwrap(), Rational64::from_integer(6));
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(compute_rho::<Rational64>(&c4).unwrap(), Rational64::from_integer(2));
        assert!((compute_rho::<f64>(&c4).unwrap() - 2.0).abs() < 1e-12);
        assert!(compute_rho::<f64>(&MultiGraph::new(2)).is_err());
    }
}
