use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph};

/// Cyclic order of incident edges around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub around: Vec<Vec<EdgeId>>,
}

/// A closed boundary walk as (tail vertex, edge) steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub walk: Vec<(usize, EdgeId)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.walk.iter().map(|&(v, _)| v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSet {
    pub faces: Vec<Face>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// V − E + F counting only non-isolated vertices.
    pub fn euler_characteristic(&self, g: &MultiGraph) -> i64 {
        let v = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).count() as i64;
        v - g.edge_count() as i64 + self.faces.len() as i64
    }
}

impl RotationSystem {
    pub fn new(around: Vec<Vec<EdgeId>>) -> Self {
        RotationSystem { around }
    }

    /// Every incident edge listed exactly once at each endpoint, and nothing else.
    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.around.len() != g.vertex_count() {
            return Err(Error::Input("rotation has wrong vertex count".into()));
        }
        for v in 0..g.vertex_count() {
            let mut want: Vec<EdgeId> = g.incident_edges(v).map(|e| e.id).collect();
            let mut have = self.around[v].clone();
            want.sort();
            have.sort();
            if want != have {
                return Err(Error::Input(format!("rotation at vertex {v} does not match its edges")));
            }
        }
        Ok(())
    }

    /// Edge after `e` in the rotation at `v`.
    pub fn successor(&self, v: usize, e: EdgeId) -> Option<EdgeId> {
        let r = &self.around[v];
        let i = r.iter().position(|&f| f == e)?;
        Some(r[(i + 1) % r.len()])
    }

    /// Drops `e` from both endpoints' rotations.
    pub fn remove_edge(&mut self, e: EdgeId) {
        for r in &mut self.around {
            r.retain(|&f| f != e);
        }
    }

    /// Plane graph from oriented boundary walks of vertices. Every edge
    /// must be traversed once in each direction.
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<(MultiGraph, RotationSystem)> {
        let mut g = MultiGraph::new(n);
        let mut ids: HashMap<(usize, usize), EdgeId> = HashMap::new();
        let mut succ: Vec<BTreeMap<EdgeId, EdgeId>> = vec![BTreeMap::new(); n];
        let mut id_of = |g: &mut MultiGraph, a: usize, b: usize| -> Result<EdgeId> {
            let key = (a.min(b), a.max(b));
            if let Some(&e) = ids.get(&key) {
                return Ok(e);
            }
            let e = g.add_edge(a, b)?;
            ids.insert(key, e);
            Ok(e)
        };
        for f in faces {
            let k = f.len();
            for i in 0..k {
                let (prev, v, next) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
                let back = id_of(&mut g, v, prev)?;
                let fwd = id_of(&mut g, v, next)?;
                if succ[v].insert(back, fwd).is_some() {
                    return Err(Error::Input(format!("faces overlap at vertex {v}")));
                }
            }
        }
        let mut around = vec![Vec::new(); n];
        for v in 0..n {
            let Some((&start, _)) = succ[v].iter().next() else { continue };
            let mut e = start;
            loop {
                around[v].push(e);
                e = *succ[v].get(&e).ok_or_else(|| Error::Input(format!("open rotation at vertex {v}")))?;
                if e == start {
                    break;
                }
            }
        }
        let r = RotationSystem { around };
        r.check(&g)?;
        Ok((g, r))
    }
}

/// Boundary walks: from a dart u→v the next dart leaves v along the edge
/// after uv in the rotation at v.
pub fn trace_faces(g: &MultiGraph, r: &RotationSystem) -> Result<FaceSet> {
    r.check(g)?;
    let mut used: HashSet<(EdgeId, usize)> = HashSet::new();
    let mut faces = Vec::new();
    let mut darts: Vec<(EdgeId, usize)> = Vec::new();
    for v in 0..g.vertex_count() {
        for &e in &r.around[v] {
            darts.push((e, v));
        }
    }
    for &(e0, t0) in &darts {
        if used.contains(&(e0, t0)) {
            continue;
        }
        let mut walk = Vec::new();
        let (mut e, mut t) = (e0, t0);
        loop {
            used.insert((e, t));
            walk.push((t, e));
            let head = g.edge(e)?.other(t);
            e = r.successor(head, e).expect("checked rotation");
            t = head;
            if (e, t) == (e0, t0) {
                break;
            }
            if used.contains(&(e, t)) {
                return Err(Error::Input("rotation does not close into faces".into()));
            }
        }
        faces.push(Face { walk });
    }
    Ok(FaceSet { faces })
}
