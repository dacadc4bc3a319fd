use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::reduce::{auxiliary_edges, first_cycle, PlanarMode};
use super::rotation::{trace_faces, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, MultiGraph};
use crate::scalar::Scalar;

/// Which rule table to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Matchings, threshold 17.
    S41,
    /// Distance-3 matchings, threshold 20.
    S42,
}

impl Variant {
    pub fn threshold(self) -> usize {
        match self {
            Variant::S41 => 17,
            Variant::S42 => 20,
        }
    }

    fn mode(self) -> PlanarMode {
        match self {
            Variant::S41 => PlanarMode::MatchingDeltaPlus1,
            Variant::S42 => PlanarMode::Distance3Delta,
        }
    }
}

/// How to read the two self-referential rules of the first table (δ7 and
/// δ9). `Corrected` reads δ7 as "neither δ5 nor δ6" and δ9 as "not δ8";
/// `Literal` drops the self-references and reports every face-vertex pair
/// where rules with different values both fire.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reading {
    #[default]
    Corrected,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditOptions {
    pub variant: Variant,
    pub reading: Reading,
    /// The Δ the rules refer to; defaults to the maximum degree.
    pub delta: Option<usize>,
}

impl AuditOptions {
    pub fn new(variant: Variant) -> Self {
        AuditOptions { variant, reading: Reading::Corrected, delta: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClass {
    pub degree: usize,
    /// Adjacent to a vertex of degree 1.
    pub in_t: bool,
    /// Degree 2 and not incident with a precoloured edge.
    pub v2_prime: bool,
}

impl VertexClass {
    pub fn label(&self) -> String {
        let base = format!("{}{}", if self.in_t { 'T' } else { 'U' }, self.degree);
        if self.v2_prime {
            format!("{base},V2'")
        } else {
            base
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Transfer<S> {
    pub rule: &'static str,
    pub from: Element,
    pub to: Element,
    pub amount: S,
}

/// Charges per vertex and face, split by rule family.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeLedger<S> {
    pub vertex_alpha: Vec<S>,
    pub vertex_beta: Vec<S>,
    pub vertex_gamma: Vec<S>,
    pub vertex_delta: Vec<S>,
    pub face_alpha: Vec<S>,
    pub face_delta: Vec<S>,
    pub beta_rule: Vec<&'static str>,
    pub classification: Vec<VertexClass>,
    pub transfers: Vec<Transfer<S>>,
}

impl<S: Scalar> ChargeLedger<S> {
    pub fn vertex_balance(&self, v: usize) -> S {
        self.vertex_alpha[v] + self.vertex_beta[v] + self.vertex_gamma[v] + self.vertex_delta[v]
    }

    pub fn face_balance(&self, f: usize) -> S {
        self.face_alpha[f] + self.face_delta[f]
    }
}

/// Structural hypotheses of the discharging argument that the input fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    DeltaBelowThreshold { delta: usize, threshold: usize },
    NotSimple,
    InvalidMatching,
    LightEdges(Vec<EdgeId>),
    EvenCycleInAuxiliary(Vec<EdgeId>),
    DeltaVerticesNotDominant { delta_vertices: usize, small_vertices: usize },
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::DeltaBelowThreshold { .. } => "DeltaBelowThreshold",
            Violation::NotSimple => "NotSimple",
            Violation::InvalidMatching => "InvalidMatching",
            Violation::LightEdges(_) => "LightEdge",
            Violation::EvenCycleInAuxiliary(_) => "EvenCycleInAuxiliary",
            Violation::DeltaVerticesNotDominant { .. } => "DeltaVerticesNotDominant",
        }
    }
}

/// Several rules fired for one vertex on one face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleConflict {
    pub vertex: usize,
    pub face: usize,
    pub rules: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AuditReport<S> {
    pub variant: Variant,
    pub reading: Reading,
    pub delta: usize,
    pub ledger: ChargeLedger<S>,
    /// Distinct vertices on each reduced face walk.
    pub face_size: Vec<usize>,
    pub violations: Vec<Violation>,
    pub conflicts: Vec<RuleConflict>,
    pub sum_alpha: S,
    pub sum_gamma: S,
    pub sum_delta: S,
}

impl<S: Scalar> AuditReport<S> {
    pub fn identities_hold(&self) -> bool {
        self.sum_alpha == S::int(-12) && self.sum_gamma == S::zero() && self.sum_delta == S::zero()
    }

    pub fn failing_vertices(&self) -> Vec<usize> {
        (0..self.ledger.vertex_alpha.len()).filter(|&v| self.ledger.vertex_balance(v) < S::zero()).collect()
    }

    pub fn failing_faces(&self) -> Vec<usize> {
        (0..self.ledger.face_alpha.len()).filter(|&f| self.ledger.face_balance(f) < S::zero()).collect()
    }

    /// Every local failure comes with at least one named violation.
    pub fn failures_explained(&self) -> bool {
        (self.failing_vertices().is_empty() && self.failing_faces().is_empty()) || !self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let l = &self.ledger;
        let element = |e: Element| match e {
            Element::Vertex(v) => json!({ "vertex": v }),
            Element::Face(f) => json!({ "face": f }),
        };
        let vertices: Vec<Value> = (0..l.vertex_alpha.len())
            .map(|v| {
                json!({
                    "vertex": v,
                    "class": l.classification[v].label(),
                    "alpha": l.vertex_alpha[v].render(),
                    "beta": l.vertex_beta[v].render(),
                    "beta_rule": l.beta_rule[v],
                    "gamma": l.vertex_gamma[v].render(),
                    "delta": l.vertex_delta[v].render(),
                    "balance": l.vertex_balance(v).render(),
                    "holds": l.vertex_balance(v) >= S::zero(),
                })
            })
            .collect();
        let faces: Vec<Value> = (0..l.face_alpha.len())
            .map(|f| {
                json!({
                    "face": f,
                    "size": self.face_size[f],
                    "alpha": l.face_alpha[f].render(),
                    "delta": l.face_delta[f].render(),
                    "balance": l.face_balance(f).render(),
                    "holds": l.face_balance(f) >= S::zero(),
                })
            })
            .collect();
        let transfers: Vec<Value> = l
            .transfers
            .iter()
            .map(|t| json!({ "rule": t.rule, "from": element(t.from), "to": element(t.to), "amount": t.amount.render() }))
            .collect();
        json!({
            "variant": self.variant,
            "reading": self.reading,
            "delta": self.delta,
            "vertices": vertices,
            "faces": faces,
            "transfers": transfers,
            "violations": self.violations,
            "conflicts": self.conflicts,
            "sum_alpha": self.sum_alpha.render(),
            "sum_gamma": self.sum_gamma.render(),
            "sum_delta": self.sum_delta.render(),
            "identities_hold": self.identities_hold(),
        })
    }
}

struct Ctx<'a> {
    g: &'a MultiGraph,
    delta: usize,
    class: Vec<VertexClass>,
    m_pairs: HashSet<(usize, usize)>,
}

impl Ctx<'_> {
    fn d(&self, v: usize) -> usize {
        self.class[v].degree
    }

    fn t(&self, v: usize) -> bool {
        self.class[v].in_t
    }

    fn t_range(&self, v: usize, lo: usize, hi: usize) -> bool {
        self.t(v) && (lo..=hi).contains(&self.d(v))
    }

    fn u_range(&self, v: usize, lo: usize, hi: usize) -> bool {
        !self.t(v) && (lo..=hi).contains(&self.d(v))
    }

    fn joined_in_m(&self, a: usize, b: usize) -> bool {
        self.m_pairs.contains(&(a.min(b), a.max(b)))
    }

    fn t2(&self, v: usize) -> bool {
        self.d(v) == 2 && self.t(v)
    }
}

/// Candidate δ rules for one occurrence of `v` on a reduced walk, in table
/// order, with their values.
fn delta_rules<S: Scalar>(
    c: &Ctx,
    variant: Variant,
    reading: Reading,
    v: usize,
    prev: usize,
    next: usize,
    size: usize,
) -> Vec<(&'static str, S)> {
    let d = c.d(v);
    let dl = c.delta;
    let di = d as i64;
    let mut out = Vec::new();
    match variant {
        Variant::S41 => {
            if d == 3 && c.t(v) {
                out.push(("δ1", S::int(1)));
            }
            if d == 3 && !c.t(v) {
                out.push(("δ2", S::ratio(5, 3)));
            }
            if c.t(v) && d >= 4 && d + 2 <= dl {
                out.push(("δ3", S::int(3) - S::ratio(6, di - 1)));
            }
            if !c.t(v) && d >= 4 && d + 2 <= dl {
                out.push(("δ4", S::int(3) - S::ratio(6, di)));
            }
            if d + 1 >= dl {
                let small = |x: usize| c.t_range(x, 3, 6) || c.u_range(x, 3, 5);
                let d5 = size == 3 && c.u_range(prev, 3, 8) && c.u_range(next, 3, 8) && c.joined_in_m(prev, next);
                let d6 = size == 3 && (small(prev) || small(next));
                let d7 = size == 3 && !d6 && (reading == Reading::Literal || !d5);
                let d8 = size >= 4 && (c.t_range(prev, 3, 6) || c.t_range(next, 3, 6));
                let d9 = size >= 4 && (reading == Reading::Literal || !d8);
                for (fires, name, val) in [
                    (d5, "δ5", S::int(3)),
                    (d6, "δ6", S::ratio(5, 2)),
                    (d7, "δ7", S::int(2)),
                    (d8, "δ8", S::int(2)),
                    (d9, "δ9", S::ratio(3, 2)),
                ] {
                    if fires {
                        out.push((name, val));
                    }
                }
            }
        }
        Variant::S42 => {
            if d == 2 && !c.t(v) {
                out.push(("δ1", S::int(1)));
            }
            if c.t(v) && d >= 3 && d + 4 <= dl {
                out.push(("δ2", S::int(3) - S::ratio(6, di - 1)));
            }
            if !c.t(v) && d >= 3 && d + 4 <= dl {
                out.push(("δ3", S::int(3) - S::ratio(6, di)));
            }
            if d + 3 >= dl {
                let t3 = |x: usize| c.t(x) && c.d(x) == 3;
                let d4 = size == 3 && c.joined_in_m(prev, next);
                let d5 = t3(prev) || t3(next);
                if d4 {
                    out.push(("δ4", S::int(4)));
                }
                if d5 {
                    out.push(("δ5", S::int(3)));
                }
                if !d4 && !d5 {
                    out.push(("δ6", S::ratio(5, 2)));
                }
            }
        }
    }
    out
}

fn classify(g: &MultiGraph, m: &EdgeSet) -> Vec<VertexClass> {
    (0..g.vertex_count())
        .map(|v| VertexClass {
            degree: g.degree(v),
            in_t: g.neighbours(v).iter().any(|&w| g.degree(w) == 1),
            v2_prime: g.degree(v) == 2 && !g.incident_edges(v).any(|e| m.contains(e.id)),
        })
        .collect()
}

fn violations(g: &MultiGraph, m: &EdgeSet, variant: Variant, delta: usize, class: &[VertexClass]) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    if delta < variant.threshold() {
        out.push(Violation::DeltaBelowThreshold { delta, threshold: variant.threshold() });
    }
    if !g.is_simple() {
        out.push(Violation::NotSimple);
    }
    let valid = match variant {
        Variant::S41 => g.is_matching(m),
        Variant::S42 => g.is_distance_matching(m, 3)?,
    };
    if !valid {
        out.push(Violation::InvalidMatching);
    }
    let bound = match variant {
        Variant::S41 => delta + 2,
        Variant::S42 => delta + 1,
    };
    let mut light: Vec<EdgeId> = g
        .edges()
        .iter()
        .filter(|e| !m.contains(e.id) && g.degree(e.u) + g.degree(e.v) <= bound)
        .map(|e| e.id)
        .collect();
    light.sort();
    if !light.is_empty() {
        out.push(Violation::LightEdges(light));
    }
    if let Some(c) = first_cycle(g, &auxiliary_edges(g, m, variant.mode(), delta)) {
        out.push(Violation::EvenCycleInAuxiliary(c));
    }
    let big = class.iter().filter(|c| c.degree == delta).count();
    let small = class
        .iter()
        .filter(|c| match variant {
            Variant::S41 => c.degree == 3,
            Variant::S42 => c.v2_prime,
        })
        .count();
    if big <= small {
        out.push(Violation::DeltaVerticesNotDominant { delta_vertices: big, small_vertices: small });
    }
    Ok(out)
}

/// Applies the α/β/γ/δ rule table of `opts.variant` to a connected plane
/// graph and reports every charge, every local inequality and the global
/// identities.
pub fn audit_discharge<S: Scalar>(
    g: &MultiGraph,
    r: &RotationSystem,
    m: &EdgeSet,
    opts: AuditOptions,
) -> Result<AuditReport<S>> {
    m.validate(g)?;
    if g.edge_count() == 0 || !g.is_connected() || (0..g.vertex_count()).any(|v| g.degree(v) == 0) {
        return Err(Error::Input("audit needs a connected graph without isolated vertices".into()));
    }
    let faces = trace_faces(g, r)?;
    if faces.euler_characteristic(g) != 2 {
        return Err(Error::Input("rotation system is not a plane embedding".into()));
    }
    let delta = opts.delta.unwrap_or_else(|| g.max_degree());
    let class = classify(g, m);
    let m_pairs = m
        .iter()
        .map(|e| {
            let e = g.edge(e).unwrap();
            (e.u.min(e.v), e.u.max(e.v))
        })
        .collect();
    let c = Ctx { g, delta, class, m_pairs };
    let n = g.vertex_count();
    let nf = faces.len();

    let vertex_alpha: Vec<S> = (0..n).map(|v| S::int(3 * c.d(v) as i64 - 6)).collect();
    let face_alpha: Vec<S> = vec![S::int(-6); nf];

    let mut vertex_beta = vec![S::zero(); n];
    let mut beta_rule = vec!["β3"; n];
    for v in 0..n {
        let small = match opts.variant {
            Variant::S41 => c.d(v) == 3,
            Variant::S42 => c.class[v].v2_prime,
        };
        if c.d(v) == delta {
            vertex_beta[v] = S::int(-2);
            beta_rule[v] = "β1";
        } else if small {
            vertex_beta[v] = S::int(2);
            beta_rule[v] = "β2";
        }
    }

    let mut transfers = Vec::new();
    let mut vertex_gamma = vec![S::zero(); n];
    for e in c.g.edges() {
        for (v, u) in [(e.u, e.v), (e.v, e.u)] {
            let rule = if c.d(v) == 1 {
                Some(("γ1", S::int(3)))
            } else if opts.variant == Variant::S42 && c.t2(v) && c.d(u) == delta {
                Some(("γ2", S::int(3)))
            } else if opts.variant == Variant::S42
                && c.d(v) == 2
                && !c.t(v)
                && !c.class[v].v2_prime
                && c.d(u) == delta
            {
                Some(("γ3", S::int(2)))
            } else {
                None
            };
            if let Some((name, amount)) = rule {
                vertex_gamma[v] = vertex_gamma[v] + amount;
                vertex_gamma[u] = vertex_gamma[u] - amount;
                transfers.push(Transfer { rule: name, from: Element::Vertex(u), to: Element::Vertex(v), amount });
            }
        }
    }

    let excluded: Vec<bool> = (0..n)
        .map(|v| match opts.variant {
            Variant::S41 => c.d(v) == 1,
            Variant::S42 => c.d(v) == 1 || c.t2(v),
        })
        .collect();
    let mut vertex_delta = vec![S::zero(); n];
    let mut face_delta = vec![S::zero(); nf];
    let mut face_size = Vec::with_capacity(nf);
    let mut conflicts = Vec::new();
    for (fi, face) in faces.faces.iter().enumerate() {
        let mut walk: Vec<usize> = Vec::new();
        for v in face.vertices().filter(|&v| !excluded[v]) {
            if walk.last() != Some(&v) {
                walk.push(v);
            }
        }
        while walk.len() > 1 && walk.first() == walk.last() {
            walk.pop();
        }
        let size = walk.iter().collect::<HashSet<_>>().len();
        face_size.push(size);
        let k = walk.len();
        for i in 0..k {
            let (v, prev, next) = (walk[i], walk[(i + k - 1) % k], walk[(i + 1) % k]);
            let rules: Vec<(&'static str, S)> = delta_rules(&c, opts.variant, opts.reading, v, prev, next, size);
            if rules.iter().any(|(_, x)| *x != rules[0].1) {
                conflicts.push(RuleConflict {
                    vertex: v,
                    face: fi,
                    rules: rules.iter().map(|(n, _)| n.to_string()).collect(),
                });
            }
            if let Some(&(name, amount)) = rules.first() {
                vertex_delta[v] = vertex_delta[v] - amount;
                face_delta[fi] = face_delta[fi] + amount;
                transfers.push(Transfer { rule: name, from: Element::Vertex(v), to: Element::Face(fi), amount });
            }
        }
    }

    let sum_alpha = vertex_alpha.iter().copied().sum::<S>() + face_alpha.iter().copied().sum::<S>();
    let sum_gamma = vertex_gamma.iter().copied().sum::<S>();
    let sum_delta = vertex_delta.iter().copied().sum::<S>() + face_delta.iter().copied().sum::<S>();
    let violations = violations(g, m, opts.variant, delta, &c.class)?;
    Ok(AuditReport {
        variant: opts.variant,
        reading: opts.reading,
        delta,
        ledger: ChargeLedger {
            vertex_alpha,
            vertex_beta,
            vertex_gamma,
            vertex_delta,
            face_alpha,
            face_delta,
            beta_rule,
            classification: c.class,
            transfers,
        },
        face_size,
        violations,
        conflicts,
        sum_alpha,
        sum_gamma,
        sum_delta,
    })
}
