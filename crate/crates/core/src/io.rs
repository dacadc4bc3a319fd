//! JSON file formats and DOT export.
//!
//! Graph: `{"n": 5, "edges": [[0, 0, 1], ["a", 1, 2]], "rotation": {"0": [0, ...]}}`.
//! Integer ids are kept; string ids get fresh ids above the largest integer
//! id, in order of appearance, and are echoed back in every output.
//! Precolouring: `{"palette": k, "colours": {"<edge id>": colour}}`.
//! Lists: `{"palette": k, "lists": {"<edge id>": [colour, ...]}}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::colouring::{Colour, ColourSet, ListAssignment, Palette, PartialEdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, MultiGraph};
use crate::planar::RotationSystem;
use crate::solver::SolveOutcome;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdToken {
    Int(u32),
    Str(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(IdToken, usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<String, Vec<IdToken>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ColoursFile {
    palette: u32,
    colours: BTreeMap<String, Colour>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ListsFile {
    palette: u32,
    lists: BTreeMap<String, Vec<Colour>>,
}

/// Two-way map between edge ids and the names used in files.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeLabels {
    by_name: BTreeMap<String, EdgeId>,
    by_id: BTreeMap<EdgeId, String>,
}

impl EdgeLabels {
    pub fn resolve(&self, name: &str) -> Result<EdgeId> {
        if let Some(&id) = self.by_name.get(name) {
            return Ok(id);
        }
        name.parse::<u32>()
            .map(EdgeId)
            .map_err(|_| Error::Input(format!("unknown edge label {name:?}")))
    }

    pub fn name(&self, id: EdgeId) -> String {
        self.by_id.get(&id).cloned().unwrap_or_else(|| id.0.to_string())
    }

    fn token(&self, id: EdgeId) -> Value {
        match self.by_id.get(&id) {
            Some(s) => json!(s),
            None => json!(id.0),
        }
    }

    fn insert(&mut self, name: String, id: EdgeId) {
        self.by_id.insert(id, name.clone());
        self.by_name.insert(name, id);
    }
}

/// A parsed graph file.
#[derive(Clone, Debug)]
pub struct GraphInput {
    pub graph: MultiGraph,
    pub labels: EdgeLabels,
    pub rotation: Option<RotationSystem>,
}

impl GraphInput {
    pub fn plain(graph: MultiGraph) -> Self {
        GraphInput { graph, labels: EdgeLabels::default(), rotation: None }
    }
}

fn resolve_token(labels: &EdgeLabels, t: &IdToken) -> Result<EdgeId> {
    match t {
        IdToken::Int(i) => Ok(EdgeId(*i)),
        IdToken::Str(s) => labels.resolve(s),
    }
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    let file: GraphFile = serde_json::from_str(text)?;
    let next = file
        .edges
        .iter()
        .filter_map(|(t, _, _)| match t {
            IdToken::Int(i) => Some(i + 1),
            IdToken::Str(_) => None,
        })
        .max()
        .unwrap_or(0);
    let mut labels = EdgeLabels::default();
    let mut fresh = next;
    let mut edges = Vec::with_capacity(file.edges.len());
    for (t, u, v) in &file.edges {
        let id = match t {
            IdToken::Int(i) => EdgeId(*i),
            IdToken::Str(s) => {
                if labels.by_name.contains_key(s) {
                    return Err(Error::Input(format!("edge label {s:?} used twice")));
                }
                let id = EdgeId(fresh);
                fresh += 1;
                labels.insert(s.clone(), id);
                id
            }
        };
        edges.push((id, *u, *v));
    }
    let graph = MultiGraph::from_edges(file.n, edges)?;
    let rotation = match file.rotation {
        None => None,
        Some(map) => {
            let mut around = vec![Vec::new(); graph.vertex_count()];
            for (v, ids) in map {
                let v: usize = v.parse().map_err(|_| Error::Input(format!("bad rotation vertex {v:?}")))?;
                if v >= graph.vertex_count() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: graph.vertex_count() });
                }
                around[v] = ids.iter().map(|t| resolve_token(&labels, t)).collect::<Result<_>>()?;
            }
            let r = RotationSystem::new(around);
            r.check(&graph)?;
            Some(r)
        }
    };
    Ok(GraphInput { graph, labels, rotation })
}

pub fn graph_to_json(g: &MultiGraph, labels: &EdgeLabels, rotation: Option<&RotationSystem>) -> Value {
    let edges: Vec<Value> = g.edges().iter().map(|e| json!([labels.token(e.id), e.u, e.v])).collect();
    let mut out = json!({ "n": g.vertex_count(), "edges": edges });
    if let Some(r) = rotation {
        let map: BTreeMap<String, Vec<Value>> = r
            .around
            .iter()
            .enumerate()
            .filter(|(_, ids)| !ids.is_empty())
            .map(|(v, ids)| (v.to_string(), ids.iter().map(|&e| labels.token(e)).collect()))
            .collect();
        out["rotation"] = json!(map);
    }
    out
}

pub fn parse_precolouring(text: &str, input: &GraphInput) -> Result<(Palette, PartialEdgeColouring)> {
    let file: ColoursFile = serde_json::from_str(text)?;
    let palette = Palette::new(file.palette)?;
    let mut c = PartialEdgeColouring::new();
    for (name, colour) in file.colours {
        let id = input.labels.resolve(&name)?;
        input.graph.edge(id)?;
        c.assign(id, colour);
    }
    Ok((palette, c))
}

pub fn colouring_to_json(c: &PartialEdgeColouring, labels: &EdgeLabels) -> Value {
    let map: BTreeMap<String, Colour> = c.iter().map(|(e, col)| (labels.name(e), col)).collect();
    json!(map)
}

pub fn precolouring_to_json(p: Palette, c: &PartialEdgeColouring, labels: &EdgeLabels) -> Value {
    json!({ "palette": p.size(), "colours": colouring_to_json(c, labels) })
}

pub fn parse_lists(text: &str, input: &GraphInput) -> Result<(Palette, ListAssignment)> {
    let file: ListsFile = serde_json::from_str(text)?;
    let palette = Palette::new(file.palette)?;
    let mut l = ListAssignment::new();
    for (name, colours) in file.lists {
        let id = input.labels.resolve(&name)?;
        input.graph.edge(id)?;
        if let Some(&bad) = colours.iter().find(|&&c| !palette.contains(c)) {
            return Err(Error::ColourOutOfPalette { colour: bad, palette: palette.size() });
        }
        l.set(id, colours.into_iter().collect());
    }
    Ok((palette, l))
}

pub fn lists_to_json(p: Palette, l: &ListAssignment, labels: &EdgeLabels) -> Value {
    let map: BTreeMap<String, Vec<Colour>> = l.iter().map(|(e, s)| (labels.name(e), s.iter().collect())).collect();
    json!({ "palette": p.size(), "lists": map })
}

pub fn outcome_to_json(o: &SolveOutcome, labels: &EdgeLabels) -> Value {
    json!({
        "status": o.status,
        "method": o.method,
        "colouring": colouring_to_json(&o.colouring, labels),
        "stats": o.stats,
    })
}

pub fn edge_set_from_names<'a>(names: impl IntoIterator<Item = &'a str>, input: &GraphInput) -> Result<EdgeSet> {
    let mut s = EdgeSet::new();
    for n in names {
        let id = input.labels.resolve(n)?;
        input.graph.edge(id)?;
        s.insert(id);
    }
    Ok(s)
}

const DOT_COLOURS: [&str; 10] =
    ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"];

/// Undirected DOT; coloured edges are labelled with their colour.
pub fn to_dot(g: &MultiGraph, c: Option<&PartialEdgeColouring>, labels: &EdgeLabels) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(s, "  {v};");
    }
    for e in g.edges() {
        let name = labels.name(e.id);
        match c.and_then(|c| c.get(e.id)) {
            Some(col) => {
                let pen = DOT_COLOURS[(col as usize).saturating_sub(1) % DOT_COLOURS.len()];
                let _ = writeln!(s, "  {} -- {} [label=\"{name}:{col}\", color={pen}];", e.u, e.v);
            }
            None => {
                let _ = writeln!(s, "  {} -- {} [label=\"{name}\"];", e.u, e.v);
            }
        }
    }
    s.push_str("}\n");
    s
}

pub fn colour_set_to_json(s: ColourSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}
