//! Palettes, partial edge-colourings, list assignments and the reduction of
//! a precoloured instance to a list-edge-colouring instance.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, MultiGraph};

/// Colours are the dense integers `1..=k`.
pub type Colour = u32;

/// Largest supported palette; colour sets are 64-bit masks.
pub const MAX_PALETTE: u32 = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Palette(u32);

impl Palette {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_PALETTE {
            return Err(Error::PaletteSize(k));
        }
        Ok(Palette(k))
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, c: Colour) -> bool {
        (1..=self.0).contains(&c)
    }

    pub fn colours(self) -> ColourSet {
        ColourSet::full(self.0)
    }
}

/// Set of colours in `1..=63`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColourSet(u64);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    /// `{1, ..., k}`.
    pub fn full(k: u32) -> Self {
        debug_assert!(k <= MAX_PALETTE);
        ColourSet(((1u64 << k) - 1) << 1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        ColourSet(bits & !1)
    }

    pub fn single(c: Colour) -> Self {
        ColourSet(1u64 << c)
    }

    pub fn contains(self, c: Colour) -> bool {
        c <= MAX_PALETTE && self.0 & (1u64 << c) != 0
    }

    pub fn insert(&mut self, c: Colour) {
        self.0 |= 1u64 << c;
    }

    pub fn remove(&mut self, c: Colour) {
        if c <= MAX_PALETTE {
            self.0 &= !(1u64 << c);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<Colour> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max(self) -> Option<Colour> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn union(self, o: ColourSet) -> ColourSet {
        ColourSet(self.0 | o.0)
    }

    pub fn intersection(self, o: ColourSet) -> ColourSet {
        ColourSet(self.0 & o.0)
    }

    pub fn difference(self, o: ColourSet) -> ColourSet {
        ColourSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: ColourSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Colour> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros();
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

impl FromIterator<Colour> for ColourSet {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        let mut s = ColourSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColourSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColourSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<Colour> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&c| c == 0 || c > MAX_PALETTE) {
            return Err(serde::de::Error::custom(format!("colour {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Map from edge ids to colours.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartialEdgeColouring(pub BTreeMap<EdgeId, Colour>);

impl PartialEdgeColouring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, e: EdgeId) -> Option<Colour> {
        self.0.get(&e).copied()
    }

    pub fn assign(&mut self, e: EdgeId, c: Colour) {
        self.0.insert(e, c);
    }

    pub fn unassign(&mut self, e: EdgeId) -> Option<Colour> {
        self.0.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, Colour)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn domain(&self) -> EdgeSet {
        self.0.keys().copied().collect()
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        self.0.values().copied().collect::<ColourSet>().len()
    }

    pub fn max_colour(&self) -> Option<Colour> {
        self.0.values().copied().max()
    }

    /// Colours on coloured edges incident with `v`.
    pub fn colours_at(&self, g: &MultiGraph, v: usize) -> ColourSet {
        g.incident_edges(v).filter_map(|e| self.get(e.id)).collect()
    }

    /// `self` extended by `other`; `other` wins on shared edges.
    pub fn merged(&self, other: &PartialEdgeColouring) -> PartialEdgeColouring {
        let mut out = self.clone();
        out.0.extend(other.iter());
        out
    }

    pub fn restricted_to(&self, keep: &EdgeSet) -> PartialEdgeColouring {
        PartialEdgeColouring(self.iter().filter(|&(e, _)| keep.contains(e)).collect())
    }

    /// Colour-permutation normal form: colours renumbered by first use in
    /// edge-id order.
    pub fn normalised(&self) -> PartialEdgeColouring {
        let mut map: BTreeMap<Colour, Colour> = BTreeMap::new();
        let mut out = PartialEdgeColouring::new();
        for (e, c) in self.iter() {
            let next = map.len() as Colour + 1;
            let nc = *map.entry(c).or_insert(next);
            out.assign(e, nc);
        }
        out
    }
}

impl FromIterator<(EdgeId, Colour)> for PartialEdgeColouring {
    fn from_iter<I: IntoIterator<Item = (EdgeId, Colour)>>(iter: I) -> Self {
        PartialEdgeColouring(iter.into_iter().collect())
    }
}

/// Admissible colours per edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(pub BTreeMap<EdgeId, ColourSet>);

impl ListAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every edge of `g` gets `[k]`.
    pub fn uniform(g: &MultiGraph, palette: Palette) -> Self {
        ListAssignment(g.edge_ids().map(|e| (e, palette.colours())).collect())
    }

    pub fn get(&self, e: EdgeId) -> Option<ColourSet> {
        self.0.get(&e).copied()
    }

    pub fn set(&mut self, e: EdgeId, l: ColourSet) {
        self.0.insert(e, l);
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, ColourSet)> + '_ {
        self.0.iter().map(|(&e, &l)| (e, l))
    }

    pub fn union(&self) -> ColourSet {
        self.0.values().fold(ColourSet::EMPTY, |a, &b| a.union(b))
    }

    /// Every edge of `g` has a list.
    pub fn covers(&self, g: &MultiGraph) -> Result<()> {
        match g.edge_ids().find(|e| !self.0.contains_key(e)) {
            Some(e) => Err(Error::Input(format!("edge {e} has no list"))),
            None => Ok(()),
        }
    }

    pub fn restricted_to(&self, keep: &EdgeSet) -> ListAssignment {
        ListAssignment(self.iter().filter(|&(e, _)| keep.contains(e)).collect())
    }
}

/// First pair of adjacent coloured edges sharing a colour, if any.
pub fn find_conflict(g: &MultiGraph, c: &PartialEdgeColouring) -> Option<(EdgeId, EdgeId)> {
    for v in 0..g.vertex_count() {
        let mut seen: BTreeMap<Colour, EdgeId> = BTreeMap::new();
        for e in g.incident_edges(v) {
            if let Some(col) = c.get(e.id) {
                if let Some(&f) = seen.get(&col) {
                    return Some((f.min(e.id), f.max(e.id)));
                }
                seen.insert(col, e.id);
            }
        }
    }
    None
}

/// No two adjacent coloured edges (parallel edges included) share a colour.
pub fn is_proper(g: &MultiGraph, c: &PartialEdgeColouring) -> bool {
    find_conflict(g, c).is_none()
}

/// Full boundary check for a precolouring: known edges, palette colours,
/// properness.
pub fn validate_precolouring(g: &MultiGraph, c: &PartialEdgeColouring, p: Palette) -> Result<()> {
    for (e, col) in c.iter() {
        g.edge(e)?;
        if !p.contains(col) {
            return Err(Error::ColourOutOfPalette { colour: col, palette: p.size() });
        }
    }
    match find_conflict(g, c) {
        Some((e, f)) => Err(Error::Improper(e, f)),
        None => Ok(()),
    }
}

/// Every edge coloured and every colour drawn from the edge's list.
pub fn respects_lists(g: &MultiGraph, c: &PartialEdgeColouring, l: &ListAssignment) -> bool {
    g.edge_ids().all(|e| match (c.get(e), l.get(e)) {
        (Some(col), Some(list)) => list.contains(col),
        _ => false,
    })
}

/// Number of precoloured edges adjacent to the uncoloured edge `e`.
pub fn precoloured_degree_edge(g: &MultiGraph, s: &EdgeSet, e: EdgeId) -> Result<usize> {
    let p = g.position(e).ok_or(Error::UnknownEdge(e))?;
    if s.contains(e) {
        return Err(Error::Input(format!("edge {e} is precoloured")));
    }
    Ok(g.adjacent_positions(p).into_iter().filter(|&q| s.contains(g.edges()[q].id)).count())
}

/// Number of precoloured edges incident with `v`.
pub fn precoloured_degree_vertex(g: &MultiGraph, s: &EdgeSet, v: usize) -> usize {
    g.incident_edges(v).filter(|e| s.contains(e.id)).count()
}

pub fn max_precoloured_degree_vertex(g: &MultiGraph, s: &EdgeSet) -> usize {
    (0..g.vertex_count()).map(|v| precoloured_degree_vertex(g, s, v)).max().unwrap_or(0)
}

/// Deletes the precoloured edges and gives every remaining edge the palette
/// minus the colours on precoloured edges adjacent to it in `g`.
pub fn reduce_to_lists(
    g: &MultiGraph,
    c: &PartialEdgeColouring,
    p: Palette,
) -> Result<(MultiGraph, ListAssignment)> {
    validate_precolouring(g, c, p)?;
    let reduced = g.without(&c.domain());
    let used: Vec<ColourSet> = (0..g.vertex_count()).map(|v| c.colours_at(g, v)).collect();
    let lists = reduced
        .edges()
        .iter()
        .map(|e| (e.id, p.colours().difference(used[e.u].union(used[e.v]))))
        .collect();
    Ok((reduced, ListAssignment(lists)))
}
