use thiserror::Error;

use crate::graph::EdgeId;

/// Errors raised at the library boundary.
///
/// `Input` covers every precondition violation (malformed files, improper
/// precolourings, hypotheses of an extender not met). `Internal` marks a
/// broken guarantee: an extender whose theorem-backed contract failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("precolouring is not proper: edges {0} and {1} are adjacent and share a colour")]
    Improper(EdgeId, EdgeId),
    #[error("colour {colour} outside palette [1..={palette}]")]
    ColourOutOfPalette { colour: u32, palette: u32 },
    #[error("palette size {0} unsupported (must be 1..=63)")]
    PaletteSize(u32),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("guarantee violated: {0}")]
    Internal(String),
    #[error("malformed file: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
