//! Exact list-edge-colouring search, extension and avoidance, chromatic
//! index, and a constructive Vizing colouring.

mod search;
mod vizing;

use serde::{Deserialize, Serialize};

use crate::colouring::PartialEdgeColouring;

pub use search::{avoid, chromatic_index, extend, extend_with, solve_list, solve_list_with, SolverConfig};
pub use vizing::vizing_colour;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Solved,
    Unsolvable,
    /// The node budget ran out before the search finished.
    Budget,
}

/// Which engine produced an outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Exact,
    Kernel,
    Gallai,
    Reduction,
    ExactFallback,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
}

impl SearchStats {
    pub fn absorb(&mut self, o: SearchStats) {
        self.nodes += o.nodes;
        self.max_depth = self.max_depth.max(o.max_depth);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub status: Status,
    /// Total on the instance when solved, empty otherwise.
    pub colouring: PartialEdgeColouring,
    pub stats: SearchStats,
    pub method: Method,
}

impl SolveOutcome {
    pub fn is_solved(&self) -> bool {
        self.status == Status::Solved
    }
}
