//! Extending precoloured edge-colourings of multigraphs.

pub mod colouring;
pub mod error;
pub mod gallai;
pub mod graph;
pub mod instances;
pub mod io;
pub mod kernel;
pub mod planar;
pub mod scalar;
pub mod solver;

pub use colouring::{Colour, ColourSet, ListAssignment, Palette, PartialEdgeColouring};
pub use error::{Error, Result};
pub use graph::{DegreeStats, Distance, Edge, EdgeId, EdgeSet, MultiGraph};
pub use scalar::Scalar;
pub use solver::{Method, SearchStats, SolveOutcome, Status};

/// Exact charge used by the discharging audit.
pub type Charge = num_rational::Rational64;
pub type ExactLedger = planar::ChargeLedger<Charge>;
pub type FloatLedger = planar::ChargeLedger<f64>;
pub type ExactAudit = planar::AuditReport<Charge>;
