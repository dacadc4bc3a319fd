//! Plane graphs: rotation systems, reducible configurations and the
//! discharging audit.
pub mod discharge;
pub mod generate;
pub mod reduce;
pub mod rotation;

pub use discharge::{audit_discharge, AuditOptions, AuditReport, ChargeLedger, Reading, Variant, Violation};
pub use generate::PlaneGraph;
pub use reduce::{colour_even_cycle_lists, extend_planar, find_reducible, PlanarMode, ReducibleConfig};
pub use rotation::{trace_faces, Face, FaceSet, RotationSystem};
