//! Link, spatial-graph and handlebody-link diagrams.

mod edges;
mod model;
mod parse;

pub use edges::{compute_edges, delete_edges, reverse_arcs, reverse_edge, Edge};
pub use model::{serialize_diagram, validate_diagram, Crossing, Diagram, Direction, End, Sign, Slot, Vertex};
pub use parse::parse_diagram;
