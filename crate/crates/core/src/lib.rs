//! Quandle families and their associated quandles, with colouring invariants of
//! links, spatial graphs and handlebody-links.

pub mod algebra;
pub mod colour;
pub mod diagram;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod invariants;
pub mod io;
pub mod moves;
pub mod report;

pub use algebra::{GroupTable, OperationTable};
pub use diagram::Diagram;
pub use error::{Error, Result};
pub use family::SystemData;
pub use report::AxiomReport;
