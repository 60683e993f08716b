//! Exact computations on cubic graphs and semi-graphs: 3-edge-colouring,
//! perfect-matching enumeration, the uncolourability measures (resistance,
//! oddness, colouring defect), gadget constructions and their compositions,
//! plus mechanical verification suites with machine-checkable certificates.
//!
//! Semi-graphs extend graphs with *semi-edges*: edges attached to a single
//! vertex. They are the glue of the gadget constructions in this crate; all
//! solvers treat them as first-class colourable/matchable elements.

pub mod colouring;
pub mod defect;
pub mod error;
pub mod factors;
pub mod gadgets;
pub mod graph6;
pub mod invariants;
pub mod measure;
pub mod semigraph;
pub mod sgf;
pub mod verify;

pub use error::{GraphError, Result};
pub use measure::{Budget, BudgetMeter, MeasureResult, SearchStatus};
pub use semigraph::{Element, JoinTarget, PortLabel, SemiGraph, SemiGraphBuilder, Vertex};
