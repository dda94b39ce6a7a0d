//! Acyclic edge coloring of chordless graphs.
//!
//! A graph is *chordless* when no cycle has a chord. Every such graph gets
//! an acyclic edge coloring with as many colors as its maximum degree,
//! except a cycle, which needs three. [`coloring::color_graph`] finds one.
//!
//! ```
//! use chordless::coloring::color_graph;
//! use chordless::verify::verify_acyclic;
//! use chordless::Graph;
//!
//! let g = Graph::from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])?;
//! let c = color_graph(&g)?;
//! assert_eq!(c.palette(), 3);
//! verify_acyclic(&g, &c)?;
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! Modules, roughly in dependency order:
//!
//! - [`graph`]: immutable simple graphs and the primitives the rest needs.
//! - [`structure`]: recognizing chordless and 2-sparse graphs.
//! - [`decomposition`]: 2-cutsets, blocks, and the split search.
//! - [`coloring`]: the coloring engine and its single-edge steps.
//! - [`verify`] and [`oracle`]: independent checks and exhaustive search.
//! - [`generate`] and [`format`]: random inputs and text files.

pub mod coloring;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod structure;
pub mod verify;

#[cfg(test)]
mod fixtures;

pub use coloring::{color_graph, Color, PartialEdgeColoring};
pub use error::{
    ColoringError, DecompositionError, FormatError, GraphError, StructureError, VerifyError,
};
pub use graph::{Edge, Graph, Vertex, VertexSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub struct Graphs;
    #[doc = include_str!("../../../book/src/chordless.md")]
    pub struct Chordless;
    #[doc = include_str!("../../../book/src/splits.md")]
    pub struct Splits;
    #[doc = include_str!("../../../book/src/coloring.md")]
    pub struct Coloring;
    #[doc = include_str!("../../../book/src/verification.md")]
    pub struct Verification;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
