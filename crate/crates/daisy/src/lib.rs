//! Combinatorics of daisy graphs: the intersection graphs of generic
//! surfaces in 3-manifolds.
//!
//! A *daisy graph* is a multigraph whose vertices have degree exactly 6
//! ("triple" vertices, where three sheets of a surface cross) or degree 1
//! ("branch" vertices, plus the terminal variant called *DB*), together
//! with a count of free double circles and, at every triple vertex, a
//! division of the six half-edges into three *consecutive pairs*. An
//! *arrowed* daisy graph additionally selects one preferred half-edge in
//! every consecutive pair, and an *ordered* daisy graph fixes a cyclic
//! order of the three preferred half-edges at each triple vertex.
//!
//! The toolkit answers the questions that make these graphs useful:
//!
//! * [`grading`] — does an arrowed daisy graph admit an integer grading,
//!   and if so which one? Decided in linear time with a certificate
//!   either way.
//! * [`arcs`] — the decomposition of a daisy graph into double arcs and
//!   the short (0/1) grading lift built from arc parities.
//! * [`realize`] — which kinds of 3-manifolds admit a generic surface
//!   realizing the graph, as a four-way decision table.
//! * [`oracle`] — brute-force gradability search, exhaustive small-instance
//!   enumeration, and seeded random instances, used to cross-check the
//!   fast algorithms.
//! * [`model`] — the value types and structural validation.
//! * [`textio`] — a line-oriented text format and Graphviz export.
//! * [`cli`] — the `daisy` command-line front end over all of the above.
//!
//! The `examples/` directory of this crate is the guided tour; each file
//! is a runnable walk-through of one capability, e.g.
//!
//! ```text
//! cargo run --example grade_basics
//! cargo run --example double_arcs
//! cargo run --example realizability
//! ```

pub mod arcs;
pub mod cli;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod grading;
pub mod model;
pub mod oracle;
pub mod realize;
pub mod textio;

pub use model::{
    ArrowedDaisyGraph, DaisyGraph, EdgeId, HalfEdgeRef, HalfInt, OrderedDaisyGraph, Pair, Path,
    Slot, VertexId, VertexKind,
};
