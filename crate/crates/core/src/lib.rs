//! Graph decomposition and coloring toolkit.
//!
//! The centerpiece is a ball-carving routine that splits any graph into
//! connected parts of bounded radius plus a separator whose size obeys an
//! exact power inequality, and the recursive coloring that decomposition
//! induces. Around it: exact chromatic-number and bounded-palette solvers,
//! exact-rational calculators for the associated combinatorial bounds,
//! deterministic generators for the standard test families, and a
//! brute-force enumeration oracle for micro-scale ground truth.
//!
//! Every type is immutable after construction and every operation is a pure
//! function of its inputs, so the whole crate is safe to use from multiple
//! threads without synchronization.

pub mod bounds;
pub mod chromatic;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod oracle;

pub use chromatic::Coloring;
pub use decomposition::Decomposition;
pub use graph::{Graph, SubgraphView, VertexSet};
