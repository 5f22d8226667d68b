//! Multiplicative Zagreb indices of trees.
//!
//! * [`graph_core`]: trees, degree sequences, graph6 and edge-list I/O.
//! * [`indices`]: Π1, Π2 (vertex and edge forms), M1 and M2 in exact
//!   arithmetic.
//! * [`extremal`]: closed-form extremal sequences and bounds for trees with
//!   `k` vertices of maximum degree, plus a deterministic realization.
//! * [`oracle`]: exhaustive enumeration of free trees and the brute-force
//!   check of every bound.
//! * [`transform`]: the edge-rotation moves and their exact index ratios.

pub mod extremal;
pub mod graph_core;
pub mod indices;
pub mod oracle;
pub mod transform;

pub use extremal::{extremal_spec, is_admissible, realize, ClassParams, ExtremalSpec, Goal};
pub use graph_core::{degree_sequence_of, max_degree_count, DegreeSequence, Tree};
pub use indices::{Index, IndexValue};
