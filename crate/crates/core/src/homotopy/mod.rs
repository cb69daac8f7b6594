//! Discrete homotopy: contractibility, spheres, moves and traces.

pub mod contract;
pub mod moves;
pub mod reduce;
pub mod trace;
pub mod traces;

pub use contract::{is_contractible, is_contractible_subgraph, sphere_dimension, Oracle};
pub use moves::{apply_move, Certificate, EdgeCertificate, Move};
pub use reduce::{homotopy_reduce, legal_moves, Budget, Reduction, Verdict};
pub use trace::{HomotopyTrace, Replay, Step, TraceBuilder};
pub use traces::{barycentric_trace, product_extension_trace, psi_to_phi_trace, BarycentricTrace};
