//! Automorphism groups of finite (di)graphs and the regularity checks built
//! on them.
//!
//! The engine refines vertex colourings using arc invariants (triangles
//! through an edge, or two-paths and bigons for digraphs), then
//! individualizes vertices to build a stabilizer chain. For Cayley graphs
//! the left translations are supplied up front, so only the stabilizer of
//! the identity needs searching.

mod graph;
mod rigidity;
mod search;
mod verify;

pub use graph::{Graph, MAX_VERTICES};
pub use rigidity::{
    dicyclic_map, inverse_map, is_orientation_witness, orientation_rigidity_check, RigidityReport, RIGIDITY_NODE_BUDGET,
};
pub use search::{automorphism_group, brute_force_automorphisms, stabilizer_witness, AutomorphismGroup};
pub use verify::{
    colour_preserving_check, is_regular, translations, verify, verify_drr, verify_grr, verify_orr, ColourReport,
    RegularityReport,
};
