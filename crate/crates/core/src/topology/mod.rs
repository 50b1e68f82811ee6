//! Simplicial complexes, rank-one local systems, twisted (co)chains with cup, cap and
//! pushforward, homology, fundamental classes and barycentric subdivision.
//!
//! Every sign convention is stated once, in the documentation of [`chain`].

pub mod chain;
mod complex;
mod homology;
mod io;
mod local;
mod orient;
pub mod standard;
mod subdivision;

pub use chain::{
    boundary, cap, coboundary, cup, cup_power, pullback_cochain, pushforward, Chain, ChainKind, Cochain, CochainKind,
    Graded,
};
pub use complex::{is_face, numbered_labels, remove, ComplexJson, Simplex, SimplicialComplex};
pub use homology::{boundary_matrix, homology, homology_groups, is_cycle, is_homologous, HomologyReport};
pub use io::{ChainJson, SystemJson, TermJson, EDGE_SEPARATOR};
pub use local::{permutation_sort, LocalSystem, SimplicialMap};
pub use orient::{fundamental_class, orientation_system};
pub use subdivision::{barycenter_label, barycentric_subdivision, DualCellStructure};
