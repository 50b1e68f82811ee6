//! Exact machinery for the combinatorial formula for rational Pontrjagin classes of
//! triangulated manifolds: oriented matroids, twisted simplicial (co)homology, the
//! associated matroid complexes over a triangulation, and the Chern cocycle of a
//! simplicial circle bundle.

pub mod assoc;
pub mod chern;
pub mod error;
pub mod linalg;
pub mod matroid;
pub mod topology;

pub use error::{Error, Result};
