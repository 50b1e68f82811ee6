//! The complexes `Y` and `Z` of combinatorial tangent data over a triangulated manifold `X`.

mod assemble;
mod udelta;
mod vertex;

pub use assemble::{assemble, assemble_y, assemble_z, AssemblyOptions, Associated, AssociatedJson, YComplex, ZComplex};
pub use udelta::{
    build_local_y, build_u_delta, build_u_delta_seeded, glue_map, LocalY, UDelta, DEFAULT_SAMPLES, DEFAULT_SEED,
};
pub use vertex::{
    validate_diagram, validate_tangent, validate_y_diagram, validate_y_vertex, validate_z_vertex, ValidationReport,
    VertexJson, YVertex, ZVertex,
};
